import numpy as np
import pytest

from phbal.errors import (
    DimensionMismatch,
    DissipationIndefinite,
    HamiltonianNotPD,
    NotSkew,
    PhValidationError,
)
from phbal.sysmodel import (
    LtiSystem,
    ph_to_lti,
    ph_violations,
    stability,
    validate_ph,
)


def test_lti_shapes_and_props(diag2_lti):
    assert diag2_lti.n == 2 and diag2_lti.m == 1 and diag2_lti.q == 1


def test_lti_dimension_errors():
    with pytest.raises(DimensionMismatch):
        LtiSystem(a=[[1.0, 0.0]], b=[[1.0]], c=[[1.0]])
    with pytest.raises(DimensionMismatch):
        LtiSystem(a=[[-1.0]], b=[[1.0], [1.0]], c=[[1.0]])
    with pytest.raises(DimensionMismatch):
        LtiSystem(a=[[-1.0]], b=[[1.0]], c=[[1.0, 2.0]])


def test_validate_ph_canonicalizes(toy_ph):
    assert np.allclose(toy_ph.j, -toy_ph.j.T)
    assert np.allclose(toy_ph.r, toy_ph.r.T)
    assert toy_ph.skew_deviation == 0.0
    assert np.allclose(toy_ph.f, toy_ph.j - toy_ph.r)


def test_validate_ph_single_violations():
    eye = np.eye(2).tolist()
    with pytest.raises(NotSkew):
        validate_ph([[0.0, 1.0], [1.0, 0.0]], eye, eye, [[1.0], [0.0]])
    with pytest.raises(DissipationIndefinite):
        validate_ph([[0.0, 1.0], [-1.0, 0.0]], (-np.eye(2)).tolist(), eye, [[1.0], [0.0]])
    with pytest.raises(HamiltonianNotPD):
        validate_ph([[0.0, 1.0], [-1.0, 0.0]], eye, (-np.eye(2)).tolist(), [[1.0], [0.0]])


def test_validate_ph_multiple_violations():
    with pytest.raises(PhValidationError) as exc:
        validate_ph([[0.0, 1.0], [1.0, 0.0]], (-np.eye(2)).tolist(),
                    (-np.eye(2)).tolist(), [[1.0], [0.0]])
    assert len(exc.value.violations) == 3


def test_ph_violations_accepts_valid(toy_ph):
    assert ph_violations(toy_ph.j, toy_ph.r, toy_ph.h, toy_ph.b) == []


def test_ph_to_lti(toy_ph):
    sys = ph_to_lti(toy_ph)
    assert np.allclose(sys.a, (toy_ph.j - toy_ph.r) @ toy_ph.h)
    assert np.allclose(sys.c, toy_ph.b.T @ toy_ph.h)


def test_examples_structure(mech, rlc):
    for ph in (mech, rlc):
        assert ph.n == 10 and ph.m == 1
        assert np.allclose(ph.j, -ph.j.T)
        assert np.linalg.eigvalsh(ph.r)[0] >= -1e-12
        assert np.linalg.eigvalsh(ph.h)[0] > 0
        assert np.count_nonzero(ph.b) == 1 and ph.b[5, 0] == 1.0
        rep = stability(ph_to_lti(ph))
        assert rep.is_stable


def test_rlc_values(rlc):
    assert rlc.h[0, 0] == pytest.approx(1.0 / 2.2e-3)
    assert rlc.h[5, 5] == pytest.approx(1.0 / 10e-3)
    assert rlc.r[0, 0] == pytest.approx(1.0 / 270.0)
    assert rlc.r[5, 5] == pytest.approx(4.7)
    assert rlc.j[0, 5] == 1.0 and rlc.j[0, 6] == -1.0


def test_mech_values(mech):
    assert mech.h[0, 0] == pytest.approx(4.0)          # wall spring
    assert mech.h[5, 5] == pytest.approx(1.0 / 1.5)    # first mass
    assert mech.r[6, 6] == pytest.approx(50.0)
