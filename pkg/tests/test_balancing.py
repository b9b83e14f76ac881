import numpy as np
import pytest

from oracles import random_spd
from phbal.balancing import (
    balance_pair,
    error_bound,
    fix_column_signs,
    transform,
    truncate,
    truncation_gaps,
)
from phbal.errors import BadOrder, NearSingularSpectrum, NotPD, Singular
from phbal.refdata import MSD_LAMBDA_QP_REF, MSD_LAMBDA_ST_REF
from phbal.sysmodel import LtiSystem


def test_balance_pair_identities():
    rng = np.random.default_rng(11)
    for n in (1, 2, 5, 8):
        go = random_spd(rng, n)
        gc = random_spd(rng, n)
        bal = balance_pair(go, gc)
        lam = np.diag(bal.lam)
        assert np.allclose(bal.w.T @ go @ bal.w, lam, atol=1e-8 * np.linalg.norm(go))
        assert np.allclose(bal.winv @ gc @ bal.winv.T, lam, atol=1e-8 * np.linalg.norm(gc))
        assert np.allclose(bal.w @ bal.winv, np.eye(n), atol=1e-8)
        assert np.all(np.diff(bal.lam) <= 1e-12)


def test_balance_pair_not_pd():
    with pytest.raises(NotPD):
        balance_pair(np.eye(2), -np.eye(2))
    with pytest.raises(NotPD):
        balance_pair(-np.eye(2), np.eye(2))


def test_balance_pair_near_singular():
    go = np.diag([1.0, 1e-30])
    gc = np.eye(2)
    with pytest.raises(NearSingularSpectrum):
        balance_pair(go, gc)


def test_fix_column_signs_deterministic():
    u = np.array([[0.6, -0.8], [-0.8, -0.6]])
    fixed = fix_column_signs(u)
    assert fixed[1, 0] > 0 and fixed[0, 1] > 0
    assert np.array_equal(fix_column_signs(fixed), fixed)


def test_transform_and_truncate(diag2_lti):
    w = np.array([[2.0, 0.0], [0.0, 0.5]])
    t = transform(diag2_lti, w)
    assert np.allclose(t.a, diag2_lti.a)  # diagonal A commutes with diagonal W
    assert np.allclose(t.b.ravel(), [0.5, 2.0])
    red = truncate(t, 1)
    assert red.n == 1
    with pytest.raises(BadOrder):
        truncate(t, 2)
    with pytest.raises(BadOrder):
        truncate(t, 0)


def test_transform_singular(diag2_lti):
    with pytest.raises(Singular):
        transform(diag2_lti, np.array([[1.0, 1.0], [1.0, 1.0]]))


def test_error_bound_published_values():
    assert error_bound(MSD_LAMBDA_QP_REF, 6).bound == pytest.approx(2.062, abs=1e-12)
    assert error_bound(MSD_LAMBDA_ST_REF, 6).bound == pytest.approx(1.572, abs=1e-12)
    cert = error_bound(MSD_LAMBDA_QP_REF, 6)
    assert np.array_equal(cert.truncated_sigmas, MSD_LAMBDA_QP_REF[6:])


def test_error_bound_validation():
    with pytest.raises(ValueError):
        error_bound(np.array([1.0, 2.0]), 1)
    with pytest.raises(BadOrder):
        error_bound(np.array([2.0, 1.0]), 3)
    assert error_bound(np.array([2.0, 1.0]), 2).bound == 0.0


def test_truncation_gaps():
    gaps = truncation_gaps(np.array([4.0, 2.0, 1.999, 0.5]))
    assert gaps[0] == (1, 2.0, True)
    assert gaps[1][2] is False  # tied cluster flagged uninformative
    # the published spectrum has a clear informative gap after the fifth
    # value, consistent with the published choice k = 6
    gaps_ref = truncation_gaps(MSD_LAMBDA_QP_REF)
    assert gaps_ref[4][1] > 1.8 and gaps_ref[4][2]
