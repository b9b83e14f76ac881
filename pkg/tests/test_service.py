import warnings

import numpy as np
import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from phbal.service.app import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app(), raise_server_exceptions=False) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_get_example(client):
    resp = client.get("/examples/msd")
    assert resp.status_code == 200
    data = resp.json()
    assert data["name"] == "msd" and data["n"] == 10 and data["m"] == 1
    assert data["system"]["kind"] == "ph"
    assert data["spectral_abscissa"] < 0


def test_get_example_unknown(client):
    resp = client.get("/examples/bogus")
    assert resp.status_code == 404
    assert resp.json()["error"] == "NotFound"


def test_reduce_gen_ph(client):
    resp = client.post("/reduce", json={"example": "msd", "pipeline": "gen-ph", "k": 6})
    assert resp.status_code == 200
    data = resp.json()
    assert data["k"] == 6
    assert data["bound"] <= 2.27
    assert data["flags"]["ph_preserved"]
    assert data["reduced"]["kind"] == "ph"
    assert len(data["lam"]) == 10


def test_reduce_with_inline_system(client):
    payload = {
        "pipeline": "gen",
        "k": 1,
        "system": {"kind": "lti", "matrices": {
            "A": [[-1.0, 0.0], [0.0, -2.0]],
            "B": [[1.0], [1.0]],
            "C": [[1.0, 1.0]],
        }},
    }
    resp = client.post("/reduce", json=payload)
    assert resp.status_code == 200
    data = resp.json()
    assert data["reduced_lti"]["kind"] == "lti"
    assert len(data["reduced_lti"]["matrices"]["A"]) == 1


def test_reduce_rlc_pairs_circuit(client):
    resp = client.post("/reduce", json={
        "example": "rlc", "pipeline": "ext-ph", "pairs": 2,
        "delta_c": 0.11, "beta": 5e8, "gamma_c": "appendix", "gamma_o": "zero",
    })
    assert resp.status_code == 200
    data = resp.json()
    assert data["k"] == 6
    assert data["circuit"] is not None
    assert len(data["circuit"]["capacitances"]) == 3
    assert np.all(np.asarray(data["circuit"]["inductances"]) > 0)


def test_reduce_examples_default_gamma_presets(client):
    # omitting gamma on a built-in example applies its published presets
    explicit = client.post("/reduce", json={
        "example": "msd", "pipeline": "ext-ph", "k": 6,
        "alpha": 4.8021e7, "beta": 4.8021e7, "gamma_c": "appendix",
    }).json()
    implicit = client.post("/reduce", json={
        "example": "msd", "pipeline": "ext-ph", "k": 6,
        "alpha": 4.8021e7, "beta": 4.8021e7,
    }).json()
    assert implicit["lam"] == pytest.approx(explicit["lam"], rel=1e-12)
    assert explicit["bound"] <= 1.73


def test_reduce_infeasible_maps_422(client):
    resp = client.post("/reduce", json={
        "example": "msd", "pipeline": "gen", "k": 6, "delta": 1.0})
    assert resp.status_code == 422
    assert resp.json()["error"] == "ConditionFailed"


def test_reduce_bad_request_maps_400(client):
    # k and pairs together is a usage error
    resp = client.post("/reduce", json={
        "example": "msd", "pipeline": "gen-ph", "k": 2, "pairs": 1})
    assert resp.status_code == 400
    # appendix preset without a built-in example
    resp = client.post("/reduce", json={
        "pipeline": "ext", "k": 1, "gamma_c": "appendix",
        "system": {"kind": "lti", "matrices": {
            "A": [[-1.0]], "B": [[1.0]], "C": [[1.0]]}},
    })
    assert resp.status_code == 400


def test_reduce_validation_maps_422(client):
    # both system and example violates the request model
    resp = client.post("/reduce", json={
        "example": "msd", "pipeline": "gen", "k": 2,
        "system": {"kind": "lti", "matrices": {
            "A": [[-1.0]], "B": [[1.0]], "C": [[1.0]]}},
    })
    assert resp.status_code == 422


def test_reduce_hinf_and_simulate(client):
    resp = client.post("/reduce", json={
        "example": "msd", "pipeline": "gen-ph", "k": 6, "hinf": True,
        "simulate": {"signal": "step", "horizon": 0.05, "dt": 1e-3},
    })
    assert resp.status_code == 200
    data = resp.json()
    assert data["hinf"] is not None
    assert data["hinf"] <= data["bound"] + 1e-6 * max(data["bound"], 1.0)
    traj = data["trajectory"]
    assert traj is not None
    assert len(traj["times"]) == len(traj["outputs"]) == len(traj["reduced_outputs"])
