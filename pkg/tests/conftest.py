import numpy as np
import pytest

from phbal.sysmodel import LtiSystem, build_msd_example, build_rlc_example, validate_ph


@pytest.fixture(scope="session")
def mech():
    return build_msd_example()


@pytest.fixture(scope="session")
def rlc():
    return build_rlc_example()


@pytest.fixture(scope="session")
def scalar_lti():
    return LtiSystem(a=[[-1.0]], b=[[1.0]], c=[[1.0]])


@pytest.fixture(scope="session")
def diag2_lti():
    return LtiSystem(a=[[-1.0, 0.0], [0.0, -2.0]], b=[[1.0], [1.0]], c=[[1.0, 1.0]])


@pytest.fixture(scope="session")
def toy_ph():
    j = [[0.0, 1.0], [-1.0, 0.0]]
    r = [[0.5, 0.0], [0.0, 0.3]]
    h = [[2.0, 0.0], [0.0, 1.0]]
    b = [[1.0], [0.0]]
    return validate_ph(j, r, h, b)


@pytest.fixture(scope="session")
def scalar_ph():
    # A = (J - R) H = -1, B = 1, C = B^T H = 1
    return validate_ph([[0.0]], [[1.0]], [[1.0]], [[1.0]])
