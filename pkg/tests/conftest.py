import numpy as np
import pytest

from bellfacets import (
    SignFunction,
    classify,
    inequality_from_sign_function,
    two_setting_reduction,
)


@pytest.fixture(scope="session")
def census2():
    return classify(2)


@pytest.fixture(scope="session")
def census3():
    return classify(3)


@pytest.fixture(scope="session")
def chsh_sign():
    """-1 exactly when both observers' first variables are -1."""
    return SignFunction.from_function(2, lambda a, b, c, d: -1 if a == c == -1 else 1)


@pytest.fixture(scope="session")
def chsh_inequality(chsh_sign):
    return inequality_from_sign_function(chsh_sign)


def _mermin_coeffs():
    coeffs = np.zeros((3, 3, 3), dtype=np.int64)
    coeffs[0, 0, 0] = -32
    coeffs[1, 1, 0] = 32
    coeffs[1, 0, 1] = 32
    coeffs[0, 1, 1] = 32
    return coeffs


@pytest.fixture(scope="session")
def mermin_coeffs():
    return _mermin_coeffs()


@pytest.fixture(scope="session")
def mermin_inequality(mermin_coeffs):
    for ineq in two_setting_reduction(3):
        if (ineq.coeffs == mermin_coeffs).all():
            return ineq
    raise RuntimeError("two-setting reduction lost the three-observer parity facet")
