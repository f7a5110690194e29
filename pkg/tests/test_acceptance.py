"""Acceptance criteria 1-11; one PASS/FAIL line per criterion is printed.

Run alone with ``python3 tests/test_acceptance.py`` or inside pytest.
"""

import sys

import pytest

from notchquad import suite

SEED = 0


@pytest.fixture(scope="module")
def quadrature_checks():
    return suite.quadrature_checks(SEED)


@pytest.fixture
def report(acceptance_log):
    def check(res):
        line = res.line()
        acceptance_log.append(line)
        assert res.passed, line
    return check


def test_criterion_01_quadrature_exactness(quadrature_checks, report):
    report(suite.criterion_1(quadrature_checks))


def test_criterion_02_phi_invariance(quadrature_checks, report):
    report(suite.criterion_2(quadrature_checks))


def test_criterion_03_known_values(report):
    report(suite.criterion_3())


def test_criterion_04_one_pole_fraction(report):
    report(suite.criterion_4())


def test_criterion_05_annulus_witness(report):
    report(suite.criterion_5())


def test_criterion_06_segment_polynomials(report):
    report(suite.criterion_6())


def test_criterion_07_spf_bounds(report):
    report(suite.criterion_7(SEED))


def test_criterion_08_mixed_spf_bound(report):
    report(suite.criterion_8(SEED))


def test_criterion_09_semiaxis_spf_bound(report):
    report(suite.criterion_9(SEED))


def test_criterion_10_constant_dominance(report):
    report(suite.criterion_10())


def test_criterion_11_prescribed_node(report):
    report(suite.criterion_11(SEED))


if __name__ == "__main__":
    results = suite.run_all(SEED)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
