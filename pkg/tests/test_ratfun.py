import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from notchquad.errors import EvalAtPole, InvalidInput, NotProper, PoleOnContour, PoleOnSegment, PoleOnSemiaxis
from notchquad.ratfun import (
    INF,
    Pole,
    RationalFunction,
    SimplePartialFraction,
    reflect_axis,
    reflect_circle,
    segment_lift,
    semiaxis_lift,
    spf_to_rational,
)


def rf(poles, num=(1.0,)):
    return RationalFunction(list(num), poles)


def as_sorted(ps):
    return sorted(((complex(p.location), p.multiplicity) for p in ps.entries), key=lambda t: (t[0].real, t[0].imag))


def close_sets(got, want, tol=1e-14):
    return len(got) == len(want) and all(abs(a - b) <= tol and k == j for (a, k), (b, j) in zip(got, want))


def test_eval_simple_pole():
    assert rf([(1j, 1)]).eval(0) == pytest.approx(1j)


def test_eval_polynomial():
    assert RationalFunction([1, 2]).eval(1) == 3


def test_eval_matches_direct_division():
    z = cmath.exp(1j * math.pi / 3)
    assert abs(rf([(0.5, 1)]).eval(z) - 1 / (z - 0.5)) < 1e-14


def test_eval_at_pole_raises():
    with pytest.raises(EvalAtPole):
        rf([(0.5, 1)]).eval(0.5)


def test_degree_and_infinity():
    R = RationalFunction([0, 0, 1], [(2.0, 1)])
    assert R.degree == 2
    assert R.infinite_multiplicity == 1
    assert not R.is_proper


def test_distinct_poles_enforced():
    with pytest.raises(InvalidInput):
        rf([(1j, 1), (1j, 2)])


def test_zero_numerator_rejected():
    with pytest.raises(InvalidInput):
        RationalFunction([0, 0])


def test_bad_multiplicity():
    with pytest.raises(InvalidInput):
        Pole(1j, 0)


def test_infinity_marker():
    assert INF == INF
    assert INF != 0
    assert INF is type(INF)()


def test_reflect_circle_inside_kept():
    assert as_sorted(reflect_circle(rf([(0.5, 1)]), 1.0)) == [(0.5, 1)]


def test_reflect_circle_outside_reflected():
    assert as_sorted(reflect_circle(rf([(2.0, 1)]), 1.0)) == [(0.5, 1)]


def test_reflect_circle_infinite_pole_to_origin():
    ps = reflect_circle(RationalFunction([0, 0, 1], [(2.0, 1)]), 1.0)
    assert as_sorted(ps) == [(0j, 1), (0.5, 1)]
    assert ps.total == 2


def test_reflect_circle_on_contour():
    with pytest.raises(PoleOnContour):
        reflect_circle(rf([(1j, 1)]), 1.0)


def test_reflect_circle_idempotent_inside():
    R = rf([(0.3j, 2), (-0.2 + 0.1j, 1)])
    ps = reflect_circle(R, 1.0)
    assert {p.location for p in ps.entries} == {p.location for p in R.poles}


@pytest.mark.parametrize("pole", [1j, -1j])
def test_reflect_axis_single(pole):
    assert as_sorted(reflect_axis(rf([(pole, 1)]))) == [(1j, 1)]


def test_reflect_axis_conjugate_pair_merges():
    assert as_sorted(reflect_axis(rf([(1j, 1), (-1j, 1)]))) == [(1j, 2)]


def test_reflect_axis_not_proper():
    with pytest.raises(NotProper):
        reflect_axis(RationalFunction([0, 1], [(1j, 1)]))


def test_reflect_axis_real_pole():
    with pytest.raises(PoleOnContour):
        reflect_axis(rf([(2.0, 1)]))


def test_semiaxis_lift_negative_pole_merges():
    assert close_sets(as_sorted(semiaxis_lift(rf([(-1.0, 1)]))), [(1j, 2)])


def test_semiaxis_lift_generic():
    got = as_sorted(semiaxis_lift(rf([(4j, 1)])))
    want = sorted([(2 * cmath.exp(1j * math.pi / 4), 1), (-2 * cmath.exp(-1j * math.pi / 4), 1)],
                  key=lambda t: t[0].real)
    for (a, k), (b, j) in zip(got, want):
        assert abs(a - b) < 1e-14 and k == j


def test_semiaxis_lift_double_pole():
    ps = semiaxis_lift(rf([(-1.0, 2)]))
    assert close_sets(as_sorted(ps), [(1j, 4)])
    assert ps.total == 4


@pytest.mark.parametrize("pole", [0.0, 3.0, 2 + 1e-12j])
def test_semiaxis_lift_on_semiaxis(pole):
    with pytest.raises(PoleOnSemiaxis):
        semiaxis_lift(rf([(pole, 1)]))


def test_segment_lift_real_pole():
    ps = segment_lift(rf([(2.0, 1)]))
    (z, k), = as_sorted(ps)
    assert abs(z - (2 - math.sqrt(3))) < 1e-15 and k == 2


def test_segment_lift_polynomial():
    assert as_sorted(segment_lift(RationalFunction([1, 2, 3]))) == [(0j, 4)]


def test_segment_lift_complex_pole():
    ps = segment_lift(rf([(2j, 1)]))
    assert len(ps.entries) == 2 and ps.total == 2
    for p in ps.entries:
        w = p.location
        assert abs(w) < 1
        x = 0.5 * (w + 1 / w)
        assert abs(x - 2j) < 1e-13 or abs(x + 2j) < 1e-13


def test_segment_lift_on_segment():
    with pytest.raises(PoleOnSegment):
        segment_lift(rf([(0.3, 1)]))


def test_spf_to_rational_examples():
    z = np.array([0.3, -1.2 + 0.4j, 2.0])
    R = spf_to_rational(SimplePartialFraction((1j, -1j)))
    assert np.allclose(R(z), 2 * z / (z * z + 1), atol=1e-14)
    R = spf_to_rational(SimplePartialFraction((1j, 1j)))
    assert len(R.poles) == 1 and R.poles[0].multiplicity == 1
    assert np.allclose(R.numerator, [2])
    R = spf_to_rational(SimplePartialFraction((1j,)))
    assert np.allclose(R(z), 1 / (z - 1j))


def test_spf_side():
    assert SimplePartialFraction((1j, 2 + 1j)).side == 1
    assert SimplePartialFraction((-1j,)).side == -1
    assert SimplePartialFraction((1j, -1j)).side == 0


def test_json_round_trip():
    R = RationalFunction([1 + 2j, 0.5], [(0.3 + 0.1j, 2), (-2.0, 1)])
    assert RationalFunction.from_json(R.to_json()) == R


def test_json_malformed():
    with pytest.raises(InvalidInput):
        RationalFunction.from_json({"numerator": [[1, "x"]]})


pole_strategy = st.tuples(
    st.floats(-3, 3), st.floats(0.1, 3), st.sampled_from([-1, 1]), st.integers(1, 3)
)


@settings(max_examples=60, deadline=None)
@given(st.lists(pole_strategy, min_size=1, max_size=4, unique_by=lambda t: (round(t[0], 3), round(t[1], 3))),
       st.integers(0, 6))
def test_budgets(poles, extra):
    entries = [(complex(a, s * b), k) for a, b, s, k in poles]
    n = sum(k for _, k in entries)
    R = RationalFunction(np.ones(n), entries)
    assert reflect_axis(R).total == n
    assert semiaxis_lift(R).total == 2 * n
    assert segment_lift(R).total == 2 * n
    R2 = RationalFunction(np.ones(n + extra + 1), entries)
    r = 0.37
    if all(abs(abs(z) - r) > 1e-3 for z, _ in entries):
        assert reflect_circle(R2, r).total == R2.degree


def test_symmetrization_identity():
    R = RationalFunction([1, 2j, -0.5], [(0.4 + 0.2j, 2), (1.7 - 0.3j, 1)])
    r = 1.3
    rng = np.random.default_rng(1)
    zeta = r * np.exp(1j * rng.uniform(0, 2 * math.pi, 50))
    lhs = R(zeta) * np.conj(R(r * r / np.conj(zeta)))
    assert np.allclose(lhs, np.abs(R(zeta)) ** 2, rtol=1e-12, atol=0)
