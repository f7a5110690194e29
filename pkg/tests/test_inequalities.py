import math

import numpy as np
import pytest

from notchquad import inequalities as ineq
from notchquad import oracle
from notchquad.errors import BadGeometry, BadKind, BadParams, PolesOnBothSides, PolesOutsideBeam
from notchquad.ratfun import Pole, PoleSet, RationalFunction, SimplePartialFraction, spf_to_rational
from notchquad.suite import random_rational


def rf(poles, num=(1.0,)):
    return RationalFunction(list(num), poles)


@pytest.mark.parametrize("p,want", [(2, 1), (4, 2), (3, 2), (5, 3), (1, 1), (0.5, 1)])
def test_m_p(p, want):
    assert ineq.m_p(p) == want


def test_m_p_matches_set_definition():
    for k in range(1, 201):
        p = 0.1 * k
        members = [j for j in range(0, 200) if p / 2 <= j < 1 + p / 2]
        assert members == [ineq.m_p(p)]


def test_beta_exact_values():
    assert ineq.beta(1, 1) == pytest.approx(1, rel=1e-15)
    assert ineq.beta(2, 2) == pytest.approx(1 / 6, rel=1e-14)


@pytest.mark.parametrize("p", [2, 3, 4, 6])
def test_beta_against_integral(p):
    a = p / 2
    est = oracle.gauss_kronrod(lambda t: 2 * np.sin(t) ** (2 * a - 1) * np.cos(t) ** (2 * a - 1), 0, math.pi / 2, 1e-13)
    assert ineq.beta(a, a) == pytest.approx(est.value, rel=1e-10)


def test_y0_values():
    assert abs(ineq.y0(2) - math.pi) <= 1e-12
    assert abs(ineq.y0(4) - 0.5 * (4 * math.pi) ** (1 / 3)) <= 1e-12


def test_hilbert_norm_table():
    assert ineq.hilbert_norm(2) == pytest.approx(1)
    assert ineq.hilbert_norm(4) == pytest.approx(1 + math.sqrt(2))
    assert ineq.hilbert_norm(1.5) == pytest.approx(math.tan(math.pi / 3))


def test_pointwise_axis_equality_for_rho2():
    R = spf_to_rational(ineq.rho_p(2).function)
    rep = ineq.pointwise_bound("axis", R, 1, 0.0)
    assert rep.holds and rep.equality


def test_pointwise_circle_strict():
    rep = ineq.pointwise_bound("circle", rf([(0.5, 1)]), 1, math.pi)
    assert rep.holds and rep.lhs < rep.rhs * (1 - 1e-3)
    assert rep.lhs == pytest.approx(1 / 1.5 ** 2 / (1 + 0.75 / 1.5 ** 2))


def test_pointwise_segment_endpoint():
    rep = ineq.pointwise_bound("segment", RationalFunction([1.0, 2.0]), 1, 0.0)
    assert rep.lhs == pytest.approx(3) and rep.rhs == pytest.approx(3)


@pytest.mark.parametrize("domain", ["circle", "axis", "semiaxis", "segment"])
def test_pointwise_random(domain):
    rng = np.random.default_rng(11)
    for _ in range(125):
        inst = random_rational(rng, domain)
        if domain in ("circle", "segment"):
            pt = rng.uniform(0, 2 * math.pi)
        else:
            pt = rng.standard_cauchy()
        assert ineq.pointwise_bound(domain, inst.R, inst.m, pt, r=inst.r).holds


def test_constant_examples():
    c = ineq.nikolskii_constant("circle", 2, math.inf, n=2, delta=0.5, geometric=True)
    assert c == pytest.approx(math.sqrt(7 / (2 * math.pi)))
    assert ineq.segment_polynomial_constant(2, math.inf, 1) == pytest.approx(math.sqrt(3 / math.pi))
    assert c <= ineq.baranov_constant(2, math.inf, 2, 0.5)


def test_constant_other_families():
    assert ineq.nikolskii_constant("axis", 2, math.inf, n=3, delta=0.5, geometric=True) == pytest.approx(
        math.sqrt(3 / (0.5 * math.pi)))
    assert ineq.nikolskii_constant("semiaxis", 2, 4, n=1, delta=2, geometric=True) == pytest.approx(
        (2 / (2 * math.pi)) ** 0.25)
    assert ineq.nikolskii_constant("segment", 4, math.inf, n=1, delta=3, geometric=True) == pytest.approx(
        ((2 * 2 * 1 * 4 / 2 + 1) / math.pi) ** 0.25)
    assert ineq.laurent_constant(2, math.inf, 3, 2.0) == pytest.approx(math.sqrt(4 / (4 * math.pi)))
    assert ineq.trig_plus_constant(2, math.inf, 2) == pytest.approx(math.sqrt(6 / (2 * math.pi)))
    assert ineq.trig_constant(2, math.inf, 3) == pytest.approx(math.sqrt(7 / (2 * math.pi)))


@pytest.mark.parametrize("domain,delta", [("circle", 1.2), ("circle", 0.0), ("axis", -1), ("semiaxis", 0), ("segment", 0.9)])
def test_bad_geometry_parameter(domain, delta):
    with pytest.raises(BadGeometry):
        ineq.nikolskii_constant(domain, 2, math.inf, n=1, delta=delta, geometric=True)


def test_bad_geometry_pole_in_region():
    with pytest.raises(BadGeometry):
        ineq.nikolskii_constant("circle", 2, math.inf, R=rf([(0.8, 1)]), delta=0.5, geometric=True)
    with pytest.raises(BadGeometry):
        ineq.nikolskii_constant("axis", 2, math.inf, R=rf([(0.2j, 1)]), delta=0.5, geometric=True)
    with pytest.raises(BadGeometry):
        ineq.nikolskii_constant("segment", 2, math.inf, R=rf([(1.1, 1)]), delta=2, geometric=True)


def test_q_must_exceed_p():
    with pytest.raises(BadParams):
        ineq.nikolskii_constant("circle", 4, 2, mu_max=1.0)


def test_geometric_dominates_mu_exact():
    R = rf([(0.3, 2), (3.0, 1)])
    exact = ineq.nikolskii_constant("circle", 2, math.inf, R=R)
    geo = ineq.nikolskii_constant("circle", 2, math.inf, R=R, delta=0.34, geometric=True)
    assert exact <= geo


@pytest.mark.parametrize("domain", ["circle", "axis", "semiaxis", "segment"])
@pytest.mark.parametrize("p,q", [(2, math.inf), (4, math.inf), (2, 4), (3, 5)])
def test_nikolskii_bound_random(domain, p, q):
    rng = np.random.default_rng(["circle", "axis", "semiaxis", "segment"].index(domain) * 10 + int(p))
    for _ in range(6):
        inst = random_rational(rng, domain)
        assert ineq.nikolskii_bound(domain, inst.R, p, q, r=inst.r).holds


def test_norm_paths_recorded():
    rep = ineq.nikolskii_bound("axis", rf([(1j, 1), (2 - 1j, 1)]), 3, math.inf)
    assert rep.paths == {"q": "max", "p": "oracle"}
    rep = ineq.nikolskii_bound("axis", rf([(1j, 1), (2 - 1j, 1)]), 2, 4)
    assert rep.paths == {"q": "quadrature", "p": "quadrature"}


def test_alternative_equality_case():
    alt = ineq.alternative_check("axis", rf([(1j, 1)]), 1, 1, 0.0)
    assert not alt.first and alt.second


def test_alternative_axis_max_form():
    R = rf([(0.5 + 1j, 1), (-1 - 0.4j, 2)])
    norm = ineq.lp_norm("axis", R, 2)[0] ** 2
    W = ineq.weight_function("axis", R)
    for x in np.random.default_rng(2).standard_cauchy(100):
        assert abs(R.eval(x)) <= max(W.mu(x), norm / math.pi) * (1 + 1e-10)
        assert ineq.alternative_check("axis", R, 1, 1, x).any


def test_alternative_circle_max_form():
    R = rf([(0.4j, 1), (1.8, 2)], num=(1, 0.3, 0.2))
    r = 1.2
    norm = ineq.lp_norm("circle", R, 2, r=r)[0] ** 2
    W = ineq.weight_function("circle", R, r)
    for th in np.random.default_rng(3).uniform(0, 2 * math.pi, 100):
        w = (W.mu_theta(th) + 1) / (2 * math.pi * r)
        assert abs(R.eval(r * np.exp(1j * th))) <= max(w, norm) * (1 + 1e-10)
        for d in (0.5, 1, 1.7):
            assert ineq.alternative_check("circle", R, 2, d, th, r=r).any


@pytest.mark.parametrize("domain", ["semiaxis", "segment"])
def test_alternative_other_domains(domain):
    rng = np.random.default_rng(4)
    for _ in range(20):
        inst = random_rational(rng, domain)
        pt = rng.uniform(0, 3)
        assert ineq.alternative_check(domain, inst.R, inst.m, rng.uniform(0, 2 * inst.m), pt).any


def test_spf_d_witnesses():
    up, low = ineq.spf_bounds(ineq.rho_p(2).function, 2)
    assert up.lhs == pytest.approx(2, rel=1e-8) and up.equality
    up, _ = ineq.spf_bounds(ineq.rho_p(4).function, 4)
    assert up.lhs == pytest.approx(4, rel=1e-8)


def test_spf_random_three_poles():
    rho = SimplePartialFraction((1j, 0.5 + 2j, -1 + 0.3j))
    up, low = ineq.spf_bounds(rho, 2)
    assert low.lhs == pytest.approx(1 / 3)
    assert up.holds and low.holds


def test_spf_both_sides():
    with pytest.raises(PolesOnBothSides):
        ineq.spf_bounds(SimplePartialFraction((1j, -1j)), 2)


def test_spf_lower_bound_below_two():
    rho = SimplePartialFraction((-1j, 1 - 2j))
    _, low = ineq.spf_bounds(rho, 1.5)
    assert low.lhs == pytest.approx(math.cos(math.pi / 4) / 2)
    assert low.holds


def test_spf_mixed_single_pole():
    rep = ineq.spf_mixed_bound(SimplePartialFraction((1j,)), 2, math.inf)
    assert rep.lhs == pytest.approx(1, rel=1e-10)
    assert rep.rhs == pytest.approx(2, rel=1e-10)
    assert rep.holds


def test_spf_mixed_two_sided():
    rho = SimplePartialFraction((1j, -0.5j, 2 + 1j, -1 - 0.2j))
    assert ineq.spf_mixed_bound(rho, 2, 4).holds


def test_spf_semiaxis_single_pole():
    a, b = ineq.spf_semiaxis_bound(SimplePartialFraction((-1.0,)), 0.1, 1)
    assert a.lhs == pytest.approx(1) and a.rhs == pytest.approx(1)
    assert b.rhs == pytest.approx(1 / math.cos(0.1) ** 2, rel=1e-10)
    assert a.holds and b.holds


def test_spf_semiaxis_scaling():
    rho = SimplePartialFraction((-1 + 0.2j, -3 - 0.5j))
    a1, b1 = ineq.spf_semiaxis_bound(rho, 0.5, 1)
    a2, b2 = ineq.spf_semiaxis_bound(rho.scaled(2), 0.5, 1)
    e = 1.5
    assert a2.rhs == pytest.approx(a1.rhs / 2 ** e, rel=1e-12)
    assert b2.rhs == pytest.approx(b1.rhs / 2 ** e, rel=1e-9)
    assert a2.holds and b2.holds


def test_spf_semiaxis_repeated_pole():
    a, b = ineq.spf_semiaxis_bound(SimplePartialFraction((-1.0, -1.0)), 0.3, 1)
    assert a.rhs == pytest.approx(2 ** 1.5)
    assert a.holds and b.holds


def test_spf_semiaxis_outside_beam():
    with pytest.raises(PolesOutsideBeam):
        ineq.spf_semiaxis_bound(SimplePartialFraction((1j,)), 0.5, 1)


def test_sigma_values():
    s, s1, s2 = ineq.sigma_comparison(2, 3)
    assert s == pytest.approx(2)
    assert s2 == pytest.approx(2 / math.pi)
    assert s1 == pytest.approx(1 / (6 * math.pi))
    for p in (2, 3, 5, 10, 100):
        assert ineq.sigma_comparison(p, 1)[2] < 1.1
    assert ineq.sigma_comparison(1.5, 1)[1:] == (None, None)


def test_D_between_sigmas():
    rho = SimplePartialFraction((1j, 0.4 + 0.7j, -2 + 1.5j))
    for p in (2, 4):
        _, s1, s2 = ineq.sigma_comparison(p, rho.degree)
        assert s1 <= ineq.spf_D(rho, p) <= s2


def test_rho_p_witness():
    w = ineq.extremal_witness("rho_p", p=2)
    assert w.function.poles == (1j * math.pi,)
    w = ineq.extremal_witness("rho_p", p=4)
    assert w.function.poles[0].imag == pytest.approx(0.5 * (4 * math.pi) ** (1 / 3), rel=1e-14)


def test_segment_jacobi_witness():
    P = ineq.extremal_witness("segment_jacobi", n=1).function
    assert np.allclose(P.numerator, [1, 2])
    t = np.linspace(0.1, 3.0, 7)
    P3 = ineq.segment_jacobi(3).function
    assert np.allclose(P3(np.cos(t)), np.sin(3.5 * t) / np.sin(t / 2))


def test_trig_star_witness():
    T = ineq.trig_star(2).function
    t = np.linspace(0, 6, 9)
    want = 1 + 2 * np.cos(t) + 2 * np.cos(2 * t) + np.exp(3j * t)
    assert np.allclose(T(np.exp(1j * t)), want)


def test_witness_errors():
    with pytest.raises(BadKind):
        ineq.extremal_witness("nope")
    with pytest.raises(BadParams):
        ineq.extremal_witness("rho_p", p=1)
    with pytest.raises(BadParams):
        ineq.extremal_witness("circle_delta_star", n=2, delta=1.5)
    with pytest.raises(BadParams):
        ineq.extremal_witness("segment_jacobi", m=3)


def test_circle_star_quotient_matches_rational():
    ps = PoleSet((Pole(0.4 + 0.3j, 1), Pole(-0.5j, 2)), "disc", 1.0)
    w = ineq.circle_star(ps)
    z1 = w.params["zeta1"]
    pts = np.concatenate((np.exp(1j * np.linspace(0, 6, 13)), [z1 + 1e-8, z1 * np.exp(1e-7j)]))
    direct = ineq.circle_star_quotient(ps, w.params["phi"], z1, pts)
    assert np.allclose(direct, w.function(pts), rtol=1e-6)
    # the notch zero is removed, other notches are zeros
    assert abs(w.function.eval(z1)) > 1


def test_circle_star_is_extremal():
    ps = PoleSet((Pole(0.2 + 0.6j, 2), Pole(-0.7, 1)), "disc", 1.3)
    w = ineq.circle_star(ps)
    R = w.function
    sup = ineq.sup_norm("circle", R, [p.location for p in R.poles], 1.3)[1]
    l2 = ineq.lp_norm("circle", R, 2, r=1.3)[0]
    mu = ineq.BlaschkeCircle(ps).mu_sup()[1]
    assert l2 ** 2 == pytest.approx(2 * math.pi * 1.3 * sup ** 2 / (mu + 1), rel=1e-8)


def test_axis_star_phi_zero_rejected():
    ps = PoleSet((Pole(1j, 1),), "upper")
    with pytest.raises(BadParams):
        ineq.axis_star(ps, 0.0)


def test_sharpness_suite_all_equal():
    reports = ineq.sharpness_suite()
    assert len(reports) >= 15
    bad = [r.name for r in reports if not r.equality]
    assert not bad


def test_bound_report_json():
    rep = ineq.BoundReport("x", 1.0, 2.0, {"p": "oracle"})
    back = ineq.BoundReport.from_json(rep.to_json())
    assert back == rep
    assert rep.to_json()["ratio"] == 0.5 and rep.sharp_gap == 1.0
