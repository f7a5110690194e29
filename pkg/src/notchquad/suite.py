"""Randomised verification suites behind the acceptance criteria.

Every instance draws from its own child of a ``numpy.random.SeedSequence``,
so results do not depend on the order (or process) in which instances run.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import inequalities as ineq
from . import oracle
from .notches import notches
from .quadrature import integrate, norm_2m
from .ratfun import Pole, PoleSet, RationalFunction, SimplePartialFraction

DOMAINS = ("circle", "axis", "semiaxis", "segment")
MIN_DIST = 0.05
QUAD_TOL = 1e-8
SPREAD_TOL = 1e-9


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.name}: {self.summary()}"

    def summary(self) -> str:
        return ", ".join(f"{k}={_fmt(v)}" for k, v in self.detail.items() if not isinstance(v, (list, dict)))

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "passed": self.passed,
                "seconds": round(self.seconds, 3), "detail": self.detail}


def _fmt(v):
    return f"{v:.3g}" if isinstance(v, float) else str(v)


# random instances

def _multiplicities(rng, max_degree=6, max_mult=3):
    total = int(rng.integers(1, max_degree + 1))
    mults = []
    while sum(mults) < total:
        mults.append(int(min(rng.integers(1, max_mult + 1), total - sum(mults))))
    return mults


def _distinct(rng, draw, count, sep=0.05):
    pts = []
    while len(pts) < count:
        z = draw()
        if all(abs(z - w) > sep for w in pts):
            pts.append(z)
    return pts


def _random_pole(rng, domain, r=1.0):
    while True:
        if domain == "circle":
            rho = rng.uniform(0.0, r - MIN_DIST) if rng.random() < 0.5 else rng.uniform(r + MIN_DIST, 3 * r)
            return rho * np.exp(1j * rng.uniform(0, 2 * math.pi))
        if domain == "axis":
            z = complex(rng.uniform(-3, 3), rng.uniform(MIN_DIST, 3) * rng.choice((-1, 1)))
            return z
        z = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
        if domain == "semiaxis":
            d = abs(z) if z.real <= 0 else abs(z.imag)
        else:
            d = abs(z - min(max(z.real, -1.0), 1.0))
        if d >= MIN_DIST:
            return z


def _contour_sup(domain, R, r):
    if domain == "circle":
        z = r * np.exp(1j * np.linspace(0, 2 * math.pi, 4096, endpoint=False))
    elif domain == "axis":
        z = np.tan(np.linspace(-math.pi / 2, math.pi / 2, 4097)[1:-1])
    elif domain == "semiaxis":
        z = np.tan(np.linspace(0, math.pi / 2, 4097)[:-1])
    else:
        z = np.cos(np.linspace(0, math.pi, 4097))
    return float(np.max(np.abs(R(z))))


@dataclass(frozen=True)
class Instance:
    domain: str
    R: RationalFunction
    m: int
    r: float = 1.0
    weight: str = "inv_sqrt"


def random_rational(rng, domain: str) -> Instance:
    """Degree <= 6, multiplicities <= 3, poles at least 0.05 from the contour; ``sup |R| = 1`` on it."""
    r = float(rng.uniform(0.5, 2.0)) if domain == "circle" else 1.0
    mults = _multiplicities(rng)
    locs = _distinct(rng, lambda: _random_pole(rng, domain, r), len(mults))
    n = sum(mults)
    if domain in ("axis", "semiaxis"):
        deg = int(rng.integers(0, n))
    else:
        deg = int(rng.integers(0, n + 1))
        if n + max(0, deg - n) > 6:
            deg = n
    num = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
    R = RationalFunction(num, [Pole(z, k) for z, k in zip(locs, mults)])
    R = RationalFunction(R.numerator / _contour_sup(domain, R, r), R.poles)
    m = int(rng.integers(1, 4))
    weight = "inv_sqrt"
    if domain == "semiaxis" and rng.random() < 0.5 and m * R.decay_order >= 2:
        weight = "sqrt"
    return Instance(domain, R, m, r, weight)


def expected_count(inst: Instance) -> int:
    n = inst.R.degree
    return {"circle": inst.m * n + 1, "axis": inst.m * n, "semiaxis": 2 * inst.m * n,
            "segment": 2 * inst.m * n + 1}[inst.domain]


def _oracle_value(inst: Instance, mode: str):
    R, m = inst.R, inst.m
    f = (lambda z: R.abs2(z) ** m) if mode == "norm" else (lambda z: R(z) ** m)
    return oracle.integrate(f, oracle.make_domain(inst.domain, inst.r, inst.weight), tol=1e-12).value


def _modes(inst: Instance):
    if inst.domain == "axis" and inst.m * inst.R.decay_order < 2:
        return ("norm",)
    return ("norm", "integral")


def check_instance(inst: Instance, phis) -> dict:
    """Quadrature vs oracle and phi-spread for one instance (both modes where defined)."""
    out = {"count_ok": True, "max_err": 0.0, "max_spread": 0.0}
    for mode in _modes(inst):
        fn = norm_2m if mode == "norm" else integrate
        vals = []
        for k, phi in enumerate(phis):
            res = fn(inst.domain, inst.R, inst.m, float(phi), r=inst.r, weight=inst.weight)
            if k == 0:
                out["count_ok"] &= res.notches.count == expected_count(inst)
            vals.append(res.value)
        ref = _oracle_value(inst, mode)
        err = abs(vals[0] - ref) / (1.0 + abs(ref))
        vals = np.asarray(vals)
        spread = float(np.max(np.abs(vals - vals[0])))
        scale = abs(vals[0]) if mode == "norm" else 1.0 + abs(vals[0])
        out["max_err"] = max(out["max_err"], float(err))
        out["max_spread"] = max(out["max_spread"], spread / scale)
    return out


def _instance_job(args):
    domain, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    inst = random_rational(rng, domain)
    phis = np.concatenate(([rng.uniform(0, 2 * math.pi)], rng.uniform(0, 2 * math.pi, 8)))
    return domain, check_instance(inst, phis)


def _map(fn, jobs, workers):
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(fn, jobs, chunksize=16))
    return [fn(j) for j in jobs]


def quadrature_checks(seed: int = 0, per_domain: int = 200, workers: int = 1) -> dict:
    """Run the randomised quadrature instances once; criteria 1 and 2 read the result."""
    seqs = np.random.SeedSequence(seed).spawn(len(DOMAINS))
    jobs = [(d, s) for d, parent in zip(DOMAINS, seqs) for s in parent.spawn(per_domain)]
    t0 = time.perf_counter()
    results = _map(_instance_job, jobs, workers)
    return {"results": results, "seconds": time.perf_counter() - t0}


def criterion_1(checks: dict) -> CriterionResult:
    res = checks["results"]
    errs = {d: max(r["max_err"] for dd, r in res if dd == d) for d in DOMAINS}
    counts = all(r["count_ok"] for _, r in res)
    worst = max(errs.values())
    ok = counts and worst <= QUAD_TOL and checks["seconds"] < 120
    detail = {"instances": len(res), "max_rel_err": worst, "counts_ok": counts,
              "seconds": round(checks["seconds"], 1), "per_domain": errs}
    return CriterionResult(1, "quadrature exactness", ok, detail, checks["seconds"])


def criterion_2(checks: dict) -> CriterionResult:
    worst = max(r["max_spread"] for _, r in checks["results"])
    return CriterionResult(2, "phi invariance", worst <= SPREAD_TOL, {"max_rel_spread": worst})


def criterion_3() -> CriterionResult:
    R = RationalFunction([1.0], [(1j, 1)])
    a = norm_2m("axis", R, 1, 1.0).value
    b = norm_2m("axis", R, 2, 1.0).value
    c = integrate("semiaxis", RationalFunction([1.0], [(-1.0, 1)]), 1, 0.7).value
    errs = [abs(a - math.pi), abs(b - math.pi / 2), abs(c - math.pi)]
    return CriterionResult(3, "known values", max(errs) <= 1e-10, {"max_abs_err": max(errs)})


def criterion_4() -> CriterionResult:
    e_y = max(abs(ineq.y0(2) - math.pi), abs(ineq.y0(4) - 0.5 * (4 * math.pi) ** (1 / 3)))
    reps = ineq.rho_sharpness(2) + ineq.rho_sharpness(4)
    norms = [r for r in reps if r.name.startswith("rho_p_norm")]
    points = [r for r in reps if r.name.startswith("pointwise")]
    e_n = max(abs(r.lhs - 1.0) for r in norms)
    e_p = max(r.relative_gap for r in points)
    ok = e_y <= 1e-12 and e_n <= 1e-8 and e_p <= 1e-8
    return CriterionResult(4, "one-pole fraction sharpness", ok,
                           {"y0_err": e_y, "norm_err": e_n, "pointwise_gap": e_p})


def criterion_5() -> CriterionResult:
    gaps = [ineq.circle_delta_sharpness(n, d).relative_gap for n in (1, 2, 3) for d in (0.3, 0.5)]
    return CriterionResult(5, "annulus witness sharpness", max(gaps) <= 1e-8, {"max_rel_gap": max(gaps)})


def criterion_6() -> CriterionResult:
    vals, gaps = [], []
    for n in (1, 2, 3):
        P = ineq.segment_jacobi(n).function
        vals.append(P.eval(1.0) == 2 * n + 1)
        gaps.append(ineq.segment_sharpness(n).relative_gap)
    ok = all(vals) and max(gaps) <= 1e-8
    return CriterionResult(6, "segment polynomial sharpness", ok, {"endpoint_exact": all(vals), "max_rel_gap": max(gaps)})


def random_spf(rng, n_max=5, side=None, min_im=MIN_DIST):
    n = int(rng.integers(1, n_max + 1))
    poles = []
    for k in range(n):
        s = side if side is not None else rng.choice((-1, 1))
        poles.append(complex(rng.uniform(-3, 3), s * rng.uniform(min_im, 3)))
    return SimplePartialFraction(tuple(poles))


def _spf_job(seed_seq):
    rng = np.random.default_rng(seed_seq)
    rho = random_spf(rng, side=int(rng.choice((-1, 1))))
    worst = []
    for p in (2, 3, 4, 6):
        up, low = ineq.spf_bounds(rho, p)
        worst.append((up.holds and low.holds, up.ratio, low.ratio))
    return worst


def criterion_7(seed: int = 0, count: int = 100, workers: int = 1) -> CriterionResult:
    d2 = ineq.spf_d(ineq.rho_p(2).function, 2)[0]
    d4 = ineq.spf_d(ineq.rho_p(4).function, 4)[0]
    e = max(abs(d2 - 2), abs(d4 - 4) / 4)
    res = _map(_spf_job, np.random.SeedSequence(seed + 7).spawn(count), workers)
    flat = [x for row in res for x in row]
    violations = sum(not ok for ok, _, _ in flat)
    ok = e <= 1e-8 and violations == 0
    return CriterionResult(7, "SPF d bounds", ok, {"witness_err": e, "checks": len(flat), "violations": violations,
                                                   "max_upper_ratio": max(u for _, u, _ in flat),
                                                   "max_lower_ratio": max(lo for _, _, lo in flat)})


def _mixed_job(seed_seq):
    rng = np.random.default_rng(seed_seq)
    while True:
        rho = random_spf(rng)
        if rho.side == 0:
            break
    return [ineq.spf_mixed_bound(rho, p, q) for p, q in ((2, 4), (2, math.inf), (3, 6))]


def criterion_8(seed: int = 0, count: int = 100, workers: int = 1) -> CriterionResult:
    res = _map(_mixed_job, np.random.SeedSequence(seed + 8).spawn(count), workers)
    flat = [x for row in res for x in row]
    violations = sum(not r.holds for r in flat)
    return CriterionResult(8, "mixed SPF bound", violations == 0,
                           {"checks": len(flat), "violations": violations, "max_ratio": max(r.ratio for r in flat)})


def random_beam_spf(rng, alpha, n_max=5):
    n = int(rng.integers(1, n_max + 1))
    poles = [-rng.uniform(0.2, 5) * np.exp(1j * rng.uniform(-0.95 * alpha, 0.95 * alpha)) for _ in range(n)]
    return SimplePartialFraction(tuple(complex(z) for z in poles))


def _beam_job(args):
    seed_seq, alpha = args
    rng = np.random.default_rng(seed_seq)
    rho = random_beam_spf(rng, alpha)
    out = []
    for m in (1, 2):
        out.extend(ineq.spf_semiaxis_bound(rho, alpha, m))
    return out


def criterion_9(seed: int = 0, count: int = 50, workers: int = 1) -> CriterionResult:
    seqs = np.random.SeedSequence(seed + 9).spawn(count)
    jobs = [(s, (0.2, 0.7)[k % 2]) for k, s in enumerate(seqs)]
    flat = [x for row in _map(_beam_job, jobs, workers) for x in row]
    violations = sum(not r.holds for r in flat)
    return CriterionResult(9, "semiaxis SPF bound", violations == 0,
                           {"checks": len(flat), "violations": violations, "max_ratio": max(r.ratio for r in flat)})


def criterion_10() -> CriterionResult:
    worst, checked, skipped = 0.0, 0, 0
    for p in (1, 2, 4):
        for q in (2, 4, math.inf):
            if not p < q:
                skipped += 6 * 3
                continue
            for n in range(1, 7):
                for d in (0.1, 0.5, 0.9):
                    ours = ineq.nikolskii_constant("circle", p, q, n=n, delta=d, geometric=True)
                    worst = max(worst, ours / ineq.baranov_constant(p, q, n, d))
                    checked += 1
    return CriterionResult(10, "constant dominance", worst <= 1.0,
                           {"checked": checked, "skipped_q_le_p": skipped, "max_ratio": worst})


def random_pole_set(rng, domain):
    mults = _multiplicities(rng)
    if domain == "circle":
        r = float(rng.uniform(0.5, 2.0))
        locs = _distinct(rng, lambda: rng.uniform(0, r - MIN_DIST) * np.exp(1j * rng.uniform(0, 2 * math.pi)), len(mults))
        return PoleSet(tuple(Pole(z, k) for z, k in zip(locs, mults)), "disc", r)
    if domain == "segment":
        locs = _distinct(rng, lambda: rng.uniform(0, 1 - MIN_DIST) * np.exp(1j * rng.uniform(0, 2 * math.pi)), len(mults))
        return PoleSet(tuple(Pole(z, k) for z, k in zip(locs, mults)), "disc", 1.0)
    locs = _distinct(rng, lambda: complex(rng.uniform(-3, 3), rng.uniform(MIN_DIST, 3)), len(mults))
    return PoleSet(tuple(Pole(z, k) for z, k in zip(locs, mults)), "upper")


def _prescribe_job(args):
    from .notches import prescribe_phi

    domain, seed_seq = args
    rng = np.random.default_rng(seed_seq)
    ps = random_pole_set(rng, domain)
    m = int(rng.integers(1, 4))
    if domain in ("circle", "segment"):
        theta = float(rng.uniform(0, 2 * math.pi))
        ns = notches(domain, ps, m, prescribe_phi(domain, ps, theta, m))
        target = ps.radius * np.exp(1j * theta)
        return float(np.min(np.abs(ns.points - target)))
    x = float(rng.uniform(-5, 5))
    ns = notches(domain, ps, m, prescribe_phi(domain, ps, x, m))
    return float(np.min(np.abs(ns.points - x)))


def criterion_11(seed: int = 0, per_domain: int = 100, workers: int = 1) -> CriterionResult:
    seqs = np.random.SeedSequence(seed + 11).spawn(len(DOMAINS))
    jobs = [(d, s) for d, parent in zip(DOMAINS, seqs) for s in parent.spawn(per_domain)]
    dists = _map(_prescribe_job, jobs, workers)
    worst = max(dists)
    return CriterionResult(11, "prescribed node", worst <= 1e-10, {"instances": len(dists), "max_distance": worst})


def run_all(seed: int = 0, workers: int = 1) -> list[CriterionResult]:
    """All eleven criteria in order."""
    checks = quadrature_checks(seed, workers=workers)
    out = [criterion_1(checks), criterion_2(checks)]
    for fn in (criterion_3, criterion_4, criterion_5, criterion_6):
        t0 = time.perf_counter()
        res = fn()
        res.seconds = time.perf_counter() - t0
        out.append(res)
    for fn in (criterion_7, criterion_8, criterion_9):
        t0 = time.perf_counter()
        res = fn(seed, workers=workers)
        res.seconds = time.perf_counter() - t0
        out.append(res)
    out.append(criterion_10())
    t0 = time.perf_counter()
    res = criterion_11(seed, workers=workers)
    res.seconds = time.perf_counter() - t0
    out.append(res)
    return out
