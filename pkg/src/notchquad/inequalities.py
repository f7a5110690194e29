"""Jackson-Nikolskii constants, pointwise bounds and extremal functions.

Everything here is a consequence of the quadrature identities: keeping one
nonnegative term of a norm identity gives a pointwise bound, and the usual
interpolation trick turns the ``(inf, 2m)`` bound into a ``(q, p)`` bound
with ``m = m_p``, the integer in ``[p/2, p/2 + 1)``.

Norms of non-even-integer order are always computed with the adaptive
oracle; the :class:`BoundReport` records which path produced each norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import oracle
from .blaschke import BlaschkeAxis, BlaschkeCircle, sample_and_refine
from .errors import BadGeometry, BadKind, BadParams, InvalidInput, PolesOnBothSides, PolesOutsideBeam
from .notches import notches_axis, notches_circle, prescribe_phi
from .quadrature import norm_2m, weight_function
from .ratfun import (
    Pole,
    PoleSet,
    RationalFunction,
    SimplePartialFraction,
    spf_to_rational,
    zhukovsky_inner_root,
)

REL_HOLD = 1e-10
SHARP_TOL = 1e-8


@dataclass(frozen=True)
class BoundReport:
    """``lhs <= rhs`` for one inequality instance."""

    name: str
    lhs: float
    rhs: float
    paths: dict = field(default_factory=dict)

    @property
    def ratio(self) -> float:
        return self.lhs / self.rhs if self.rhs else math.inf

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs * (1.0 + REL_HOLD)

    @property
    def sharp_gap(self) -> float:
        return self.rhs - self.lhs

    @property
    def relative_gap(self) -> float:
        return abs(self.rhs - self.lhs) / abs(self.rhs)

    @property
    def equality(self) -> bool:
        return self.relative_gap <= SHARP_TOL

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": float(self.lhs),
            "rhs": float(self.rhs),
            "ratio": float(self.ratio),
            "holds": bool(self.holds),
            "sharp_gap": float(self.sharp_gap),
            "equality": bool(self.equality),
            "paths": dict(self.paths),
        }

    @classmethod
    def from_json(cls, data: dict) -> "BoundReport":
        try:
            return cls(data["name"], float(data["lhs"]), float(data["rhs"]), dict(data.get("paths", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed bound report JSON: {exc}") from exc


def m_p(p: float) -> int:
    """The unique integer in ``[p/2, 1 + p/2)``."""
    if not p > 0:
        raise BadParams("p must be positive")
    return max(1, math.ceil(p / 2))


def exponent(p: float, q: float) -> float:
    if not (0 < p < q):
        raise BadParams(f"need 0 < p < q, got p={p}, q={q}")
    return 1.0 / p - (0.0 if math.isinf(q) else 1.0 / q)


def conjugate_exponent(p: float) -> float:
    return 1.0 if math.isinf(p) else p / (p - 1.0)


def hilbert_norm(p: float) -> float:
    """Norm of the Hilbert transform on ``L^p``: ``tan(pi/2p)`` for ``p <= 2``, else ``cot``."""
    if not p > 1:
        raise BadParams("h_p needs p > 1")
    return math.tan(math.pi / (2 * p)) if p <= 2 else 1.0 / math.tan(math.pi / (2 * p))


def beta(a: float, b: float) -> float:
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


def y0(p: float) -> float:
    """Imaginary part of the pole of the ``L^p``-normalised one-pole fraction."""
    if not p > 1:
        raise BadParams("y0(p) needs p > 1")
    return (math.pi * 2.0 ** (2 - p) / ((p - 1) * beta(p / 2, p / 2))) ** (1.0 / (p - 1))


# sup norms and L^p norms on the four contours

def _seeds_circle(poles, r):
    return [math.atan2(z.imag, z.real) % (2 * math.pi) for z in poles if abs(z) > 1e-300]


def sup_norm(domain: str, f: Callable, poles=(), r: float = 1.0):
    """``(argmax, sup |f|)`` on the contour.

    The argmax is ``theta`` on a circle, ``x`` on the axis and semiaxis, and
    ``x`` in ``[-1, 1]`` on the segment. ``poles`` seed the search grid.
    """
    poles = [complex(z) for z in poles]
    if domain == "circle":
        grid = np.concatenate((np.linspace(0, 2 * math.pi, 2048, endpoint=False), _seeds_circle(poles, r)))
        return sample_and_refine(lambda t: np.abs(f(r * np.exp(1j * t))), grid, periodic=True)
    if domain == "axis":
        grid = np.concatenate((np.linspace(-math.pi / 2, math.pi / 2, 2049)[1:-1],
                               np.arctan([z.real for z in poles])))
        t, v = sample_and_refine(lambda t: np.abs(f(np.tan(t))), grid)
        return math.tan(t), v
    if domain == "semiaxis":
        grid = np.concatenate((np.linspace(0, math.pi / 2, 2049)[:-1],
                               np.arctan([max(z.real, 0.0) for z in poles])))
        t, v = sample_and_refine(lambda t: np.abs(f(np.tan(t))), grid)
        return math.tan(t), v
    if domain == "segment":
        grid = np.concatenate((np.linspace(0, math.pi, 2049),
                               np.arccos(np.clip([z.real for z in poles], -1, 1))))
        t, v = sample_and_refine(lambda t: np.abs(f(np.cos(t))), grid)
        return math.cos(t), v
    raise InvalidInput(f"unknown domain {domain!r}")


def _poles_of(f):
    if isinstance(f, RationalFunction):
        return [p.location for p in f.poles]
    if isinstance(f, SimplePartialFraction):
        return list(f.poles)
    return []


def lp_norm(domain: str, f, p: float, *, r: float = 1.0, weight: str = "inv_sqrt") -> tuple[float, str]:
    """``(||f||_p, path)`` on ``domain``; ``path`` is ``"max"``, ``"quadrature"`` or ``"oracle"``.

    The semiaxis norm carries the weight ``x**(-1/2)`` (or ``x**(1/2)``) and the
    segment norm the Chebyshev weight; sup norms ignore weights.
    """
    if math.isinf(p):
        return sup_norm(domain, f, _poles_of(f), r)[1], "max"
    if isinstance(f, SimplePartialFraction) and p == round(p) and int(p) % 2 == 0:
        f = spf_to_rational(f)
    if isinstance(f, RationalFunction) and p == round(p) and int(p) % 2 == 0:
        v = norm_2m(domain, f, int(p) // 2, 1.0, r=r, weight=weight).value
        return float(v) ** (1.0 / p), "quadrature"
    est = oracle.lp_norm_p(f, oracle.make_domain(domain, r, weight), p)
    return float(est.value) ** (1.0 / p), "oracle"


# pointwise bounds

def _contour_weight(domain, W, m, point, r):
    """Point on the contour, value of the weight expression there."""
    if domain in ("circle", "segment"):
        theta = float(np.angle(point)) if np.iscomplexobj(point) else float(point)
        mu = float(W.mu_theta(theta))
        scale = 2 * math.pi * r if domain == "circle" else math.pi
        return theta, (m * mu + 1.0) / scale, mu
    x = float(point)
    mu = float(W.mu(x))
    return x, mu, mu


def _value_at(domain, R, point, r):
    if domain == "circle":
        return R.eval(r * np.exp(1j * point))
    if domain == "segment":
        return R.eval(math.cos(point))
    if domain == "semiaxis":
        return R.eval(point * point)
    return R.eval(point)


def _norm_factor(domain, R, m, r, weight, phi=1.0):
    nrm = float(norm_2m(domain, R, m, phi, r=r, weight=weight).value)
    if domain in ("axis", "semiaxis"):
        return nrm, (m / math.pi) * nrm
    return nrm, nrm


def pointwise_bound(domain: str, R: RationalFunction, m: int, point, *, r: float = 1.0,
                    weight: str = "inv_sqrt") -> BoundReport:
    """One-term bound obtained from a norm identity.

    circle: ``|R(z)|^{2m} / (m mu(z) + 1) <= ||R||^{2m} / (2 pi r)``;
    axis: ``|R(x)|^{2m} / mu(x) <= (m/pi) ||R||^{2m}``;
    semiaxis: ``|R(x^2)|^{2m} / mu(x) <= (m/pi) ||R||^{2m}_{1/sqrt x}``, ``x`` real;
    segment: ``|R(x)|^{2m} / (m mu0(z) + 1) <= ||R||^{2m}_w / pi``, ``x = Re z``.

    ``point`` is ``theta`` (or a complex contour point) for circle and segment,
    ``x`` otherwise.
    """
    W = weight_function(domain, R, r)
    param, _, mu = _contour_weight(domain, W, m, point, r)
    a2 = abs(_value_at(domain, R, param, r)) ** 2
    nrm, _ = _norm_factor(domain, R, m, r, weight)
    if domain == "circle":
        lhs, rhs = a2 ** m / (m * mu + 1.0), nrm / (2 * math.pi * r)
    elif domain == "segment":
        lhs, rhs = a2 ** m / (m * mu + 1.0), nrm / math.pi
    else:
        lhs, rhs = a2 ** m / mu, (m / math.pi) * nrm
    return BoundReport(f"pointwise[{domain}, m={m}]", lhs, rhs, {"norm": "quadrature"})


class Alternative(NamedTuple):
    first: bool
    second: bool

    @property
    def any(self) -> bool:
        return self.first or self.second


def alternative_check(domain: str, R: RationalFunction, m: int, d: float, point, *, r: float = 1.0,
                      weight: str = "inv_sqrt") -> Alternative:
    """Which of ``|R|^d < W`` and ``|R|^{2m-d} <= K`` hold at ``point``.

    ``W`` is the weight expression and ``K`` the norm factor of the pointwise
    bound ``|R|^{2m} <= W K``: ``W = (m mu + 1)/(2 pi r)``, ``K = ||R||^{2m}``
    on the circle; ``W = mu``, ``K = (m/pi) ||R||^{2m}`` on the axis and
    semiaxis; ``W = (m mu0 + 1)/pi``, ``K = ||R||^{2m}`` on the segment.
    """
    W = weight_function(domain, R, r)
    param, w, _ = _contour_weight(domain, W, m, point, r)
    a = abs(_value_at(domain, R, param, r))
    _, K = _norm_factor(domain, R, m, r, weight)
    first = a ** d < w
    second = a ** (2 * m - d) <= K * (1.0 + REL_HOLD)
    return Alternative(bool(first), bool(second))


# constants

def _circle_annulus_ok(R, r, delta):
    for p in R.poles:
        z = abs(p.location)
        if delta * r < z < r / delta:
            return False
    return True


def nikolskii_constant(domain: str, p: float, q: float, *, r: float = 1.0, R: RationalFunction | None = None,
                       mu_max: float | None = None, n: int | None = None, delta: float | None = None,
                       geometric: bool = False) -> float:
    """Constant ``C`` in ``||R||_q <= C ||R||_p``.

    With ``geometric=False`` the constant uses ``sup mu`` of ``R`` (or the
    supplied ``mu_max``). With ``geometric=True`` it uses the closed-form
    weight bound for poles outside an annulus (circle, ``0 < delta < 1``), a
    stripe (axis, ``delta > 0``), a parabola (semiaxis, ``delta > 0``) or an
    ellipse (segment, ``delta > 1``); ``n`` is the degree.
    """
    e = exponent(p, q)
    mp = m_p(p)
    if geometric:
        if R is not None and n is None:
            n = R.degree
        if n is None or delta is None:
            raise BadParams("geometric constants need the degree n and delta")
        if domain == "circle":
            if not 0 < delta < 1:
                raise BadGeometry("annulus parameter must lie in (0, 1)")
            if R is not None and not _circle_annulus_ok(R, r, delta):
                raise BadGeometry("a pole lies in the annulus delta r < |z| < r/delta")
            return ((mp * n * (1 + delta) / (1 - delta) + 1) / (2 * math.pi * r)) ** e
        if domain == "axis":
            if not delta > 0:
                raise BadGeometry("stripe half-width must be positive")
            if R is not None and any(abs(p_.location.imag) <= delta for p_ in R.poles):
                raise BadGeometry("a pole lies in the stripe |Im z| <= delta")
            return (mp * n / (math.pi * delta)) ** e
        if domain == "semiaxis":
            if not delta > 0:
                raise BadGeometry("parabola parameter must be positive")
            if R is not None:
                for p_ in R.poles:
                    z = p_.location
                    phi = math.atan2(z.imag, z.real) % (2 * math.pi)
                    if math.sqrt(abs(z)) * math.sin(phi / 2) < delta:
                        raise BadGeometry("a pole lies inside the parabola")
            return (2 * mp * n / (math.pi * delta)) ** e
        if domain == "segment":
            if not delta > 1:
                raise BadGeometry("ellipse parameter must exceed 1")
            if R is not None and any(abs(zhukovsky_inner_root(p_.location)) > 1 / delta for p_ in R.poles):
                raise BadGeometry("a pole lies inside the ellipse")
            return ((2 * mp * n * (delta + 1) / (delta - 1) + 1) / math.pi) ** e
        raise InvalidInput(f"unknown domain {domain!r}")
    if mu_max is None:
        if R is None:
            raise BadParams("need R or mu_max")
        mu_max = weight_function(domain, R, r).mu_sup()[1]
    if domain == "circle":
        return ((mp * mu_max + 1) / (2 * math.pi * r)) ** e
    if domain in ("axis", "semiaxis"):
        return (mp * mu_max / math.pi) ** e
    if domain == "segment":
        return ((mp * mu_max + 1) / math.pi) ** e
    raise InvalidInput(f"unknown domain {domain!r}")


def baranov_constant(p: float, q: float, n: int, delta: float, r: float = 1.0) -> float:
    """Earlier annulus constant ``((m_p n + 1)/(2 pi r) * (1 + delta)/(1 - delta))**(1/p - 1/q)``."""
    if not 0 < delta < 1:
        raise BadGeometry("annulus parameter must lie in (0, 1)")
    e = exponent(p, q)
    return ((m_p(p) * n + 1) / (2 * math.pi * r) * (1 + delta) / (1 - delta)) ** e


def laurent_constant(p: float, q: float, l: int, r: float = 1.0) -> float:
    """Constant for ``sum_{k=-n1}^{n2} c_k z^k`` on ``|z| = r`` with ``l = n1 + n2``."""
    return ((m_p(p) * l + 1) / (2 * math.pi * r)) ** exponent(p, q)


def trig_constant(p: float, q: float, n: int) -> float:
    """``A n**(1/p - 1/q)`` for trigonometric polynomials of order ``n`` on ``[0, 2 pi]``."""
    e = exponent(p, q)
    return ((2 * m_p(p) + 1.0 / n) / (2 * math.pi)) ** e * n ** e


def trig_plus_constant(p: float, q: float, n: int) -> float:
    """Constant for ``T_{n+1,n}`` (frequencies ``-n .. n+1``)."""
    mp = m_p(p)
    return ((2 * mp * n + mp + 1) / (2 * math.pi)) ** exponent(p, q)


def segment_polynomial_constant(p: float, q: float, n: int) -> float:
    """Constant for degree-``n`` polynomials on ``[-1, 1]`` with the Chebyshev weight."""
    return ((2 * m_p(p) * n + 1) / math.pi) ** exponent(p, q)


def nikolskii_bound(domain: str, R: RationalFunction, p: float, q: float, *, r: float = 1.0,
                    weight: str = "inv_sqrt") -> BoundReport:
    """Check ``||R||_q <= C ||R||_p`` with the ``sup mu`` constant."""
    C = nikolskii_constant(domain, p, q, r=r, R=R)
    lq, path_q = lp_norm(domain, R, q, r=r, weight=weight)
    lp, path_p = lp_norm(domain, R, p, r=r, weight=weight)
    return BoundReport(f"nikolskii[{domain}, p={p}, q={q}]", lq, C * lp, {"q": path_q, "p": path_p})


# simple partial fractions

def spf_d(rho: SimplePartialFraction, p: float) -> tuple[float, dict]:
    """``d(rho; p) = 2 pi ||rho||_inf^{p-1} / ||rho||_p^p`` on the real axis."""
    if not p > 1:
        raise BadParams("d(rho; p) needs p > 1")
    sup, _ = lp_norm("axis", rho, math.inf)
    lp, path = lp_norm("axis", rho, p)
    return 2 * math.pi * sup ** (p - 1) / lp ** p, {"sup": "max", "p": path}


def spf_bounds(rho: SimplePartialFraction, p: float) -> tuple[BoundReport, BoundReport]:
    """Upper ``d <= 2 m_p`` and lower ``d >= cos(pi(1 - p/2))/n`` (``1/n`` for ``p >= 2``)."""
    if rho.side == 0:
        raise PolesOnBothSides("all poles must lie on one side of the real axis")
    d, paths = spf_d(rho, p)
    n = rho.degree
    low = math.cos(math.pi * (1 - p / 2)) / n if p <= 2 else 1.0 / n
    return (BoundReport(f"spf_upper[p={p}]", d, 2.0 * m_p(p), paths),
            BoundReport(f"spf_lower[p={p}]", low, d, paths))


def spf_mixed_bound(rho: SimplePartialFraction, p: float, q: float) -> BoundReport:
    """``||rho||_q^{q'} <= 2^{q'-p'} (m_p/pi)^{p'q'(1/p-1/q)} (1+h_p)^{p'} ||rho||_p^{p'}``."""
    if not (1 < p < q):
        raise BadParams("need 1 < p < q <= inf")
    pc, qc = conjugate_exponent(p), conjugate_exponent(q)
    lq, path_q = lp_norm("axis", rho, q)
    lp, path_p = lp_norm("axis", rho, p)
    const = 2.0 ** (qc - pc) * (m_p(p) / math.pi) ** (pc * qc * exponent(p, q)) * (1 + hilbert_norm(p)) ** pc
    return BoundReport(f"spf_mixed[p={p}, q={q}]", lq ** qc, const * lp ** pc, {"q": path_q, "p": path_p})


def spf_semiaxis_bound(rho: SimplePartialFraction, alpha: float, m: int) -> tuple[BoundReport, BoundReport]:
    """Both halves of ``||rho||_inf^{2m-1/2} <= S^{2m-1/2} <= 2 sqrt(n) m ||rho||^{2m} / (pi cos^{2m} alpha)``.

    ``S = sum 1/r_k``; the sup is over ``[0, inf)`` and the norm carries the weight ``x**(-1/2)``.
    """
    if not 0 < alpha < math.pi / 2:
        raise BadParams("alpha must lie in (0, pi/2)")
    for z in rho.poles:
        if not abs(math.atan2(-z.imag, -z.real)) < alpha:
            raise PolesOutsideBeam(f"pole {z} is outside the beam |arg(-z)| < alpha")
    n = rho.degree
    S = sum(1.0 / abs(z) for z in rho.poles)
    e = 2 * m - 0.5
    sup = sup_norm("semiaxis", rho, rho.poles)[1]
    R = spf_to_rational(rho)
    nrm = float(norm_2m("semiaxis", R, m, 1.0).value)
    rhs = 2 * math.sqrt(n) / math.cos(alpha) ** (2 * m) * (m / math.pi) * nrm
    return (BoundReport(f"spf_semiaxis_sup[m={m}]", sup ** e, S ** e, {"sup": "max"}),
            BoundReport(f"spf_semiaxis_norm[m={m}]", S ** e, rhs, {"norm": "quadrature"}))


def sigma_comparison(p: float, n: int) -> tuple[float, float | None, float | None]:
    """``(sigma(p), sigma1(p), sigma2(p))``; the last two are ``None`` for ``p < 2``."""
    if not p > 1:
        raise BadParams("sigma needs p > 1")
    pc = conjugate_exponent(p)
    sigma = p * math.sin(math.pi / p) ** (-pc)
    if p < 2:
        return sigma, None, None
    s1 = (1.0 / (2 * math.pi * n)) ** (1.0 / (p - 1))
    s2 = ((p + 2) / (2 * math.pi)) ** (1.0 / (p - 1))
    return sigma, s1, s2


def spf_D(rho: SimplePartialFraction, p: float) -> float:
    """``D(rho; p) = (d / 2 pi)**(p'/p)``."""
    d, _ = spf_d(rho, p)
    return (d / (2 * math.pi)) ** (conjugate_exponent(p) / p)


# extremal functions

@dataclass(frozen=True)
class Witness:
    """An extremal function together with the data that built it."""

    kind: str
    function: object
    params: dict

    def __call__(self, z):
        return self.function(z)

    def to_json(self) -> dict:
        f = self.function
        if isinstance(f, RationalFunction):
            fj = {"rational": f.to_json()}
        elif isinstance(f, SimplePartialFraction):
            fj = {"spf": [[z.real, z.imag] for z in f.poles]}
        else:
            fj = {}
        params = {}
        for k, v in self.params.items():
            if isinstance(v, complex):
                params[k] = [v.real, v.imag]
            elif isinstance(v, (int, float, str, bool)) or v is None:
                params[k] = v
        return {"kind": self.kind, "params": params, **fj}


def _poly(roots_with_mult, scale=1.0):
    P = np.polynomial.polynomial
    out = np.array([scale], dtype=complex)
    for z, k in roots_with_mult:
        out = P.polymul(out, P.polyfromroots([z] * k))
    return out


def _divide_out(num, root):
    """Synthetic division of ascending ``num`` by ``(z - root)``; returns the quotient."""
    P = np.polynomial.polynomial
    q, rem = P.polydiv(num, np.array([-root, 1.0], dtype=complex))
    scale = max(1.0, float(np.max(np.abs(num))))
    if abs(rem[0]) > 1e-8 * scale:
        raise BadParams(f"{root} is not a root of the numerator (remainder {abs(rem[0]):.2e})")
    return q


def circle_star(pole_set: PoleSet, phi: float | None = None) -> Witness:
    """``(z B(z) - r e^{i phi}) / (z - z_1)`` with ``z_1`` a notch of ``zeta B = r e^{i phi}``.

    Without ``phi`` the notch ``z_1`` is placed at the maximum of ``mu``.
    """
    r = pole_set.radius
    B = BlaschkeCircle(pole_set)
    if phi is None:
        theta1, _ = B.mu_sup()
        phi = prescribe_phi("circle", pole_set, theta1)
    else:
        theta1 = None
    ns = notches_circle(pole_set, r, 1, phi)
    if theta1 is None:
        k = 0
    else:
        k = int(np.argmin(np.abs(np.angle(np.exp(1j * (ns.params - theta1))))))
    zeta1 = complex(ns.points[k])
    inner = [(p.location, p.multiplicity) for p in pole_set.entries]
    # z * prod (r (z - z_k))^{n_k} - r e^{i phi} prod (r^2 - z conj z_k)^{n_k}
    P = np.polynomial.polynomial
    left = P.polymul([0, 1], _poly(inner, r ** pole_set.total))
    right = np.array([r * np.exp(1j * phi)], dtype=complex)
    const = 1.0 + 0j
    poles = []
    for z, k in inner:
        if z == 0:
            right = right * r ** (2 * k)
            const *= r ** (2 * k)
        else:
            right = P.polymul(right, _poly([(r * r / z.conjugate(), k)], (-z.conjugate()) ** k))
            const *= (-z.conjugate()) ** k
            poles.append(Pole(r * r / z.conjugate(), k))
    num = P.polysub(left, right)
    quot = _divide_out(num, zeta1) / const
    R = RationalFunction(quot, poles)
    return Witness("circle_star", R, {"phi": float(phi), "zeta1": zeta1, "r": r, "pole_set": pole_set})


def circle_star_quotient(pole_set: PoleSet, phi: float, zeta1: complex, z):
    """Evaluate ``(z B(z) - r e^{i phi}) / (z - zeta1)`` directly.

    Within ``1e-6`` of ``zeta1`` the first-order value ``B + z B'`` is used.
    """
    r = pole_set.radius
    B = BlaschkeCircle(pole_set)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    out = np.empty(z.shape, dtype=complex)
    near = np.abs(z - zeta1) < 1e-6
    far = ~near
    if np.any(far):
        zf = z[far]
        out[far] = (zf * B(zf) - r * np.exp(1j * phi)) / (zf - zeta1)
    if np.any(near):
        logd = np.sum(B.n * (1.0 / (zeta1 - B.z) + B.z.conj() / (r * r - zeta1 * B.z.conj())))
        b1 = B(np.array([zeta1]))[0]
        out[near] = b1 * (1.0 + zeta1 * logd)
    return out


def circle_delta_star(n: int, delta: float, r: float = 1.0) -> Witness:
    """Example with a single ``n``-fold zero of ``B`` at ``delta r`` and ``phi = 0``."""
    if n < 1 or not 0 < delta < 1:
        raise BadParams("need n >= 1 and 0 < delta < 1")
    ps = PoleSet((Pole(delta * r, n),), "disc", float(r))
    w = circle_star(ps, 0.0)
    return Witness("circle_delta_star", w.function, {**w.params, "n": n, "delta": delta})


def axis_star(pole_set: PoleSet, phi: float | None = None) -> Witness:
    """``(B(x) - e^{i phi}) / (x - x_1)`` with ``x_1`` a notch of ``B = e^{i phi}``.

    Without ``phi`` the notch ``x_1`` is placed at the maximum of ``mu``.
    """
    B = BlaschkeAxis(pole_set)
    if phi is None:
        x1, _ = B.mu_sup()
        phi = prescribe_phi("axis", pole_set, x1)
    else:
        x1 = None
    if abs(np.exp(1j * phi) - 1) < 1e-12:
        raise BadParams("phi = 0 (mod 2 pi) puts a notch at infinity")
    ns = notches_axis(pole_set, 1, phi)
    k = 0 if x1 is None else int(np.argmin(np.abs(ns.points - x1)))
    xk = float(ns.points[k])
    inner = [(p.location, p.multiplicity) for p in pole_set.entries]
    P = np.polynomial.polynomial
    num = P.polysub(_poly(inner), _poly([(z.conjugate(), k_) for z, k_ in inner], np.exp(1j * phi)))
    quot = _divide_out(num, xk)
    R = RationalFunction(quot, [Pole(z.conjugate(), k_) for z, k_ in inner])
    return Witness("axis_star", R, {"phi": float(phi), "x1": xk, "pole_set": pole_set})


def rho_p(p: float) -> Witness:
    """``1/(z - i y0(p))``, unit ``L^p`` norm on the real line."""
    y = y0(p)
    return Witness("rho_p", SimplePartialFraction((1j * y,)), {"p": p, "y0": y})


def segment_jacobi(n: int) -> Witness:
    """``P*_n(cos t) = 1 + 2 sum_{k<=n} cos(k t)``; extremal on ``[-1, 1]``."""
    if n < 1:
        raise BadParams("n must be at least 1")
    coeffs = np.polynomial.chebyshev.cheb2poly([1.0] + [2.0] * n)
    return Witness("segment_jacobi", RationalFunction(coeffs), {"n": n})


def trig_star(n: int) -> Witness:
    """``T(t) = 1 + 2 sum_{k<=n} cos(k t) + e^{i (n+1) t}`` as a function of ``z = e^{i t}``."""
    if n < 1:
        raise BadParams("n must be at least 1")
    return Witness("trig_star", RationalFunction(np.ones(2 * n + 2), [(0.0, n)]), {"n": n, "l": 2 * n + 1})


def circle_poly(n: int, r: float = 1.0) -> Witness:
    """``(z^{n+1} - r^{n+1}) / (z - r)``, extremal polynomial on ``|z| = r``."""
    if n < 1:
        raise BadParams("n must be at least 1")
    return Witness("circle_poly", RationalFunction([r ** (n - k) for k in range(n + 1)]), {"n": n, "r": r})


_KINDS = {
    "circle_star": circle_star,
    "circle_delta_star": circle_delta_star,
    "axis_star": axis_star,
    "rho_p": rho_p,
    "segment_jacobi": segment_jacobi,
    "trig_star": trig_star,
    "circle_poly": circle_poly,
}


def extremal_witness(kind: str, **params) -> Witness:
    try:
        build = _KINDS[kind]
    except KeyError:
        raise BadKind(f"unknown witness kind {kind!r}; expected one of {sorted(_KINDS)}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise BadParams(str(exc)) from exc


# sharpness

def _ratio_report(name, sup, l2, const):
    return BoundReport(name, sup, const * l2, {"sup": "max", "l2": "oracle"})


def sharpness_suite() -> list[BoundReport]:
    """Fixed list of equality cases; each report should have ``equality`` set."""
    reports = []
    for n in (1, 2, 3):
        for delta in (0.3, 0.5):
            reports.append(circle_delta_sharpness(n, delta))
    ps = PoleSet((Pole(0.4 + 0.3j, 1), Pole(-0.5j, 2)), "disc", 1.0)
    w = circle_star(ps)
    sup = sup_norm("circle", w.function, [p.location for p in w.function.poles])[1]
    l2 = lp_norm("circle", w.function, 2, weight="inv_sqrt")[0]
    mu_max = BlaschkeCircle(ps).mu_sup()[1]
    reports.append(BoundReport("circle_star", l2 ** 2, 2 * math.pi * sup ** 2 / (mu_max + 1),
                               {"sup": "max", "l2": "quadrature"}))
    ps = PoleSet((Pole(0.5 + 1j, 1), Pole(-1 + 0.4j, 2)), "upper")
    w = axis_star(ps)
    sup = sup_norm("axis", w.function, [p.location for p in w.function.poles])[1]
    l2 = lp_norm("axis", w.function, 2)[0]
    mu_max = BlaschkeAxis(ps).mu_sup()[1]
    reports.append(BoundReport("axis_star", l2 ** 2, math.pi * sup ** 2 / mu_max, {"sup": "max", "l2": "quadrature"}))
    for p in (2, 4):
        reports.extend(rho_sharpness(p))
    for n in (1, 2, 3):
        reports.append(segment_sharpness(n))
    for n in (1, 2):
        w = trig_star(n)
        sup = sup_norm("circle", w.function)[1]
        l2 = float(oracle.lp_norm_p(w.function, oracle.Circle(1.0), 2).value) ** 0.5
        reports.append(_ratio_report(f"trig_star[n={n}]", sup, l2, trig_plus_constant(2, math.inf, n)))
    for n in (1, 3):
        w = circle_poly(n, 1.5)
        sup = sup_norm("circle", w.function, r=1.5)[1]
        l2 = float(oracle.lp_norm_p(w.function, oracle.Circle(1.5), 2).value) ** 0.5
        reports.append(_ratio_report(f"circle_poly[n={n}]", sup, l2, laurent_constant(2, math.inf, n, 1.5)))
    return reports


def circle_delta_sharpness(n: int, delta: float, r: float = 1.0) -> BoundReport:
    """``||R*||_inf`` against ``C ||R*||_2`` for the annulus witness (equality expected)."""
    w = circle_delta_star(n, delta, r)
    R = w.function
    sup = sup_norm("circle", R, [p.location for p in R.poles], r)[1]
    l2 = float(oracle.lp_norm_p(R, oracle.Circle(r), 2).value) ** 0.5
    C = nikolskii_constant("circle", 2, math.inf, r=r, n=n, delta=delta, geometric=True)
    return _ratio_report(f"circle_delta_star[n={n}, delta={delta}]", sup, l2, C)


def segment_sharpness(n: int) -> BoundReport:
    w = segment_jacobi(n)
    sup = sup_norm("segment", w.function)[1]
    l2 = float(oracle.lp_norm_p(w.function, oracle.Segment(), 2).value) ** 0.5
    return _ratio_report(f"segment_jacobi[n={n}]", sup, l2, segment_polynomial_constant(2, math.inf, n))


def rho_sharpness(p: int) -> list[BoundReport]:
    """Unit norm, pointwise equality at 0 with ``m = p/2``, and ``d = 2 m_p``."""
    w = rho_p(p)
    rho = w.function
    m = p // 2
    lp = float(oracle.lp_norm_p(rho, oracle.Axis(), p).value) ** (1.0 / p)
    out = [BoundReport(f"rho_p_norm[p={p}]", lp, 1.0, {"p": "oracle"})]
    R = spf_to_rational(rho)
    out.append(pointwise_bound("axis", R, m, 0.0))
    d, paths = spf_d(rho, p)
    out.append(BoundReport(f"rho_p_d[p={p}]", d, 2.0 * m_p(p), paths))
    return out
