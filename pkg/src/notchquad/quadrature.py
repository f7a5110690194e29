"""Exact quadrature identities with variable nodes.

For a rational function ``R`` of degree ``n`` and any ``phi``:

circle ``|z| = r``::

    int R^m |dz|          = 2 pi r sum_{k=1}^{mn+1} R(z_k)^m  / (m mu(z_k) + 1)
    int |R|^{2m} |dz|     = 2 pi r sum_{k=1}^{mn+1} |R(z_k)|^{2m} / (m mu(z_k) + 1)

real axis (``R`` proper)::

    int R^m dx            = (pi/m) sum_{k=1}^{mn} R(x_k)^m / mu(x_k)
    int |R|^{2m} dx       = (pi/m) sum_{k=1}^{mn} |R(x_k)|^{2m} / mu(x_k)

semiaxis, ``R(x)/sqrt(x)`` or ``R(x) sqrt(x)``: the axis rule for ``R(t**2)``
(times ``t**2``) with the lifted pole set, ``2 m n`` nodes.

segment ``[-1, 1]`` with ``w(x) = 1/sqrt(1 - x**2)``: the unit-circle rule for
``R((z + 1/z)/2)``, halved, with ``x_k = Re z_k`` and ``2 m n + 1`` nodes.

On the axis domains the node at infinity (``phi = 0 mod 2 pi``) contributes
the limit of its term, which is nonzero only when the summand decays exactly
like ``mu``, i.e. like ``1/x**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeAxis, BlaschkeCircle
from .errors import DivergentIntegral, InvalidInput
from .notches import NotchSet, notches_axis, notches_circle, notches_segment
from .ratfun import RationalFunction, reflect_axis, reflect_circle, segment_lift, semiaxis_lift

WEIGHTS = ("inv_sqrt", "sqrt")


def fsum(values) -> complex | float:
    """Compensated, order-fixed summation of real or complex terms."""
    values = np.asarray(values)
    if np.iscomplexobj(values):
        return complex(math.fsum(values.real.tolist()), math.fsum(values.imag.tolist()))
    return math.fsum(values.tolist())


@dataclass(frozen=True)
class QuadratureResult:
    """Value of a quadrature identity and its per-node terms.

    ``contributions`` follow the node order of ``notches``; when
    ``dropped_infinite_node`` is set the node at infinity is not evaluated
    and its limit term is the last contribution.
    """

    value: complex | float
    contributions: np.ndarray
    dropped_infinite_node: bool
    domain: str
    mode: str
    m: int
    phi: float
    notches: NotchSet | None = None

    def to_json(self) -> dict:
        def enc(v):
            v = complex(v)
            return [v.real, v.imag]

        if self.mode == "norm":
            value, contribs = float(np.real(self.value)), [float(np.real(c)) for c in self.contributions]
        else:
            value, contribs = enc(self.value), [enc(c) for c in self.contributions]
        return {
            "domain": self.domain,
            "mode": self.mode,
            "value": value,
            "contributions": contribs,
            "dropped_inf": bool(self.dropped_infinite_node),
            "phi": float(self.phi),
            "m": int(self.m),
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuadratureResult":
        def dec(v):
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) else float(v)

        try:
            contribs = np.array([dec(c) for c in data["contributions"]])
            return cls(dec(data["value"]), contribs, bool(data["dropped_inf"]), data.get("domain", ""),
                       data.get("mode", ""), int(data["m"]), float(data["phi"]))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InvalidInput(f"malformed quadrature JSON: {exc}") from exc


def _check_m(m) -> int:
    if int(m) != m or m < 1:
        raise InvalidInput(f"m must be a positive integer, got {m!r}")
    return int(m)


def _result(terms, inf_term, ns, domain, mode, m, phi):
    terms = np.asarray(terms)
    if ns.infinite:
        terms = np.append(terms, inf_term)
    if mode == "norm":
        terms = terms.real.astype(float)
    return QuadratureResult(fsum(terms), terms, ns.infinite, domain, mode, m, float(phi), ns)


def _inf_limit(coeff: complex, decay: int, moment: float) -> complex:
    """Limit of ``f(x)/mu(x)`` when ``f ~ coeff * x**(-decay)`` and ``mu ~ moment / x**2``."""
    if decay > 2:
        return 0.0
    if decay == 2:
        return coeff / moment
    raise DivergentIntegral("summand does not vanish at the node at infinity")


# circle

def integrate_circle(R: RationalFunction, r: float = 1.0, phi: float = 0.0, m: int = 1) -> QuadratureResult:
    """``int_{|z|=r} R(z)**m |dz|`` from the ``m n + 1`` notches."""
    m = _check_m(m)
    ps = reflect_circle(R, r)
    ns = notches_circle(ps, r, m, phi)
    terms = 2 * math.pi * r * R(ns.points) ** m / (m * ns.mu_values + 1.0)
    return _result(terms, 0.0, ns, "circle", "integral", m, phi)


def norm_circle_2m(R: RationalFunction, r: float = 1.0, m: int = 1, phi: float = 0.0) -> QuadratureResult:
    """``||R||_{2m}^{2m}`` on ``|z| = r``."""
    m = _check_m(m)
    ps = reflect_circle(R, r)
    ns = notches_circle(ps, r, m, phi)
    terms = 2 * math.pi * r * R.abs2(ns.points) ** m / (m * ns.mu_values + 1.0)
    return _result(terms, 0.0, ns, "circle", "norm", m, phi)


# real axis

def integrate_axis(R: RationalFunction, m: int = 1, phi: float = 0.0) -> QuadratureResult:
    """``int_R R(x)**m dx``; needs ``m * (deg Q - deg P) >= 2``."""
    m = _check_m(m)
    ps = reflect_axis(R)
    g = R.decay_order
    if m * g < 2:
        raise DivergentIntegral(f"int R^m dx diverges: decay order {g}, m = {m}")
    ns = notches_axis(ps, m, phi)
    B = BlaschkeAxis(ps)
    inf_term = _inf_limit(R.leading_coefficient ** m, m * g, B.moment) if ns.infinite else 0.0
    terms = (math.pi / m) * R(ns.points) ** m / ns.mu_values
    return _result(terms, (math.pi / m) * inf_term, ns, "axis", "integral", m, phi)


def norm_axis_2m(R: RationalFunction, m: int = 1, phi: float = 0.0) -> QuadratureResult:
    """``||R||_{2m}^{2m}`` on the real axis (``R`` proper)."""
    m = _check_m(m)
    ps = reflect_axis(R)
    ns = notches_axis(ps, m, phi)
    B = BlaschkeAxis(ps)
    c2 = abs(R.leading_coefficient) ** 2
    inf_term = _inf_limit(c2 ** m, 2 * m * R.decay_order, B.moment) if ns.infinite else 0.0
    terms = (math.pi / m) * R.abs2(ns.points) ** m / ns.mu_values
    return _result(terms, (math.pi / m) * inf_term, ns, "axis", "norm", m, phi)


# semiaxis

def _check_weight(weight):
    if weight not in WEIGHTS:
        raise InvalidInput(f"weight must be one of {WEIGHTS}, got {weight!r}")


def integrate_semiaxis(R: RationalFunction, m: int = 1, phi: float = 0.0,
                       weight: str = "inv_sqrt") -> QuadratureResult:
    """``int_0^inf R(x)**m x**(-1/2) dx`` (or ``x**(1/2)`` with ``weight="sqrt"``)."""
    m = _check_m(m)
    _check_weight(weight)
    ps = semiaxis_lift(R)
    g = R.decay_order
    decay = 2 * m * g - (2 if weight == "sqrt" else 0)
    if decay < 2:
        raise DivergentIntegral(f"semiaxis integral with weight {weight} diverges (decay order {g}, m = {m})")
    ns = notches_axis(ps, m, phi, domain="semiaxis")
    B = BlaschkeAxis(ps, "semiaxis")
    x = ns.points
    vals = R(x * x) ** m
    if weight == "sqrt":
        vals = vals * x * x
    inf_term = _inf_limit(R.leading_coefficient ** m, decay, B.moment) if ns.infinite else 0.0
    terms = (math.pi / m) * vals / ns.mu_values
    return _result(terms, (math.pi / m) * inf_term, ns, "semiaxis", "integral", m, phi)


def norm_semiaxis_2m(R: RationalFunction, m: int = 1, phi: float = 0.0,
                     weight: str = "inv_sqrt") -> QuadratureResult:
    """``int_0^inf |R(x)|^{2m} x**(-1/2) dx`` (or ``x**(1/2)``)."""
    m = _check_m(m)
    _check_weight(weight)
    ps = semiaxis_lift(R)
    g = R.decay_order
    decay = 4 * m * g - (2 if weight == "sqrt" else 0)
    ns = notches_axis(ps, m, phi, domain="semiaxis")
    B = BlaschkeAxis(ps, "semiaxis")
    x = ns.points
    vals = R.abs2(x * x) ** m
    if weight == "sqrt":
        vals = vals * x * x
    c2 = abs(R.leading_coefficient) ** 2
    inf_term = _inf_limit(c2 ** m, decay, B.moment) if ns.infinite else 0.0
    terms = (math.pi / m) * vals / ns.mu_values
    return _result(terms, (math.pi / m) * inf_term, ns, "semiaxis", "norm", m, phi)


# segment

def integrate_segment(R: RationalFunction, phi: float = 0.0, m: int = 1) -> QuadratureResult:
    """``int_{-1}^{1} R(x)**m (1 - x**2)**(-1/2) dx`` from ``2 m n + 1`` notches."""
    m = _check_m(m)
    ps = segment_lift(R)
    ns = notches_segment(ps, m, phi)
    terms = math.pi * R(ns.x) ** m / (m * ns.mu_values + 1.0)
    return _result(terms, 0.0, ns, "segment", "integral", m, phi)


def norm_segment_2m(R: RationalFunction, m: int = 1, phi: float = 0.0) -> QuadratureResult:
    """``||R||_{2m}^{2m}`` on ``[-1, 1]`` with the Chebyshev weight."""
    m = _check_m(m)
    ps = segment_lift(R)
    ns = notches_segment(ps, m, phi)
    terms = math.pi * R.abs2(ns.x) ** m / (m * ns.mu_values + 1.0)
    return _result(terms, 0.0, ns, "segment", "norm", m, phi)


def integrate(domain: str, R: RationalFunction, m: int = 1, phi: float = 0.0, *, r: float = 1.0,
              weight: str = "inv_sqrt") -> QuadratureResult:
    if domain == "circle":
        return integrate_circle(R, r, phi, m)
    if domain == "axis":
        return integrate_axis(R, m, phi)
    if domain == "semiaxis":
        return integrate_semiaxis(R, m, phi, weight)
    if domain == "segment":
        return integrate_segment(R, phi, m)
    raise InvalidInput(f"unknown domain {domain!r}")


def norm_2m(domain: str, R: RationalFunction, m: int = 1, phi: float = 0.0, *, r: float = 1.0,
            weight: str = "inv_sqrt") -> QuadratureResult:
    if domain == "circle":
        return norm_circle_2m(R, r, m, phi)
    if domain == "axis":
        return norm_axis_2m(R, m, phi)
    if domain == "semiaxis":
        return norm_semiaxis_2m(R, m, phi, weight)
    if domain == "segment":
        return norm_segment_2m(R, m, phi)
    raise InvalidInput(f"unknown domain {domain!r}")


def weight_function(domain: str, R: RationalFunction, r: float = 1.0):
    """The Blaschke/weight object used by ``domain`` for ``R``."""
    if domain == "circle":
        return BlaschkeCircle(reflect_circle(R, r), "circle")
    if domain == "axis":
        return BlaschkeAxis(reflect_axis(R), "axis")
    if domain == "semiaxis":
        return BlaschkeAxis(semiaxis_lift(R), "semiaxis")
    if domain == "segment":
        return BlaschkeCircle(segment_lift(R), "segment")
    raise InvalidInput(f"unknown domain {domain!r}")


__all__ = [
    "QuadratureResult", "integrate_circle", "norm_circle_2m", "integrate_axis", "norm_axis_2m",
    "integrate_semiaxis", "norm_semiaxis_2m", "integrate_segment", "norm_segment_2m",
    "integrate", "norm_2m", "weight_function",
]
