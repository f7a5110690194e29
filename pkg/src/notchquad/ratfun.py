"""Complex rational functions in factored-denominator form and pole reflections.

A :class:`RationalFunction` is ``P(z) / prod_k (z - z_k)**n_k`` with the
numerator stored by ascending coefficients and the denominator kept as a list
of :class:`Pole`. The denominator is never expanded.

The four reflection maps build the :class:`PoleSet` that drives the Blaschke
product of each domain:

* :func:`reflect_circle` -- poles of ``R(z) * conj(R(r**2 / conj(z)))`` in ``|z| < r``;
* :func:`reflect_axis` -- poles of ``R(z) * conj(R(conj(z)))`` in the upper half-plane;
* :func:`semiaxis_lift` -- upper half-plane poles after ``z -> z**2``;
* :func:`segment_lift` -- unit-disc poles after the Zhukovsky substitution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EvalAtPole,
    InvalidInput,
    NotProper,
    PoleOnContour,
    PoleOnSegment,
    PoleOnSemiaxis,
)

TAU_MERGE = 1e-10
TAU_CONTOUR = 1e-8
TAU_POLE = 1e-13


class _Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("notchquad-infinity")

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_infinite(point) -> bool:
    return point is INF


@dataclass(frozen=True)
class Pole:
    location: complex
    multiplicity: int = 1

    def __post_init__(self):
        if int(self.multiplicity) != self.multiplicity or self.multiplicity < 1:
            raise InvalidInput(f"pole multiplicity must be a positive integer, got {self.multiplicity!r}")
        loc = complex(self.location)
        if not (math.isfinite(loc.real) and math.isfinite(loc.imag)):
            raise InvalidInput("finite pole location required; poles at infinity are implied by the numerator degree")
        object.__setattr__(self, "location", loc)
        object.__setattr__(self, "multiplicity", int(self.multiplicity))


def _as_pole(p) -> Pole:
    if isinstance(p, Pole):
        return p
    if isinstance(p, (tuple, list)) and len(p) == 2:
        return Pole(p[0], p[1])
    return Pole(p, 1)


def _close(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def merge_poles(entries: Iterable[tuple[complex, int]], tol: float = TAU_MERGE) -> tuple[Pole, ...]:
    """Merge locations closer than ``tol`` (scaled by ``max(1, |z|)``), summing multiplicities."""
    locs: list[complex] = []
    mults: list[int] = []
    for z, n in entries:
        z = complex(z)
        for i, w in enumerate(locs):
            if _close(z, w, tol):
                mults[i] += int(n)
                break
        else:
            locs.append(z)
            mults.append(int(n))
    return tuple(Pole(z, n) for z, n in zip(locs, mults))


class RationalFunction:
    """``P(z) / prod (z - z_k)**n_k`` with a factored denominator.

    Parameters
    ----------
    numerator : sequence of complex
        Coefficients of ``P`` in ascending powers. Trailing zeros are dropped.
    poles : sequence of Pole or (location, multiplicity) pairs
        Finite, pairwise distinct pole locations.

    The degree is ``max(deg P, sum n_k)``; when ``deg P`` exceeds the total
    finite multiplicity the excess is a pole at infinity.
    """

    def __init__(self, numerator: Sequence[complex], poles: Sequence = ()):
        coeffs = np.atleast_1d(np.asarray(numerator, dtype=complex)).copy()
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise InvalidInput("numerator must be a non-empty coefficient list")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidInput("numerator coefficients must be finite")
        nz = np.flatnonzero(coeffs)
        if nz.size == 0:
            raise InvalidInput("numerator must not be identically zero")
        coeffs = coeffs[: nz[-1] + 1]
        coeffs.flags.writeable = False
        self._num = coeffs
        plist = tuple(_as_pole(p) for p in poles)
        for i, a in enumerate(plist):
            for b in plist[:i]:
                if _close(a.location, b.location, TAU_MERGE):
                    raise InvalidInput(f"pole locations must be distinct: {a.location} and {b.location}")
        self._poles = plist
        self._locs = np.array([p.location for p in plist], dtype=complex)
        self._mults = np.array([p.multiplicity for p in plist], dtype=int)

    @property
    def numerator(self) -> np.ndarray:
        return self._num

    @property
    def poles(self) -> tuple[Pole, ...]:
        return self._poles

    @property
    def numerator_degree(self) -> int:
        return self._num.size - 1

    @property
    def finite_multiplicity(self) -> int:
        return int(self._mults.sum())

    @property
    def degree(self) -> int:
        return max(self.numerator_degree, self.finite_multiplicity)

    @property
    def infinite_multiplicity(self) -> int:
        """Order of the pole at infinity (0 when there is none)."""
        return max(0, self.numerator_degree - self.finite_multiplicity)

    @property
    def decay_order(self) -> int:
        """``sum n_k - deg P``: ``R(z) ~ c * z**(-decay_order)`` at infinity."""
        return self.finite_multiplicity - self.numerator_degree

    @property
    def is_proper(self) -> bool:
        return self.decay_order >= 1

    @property
    def leading_coefficient(self) -> complex:
        return complex(self._num[-1])

    def __call__(self, z):
        """Vectorised evaluation. Raises :class:`EvalAtPole` at a pole."""
        z = np.asarray(z, dtype=complex)
        num = np.polynomial.polynomial.polyval(z, self._num)
        if self._locs.size == 0:
            return num
        diff = z[..., None] - self._locs
        scale = np.maximum(1.0, np.abs(self._locs))
        if np.any(np.abs(diff) <= TAU_POLE * scale):
            raise EvalAtPole("evaluation point coincides with a pole")
        return num / np.prod(diff ** self._mults, axis=-1)

    def eval(self, z) -> complex:
        if z is INF:
            raise InvalidInput("evaluation at infinity is not supported")
        return complex(self(complex(z)))

    def abs2(self, z):
        """``|R(z)|**2``, computed once so callers can raise it to a power."""
        v = self(z)
        return v.real * v.real + v.imag * v.imag

    def __repr__(self):
        poles = ", ".join(f"({p.location:.6g}, {p.multiplicity})" for p in self._poles)
        return f"RationalFunction(numerator={list(self._num)}, poles=[{poles}])"

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return np.array_equal(self._num, other._num) and self._poles == other._poles

    __hash__ = None

    # JSON
    def to_json(self) -> dict:
        return {
            "numerator": [[float(c.real), float(c.imag)] for c in self._num],
            "poles": [
                {"re": p.location.real, "im": p.location.imag, "mult": p.multiplicity} for p in self._poles
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        if not isinstance(data, dict) or "numerator" not in data:
            raise InvalidInput("rational function JSON needs a 'numerator' list")
        try:
            num = [complex(float(c[0]), float(c[1])) if isinstance(c, (list, tuple)) else complex(float(c))
                   for c in data["numerator"]]
            poles = [Pole(complex(float(p["re"]), float(p.get("im", 0.0))), int(p.get("mult", 1)))
                     for p in data.get("poles", [])]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InvalidInput(f"malformed rational function JSON: {exc}") from exc
        return cls(num, poles)

    @classmethod
    def from_roots(cls, zeros: Sequence[complex], poles: Sequence = (), scale: complex = 1.0):
        """Build ``scale * prod (z - zeros) / prod (z - poles)``."""
        num = np.polynomial.polynomial.polyfromroots(list(zeros)) if len(zeros) else np.array([1.0])
        return cls(scale * np.asarray(num, dtype=complex), poles)


@dataclass(frozen=True)
class PoleSet:
    """Merged pole list confined to a region: ``"disc"`` (with ``radius``) or ``"upper"``."""

    entries: tuple[Pole, ...]
    region: str
    radius: float | None = None

    def __post_init__(self):
        if self.region not in ("disc", "upper"):
            raise InvalidInput(f"unknown region {self.region!r}")
        for p in self.entries:
            z = p.location
            if self.region == "disc" and not abs(z) < self.radius:
                raise InvalidInput(f"pole {z} is not inside the disc of radius {self.radius}")
            if self.region == "upper" and not z.imag > 0:
                raise InvalidInput(f"pole {z} is not in the upper half-plane")

    @property
    def total(self) -> int:
        return sum(p.multiplicity for p in self.entries)

    @property
    def locations(self) -> np.ndarray:
        return np.array([p.location for p in self.entries], dtype=complex)

    @property
    def multiplicities(self) -> np.ndarray:
        return np.array([p.multiplicity for p in self.entries], dtype=int)

    def as_dict(self) -> dict[complex, int]:
        return {p.location: p.multiplicity for p in self.entries}


def reflect_circle(R: RationalFunction, r: float = 1.0) -> PoleSet:
    """Poles of ``R(z) * conj(R(r**2/conj(z)))`` inside ``|z| < r``.

    Outside poles are reflected to ``r**2/conj(z_k)``; a pole at infinity of
    order ``d`` lands at the origin with multiplicity ``d``.
    """
    if not r > 0:
        raise InvalidInput("radius must be positive")
    out = []
    for p in R.poles:
        z = p.location
        if abs(abs(z) - r) <= TAU_CONTOUR * r:
            raise PoleOnContour(f"pole {z} lies on the circle |z| = {r}")
        out.append((z if abs(z) < r else r * r / z.conjugate(), p.multiplicity))
    if R.infinite_multiplicity:
        out.append((0j, R.infinite_multiplicity))
    return PoleSet(merge_poles(out), "disc", float(r))


def reflect_axis(R: RationalFunction) -> PoleSet:
    """Poles of ``R(z) * conj(R(conj(z)))`` in the upper half-plane."""
    if not R.is_proper:
        raise NotProper("the real-axis formulas need a proper rational function")
    out = []
    for p in R.poles:
        z = p.location
        if abs(z.imag) <= TAU_CONTOUR * max(1.0, abs(z.real)):
            raise PoleOnContour(f"pole {z} lies on the real axis")
        out.append((z if z.imag > 0 else z.conjugate(), p.multiplicity))
    return PoleSet(merge_poles(out), "upper")


def _check_off_semiaxis(z: complex) -> None:
    if abs(z) <= TAU_CONTOUR or (z.real > 0 and abs(z.imag) <= TAU_CONTOUR * abs(z)):
        raise PoleOnSemiaxis(f"pole {z} lies on the semiaxis [0, inf)")


def semiaxis_lift(R: RationalFunction) -> PoleSet:
    """Upper half-plane poles of ``R(z**2) * conj(R(conj(z)**2))``.

    A pole ``r e^{i phi}``, ``0 < phi < 2 pi``, gives ``sqrt(r) e^{i phi/2}`` and
    ``-sqrt(r) e^{-i phi/2}``, both with the original multiplicity.
    """
    if not R.is_proper:
        raise NotProper("the semiaxis formulas need a proper rational function")
    out = []
    for p in R.poles:
        z = p.location
        _check_off_semiaxis(z)
        phi = cmath.phase(z) % (2 * math.pi)
        s = math.sqrt(abs(z)) * cmath.exp(0.5j * phi)
        out.append((s, p.multiplicity))
        out.append((-s.conjugate(), p.multiplicity))
    return PoleSet(merge_poles(out), "upper")


def zhukovsky_inner_root(w: complex) -> complex:
    """The root of ``(z + 1/z)/2 = w`` inside the unit disc (``w`` off [-1, 1])."""
    w = complex(w)
    s = cmath.sqrt(w * w - 1)
    if (w.conjugate() * s).real < 0:
        s = -s
    return 1.0 / (w + s)


def _distance_to_segment(w: complex) -> float:
    x = min(max(w.real, -1.0), 1.0)
    return abs(w - x)


def segment_lift(R: RationalFunction) -> PoleSet:
    """Unit-disc poles of ``R1(z) * conj(R1(1/conj(z)))`` with ``R1(z) = R((z + 1/z)/2)``.

    Each finite pole ``w`` contributes its inner Zhukovsky root ``z_w`` and the
    reflection ``conj(z_w)`` of its outer root; a pole at infinity of order ``d``
    contributes the origin with multiplicity ``2d``. The total is ``2 deg R``.
    """
    out = []
    for p in R.poles:
        w = p.location
        if _distance_to_segment(w) <= TAU_CONTOUR:
            raise PoleOnSegment(f"pole {w} lies on the segment [-1, 1]")
        z = zhukovsky_inner_root(w)
        if abs(abs(z) - 1.0) <= TAU_CONTOUR:
            raise PoleOnSegment(f"pole {w} is numerically on the segment [-1, 1]")
        out.append((z, p.multiplicity))
        out.append((z.conjugate(), p.multiplicity))
    if R.infinite_multiplicity:
        out.append((0j, 2 * R.infinite_multiplicity))
    return PoleSet(merge_poles(out), "disc", 1.0)


@dataclass(frozen=True)
class SimplePartialFraction:
    """``rho(z) = sum_k 1/(z - z_k)``; repeated poles are allowed."""

    poles: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(complex(z) for z in self.poles)
        if not pts:
            raise InvalidInput("a simple partial fraction needs at least one pole")
        if not all(math.isfinite(z.real) and math.isfinite(z.imag) for z in pts):
            raise InvalidInput("poles must be finite")
        object.__setattr__(self, "poles", pts)

    @property
    def degree(self) -> int:
        return len(self.poles)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return np.sum(1.0 / (z[..., None] - np.asarray(self.poles)), axis=-1)

    def scaled(self, c: float) -> "SimplePartialFraction":
        return SimplePartialFraction(tuple(c * z for z in self.poles))

    @property
    def side(self) -> int:
        """+1 if every pole is in the upper half-plane, -1 if all lower, 0 otherwise."""
        im = np.imag(self.poles)
        if np.all(im > 0):
            return 1
        if np.all(im < 0):
            return -1
        return 0


def spf_to_rational(rho: SimplePartialFraction) -> RationalFunction:
    """Collapse ``sum 1/(z - z_k)`` into one rational function with simple poles."""
    merged = merge_poles((z, 1) for z in rho.poles)
    locs = [p.location for p in merged]
    num = np.zeros(len(locs), dtype=complex)
    P = np.polynomial.polynomial
    for j, p in enumerate(merged):
        others = locs[:j] + locs[j + 1:]
        term = P.polyfromroots(others) if others else np.array([1.0])
        num[: term.size] += p.multiplicity * term
    return RationalFunction(num, [(z, 1) for z in locs])
