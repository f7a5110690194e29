"""Variable quadrature nodes ("notches").

Circle: the ``m n + 1`` roots of ``zeta B(zeta)**m = r e^{i phi}`` on ``|zeta| = r``.
Axis: the ``m n`` roots of ``B(x)**m = e^{i phi}`` on the extended real line;
when ``phi = 0 (mod 2 pi)`` one of them is the point at infinity.

Both phase functions are strictly increasing with a closed-form continuous
branch (see :mod:`notchquad.blaschke`), so each root is the unique solution of
``phase = level`` for one level of the arithmetic progression ``phi + 2 pi j``.
Levels are bracketed on a sampling grid and polished by Newton's method
safeguarded with bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .blaschke import BlaschkeAxis, BlaschkeCircle
from .errors import ConvergenceFailure, InvalidInput
from .ratfun import INF, PoleSet

TWO_PI = 2 * math.pi
PHASE_TOL = 1e-12
MAX_NEWTON = 60
INF_PHI_TOL = 1e-13


def _solve_levels(phase, dphase, lo, hi, levels, grid_size):
    """Solve ``phase(x) = level`` for each level of an increasing ``phase``."""
    levels = np.asarray(levels, dtype=float)
    if levels.size == 0:
        return levels.copy()
    grid = np.linspace(lo, hi, grid_size)
    vals = phase(grid)
    idx = np.clip(np.searchsorted(vals, levels, side="right") - 1, 0, grid_size - 2)
    a, b = grid[idx].copy(), grid[idx + 1].copy()
    fa, fb = vals[idx] - levels, vals[idx + 1] - levels
    span = np.where(fb - fa > 0, fb - fa, 1.0)
    x = np.clip(a - fa * (b - a) / span, a, b)
    done = np.zeros(levels.size, dtype=bool)
    tol = PHASE_TOL * np.maximum(1.0, np.abs(levels) / TWO_PI)
    for _ in range(MAX_NEWTON):
        f = phase(x) - levels
        done = np.abs(f) <= tol
        done |= (b - a) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(x))
        if np.all(done):
            return x
        a = np.where(f < 0, x, a)
        b = np.where(f > 0, x, b)
        step = x - f / dphase(x)
        inside = (step > a) & (step < b)
        x = np.where(done, x, np.where(inside, step, 0.5 * (a + b)))
    f = phase(x) - levels
    if np.all(np.abs(f) <= 10 * tol):
        return x
    raise ConvergenceFailure(f"notch polishing did not converge (max phase residual {np.max(np.abs(f)):.3e})")


@dataclass(frozen=True)
class NotchSet:
    """Nodes for one ``(domain, m, phi)``.

    ``params`` are contour parameters of the finite nodes: ``theta`` on a
    circle, ``x`` on the line. ``infinite`` marks the extra node at infinity
    (axis domains, ``phi = 0 mod 2 pi``), which is listed last in :attr:`nodes`.
    """

    domain: str
    m: int
    phi: float
    params: np.ndarray
    points: np.ndarray
    mu_values: np.ndarray
    residuals: np.ndarray
    infinite: bool = False
    x: np.ndarray | None = None
    radius: float | None = field(default=None, compare=False)

    @property
    def count(self) -> int:
        return int(self.points.size) + int(self.infinite)

    @property
    def nodes(self) -> list:
        out = list(self.points.tolist())
        if self.infinite:
            out.append(INF)
        return out

    def to_json(self) -> dict:
        nodes = []
        if self.domain in ("circle", "segment"):
            for k, th in enumerate(self.params):
                d = {"theta": float(th)}
                if self.x is not None:
                    d["x"] = float(self.x[k])
                nodes.append(d)
        else:
            nodes = [{"x": float(v)} for v in self.params]
            if self.infinite:
                nodes.append({"inf": True})
        out = {
            "domain": self.domain,
            "phi": float(self.phi),
            "m": int(self.m),
            "nodes": nodes,
            "mu": [float(v) for v in self.mu_values],
            "residual": [float(v) for v in self.residuals],
        }
        if self.radius is not None:
            out["r"] = float(self.radius)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "NotchSet":
        try:
            domain = data["domain"]
            nodes = data["nodes"]
            infinite = any(n.get("inf") for n in nodes)
            finite = [n for n in nodes if not n.get("inf")]
            r = data.get("r")
            if domain in ("circle", "segment"):
                params = np.array([n["theta"] for n in finite], dtype=float)
                rr = 1.0 if r is None else float(r)
                points = rr * np.exp(1j * params)
                x = np.array([n["x"] for n in finite], dtype=float) if finite and "x" in finite[0] else None
            else:
                params = np.array([n["x"] for n in finite], dtype=float)
                points = params.copy()
                x = None
            return cls(domain, int(data["m"]), float(data["phi"]), params, points,
                       np.array(data["mu"], dtype=float), np.array(data["residual"], dtype=float),
                       infinite, x, r)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed notch set JSON: {exc}") from exc


def _check_m(m):
    if int(m) != m or m < 1:
        raise InvalidInput(f"m must be a positive integer, got {m!r}")
    return int(m)


def circle_levels(B: BlaschkeCircle, m: int, phi: float) -> np.ndarray:
    """Targets ``phi + 2 pi j`` inside ``[Theta(0), Theta(0) + 2 pi N)``."""
    N = B.node_count(m)
    theta0 = float(B.phase(0.0, m))
    j0 = math.ceil((theta0 - phi) / TWO_PI)
    return phi + TWO_PI * (j0 + np.arange(N))


def notches_circle(pole_set: PoleSet, r: float | None = None, m: int = 1, phi: float = 0.0,
                   domain: str = "circle") -> NotchSet:
    """All ``m n + 1`` roots of ``zeta B(zeta)**m = r e^{i phi}``, ascending in ``theta``."""
    m = _check_m(m)
    if r is not None and pole_set.radius != r:
        raise InvalidInput("radius does not match the pole set")
    B = BlaschkeCircle(pole_set, domain)
    N = B.node_count(m)
    levels = circle_levels(B, m, float(phi))
    grid = max(16 * N, 64)
    theta = _solve_levels(lambda t: B.phase(t, m), lambda t: B.phase_derivative(t, m),
                          0.0, TWO_PI, levels, grid)
    theta = np.mod(theta, TWO_PI)
    order = np.argsort(theta, kind="stable")
    theta = theta[order]
    pts = B.r * np.exp(1j * theta)
    resid = np.abs(pts * B(pts, m) - B.r * np.exp(1j * phi))
    if theta.size != N:
        raise ConvergenceFailure("wrong number of notches")
    x = pts.real.copy() if domain == "segment" else None
    return NotchSet(domain, m, float(phi), theta, pts, B.mu_theta(theta), resid, False, x, B.r)


def notches_axis(pole_set: PoleSet, m: int = 1, phi: float = 0.0, domain: str = "axis") -> NotchSet:
    """All ``m n`` roots of ``B(x)**m = e^{i phi}`` on the extended line, ascending in ``x``."""
    m = _check_m(m)
    B = BlaschkeAxis(pole_set, domain)
    M = B.node_count(m)
    phi0 = float(phi) % TWO_PI
    infinite = phi0 <= INF_PHI_TOL or TWO_PI - phi0 <= INF_PHI_TOL
    if infinite:
        levels = -TWO_PI * np.arange(M - 1, 0, -1, dtype=float)
    else:
        levels = phi0 - TWO_PI * np.arange(M, 0, -1, dtype=float)
    grid = max(16 * M, 64)
    t = _solve_levels(lambda s: B.phase_t(s, m), lambda s: B.phase_t_derivative(s, m),
                      -math.pi / 2, math.pi / 2, levels, grid)
    t = np.sort(t)
    x = np.tan(t)
    resid = np.abs(B(x, m) - np.exp(1j * phi))
    if infinite:
        resid = np.append(resid, abs(1.0 - np.exp(1j * phi)))
    if x.size + int(infinite) != M:
        raise ConvergenceFailure("wrong number of notches")
    return NotchSet(domain, m, float(phi), x, x.copy(), B.mu(x), resid, infinite)


def notches_semiaxis(pole_set: PoleSet, m: int = 1, phi: float = 0.0) -> NotchSet:
    """Notches for a semiaxis-lifted pole set (``2 m n`` of them)."""
    return notches_axis(pole_set, m, phi, domain="semiaxis")


def notches_segment(pole_set: PoleSet, m: int = 1, phi: float = 0.0) -> NotchSet:
    """Notches of ``zeta B0(zeta)**m = e^{i phi}`` on the unit circle plus ``x_k = Re zeta_k``."""
    if pole_set.radius != 1.0:
        raise InvalidInput("segment notches need a unit-disc pole set")
    return notches_circle(pole_set, 1.0, m, phi, domain="segment")


def notches(domain: str, pole_set: PoleSet, m: int = 1, phi: float = 0.0) -> NotchSet:
    if domain == "circle":
        return notches_circle(pole_set, pole_set.radius, m, phi)
    if domain == "axis":
        return notches_axis(pole_set, m, phi)
    if domain == "semiaxis":
        return notches_semiaxis(pole_set, m, phi)
    if domain == "segment":
        return notches_segment(pole_set, m, phi)
    raise InvalidInput(f"unknown domain {domain!r}")


def prescribe_phi(domain: str, pole_set: PoleSet, point, m: int = 1) -> float:
    """The ``phi`` in ``[0, 2 pi)`` that makes ``point`` one of the notches.

    ``point`` is ``theta`` (or a complex contour point) for circle/segment and
    ``x`` (or ``INF``) for the axis domains.
    """
    m = _check_m(m)
    if domain in ("circle", "segment"):
        theta = float(np.angle(point)) if np.iscomplexobj(point) else float(point)
        B = BlaschkeCircle(pole_set, domain)
        return float(B.phase(theta, m)) % TWO_PI
    if domain in ("axis", "semiaxis"):
        if point is INF:
            return 0.0
        B = BlaschkeAxis(pole_set, domain)
        return float(B.phase(float(point), m)) % TWO_PI
    raise InvalidInput(f"unknown domain {domain!r}")
