"""Blaschke products and the positive weight ``mu`` on each contour.

Circle of radius ``r`` (also used for the segment after the Zhukovsky map)::

    B(z)  = prod (r (z - z_k) / (r**2 - z conj(z_k)))**n_k
    mu(z) = sum n_k (r**2 - |z_k|**2) / |z - z_k|**2

Real axis (also used for the semiaxis after ``x -> x**2``)::

    B(x)  = prod ((x - z_k) / (x - conj(z_k)))**n_k
    mu(x) = sum n_k Im(z_k) / |x - conj(z_k)|**2

On the contour every factor has a continuous argument given by one
``atan2`` that cannot wrap, so the unwrapped phase is available in closed form:

* circle, ``zeta = r e^{i theta}``, ``a_k = z_k / r``:
  ``arg(zeta B^m) = (1 + m n) theta + 2 m sum n_k arg(1 - a_k e^{-i theta})``,
  where ``Re(1 - a_k e^{-i theta}) > 0``;
* axis, ``x = tan t``: ``arg B^m = -2 m sum n_k atan2(Im z_k cos t, sin t - Re z_k cos t)``,
  which increases from ``-2 pi m n`` to ``0`` on ``[-pi/2, pi/2]``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import EvalAtPole, OffContour, PoleSetEmpty
from .ratfun import INF, TAU_CONTOUR, TAU_POLE, PoleSet

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _ipow(w: np.ndarray, k: int) -> np.ndarray:
    """Integer power by repeated squaring (keeps unit modulus tight)."""
    result = np.ones_like(w)
    base = w.copy()
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def golden_section_max(f, lo, hi, tol=1e-12, maxiter=200):
    """Vectorised golden-section search for the maximum of ``f`` on each ``[lo, hi]``."""
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if np.all(b - a <= tol * np.maximum(1.0, np.abs(a))):
            break
        left = fc >= fd
        # keep [a, d] where left, [c, b] otherwise
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        d_new = np.where(left, c, a + _INVPHI * (b - a))
        c_new = np.where(left, b - _INVPHI * (b - a), d)
        fd_new = np.where(left, fc, np.nan)
        fc_new = np.where(left, np.nan, fd)
        c, d = c_new, d_new
        need_c = np.isnan(fc_new)
        need_d = np.isnan(fd_new)
        if np.any(need_c):
            fc_new[need_c] = f(c[need_c])
        if np.any(need_d):
            fd_new[need_d] = f(d[need_d])
        fc, fd = fc_new, fd_new
    x = np.where(fc >= fd, c, d)
    return x, np.maximum(fc, fd)


def sample_and_refine(f, grid, periodic=False):
    """Maximise ``f`` by dense sampling followed by golden-section refinement.

    Every local maximum of the samples is bracketed by its neighbours and
    refined. The result is never below the best sample. Returns
    ``(argmax, max)``.
    """
    grid = np.unique(np.asarray(grid, dtype=float))
    vals = f(grid)
    if periodic:
        period = 2 * math.pi
        prev_v, next_v = np.roll(vals, 1), np.roll(vals, -1)
        prev_x = np.roll(grid, 1)
        prev_x[0] -= period
        next_x = np.roll(grid, -1)
        next_x[-1] += period
    else:
        prev_v = np.concatenate(([-np.inf], vals[:-1]))
        next_v = np.concatenate((vals[1:], [-np.inf]))
        prev_x = np.concatenate(([grid[0]], grid[:-1]))
        next_x = np.concatenate((grid[1:], [grid[-1]]))
    peaks = np.flatnonzero((vals >= prev_v) & (vals >= next_v))
    best = int(np.argmax(vals))
    best_x, best_v = grid[best], vals[best]
    if peaks.size:
        xs, vs = golden_section_max(f, prev_x[peaks], next_x[peaks])
        i = int(np.argmax(vs))
        if vs[i] > best_v:
            best_x, best_v = xs[i], vs[i]
    if periodic:
        best_x = best_x % (2 * math.pi)
    return float(best_x), float(best_v)


def _check_nonempty(pole_set: PoleSet) -> None:
    if not pole_set.entries:
        raise PoleSetEmpty("the pole set is empty; no Blaschke product can be formed")


class BlaschkeCircle:
    """Blaschke product and weight for a pole set inside the disc ``|z| < r``.

    ``domain`` is ``"circle"`` or ``"segment"`` (the segment case is the unit
    circle with the Zhukovsky-lifted pole set).
    """

    def __init__(self, pole_set: PoleSet, domain: str = "circle"):
        if pole_set.region != "disc":
            raise ValueError("BlaschkeCircle needs a disc pole set")
        _check_nonempty(pole_set)
        self.pole_set = pole_set
        self.r = float(pole_set.radius)
        self.domain = domain
        self.z = pole_set.locations
        self.n = pole_set.multiplicities
        self.a = self.z / self.r
        self._num_w = self.n * (self.r ** 2 - np.abs(self.z) ** 2)

    @property
    def total(self) -> int:
        return int(self.n.sum())

    def node_count(self, m: int) -> int:
        return m * self.total + 1

    def __call__(self, z, m: int = 1):
        """``B(z)**m`` evaluated factor by factor."""
        z = np.asarray(z, dtype=complex)
        r = self.r
        den = r * r - z[..., None] * self.z.conj()
        if np.any(np.abs(den) <= TAU_POLE * r * r):
            raise EvalAtPole("point is a pole of the Blaschke product")
        fac = r * (z[..., None] - self.z) / den
        out = np.ones(z.shape, dtype=complex)
        for j, k in enumerate(self.n):
            out = out * _ipow(fac[..., j], int(k) * m)
        return out

    def point(self, theta):
        return self.r * np.exp(1j * np.asarray(theta, dtype=float))

    def mu_theta(self, theta):
        zeta = self.point(theta)
        d = np.abs(zeta[..., None] - self.z) ** 2
        return np.sum(self._num_w / d, axis=-1)

    def mu(self, zeta):
        zeta = np.asarray(zeta, dtype=complex)
        if np.any(np.abs(np.abs(zeta) - self.r) > TAU_CONTOUR * self.r):
            raise OffContour(f"point is not on the circle |z| = {self.r}")
        return self.mu_theta(np.angle(zeta))

    def phase(self, theta, m: int = 1):
        """Continuous argument of ``zeta B(zeta)**m`` at ``zeta = r e^{i theta}``."""
        theta = np.asarray(theta, dtype=float)
        w = 1.0 - self.a * np.exp(-1j * theta[..., None])
        corr = np.sum(self.n * np.arctan2(w.imag, w.real), axis=-1)
        return (1 + m * self.total) * theta + 2 * m * corr

    def phase_derivative(self, theta, m: int = 1):
        """``d/dtheta`` of :meth:`phase`, equal to ``1 + m mu``."""
        return 1.0 + m * self.mu_theta(theta)

    def mu_sup(self):
        """``(theta_max, sup mu)`` over the circle."""
        npts = max(64 * self.total, 512)
        grid = np.concatenate((np.linspace(0, 2 * math.pi, npts, endpoint=False),
                               np.angle(self.z[np.abs(self.z) > 0]) % (2 * math.pi)))
        return sample_and_refine(self.mu_theta, grid, periodic=True)


class BlaschkeAxis:
    """Blaschke product and weight for a pole set in the upper half-plane.

    ``domain`` is ``"axis"`` or ``"semiaxis"`` (the semiaxis case uses the
    lifted pole set on the whole line).
    """

    def __init__(self, pole_set: PoleSet, domain: str = "axis"):
        if pole_set.region != "upper":
            raise ValueError("BlaschkeAxis needs an upper half-plane pole set")
        _check_nonempty(pole_set)
        self.pole_set = pole_set
        self.domain = domain
        self.z = pole_set.locations
        self.n = pole_set.multiplicities
        self._w = self.n * self.z.imag

    @property
    def total(self) -> int:
        return int(self.n.sum())

    @property
    def moment(self) -> float:
        """``sum n_k Im z_k``: ``mu(x) ~ moment / x**2`` as ``|x| -> inf``."""
        return float(self._w.sum())

    def node_count(self, m: int) -> int:
        return m * self.total

    def __call__(self, x, m: int = 1):
        x = np.asarray(x, dtype=complex)
        den = x[..., None] - self.z.conj()
        if np.any(np.abs(den) <= TAU_POLE * np.maximum(1.0, np.abs(self.z))):
            raise EvalAtPole("point is a pole of the Blaschke product")
        fac = (x[..., None] - self.z) / den
        out = np.ones(x.shape, dtype=complex)
        for j, k in enumerate(self.n):
            out = out * _ipow(fac[..., j], int(k) * m)
        return out

    def mu(self, x):
        x = np.asarray(x)
        if np.iscomplexobj(x):
            if np.any(np.abs(x.imag) > TAU_CONTOUR * np.maximum(1.0, np.abs(x.real))):
                raise OffContour("point is not on the real axis")
            x = x.real
        x = x.astype(float)
        d = (x[..., None] - self.z.real) ** 2 + self.z.imag ** 2
        return np.sum(self._w / d, axis=-1)

    def mu_t(self, t):
        """``mu(tan t)``; zero at ``t = +-pi/2``."""
        t = np.asarray(t, dtype=float)
        c, s = np.cos(t), np.sin(t)
        d = (s[..., None] - self.z.real * c[..., None]) ** 2 + (self.z.imag * c[..., None]) ** 2
        return np.sum(self._w * c[..., None] ** 2 / d, axis=-1)

    def phase_t(self, t, m: int = 1):
        """Continuous argument of ``B(tan t)**m`` on ``[-pi/2, pi/2]``."""
        t = np.asarray(t, dtype=float)
        c, s = np.cos(t)[..., None], np.sin(t)[..., None]
        ang = np.arctan2(self.z.imag * c, s - self.z.real * c)
        return -2.0 * m * np.sum(self.n * ang, axis=-1)

    def phase_t_derivative(self, t, m: int = 1):
        """``d/dt`` of :meth:`phase_t`: ``2 m mu(tan t) sec(t)**2``."""
        t = np.asarray(t, dtype=float)
        c, s = np.cos(t), np.sin(t)
        d = (s[..., None] - self.z.real * c[..., None]) ** 2 + (self.z.imag * c[..., None]) ** 2
        return 2.0 * m * np.sum(self._w / d, axis=-1)

    def phase(self, x, m: int = 1):
        x = np.asarray(x, dtype=float)
        ang = np.arctan2(self.z.imag, x[..., None] - self.z.real)
        return -2.0 * m * np.sum(self.n * ang, axis=-1)

    def phase_derivative(self, x, m: int = 1):
        """``d/dx arg B(x)**m = 2 m mu(x)``."""
        return 2.0 * m * self.mu(x)

    def mu_sup(self):
        """``(x_max, sup mu)`` over the real line."""
        npts = max(64 * self.total, 512)
        grid = np.concatenate((np.linspace(-math.pi / 2, math.pi / 2, npts)[1:-1],
                               np.arctan(self.z.real)))
        t, v = sample_and_refine(self.mu_t, grid)
        return math.tan(t), v


def eval_blaschke(B, z, m: int = 1) -> complex:
    return complex(B(z, m))


def eval_mu(B, point) -> float:
    """Weight at a contour point; the axis weight at infinity is 0."""
    if point is INF:
        if isinstance(B, BlaschkeAxis):
            return 0.0
        raise OffContour("infinity is not on a circle")
    if isinstance(B, BlaschkeCircle):
        return float(B.mu(complex(point)))
    return float(B.mu(point))


def mu_sup(B) -> float:
    return B.mu_sup()[1]


def phase_derivative(B, m: int, param) -> float:
    """``1 + m mu(r e^{i theta})`` on a circle, ``2 m mu(x)`` on the axis."""
    if isinstance(B, BlaschkeCircle):
        return float(B.phase_derivative(param, m))
    if param is INF:
        raise OffContour("phase derivative is not defined at infinity")
    return float(B.phase_derivative(np.asarray(param, dtype=float), m))
