"""Crossing coefficients and the winding-detection integral, closed and numeric.

This is the only floating-point surface of the package.  A crossing path
runs ``dz(t) = lambda(t) * exp(i*theta(t))`` over ``t`` in ``[0, 1]`` with
``lambda(0) = 1``, ``lambda(1) = lambda``, ``theta(0) = 0`` and
``theta(1) = s*pi`` where ``s`` is ``+1`` for a positive crossing type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad


class ConvergenceError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance."""


TYPES = {"plus": 1, "minus": -1}
ORIENTS = {"same": 1, "opposite": -1}


@dataclass(frozen=True)
class CrossingPath:
    m: int
    lam: float = 1.0
    sigma: int = 1
    xtype: int = 1
    profile: str = "loglinear"

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("degree must be at least 1")
        if not self.lam > 0:
            raise ValueError(f"lambda must be positive, got {self.lam}")
        if self.sigma not in (1, -1) or self.xtype not in (1, -1):
            raise ValueError("orientation and type signs must be +1 or -1")
        if self.profile not in ("loglinear", "smooth"):
            raise ValueError(f"unknown profile {self.profile!r}")

    def dlog(self, t: float) -> complex:
        """Derivative of ``log dz(t)``."""
        ll = math.log(self.lam)
        if self.profile == "loglinear":
            return complex(ll, self.xtype * math.pi)
        g = 6.0 * t * (1.0 - t)  # derivative of 3t^2 - 2t^3
        return complex(ll * g, self.xtype * math.pi)


def crossing_coefficient_closed(p: CrossingPath) -> complex:
    w = p.sigma * complex(p.xtype / 2, -math.log(p.lam) / (2 * math.pi) + 0.0)
    return w ** p.m / math.factorial(p.m)


def crossing_coefficient_exact_real(m: int, sigma: int = 1, xtype: int = 1):
    """Exact value at ``lambda = 1``: ``(sigma*xtype)**m / (m! * 2**m)``."""
    return Fraction((sigma * xtype) ** m, math.factorial(m) * 2 ** m)


def _quad(f, a: float, b: float, tol: float, points=None) -> complex:
    kw = dict(epsabs=tol * 1e-3, epsrel=tol, limit=200, complex_func=True)
    if points:
        kw["points"] = [x for x in points if a < x < b] or None
    val, err = quad(f, a, b, **kw)
    scale = max(abs(val), 1.0)
    if abs(err) > tol * scale:
        raise ConvergenceError(f"quadrature error {abs(err):.3g} above {tol:.3g}")
    return complex(val)


def simplex_integral_numeric(p: CrossingPath, tol: float = 1e-9) -> complex:
    """Iterated integral over ``0 < t_1 < ... < t_m < 1`` of ``prod omega(t_k)``.

    ``omega = sigma/(2 pi i) dlog dz``.  The antiderivative chain
    ``G_k(t) = int_0^t omega(u) G_{k-1}(u) du`` is evaluated by nested
    adaptive quadrature, one level per chord.
    """
    if p.m > 4:
        raise ValueError("nested quadrature is limited to m <= 4")
    c = p.sigma / (2j * math.pi)

    def omega(t: float) -> complex:
        return c * p.dlog(t)

    def chain(k: int, t: float) -> complex:
        if k == 0:
            return 1.0
        if t <= 0.0:
            return 0.0
        return _quad(lambda u: omega(u) * chain(k - 1, u), 0.0, t, tol)

    return chain(p.m, 1.0)


# ---------------------------------------------------------------- detect


@dataclass(frozen=True)
class WindingProfile:
    """Piecewise linear winding angle.

    On ``[t_{k-1}, t_k]`` the angle grows by ``mu * eps_k * n_k * pi``.
    """

    groups: tuple[tuple[int, int], ...]
    t: tuple[float, ...]
    mu: int = 1
    overall: int = 1

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        object.__setattr__(self, "t", tuple(float(x) for x in self.t))
        if len(self.t) != len(self.groups) + 1:
            raise ValueError("need one more breakpoint than groups")
        if any(b <= a for a, b in zip(self.t, self.t[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        for eps, n in self.groups:
            if eps not in (1, -1) or n < 1:
                raise ValueError(f"bad group ({eps}, {n})")
        if self.mu not in (1, -1) or self.overall not in (1, -1):
            raise ValueError("mu and overall must be +1 or -1")

    def start_angles(self) -> list[float]:
        acc, out = 0, []
        for eps, n in self.groups:
            out.append(self.mu * math.pi * acc)
            acc += eps * n
        return out

    def theta(self, x: float) -> float:
        starts = self.start_angles()
        for k, (eps, n) in enumerate(self.groups):
            a, b = self.t[k], self.t[k + 1]
            if x <= b or k == len(self.groups) - 1:
                return starts[k] + self.mu * math.pi * eps * n * (x - a) / (b - a)
        raise AssertionError

    def dtheta(self, x: float) -> float:
        for k, (eps, n) in enumerate(self.groups):
            a, b = self.t[k], self.t[k + 1]
            if x <= b or k == len(self.groups) - 1:
                return self.mu * math.pi * eps * n / (b - a)
        raise AssertionError


@dataclass(frozen=True)
class SeparationPath:
    """Positive separation sampled at knots and interpolated log-linearly."""

    samples: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(t), float(v)) for t, v in self.samples)
        if len(pts) < 2:
            raise ValueError("need at least two samples")
        if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("sample times must be strictly increasing")
        if any(v <= 0 for _, v in pts):
            raise ValueError("separation must stay positive")
        object.__setattr__(self, "samples", pts)

    @property
    def knots(self) -> np.ndarray:
        return np.array([t for t, _ in self.samples])

    @property
    def logs(self) -> np.ndarray:
        return np.log([v for _, v in self.samples])

    def log(self, x: float) -> float:
        return float(np.interp(x, self.knots, self.logs))

    def dlog(self, x: float) -> float:
        ts, ls = self.knots, self.logs
        k = int(np.searchsorted(ts, x, side="right")) - 1
        k = min(max(k, 0), len(ts) - 2)
        return float((ls[k + 1] - ls[k]) / (ts[k + 1] - ts[k]))

    def covers(self, a: float, b: float) -> bool:
        return self.samples[0][0] <= a and b <= self.samples[-1][0]


def _check(w: WindingProfile, zp: SeparationPath) -> None:
    if not zp.covers(w.t[0], w.t[-1]):
        raise ValueError("separation samples must cover the winding breakpoints")


def _mean_excess(zp: SeparationPath, a: float, b: float, ref: float) -> float:
    """``(1/(b-a)) * int_a^b (log zp - ref)``, exact for piecewise linear logs."""
    inner = [t for t in zp.knots if a < t < b]
    xs = [a, *inner, b]
    ds = [zp.log(x) - ref for x in xs]
    total = sum((x1 - x0) * (d0 + d1) / 2 for x0, x1, d0, d1 in zip(xs, xs[1:], ds, ds[1:]))
    return total / (b - a)


def _prefactor(w: WindingProfile) -> complex:
    return w.overall / ((2 * math.pi) ** 2 * 1j)


def detect_integral_closed(w: WindingProfile, zp: SeparationPath) -> complex:
    """``overall/((2 pi)^2 i) * int dlog zp(t) * theta(t) dt`` summed per group.

    On group ``k`` with start angle ``A_k`` and increment ``B_k`` the integral
    is ``A_k (log z_k - log z_{k-1}) + B_k (log z_k - mean_k log zp)``.
    """
    _check(w, zp)
    starts = w.start_angles()
    total = 0.0
    for k, (eps, n) in enumerate(w.groups):
        a, b = w.t[k], w.t[k + 1]
        la, lb = zp.log(a), zp.log(b)
        A = starts[k]
        B = w.mu * math.pi * eps * n
        total += A * (lb - la) - B * _mean_excess(zp, a, b, lb)
    return _prefactor(w) * total


def detect_group_weights(w: WindingProfile, zp: SeparationPath) -> list[complex]:
    """Coefficients ``c_k`` with ``I = sum_k eps_k n_k c_k``; the closed form is linear."""
    _check(w, zp)
    top = zp.log(w.t[-1])
    out = []
    for k in range(len(w.groups)):
        a, b = w.t[k], w.t[k + 1]
        out.append(_prefactor(w) * w.mu * math.pi * (top - zp.log(b) - _mean_excess(zp, a, b, zp.log(b))))
    return out


def detect_integral_numeric(w: WindingProfile, zp: SeparationPath, tol: float = 1e-10) -> complex:
    """Two-level quadrature: inner ``Theta(t') = int theta'``, outer ``int dlog zp * Theta``."""
    _check(w, zp)
    t0, t1 = w.t[0], w.t[-1]
    breaks = sorted(set(w.t) | {t for t in zp.knots if t0 < t < t1})

    def Theta(x: float) -> float:
        if x <= t0:
            return 0.0
        return _quad(w.dtheta, t0, x, tol, points=breaks).real

    total = 0.0
    for a, b in zip(breaks, breaks[1:]):
        total += _quad(lambda x: zp.dlog(x) * Theta(x), a, b, tol).real
    return _prefactor(w) * total


def profile_from_json(obj) -> tuple[WindingProfile, SeparationPath]:
    w = WindingProfile(
        tuple(tuple(g) for g in obj["groups"]), tuple(obj["t"]),
        obj.get("mu", 1), obj.get("overall", 1),
    )
    return w, SeparationPath(tuple(tuple(s) for s in obj["sep"]))


def complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}
