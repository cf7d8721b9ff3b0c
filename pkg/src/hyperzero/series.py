"""Truncated power series and division by ``w - alpha``.

For ``f = sum w^n a_n`` and ``|alpha|`` below the convergence radius,
``f = (w - alpha) * g + f(alpha)`` with

    b_n = alpha^(-1-n) (f(alpha) - sum_{j<=n} alpha^j a_j)

The difference in parentheses cancels badly once the partial sums approach
``f(alpha)``, so it is accumulated with exactly rounded summation
(:func:`math.fsum`) component by component.

A series known only up to order N has ``f(alpha)`` replaced by the (exactly
rounded) order-N partial sum.  The neglected tail is of order
``|alpha / R|^(N + 1)`` and reaches ``b_n`` multiplied by ``|alpha|^(-1-n)``;
it is not compensated.  When the exact sum is known it can be passed as
``value``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RadiusViolation
from .octonion import Octonion, as_octonion, inverse, omul, onorm_sq
from .poly import OctPoly, powers, star_array

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``a_0 .. a_N`` of a power series with radius ``radius``."""

    coeffs: np.ndarray
    radius: float = math.inf

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1, 8)
        if len(c) == 0:
            raise ValueError("a series needs at least the coefficient a_0")
        if not (self.radius > 0):
            raise ValueError("convergence radius must be positive")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_poly(cls, f: OctPoly, order: int | None = None, radius: float = math.inf) -> "TruncatedSeries":
        order = max(f.degree, 0) if order is None else order
        c = np.zeros((order + 1, 8))
        n = min(len(f.coeffs), order + 1)
        c[:n] = f.coeffs[:n]
        return cls(c, radius)

    @classmethod
    def geometric(cls, order: int = DEFAULT_ORDER, ratio=1.0) -> "TruncatedSeries":
        """``sum w^n q^n`` for a real ratio q; radius ``1/|q|``."""
        q = float(ratio)
        c = np.zeros((order + 1, 8))
        c[:, 0] = q ** np.arange(order + 1)
        return cls(c, math.inf if q == 0 else 1.0 / abs(q))

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], self.radius)

    def coeff(self, n: int) -> Octonion:
        return Octonion(self.coeffs[n]) if n <= self.order else Octonion(0.0)

    def partial_sum(self, x) -> Octonion:
        terms = omul(powers(x, self.order), self.coeffs)
        return Octonion([math.fsum(col) for col in terms.T])

    def as_poly(self) -> OctPoly:
        return OctPoly(self.coeffs)

    def to_json(self):
        return {
            "coeffs": self.coeffs.tolist(),
            "order": self.order,
            "radius": "inf" if math.isinf(self.radius) else self.radius,
        }

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        radius = data.get("radius", "inf")
        radius = math.inf if radius in ("inf", None) else float(radius)
        c = np.array(data["coeffs"], dtype=float).reshape(-1, 8)
        order = int(data.get("order", len(c) - 1))
        padded = np.zeros((order + 1, 8))
        padded[: min(order + 1, len(c))] = c[: order + 1]
        return cls(padded, radius)


def series_star_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller of the two orders."""
    order = min(f.order, g.order)
    prod = star_array(f.coeffs[: order + 1], g.coeffs[: order + 1])[: order + 1]
    return TruncatedSeries(prod, min(f.radius, g.radius))


def series_divide_linear(
    f: TruncatedSeries,
    alpha,
    order: int | None = None,
    value=None,
    method: str = "closed",
) -> tuple[TruncatedSeries, Octonion]:
    """Divide by ``w - alpha``: ``f = (w - alpha) * g + r`` with ``r = f(alpha)``.

    ``value`` is the exact ``f(alpha)`` when known; otherwise the partial sum
    through ``order`` is used.  ``method="recurrence"`` runs
    ``b_n = alpha^-1 (b_{n-1} - a_n)`` from ``b_{-1} = f(alpha)`` instead of the
    closed formula; it amplifies rounding by ``|alpha|^-1`` per step.
    """
    alpha = as_octonion(alpha)
    if order is not None:
        f = f.truncate(order) if order <= f.order else TruncatedSeries.from_poly(f.as_poly(), order, f.radius)
    if alpha.norm() >= f.radius:
        raise RadiusViolation(f"|alpha| = {alpha.norm():g} is not inside the radius {f.radius:g}")
    N = f.order
    if alpha.is_zero():
        shifted = np.zeros((N + 1, 8))
        shifted[:N] = f.coeffs[1:]
        r = Octonion(f.coeffs[0]) if value is None else as_octonion(value)
        return TruncatedSeries(shifted, f.radius), r

    terms = omul(powers(alpha, N), f.coeffs)
    r = Octonion([math.fsum(col) for col in terms.T]) if value is None else as_octonion(value)
    inv = inverse(alpha).coords
    b = np.zeros((N + 1, 8))
    if method == "closed":
        scale = inv
        for n in range(N + 1):
            tail = [math.fsum([r.coords[k], *(-terms[: n + 1, k])]) for k in range(8)]
            b[n] = omul(scale, np.array(tail))
            scale = omul(inv, scale)
    elif method == "recurrence":
        prev = r.coords
        for n in range(N + 1):
            b[n] = omul(inv, prev - f.coeffs[n])
            prev = b[n]
    else:
        raise ValueError(f"unknown method {method!r}")
    return TruncatedSeries(b, f.radius), r


def reconstruction_error(f: TruncatedSeries, alpha, g: TruncatedSeries, r, upto: int | None = None) -> float:
    """Largest coefficient error of ``(w - alpha) * g + r`` against ``f``."""
    upto = min(f.order, g.order) if upto is None else upto
    lin = np.zeros((2, 8))
    lin[0] = -as_octonion(alpha).coords
    lin[1, 0] = 1.0
    recon = star_array(lin, g.coeffs)[: upto + 1]
    recon[0] += as_octonion(r).coords
    diff = recon - f.coeffs[: upto + 1]
    return float(np.sqrt(onorm_sq(diff)).max())


@dataclass(frozen=True)
class TailBound:
    rho: float
    n_rho: int
    max_ratio: float
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self):
        return {"rho": self.rho, "n_rho": self.n_rho, "max_ratio": self.max_ratio, "violations": list(self.violations)}


def tail_bound_check(
    f: TruncatedSeries,
    alpha,
    x_norm: float,
    rho=None,
    g: TruncatedSeries | None = None,
    value=None,
) -> list[TailBound]:
    """Check ``|x|^n |b_n| <= (|x| / rho)^n / (rho - |alpha|)`` for ``n >= n_rho``.

    ``n_rho`` is the first index after which ``|a_j| <= rho^-j`` holds for every
    stored coefficient.  ``rho`` may be a number, a sequence, or None for five
    values spread over ``(max(|alpha|, |x|), radius)``.  Pass ``g`` to audit
    quotient coefficients computed elsewhere.
    """
    a_norm = as_octonion(alpha).norm()
    lo = max(a_norm, x_norm)
    if rho is None:
        hi = f.radius if math.isfinite(f.radius) else lo + 10.0
        rhos = list(np.linspace(lo, hi, 7)[1:-1])
    else:
        rhos = list(np.atleast_1d(rho).astype(float))
    if g is None:
        g, _ = series_divide_linear(f, alpha, value=value)
    a_sizes = np.sqrt(onorm_sq(f.coeffs))
    b_sizes = np.sqrt(onorm_sq(g.coeffs))
    out = []
    for p in rhos:
        if not lo < p < f.radius:
            raise ValueError(f"rho = {p:g} must lie strictly between {lo:g} and the radius {f.radius:g}")
        j = np.arange(len(a_sizes))
        over = np.nonzero(a_sizes > p ** (-j.astype(float)))[0]
        n_rho = int(over[-1]) if len(over) else 0
        worst = 0.0
        bad = []
        for n in range(n_rho, len(b_sizes)):
            lhs = x_norm**n * b_sizes[n]
            rhs = (x_norm / p) ** n / (p - a_norm)
            ratio = lhs / rhs if rhs > 0 else (0.0 if lhs == 0 else math.inf)
            worst = max(worst, ratio)
            if ratio > 1.0 + 1e-12:
                bad.append(n)
        out.append(TailBound(float(p), n_rho, worst, tuple(bad)))
    return out
