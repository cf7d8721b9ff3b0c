"""Polynomials with real coefficients.

These hold the normal polynomial N(f) and the characteristic quadratics
w^2 - t w + n of conjugacy classes.  Coefficients are stored lowest degree
first, like every other polynomial in the package.
"""
from __future__ import annotations

import numpy as np

from .errors import DivisionByZeroPoly
from .tolerance import DEFAULT, Tolerances


def _trim(c: np.ndarray, cutoff: float = 0.0) -> np.ndarray:
    n = len(c)
    while n > 0 and abs(c[n - 1]) <= cutoff:
        n -= 1
    return c[:n]


class RealPoly:
    """A real polynomial ``sum(c[k] * w**k)``.

    Exact zero leading coefficients are dropped on construction, so the zero
    polynomial has an empty coefficient array and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if not np.all(np.isfinite(c)):
            raise ValueError("RealPoly coefficients must be finite")
        c = _trim(c)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def monomial(cls, degree: int, value: float = 1.0) -> "RealPoly":
        c = np.zeros(degree + 1)
        c[degree] = value
        return cls(c)

    @classmethod
    def from_roots(cls, roots) -> "RealPoly":
        """Monic polynomial with the given (conjugation-closed) roots."""
        c = np.array([1.0 + 0j])
        for z in roots:
            c = np.convolve(c, [-z, 1.0])
        if np.max(np.abs(c.imag), initial=0.0) > 1e-9 * np.max(np.abs(c)):
            raise ValueError("roots are not closed under conjugation")
        return cls(c.real)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> float:
        return float(self._c[-1]) if len(self._c) else 0.0

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def scale(self) -> float:
        """Largest coefficient magnitude, used to make tolerances relative."""
        return float(np.max(np.abs(self._c), initial=0.0))

    def trimmed(self, tol: Tolerances = DEFAULT, scale: float | None = None) -> "RealPoly":
        ref = self.scale() if scale is None else scale
        return RealPoly(_trim(self._c.copy(), tol.abs + tol.rel * ref))

    def deriv(self, order: int = 1) -> "RealPoly":
        c = self._c
        for _ in range(order):
            c = c[1:] * np.arange(1, len(c))
        return RealPoly(c)

    def __call__(self, x):
        # Horner; works for floats, complex numbers and Octonion values
        # (powers of one octonion associate).
        acc = 0.0
        for a in self._c[::-1]:
            acc = acc * x + float(a)
        return acc

    def __add__(self, other):
        other = _as_real(other)
        n = max(len(self._c), len(other._c))
        c = np.zeros(n)
        c[: len(self._c)] += self._c
        c[: len(other._c)] += other._c
        return RealPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return RealPoly(-self._c)

    def __sub__(self, other):
        return self + (-_as_real(other))

    def __rsub__(self, other):
        return _as_real(other) - self

    def __mul__(self, other):
        if np.isscalar(other):
            return RealPoly(self._c * float(other))
        other = _as_real(other)
        if self.is_zero() or other.is_zero():
            return RealPoly()
        return RealPoly(np.convolve(self._c, other._c))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RealPoly([1.0])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        return real_div_rem(self, _as_real(other))

    def __eq__(self, other):
        if not isinstance(other, RealPoly):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other, atol: float = 1e-9, rtol: float = 1e-9) -> bool:
        other = _as_real(other)
        n = max(len(self._c), len(other._c))
        a = np.zeros(n)
        b = np.zeros(n)
        a[: len(self._c)] = self._c
        b[: len(other._c)] = other._c
        ref = max(self.scale(), other.scale())
        return bool(np.max(np.abs(a - b), initial=0.0) <= atol + rtol * ref)

    def __repr__(self):
        return f"RealPoly({self._c.tolist()})"

    def __str__(self):
        from .textio import format_real_poly

        return format_real_poly(self)

    def to_json(self):
        return {"coeffs": self._c.tolist()}


def _as_real(p) -> RealPoly:
    if isinstance(p, RealPoly):
        return p
    if np.isscalar(p):
        return RealPoly([float(p)])
    raise TypeError(f"cannot use {type(p).__name__} as a real polynomial")


def real_div_rem(P: RealPoly, D: RealPoly, tol: Tolerances = DEFAULT):
    """Euclidean division ``P = D*Q + R`` with ``deg R < deg D``.

    The remainder is cleaned of coefficients below ``tol`` relative to the
    size of ``P``, so an exact divisor returns the zero polynomial.
    """
    if D.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    p = np.array(P.coeffs, dtype=float)
    d = D.coeffs
    m = D.degree
    if P.degree < m:
        return RealPoly(), P
    q = np.zeros(P.degree - m + 1)
    for k in range(P.degree - m, -1, -1):
        q[k] = p[k + m] / d[m]
        p[k : k + m + 1] -= q[k] * d
    r = p[:m].copy()
    cutoff = tol.abs + tol.rel * P.scale()
    r[np.abs(r) <= cutoff] = 0.0
    return RealPoly(q), RealPoly(r)
