"""Regular octonionic polynomials ``f(w) = sum_k w^k a_k``.

Coefficients sit on the right of the powers of ``w``.  The product of two
polynomials is the star product, in which ``w`` commutes with everything::

    (f * g)_k = sum_{i + j = k} a_i b_j

Coefficients are stored as an ``(n + 1, 8)`` float array, lowest degree first.
"""
from __future__ import annotations

import numpy as np

from .errors import RealityViolation
from .octonion import MUL_TABLE, Octonion, as_octonion, oconj, omul, onorm_sq
from .realpoly import RealPoly, real_div_rem
from .tolerance import DEFAULT, Tolerances

__all__ = [
    "OctPoly",
    "RealPoly",
    "W",
    "add",
    "conj_poly",
    "evaluate",
    "linear",
    "normal",
    "real_div_rem",
    "scale",
    "star_mul",
    "sub",
]


def _cutoff(tol: Tolerances, *arrays: np.ndarray) -> float:
    ref = max((float(np.sqrt(onorm_sq(a)).max(initial=0.0)) for a in arrays), default=0.0)
    return tol.abs + tol.rel * ref


def _trim(c: np.ndarray, cutoff: float = 0.0) -> np.ndarray:
    n = len(c)
    norms = np.sqrt(onorm_sq(c)) if n else np.zeros(0)
    while n > 0 and norms[n - 1] <= cutoff:
        n -= 1
    return c[:n]


class OctPoly:
    """A regular polynomial with right octonionic coefficients.

    Construction only drops exactly-zero leading coefficients; arithmetic
    operations drop leading coefficients that are negligible next to their
    inputs.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, np.ndarray):
            c = np.array(coeffs, dtype=float)
        else:
            rows = [as_octonion(a).coords for a in coeffs]
            c = np.array(rows) if rows else np.zeros((0, 8))
        if c.size == 0:
            c = c.reshape(0, 8)
        if c.ndim != 2 or c.shape[1] != 8:
            raise ValueError("coefficient array must have shape (n, 8)")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = np.array(_trim(c), dtype=float)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def _from_array(cls, arr: np.ndarray, cutoff: float = 0.0) -> "OctPoly":
        obj = cls.__new__(cls)
        c = np.array(_trim(arr, cutoff), dtype=float).reshape(-1, 8)
        c.setflags(write=False)
        obj._c = c
        return obj

    @classmethod
    def constant(cls, a) -> "OctPoly":
        return cls([as_octonion(a)])

    @classmethod
    def from_real(cls, p) -> "OctPoly":
        coeffs = p.coeffs if isinstance(p, RealPoly) else np.asarray(p, dtype=float)
        arr = np.zeros((len(coeffs), 8))
        arr[:, 0] = coeffs
        return cls._from_array(arr)

    @classmethod
    def monomial(cls, degree: int, a=1.0) -> "OctPoly":
        arr = np.zeros((degree + 1, 8))
        arr[degree] = as_octonion(a).coords
        return cls._from_array(arr)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def coeff(self, k: int) -> Octonion:
        if 0 <= k < len(self._c):
            return Octonion(self._c[k])
        return Octonion(0.0)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def lead(self) -> Octonion:
        return self.coeff(self.degree)

    def __len__(self):
        return len(self._c)

    def is_zero(self) -> bool:
        return len(self._c) == 0

    def is_real(self, tol: Tolerances = DEFAULT) -> bool:
        if self.is_zero():
            return True
        return bool(np.abs(self._c[:, 1:]).max() <= tol.abs + tol.rel * self.scale())

    def is_quaternion(self) -> bool:
        return not np.any(self._c[:, 4:])

    def scale(self) -> float:
        """Largest coefficient norm."""
        return float(np.sqrt(onorm_sq(self._c)).max(initial=0.0))

    def eval_scale(self, x) -> float:
        """``sum |a_k| max(1, |x|)^k``: the size of f(x) before cancellation."""
        r = max(1.0, as_octonion(x).norm())
        norms = np.sqrt(onorm_sq(self._c))
        return float(sum(nk * r**k for k, nk in enumerate(norms)))

    def real_part(self) -> RealPoly:
        return RealPoly(self._c[:, 0])

    def conj(self) -> "OctPoly":
        return conj_poly(self)

    def __call__(self, x) -> Octonion:
        return evaluate(self, x)

    def __add__(self, other):
        return add(self, other)

    def __radd__(self, other):
        return add(_as_poly(other), self)

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(_as_poly(other), self)

    def __neg__(self):
        return OctPoly._from_array(-self._c)

    def __mul__(self, other):
        return star_mul(self, _as_poly(other))

    def __rmul__(self, other):
        return star_mul(_as_poly(other), self)

    def __pow__(self, k: int):
        out = OctPoly.constant(1.0)
        for _ in range(k):
            out = star_mul(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, OctPoly):
            return NotImplemented
        return self._c.shape == other._c.shape and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other, atol: float = 1e-9, rtol: float = 1e-9) -> bool:
        return coeff_distance(self, _as_poly(other)) <= atol + rtol * max(self.scale(), _as_poly(other).scale())

    def __repr__(self):
        return f"OctPoly({self._c.tolist()})"

    def __str__(self):
        from .textio import format_poly

        return format_poly(self)

    def to_json(self) -> dict:
        return {"coeffs": self._c.tolist()}

    @classmethod
    def from_json(cls, data) -> "OctPoly":
        return cls(np.array(data["coeffs"], dtype=float).reshape(-1, 8))


W = OctPoly.monomial(1)


def _as_poly(p) -> OctPoly:
    if isinstance(p, OctPoly):
        return p
    if isinstance(p, RealPoly):
        return OctPoly.from_real(p)
    return OctPoly.constant(p)


def linear(alpha) -> OctPoly:
    """``w - alpha``."""
    return OctPoly([-as_octonion(alpha), Octonion(1.0)])


def _padded(c: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros((n, 8))
    out[: len(c)] = c
    return out


def coeff_distance(f: OctPoly, g: OctPoly) -> float:
    n = max(len(f), len(g))
    d = _padded(f.coeffs, n) - _padded(g.coeffs, n)
    return float(np.sqrt(onorm_sq(d)).max(initial=0.0))


def star_array(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cauchy product of two coefficient arrays (no trimming)."""
    if len(a) == 0 or len(b) == 0:
        return np.zeros((0, 8))
    # prods[i, j] = a_i b_j through the structure constants
    prods = np.tensordot(a, np.tensordot(b, MUL_TABLE, axes=(1, 1)), axes=(1, 1))
    out = np.zeros((len(a) + len(b) - 1, 8))
    for i in range(len(a)):
        out[i : i + len(b)] += prods[i]
    return out


def star_mul(f: OctPoly, g: OctPoly, tol: Tolerances = DEFAULT) -> OctPoly:
    """Star product; ``w`` commutes with the coefficients."""
    f, g = _as_poly(f), _as_poly(g)
    if f.is_zero() or g.is_zero():
        return OctPoly()
    out = star_array(f.coeffs, g.coeffs)
    # no zero divisors: the leading product is never dropped
    return OctPoly._from_array(out)


def conj_poly(f: OctPoly) -> OctPoly:
    return OctPoly._from_array(oconj(f.coeffs))


def add(f, g, tol: Tolerances = DEFAULT) -> OctPoly:
    f, g = _as_poly(f), _as_poly(g)
    n = max(len(f), len(g))
    return OctPoly._from_array(_padded(f.coeffs, n) + _padded(g.coeffs, n), _cutoff(tol, f.coeffs, g.coeffs))


def sub(f, g, tol: Tolerances = DEFAULT) -> OctPoly:
    f, g = _as_poly(f), _as_poly(g)
    n = max(len(f), len(g))
    return OctPoly._from_array(_padded(f.coeffs, n) - _padded(g.coeffs, n), _cutoff(tol, f.coeffs, g.coeffs))


def scale(f: OctPoly, c, side: str = "right") -> OctPoly:
    """Multiply every coefficient by the constant ``c`` on the given side."""
    cc = as_octonion(c).coords
    if side == "right":
        out = omul(f.coeffs, cc)
    elif side == "left":
        out = omul(cc, f.coeffs)
    else:
        raise ValueError("side must be 'left' or 'right'")
    return OctPoly._from_array(out.reshape(-1, 8))


def powers(x, n: int) -> np.ndarray:
    """``[1, x, x^2, ..., x^n]`` as an (n+1, 8) array."""
    xc = as_octonion(x).coords
    out = np.zeros((n + 1, 8))
    out[0, 0] = 1.0
    for k in range(1, n + 1):
        out[k] = omul(xc, out[k - 1])
    return out


def evaluate(f: OctPoly, x) -> Octonion:
    """``f(x) = sum_k x^k a_k``; powers of ``x`` are taken first."""
    f = _as_poly(f)
    if f.is_zero():
        return Octonion(0.0)
    terms = omul(powers(x, f.degree), f.coeffs)
    return Octonion(terms.sum(axis=0))


def normal(f: OctPoly, tol: Tolerances = DEFAULT) -> RealPoly:
    """The normal polynomial ``N(f) = f * conj(f)``.

    Both ``f * conj(f)`` and ``conj(f) * f`` are formed; they must agree and be
    real, otherwise :class:`RealityViolation` is raised.
    """
    f = _as_poly(f)
    if f.is_zero():
        return RealPoly()
    fb = oconj(f.coeffs)
    left = star_array(f.coeffs, fb)
    right = star_array(fb, f.coeffs)
    ref = f.scale() ** 2
    limit = tol.abs + tol.rel * ref
    resid = max(np.abs(left[:, 1:]).max(), np.abs(right - left).max())
    if resid > limit:
        raise RealityViolation(f"N(f) has imaginary residual {resid:.3g} (limit {limit:.3g})")
    return RealPoly(0.5 * (left[:, 0] + right[:, 0]))
