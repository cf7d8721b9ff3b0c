"""Octonion arithmetic.

An octonion is stored as 8 real coordinates on the basis

    1, i, j, ij, k, ik, jk, (ij)k

so that ``x = x1 + x2 k`` with quaternions ``x1 = c0 + c1 i + c2 j + c3 ij`` and
``x2 = c4 + c5 i + c6 j + c7 ij``.  The product is the Cayley-Dickson doubling
of the quaternion product::

    (x1 + x2 k)(y1 + y2 k) = x1 y1 - conj(y2) x2 + (x2 conj(y1) + y2 x1) k

The array-level functions (:func:`omul`, :func:`oconj`) broadcast over leading
axes and are what the polynomial code uses; :class:`Octonion` is the scalar
value type for the public API.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZero, InvalidClass
from .realpoly import RealPoly
from .tolerance import DEFAULT, Tolerances

BASIS = ("1", "i", "j", "ij", "k", "ik", "jk", "ijk")
_CONJ_SIGN = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Quaternion product on arrays of shape (..., 4), basis (1, i, j, ij)."""
    a0, a1, a2, a3 = np.moveaxis(p, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ],
        axis=-1,
    )


def qconj(p: np.ndarray) -> np.ndarray:
    return p * _CONJ_SIGN[:4]


def omul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Octonion product on arrays of shape (..., 8); broadcasts."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x1, x2 = x[..., :4], x[..., 4:]
    y1, y2 = y[..., :4], y[..., 4:]
    first = qmul(x1, y1) - qmul(qconj(y2), x2)
    second = qmul(x2, qconj(y1)) + qmul(y2, x1)
    return np.concatenate(np.broadcast_arrays(first, second), axis=-1)


def oconj(x: np.ndarray) -> np.ndarray:
    return np.asarray(x, dtype=float) * _CONJ_SIGN


def onorm_sq(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return np.einsum("...i,...i->...", x, x)


def oinv(x: np.ndarray) -> np.ndarray:
    """Inverse ``conj(x) / |x|^2`` without any zero check (array level)."""
    return oconj(x) / onorm_sq(x)[..., None]


def _structure_constants() -> np.ndarray:
    eye = np.eye(8)
    return omul(eye[:, None, :], eye[None, :, :])


# MUL_TABLE[a, b] = e_a e_b; derived from the doubling formula above and only
# used for the scalar fast path.
MUL_TABLE = _structure_constants()


class Octonion:
    """Immutable octonion value.

    >>> i, j = Octonion.basis("i"), Octonion.basis("j")
    >>> (i * j).coords.tolist()
    [0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]
    """

    __slots__ = ("_c",)

    def __init__(self, coords=0.0):
        if isinstance(coords, Octonion):
            c = coords._c
        elif np.isscalar(coords):
            c = np.zeros(8)
            c[0] = float(coords)
        else:
            src = np.asarray(coords, dtype=float).reshape(-1)
            if len(src) > 8:
                raise ValueError("an octonion has at most 8 coordinates")
            c = np.zeros(8)
            c[: len(src)] = src
        if not np.all(np.isfinite(c)):
            raise ValueError("octonion coordinates must be finite")
        c = np.array(c, dtype=float)
        c.setflags(write=False)
        self._c = c

    @classmethod
    def basis(cls, name) -> "Octonion":
        idx = BASIS.index(name) if isinstance(name, str) else int(name)
        c = np.zeros(8)
        c[idx] = 1.0
        return cls(c)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Octonion":
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=float)
        arr.setflags(write=False)
        obj._c = arr
        return obj

    @property
    def coords(self) -> np.ndarray:
        return self._c

    @property
    def re(self) -> float:
        return float(self._c[0])

    @property
    def im(self) -> "Octonion":
        c = self._c.copy()
        c[0] = 0.0
        return Octonion._wrap(c)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self._c, dtype=dtype)

    def __iter__(self):
        return iter(self._c.tolist())

    def __getitem__(self, k):
        return float(self._c[k])

    # arithmetic
    def __add__(self, other):
        return Octonion._wrap(self._c + _coords(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Octonion._wrap(self._c - _coords(other))

    def __rsub__(self, other):
        return Octonion._wrap(_coords(other) - self._c)

    def __neg__(self):
        return Octonion._wrap(-self._c)

    def __mul__(self, other):
        if np.isscalar(other):
            return Octonion._wrap(self._c * float(other))
        return Octonion._wrap(self._c @ (_coords(other) @ MUL_TABLE))

    def __rmul__(self, other):
        if np.isscalar(other):
            return Octonion._wrap(self._c * float(other))
        return Octonion._wrap(_coords(other) @ (self._c @ MUL_TABLE))

    def __truediv__(self, other):
        """Right division ``x * other^-1``."""
        if np.isscalar(other):
            if other == 0:
                raise DivisionByZero("division by zero")
            return Octonion._wrap(self._c / float(other))
        return self * inverse(Octonion(other))

    def __pow__(self, k: int):
        if k < 0:
            return inverse(self) ** (-k)
        out = Octonion(1.0)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            return bool(np.array_equal(self._c, _coords(other)))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._c.tobytes())

    def isclose(self, other, atol: float = 1e-9, rtol: float = 1e-9) -> bool:
        o = _coords(other)
        ref = max(math.sqrt(self.norm_sq()), float(np.linalg.norm(o)))
        return float(np.linalg.norm(self._c - o)) <= atol + rtol * ref

    def conj(self) -> "Octonion":
        return Octonion._wrap(self._c * _CONJ_SIGN)

    def trace(self) -> float:
        return 2.0 * float(self._c[0])

    def norm_sq(self) -> float:
        return float(self._c @ self._c)

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def is_real(self, tol: Tolerances = DEFAULT) -> bool:
        return tol.small(float(np.linalg.norm(self._c[1:])), abs(self._c[0]))

    def is_quaternion(self) -> bool:
        return not np.any(self._c[4:])

    def is_zero(self, tol: Tolerances | None = None) -> bool:
        if tol is None:
            return not np.any(self._c)
        return tol.small(self.norm())

    def __repr__(self):
        return f"Octonion({self._c.tolist()})"

    def __str__(self):
        from .textio import format_octonion

        return format_octonion(self)

    def to_json(self) -> list:
        return self._c.tolist()


def _coords(x) -> np.ndarray:
    if isinstance(x, Octonion):
        return x._c
    if np.isscalar(x):
        c = np.zeros(8)
        c[0] = float(x)
        return c
    arr = np.asarray(x, dtype=float)
    if arr.shape != (8,):
        raise TypeError(f"cannot interpret {x!r} as an octonion")
    return arr


ONE = Octonion(1.0)
ZERO = Octonion(0.0)


def as_octonion(x) -> Octonion:
    return x if isinstance(x, Octonion) else Octonion(x)


def mul(x, y) -> Octonion:
    """Cayley-Dickson product (reference path, no structure table)."""
    return Octonion._wrap(omul(_coords(x), _coords(y)))


def conj(x) -> Octonion:
    return as_octonion(x).conj()


def trace(x) -> float:
    return as_octonion(x).trace()


def norm_sq(x) -> float:
    return as_octonion(x).norm_sq()


def inverse(x, tol: Tolerances = DEFAULT) -> Octonion:
    x = as_octonion(x)
    n = x.norm_sq()
    if n <= tol.abs:
        raise DivisionByZero(f"octonion {x!r} is not invertible (|x|^2 = {n:g})")
    return Octonion._wrap(x.coords * _CONJ_SIGN / n)


def associator(x, y, z) -> Octonion:
    """``(xy)z - x(yz)``; zero exactly when the triple associates."""
    return (x * y) * z - x * (y * z)


@dataclass(frozen=True)
class ConjugacyClass:
    """The sphere of octonions with trace ``t`` and squared norm ``n``.

    A point when ``t^2 = 4n`` (real class), a 6-sphere otherwise.
    """

    t: float
    n: float

    def __post_init__(self):
        t, n = float(self.t), float(self.n)
        if not (math.isfinite(t) and math.isfinite(n)):
            raise InvalidClass("class parameters must be finite")
        if n < 0 or t * t - 4 * n > DEFAULT.cls * max(1.0, n):
            raise InvalidClass(f"(t, n) = ({t:g}, {n:g}) is not the class of any octonion")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "n", n)

    @property
    def discriminant(self) -> float:
        """``4n - t^2``, four times the squared radius of the sphere."""
        return 4 * self.n - self.t * self.t

    def is_real(self, tol: Tolerances = DEFAULT) -> bool:
        return self.discriminant < tol.cls * max(1.0, self.n)

    @property
    def radius(self) -> float:
        return math.sqrt(max(self.discriminant, 0.0)) / 2

    def char_poly(self) -> RealPoly:
        return char_poly(self)

    def representative(self, unit=None, tol: Tolerances = DEFAULT) -> Octonion:
        return representative(self, unit, tol)

    def contains(self, x, tol: Tolerances = DEFAULT) -> bool:
        return self.isclose(class_of(x, tol), tol)

    def isclose(self, other: "ConjugacyClass", tol: Tolerances = DEFAULT) -> bool:
        return abs(self.t - other.t) <= tol.cls * max(1.0, abs(self.t)) and abs(
            self.n - other.n
        ) <= tol.cls * max(1.0, self.n)

    def sort_key(self):
        return (self.t, self.n)

    def to_json(self) -> dict:
        return {"t": self.t, "n": self.n}


def class_of(x, tol: Tolerances = DEFAULT) -> ConjugacyClass:
    """Trace and squared norm of ``x``; nearly-real classes snap to real."""
    x = as_octonion(x)
    t, n = x.trace(), x.norm_sq()
    if 4 * n - t * t < tol.cls * max(1.0, n):
        n = t * t / 4
    return ConjugacyClass(t, n)


def real_class(a: float) -> ConjugacyClass:
    return ConjugacyClass(2.0 * a, a * a)


def char_poly(c: ConjugacyClass) -> RealPoly:
    """``w^2 - t w + n``, the real quadratic vanishing on the class."""
    return RealPoly([c.n, -c.t, 1.0])


def representative(c: ConjugacyClass, unit=None, tol: Tolerances = DEFAULT) -> Octonion:
    """``t/2 + r I`` on the sphere; ``I`` defaults to ``i``."""
    disc = c.discriminant
    if disc < -tol.cls * max(1.0, c.n):
        raise InvalidClass(f"t^2 > 4n for class {c}")
    if c.is_real(tol):
        return Octonion(c.t / 2)
    u = Octonion.basis("i") if unit is None else as_octonion(unit)
    return Octonion(c.t / 2) + u * (math.sqrt(disc) / 2)


# sampling helpers


def random_octonion(rng: np.random.Generator, quaternion: bool = False) -> Octonion:
    c = rng.uniform(-1.0, 1.0, 8)
    if quaternion:
        c[4:] = 0.0
    return Octonion(c)


def random_unit_imaginary(rng: np.random.Generator, quaternion: bool = False) -> Octonion:
    c = np.zeros(8)
    dim = 4 if quaternion else 8
    v = rng.standard_normal(dim - 1)
    c[1:dim] = v / np.linalg.norm(v)
    return Octonion(c)


def random_in_class(c: ConjugacyClass, rng: np.random.Generator, quaternion: bool = False) -> Octonion:
    return representative(c, random_unit_imaginary(rng, quaternion))
