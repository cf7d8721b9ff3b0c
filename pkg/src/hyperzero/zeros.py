"""Zeros of regular polynomials.

Each conjugacy class meets the zero set of ``f`` in nothing, one point, or the
whole sphere, and the remainder of ``f`` on the class tells which.  Writing
``f = Delta * h + w a + b`` for the characteristic quadratic ``Delta`` of a
non-real class:

* ``a = b = 0``: the whole sphere consists of zeros (spherical zero);
* ``a != 0`` and ``-b a^-1`` lies on the sphere: that single point (isolated);
* otherwise: no zero on the sphere.

The classes to inspect are the roots of the real polynomial ``N(f)``, and the
multiplicity of a zero is the exponent of ``Delta`` in ``N(f)``.
"""
from __future__ import annotations

import math

import numpy as np
from dataclasses import dataclass

from .errors import ClassificationMismatch, ConstantPolynomial, FtaViolation, NoZeroFound
from .octonion import (
    ConjugacyClass,
    Octonion,
    as_octonion,
    real_class,
    representative,
)
from .poly import OctPoly, linear, normal, star_mul
from .realpoly import RealPoly
from .roots import class_spectrum, quadratic_multiplicity
from .tolerance import DEFAULT, Tolerances

REAL, ISOLATED, SPHERICAL = "real", "isolated", "spherical"


@dataclass(frozen=True)
class Remainder:
    """Remainder of ``f`` on a class: ``w a + b`` (``a = 0`` on real classes)."""

    cls: ConjugacyClass
    a: Octonion
    b: Octonion

    @property
    def is_linear(self) -> bool:
        return not self.cls.is_real()

    def as_poly(self) -> OctPoly:
        return OctPoly([self.b, self.a])

    def is_zero(self, scale: float = 1.0, tol: Tolerances = DEFAULT) -> bool:
        r = max(1.0, math.sqrt(self.cls.n))
        return tol.small(self.a.norm() * r + self.b.norm(), scale)

    def to_json(self):
        return {"class": self.cls.to_json(), "a": self.a.to_json(), "b": self.b.to_json()}


@dataclass(frozen=True)
class ZeroRecord:
    cls: ConjugacyClass
    kind: str
    point: Octonion | None
    multiplicity: int

    def sample(self, unit=None) -> Octonion:
        """A zero in the record: the point, or a point of the sphere."""
        return self.point if self.point is not None else representative(self.cls, unit)

    def to_json(self):
        return {
            "class": self.cls.to_json(),
            "kind": self.kind,
            "point": None if self.point is None else self.point.to_json(),
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class FtaSummary:
    r: int
    i: int
    s: int
    total_multiplicity: int
    degree: int

    @property
    def k(self) -> int:
        return self.r + self.i + self.s

    def to_json(self):
        return {
            "r": self.r,
            "i": self.i,
            "s": self.s,
            "k": self.k,
            "total_multiplicity": self.total_multiplicity,
            "degree": self.degree,
        }


def divide_linear(f: OctPoly, alpha) -> tuple[OctPoly, Octonion]:
    """``f = (w - alpha) * g + r``; returns ``(g, r)`` with ``r = f(alpha)``.

    Synthetic division from the top: ``b_{n-1} = a_n``,
    ``b_{k-1} = a_k + alpha b_k`` and ``r = a_0 + alpha b_0``.
    """
    alpha = as_octonion(alpha)
    if f.is_zero():
        return OctPoly(), Octonion(0.0)
    a = [f.coeff(k) for k in range(f.degree + 1)]
    if f.degree == 0:
        return OctPoly(), a[0]
    b = [Octonion(0.0)] * f.degree
    b[-1] = a[-1]
    for k in range(f.degree - 1, 0, -1):
        b[k - 1] = a[k] + alpha * b[k]
    return OctPoly(b), a[0] + alpha * b[0]


def divide_by_class(f: OctPoly, c: ConjugacyClass, tol: Tolerances = DEFAULT, unit=None):
    """Quotient and remainder of ``f`` on the class ``c``.

    Real class: ``f = (w - alpha) g + r``.  Non-real class:
    ``f = Delta h + w a + b``, obtained from two linear divisions by
    ``alpha`` and ``conj(alpha)``.
    """
    alpha = representative(c, unit, tol)
    g, r = divide_linear(f, alpha)
    if c.is_real(tol):
        return g, Remainder(c, Octonion(0.0), r)
    h, s = divide_linear(g, alpha.conj())
    return h, Remainder(c, s, r - alpha * s)


def remainder_at(f: OctPoly, c: ConjugacyClass, tol: Tolerances = DEFAULT, unit=None) -> Remainder:
    return divide_by_class(f, c, tol, unit)[1]


def _multiplicity(N: RealPoly, c: ConjugacyClass, tol: Tolerances) -> int:
    if c.is_real(tol):
        c = real_class(c.t / 2)
    return quadratic_multiplicity(N, c, tol)


def classify_at(f: OctPoly, c: ConjugacyClass, tol: Tolerances = DEFAULT, N: RealPoly | None = None):
    """The zero of ``f`` on the class ``c`` as a :class:`ZeroRecord`, or None."""
    alpha = representative(c, tol=tol)
    rem = remainder_at(f, c, tol)
    scale = f.eval_scale(alpha)
    if c.is_real(tol):
        if not tol.small(rem.b.norm(), scale):
            return None
        kind, point = REAL, alpha
    elif rem.is_zero(scale, tol):
        kind, point = SPHERICAL, None
    elif rem.a.is_zero():
        return None
    else:
        # b a^-1 = b conj(a) / |a|^2, without inverse()'s absolute cutoff
        point = -(rem.b * rem.a.conj()) * (1.0 / rem.a.norm_sq())
        if not c.contains(point, tol):
            return None
        kind = ISOLATED
    N = normal(f, tol) if N is None else N
    m = _multiplicity(N, c, tol)
    if m == 0:
        raise ClassificationMismatch(f"{kind} zero on class {c} but its quadratic does not divide N(f)")
    return ZeroRecord(c, kind, point, m)


def _require_nonconstant(f: OctPoly):
    if f.degree < 1:
        raise ConstantPolynomial(f"zero sets need degree >= 1, got degree {f.degree}")


def zero_set(f: OctPoly, tol: Tolerances = DEFAULT) -> list[ZeroRecord]:
    """All zeros of ``f``, one record per conjugacy class, sorted by (t, n)."""
    _require_nonconstant(f)
    N = normal(f, tol)
    spectrum = class_spectrum(N, tol)
    if len(spectrum) > 2 * f.degree:
        raise ClassificationMismatch(f"{len(spectrum)} classes for degree {f.degree}")
    records = []
    for c, root_mult in spectrum:
        rec = classify_at(f, c, tol, N)
        if rec is None:
            raise ClassificationMismatch(f"class {c} divides N(f) but holds no zero of f")
        expected = root_mult / 2 if rec.kind == REAL else root_mult
        if rec.multiplicity != expected:
            raise ClassificationMismatch(
                f"class {c}: division gives multiplicity {rec.multiplicity}, root clustering {expected}"
            )
        records.append(rec)
    return records


def summarize(records, degree: int) -> FtaSummary:
    count = {REAL: 0, ISOLATED: 0, SPHERICAL: 0}
    for rec in records:
        count[rec.kind] += 1
    total = sum(rec.multiplicity for rec in records)
    return FtaSummary(count[REAL], count[ISOLATED], count[SPHERICAL], total, degree)


def verify_fta(f: OctPoly, tol: Tolerances = DEFAULT) -> FtaSummary:
    """Check that multiplicities add up to the degree and r + i + 2s <= n."""
    summary = summarize(zero_set(f, tol), f.degree)
    if summary.total_multiplicity != summary.degree:
        raise FtaViolation(f"multiplicities add up to {summary.total_multiplicity}, degree is {summary.degree}")
    if summary.r + summary.i + 2 * summary.s > summary.degree:
        raise FtaViolation(f"r + i + 2s = {summary.r + summary.i + 2 * summary.s} exceeds degree {summary.degree}")
    return summary


@dataclass(frozen=True)
class Factorization:
    """``f = (w - roots[0]) * ((w - roots[1]) * (... * ((w - roots[-1]) * c)))``."""

    roots: tuple
    c: Octonion

    def expand(self) -> OctPoly:
        out = OctPoly.constant(self.c)
        for alpha in reversed(self.roots):
            out = star_mul(linear(alpha), out)
        return out

    def to_json(self):
        return {"roots": [a.to_json() for a in self.roots], "c": self.c.to_json()}


def _pick(records):
    # highest multiplicity first, then smallest (t, n)
    return min(records, key=lambda r: (-r.multiplicity, r.cls.t, r.cls.n))


def factorize(f: OctPoly, tol: Tolerances = DEFAULT) -> Factorization:
    """Split ``f`` into linear factors by repeated division at a zero."""
    _require_nonconstant(f)
    classes = [rec.cls for rec in zero_set(f, tol)]
    roots = []
    current = f
    while current.degree >= 1:
        rec = _pick(zero_set(current, tol))
        alpha = rec.sample()
        if not any(c.isclose(rec.cls, tol) for c in classes):
            raise NoZeroFound(f"zero {alpha} of a quotient is not conjugate to any zero of f")
        g, r = divide_linear(current, alpha)
        if not tol.small(r.norm(), current.eval_scale(alpha)):
            raise NoZeroFound(f"{alpha} leaves remainder {r} when dividing {current}")
        roots.append(alpha)
        current = g
    return Factorization(tuple(roots), current.coeff(0))


@dataclass
class StructureProfile:
    """Zero structure predicted from the shape of the coefficients."""

    form: str
    prediction: str
    records: list
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self):
        return {
            "form": self.form,
            "prediction": self.prediction,
            "ok": self.ok,
            "checks": self.checks,
            "zeros": [r.to_json() for r in self.records],
        }


def plane_residual(x: Octonion, direction: Octonion) -> float:
    """Distance from ``x`` to the complex plane spanned by 1 and ``direction``."""
    u = direction.im.coords
    u = u / math.sqrt(float(u @ u))
    v = x.im.coords
    # project rather than subtract squares, which loses half the digits
    return float(np.linalg.norm(v - (v @ u) * u))


def structure_profile(f: OctPoly, tol: Tolerances = DEFAULT) -> StructureProfile:
    """Compare the zero set with what the coefficient pattern forces.

    * real coefficients: only real and spherical zeros;
    * real apart from a non-real constant term: only isolated zeros, all in
      the plane spanned by 1 and the constant term;
    * real apart from a degree <= 1 part with a non-real coefficient: no
      spherical zeros.
    """
    records = zero_set(f, tol)
    nonreal = [k for k in range(f.degree + 1) if not f.coeff(k).is_real(tol)]
    checks = {}
    if not nonreal:
        form, prediction = "real", "real or spherical zeros only"
        checks["no_isolated"] = all(r.kind != ISOLATED for r in records)
    elif nonreal == [0]:
        form, prediction = "real+constant", "isolated zeros in span{1, a0}"
        a0 = f.coeff(0)
        checks["all_isolated"] = all(r.kind == ISOLATED for r in records)
        worst = max((plane_residual(r.point, a0) for r in records if r.point is not None), default=0.0)
        checks["in_plane"] = worst <= tol.abs + tol.rel * max(1.0, max(r.cls.n for r in records) ** 0.5)
    elif max(nonreal) <= 1:
        form, prediction = "real+linear", "no spherical zeros"
        checks["no_spherical"] = all(r.kind != SPHERICAL for r in records)
    else:
        form, prediction = "general", "no structural prediction"
    return StructureProfile(form, prediction, records, checks)

