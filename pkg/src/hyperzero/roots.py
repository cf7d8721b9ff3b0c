"""Complex roots of real polynomials, grouped into conjugacy classes.

Roots come from an Aberth-Ehrlich iteration (companion-matrix eigenvalues as
a fallback).  Multiple roots come back from any floating-point solver as a
small cloud of points, so the raw roots are grouped afterwards: a candidate
group is accepted as one root of multiplicity ``m`` when its polished center
annihilates ``P, P', ..., P^(m-1)`` to within ``tol.root`` relative to the
natural size of each derivative.  Groups that fail are split with a smaller
linkage radius.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeZero, HyperzeroError
from .octonion import ConjugacyClass, char_poly
from .realpoly import RealPoly
from .tolerance import DEFAULT, Tolerances

MAX_SWEEPS = 800
STALL_SWEEPS = 50
_LINK_RADII = (3e-1, 1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7)


class RootFindingError(HyperzeroError, ArithmeticError):
    pass


def _horner(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Evaluate the polynomial with low-to-high coefficients ``c`` at ``z``."""
    acc = np.zeros_like(z, dtype=complex)
    for a in c[::-1]:
        acc = acc * z + a
    return acc


def _weighted_size(c: np.ndarray, z) -> np.ndarray:
    r = np.maximum(1.0, np.abs(z))
    return _horner(np.abs(c), r).real


def aberth(c: np.ndarray, tol: Tolerances = DEFAULT):
    """Aberth-Ehrlich simultaneous iteration for the monic polynomial ``c``.

    Returns ``(roots, converged)``.  Start points lie on a circle of the
    Cauchy-bound radius, rotated off the real axis.
    """
    n = len(c) - 1
    dc = c[1:] * np.arange(1, n + 1)
    radius = 1.0 + float(np.max(np.abs(c[:-1])))
    k = np.arange(n)
    z = radius * np.exp(1j * (2 * np.pi * k / n + 0.4)) * (1 + 0.01 * np.cos(k))
    scale_c = np.abs(c)
    best = math.inf
    since_best = 0
    for _ in range(MAX_SWEEPS):
        p = _horner(c, z)
        resid = np.abs(p) / _horner(scale_c, np.maximum(1.0, np.abs(z))).real
        worst = float(resid.max())
        if worst <= np.finfo(float).eps * 4 * n:
            return z, True
        if worst < best * 0.999:
            best, since_best = worst, 0
        else:
            since_best += 1
            if since_best >= STALL_SWEEPS:
                return z, worst <= tol.root
        dp = _horner(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            step = ratio / (1.0 - ratio * inv.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
    return z, bool(best <= tol.root)


def _companion_roots(c: np.ndarray) -> np.ndarray:
    return np.linalg.eigvals(np.polynomial.polynomial.polycompanion(c))


def _raw_roots(c: np.ndarray, tol: Tolerances) -> np.ndarray:
    z, ok = aberth(c, tol)
    if ok:
        return z
    alt = _companion_roots(c)
    size = lambda r: np.max(np.abs(_horner(c, r)) / _weighted_size(c, r))
    return alt if size(alt) < size(z) else z


def _derivatives(c: np.ndarray, m: int):
    """Coefficient arrays of ``P^(k) / k!`` for ``k < m``."""
    out = [c]
    cur = c
    for k in range(1, m):
        cur = cur[1:] * np.arange(1, len(cur)) / k
        out.append(cur)
    return out


def _polish(c: np.ndarray, z0: complex, m: int, reach: float) -> complex:
    """Newton on ``P^(m-1)``, which has a simple root at an m-fold root of P."""
    ders = _derivatives(c, m + 1)
    d, dd = ders[m - 1], ders[m] * m
    z = z0
    for _ in range(30):
        v = _horner(d, np.array([z]))[0]
        dv = _horner(dd, np.array([z]))[0]
        if dv == 0:
            break
        step = v / dv
        z = z - step
        if abs(step) <= 4 * np.finfo(float).eps * max(1.0, abs(z)):
            break
    return z if abs(z - z0) <= reach else z0


def _is_multiple(c: np.ndarray, z: complex, m: int, tol: Tolerances) -> bool:
    zz = np.array([z])
    for d in _derivatives(c, m):
        if abs(_horner(d, zz)[0]) > tol.root * _weighted_size(d, zz)[0]:
            return False
    return True


def _components(points: np.ndarray, radius: np.ndarray):
    """Single-linkage clusters; ``radius[k]`` is the reach of point k."""
    n = len(points)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    dist = np.abs(points[:, None] - points[None, :])
    reach = np.minimum(radius[:, None], radius[None, :])
    for a, b in zip(*np.nonzero(np.triu(dist <= reach, 1))):
        parent[find(a)] = find(b)
    groups = {}
    for a in range(n):
        groups.setdefault(find(a), []).append(a)
    return list(groups.values())


def _group(c: np.ndarray, z: np.ndarray, w: np.ndarray, tol: Tolerances):
    """Group weighted points into (center, weight) multiple roots."""
    out = []

    def visit(idx, level):
        pts, wts = z[idx], w[idx]
        total = float(wts.sum())
        center = complex(np.sum(pts * wts) / total)
        m = max(1, int(round(total)))
        reach = _LINK_RADII[max(level - 1, 0)] * max(1.0, abs(center))
        if len(idx) > 1 and m > 1:
            center = _polish(c, center, m, reach)
        if len(idx) == 1 or _is_multiple(c, center, m, tol) or level >= len(_LINK_RADII):
            out.append((center, total))
            return
        r = _LINK_RADII[level] * np.maximum(1.0, np.abs(pts))
        parts = _components(pts, r)
        if len(parts) == 1:
            visit(idx, level + 1)
            return
        for part in parts:
            visit(idx[np.array(part)], level + 1)

    visit(np.arange(len(z)), 0)
    return out


def _real_threshold(z: complex, tol: Tolerances) -> float:
    # same rule as class_of: 4 Im^2 < tol.cls * max(1, |z|^2)
    return 0.5 * math.sqrt(tol.cls * max(1.0, abs(z) ** 2))


def complex_roots(P: RealPoly, tol: Tolerances = DEFAULT) -> list[tuple[complex, int]]:
    """All complex roots of ``P`` with multiplicities.

    The result is closed under conjugation (real roots are returned with a
    zero imaginary part) and the multiplicities add up to ``deg P``.
    """
    if P.degree < 1:
        raise DegreeZero("a constant polynomial has no roots to find")
    c = np.array(P.coeffs, dtype=float)
    zeros = 0
    while c[zeros] == 0.0:
        zeros += 1
    c = c[zeros:] / c[-1]
    result: list[tuple[complex, int]] = []
    if zeros:
        result.append((0j, zeros))
    if len(c) > 1:
        z = _raw_roots(c, tol)
        # cluster the conjugation-closed cloud so the result is symmetric
        pts = np.concatenate([z, np.conj(z)])
        wts = np.full(len(pts), 0.5)
        for center, weight in _group(c, pts, wts, tol):
            if center.imag < -_real_threshold(center, tol):
                continue
            if abs(center.imag) <= _real_threshold(center, tol):
                result.append((complex(center.real, 0.0), int(round(weight))))
            else:
                m = int(round(weight))
                result.append((center, m))
                result.append((center.conjugate(), m))
    total = sum(m for _, m in result)
    if total != P.degree:
        raise RootFindingError(f"root multiplicities add up to {total}, expected {P.degree}")
    return sorted(result, key=lambda r: (r[0].real, r[0].imag))


@dataclass(frozen=True)
class ClassSpectrum:
    """Conjugacy classes met by the roots of a real polynomial.

    ``mult`` is the root multiplicity over C: a non-real class with
    multiplicity m stands for m roots z and m roots conj(z); a real class with
    multiplicity m for an m-fold real root.
    """

    entries: tuple = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def classes(self):
        return [c for c, _ in self.entries]

    def multiplicity(self, c: ConjugacyClass, tol: Tolerances = DEFAULT) -> int:
        for cc, m in self.entries:
            if cc.isclose(c, tol):
                return m
        return 0

    def root_count(self, tol: Tolerances = DEFAULT) -> int:
        return sum(m * (1 if c.is_real(tol) else 2) for c, m in self.entries)

    def to_json(self):
        return [{"t": c.t, "n": c.n, "mult": m} for c, m in self.entries]


def class_spectrum(P: RealPoly, tol: Tolerances = DEFAULT) -> ClassSpectrum:
    entries = []
    for z, m in complex_roots(P, tol):
        if z.imag < 0:
            continue
        if z.imag == 0:
            cls = ConjugacyClass(2 * z.real, z.real * z.real)
        else:
            cls = ConjugacyClass(2 * z.real, z.real * z.real + z.imag * z.imag)
        entries.append((cls, m))
    entries.sort(key=lambda e: e[0].sort_key())
    return ClassSpectrum(tuple(entries))


def _slice_point(c: ConjugacyClass) -> complex:
    return complex(c.t / 2, math.sqrt(max(c.discriminant, 0.0)) / 2)


def divides(P: RealPoly, D: RealPoly, at: complex, tol: Tolerances = DEFAULT):
    """Divide and decide exactness; returns ``(quotient, exact)``.

    Exactness is judged by the size of the remainder at the root ``at`` of
    ``D`` relative to ``P``'s natural size there.
    """
    p = np.array(P.coeffs, dtype=float)
    d = D.coeffs
    m = D.degree
    if P.degree < m:
        return RealPoly(), P.is_zero()
    q = np.zeros(P.degree - m + 1)
    for k in range(P.degree - m, -1, -1):
        q[k] = p[k + m] / d[m]
        p[k : k + m + 1] -= q[k] * d
    r = p[:m]
    rr = max(1.0, abs(at))
    size = float(np.sum(np.abs(r) * rr ** np.arange(m)))
    ref = float(_weighted_size(P.coeffs, np.array([at]))[0])
    return RealPoly(q), size <= tol.div * ref


def quadratic_multiplicity(P: RealPoly, c: ConjugacyClass, tol: Tolerances = DEFAULT) -> int:
    """Largest ``s`` with ``char_poly(c)^s`` dividing ``P``."""
    if P.is_zero():
        raise DegreeZero("every power divides the zero polynomial")
    D = char_poly(c)
    at = _slice_point(c)
    s = 0
    Q = P
    while Q.degree >= 2:
        Q, exact = divides(Q, D, at, tol)
        if not exact:
            break
        s += 1
    return s
