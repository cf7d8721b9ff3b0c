"""Seeded random polynomials, plain and with prescribed zeros."""
from __future__ import annotations

import math

import numpy as np

from .octonion import ConjugacyClass, random_in_class, random_octonion
from .poly import OctPoly, linear, star_mul

# closest two prescribed classes may come, measured in the (t, n) plane;
# nearer classes give overlapping root clouds in N(f)
MIN_SEPARATION = 0.25


def random_poly(rng: np.random.Generator, degree: int, quaternion: bool = False) -> OctPoly:
    """Coefficients uniform in [-1, 1]^8, leading one of norm at least 0.2."""
    coeffs = [random_octonion(rng, quaternion) for _ in range(degree + 1)]
    while coeffs[-1].norm() < 0.2:
        coeffs[-1] = random_octonion(rng, quaternion)
    return OctPoly(coeffs)


def random_class(rng: np.random.Generator) -> ConjugacyClass:
    """A non-real class with trace in [-2, 2] and sphere radius in [0.4, 1.5]."""
    t = rng.uniform(-2.0, 2.0)
    r = rng.uniform(0.4, 1.5)
    return ConjugacyClass(t, t * t / 4 + r * r)


def _far(c: ConjugacyClass, others) -> bool:
    return all(math.hypot(c.t - o.t, c.n - o.n) >= MIN_SEPARATION for o in others)


def separated_classes(rng: np.random.Generator, count: int, reals: int = 0):
    """``count`` non-real classes and ``reals`` real points, pairwise separated."""
    chosen = []
    points = []
    while len(points) < reals:
        x = float(rng.uniform(-2.0, 2.0))
        c = ConjugacyClass(2 * x, x * x)
        if _far(c, chosen):
            chosen.append(c)
            points.append(x)
    classes = []
    while len(classes) < count:
        c = random_class(rng)
        if _far(c, chosen):
            chosen.append(c)
            classes.append(c)
    return classes, points


def constructed_poly(rng: np.random.Generator, degree: int, quaternion: bool = False, pool: int = 2) -> OctPoly:
    """A degree-``degree`` product of spherical, real and isolated factors.

    Factors are drawn from ``pool`` non-real classes and one real point, so
    zeros repeat and multiplicities above one are common.  Each factor
    multiplies on a random side of the running product.
    """
    classes, (x,) = separated_classes(rng, pool, 1)
    f = random_poly(rng, 0, quaternion)
    d = 0
    while d < degree:
        kind = rng.integers(3)
        c = classes[rng.integers(pool)]
        if kind == 0 and d + 2 <= degree:
            fac = OctPoly.from_real(c.char_poly())
            d += 2
        elif kind == 1:
            fac = linear(x)
            d += 1
        else:
            fac = linear(random_in_class(c, rng, quaternion))
            d += 1
        f = star_mul(fac, f) if rng.random() < 0.5 else star_mul(f, fac)
    return f
