import math

import numpy as np
import pytest
import sympy

from hyperzero import ConjugacyClass, DegreeZero, RealPoly, Tolerances
from hyperzero.roots import aberth, class_spectrum, complex_roots, divides, quadratic_multiplicity

SQ3 = math.sqrt(3) / 2


def as_dict(roots):
    return {(round(z.real, 8), round(z.imag, 8)): m for z, m in roots}


def test_complex_roots_examples():
    got = as_dict(complex_roots(RealPoly([1, 0, 1, 0, 1])))
    expected = {(round(s * 0.5, 8), round(t * SQ3, 8)): 1 for s in (1, -1) for t in (1, -1)}
    assert got == expected
    assert as_dict(complex_roots(RealPoly([1, 0, 1]))) == {(0.0, 1.0): 1, (0.0, -1.0): 1}
    assert as_dict(complex_roots(RealPoly([1, 0, 2, 0, 1]))) == {(0.0, 1.0): 2, (0.0, -1.0): 2}


def test_constant_rejected():
    with pytest.raises(DegreeZero):
        complex_roots(RealPoly([3.0]))


def test_zero_roots_split_off():
    roots = complex_roots(RealPoly([0, 0, 1, 0, 1]))
    assert (0j, 2) in roots and sum(m for _, m in roots) == 4


def sympy_roots(int_coeffs):
    w = sympy.symbols("w")
    expr = sum(c * w**n for n, c in enumerate(int_coeffs))
    return {complex(sympy.N(r, 30)): m for r, m in sympy.roots(sympy.Poly(expr, w)).items()}


def test_multiplicities_match_exact_factorization(rng):
    # products of integer quadratics and linears, factored exactly by sympy
    for _ in range(60):
        P = RealPoly([1.0])
        for _ in range(int(rng.integers(1, 5))):
            if rng.random() < 0.6:
                t, n = int(rng.integers(-3, 4)), int(rng.integers(1, 5))
                if t * t >= 4 * n:
                    n = t * t // 4 + 1
                factor = RealPoly([n, -t, 1])
            else:
                factor = RealPoly([-int(rng.integers(-3, 4)), 1])
            P = P * factor ** int(rng.integers(1, 3))
        expected = sympy_roots([int(c) for c in P.coeffs])
        got = complex_roots(P)
        assert sum(m for _, m in got) == P.degree
        assert len(got) == len(expected)
        for z, m in got:
            match = [e for e in expected if abs(e - z) < 1e-6 * max(1, abs(e))]
            assert len(match) == 1 and expected[match[0]] == m


def test_conjugation_closed_and_residuals(rng):
    tol = Tolerances()
    for _ in range(100):
        P = RealPoly(rng.uniform(-1, 1, int(rng.integers(2, 17))))
        roots = complex_roots(P, tol)
        assert sum(m for _, m in roots) == P.degree
        for z, m in roots:
            if z.imag != 0:
                assert (z.conjugate(), m) in roots
            size = sum(abs(c) * max(1, abs(z)) ** n for n, c in enumerate(P.coeffs))
            assert abs(P(z)) <= tol.root * size


def test_agrees_with_eigenvalue_route(rng):
    for _ in range(50):
        c = rng.uniform(-1, 1, 9)
        ours = np.sort_complex(np.array([z for z, m in complex_roots(RealPoly(c)) for _ in range(m)]))
        ref = np.sort_complex(np.polynomial.polynomial.polyroots(c))
        assert np.abs(ours - ref).max() < 1e-8


def test_aberth_converges_on_wilkinson_like():
    P = RealPoly.from_roots(range(1, 11))
    z, ok = aberth(np.array(P.coeffs) / P.lead)
    assert ok
    assert np.allclose(np.sort(z.real), np.arange(1, 11), atol=1e-6)


def test_high_multiplicity():
    P = RealPoly([1, 0, 1]) ** 3 * RealPoly([-2, 1]) ** 4
    got = as_dict(complex_roots(P))
    assert got == {(0.0, 1.0): 3, (0.0, -1.0): 3, (2.0, 0.0): 4}


def test_class_spectrum_examples():
    spectrum = class_spectrum(RealPoly([1, 0, 1, 0, 1]))
    assert len(spectrum) == 2
    assert spectrum.multiplicity(ConjugacyClass(1, 1)) == 1
    assert spectrum.multiplicity(ConjugacyClass(-1, 1)) == 1
    spectrum = class_spectrum(RealPoly([-2, 1]) ** 2)
    assert spectrum.to_json() == [{"t": 4.0, "n": 4.0, "mult": 2}]
    spectrum = class_spectrum(RealPoly([1, 0, 1]) ** 3)
    assert len(spectrum) == 1 and spectrum.multiplicity(ConjugacyClass(0, 1)) == 3
    assert spectrum.root_count() == 6


def test_quadratic_multiplicity_examples():
    assert quadratic_multiplicity(RealPoly([1, 0, 1, 0, 1]), ConjugacyClass(1, 1)) == 1
    assert quadratic_multiplicity(RealPoly([1, 0, 1]), ConjugacyClass(0, 4)) == 0
    P = RealPoly([1, 0, 1]) ** 2 * RealPoly([1, 1, 1])
    assert quadratic_multiplicity(P, ConjugacyClass(0, 1)) == 2


def test_spectrum_agrees_with_division(rng):
    for _ in range(100):
        classes = [ConjugacyClass(t, t * t / 4 + r * r) for t, r in zip(rng.uniform(-2, 2, 3), rng.uniform(0.5, 1.5, 3))]
        P = RealPoly([1.0])
        powers = rng.integers(1, 3, 3)
        for c, s in zip(classes, powers):
            P = P * c.char_poly() ** int(s)
        spectrum = class_spectrum(P)
        for c, s in zip(classes, powers):
            assert spectrum.multiplicity(c) == s
            assert quadratic_multiplicity(P, c) == s


def test_divides_reports_inexact():
    q, exact = divides(RealPoly([2, 0, 1]), RealPoly([1, 0, 1]), 1j)
    assert not exact
    q, exact = divides(RealPoly([1, 0, 2, 0, 1]), RealPoly([1, 0, 1]), 1j)
    assert exact and q.coeffs.tolist() == [1, 0, 1]
