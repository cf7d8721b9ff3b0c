import math

import numpy as np
import pytest

from hyperzero import (
    ClassificationMismatch,
    ConjugacyClass,
    ConstantPolynomial,
    OctPoly,
    Octonion,
    RealPoly,
)
from hyperzero.generators import constructed_poly, random_class, random_poly
from hyperzero.octonion import class_of, random_in_class, random_octonion, random_unit_imaginary
from hyperzero.poly import linear, normal, star_mul
from hyperzero.roots import class_spectrum
from hyperzero.textio import parse_poly
from hyperzero.zeros import (
    ISOLATED,
    REAL,
    SPHERICAL,
    classify_at,
    divide_by_class,
    divide_linear,
    factorize,
    plane_residual,
    remainder_at,
    structure_profile,
    summarize,
    verify_fta,
    zero_set,
)

i, j, k, ij = (Octonion.basis(n) for n in ("i", "j", "k", "ij"))
F = parse_poly("w^2 + w*i + j")
BETA = 0.5 + (math.sqrt(3) / 2) * i
ALPHA1 = Octonion([0.5, -0.5, -0.5, -0.5, 0, 0, 0, 0])
ALPHA2 = Octonion([-0.5, -0.5, 0.5, -0.5, 0, 0, 0, 0])


def close(x, y, tol=1e-9):
    return (Octonion(x) - Octonion(y)).norm() <= tol


def max_diff(f, g):
    n = max(len(f.coeffs), len(g.coeffs))
    a, b = np.zeros((n, 8)), np.zeros((n, 8))
    a[: len(f.coeffs)] = f.coeffs
    b[: len(g.coeffs)] = g.coeffs
    return float(np.abs(a - b).max(initial=0.0))


# division


def test_divide_linear_examples():
    alpha = Octonion([0.25, 1, -0.5, 0, 0, 2, 0, 0])
    delta = OctPoly.from_real(class_of(alpha).char_poly())
    g, r = divide_linear(delta, alpha)
    assert max_diff(g, linear(alpha.conj())) < 1e-15 and r.norm() < 1e-15
    g, r = divide_linear(F, BETA)
    assert close(r, F(BETA), 1e-15)
    assert max_diff(star_mul(linear(BETA), g) + OctPoly.constant(r), F) < 1e-15
    g, r = divide_linear(F, 0)
    assert g == OctPoly([i, 1]) and r == j


def test_division_reconstructs(rng):
    for _ in range(100):
        f = random_poly(rng, int(rng.integers(0, 7)))
        alpha = random_octonion(rng) * 2
        g, r = divide_linear(f, alpha)
        assert g.degree == f.degree - 1
        assert (r - f(alpha)).norm() <= 1e-13 * f.eval_scale(alpha)
        size = max(1.0, g.scale() * alpha.norm())
        assert max_diff(star_mul(linear(alpha), g) + OctPoly.constant(r), f) < 1e-13 * size


def test_remainder_examples():
    rem = remainder_at(F, ConjugacyClass(1, 1))
    assert close(rem.a, 1 + i) and close(rem.b, -(1 - j))
    rem = remainder_at(F, ConjugacyClass(-1, 1))
    assert close(rem.a, -1 + i) and close(rem.b, -(1 - j))
    c = ConjugacyClass(0.6, 1.3)
    rem = remainder_at(star_mul(OctPoly.from_real(c.char_poly()), parse_poly("w*k + ij")), c)
    assert rem.a.norm() < 1e-14 and rem.b.norm() < 1e-14


def test_class_division_reconstructs(rng):
    for _ in range(50):
        f = random_poly(rng, int(rng.integers(2, 7)))
        c = random_class(rng)
        h, rem = divide_by_class(f, c)
        back = star_mul(OctPoly.from_real(c.char_poly()), h) + rem.as_poly()
        assert max_diff(back, f) < 1e-12


def test_remainder_independent_of_representative(rng):
    for _ in range(10):
        f = random_poly(rng, 5)
        c = random_class(rng)
        base = remainder_at(f, c)
        for _ in range(20):
            rem = remainder_at(f, c, unit=random_unit_imaginary(rng))
            assert close(rem.a, base.a, 1e-12) and close(rem.b, base.b, 1e-12)


def test_normal_remainder_identity_real(rng):
    for _ in range(30):
        f = random_poly(rng, 4)
        x = float(rng.uniform(-2, 2))
        r = f(x)
        rn = remainder_at(OctPoly.from_real(normal(f)), ConjugacyClass(2 * x, x * x))
        assert abs(rn.b.re - r.norm_sq()) <= 1e-12 * max(1, r.norm_sq()) and rn.a.is_zero()


def test_normal_remainder_identity_nonreal(rng):
    for _ in range(30):
        f = random_poly(rng, 4)
        c = random_class(rng)
        rem = remainder_at(f, c)
        a, b = rem.a, rem.b
        expected_a = (a * b.conj() + b * a.conj()).re + c.t * a.norm_sq()
        expected_b = b.norm_sq() - c.n * a.norm_sq()
        rn = remainder_at(OctPoly.from_real(normal(f)), c)
        scale = max(1.0, abs(expected_a), abs(expected_b))
        assert rn.a.is_real() and rn.b.is_real()
        assert abs(rn.a.re - expected_a) <= 1e-11 * scale
        assert abs(rn.b.re - expected_b) <= 1e-11 * scale


# classification


def test_classify_examples():
    rec = classify_at(F, ConjugacyClass(1, 1))
    assert rec.kind == ISOLATED and close(rec.point, ALPHA1) and rec.multiplicity == 1
    rec = classify_at(parse_poly("w^2 + 1"), ConjugacyClass(0, 1))
    assert rec.kind == SPHERICAL and rec.point is None and rec.multiplicity == 2
    assert classify_at(parse_poly("w^2 + 1"), ConjugacyClass(0, 4)) is None
    rec = classify_at(parse_poly("w - 3"), ConjugacyClass(6, 9))
    assert rec.kind == REAL and rec.point == Octonion(3)


def test_zero_set_examples():
    recs = zero_set(F)
    assert [r.kind for r in recs] == [ISOLATED, ISOLATED]
    assert close(recs[0].point, ALPHA2) and close(recs[1].point, ALPHA1)
    assert [r.multiplicity for r in recs] == [1, 1]
    (rec,) = zero_set(star_mul(linear(i), linear(i)))
    assert rec.kind == ISOLATED and close(rec.point, i) and rec.multiplicity == 2
    (rec,) = zero_set(parse_poly("w^2 + 1"))
    assert rec.kind == SPHERICAL and rec.cls == ConjugacyClass(0, 1) and rec.multiplicity == 2


def test_zero_set_json():
    rec = zero_set(F)[1]
    data = rec.to_json()
    assert data["kind"] == "isolated" and data["multiplicity"] == 1
    assert set(data["class"]) == {"t", "n"} and len(data["point"]) == 8
    assert zero_set(parse_poly("w^2+1"))[0].to_json()["point"] is None


def test_constant_rejected():
    with pytest.raises(ConstantPolynomial):
        zero_set(OctPoly.constant(i))
    with pytest.raises(ConstantPolynomial):
        verify_fta(OctPoly())


def test_empty_class_after_spectrum_hit_raises(monkeypatch):
    import hyperzero.zeros as zeros

    monkeypatch.setattr(zeros, "classify_at", lambda *args, **kw: None)
    with pytest.raises(ClassificationMismatch):
        zero_set(F)


def test_trichotomy_on_random_polynomials(rng):
    for _ in range(40):
        f = constructed_poly(rng, int(rng.integers(1, 7)))
        for rec in zero_set(f):
            if rec.kind == SPHERICAL:
                assert rec.multiplicity >= 2
                for _ in range(20):
                    x = random_in_class(rec.cls, rng)
                    assert f(x).norm() <= 1e-8 * f.eval_scale(x)
            else:
                assert f(rec.point).norm() <= 1e-8 * f.eval_scale(rec.point)
                assert class_of(rec.point).isclose(rec.cls)
            if rec.kind == ISOLATED:
                assert not rec.point.is_real()


def test_sphere_points_other_than_isolated_zero_are_not_zeros(rng):
    f = F
    for rec in zero_set(f):
        for _ in range(10):
            x = random_in_class(rec.cls, rng)
            if (x - rec.point).norm() > 1e-3:
                assert f(x).norm() > 1e-6


def test_real_polynomials_have_no_isolated_zeros(rng):
    for _ in range(40):
        f = OctPoly.from_real(RealPoly(rng.uniform(-1, 1, int(rng.integers(2, 8)))))
        assert all(r.kind != ISOLATED for r in zero_set(f))


def test_spectrum_is_finite(rng):
    for _ in range(30):
        f = random_poly(rng, int(rng.integers(1, 8)))
        assert len(class_spectrum(normal(f))) <= 2 * f.degree


def test_real_multiplicity_cross_check(rng):
    # for real x the multiplicity through N(f) equals the power of (w - x) dividing f
    for _ in range(20):
        x = float(rng.uniform(-2, 2))
        s = int(rng.integers(1, 4))
        f = random_poly(rng, 2)
        for _ in range(s):
            f = star_mul(linear(x), f)
        rec = next(r for r in zero_set(f) if r.kind == REAL and abs(r.point.re - x) < 1e-6)
        power, g = 0, f
        while g.degree >= 1:
            q, r = divide_linear(g, x)
            if r.norm() > 1e-8 * g.eval_scale(x):
                break
            power, g = power + 1, q
        assert rec.multiplicity == power == s


def test_difference_of_monic_products():
    f = star_mul(linear(i), linear(i))
    g = star_mul(linear(i), linear(j))
    (rec,) = zero_set(f - g)
    assert rec.kind == ISOLATED and close(rec.point, i) and rec.multiplicity == 1


def test_constant_factor_polynomials():
    f = parse_poly("w*i - j")
    (rec,) = zero_set(f)
    assert close(rec.point, ij)
    (rec,) = zero_set(star_mul(f, OctPoly.constant(k)))
    assert close(rec.point, -ij)


# counting


def test_fta_examples():
    s = verify_fta(F)
    assert (s.k, s.i, s.total_multiplicity, s.degree) == (2, 2, 2, 2)
    s = verify_fta(parse_poly("w - 3"))
    assert (s.r, s.total_multiplicity) == (1, 1)
    s = verify_fta(parse_poly("(w^2 + 1)*(w - j)"))
    assert s.total_multiplicity == 3 and s.s == 1
    assert summarize(zero_set(F), 2).to_json()["k"] == 2


def test_fta_random(rng):
    for n in range(60):
        f = random_poly(rng, int(rng.integers(1, 9))) if n % 2 else constructed_poly(rng, int(rng.integers(1, 9)))
        s = verify_fta(f)
        assert s.total_multiplicity == f.degree
        assert s.r + s.i + 2 * s.s <= f.degree


# factorization


def test_factorize_examples():
    fac = factorize(parse_poly("w^2 + 1"))
    assert fac.c == Octonion(1)
    assert all(class_of(a).isclose(ConjugacyClass(0, 1)) for a in fac.roots)
    assert max_diff(fac.expand(), parse_poly("w^2 + 1")) < 1e-12
    fac = factorize(F)
    assert close(fac.roots[0], ALPHA2) or close(fac.roots[0], ALPHA1)
    assert max_diff(fac.expand(), F) < 1e-14
    fac = factorize(star_mul(linear(i), linear(j)))
    assert close(fac.roots[0], i) and close(fac.roots[1], j) and fac.c == Octonion(1)


def test_factorize_random(rng):
    for _ in range(30):
        f = random_poly(rng, int(rng.integers(1, 6)))
        fac = factorize(f)
        assert len(fac.roots) == f.degree and not fac.c.is_zero()
        assert max_diff(fac.expand(), f) <= 1e-9 * f.scale()
        classes = [r.cls for r in zero_set(f)]
        assert all(any(class_of(a).isclose(c) for c in classes) for a in fac.roots)


def test_factorize_prefers_highest_multiplicity():
    f = star_mul(parse_poly("(w^2 + 1)^2"), linear(2.0))
    fac = factorize(f)
    assert class_of(fac.roots[0]).isclose(ConjugacyClass(0, 1))


# structure


def test_structure_examples():
    prof = structure_profile(parse_poly("w^2 + w + 1 + k"))
    assert prof.form == "real+constant" and prof.ok
    for rec in prof.records:
        assert rec.kind == ISOLATED
        assert np.abs(rec.point.coords[[2, 3, 5, 6, 7]]).max() < 1e-9
    prof = structure_profile(parse_poly("w^3 + w*i"))
    assert prof.form == "real+linear" and prof.ok
    prof = structure_profile(parse_poly("w^2 + 1"))
    assert prof.form == "real" and prof.ok
    assert structure_profile(F).form == "real+linear"
    assert structure_profile(parse_poly("w^3 + w^2*i")).form == "general"


def test_plane_residual_keeps_precision():
    u = Octonion([0, 0.3, -0.2, 0.5, 0.1, 0, 0.7, -0.4])
    x = 3.0 + 123.456 * u
    assert plane_residual(x, u) < 1e-13
    # ik is orthogonal to u, so a 1e-9 step along it is the whole residual
    assert abs(plane_residual(x + 1e-9 * Octonion.basis("ik"), u) - 1e-9) < 1e-13
