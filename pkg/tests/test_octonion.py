import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from hyperzero import ConjugacyClass, DivisionByZero, InvalidClass, Octonion, Tolerances
from hyperzero.octonion import (
    BASIS,
    MUL_TABLE,
    associator,
    char_poly,
    class_of,
    conj,
    inverse,
    mul,
    norm_sq,
    omul,
    random_octonion,
    random_unit_imaginary,
    representative,
    trace,
)

E = {name: Octonion.basis(name) for name in BASIS}
coords = st.lists(st.floats(-4, 4, allow_nan=False), min_size=8, max_size=8)


def close(x, y, tol=1e-12):
    x, y = Octonion(x), Octonion(y)
    return (x - y).norm() <= tol * max(1.0, x.norm(), y.norm())


# products


def test_unit_and_basis_products():
    x = Octonion([1, 2, 3, 4, 5, 6, 7, 8])
    assert mul(Octonion(1), x) == x
    assert mul(E["i"], E["j"]) == E["ij"]


def test_associator_witness():
    # i(jk) = -(ij)k, (ij)k = ijk
    assert mul(E["i"], mul(E["j"], E["k"])) == -E["ijk"]
    assert mul(mul(E["i"], E["j"]), E["k"]) == E["ijk"]
    assert associator(E["i"], E["j"], E["k"]) == 2 * E["ijk"]


@pytest.mark.parametrize("a", BASIS)
@pytest.mark.parametrize("b", BASIS)
def test_basis_table_matches_oracle(a, b):
    expected = [float(v) for v in oracle.omul(oracle.unit(a), oracle.unit(b))]
    assert (E[a] * E[b]).coords.tolist() == expected
    assert mul(E[a], E[b]).coords.tolist() == expected


@settings(max_examples=60, deadline=None)
@given(coords, coords)
def test_products_match_oracle(x, y):
    expected = Octonion([float(v) for v in oracle.omul(x, y)])
    assert close(mul(x, y), expected)
    assert close(Octonion(x) * Octonion(y), expected)


def test_table_agrees_with_doubling_formula(rng):
    x = rng.uniform(-1, 1, (500, 8))
    y = rng.uniform(-1, 1, (500, 8))
    via_table = np.einsum("ni,nj,ijk->nk", x, y, MUL_TABLE)
    assert np.abs(via_table - omul(x, y)).max() < 1e-14


def test_quaternion_closure(rng):
    for _ in range(200):
        x, y = random_octonion(rng, True), random_octonion(rng, True)
        p = x * y
        assert p.is_quaternion()
        assert not np.any(p.coords[4:])


# conjugation, trace, norm


def test_conj_examples():
    assert conj(Octonion(1)) == Octonion(1)
    assert conj(E["i"]) == -E["i"]
    assert conj(2 + 3 * E["i"] - E["k"]) == 2 - 3 * E["i"] + E["k"]


def test_conj_antihomomorphism(rng):
    for _ in range(100):
        x, y = random_octonion(rng), random_octonion(rng)
        assert conj(conj(x)) == x
        assert close(conj(x * y), conj(y) * conj(x))


def test_trace_and_norm_examples():
    x = 3 + E["i"]
    assert trace(x) == 6 and norm_sq(x) == 10
    assert norm_sq(E["i"] + E["j"]) == 2


def test_inverse_examples():
    assert inverse(Octonion(2)) == Octonion(0.5)
    assert inverse(E["i"]) == -E["i"]
    assert inverse(E["i"] + E["j"]) == -(E["i"] + E["j"]) / 2


def test_inverse_both_sides(rng):
    for _ in range(100):
        x = random_octonion(rng)
        assert close(x * inverse(x), Octonion(1), 1e-13)
        assert close(inverse(x) * x, Octonion(1), 1e-13)


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        inverse(Octonion(0))
    with pytest.raises(DivisionByZero):
        inverse(Octonion([1e-6, 0, 0, 0, 0, 0, 0, 0]))


def test_right_division(rng):
    x, y = random_octonion(rng), random_octonion(rng)
    assert close((x / y) * y, x, 1e-13)


# identities of an alternative composition algebra


def test_alternative_identities(rng):
    for _ in range(200):
        x, y, z = (random_octonion(rng) for _ in range(3))
        assert close((x * x) * y, x * (x * y))
        assert close(y * (x * x), (y * x) * x)
        assert close(x * (y * x), (x * y) * x)
        assert math.isclose(norm_sq(x * y), norm_sq(x) * norm_sq(y), rel_tol=1e-12)
        assert math.isclose(trace(x * y), trace(y * x), rel_tol=1e-12, abs_tol=1e-12)
        assert math.isclose(trace((x * y) * z), trace(x * (y * z)), rel_tol=1e-12, abs_tol=1e-12)


def test_two_generators_associate(rng):
    for _ in range(30):
        x, y = random_octonion(rng), random_octonion(rng)
        gens = [x, y, x.conj(), y.conj()]
        for a in gens:
            for b in gens:
                for c in gens:
                    assert close((a * b) * c, a * (b * c))


def test_three_generators_do_not_associate(rng):
    x, y, z = (random_octonion(rng) for _ in range(3))
    assert associator(x, y, z).norm() > 1e-3


# conjugacy classes


def test_class_of_examples():
    assert class_of(E["i"]) == ConjugacyClass(0, 1)
    beta = 0.5 + (math.sqrt(3) / 2) * E["i"]
    c = class_of(beta)
    assert c.isclose(ConjugacyClass(1, 1))


def test_class_is_conjugation_invariant(rng):
    for _ in range(50):
        x = random_octonion(rng, True)
        u = random_octonion(rng, True)
        u = u / u.norm()
        assert class_of(u * x * inverse(u)).isclose(class_of(x))
        assert class_of(x.conj()) == class_of(x)


def test_class_of_snaps_nearly_real():
    c = class_of(Octonion([2, 1e-6, 0, 0, 0, 0, 0, 0]))
    assert c.is_real()
    assert representative(c) == Octonion(2)


def test_invalid_class():
    with pytest.raises(InvalidClass):
        ConjugacyClass(3, 1)
    with pytest.raises(InvalidClass):
        ConjugacyClass(0, -1)


def test_char_poly_examples():
    assert char_poly(ConjugacyClass(0, 1)).coeffs.tolist() == [1, 0, 1]
    assert char_poly(ConjugacyClass(1, 1)).coeffs.tolist() == [1, -1, 1]
    assert char_poly(ConjugacyClass(4, 4)).coeffs.tolist() == [4, -4, 1]


def test_representative_examples():
    assert representative(ConjugacyClass(0, 1)) == E["i"]
    assert close(representative(ConjugacyClass(1, 1)), 0.5 + (math.sqrt(3) / 2) * E["i"])
    assert representative(ConjugacyClass(6, 9)) == Octonion(3)


def test_representative_lies_on_sphere(rng):
    c = ConjugacyClass(1.5, 2.0)
    for _ in range(20):
        x = representative(c, random_unit_imaginary(rng))
        assert c.contains(x)


def test_tolerances_are_configurable():
    loose = Tolerances(cls=1e-2)
    c = ConjugacyClass(2.0, 1.001)
    assert not c.is_real()
    assert c.is_real(loose)


def test_text_and_json():
    x = Octonion([0.5, -0.5, -0.5, -0.5, 0, 0, 0, 0])
    assert str(x) == "1/2 - i/2 - j/2 - ij/2"
    assert Octonion(x.to_json()) == x
    with pytest.raises(ValueError):
        Octonion([math.nan] + [0] * 7)
