import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hypercross.algebra import (
    BasisProduct,
    Hypercomplex,
    LevelError,
    basis_table,
    cd_multiply,
    conjugate,
    non_associative_triples,
    norm_sq,
    table_multiply,
    zero_divisor_pairs,
)

E = Hypercomplex.basis
finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def coeffs(level):
    return arrays(np.float64, 1 << level, elements=finite)


def hamilton(p, q):
    # textbook quaternion product, independent of the doubling recursion
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return np.array(
        [
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ]
    )


def test_e1_e2_is_e3():
    assert E(2, 1) * E(2, 2) == E(2, 3)


@pytest.mark.parametrize("level", range(6))
def test_identity_element(level, rng):
    x = Hypercomplex(rng.uniform(-1, 1, 1 << level))
    one = Hypercomplex.real(level)
    assert one * x == x
    assert x * one == x


@given(coeffs(2), coeffs(2))
def test_quaternions_match_hamilton_product(p, q):
    got = cd_multiply(Hypercomplex(p), Hypercomplex(q)).coeffs
    np.testing.assert_allclose(got, hamilton(p, q), rtol=0, atol=1e-12)


def test_octonion_norm_composition(rng):
    for _ in range(1000):
        a = Hypercomplex(rng.uniform(-1, 1, 8))
        b = Hypercomplex(rng.uniform(-1, 1, 8))
        lhs, rhs = norm_sq(a * b), norm_sq(a) * norm_sq(b)
        assert abs(lhs - rhs) <= 1e-12 * rhs


@pytest.mark.parametrize("level", [0, 1, 2, 3])
@settings(max_examples=50)
@given(data=st.data())
def test_norm_composition_up_to_octonions(level, data):
    a = Hypercomplex(data.draw(coeffs(level)))
    b = Hypercomplex(data.draw(coeffs(level)))
    rhs = norm_sq(a) * norm_sq(b)
    assert abs(norm_sq(a * b) - rhs) <= 1e-12 * max(rhs, 1e-300) + 1e-300


def test_conjugate_examples():
    assert conjugate(5 * Hypercomplex.real(3)) == 5 * Hypercomplex.real(3)
    assert conjugate(E(3, 1)) == -E(3, 1)


@given(coeffs(3))
def test_conjugate_is_involution(c):
    a = Hypercomplex(c)
    assert conjugate(conjugate(a)) == a


@given(coeffs(2), coeffs(2))
def test_conjugate_reverses_products(p, q):
    a, b = Hypercomplex(p), Hypercomplex(q)
    np.testing.assert_allclose(conjugate(a * b).coeffs, (conjugate(b) * conjugate(a)).coeffs, atol=1e-12)


def test_norm_sq_examples():
    assert norm_sq(E(2, 3)) == 1
    assert norm_sq(Hypercomplex.zero(4)) == 0


@given(coeffs(4))
def test_norm_sq_is_real_part_of_a_conj_a_sedenions(c):
    a = Hypercomplex(c)
    prod = a * conjugate(a)
    assert prod.re == pytest.approx(norm_sq(a), rel=1e-12, abs=1e-12)
    np.testing.assert_allclose(prod.im, 0, atol=1e-12)


def test_quaternion_table_is_exact():
    t = basis_table(2)
    assert t[1, 2] == BasisProduct(1, 3)
    assert t[2, 3] == BasisProduct(1, 1)
    assert t[3, 1] == BasisProduct(1, 2)
    for i in (1, 2, 3):
        assert t[i, i] == BasisProduct(-1, 0)
    assert t.sign.dtype.kind == "i"


@pytest.mark.parametrize("k", range(6))
def test_identity_row_and_imaginary_squares(k):
    t = basis_table(k)
    for j in range(t.dim):
        assert t[0, j] == BasisProduct(1, j)
        assert t[j, 0] == BasisProduct(1, j)
    for i in range(1, t.dim):
        assert t[i, i] == BasisProduct(-1, 0)


@pytest.mark.parametrize("k", range(6))
def test_table_agrees_with_recursive_product(k):
    t = basis_table(k)
    for i in range(t.dim):
        for j in range(t.dim):
            s, idx = t[i, j]
            assert E(k, i) * E(k, j) == s * E(k, idx)


def test_octonion_anticommutation():
    t = basis_table(3)
    for i, j in itertools.combinations(range(1, 8), 2):
        assert t[i, j].index == t[j, i].index
        assert t[i, j].sign == -t[j, i].sign


@pytest.mark.parametrize("k", [-1, 6, 2.0])
def test_basis_table_level_range(k):
    with pytest.raises(LevelError):
        basis_table(k)


def test_level_mismatch():
    with pytest.raises(LevelError):
        cd_multiply(E(2, 1), E(3, 1))
    with pytest.raises(LevelError):
        Hypercomplex(np.ones(3))


def test_immutable():
    a = E(2, 1)
    with pytest.raises(AttributeError):
        a.level = 3
    with pytest.raises(ValueError):
        a.coeffs[0] = 1.0


def test_table_multiply_examples(rng):
    t2 = basis_table(2)
    assert table_multiply(E(2, 1), E(2, 2), t2) == E(2, 3)
    x = Hypercomplex(rng.uniform(-1, 1, 4))
    assert table_multiply(Hypercomplex.real(2), x, t2) == x


def test_table_multiply_matches_recursive(rng):
    t3 = basis_table(3)
    for _ in range(200):
        a = Hypercomplex(rng.uniform(-1, 1, 8))
        b = Hypercomplex(rng.uniform(-1, 1, 8))
        ref = cd_multiply(a, b).coeffs
        got = table_multiply(a, b, t3).coeffs
        assert np.abs(got - ref).max() < 1e-13 * np.abs(ref).max()


def test_table_multiply_level_mismatch():
    with pytest.raises(LevelError):
        table_multiply(E(2, 1), E(2, 2), basis_table(3))


def test_octonions_are_alternative(rng):
    for _ in range(1000):
        a = Hypercomplex(rng.uniform(-1, 1, 8))
        b = Hypercomplex(rng.uniform(-1, 1, 8))
        np.testing.assert_allclose((a * (a * b)).coeffs, ((a * a) * b).coeffs, atol=1e-12)
        np.testing.assert_allclose(((b * a) * a).coeffs, (b * (a * a)).coeffs, atol=1e-12)


def test_octonions_not_associative():
    triples = non_associative_triples(3)
    assert triples
    i, j, k = triples[0]
    assert (E(3, i) * E(3, j)) * E(3, k) != E(3, i) * (E(3, j) * E(3, k))


def test_quaternions_associative():
    assert non_associative_triples(2) == []


def test_sedenion_zero_divisors_and_norm_failure():
    pairs = zero_divisor_pairs(4)
    assert pairs
    i, j, k, l = pairs[0]
    a = E(4, i) + E(4, j)
    b = E(4, k) - E(4, l)
    assert not np.any((a * b).coeffs)
    # |a|^2 |b|^2 = 4 but |ab|^2 = 0
    assert norm_sq(a) * norm_sq(b) == 4.0
    assert norm_sq(a * b) == 0.0


def test_octonions_have_no_basis_zero_divisors():
    assert zero_divisor_pairs(3) == []
