import math

import pytest
import pytest_check as check

from conftest import P, field_of, galois_divisor_count
from selfdual_codes_lib.errors import (
    InvalidInput,
    NegacyclicTrivialInCharTwo,
    NotCoprime,
    ShapeMismatch,
    WildRamification,
)
from selfdual_codes_lib.cyclo import (
    Coset,
    coset_pairing,
    cosets,
    factor_unity,
    factor_xn_minus_a,
    frobenius_power,
    iter_exponent_vectors,
    minimal_poly,
    mult_order,
    strip_p_part,
)
from selfdual_codes_lib.poly import Poly, format_poly, is_irreducible, reciprocal


@pytest.mark.parametrize("q, m, expected", [(5, 4, 1), (3, 8, 2), (2, 7, 3), (4, 1, 1), (9, 20, 2), (5, 28, 6)])
def test_mult_order(q, m, expected):
    assert mult_order(q, m) == expected


def test_mult_order_rejects_bad_input():
    with pytest.raises(NotCoprime):
        mult_order(5, 10)
    with pytest.raises(InvalidInput):
        mult_order(2, 0)


def test_strip_p_part():
    check.equal(strip_p_part(70, 5), (14, 1))
    check.equal(strip_p_part(1690, 13), (10, 2))
    check.equal(strip_p_part(126, 3), (14, 2))
    check.equal(strip_p_part(7, 2), (7, 0))


def test_cosets_partition_z7_over_f2():
    cs = cosets(2, 7)
    assert [str(c) for c in cs] == ["{0}", "{1,2,4}", "{3,5,6}"]
    pairing = coset_pairing(cs)
    assert pairing.s == 1
    assert pairing.t == 1
    assert pairing.pairs[0][0].representative == 1
    assert pairing.pairs[0][1].representative == 3


def test_odd_cosets():
    cs = cosets(3, 8, "odd")
    assert [c.members for c in cs] == [(1, 3), (5, 7)]
    assert not cs[0].is_self_paired
    pairing = coset_pairing(cs)
    assert (pairing.s, pairing.t) == (0, 1)


@pytest.mark.parametrize("q, m", [(5, 28), (9, 20), (7, 24), (3, 22), (13, 10)])
def test_odd_cosets_partition_the_odd_residues(q, m):
    cs = cosets(q, m, "odd")
    members = sorted(j for c in cs for j in c.members)
    assert members == list(range(1, m, 2))
    for c in cs:
        check.equal(c.size, mult_order(q, m // math.gcd(c.representative, m)))


def test_coset_errors():
    with pytest.raises(ShapeMismatch):
        cosets(5, 3, "odd")
    with pytest.raises(NotCoprime):
        cosets(5, 10)
    with pytest.raises(InvalidInput):
        cosets(5, 4, "even")
    with pytest.raises(InvalidInput):
        coset_pairing([Coset(7, 1, (1, 2, 4))])


def test_coset_self_pairing():
    assert Coset(8, 4, (4,)).is_self_paired
    assert not Coset(7, 1, (1, 2, 4)).is_self_paired


def test_factor_x7_minus_1_over_f2(f2):
    fz = factor_unity(f2, 7, 1)
    assert [format_poly(f) for f in fz.polys] == ["1 + x", "1 + x^2 + x^3", "1 + x + x^3"]
    assert fz.self_reciprocal == (0,)
    assert fz.pairs == ((1, 2),)
    assert fz.pairing_label(0) == "self"
    assert fz.pairing_label(2) == "pair:1"


def test_factor_negacyclic_f5_length_10(f5):
    fz = factor_xn_minus_a(f5, 10, -1)
    assert [format_poly(f) for f in fz.polys] == ["3 + x", "2 + x"]
    assert [mult for _f, mult in fz.factors] == [5, 5]
    assert (fz.core, fz.r, fz.multiplicity) == (2, 1, 5)
    assert (fz.s, fz.t) == (0, 1)
    assert fz.partner(0) == 1
    assert fz.divisor_count() == 36
    assert fz.describe() == "(3 + x)^5 (2 + x)^5"


def test_factor_x2_plus_1_over_f9(f9):
    fz = factor_unity(f9, 2, -1)
    assert [format_poly(f) for f in fz.polys] == ["[0,2] + x", "[0,1] + x"]
    assert fz.pairs == ((0, 1),)


def test_x4_plus_1_over_f3(f3):
    fz = factor_unity(f3, 4, -1)
    assert set(fz.polys) == {P("2 + x + x^2", f3), P("2 + 2*x + x^2", f3)}
    assert fz.t == 1
    i, j = fz.pairs[0]
    assert reciprocal(fz.polys[i]) == fz.polys[j]


@pytest.mark.parametrize(
    "q, n, a, s, t",
    [
        (5, 70, -1, 0, 2),
        (9, 30, -1, 0, 3),
        (9, 126, -1, 0, 3),
        (3, 12, -1, 0, 1),
        (7, 14, -1, 1, 0),
        (2, 14, 1, 1, 1),
        (13, 10, 1, 4, 0),
    ],
)
def test_pairing_counts(q, n, a, s, t):
    fz = factor_xn_minus_a(field_of(q), n, a)
    assert (fz.s, fz.t) == (s, t)
    assert fz.s + 2 * fz.t == len(fz.factors)


@pytest.mark.parametrize("q, n, a", [(5, 70, -1), (9, 30, -1), (2, 14, 1), (3, 12, -1), (7, 14, 1), (4, 15, 1)])
def test_factorization_is_complete(q, n, a):
    fz = factor_xn_minus_a(field_of(q), n, a)
    assert fz.product() == Poly.x_n_minus(fz.field, n, a)
    for f in fz.polys:
        check.is_true(f.is_monic)
        check.is_true(is_irreducible(f), format_poly(f))
    for i in fz.self_reciprocal:
        check.equal(reciprocal(fz.polys[i]), fz.polys[i])
    for i, j in fz.pairs:
        check.less(i, j)
        check.equal(reciprocal(fz.polys[i]), fz.polys[j])


@pytest.mark.slow
@pytest.mark.timeout(3600)
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_every_small_factorization_is_complete(q):
    field = field_of(q)
    shifts = (1,) if field.p == 2 else (1, -1)
    for n in range(1, 65):
        for a in shifts:
            fz = factor_xn_minus_a(field, n, a)
            label = f"q={q} n={n} a={a}"
            check.equal(fz.product(), Poly.x_n_minus(field, n, a), label)
            check.equal(len(set(fz.polys)), len(fz.polys), label)
            for f in fz.polys:
                check.is_true(f.is_monic and is_irreducible(f), f"{label}: {format_poly(f)}")


@pytest.mark.parametrize("q, n, a", [(5, 20, -1), (9, 12, -1), (3, 10, 1), (7, 6, 1), (8, 7, 1)])
def test_divisor_count_agrees_with_galois(q, n, a):
    fz = factor_xn_minus_a(field_of(q), n, a)
    assert fz.divisor_count() == galois_divisor_count(fz.target)


def test_factorizations_are_cached(f5):
    assert factor_xn_minus_a(f5, 10, -1) is factor_xn_minus_a(f5, 10, -1)


def test_factorization_errors(f2, f5):
    with pytest.raises(NegacyclicTrivialInCharTwo):
        factor_xn_minus_a(f2, 6, -1)
    with pytest.raises(InvalidInput):
        factor_xn_minus_a(f5, 6, 2)
    with pytest.raises(InvalidInput):
        factor_xn_minus_a(f5, 0, 1)
    with pytest.raises(WildRamification):
        factor_unity(f5, 10, 1)


def test_minimal_poly_checks(f5):
    c = cosets(5, 4, "odd")[0]
    assert minimal_poly(c, f5, 4) == P("3 + x", f5)
    with pytest.raises(InvalidInput):
        minimal_poly(c, f5, 8)


def test_frobenius_power(f9):
    f = P("[0,1] + x", f9)
    assert frobenius_power(f, 0) == f
    assert frobenius_power(f, 2) == f**9
    assert frobenius_power(f, 1) == f**3


def test_iter_exponent_vectors(f5):
    fz = factor_xn_minus_a(f5, 10, -1)
    vectors = list(iter_exponent_vectors(fz))
    assert len(vectors) == 36
    assert vectors[0] == (0, 0)
    assert vectors[-1] == (5, 5)
