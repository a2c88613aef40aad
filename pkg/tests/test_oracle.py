import pytest
import pytest_check as check

from conftest import P, field_of
from selfdual_codes_lib.codes import (
    count_selfdual_cyclic,
    count_selfdual_negacyclic,
    dual,
    enumerate_selfdual_cyclic,
    enumerate_selfdual_negacyclic,
    make_code,
)
from selfdual_codes_lib.config import OracleLimits
from selfdual_codes_lib.cyclo import factor_xn_minus_a
from selfdual_codes_lib.errors import OracleRangeExceeded
from selfdual_codes_lib.oracle import (
    DivisorIterator,
    all_divisors,
    count_divisors_of_degree,
    dual_agrees,
    galois_field,
    is_self_orthogonal,
    nullspace_dual,
    oracle_is_self_dual,
    oracle_selfdual_search,
)
from selfdual_codes_lib.poly import format_poly, product


def test_galois_field_uses_our_modulus(f9):
    GF = galois_field(f9)
    assert GF.order == 9
    w = GF(3)
    assert int(w * w) == 2


def test_divisor_iterator_covers_lattice(f5):
    fz = factor_xn_minus_a(f5, 10, -1)
    it = all_divisors(fz)
    divisors = list(it)
    assert len(it) == 36
    assert len(divisors) == 36
    assert len(set(divisors)) == 36
    assert divisors[0] == P("1", f5)
    assert it.cursor.exponents == (5, 5)


def test_divisor_iterator_degree_filter(f5):
    fz = factor_xn_minus_a(f5, 10, -1)
    half = list(DivisorIterator(fz, degree=5))
    assert len(half) == 6
    assert all(g.degree == 5 for g in half)


def test_self_orthogonality(f5):
    check.is_true(is_self_orthogonal(make_code(f5, 2, -1, "3 + x")))
    check.is_true(oracle_is_self_dual(make_code(f5, 2, -1, "3 + x")))
    check.is_false(is_self_orthogonal(make_code(f5, 4, 1, "1 + x")))
    code = make_code(f5, 10, -1, P("3 + x", f5) ** 5 * P("2 + x", f5))
    check.is_true(is_self_orthogonal(code))
    check.is_false(oracle_is_self_dual(code))


@pytest.mark.parametrize("q, n", [(5, 10), (5, 6), (3, 4), (3, 12), (9, 6), (13, 10), (7, 14), (5, 7)])
def test_oracle_matches_negacyclic_enumeration(q, n):
    field = field_of(q)
    found = oracle_selfdual_search(field, n, -1)
    assert sorted(found, key=lambda g: g.coeffs) == sorted(
        enumerate_selfdual_negacyclic(field, n), key=lambda g: g.coeffs
    )
    assert len(found) == count_selfdual_negacyclic(field, n)


@pytest.mark.parametrize("q, n", [(2, 14), (2, 8), (4, 6), (2, 7), (5, 10), (3, 6)])
def test_oracle_matches_cyclic_enumeration(q, n):
    field = field_of(q)
    found = oracle_selfdual_search(field, n, 1)
    assert len(found) == count_selfdual_cyclic(field, n)
    assert sorted(found, key=lambda g: g.coeffs) == sorted(
        enumerate_selfdual_cyclic(field, n), key=lambda g: g.coeffs
    )


def test_oracle_worked_examples():
    assert len(oracle_selfdual_search(field_of(5), 70, -1)) == 36
    assert len(oracle_selfdual_search(field_of(9), 30, -1)) == 64


def test_oracle_range_guards(f5, f9):
    with pytest.raises(OracleRangeExceeded):
        oracle_selfdual_search(f5, 70, -1, limits=OracleLimits(max_n=40))
    with pytest.raises(OracleRangeExceeded, match="184756 divisors of degree 20"):
        oracle_selfdual_search(f9, 40, -1, limits=OracleLimits(max_divisors=10**5))
    with pytest.raises(OracleRangeExceeded):
        oracle_selfdual_search(f5, 10, -1, limits=OracleLimits(max_divisors=5))
    assert len(oracle_selfdual_search(f5, 10, -1, limits=OracleLimits(max_divisors=6))) == 6


@pytest.mark.parametrize("q, n, a", [(5, 10, -1), (9, 12, -1), (3, 16, 1), (2, 14, 1), (7, 28, -1)])
def test_count_divisors_of_degree_matches_scan(q, n, a):
    fz = factor_xn_minus_a(field_of(q), n, a)
    for degree in (0, 1, n // 2, n - 1, n):
        check.equal(count_divisors_of_degree(fz, degree), len(list(DivisorIterator(fz, degree=degree))), f"degree {degree}")


def test_guard_counts_only_the_scanned_degree(f9):
    fz = factor_xn_minus_a(f9, 40, -1)
    assert fz.divisor_count() == 2**20
    assert count_divisors_of_degree(fz, 20) == 184756
    assert count_divisors_of_degree(fz, 20) < OracleLimits().max_divisors


def test_oracle_verbose_output(f5, capsys):
    oracle_selfdual_search(f5, 10, -1, verbose=True)
    out = capsys.readouterr().out
    assert "[Oracle]" in out
    assert "6 self-dual" in out


def test_nullspace_dual(f5):
    code = make_code(f5, 4, 1, "1 + x")
    N = nullspace_dual(code)
    assert N.shape == (1, 4)
    assert nullspace_dual(make_code(f5, 4, 1, "1")).shape == (0, 4)


@pytest.mark.parametrize("q, n, a", [(5, 10, -1), (9, 6, -1), (3, 8, 1), (7, 6, 1), (4, 5, 1)])
def test_polynomial_dual_agrees_with_nullspace(q, n, a):
    fz = factor_xn_minus_a(field_of(q), n, a)
    for g in all_divisors(fz):
        if g.degree == n:
            continue
        check.is_true(dual_agrees(make_code(fz.field, n, a, g)), str(g))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9, 25])
def test_random_codes_match_nullspace_dual(q, rng):
    field = field_of(q)
    shifts = (1,) if field.p == 2 else (1, -1)
    checked = 0
    while checked < 84:
        n = rng.randrange(1, 25)
        a = rng.choice(shifts)
        fz = factor_xn_minus_a(field, n, a)
        g = product((f ** rng.randrange(mult + 1) for f, mult in fz.factors), field)
        if g.degree == n:
            continue
        code = make_code(field, n, a, g)
        label = f"q={q} n={n} a={a} g={format_poly(g)}"
        check.is_true(dual_agrees(code), label)
        check.equal(dual(dual(code)), code, label)
        check.equal(code.dimension + dual(code).dimension, n, label)
        checked += 1
