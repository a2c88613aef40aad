"""Brute-force ground truth: divisor lattices and exact linear algebra.

Linear algebra runs on galois FieldArrays built from our own field modulus,
so integer encodings carry over unchanged.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import galois
import numpy as np

from .codes import ConstacyclicCode, ExponentVector, dual, generator_matrix
from .config import OracleLimits, oracle_limits
from .cyclo import Factorization, factor_xn_minus_a
from .errors import OracleRangeExceeded
from .gf import FieldSpec
from .poly import Poly, format_poly, product


@lru_cache(maxsize=None)
def galois_field(field: FieldSpec) -> type[galois.FieldArray]:
    if field.s == 1:
        return galois.GF(field.p)
    modulus = galois.Poly(list(reversed(field.modulus)), field=galois.GF(field.p))
    return galois.GF(field.p**field.s, irreducible_poly=modulus)


class DivisorIterator:
    """Monic divisors prod f_i^k_i of a factorized target, k in lexicographic order.

    ``len()`` is the size of the whole lattice; with ``degree`` set only the
    divisors of that degree are produced. ``cursor`` holds the exponent vector
    of the divisor last produced.
    """

    def __init__(self, factorization: Factorization, degree: int | None = None) -> None:
        self.factorization = factorization
        self.degree = degree
        self.cursor: ExponentVector | None = None

    def __len__(self) -> int:
        return self.factorization.divisor_count()

    def __iter__(self) -> Iterator[Poly]:
        fz = self.factorization
        field = fz.field
        degs = [f.degree for f, _mult in fz.factors]
        mults = [mult for _f, mult in fz.factors]
        headroom = [0] * (len(degs) + 1)
        for i in range(len(degs) - 1, -1, -1):
            headroom[i] = headroom[i + 1] + degs[i] * mults[i]
        wanted = self.degree
        full = product((f**mult for f, mult in fz.factors), field)
        if full != fz.target:
            raise AssertionError(f"factors multiply to {format_poly(full)}, not {format_poly(fz.target)}")

        def walk(i: int, prefix: Poly, deg: int, exps: list[int]) -> Iterator[Poly]:
            if i == len(degs):
                if wanted is not None and deg != wanted:
                    return
                self.cursor = ExponentVector(fz, tuple(exps))
                yield prefix
                return
            f = fz.factors[i][0]
            current = prefix
            for e in range(mults[i] + 1):
                d = deg + e * degs[i]
                if wanted is not None:
                    if d > wanted:
                        break
                    if d + headroom[i + 1] < wanted:
                        current = current * f
                        continue
                yield from walk(i + 1, current, d, exps + [e])
                current = current * f

        yield from walk(0, Poly.one(field), 0, [])


def all_divisors(fz: Factorization) -> DivisorIterator:
    return DivisorIterator(fz)


def count_divisors_of_degree(fz: Factorization, degree: int) -> int:
    """Number of monic divisors of the given degree, the size of a degree-filtered scan."""
    counts = [1] + [0] * degree
    for f, mult in fz.factors:
        step = [0] * (degree + 1)
        for d, c in enumerate(counts):
            if not c:
                continue
            for e in range(mult + 1):
                if d + e * f.degree > degree:
                    break
                step[d + e * f.degree] += c
        counts = step
    return counts[degree]


def _check_range(fz: Factorization, limits: OracleLimits, degree: int) -> None:
    if fz.n > limits.max_n:
        raise OracleRangeExceeded(f"n={fz.n} exceeds the oracle length guard {limits.max_n}")
    count = count_divisors_of_degree(fz, degree)
    if count > limits.max_divisors:
        raise OracleRangeExceeded(
            f"x^{fz.n} - ({fz.a}) over {fz.field.label} has {count} divisors of degree {degree}, "
            f"guard is {limits.max_divisors}"
        )


def is_self_orthogonal(code: ConstacyclicCode) -> bool:
    """G G^T = 0 over the code's field, row 0 of the product first."""
    GF = galois_field(code.field)
    G = GF(generator_matrix(code))
    if np.any(G[0] @ G.T):
        return False
    return not np.any(G @ G.T)


def oracle_is_self_dual(code: ConstacyclicCode) -> bool:
    return 2 * code.dimension == code.n and is_self_orthogonal(code)


def oracle_selfdual_search(
    field: FieldSpec,
    n: int,
    a: int,
    *,
    limits: OracleLimits | None = None,
    verbose: bool = False,
) -> list[Poly]:
    """Divisors of degree n/2 of x^n - a whose generator matrix is self-orthogonal."""
    limits = limits or oracle_limits()
    if n > limits.max_n:
        raise OracleRangeExceeded(f"n={n} exceeds the oracle length guard {limits.max_n}")
    fz = factor_xn_minus_a(field, n, a)
    if n % 2:
        if verbose:
            print(f"[Oracle] n={n} is odd over {field.label}; no self-dual codes")
        return []
    _check_range(fz, limits, n // 2)

    found: list[Poly] = []
    scanned = 0
    for g in DivisorIterator(fz, degree=n // 2):
        scanned += 1
        if is_self_orthogonal(ConstacyclicCode(field, n, a, g)):
            found.append(g)
    if verbose:
        print(
            f"[Oracle] x^{n} - ({a}) over {field.label}: {len(fz.factors)} factors, "
            f"{fz.divisor_count()} divisors, {scanned} of degree {n // 2}, {len(found)} self-dual"
        )
    return found


def nullspace_dual(code: ConstacyclicCode) -> galois.FieldArray:
    """Basis rows of {v : G v = 0}."""
    GF = galois_field(code.field)
    G = GF(generator_matrix(code))
    if np.linalg.matrix_rank(G) == code.n:
        return GF.Zeros((0, code.n))
    return G.null_space()


def rref_rows(matrix: galois.FieldArray) -> galois.FieldArray:
    """Nonzero rows of the reduced row echelon form."""
    if matrix.shape[0] == 0:
        return matrix
    reduced = matrix.row_reduce()
    keep = [i for i in range(reduced.shape[0]) if np.any(reduced[i])]
    return reduced[keep]


def same_row_space(a: galois.FieldArray, b: galois.FieldArray) -> bool:
    ra, rb = rref_rows(a), rref_rows(b)
    return ra.shape == rb.shape and bool(np.all(ra == rb))


def dual_agrees(code: ConstacyclicCode) -> bool:
    """Polynomial dual and null-space dual span the same space."""
    N = nullspace_dual(code)
    D = dual(code)
    if D.dimension == 0:
        return N.shape[0] == 0
    GF = galois_field(code.field)
    return same_row_space(N, GF(generator_matrix(D)))
