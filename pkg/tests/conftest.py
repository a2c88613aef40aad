from __future__ import annotations

import random
from pathlib import Path

import galois

from selfdual_codes_lib.gf import FieldSpec, make_field
from selfdual_codes_lib.oracle import galois_field
from selfdual_codes_lib.poly import Poly, parse_poly


TESTS_DIR = Path(__file__).resolve().parent
SEED = 20240517


def field_of(q: int) -> FieldSpec:
    p = next(ell for ell in range(2, q + 1) if q % ell == 0)
    s, rest = 0, q
    while rest % p == 0:
        rest, s = rest // p, s + 1
    assert rest == 1, f"{q} is not a prime power"
    return make_field(p, s)


def P(text: str, field: FieldSpec) -> Poly:
    return parse_poly(text, field)


def random_poly(field: FieldSpec, degree: int, rng: random.Random, monic: bool = True) -> Poly:
    """Random polynomial of exact degree with a nonzero constant term."""
    coeffs = [rng.randrange(1, field.order)]
    coeffs += [rng.randrange(field.order) for _ in range(degree - 1)]
    if degree >= 1:
        coeffs.append(1 if monic else rng.randrange(1, field.order))
    return Poly(field, tuple(coeffs))


def to_galois(f: Poly) -> galois.Poly:
    GF = galois_field(f.field)
    return galois.Poly(list(reversed(f.coeffs)), field=GF)


def galois_divisor_count(f: Poly) -> int:
    """Number of monic divisors, from galois' own factorization."""
    _factors, multiplicities = to_galois(f).factors()
    count = 1
    for m in multiplicities:
        count *= m + 1
    return count


def roots_by_exhaustion(f: Poly) -> list[int]:
    return [x.value for x in f.field.elements() if f(x).is_zero()]
