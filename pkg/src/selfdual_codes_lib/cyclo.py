"""Multiplicative orders, q-cyclotomic cosets, minimal polynomials and the
structured factorizations of x^m - 1, x^m + 1 and x^n - a.
"""
from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

import numpy as np

from .errors import (
    InvalidInput,
    NegacyclicTrivialInCharTwo,
    NotCoprime,
    ShapeMismatch,
    WildRamification,
)
from .gf import FieldSpec, arithmetic, decode, make_field
from .poly import Poly, format_poly, reciprocal
from .primefield import QuotientRing, prime_factors

ResidueSubset = Literal["all", "odd"]


def mult_order(q: int, m: int) -> int:
    """Smallest k >= 1 with q^k = 1 mod m; ord_1(q) = 1."""
    if m < 1:
        raise InvalidInput(f"modulus must be >= 1, got {m}")
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    k, acc = 1, q % m
    while acc != 1:
        acc = acc * q % m
        k += 1
    return k


def strip_p_part(n: int, p: int) -> tuple[int, int]:
    """n = eta * p^r with p not dividing eta."""
    r = 0
    while n % p == 0:
        n //= p
        r += 1
    return n, r


@dataclass(frozen=True)
class Coset:
    modulus: int
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_self_paired(self) -> bool:
        return (-self.representative) % self.modulus in self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in self.members) + "}"


def cosets(q: int, m: int, subset: ResidueSubset = "all") -> list[Coset]:
    """q-cyclotomic cosets partitioning Z_m, or the odd residues mod an even m."""
    if m < 1:
        raise InvalidInput(f"modulus must be >= 1, got {m}")
    if math.gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if subset == "all":
        residues = range(m)
    elif subset == "odd":
        if m % 2:
            raise ShapeMismatch(f"odd residues are closed under multiplication only for even m, got {m}")
        residues = range(1, m, 2)
    else:
        raise InvalidInput(f"unknown residue subset {subset!r}")

    seen: set[int] = set()
    out: list[Coset] = []
    for start in residues:
        if start in seen:
            continue
        orbit = []
        j = start
        while j not in orbit:
            orbit.append(j)
            j = j * q % m
        seen.update(orbit)
        out.append(Coset(m, min(orbit), tuple(sorted(orbit))))
    return sorted(out, key=lambda c: c.representative)


@dataclass(frozen=True)
class CosetPairing:
    self_paired: tuple[Coset, ...]
    pairs: tuple[tuple[Coset, Coset], ...]

    @property
    def s(self) -> int:
        return len(self.self_paired)

    @property
    def t(self) -> int:
        return len(self.pairs)


def coset_pairing(cs: list[Coset]) -> CosetPairing:
    owner: dict[int, Coset] = {}
    for c in cs:
        for j in c.members:
            owner[j] = c
    self_paired: list[Coset] = []
    pairs: list[tuple[Coset, Coset]] = []
    matched: set[int] = set()
    for c in sorted(cs, key=lambda c: c.representative):
        if c.representative in matched:
            continue
        mirror_rep = (-c.representative) % c.modulus
        if mirror_rep not in owner:
            raise InvalidInput(f"coset {c} has no mirror among the given cosets")
        mirror = owner[mirror_rep]
        if mirror == c:
            self_paired.append(c)
        else:
            pairs.append((c, mirror))
            matched.add(mirror.representative)
        matched.add(c.representative)
    return CosetPairing(tuple(self_paired), tuple(pairs))


# --- splitting fields ---

@dataclass
class _SplittingField:
    """F_{q^d} flattened over F_p, with the base field embedded in it."""

    ring: QuotientRing
    powers: list[np.ndarray]
    to_base: dict[int, int]


def _canonical_primitive_root(ring: QuotientRing, order: int) -> np.ndarray:
    """Smallest-encoded element of exact multiplicative order ``order``."""
    one = ring.one()
    if order == 1:
        return one
    exponent = (ring.order - 1) // order
    primes = prime_factors(order)
    for value in itertools.count(2):
        candidate = ring.pow(ring.decode(value), exponent)
        if all(not ring.equal(ring.pow(candidate, order // ell), one) for ell in primes):
            break
    best, best_code = None, None
    acc = candidate
    for k in range(1, order):
        if math.gcd(k, order) == 1:
            code = ring.encode(acc)
            if best_code is None or code < best_code:
                best, best_code = acc, code
        acc = ring.mul(acc, candidate)
    return best


def _embed_base_field(field: FieldSpec, ring: QuotientRing) -> dict[int, int]:
    """Map big-field encodings of base-field elements back to base encodings."""
    p = field.p
    if field.s == 1:
        return {ring.encode(ring.constant(c)): c for c in range(p)}

    order = field.order
    exponent = (ring.order - 1) // (order - 1)
    primes = prime_factors(order - 1)
    one = ring.one()
    for value in itertools.count(2):
        u = ring.pow(ring.decode(value), exponent)
        if all(not ring.equal(ring.pow(u, (order - 1) // ell), one) for ell in primes):
            break

    roots = []
    acc = one
    for _ in range(order - 1):
        val = ring.zero()
        for c in reversed(field.modulus):
            val = ring.add(ring.mul(val, acc), ring.constant(c))
        if ring.is_zero(val):
            roots.append(acc)
        acc = ring.mul(acc, u)
    rho = min(roots, key=ring.encode)

    rho_powers = [one]
    for _ in range(1, field.s):
        rho_powers.append(ring.mul(rho_powers[-1], rho))
    table: dict[int, int] = {}
    for v in range(order):
        image = ring.zero()
        for c, rp in zip(decode(field, v), rho_powers):
            if c:
                image = ring.add(image, ring.scale(rp, c))
        table[ring.encode(image)] = v
    return table


@lru_cache(maxsize=None)
def _splitting_field(field: FieldSpec, root_order: int) -> _SplittingField:
    d = mult_order(field.order, root_order)
    big = make_field(field.p, field.s * d)
    ring = QuotientRing(big.p, big.modulus)
    alpha = _canonical_primitive_root(ring, root_order)
    powers = [ring.one()]
    for _ in range(1, root_order):
        powers.append(ring.mul(powers[-1], alpha))
    return _SplittingField(ring, powers, _embed_base_field(field, ring))


def minimal_poly(c: Coset, field: FieldSpec, root_order: int) -> Poly:
    """prod (x - alpha^j) over the coset, alpha the canonical primitive root_order-th root."""
    if root_order != c.modulus:
        raise InvalidInput(f"root order {root_order} differs from coset modulus {c.modulus}")
    if math.gcd(root_order, field.p) != 1:
        raise WildRamification(f"root order {root_order} is not coprime to p={field.p}")
    sf = _splitting_field(field, root_order)
    ring = sf.ring
    coeffs = [ring.one()]
    for j in c.members:
        root = sf.powers[j]
        shifted = [ring.zero()] + coeffs
        for i, a in enumerate(coeffs):
            shifted[i] = ring.sub(shifted[i], ring.mul(root, a))
        coeffs = shifted

    mapped = []
    for a in coeffs:
        code = ring.encode(a)
        if code not in sf.to_base:
            raise AssertionError(
                f"minimal polynomial of coset {c} has a coefficient outside {field.label}"
            )
        mapped.append(sf.to_base[code])
    return Poly(field, tuple(mapped))


# --- factorizations ---

@dataclass(frozen=True)
class Factorization:
    """Monic irreducible factors of ``target`` with their reciprocal pairing.

    ``self_reciprocal`` holds the indices of the g_i, ``pairs`` holds (h_j, h_j*)
    index pairs with the smaller coset representative first.
    """

    field: FieldSpec
    target: Poly
    factors: tuple[tuple[Poly, int], ...]
    self_reciprocal: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    cosets: tuple[Coset, ...]
    n: int
    a: int
    core: int
    r: int

    @property
    def s(self) -> int:
        return len(self.self_reciprocal)

    @property
    def t(self) -> int:
        return len(self.pairs)

    @property
    def polys(self) -> tuple[Poly, ...]:
        return tuple(f for f, _mult in self.factors)

    @property
    def multiplicity(self) -> int:
        return self.field.p**self.r

    def divisor_count(self) -> int:
        return math.prod(mult + 1 for _f, mult in self.factors)

    def partner(self, index: int) -> int:
        """Index of the reciprocal of factor ``index`` (itself for a g_i)."""
        for i, j in self.pairs:
            if index == i:
                return j
            if index == j:
                return i
        return index

    def pairing_label(self, index: int) -> str:
        partner = self.partner(index)
        return "self" if partner == index else f"pair:{partner}"

    def product(self) -> Poly:
        out = Poly.one(self.field)
        for f, mult in self.factors:
            out = out * f**mult
        return out

    def describe(self) -> str:
        parts = []
        for f, mult in self.factors:
            text = f"({format_poly(f)})"
            parts.append(text if mult == 1 else f"{text}^{mult}")
        return " ".join(parts)


def _pair_factors(polys: list[Poly]) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    index = {f: i for i, f in enumerate(polys)}
    singles: list[int] = []
    pairs: list[tuple[int, int]] = []
    for i, f in enumerate(polys):
        mirror = reciprocal(f)
        if mirror == f:
            singles.append(i)
            continue
        if mirror not in index:
            raise AssertionError(f"reciprocal of factor {format_poly(f)} is missing from the factorization")
        j = index[mirror]
        if i < j:
            pairs.append((i, j))
    return tuple(singles), tuple(pairs)


def _check_sign(field: FieldSpec, sign: int) -> None:
    if sign not in (1, -1):
        raise InvalidInput(f"shift constant must be +1 or -1, got {sign}")
    if sign == -1 and field.p == 2:
        raise NegacyclicTrivialInCharTwo("x^n + 1 = x^n - 1 over characteristic 2; use a = +1")


def factor_unity(field: FieldSpec, m: int, sign: int) -> Factorization:
    """Square-free factorization of x^m - 1 (sign=+1) or x^m + 1 (sign=-1)."""
    _check_sign(field, sign)
    if m < 1:
        raise InvalidInput(f"m must be >= 1, got {m}")
    if math.gcd(m, field.p) != 1:
        raise WildRamification(f"p={field.p} divides m={m}; strip the p-part first")
    q = field.order
    if sign == 1:
        root_order, cs = m, cosets(q, m, "all")
    else:
        root_order, cs = 2 * m, cosets(q, 2 * m, "odd")
    polys = [minimal_poly(c, field, root_order) for c in cs]
    target = Poly.x_n_minus(field, m, sign)

    built = Poly.one(field)
    for f in polys:
        built = built * f
    if built != target:
        raise AssertionError(
            f"factor product does not reconstruct {format_poly(target)} over {field.label}:\n"
            + "\n".join(f"  {format_poly(f)}" for f in polys)
        )
    singles, pairs = _pair_factors(polys)
    return Factorization(
        field=field,
        target=target,
        factors=tuple((f, 1) for f in polys),
        self_reciprocal=singles,
        pairs=pairs,
        cosets=tuple(cs),
        n=m,
        a=sign,
        core=m,
        r=0,
    )


def frobenius_power(f: Poly, k: int) -> Poly:
    """f^(p^k), computed coefficient-wise in characteristic p."""
    field = f.field
    ops = arithmetic(field)
    step = field.p**k
    out = [0] * (f.degree * step + 1) if not f.is_zero() else []
    for i, c in enumerate(f.coeffs):
        if c:
            out[i * step] = ops.pow(c, step)
    return Poly(field, tuple(out))


_FACTORIZATION_CACHE: dict[tuple[FieldSpec, int, int], Factorization] = {}
_FACTORIZATION_LOCK = threading.Lock()


def factor_xn_minus_a(field: FieldSpec, n: int, a: int) -> Factorization:
    """x^n - a = (core)^(p^r), every factor carrying multiplicity p^r."""
    _check_sign(field, a)
    if n < 1:
        raise InvalidInput(f"length must be >= 1, got {n}")
    key = (field, n, a)
    with _FACTORIZATION_LOCK:
        cached = _FACTORIZATION_CACHE.get(key)
    if cached is not None:
        return cached

    eta, r = strip_p_part(n, field.p)
    core = factor_unity(field, eta, a)
    target = Poly.x_n_minus(field, n, a)
    if frobenius_power(core.target, r) != target:
        raise AssertionError(f"(x^{eta} - ({a}))^(p^{r}) != {format_poly(target)}")
    mult = field.p**r
    result = Factorization(
        field=field,
        target=target,
        factors=tuple((f, mult) for f, _one in core.factors),
        self_reciprocal=core.self_reciprocal,
        pairs=core.pairs,
        cosets=core.cosets,
        n=n,
        a=a,
        core=eta,
        r=r,
    )
    with _FACTORIZATION_LOCK:
        _FACTORIZATION_CACHE.setdefault(key, result)
    return result


def iter_exponent_vectors(fz: Factorization) -> Iterator[tuple[int, ...]]:
    return itertools.product(*(range(mult + 1) for _f, mult in fz.factors))
