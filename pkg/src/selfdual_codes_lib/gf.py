"""Finite fields F_{p^s} with exact element arithmetic.

Elements are identified with the integer encoding sum(c_i * p^i) of their
coefficient vector modulo the field modulus. ``FieldElement`` wraps that for the
public API; ``poly`` works on the raw encodings through :func:`arithmetic`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    CharacteristicTwoUnsupported,
    DivisionByZero,
    FieldMismatch,
    InvalidCharacteristic,
    InvalidDegree,
    InvalidInput,
)
from .primefield import QuotientRing, prime_factors, smallest_irreducible

# Fields up to this order get full addition/multiplication tables.
TABLE_ORDER_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    s: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.modulus) != self.s + 1 or self.modulus[-1] != 1:
            raise InvalidDegree(f"modulus must be monic of degree {self.s}, got {self.modulus}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise InvalidInput(f"modulus coefficients must lie in [0, {self.p})")

    @property
    def order(self) -> int:
        return self.p**self.s

    @property
    def is_prime_field(self) -> bool:
        return self.s == 1

    @property
    def label(self) -> str:
        return f"F_{self.order}"

    @property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def element(self, value: "int | FieldElement") -> "FieldElement":
        """Element from an integer encoding (prime fields: the residue itself)."""
        if isinstance(value, FieldElement):
            _check_same(self, value.field)
            return value
        if self.s == 1:
            value %= self.p
        elif not 0 <= value < self.order:
            raise InvalidInput(f"encoding {value} out of range for {self.label}")
        return FieldElement(self, decode(self, value))

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElement":
        if len(coeffs) > self.s:
            raise InvalidInput(f"{self.label} elements have {self.s} coefficients")
        padded = tuple(int(c) % self.p for c in coeffs) + (0,) * (self.s - len(coeffs))
        return FieldElement(self, padded)

    def elements(self) -> Iterator["FieldElement"]:
        for value in range(self.order):
            yield self.element(value)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> "FieldElement":
        low = 1 if nonzero else 0
        return self.element(rng.randrange(low, self.order))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def value(self) -> int:
        return encode(self.field, self.coeffs)

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _other(self, other: "FieldElement | int") -> "FieldElement":
        if isinstance(other, FieldElement):
            _check_same(self.field, other.field)
            return other
        if isinstance(other, int):
            return self.field.element(other % self.field.p)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return mul(self, inv(other))

    def __neg__(self) -> "FieldElement":
        return neg(self)

    def __pow__(self, exponent: int) -> "FieldElement":
        return power(self, exponent)

    def __repr__(self) -> str:
        if self.field.s == 1:
            return f"{self.coeffs[0]}"
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def encode(field: FieldSpec, coeffs: Sequence[int]) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * field.p + c
    return value


def decode(field: FieldSpec, value: int) -> tuple[int, ...]:
    out = []
    for _ in range(field.s):
        value, c = divmod(value, field.p)
        out.append(c)
    return tuple(out)


def _check_same(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatch(f"elements of {a.label} (modulus {a.modulus}) and {b.label} (modulus {b.modulus}) mixed")


class _Arithmetic:
    """Encoded-integer arithmetic for one field.

    Prime fields use native modular integers, small extension fields use
    lookup tables built once from a primitive element, larger ones fall back to
    the numpy quotient ring.
    """

    def __init__(self, field: FieldSpec) -> None:
        self.field = field
        self.p = field.p
        self.order = field.order
        self.mode = "prime"
        self._add: list[list[int]] | None = None
        self._mul: list[list[int]] | None = None
        self._inv: list[int] | None = None
        self._neg: list[int] | None = None
        self._ring: QuotientRing | None = None
        if field.s > 1:
            self._ring = QuotientRing(field.p, field.modulus)
            if field.order <= TABLE_ORDER_LIMIT:
                self.mode = "table"
                self._build_tables()
            else:
                self.mode = "ring"

    def _build_tables(self) -> None:
        ring = self._ring
        q = self.order
        digits = np.array([decode(self.field, v) for v in range(q)], dtype=np.int64)
        weights = np.array([self.p**i for i in range(self.field.s)], dtype=np.int64)
        sums = (digits[:, None, :] + digits[None, :, :]) % self.p
        self._add = (sums @ weights).tolist()
        self._neg = (((-digits) % self.p) @ weights).tolist()

        primitive = _primitive_element(ring)
        exp = [0] * (q - 1)
        log = [0] * q
        acc = ring.one()
        for i in range(q - 1):
            enc = ring.encode(acc)
            exp[i] = enc
            log[enc] = i
            acc = ring.mul(acc, primitive)
        mul_table = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul_table[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % (q - 1)]
        self._mul = mul_table
        self._inv = [0] + [exp[(-log[a]) % (q - 1)] for a in range(1, q)]

    # --- scalar operations on encodings ---

    def add(self, a: int, b: int) -> int:
        if self.mode == "prime":
            return (a + b) % self.p
        if self.mode == "table":
            return self._add[a][b]
        r = self._ring
        return r.encode(r.add(r.decode(a), r.decode(b)))

    def neg(self, a: int) -> int:
        if self.mode == "prime":
            return (-a) % self.p
        if self.mode == "table":
            return self._neg[a]
        r = self._ring
        return r.encode(r.neg(r.decode(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mode == "prime":
            return a * b % self.p
        if self.mode == "table":
            return self._mul[a][b]
        r = self._ring
        return r.encode(r.mul(r.decode(a), r.decode(b)))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self.field.label}")
        if self.mode == "prime":
            return pow(a, -1, self.p)
        if self.mode == "table":
            return self._inv[a]
        return _extended_gcd_inverse(self.field, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if self.mode == "prime":
            return pow(a, e, self.p)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    # --- vector helpers used by poly ---

    def convolve(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        if not a or not b:
            return []
        if self.mode == "prime" and self.p < 2**20:
            return (np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % self.p).tolist()
        out = [0] * (len(a) + len(b) - 1)
        if self.mode == "table":
            add_t, mul_t = self._add, self._mul
            for i, ai in enumerate(a):
                if not ai:
                    continue
                row = mul_t[ai]
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add_t[out[i + j]][row[bj]]
            return out
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = self.add(out[i + j], self.mul(ai, bj))
        return out


def _primitive_element(ring: QuotientRing) -> np.ndarray:
    q = ring.order
    factors = prime_factors(q - 1)
    for value in range(2, q):
        candidate = ring.decode(value)
        if all(not ring.multiplicative_order_divides(candidate, (q - 1) // ell) for ell in factors):
            return candidate
    if q == 2:
        return ring.one()
    raise AssertionError(f"no primitive element found in field of order {q}")


def _extended_gcd_inverse(field: FieldSpec, a: int) -> int:
    """Inverse of a(w) modulo the field modulus via the extended Euclidean algorithm over F_p."""
    p = field.p
    r0, r1 = list(field.modulus), list(decode(field, a))
    s0, s1 = [0], [1]

    def strip(v: list[int]) -> list[int]:
        while v and v[-1] == 0:
            v.pop()
        return v

    def sub_scaled(x: list[int], y: list[int], c: int, shift: int) -> list[int]:
        out = x + [0] * max(0, len(y) + shift - len(x))
        for i, yi in enumerate(y):
            out[i + shift] = (out[i + shift] - c * yi) % p
        return strip(out)

    r0, r1 = strip(r0), strip(r1)
    while r1:
        inv_lead = pow(r1[-1], -1, p)
        while len(r0) >= len(r1) and r0:
            shift = len(r0) - len(r1)
            c = r0[-1] * inv_lead % p
            r0 = sub_scaled(r0, r1, c, shift)
            s0 = sub_scaled(s0, s1, c, shift)
        r0, r1 = r1, r0
        s0, s1 = s1, s0
    # r0 is a nonzero constant because the modulus is irreducible
    scale = pow(r0[0], -1, p)
    coeffs = [(c * scale) % p for c in s0] + [0] * field.s
    return encode(field, coeffs[: field.s])


@lru_cache(maxsize=None)
def arithmetic(field: FieldSpec) -> _Arithmetic:
    return _Arithmetic(field)


@lru_cache(maxsize=None)
def make_field(p: int, s: int) -> FieldSpec:
    """F_{p^s} with the lexicographically smallest monic irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise InvalidCharacteristic(f"characteristic must be prime, got {p}")
    if not isinstance(s, int) or s < 1:
        raise InvalidDegree(f"extension degree must be >= 1, got {s}")
    return FieldSpec(p, s, smallest_irreducible(p, s))


# --- element_ops family ---

def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a.field, b.field)
    return a.field.element(arithmetic(a.field).add(a.value, b.value))


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a.field, b.field)
    return a.field.element(arithmetic(a.field).sub(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a.field, b.field)
    return a.field.element(arithmetic(a.field).mul(a.value, b.value))


def neg(a: FieldElement) -> FieldElement:
    return a.field.element(arithmetic(a.field).neg(a.value))


def inv(a: FieldElement) -> FieldElement:
    return a.field.element(arithmetic(a.field).inv(a.value))


def power(a: FieldElement, exponent: int) -> FieldElement:
    if exponent < 0 and a.is_zero():
        raise DivisionByZero("negative power of zero")
    return a.field.element(arithmetic(a.field).pow(a.value, exponent))


def solve_x2_plus_1(field: FieldSpec) -> FieldElement | None:
    """Canonical square root of -1, or None when x^2 + 1 has no root in the field."""
    if field.p == 2:
        raise CharacteristicTwoUnsupported("x^2 + 1 = (x + 1)^2 in characteristic 2")
    q = field.order
    if q % 4 != 1:
        return None
    ops = arithmetic(field)
    minus_one = field.p - 1
    exponent = (q - 1) // 4
    for t in range(2, q):
        u = ops.pow(t, exponent)
        if ops.mul(u, u) == minus_one:
            return field.element(min(u, ops.neg(u)))
    raise AssertionError(f"{field.label} has order = 1 mod 4 but no square root of -1 was found")


def is_quadratic_residue(a: int, q: int) -> bool:
    """Euler's criterion modulo an odd prime q."""
    if q % 2 == 0 or not is_prime(q):
        raise InvalidInput(f"modulus must be an odd prime, got {q}")
    if a % q == 0:
        raise InvalidInput(f"{q} divides {a}")
    return pow(a, (q - 1) // 2, q) == 1
