"""numpy kernels for dense polynomials over F_p and quotient rings F_p[z]/(f).

Polynomials are 1-D integer arrays, lowest degree first. Everything here works
on raw residues; the typed API lives in ``gf`` and ``poly``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np


# int64 is exact while every accumulated sum stays below 2^63.
_INT64_PRIME_LIMIT = 2**20


def coefficient_dtype(p: int):
    return np.int64 if p < _INT64_PRIME_LIMIT else object


def as_array(coeffs: Iterable[int], p: int) -> np.ndarray:
    arr = np.array([int(c) % p for c in coeffs], dtype=coefficient_dtype(p))
    return trim(arr)


def trim(a: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(a)
    if nonzero.size == 0:
        return a[:0]
    return a[: nonzero[-1] + 1]


def degree(a: np.ndarray) -> int:
    return len(trim(a)) - 1


def poly_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if len(a) == 0 or len(b) == 0:
        return a[:0]
    return trim(np.convolve(a, b) % p)


def poly_sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    size = max(len(a), len(b))
    out = np.zeros(size, dtype=coefficient_dtype(p))
    out[: len(a)] += a
    out[: len(b)] -= b
    return trim(out % p)


def poly_divmod(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    b = trim(b)
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a.copy())
    db = len(b) - 1
    if len(rem) - 1 < db:
        return rem[:0], rem
    lead_inv = pow(int(b[-1]), -1, p)
    quot = np.zeros(len(rem) - db, dtype=coefficient_dtype(p))
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = int(rem[shift + db]) * lead_inv % p
        if c:
            quot[shift] = c
            rem[shift : shift + db + 1] = (rem[shift : shift + db + 1] - c * b) % p
    return trim(quot), trim(rem[:db])


def poly_gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    a, b = trim(a), trim(b)
    while len(b):
        a, b = b, poly_divmod(a, b, p)[1]
    if len(a) == 0:
        return a
    return a * pow(int(a[-1]), -1, p) % p


def has_root(f: np.ndarray, p: int, search_limit: int = 1024) -> bool:
    """Cheap rejection test: a root in F_p means a linear factor (only for small p)."""
    if p > search_limit:
        return False
    xs = np.arange(p, dtype=np.int64)
    vals = np.zeros(p, dtype=np.int64)
    for c in reversed(f.tolist()):
        vals = (vals * xs + int(c)) % p
    return bool(np.any(vals == 0))


def prime_factors(n: int) -> list[int]:
    out: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class QuotientRing:
    """F_p[z]/(f) for a monic f of degree D >= 1, elements as length-D arrays.

    Multiplication is a convolution followed by one matrix product against the
    precomputed residues of z^D .. z^(2D-2).
    """

    def __init__(self, p: int, modulus: Iterable[int]) -> None:
        f = as_array(modulus, p)
        if len(f) < 2 or int(f[-1]) != 1:
            raise ValueError("QuotientRing modulus must be monic of degree >= 1")
        self.p = p
        self.modulus = f
        self.degree = len(f) - 1
        self.order = p**self.degree
        self._dtype = coefficient_dtype(p)
        D = self.degree
        reduction = np.zeros((max(D - 1, 0), D), dtype=self._dtype)
        if D > 1:
            row = (-f[:D]) % p
            reduction[0] = row
            for i in range(1, D - 1):
                carry = int(reduction[i - 1][D - 1])
                shifted = np.zeros(D, dtype=self._dtype)
                shifted[1:] = reduction[i - 1][: D - 1]
                reduction[i] = (shifted + carry * row) % p
        self._reduction = reduction
        self._frobenius: np.ndarray | None = None

    # --- construction ---

    def zero(self) -> np.ndarray:
        return np.zeros(self.degree, dtype=self._dtype)

    def one(self) -> np.ndarray:
        return self.constant(1)

    def constant(self, c: int) -> np.ndarray:
        out = self.zero()
        out[0] = c % self.p
        return out

    def generator(self) -> np.ndarray:
        """The class of z."""
        if self.degree == 1:
            return self.constant(-int(self.modulus[0]))
        out = self.zero()
        out[1] = 1
        return out

    def reduce(self, coeffs: np.ndarray) -> np.ndarray:
        coeffs = trim(np.asarray(coeffs, dtype=self._dtype) % self.p)
        if len(coeffs) <= self.degree:
            out = self.zero()
            out[: len(coeffs)] = coeffs
            return out
        return self.from_poly(poly_divmod(coeffs, self.modulus, self.p)[1])

    def from_poly(self, coeffs: np.ndarray) -> np.ndarray:
        out = self.zero()
        out[: len(coeffs)] = coeffs
        return out

    def encode(self, a: np.ndarray) -> int:
        value = 0
        for c in reversed(a.tolist()):
            value = value * self.p + int(c)
        return value

    def decode(self, value: int) -> np.ndarray:
        out = self.zero()
        for i in range(self.degree):
            value, out[i] = divmod(value, self.p)
        return out

    # --- arithmetic ---

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.p

    def neg(self, a: np.ndarray) -> np.ndarray:
        return (-a) % self.p

    def scale(self, a: np.ndarray, c: int) -> np.ndarray:
        return (a * (c % self.p)) % self.p

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        D = self.degree
        full = np.convolve(a, b) % self.p
        low = full[:D]
        if D == 1:
            return low % self.p
        return (low + full[D:] @ self._reduction) % self.p

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        if e < 0:
            raise ValueError("negative exponent")
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a: np.ndarray) -> np.ndarray:
        """Inverse in a field quotient (modulus irreducible)."""
        if not np.any(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a)

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        return bool(np.array_equal(a, b))

    def frobenius(self, a: np.ndarray) -> np.ndarray:
        """a -> a^p, an F_p-linear map applied as one matrix product."""
        if self._frobenius is None:
            rows = np.zeros((self.degree, self.degree), dtype=self._dtype)
            zp = self.pow(self.generator(), self.p)
            row = self.one()
            for i in range(self.degree):
                rows[i] = row
                row = self.mul(row, zp)
            self._frobenius = rows
        return (a @ self._frobenius) % self.p

    def multiplicative_order_divides(self, a: np.ndarray, n: int) -> bool:
        return self.equal(self.pow(a, n), self.one())

    def elements_by_encoding(self, start: int = 0) -> Iterator[tuple[int, np.ndarray]]:
        for value in range(start, self.order):
            yield value, self.decode(value)


def is_irreducible_mod_p(modulus: Iterable[int], p: int) -> bool:
    """Rabin's test: z^(p^D) = z mod f and gcd(z^(p^(D/l)) - z, f) = 1 for primes l | D."""
    f = as_array(modulus, p)
    D = len(f) - 1
    if D < 1:
        return False
    if D == 1:
        return True
    ring = QuotientRing(p, f)
    z = ring.generator()
    wanted = {D // ell for ell in prime_factors(D)}
    h = z
    powers: dict[int, np.ndarray] = {}
    for k in range(1, D + 1):
        h = ring.frobenius(h)
        if k in wanted:
            powers[k] = h
    if not ring.equal(h, z):
        return False
    for k, hk in powers.items():
        diff = poly_sub(trim(hk), trim(z), p)
        g = poly_gcd(f, diff, p)
        if len(g) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of the given degree over F_p.

    Coefficient tuples (c0, ..., c_{D-1}) are compared low degree first; a zero
    constant term is skipped for D >= 2 since x then divides the candidate.
    """
    if degree == 1:
        return (0, 1)
    heads = range(1, p)
    tails = [range(p)] * (degree - 1)
    for coeffs in itertools.product(heads, *tails):
        candidate = coeffs + (1,)
        arr = np.array(candidate, dtype=coefficient_dtype(p))
        if has_root(arr, p):
            continue
        if is_irreducible_mod_p(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible polynomial of degree {degree} over F_{p}")
