"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored as integer field encodings, lowest degree first,
without trailing zeros. The zero polynomial has degree -1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidDegree,
    InvalidInput,
    InvalidScale,
    ZeroConstantTerm,
)
from .gf import FieldElement, FieldSpec, arithmetic, decode, encode
from .primefield import is_irreducible_mod_p, prime_factors

ZERO_DEGREE = -1


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [_coerce(self.field, c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # --- constructors ---

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c: "int | FieldElement" = 1) -> "Poly":
        return cls(field, (0,) * k + (_coerce(field, c),))

    @classmethod
    def x_n_minus(cls, field: FieldSpec, n: int, a: "int | FieldElement") -> "Poly":
        """x^n - a; an integer a is read in the prime subfield."""
        if n < 1:
            raise InvalidDegree(f"x^n - a needs n >= 1, got {n}")
        if isinstance(a, FieldElement):
            minus_a = arithmetic(field).neg(_coerce(field, a))
        else:
            minus_a = (-a) % field.p
        return cls(field, (minus_a,) + (0,) * (n - 1) + (1,))

    # --- inspection ---

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, i: int) -> FieldElement:
        value = self.coeffs[i] if 0 <= i < len(self.coeffs) else 0
        return self.field.element(value)

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic:
            return self
        return self.scale(self.field.element(arithmetic(self.field).inv(self.leading)))

    def scale(self, c: "int | FieldElement") -> "Poly":
        ops = arithmetic(self.field)
        c = _scalar(self.field, c)
        return Poly(self.field, tuple(ops.mul(c, a) for a in self.coeffs))

    # --- operators ---

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, _as_poly(self.field, other))

    __radd__ = __add__

    def __sub__(self, other: "Poly") -> "Poly":
        return sub(self, _as_poly(self.field, other))

    def __rsub__(self, other: "Poly") -> "Poly":
        return sub(_as_poly(self.field, other), self)

    def __neg__(self) -> "Poly":
        ops = arithmetic(self.field)
        return Poly(self.field, tuple(ops.neg(a) for a in self.coeffs))

    def __mul__(self, other: "Poly | FieldElement | int") -> "Poly":
        if isinstance(other, Poly):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divmod(self, other)[1]

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise InvalidInput("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, point: "FieldElement | int") -> FieldElement:
        return evaluate(self, point)

    def __str__(self) -> str:
        return format_poly(self)


def _scalar(field: FieldSpec, c: "int | FieldElement") -> int:
    """Encoding of a scalar operand; a plain int is read in the prime subfield."""
    if isinstance(c, FieldElement):
        return _coerce(field, c)
    return int(c) % field.p


def _coerce(field: FieldSpec, c: "int | FieldElement") -> int:
    """Encoding of a stored coefficient; a plain int is an encoding."""
    if isinstance(c, FieldElement):
        if c.field != field:
            raise FieldMismatch(f"coefficient from {c.field.label} used over {field.label}")
        return c.value
    c = int(c)
    if field.s == 1:
        return c % field.p
    if not 0 <= c < field.order:
        raise InvalidInput(f"encoding {c} out of range for {field.label}")
    return c


def _as_poly(field: FieldSpec, other: "Poly | FieldElement | int") -> Poly:
    if isinstance(other, Poly):
        return other
    return Poly(field, (_scalar(field, other),))


def _check(f: Poly, g: Poly) -> None:
    if f.field != g.field:
        raise FieldMismatch(f"polynomials over {f.field.label} and {g.field.label} mixed")


# --- poly_arith family ---

def add(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    ops = arithmetic(f.field)
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] = ops.add(out[i], bi)
    return Poly(f.field, tuple(out))


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, -g)


def mul(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    return Poly(f.field, tuple(arithmetic(f.field).convolve(f.coeffs, g.coeffs)))


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    _check(f, g)
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    field = f.field
    dg = g.degree
    if f.degree < dg:
        return Poly.zero(field), f
    ops = arithmetic(field)
    rem = list(f.coeffs)
    gc = g.coeffs
    inv_lead = ops.inv(gc[-1])
    quot = [0] * (f.degree - dg + 1)
    for shift in range(len(rem) - 1 - dg, -1, -1):
        c = rem[shift + dg]
        if not c:
            continue
        c = ops.mul(c, inv_lead)
        quot[shift] = c
        for i, gi in enumerate(gc):
            if gi:
                rem[shift + i] = ops.sub(rem[shift + i], ops.mul(c, gi))
    return Poly(field, tuple(quot)), Poly(field, tuple(rem[:dg]))


def divides(g: Poly, f: Poly) -> bool:
    return poly_divmod(f, g)[1].is_zero()


def gcd(f: Poly, g: Poly) -> Poly:
    _check(f, g)
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def evaluate(f: Poly, point: "FieldElement | int") -> FieldElement:
    field = f.field
    x = _scalar(field, point)
    ops = arithmetic(field)
    acc = 0
    for c in reversed(f.coeffs):
        acc = ops.add(ops.mul(acc, x), c)
    return field.element(acc)


def powmod(f: Poly, exponent: int, modulus: Poly) -> Poly:
    result = Poly.one(f.field) % modulus
    base = f % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        exponent >>= 1
        if exponent:
            base = (base * base) % modulus
    return result


def product(polys: Iterable[Poly], field: FieldSpec) -> Poly:
    out = Poly.one(field)
    for f in polys:
        out = out * f
    return out


# --- reciprocal and substitutions ---

def reciprocal(f: Poly) -> Poly:
    """Monic normalisation of x^deg(f) * f(1/x)."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ZeroConstantTerm(f"reciprocal needs a nonzero constant term: {format_poly(f)}")
    return Poly(f.field, tuple(reversed(f.coeffs))).monic()


def is_self_reciprocal(f: Poly) -> bool:
    return reciprocal(f) == f.monic()


def scale_substitute(f: Poly, c: "FieldElement | int") -> Poly:
    """f(c*x)."""
    field = f.field
    ops = arithmetic(field)
    c = _scalar(field, c)
    if c == 0:
        raise InvalidScale("scale substitution by zero")
    out = []
    power = 1
    for a in f.coeffs:
        out.append(ops.mul(a, power))
        power = ops.mul(power, c)
    return Poly(field, tuple(out))


def negate_variable(f: Poly) -> Poly:
    """Monic normalisation of f(-x)."""
    if f.is_zero():
        raise InvalidInput("negate_variable of the zero polynomial")
    return scale_substitute(f, arithmetic(f.field).neg(1)).monic()


def is_irreducible(f: Poly) -> bool:
    """x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d."""
    if f.degree < 1:
        raise InvalidDegree(f"irreducibility of a constant: {format_poly(f)}")
    f = f.monic()
    d = f.degree
    if d == 1:
        return True
    field = f.field
    if field.s == 1:
        return is_irreducible_mod_p(f.coeffs, field.p)

    ops = arithmetic(field)
    x = Poly.x(field)
    xq = powmod(x, field.order, f)
    # rows[i] = x^(i*q) mod f; q-th powering is F_q-linear on F_q[x]/(f)
    rows: list[tuple[int, ...]] = []
    row = Poly.one(field)
    for _ in range(d):
        rows.append(row.coeffs + (0,) * (d - len(row.coeffs)))
        row = (row * xq) % f

    def frobenius(h: Poly) -> Poly:
        out = [0] * d
        for hi, r in zip(h.coeffs, rows):
            if not hi:
                continue
            for j, rj in enumerate(r):
                if rj:
                    out[j] = ops.add(out[j], ops.mul(hi, rj))
        return Poly(field, tuple(out))

    wanted = {d // ell for ell in prime_factors(d)}
    h = x
    checkpoints: dict[int, Poly] = {}
    for k in range(1, d + 1):
        h = frobenius(h)
        if k in wanted:
            checkpoints[k] = h
    if h != x:
        return False
    return all(gcd(f, hk - x).degree == 0 for hk in checkpoints.values())


# --- textual format ---

_TERM_RE = re.compile(r"^(?P<coef>\d+|\[[0-9,]*\])?(?:\*?(?P<x>x)(?:\^(?P<exp>\d+))?)?$")


def _format_coefficient(field: FieldSpec, value: int) -> str:
    if field.s == 1:
        return str(value)
    return "[" + ",".join(str(c) for c in decode(field, value)) + "]"


def format_poly(f: Poly) -> str:
    """``c0 + c1*x + ... + ck*x^k`` with zero terms omitted and unit coefficients implicit."""
    if f.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(_format_coefficient(f.field, c))
            continue
        monomial = "x" if i == 1 else f"x^{i}"
        terms.append(monomial if c == 1 else f"{_format_coefficient(f.field, c)}*{monomial}")
    return " + ".join(terms)


def _parse_coefficient(field: FieldSpec, token: str) -> int:
    if token.startswith("["):
        body = token[1:-1]
        digits = [int(part) for part in body.split(",") if part != ""]
        if len(digits) > field.s or any(not 0 <= c < field.p for c in digits):
            raise InvalidInput(f"coefficient {token} is not an element of {field.label}")
        return encode(field, digits + [0] * (field.s - len(digits)))
    value = int(token)
    if not 0 <= value < field.p:
        raise InvalidInput(f"coefficient {token} is not reduced modulo {field.p}")
    return value


def parse_poly(text: str, field: FieldSpec) -> Poly:
    compact = "".join(text.split())
    if not compact:
        raise InvalidInput("empty polynomial text")
    if compact == "0":
        return Poly.zero(field)
    ops = arithmetic(field)
    by_degree: dict[int, int] = {}
    for term in compact.split("+"):
        match = _TERM_RE.match(term)
        if not term or match is None or (match.group("coef") is None and match.group("x") is None):
            raise InvalidInput(f"ill formatted polynomial term {term!r} in {text!r}")
        coef = _parse_coefficient(field, match.group("coef")) if match.group("coef") else 1
        if match.group("x") is None:
            k = 0
        else:
            k = int(match.group("exp")) if match.group("exp") else 1
        by_degree[k] = ops.add(by_degree.get(k, 0), coef)
    top = max(by_degree)
    return Poly(field, tuple(by_degree.get(i, 0) for i in range(top + 1)))


def as_poly(value: "Poly | str", field: FieldSpec) -> Poly:
    if isinstance(value, Poly):
        if value.field != field:
            raise FieldMismatch(f"polynomial over {value.field.label} used over {field.label}")
        return value
    return parse_poly(value, field)


def coefficient_vector(f: Poly, length: int) -> list[int]:
    if f.degree >= length:
        raise InvalidInput(f"degree {f.degree} does not fit in length {length}")
    return list(f.coeffs) + [0] * (length - len(f.coeffs))
