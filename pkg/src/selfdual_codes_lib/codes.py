"""Constacyclic codes: construction, duals, self-duality and the
self-dual negacyclic families built from the reciprocal pairing.
"""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .config import enumeration_check_limit
from .cyclo import Factorization, factor_unity, factor_xn_minus_a, strip_p_part
from .errors import (
    CharacteristicTwoUnsupported,
    EmptyCode,
    InvalidInput,
    NegacyclicTrivialInCharTwo,
    NoSquareRootOfMinusOne,
    NotADivisor,
    NotMonic,
    ShapeMismatch,
)
from .gf import FieldElement, FieldSpec, arithmetic, solve_x2_plus_1
from .poly import (
    Poly,
    as_poly,
    coefficient_vector,
    divides,
    format_poly,
    negate_variable,
    reciprocal,
    scale_substitute,
)

MuDirection = Literal["minus", "plus"]


@dataclass(frozen=True)
class ConstacyclicCode:
    """The ideal <generator> of F[x]/(x^n - a), a in {+1, -1}."""

    field: FieldSpec
    n: int
    a: int
    generator: Poly

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree

    @property
    def modulus(self) -> Poly:
        return Poly.x_n_minus(self.field, self.n, self.a)

    @property
    def kind(self) -> str:
        return "cyclic" if self.a == 1 else "negacyclic"

    def __str__(self) -> str:
        return f"{self.kind} [{self.n},{self.dimension}] over {self.field.label} <{format_poly(self.generator)}>"


def make_code(field: FieldSpec, n: int, a: int, generator: "Poly | str") -> ConstacyclicCode:
    if n < 1:
        raise InvalidInput(f"length must be >= 1, got {n}")
    if a not in (1, -1):
        raise InvalidInput(f"shift constant must be +1 or -1, got {a}")
    g = as_poly(generator, field)
    if not g.is_monic:
        raise NotMonic(f"generator {format_poly(g)} is not monic")
    modulus = Poly.x_n_minus(field, n, a)
    if not divides(g, modulus):
        raise NotADivisor(f"{format_poly(g)} does not divide {format_poly(modulus)} over {field.label}")
    return ConstacyclicCode(field, n, a, g)


@dataclass(frozen=True)
class ExponentVector:
    factorization: Factorization
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = self.factorization.factors
        if len(self.exponents) != len(factors):
            raise ShapeMismatch(f"{len(self.exponents)} exponents for {len(factors)} factors")
        for e, (_f, mult) in zip(self.exponents, factors):
            if not 0 <= e <= mult:
                raise InvalidInput(f"exponent {e} outside [0, {mult}]")

    def generator(self) -> Poly:
        out = Poly.one(self.factorization.field)
        for e, (f, _mult) in zip(self.exponents, self.factorization.factors):
            if e:
                out = out * f**e
        return out

    @classmethod
    def of(cls, factorization: Factorization, g: Poly) -> "ExponentVector":
        """Exponents of a monic divisor g of the factorized target."""
        exponents = []
        rest = g
        for f, mult in factorization.factors:
            e = 0
            while e < mult:
                q, r = divmod(rest, f)
                if not r.is_zero():
                    break
                rest, e = q, e + 1
            exponents.append(e)
        if rest.degree != 0:
            raise NotADivisor(f"{format_poly(g)} does not divide {format_poly(factorization.target)}")
        return cls(factorization, tuple(exponents))


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """k x n matrix of field encodings whose rows are x^i g(x), 0 <= i < k."""
    k = code.dimension
    if k == 0:
        raise EmptyCode(f"{code} has dimension 0")
    row = coefficient_vector(code.generator, code.n)
    G = np.zeros((k, code.n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + code.generator.degree + 1] = row[: code.generator.degree + 1]
    return G


def cogenerator(code: ConstacyclicCode) -> Poly:
    """B(x) = (x^n - a) / g(x)."""
    return code.modulus // code.generator


def dual(code: ConstacyclicCode) -> ConstacyclicCode:
    return ConstacyclicCode(code.field, code.n, code.a, reciprocal(cogenerator(code)))


def is_self_dual(code: ConstacyclicCode) -> bool:
    if code.n % 2 or 2 * code.dimension != code.n:
        return False
    return reciprocal(cogenerator(code)) == code.generator


# --- self-dual negacyclic codes ---

def _negacyclic_factorization(field: FieldSpec, n: int) -> Factorization:
    if field.p == 2:
        raise NegacyclicTrivialInCharTwo("negacyclic codes over characteristic 2 are cyclic codes")
    return factor_xn_minus_a(field, n, -1)


def _pair_generators(fz: Factorization, fixed: Poly | None = None) -> list[Poly]:
    field = fz.field
    top = fz.multiplicity
    ladders = []
    for i, j in fz.pairs:
        h, h_star = fz.factors[i][0], fz.factors[j][0]
        h_pows = [Poly.one(field)]
        star_pows = [Poly.one(field)]
        for _ in range(top):
            h_pows.append(h_pows[-1] * h)
            star_pows.append(star_pows[-1] * h_star)
        ladders.append([h_pows[b] * star_pows[top - b] for b in range(top + 1)])
    out = []
    for choice in itertools.product(*ladders):
        g = fixed if fixed is not None else Poly.one(field)
        for piece in choice:
            g = g * piece
        out.append(g)
    return out


def enumerate_selfdual_negacyclic(field: FieldSpec, n: int) -> list[Poly]:
    """All generators prod h_j^b_j (h_j*)^(p^r - b_j), empty when some g_i exists."""
    fz = _negacyclic_factorization(field, n)
    if fz.s:
        return []
    generators = _pair_generators(fz)
    _check_generators(fz, generators)
    return generators


def count_selfdual_negacyclic(field: FieldSpec, n: int) -> int:
    """(p^r + 1)^t when no self-reciprocal factor exists, else 0."""
    fz = _negacyclic_factorization(field, n)
    if fz.s:
        return 0
    count = (fz.multiplicity + 1) ** fz.t
    limit = enumeration_check_limit()
    if count > limit:
        warnings.warn(
            f"count {count} for n={n} over {field.label} exceeds {limit}; enumeration cross-check skipped",
            UserWarning,
            stacklevel=2,
        )
        return count
    enumerated = len(enumerate_selfdual_negacyclic(field, n))
    if enumerated != count:
        raise AssertionError(f"formula count {count} != enumerated {enumerated} for n={n} over {field.label}")
    return count


# --- cyclic codes of length 2 m p^r ---

@dataclass(frozen=True)
class CyclicDivisorStructure:
    """x^n - 1 = prod (f_i(x) f_i(-x))^(p^r) with f_i the factors of x^m - 1."""

    factorization: Factorization
    base: tuple[int, ...]
    mirror: tuple[int, ...]
    m: int
    r: int

    @property
    def k(self) -> int:
        return len(self.base)

    def generator(self, alphas: Sequence[int], betas: Sequence[int]) -> Poly:
        """prod f_i^alpha_i * prod f_i(-x)^beta_i."""
        if len(alphas) != self.k or len(betas) != self.k:
            raise ShapeMismatch(f"need {self.k} alphas and betas, got {len(alphas)} and {len(betas)}")
        top = self.factorization.multiplicity
        field = self.factorization.field
        out = Poly.one(field)
        for idx, e in itertools.chain(zip(self.base, alphas), zip(self.mirror, betas)):
            if not 0 <= e <= top:
                raise InvalidInput(f"exponent {e} outside [0, {top}]")
            if e:
                out = out * self.factorization.factors[idx][0] ** e
        return out


def cyclic_divisor_structure(field: FieldSpec, n: int) -> CyclicDivisorStructure:
    if field.p == 2:
        raise CharacteristicTwoUnsupported("the f(x)/f(-x) pairing needs odd characteristic")
    eta, r = strip_p_part(n, field.p)
    if eta % 2 or (eta // 2) % 2 == 0:
        raise ShapeMismatch(f"n={n} is not 2*m*p^r with m odd and coprime to p={field.p}")
    m = eta // 2
    fz = factor_xn_minus_a(field, n, 1)
    index = {f: i for i, f in enumerate(fz.polys)}
    base, mirror = [], []
    for f in factor_unity(field, m, 1).polys:
        base.append(index[f])
        mirror.append(index[negate_variable(f)])
    return CyclicDivisorStructure(fz, tuple(base), tuple(mirror), m, r)


# --- the scale-substitution isomorphism ---

@dataclass(frozen=True)
class ConstacyclicIdeal:
    """The ideal <generator> of F[x]/(x^n - shift)."""

    field: FieldSpec
    n: int
    shift: FieldElement
    generator: Poly

    @property
    def modulus(self) -> Poly:
        return Poly.x_n_minus(self.field, self.n, self.shift)

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree


def _gamma(field: FieldSpec) -> FieldElement:
    gamma = solve_x2_plus_1(field)
    if gamma is None:
        raise NoSquareRootOfMinusOne(f"x^2 + 1 has no root in {field.label}")
    return gamma


def mu_scale(field: FieldSpec, m: int, direction: MuDirection) -> FieldElement:
    """Constant c with f(x) -> f(c x) carrying x^m - 1 onto x^m -/+ gamma."""
    if m < 1 or m % 2 == 0:
        raise ShapeMismatch(f"the scale map needs odd m, got {m}")
    if direction not in ("minus", "plus"):
        raise InvalidInput(f"direction must be 'minus' or 'plus', got {direction!r}")
    gamma = _gamma(field)
    towards_minus = gamma if m % 4 == 3 else -gamma
    return towards_minus if direction == "minus" else -towards_minus


def mu_target(field: FieldSpec, m: int, direction: MuDirection) -> FieldElement:
    """lambda = c^(-m); equals gamma for 'minus' and -gamma for 'plus'."""
    return mu_scale(field, m, direction) ** (-m)


def mu_apply(f: "Poly | str", field: FieldSpec, m: int, direction: MuDirection) -> Poly:
    """Residue f of F[x]/(x^m - 1) mapped to F[x]/(x^m - lambda)."""
    f = as_poly(f, field)
    c = mu_scale(field, m, direction)
    return scale_substitute(f % Poly.x_n_minus(field, m, 1), c) % Poly.x_n_minus(
        field, m, mu_target(field, m, direction)
    )


def mu_inverse(g: "Poly | str", field: FieldSpec, m: int, direction: MuDirection) -> Poly:
    g = as_poly(g, field)
    c = mu_scale(field, m, direction)
    lam = mu_target(field, m, direction)
    return scale_substitute(g % Poly.x_n_minus(field, m, lam), c ** (-1)) % Poly.x_n_minus(field, m, 1)


def mu_transport(code: ConstacyclicCode, direction: MuDirection) -> ConstacyclicIdeal:
    if code.a != 1:
        raise ShapeMismatch("the scale map starts from a cyclic code")
    field, m = code.field, code.n
    c = mu_scale(field, m, direction)
    lam = mu_target(field, m, direction)
    image = scale_substitute(code.generator, c).monic()
    ideal = ConstacyclicIdeal(field, m, lam, image)
    if not divides(image, ideal.modulus):
        raise AssertionError(f"{format_poly(image)} does not divide {format_poly(ideal.modulus)}")
    return ideal


def negacyclic_factors_via_mu(field: FieldSpec, m: int, r: int) -> list[tuple[Poly, int]]:
    """Factors of x^(2 m p^r) + 1 as f_i(c_- x) and f_i(c_+ x), f_i | x^m - 1."""
    if r < 0:
        raise InvalidInput(f"r must be >= 0, got {r}")
    if math.gcd(m, field.p) != 1:
        raise ShapeMismatch(f"m={m} must be coprime to p={field.p}")
    mult = field.p**r
    out = []
    for direction in ("minus", "plus"):
        c = mu_scale(field, m, direction)
        for f in factor_unity(field, m, 1).polys:
            out.append((scale_substitute(f, c).monic(), mult))
    return out


def negacyclic_codes_length_2pr(field: FieldSpec, r: int) -> list[Poly]:
    """All (x - gamma)^i (x + gamma)^j with 0 <= i, j <= p^r."""
    if r < 0:
        raise InvalidInput(f"r must be >= 0, got {r}")
    gamma = _gamma(field)
    ops = arithmetic(field)
    minus = Poly(field, (ops.neg(gamma.value), 1))
    plus = Poly(field, (gamma.value, 1))
    top = field.p**r
    return [minus**i * plus**j for i in range(top + 1) for j in range(top + 1)]


# --- self-dual cyclic codes ---

def _check_generators(fz: Factorization, generators: list[Poly]) -> None:
    bad = [g for g in generators if not is_self_dual(ConstacyclicCode(fz.field, fz.n, fz.a, g))]
    if bad:
        raise AssertionError(
            f"generators for n={fz.n} over {fz.field.label} fail the self-duality check:\n"
            + "\n".join(f"  {format_poly(g)}" for g in bad)
        )


def enumerate_selfdual_cyclic(field: FieldSpec, n: int) -> list[Poly]:
    """prod g_i^(p^r/2) prod h_j^b_j (h_j*)^(p^r - b_j); empty unless every g_i can be halved."""
    fz = factor_xn_minus_a(field, n, 1)
    mult = fz.multiplicity
    if fz.s and mult % 2:
        return []
    fixed = Poly.one(field)
    for i in fz.self_reciprocal:
        fixed = fixed * fz.factors[i][0] ** (mult // 2)
    generators = _pair_generators(fz, fixed)
    _check_generators(fz, generators)
    return generators


def count_selfdual_cyclic(field: FieldSpec, n: int) -> int:
    fz = factor_xn_minus_a(field, n, 1)
    mult = fz.multiplicity
    if fz.s and mult % 2:
        return 0
    return (mult + 1) ** fz.t
