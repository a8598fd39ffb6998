"""
Normal generating sets for the Torelli group of N_g^b, the lifts of the
push-map normal generators, and the explicit product formulas for the
boundary-side twists, all as validated symbolic data.

Mapping classes here are opaque names; nothing in this module multiplies
them.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from math import comb

from errors import IndexRangeError, UnsupportedError
from surface import SurfaceParams
from words import Word, format_word, x, y

logger = logging.getLogger("torelli-catalog")


class MappingClassKind(str, Enum):
    BSCC_TWIST = "BSCC_twist"
    BP_MAP = "BP_map"
    NAMED_PRODUCT = "named_product"


@dataclass(frozen=True, order=True)
class MappingClassName:
    kind: MappingClassKind
    symbol: str
    indices: tuple[int, ...] = ()
    pushed: int | None = None

    def __str__(self) -> str:
        if not self.indices:
            return self.symbol
        inner = ",".join(map(str, self.indices))
        if self.pushed is not None:
            inner += f";{self.pushed}"
        return f"{self.symbol}({inner})"

    def push(self, m: int) -> MappingClassName:
        return MappingClassName(self.kind, self.symbol, self.indices, m)


def t_alpha() -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_alpha")


def t_beta_betaprime() -> MappingClassName:
    return MappingClassName(MappingClassKind.BP_MAP, "t_beta_betaprime")


def t_gamma() -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_gamma")


def t_delta(i: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_delta", (i,))


def t_rho(i: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_rho", (i,))


def t_sigma(i: int, j: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_sigma", (i, j))


def t_sigmabar(i: int, j: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.BSCC_TWIST, "t_sigmabar", (i, j))


def a(i: int, j: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.NAMED_PRODUCT, "a", (i, j))


def b_(j: int, k: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.NAMED_PRODUCT, "b", (j, k))


def c(k: int, l: int) -> MappingClassName:
    return MappingClassName(MappingClassKind.NAMED_PRODUCT, "c", (k, l))


Factor = tuple[MappingClassName, int]


def format_factors(factors: tuple[Factor, ...] | list[Factor]) -> str:
    return " ".join(str(name) if e == 1 else f"{name}^{e}" for name, e in factors)


def _check_genus(g: int) -> None:
    if g < 4:
        raise UnsupportedError(f"normal generating sets are only known for g >= 4, got g={g}")


def generating_set(g: int, b: int) -> list[MappingClassName]:
    """Normal generators of I(N_g^b) in M(N_g^b); t_gamma is needed only for g = 4."""
    _check_genus(g)
    if b < 0:
        raise IndexRangeError(f"boundary count must be >= 0, got b={b}")
    names = [t_alpha(), t_beta_betaprime()]
    if g == 4:
        names.append(t_gamma())
    names += [t_delta(i) for i in range(1, b)]
    names += [t_rho(i) for i in range(1, b)]
    names += [t_sigma(i, j) for i in range(1, b) for j in range(i + 1, b)]
    names += [t_sigmabar(i, j) for i in range(1, b) for j in range(i + 1, b)]
    return names


def capping_kernel(params: SurfaceParams) -> MappingClassName:
    """The boundary twist generating the kernel of the capping homomorphism."""
    return t_delta(params.b)


def induction_step(g: int, b: int) -> list[MappingClassName]:
    """Generators added when passing from N_g^{b-1} to N_g^b."""
    _check_genus(g)
    if b < 1:
        return []
    return [t_delta(b), t_rho(b)] + [t_sigma(k, b) for k in range(1, b)] + [t_sigmabar(k, b) for k in range(1, b)]


def induction_generating_set(g: int, b: int) -> list[MappingClassName]:
    """The set produced by induction on b from the closed surface, before removing redundancy."""
    _check_genus(g)
    names = [t_alpha(), t_beta_betaprime(), t_gamma()]
    for step in range(1, b + 1):
        names += induction_step(g, step)
    return names


def redundant_generators(g: int, b: int) -> list[MappingClassName]:
    """Members of the induction set that the final generating set does without."""
    final = set(generating_set(g, b))
    return [name for name in induction_generating_set(g, b) if name not in final]


@dataclass(frozen=True)
class LiftEntry:
    push_word: Word
    lift: tuple[Factor, ...]

    def to_json(self) -> dict:
        return {"word": format_word(self.push_word), "lift": format_factors(self.lift)}


def lift_table(params: SurfaceParams) -> list[LiftEntry]:
    """Push words normally generating P(Gamma) and their lifts through capping."""
    g, b = params.g, params.b
    xg = x(g)
    entries = [LiftEntry(Word.of((xg, 2)), ((t_rho(b), 1),))]
    for j in range(1, b):
        entries.append(LiftEntry(Word.of(y(j)), ((t_sigma(j, b), 1), (t_delta(j), -1))))
    for j in range(1, b):
        entries.append(LiftEntry(Word.of(xg, y(j), (xg, -1)), ((t_sigmabar(j, b), 1), (t_delta(j), -1))))
    return entries


class FormulaKind(str, Enum):
    DELTA = "delta"
    RHO = "rho"
    SIGMA = "sigma"
    SIGMABAR = "sigmabar"


@dataclass(frozen=True)
class ProductFormula:
    """target = (prod of prefix)^prefix_exponent . factors, with boundary twists in the prefix."""

    kind: FormulaKind
    target: MappingClassName
    prefix: tuple[MappingClassName, ...]
    prefix_exponent: int
    factors: tuple[Factor, ...]
    skip: int | None = None

    def count(self, symbol: str) -> int:
        return sum(1 for name, _ in self.factors if name.symbol == symbol)

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "prefix": [str(name) for name in self.prefix],
            "prefix_exponent": self.prefix_exponent,
            "factors": [{"name": str(name), "exp": e} for name, e in self.factors],
        }


def _triangular(a_top: int, b: int, skip: int | None) -> list[Factor]:
    """
    (a_{1,2}..a_{1,top} b_{1,*}) ... (a_{top-1,top} b_{top-1,*}) (b_{top,*})
    (c_{1,2}..c_{1,b-1}) ... (c_{b-2,b-1}), leaving out boundary index ``skip``.
    """
    boundary = [k for k in range(1, b) if k != skip]
    factors: list[Factor] = []
    for i in range(1, a_top + 1):
        factors += [(a(i, j), 1) for j in range(i + 1, a_top + 1)]
        factors += [(b_(i, k), 1) for k in boundary]
    for pos, k in enumerate(boundary):
        factors += [(c(k, l), 1) for l in boundary[pos + 1:]]
    return factors


def _boundary_prefix(b: int, skip: int | None) -> tuple[MappingClassName, ...]:
    return tuple(t_delta(i) for i in range(1, b) if i != skip)


def delta_formula(params: SurfaceParams) -> ProductFormula:
    g, b = params.g, params.b
    return ProductFormula(FormulaKind.DELTA, t_delta(b), _boundary_prefix(b, None), -g - b + 3,
                          tuple(_triangular(g, b, None)))


def rho_formula(params: SurfaceParams) -> ProductFormula:
    g, b = params.g, params.b
    return ProductFormula(FormulaKind.RHO, t_rho(b), _boundary_prefix(b, None), -g - b + 4,
                          tuple(_triangular(g - 1, b, None)))


def _check_k(k: int, params: SurfaceParams) -> None:
    if not 1 <= k <= params.b - 1:
        raise IndexRangeError(f"boundary index k={k} out of range 1..{params.b - 1}")


def sigma_formula(k: int, params: SurfaceParams) -> ProductFormula:
    _check_k(k, params)
    g, b = params.g, params.b
    return ProductFormula(FormulaKind.SIGMA, t_sigma(k, b), _boundary_prefix(b, k), -g - b + 4,
                          tuple(_triangular(g, b, k)), skip=k)


def sigmabar_formula(k: int, params: SurfaceParams) -> ProductFormula:
    """
    t_sigmabar(k,b) = t_{d_k(sigma_kb)}^-1: invert the sigma formula and push
    every a/b/c factor along the k-th boundary; the boundary twists are central
    and untouched by the push.
    """
    sigma = sigma_formula(k, params)
    factors = tuple((name.push(k), -e) for name, e in reversed(sigma.factors))
    return ProductFormula(FormulaKind.SIGMABAR, t_sigmabar(k, params.b), sigma.prefix, -sigma.prefix_exponent,
                          factors, skip=k)


def boundary_products(params: SurfaceParams, k: int | None = None) -> list[ProductFormula]:
    """
    The boundary-side twists as products of twists conjugate to the
    generators. With k given, only that sigma / sigma-bar pair is emitted;
    otherwise one pair per k in 1..b-1.
    """
    if k is not None:
        _check_k(k, params)
    formulas = [delta_formula(params), rho_formula(params)]
    ks = [k] if k is not None else list(range(1, params.b))
    for kk in ks:
        formulas += [sigma_formula(kk, params), sigmabar_formula(kk, params)]
    for formula in formulas:
        validate_formula(formula, params)
    return formulas


def expected_counts(kind: FormulaKind, g: int, b: int) -> dict[str, int]:
    if kind is FormulaKind.DELTA:
        return {"a": comb(g, 2), "b": g * (b - 1), "c": comb(b - 1, 2)}
    if kind is FormulaKind.RHO:
        return {"a": comb(g - 1, 2), "b": (g - 1) * (b - 1), "c": comb(b - 1, 2)}
    return {"a": comb(g, 2), "b": g * (b - 2), "c": comb(b - 2, 2)}


def _check_name(name: MappingClassName, params: SurfaceParams) -> None:
    g, b = params.g, params.b
    ind = name.indices
    if name.symbol == "a":
        ok = 1 <= ind[0] < ind[1] <= g
    elif name.symbol == "b":
        ok = 1 <= ind[0] <= g and 1 <= ind[1] <= b - 1
    elif name.symbol == "c":
        ok = 1 <= ind[0] < ind[1] <= b - 1
    elif name.symbol in ("t_delta", "t_rho"):
        ok = 1 <= ind[0] <= b
    elif name.symbol in ("t_sigma", "t_sigmabar"):
        ok = 1 <= ind[0] < ind[1] <= b
    else:
        ok = not ind
    if name.pushed is not None:
        ok = ok and 1 <= name.pushed <= b - 1
    if not ok:
        raise IndexRangeError(f"{name} is out of range for g={g}, b={b}")


def validate_formula(formula: ProductFormula, params: SurfaceParams) -> None:
    """Index ranges of every factor plus the triangular factor counts."""
    for name in (formula.target, *formula.prefix, *(n for n, _ in formula.factors)):
        _check_name(name, params)
    if formula.skip is not None:
        if any(formula.skip in name.indices[1:] or (name.symbol == "c" and formula.skip in name.indices)
               for name, _ in formula.factors if name.symbol in ("b", "c")):
            raise IndexRangeError(f"{formula.target} formula uses skipped boundary index {formula.skip}")
    expected = expected_counts(formula.kind, params.g, params.b)
    actual = {symbol: formula.count(symbol) for symbol in expected}
    if actual != expected:
        raise IndexRangeError(f"{formula.target} formula has factor counts {actual}, expected {expected}")


@dataclass(frozen=True)
class Catalog:
    generators: list[MappingClassName]
    lifts: list[LiftEntry]
    products: list[ProductFormula]

    def to_json(self) -> dict:
        return {
            "generators": [str(name) for name in self.generators],
            "lifts": [entry.to_json() for entry in self.lifts],
            "products": [formula.to_json() for formula in self.products],
        }


def build_catalog(g: int, b: int) -> Catalog:
    """Generators for any b >= 0; the lifts and products only exist once there is a boundary."""
    generators = generating_set(g, b)
    if b == 0:
        return Catalog(generators, [], [])
    params = SurfaceParams(g, b)
    return Catalog(generators, lift_table(params), boundary_products(params))
