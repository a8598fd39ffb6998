"""
Finitely presented groups, the word problem in free products of cyclic
groups, and Reidemeister-Schreier presentations of finite-index subgroups.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping

from errors import PreconditionError, PresentationError
from surface import PlusAlphabet, SurfaceParams
from words import (
    EMPTY,
    Generator,
    Letter,
    Word,
    commutator,
    concat,
    format_word,
    free_reduce,
    invert,
    power,
    x,
)

logger = logging.getLogger("torelli-presentations")

Namer = Callable[[Word], Generator]


@dataclass(frozen=True)
class Presentation:
    """Generators and relators; subgroup presentations also carry expansions."""

    generators: tuple[Generator, ...]
    relators: tuple[Word, ...] = ()
    expansions: Mapping[Generator, Word] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        declared = set(self.generators)
        if len(declared) != len(self.generators):
            raise PresentationError("duplicate generator in presentation")
        for relator in self.relators:
            unknown = relator.generators() - declared
            if unknown:
                raise PresentationError(
                    f"relator {format_word(relator)} uses undeclared generators "
                    f"{', '.join(sorted(map(str, unknown)))}")

    def to_json(self) -> dict:
        return {
            "generators": [str(gen) for gen in self.generators],
            "relators": [format_word(r) for r in self.relators],
        }


@dataclass(frozen=True)
class CosetTable:
    """
    Finite-index coset data: transversal[0] is the identity, and action[gen][c]
    is the coset reached from coset c by right multiplication with gen.
    """

    transversal: tuple[Word, ...]
    action: Mapping[Generator, tuple[int, ...]]

    def __post_init__(self):
        size = len(self.transversal)
        if size == 0 or self.transversal[0]:
            raise PresentationError("the first transversal element must be the identity")
        for gen, column in self.action.items():
            if sorted(column) != list(range(size)):
                raise PresentationError(f"action of {gen} is not a permutation of {size} cosets")
        reps = {free_reduce(u): c for c, u in enumerate(self.transversal)}
        if len(reps) != size:
            raise PresentationError("transversal elements must be distinct")
        for c, u in enumerate(self.transversal):
            reduced = free_reduce(u)
            for cut in range(len(reduced)):
                if reduced[:cut] not in reps:
                    raise PresentationError(f"transversal is not prefix closed at {format_word(u)}")
            if self.trace(reduced) != c:
                raise PresentationError(f"representative {format_word(u)} does not lie in coset {c}")

    @property
    def index(self) -> int:
        return len(self.transversal)

    def step(self, coset: int, letter: Letter) -> int:
        column = self.action[letter.generator]
        if letter.exponent == 1:
            return column[coset]
        return column.index(coset)

    def trace(self, w: Word, start: int = 0) -> int:
        coset = start
        for letter in w:
            try:
                coset = self.step(coset, letter)
            except KeyError:
                raise PresentationError(f"coset table has no action for {letter.generator}") from None
        return coset


def surface_orders(params: SurfaceParams) -> dict[Generator, int]:
    orders = {gen: 2 for gen in params.x_generators()}
    orders.update({gen: 1 for gen in params.y_generators()})
    return orders


def reduce_mod_orders(w: Word, orders: Mapping[Generator, int]) -> Word:
    """
    Canonical form in the free product of cyclic groups given by ``orders``.

    Order n > 1 keeps exponents in [1, n); order 1 kills the generator; order 0
    (or a generator missing from the map) is infinite cyclic.
    """
    syllables: list[list] = []
    for letter in w:
        gen = letter.generator
        order = orders.get(gen, 0)
        if order == 1:
            continue
        if syllables and syllables[-1][0] == gen:
            syllables[-1][1] += letter.exponent
        else:
            syllables.append([gen, letter.exponent])
        if order:
            syllables[-1][1] %= order
        if syllables[-1][1] == 0:
            syllables.pop()
    return Word.of(*[(gen, exponent) for gen, exponent in syllables])


def _xs(*indices: int) -> Word:
    return Word.of(*[x(i) for i in indices])


def _triple_square(i: int, j: int, k: int) -> Word:
    return power(_xs(i, j, k), 2)


def _pair_commutator(a: int, b: int, c: int, d: int) -> Word:
    return commutator(_xs(a, b), _xs(c, d))


# Congruences modulo x_1^2, ..., x_g^2 between commutator relators and
# conjugated triple squares, over mutually distinct indices.
MOD_SQUARE_IDENTITIES: dict[str, tuple[int, Callable[..., tuple[Word, Word]]]] = {
    "[xixj,xixk] = xi (xjxixk)^2 xi^-1": (
        3, lambda i, j, k: (_pair_commutator(i, j, i, k), concat(_xs(i), _triple_square(j, i, k), invert(_xs(i))))),
    "[xixj,xkxj] = (xixjxk)^2": (
        3, lambda i, j, k: (_pair_commutator(i, j, k, j), _triple_square(i, j, k))),
    "[xixj,xkxi] = (xixjxk)^2": (
        3, lambda i, j, k: (_pair_commutator(i, j, k, i), _triple_square(i, j, k))),
    "[xixj,xjxk] = (xixkxj)^2": (
        3, lambda i, j, k: (_pair_commutator(i, j, j, k), _triple_square(i, k, j))),
    "[xixj,xkxl] = (xixjxk)^2 xkxl (xlxjxi)^2 (xkxl)^-1": (
        4, lambda i, j, k, l: (_pair_commutator(i, j, k, l),
                               concat(_triple_square(i, j, k), _xs(k, l), _triple_square(l, j, i), invert(_xs(k, l))))),
}

# Index patterns for which the commutator collapses modulo squares alone;
# letters name distinct indices.
DEGENERATE_PATTERNS = ("iiii", "iiij", "iiji", "ijii", "jiii", "iijj", "ijij", "ijji", "iijk", "ijkk")


@dataclass
class IdentityReport:
    g: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_mod_square_identities(g: int) -> IdentityReport:
    """Check every congruence and degenerate pattern for all admissible index tuples."""
    if g < 4:
        raise PreconditionError(f"the four-index identity needs g >= 4, got g={g}")
    orders = {x(i): 2 for i in range(1, g + 1)}
    report = IdentityReport(g)
    indices = range(1, g + 1)

    for name, (arity, build) in MOD_SQUARE_IDENTITIES.items():
        for combo in itertools.permutations(indices, arity):
            left, right = build(*combo)
            for candidate in (concat(left, invert(right)), concat(right, invert(left))):
                report.checked += 1
                if reduce_mod_orders(candidate, orders):
                    report.failures.append(f"{name} at {combo}")

    for pattern in DEGENERATE_PATTERNS:
        letters = sorted(set(pattern))
        for combo in itertools.permutations(indices, len(letters)):
            assignment = dict(zip(letters, combo))
            report.checked += 1
            relator = _pair_commutator(*(assignment[ch] for ch in pattern))
            if reduce_mod_orders(relator, orders):
                report.failures.append(f"degenerate pattern {pattern} at {combo}")

    logger.info(f"mod-square identities at g={g}: {report.checked} checks, {len(report.failures)} failures")
    return report


def free_pi_presentation(params: SurfaceParams) -> Presentation:
    return Presentation(tuple(params.generators()))


def pi_presentation(params: SurfaceParams) -> Presentation:
    """<x_i, y_j | x_i^2, y_j, (x_i x_j x_k)^2 for i<j<k>."""
    relators = [Word.of((gen, 2)) for gen in params.x_generators()]
    relators += [Word.of(gen) for gen in params.y_generators()]
    relators += [_triple_square(i, j, k) for i, j, k in itertools.combinations(range(1, params.g + 1), 3)]
    return Presentation(tuple(params.generators()), tuple(relators))


def parity_coset_table(pres: Presentation, params: SurfaceParams) -> CosetTable:
    """Cosets {1, x_g} of the parity subgroup: x's swap them, y's fix them."""
    action = {}
    for gen in pres.generators:
        if gen.kind == "x":
            action[gen] = (1, 0)
        elif gen.kind == "y":
            action[gen] = (0, 1)
        else:
            raise PresentationError(f"parity table needs the x/y alphabet, got {gen}")
    return CosetTable((EMPTY, Word.of(x(params.g))), action)


def trivial_coset_table(pres: Presentation) -> CosetTable:
    return CosetTable((EMPTY,), {gen: (0,) for gen in pres.generators})


def default_namer() -> Namer:
    """Reuse a base generator name when the Schreier element is that generator, else s1, s2, ..."""
    counter = itertools.count(1)

    def name(expansion: Word) -> Generator:
        if len(expansion) == 1 and expansion[0].exponent == 1:
            return expansion[0].generator
        return Generator("s", next(counter))

    return name


def plus_namer(params: SurfaceParams) -> Namer:
    """Name Schreier generators of the parity subgroup A_i, B_j, y_k, C_k."""
    by_expansion = PlusAlphabet(params).by_expansion
    fallback = default_namer()

    def name(expansion: Word) -> Generator:
        return by_expansion.get(expansion) or fallback(expansion)

    return name


class SchreierRewriter:
    """Schreier generators u x overline(ux)^-1 of a coset table and rewriting over them."""

    def __init__(self, pres: Presentation, table: CosetTable, namer: Namer | None = None):
        missing = [gen for gen in pres.generators if gen not in table.action]
        if missing:
            raise PresentationError(f"coset table has no action for {', '.join(map(str, missing))}")
        self.table = table
        namer = namer or default_namer()
        self.symbols: dict[tuple[int, Generator], Generator] = {}
        self.expansions: dict[Generator, Word] = {}
        for coset, u in enumerate(table.transversal):
            for gen in pres.generators:
                target = table.action[gen][coset]
                ux = free_reduce(concat(u, Word.of(gen)))
                if ux == free_reduce(table.transversal[target]):
                    continue
                expansion = free_reduce(concat(ux, invert(table.transversal[target])))
                symbol = namer(expansion)
                if symbol in self.expansions:
                    raise PresentationError(f"namer produced duplicate subgroup generator {symbol}")
                self.symbols[(coset, gen)] = symbol
                self.expansions[symbol] = expansion

    def rewrite(self, w: Word, start: int = 0) -> Word:
        coset = start
        out: list[Letter] = []
        for letter in w:
            target = self.table.step(coset, letter)
            source = coset if letter.exponent == 1 else target
            symbol = self.symbols.get((source, letter.generator))
            if symbol is not None:
                out.append(Letter(symbol, letter.exponent))
            coset = target
        return free_reduce(Word(tuple(out)))

    def expand(self, w: Word) -> Word:
        return concat(*(self.expansions[l.generator] if l.exponent == 1 else invert(self.expansions[l.generator])
                        for l in w))


def schreier_rewrite(w: Word, pres: Presentation, table: CosetTable, namer: Namer | None = None) -> Word:
    """Rewrite a subgroup element (a word returning to coset 0) over the Schreier generators."""
    if table.trace(w) != 0:
        raise PresentationError(f"{format_word(w)} does not lie in the subgroup of the coset table")
    return SchreierRewriter(pres, table, namer).rewrite(w)


def reidemeister_schreier(pres: Presentation, table: CosetTable, namer: Namer | None = None) -> Presentation:
    """
    Presentation of the subgroup defined by ``table``.

    Generators are the nontrivial Schreier elements; relators are u r u^-1
    rewritten for every coset representative u and relator r, freely reduced,
    with empty and repeated relators dropped.

    Args:
        pres: Presentation of the ambient group
        table: Finite coset table of the subgroup, coset 0 being the subgroup
        namer: Names each Schreier element from its expansion; default_namer() when omitted

    Returns:
        Presentation whose expansions map each subgroup generator to its word over pres

    Raises:
        PresentationError: the table lacks a generator or some relator does not close up on a coset
    """
    rewriter = SchreierRewriter(pres, table, namer)
    relators: list[Word] = []
    seen: set[Word] = set()
    for coset in range(table.index):
        for relator in pres.relators:
            if table.trace(relator, coset) != coset:
                raise PresentationError(f"relator {format_word(relator)} is not trivial on coset {coset}")
            rewritten = rewriter.rewrite(relator, coset)
            if rewritten and rewritten not in seen:
                seen.add(rewritten)
                relators.append(rewritten)
    generators = tuple(rewriter.expansions)
    logger.debug(f"Reidemeister-Schreier: {len(generators)} generators, {len(relators)} relators")
    return Presentation(generators, tuple(relators), dict(rewriter.expansions))
