"""
Surface-specific word layer.

Words live in pi_1(N_g^{b-1}, *), generated by x_1..x_g and y_1..y_{b-1}.
This module holds the projection p that kills the y's, the odd/even position
profile O_i/E_i, the Gamma and parity-subgroup predicates, and Schreier
rewriting of parity-subgroup words into the generators
A_i = x_i x_g^-1, B_j = x_g x_j, y_k, C_k = x_g y_k x_g^-1
for the transversal {1, x_g}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

from errors import IndexRangeError, ParityError
from words import (
    Generator,
    Letter,
    Word,
    concat,
    format_word,
    free_reduce,
    invert,
    tokenize,
    x,
    y,
)

logger = logging.getLogger("torelli-surface")

PLUS_KINDS = ("A", "B", "y", "C")


@dataclass(frozen=True)
class SurfaceParams:
    """Genus g and boundary count b of N_g^b; word indices run over y_1..y_{b-1}."""

    g: int
    b: int

    def __post_init__(self):
        if self.g < 1:
            raise IndexRangeError(f"genus must be >= 1, got g={self.g}")
        if self.b < 1:
            raise IndexRangeError(f"boundary count must be >= 1, got b={self.b}")

    @property
    def y_count(self) -> int:
        return self.b - 1

    def x_generators(self) -> list[Generator]:
        return [x(i) for i in range(1, self.g + 1)]

    def y_generators(self) -> list[Generator]:
        return [y(j) for j in range(1, self.b)]

    def generators(self) -> list[Generator]:
        return self.x_generators() + self.y_generators()

    def check_generator(self, gen: Generator) -> None:
        if gen.kind == "x" and gen.index <= self.g:
            return
        if gen.kind == "y" and gen.index <= self.y_count:
            return
        raise IndexRangeError(f"generator {gen} is out of range for g={self.g}, b={self.b}")

    def check_word(self, w: Word) -> None:
        for gen in w.generators():
            self.check_generator(gen)


@dataclass(frozen=True)
class OEProfile:
    """Occurrence counts of each x-index at odd (O) and even (E) positions."""

    odd: tuple[int, ...]
    even: tuple[int, ...]

    def O(self, i: int) -> int:
        return self.odd[i - 1]

    def E(self, i: int) -> int:
        return self.even[i - 1]

    def difference(self, i: int) -> int:
        """O_i - E_i."""
        return self.odd[i - 1] - self.even[i - 1]

    @property
    def balanced(self) -> bool:
        return self.odd == self.even


def project_p(w: Word, params: SurfaceParams) -> Word:
    """Delete every y-letter and freely reduce."""
    params.check_word(w)
    return free_reduce(Word(tuple(letter for letter in w if letter.generator.kind == "x")))


def p_length(w: Word, params: SurfaceParams) -> int:
    return len(project_p(w, params))


def _count_positions(p: Word, g: int) -> OEProfile:
    odd = [0] * g
    even = [0] * g
    for position, letter in enumerate(p, start=1):
        counts = odd if position % 2 == 1 else even
        counts[letter.generator.index - 1] += 1
    return OEProfile(tuple(odd), tuple(even))


def oe_profile(w: Word, params: SurfaceParams) -> OEProfile:
    p = project_p(w, params)
    if len(p) % 2:
        raise ParityError(f"p-projection {format_word(p)} has odd length {len(p)}")
    return _count_positions(p, params.g)


def position_counts(w: Word, params: SurfaceParams) -> OEProfile:
    """O_i and E_i of the p-projection without the even-length requirement."""
    return _count_positions(project_p(w, params), params.g)


def position_differences(w: Word, params: SurfaceParams) -> tuple[int, ...]:
    """O_i - E_i for i = 1..g."""
    counts = position_counts(w, params)
    return tuple(o - e for o, e in zip(counts.odd, counts.even))


def in_plus(w: Word, params: SurfaceParams) -> bool:
    return p_length(w, params) % 2 == 0


def in_gamma(w: Word, params: SurfaceParams) -> bool:
    p = project_p(w, params)
    if len(p) % 2:
        return False
    return _count_positions(p, params.g).balanced


class PlusAlphabet:
    """The free basis of the parity subgroup and its expansion into x/y words."""

    def __init__(self, params: SurfaceParams):
        self.params = params

    @cached_property
    def expansions(self) -> dict[Generator, Word]:
        g = self.params.g
        xg = x(g)
        table: dict[Generator, Word] = {}
        for i in range(1, g):
            table[Generator("A", i)] = Word.of(x(i), (xg, -1))
        for j in range(1, g + 1):
            table[Generator("B", j)] = Word.of(xg, x(j))
        for k in range(1, self.params.b):
            table[Generator("y", k)] = Word.of(y(k))
        for k in range(1, self.params.b):
            table[Generator("C", k)] = Word.of(xg, y(k), (xg, -1))
        return table

    @cached_property
    def by_expansion(self) -> dict[Word, Generator]:
        return {free_reduce(word): gen for gen, word in self.expansions.items()}

    def generators(self) -> list[Generator]:
        return list(self.expansions)

    def expand(self, w: Word) -> Word:
        parts = []
        for letter in w:
            try:
                base = self.expansions[letter.generator]
            except KeyError:
                raise IndexRangeError(f"{letter.generator} is not a parity-subgroup generator "
                                      f"for g={self.params.g}, b={self.params.b}") from None
            parts.append(base if letter.exponent == 1 else invert(base))
        return concat(*parts)


def plus_generators(params: SurfaceParams) -> dict[Generator, Word]:
    return dict(PlusAlphabet(params).expansions)


def expand_plus(w: Word, params: SurfaceParams) -> Word:
    """Expand a plus-alphabet word into x/y letters (unreduced)."""
    return PlusAlphabet(params).expand(w)


def parse_plus_word(text: str, params: SurfaceParams) -> Word:
    w = tokenize(text, PLUS_KINDS)
    alphabet = PlusAlphabet(params)
    for gen in w.generators():
        if gen not in alphabet.expansions:
            raise IndexRangeError(f"{gen} is out of range for g={params.g}, b={params.b}")
    return w


def format_plus_word(w: Word) -> str:
    return format_word(w)


def _plus_symbol(coset: int, gen: Generator, g: int) -> Generator | None:
    """Schreier generator u.gen.overline(u gen)^-1 for u = 1 (coset 0) or x_g (coset 1)."""
    if gen.kind == "y":
        return gen if coset == 0 else Generator("C", gen.index)
    if coset == 1:
        return Generator("B", gen.index)
    if gen.index == g:
        return None
    return Generator("A", gen.index)


def schreier_rewrite_plus(w: Word, params: SurfaceParams) -> Word:
    """Rewrite a parity-subgroup word over the A/B/y/C alphabet."""
    if not in_plus(w, params):
        raise ParityError(f"{format_word(w)} is not in the parity subgroup (odd p-length)")
    coset = 0
    symbols: list[Letter] = []
    for letter in free_reduce(w):
        gen = letter.generator
        target = coset if gen.kind == "y" else 1 - coset
        if letter.exponent == 1:
            symbol = _plus_symbol(coset, gen, params.g)
            if symbol is not None:
                symbols.append(Letter(symbol, 1))
        else:
            symbol = _plus_symbol(target, gen, params.g)
            if symbol is not None:
                symbols.append(Letter(symbol, -1))
        coset = target
    rewritten = free_reduce(Word(tuple(symbols)))
    logger.debug(f"rewrote {w} as {rewritten}")
    return rewritten


def closed_relator(params: SurfaceParams) -> Word:
    """x_1^2 x_2^2 ... x_g^2, the defining relator of pi_1(N_g)."""
    return Word.of(*[(gen, 2) for gen in params.x_generators()])
