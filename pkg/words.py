"""
Free-group words over a typed alphabet.

A word is an immutable sequence of letters x_i^{+-1}, y_j^{+-1} (or any other
generator kind, such as the A/B/C symbols of the parity subgroup). Powers in
the input grammar are expanded to repeated letters at parse time, and
reduction is never implicit: callers decide when to call free_reduce.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, Sequence

from errors import IndexRangeError, WordSyntaxError

if TYPE_CHECKING:
    from surface import SurfaceParams

logger = logging.getLogger("torelli-words")

BASE_KINDS = ("x", "y")

_TOKEN = re.compile(r"^([A-Za-z]+)(\d+)(?:\^([+-]?\d+))?$")
_SEPARATORS = re.compile(r"[\s*]+")


@dataclass(frozen=True, order=True)
class Generator:
    """A generator symbol such as x3 or y1; index is 1-based."""

    kind: str
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise IndexRangeError(f"generator index must be >= 1, got {self.kind}{self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def x(i: int) -> Generator:
    return Generator("x", i)


def y(j: int) -> Generator:
    return Generator("y", j)


@dataclass(frozen=True)
class Letter:
    generator: Generator
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {self.exponent}")

    def inverse(self) -> Letter:
        return Letter(self.generator, -self.exponent)

    def __str__(self) -> str:
        return str(self.generator) if self.exponent == 1 else f"{self.generator}^-1"


@dataclass(frozen=True)
class Word:
    """An ordered sequence of letters; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    @classmethod
    def of(cls, *items: Generator | Letter | tuple[Generator, int]) -> Word:
        """Build a word from generators, letters or (generator, power) pairs."""
        letters: list[Letter] = []
        for item in items:
            if isinstance(item, Letter):
                letters.append(item)
            elif isinstance(item, Generator):
                letters.append(Letter(item, 1))
            else:
                gen, power = item
                sign = 1 if power > 0 else -1
                letters.extend(Letter(gen, sign) for _ in range(abs(power)))
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __mul__(self, other: Word) -> Word:
        return concat(self, other)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_reduced(self) -> bool:
        return all(a.generator != b.generator or a.exponent == b.exponent
                   for a, b in zip(self.letters, self.letters[1:]))

    def generators(self) -> set[Generator]:
        return {letter.generator for letter in self.letters}


EMPTY = Word()


def tokenize(text: str, kinds: Sequence[str] = BASE_KINDS) -> Word:
    """Parse a word over the given generator kinds without any range checks."""
    tokens = [tok for tok in _SEPARATORS.split(text.strip()) if tok]
    if not tokens:
        raise WordSyntaxError("empty word text; use '1' for the identity")
    letters: list[Letter] = []
    for token in tokens:
        if token == "1":
            continue
        match = _TOKEN.match(token)
        if not match or match.group(1) not in kinds:
            raise WordSyntaxError(f"bad token {token!r}; expected one of {', '.join(k + '<k>' for k in kinds)}")
        power = int(match.group(3)) if match.group(3) is not None else 1
        if power == 0:
            raise WordSyntaxError(f"zero exponent in token {token!r}")
        gen = Generator(match.group(1), int(match.group(2)))
        sign = 1 if power > 0 else -1
        letters.extend(Letter(gen, sign) for _ in range(abs(power)))
    return Word(tuple(letters))


def parse_word(text: str, params: SurfaceParams | None = None) -> Word:
    """Parse ``text`` into the literal (unreduced) word; check indices against params."""
    word = tokenize(text, BASE_KINDS)
    if params is not None:
        params.check_word(word)
    return word


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(str(letter) for letter in w.letters)


def free_reduce(w: Word) -> Word:
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].generator == letter.generator and stack[-1].exponent == -letter.exponent:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def invert(w: Word) -> Word:
    return Word(tuple(letter.inverse() for letter in reversed(w.letters)))


def concat(*words: Word) -> Word:
    return Word(tuple(letter for w in words for letter in w.letters))


def conjugate(u: Word, w: Word) -> Word:
    """u w u^-1, unreduced."""
    return concat(u, w, invert(u))


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a b a^-1 b^-1, unreduced."""
    return concat(a, b, invert(a), invert(b))


def power(w: Word, n: int) -> Word:
    base = w if n >= 0 else invert(w)
    return concat(*([base] * abs(n)))
