"""
Normal-closure membership certificates.

A certificate is a sequence of entries (u, r, e) standing for the product
u r^e u^-1 taken left to right. It certifies a word w when that product
freely reduces to w. gamma_certificate produces one for every element of
Gamma by following the elimination argument for Gamma = ker(psi): kill the
y's, turn inverse letters positive with squares, then repeatedly move the
leading pair x_{i1} x_{i2} to the right with pair commutators until it meets
the matching x_{i1} and cancels as a square.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from errors import ConversionError, IndexRangeError, MembershipError, TorelliError, WordSyntaxError
from presentations import reduce_mod_orders
from surface import SurfaceParams, in_gamma
from words import (
    EMPTY,
    Letter,
    Word,
    commutator,
    concat,
    conjugate,
    format_word,
    free_reduce,
    invert,
    parse_word,
    power,
    x,
    y,
)

logger = logging.getLogger("torelli-certificates")


class RelatorFamily(str, Enum):
    SQUARE = "Square"
    YKILL = "Ykill"
    PAIR_COMMUTATOR = "PairCommutator"
    TRIPLE_SQUARE = "TripleSquare"


_ARITY = {
    RelatorFamily.SQUARE: 1,
    RelatorFamily.YKILL: 1,
    RelatorFamily.PAIR_COMMUTATOR: 4,
    RelatorFamily.TRIPLE_SQUARE: 3,
}


def _xs(*indices: int) -> Word:
    return Word.of(*[x(i) for i in indices])


@dataclass(frozen=True)
class RelatorInstance:
    family: RelatorFamily
    indices: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != _ARITY[self.family]:
            raise IndexRangeError(f"{self.family.value} takes {_ARITY[self.family]} indices, got {self.indices}")
        if any(i < 1 for i in self.indices):
            raise IndexRangeError(f"relator indices must be positive, got {self.indices}")

    @classmethod
    def square(cls, i: int) -> RelatorInstance:
        return cls(RelatorFamily.SQUARE, (i,))

    @classmethod
    def ykill(cls, j: int) -> RelatorInstance:
        return cls(RelatorFamily.YKILL, (j,))

    @classmethod
    def pair_commutator(cls, a: int, b: int, c: int, d: int) -> RelatorInstance:
        return cls(RelatorFamily.PAIR_COMMUTATOR, (a, b, c, d))

    @classmethod
    def triple_square(cls, i: int, j: int, k: int) -> RelatorInstance:
        return cls(RelatorFamily.TRIPLE_SQUARE, (i, j, k))

    def expansion(self) -> Word:
        ind = self.indices
        if self.family is RelatorFamily.SQUARE:
            return Word.of((x(ind[0]), 2))
        if self.family is RelatorFamily.YKILL:
            return Word.of(y(ind[0]))
        if self.family is RelatorFamily.PAIR_COMMUTATOR:
            return commutator(_xs(ind[0], ind[1]), _xs(ind[2], ind[3]))
        return power(_xs(*ind), 2)

    def check(self, params: SurfaceParams) -> None:
        bound = params.y_count if self.family is RelatorFamily.YKILL else params.g
        if any(i > bound for i in self.indices):
            raise IndexRangeError(f"{self} is out of range for g={params.g}, b={params.b}")

    def __str__(self) -> str:
        return f"{self.family.value}({','.join(map(str, self.indices))})"


@dataclass(frozen=True)
class CertificateEntry:
    conjugator: Word
    relator: RelatorInstance
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"certificate exponent must be +1 or -1, got {self.exponent}")

    def word(self) -> Word:
        r = self.relator.expansion()
        return conjugate(self.conjugator, r if self.exponent == 1 else invert(r))


@dataclass(frozen=True)
class Certificate:
    entries: tuple[CertificateEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: Certificate) -> Certificate:
        return Certificate(self.entries + other.entries)

    def families(self) -> set[RelatorFamily]:
        return {entry.relator.family for entry in self.entries}

    def to_json(self) -> list[dict]:
        return [
            {
                "conj": format_word(entry.conjugator),
                "relator": {"family": entry.relator.family.value, "indices": list(entry.relator.indices)},
                "exp": entry.exponent,
            }
            for entry in self.entries
        ]

    @classmethod
    def from_json(cls, data: list[dict], params: SurfaceParams | None = None) -> Certificate:
        entries = []
        for item in data:
            try:
                relator = RelatorInstance(RelatorFamily(item["relator"]["family"]), tuple(item["relator"]["indices"]))
                if params is not None:
                    relator.check(params)
                entry = CertificateEntry(parse_word(item.get("conj", "1"), params), relator, int(item.get("exp", 1)))
            except TorelliError:
                raise
            except (KeyError, TypeError, ValueError) as exc:
                raise WordSyntaxError(f"malformed certificate entry {item!r}: {exc}") from exc
            entries.append(entry)
        return cls(tuple(entries))


def expand_certificate(c: Certificate) -> Word:
    return free_reduce(concat(*(entry.word() for entry in c.entries)))


def verify_certificate(c: Certificate, w: Word) -> bool:
    return expand_certificate(c) == free_reduce(w)


class _Builder:
    """Keeps the invariant  target = (product of entries) . current  in the free group."""

    def __init__(self, current: list[Letter]):
        self.current = current
        self.entries: list[CertificateEntry] = []

    def remove(self, position: int, length: int, relator: RelatorInstance, exponent: int) -> None:
        # current = a r^e b  ->  (a r^e a^-1) . a b
        prefix = Word(tuple(self.current[:position]))
        self.entries.append(CertificateEntry(prefix, relator, exponent))
        del self.current[position:position + length]

    def flip_inverse(self, position: int) -> None:
        # a x^-1 b = (a x^-2 a^-1) . a x b
        letter = self.current[position]
        self.entries.append(CertificateEntry(Word(tuple(self.current[:position])),
                                             RelatorInstance.square(letter.generator.index), -1))
        self.current[position] = letter.inverse()

    def swap_pairs(self, position: int) -> None:
        # a P Q b = (a [P,Q] a^-1) . a Q P b  for the pairs P, Q starting at position
        p = self.current[position:position + 2]
        q = self.current[position + 2:position + 4]
        indices = tuple(letter.generator.index for letter in p + q)
        self.entries.append(CertificateEntry(Word(tuple(self.current[:position])),
                                             RelatorInstance.pair_commutator(*indices), 1))
        self.current[position:position + 4] = q + p

    def certificate(self) -> Certificate:
        return Certificate(tuple(self.entries))


def gamma_certificate(w: Word, params: SurfaceParams) -> Certificate:
    """
    Write w in Gamma as a product of conjugated Square, Ykill and PairCommutator relators.

    Args:
        w: Word over x1..xg, y1..y(b-1)
        params: Surface the word lives on

    Returns:
        Certificate whose expanded product freely reduces to free_reduce(w)

    Raises:
        MembershipError: w is not in Gamma
    """
    if not in_gamma(w, params):
        raise MembershipError(f"{format_word(w)} is not in Gamma for g={params.g}, b={params.b}")
    builder = _Builder(list(free_reduce(w)))
    current = builder.current

    position = 0
    while position < len(current):
        letter = current[position]
        if letter.generator.kind == "y":
            builder.remove(position, 1, RelatorInstance.ykill(letter.generator.index), letter.exponent)
        else:
            position += 1

    for position, letter in enumerate(current):
        if letter.exponent == -1:
            builder.flip_inverse(position)

    # current is now a positive even word with O_i = E_i
    rounds = 0
    while current:
        lead = current[0].generator
        # leftmost even position carrying the leading index
        match = next(k for k in range(1, len(current), 2) if current[k].generator == lead)
        for position in range(0, match - 1, 2):
            builder.swap_pairs(position)
        # the two copies of lead are now adjacent
        builder.remove(max(match - 2, 0), 2, RelatorInstance.square(lead.index), 1)
        rounds += 1

    certificate = builder.certificate()
    logger.debug(f"certificate for {format_word(w)}: {len(certificate)} entries over {rounds} rounds")
    return certificate


def orders_certificate(w: Word) -> Certificate:
    """
    Certificate over Square and Ykill for a word that is trivial modulo
    x_i^2 and y_j. Raises MembershipError otherwise.
    """
    builder = _Builder(list(w))
    current = builder.current
    position = 0
    while position < len(current):
        letter = current[position]
        if letter.generator.kind == "y":
            builder.remove(position, 1, RelatorInstance.ykill(letter.generator.index), letter.exponent)
            continue
        if letter.exponent == -1:
            builder.flip_inverse(position)
        # everything left of position is already reduced modulo squares
        if position and current[position - 1].generator == current[position].generator:
            builder.remove(position - 1, 2, RelatorInstance.square(letter.generator.index), 1)
            position -= 1
        else:
            position += 1
    if current:
        raise MembershipError(f"{format_word(w)} is not trivial modulo squares and y's")
    return builder.certificate()


def _commutator_to_triples(a: int, b: int, c: int, d: int) -> list[CertificateEntry]:
    """Conjugated TripleSquares congruent to [x_a x_b, x_c x_d] modulo squares (a != b, c != d, not degenerate)."""
    T = RelatorInstance.triple_square
    if c == a:
        return [CertificateEntry(_xs(a), T(b, a, d))]
    if c == b:
        return [CertificateEntry(EMPTY, T(a, d, b))]
    if d in (a, b):
        return [CertificateEntry(EMPTY, T(a, b, c))]
    return [CertificateEntry(EMPTY, T(a, b, c)), CertificateEntry(_xs(c, d), T(d, b, a))]


def convert_relator(r: RelatorInstance, target: RelatorFamily | str) -> Certificate:
    """
    Express a TripleSquare through PairCommutators (or the reverse) plus Squares.

    Patterns that collapse modulo squares come back as Square-only certificates.
    """
    target = RelatorFamily(target)
    source = r.expansion()
    orders = {x(i): 2 for i in r.indices}
    if (r.family, target) not in {(RelatorFamily.TRIPLE_SQUARE, RelatorFamily.PAIR_COMMUTATOR),
                                  (RelatorFamily.PAIR_COMMUTATOR, RelatorFamily.TRIPLE_SQUARE)}:
        raise ConversionError(f"cannot convert {r} to {target.value}")

    if not reduce_mod_orders(source, orders):
        logger.debug(f"{r} collapses modulo squares")
        return orders_certificate(source)

    if r.family is RelatorFamily.TRIPLE_SQUARE:
        i, j, k = r.indices
        tail = [CertificateEntry(EMPTY, RelatorInstance.pair_commutator(i, j, k, j))]
    else:
        tail = _commutator_to_triples(*r.indices)

    tail_word = concat(*(entry.word() for entry in tail))
    head = orders_certificate(concat(source, invert(tail_word)))
    return head + Certificate(tuple(tail))
