"""
Utility functions for the Torelli toolkit: seeded samplers and timing.
"""
import itertools
import logging
import random
import time
from contextlib import contextmanager
from typing import Iterator, List, Optional

from certificates import Certificate, CertificateEntry, RelatorInstance, expand_certificate
from surface import SurfaceParams
from words import Letter, Word, free_reduce

logger = logging.getLogger("torelli-utils")


def random_letter(params: SurfaceParams, rng: random.Random) -> Letter:
    return Letter(rng.choice(params.generators()), rng.choice((1, -1)))


def random_word(params: SurfaceParams, rng: random.Random, max_length: int) -> Word:
    """Unreduced word of uniformly chosen length 0..max_length."""
    length = rng.randint(0, max_length)
    return Word(tuple(random_letter(params, rng) for _ in range(length)))


def random_relator(params: SurfaceParams, rng: random.Random) -> RelatorInstance:
    """One of the relators normally generating Gamma."""
    families = ["square", "pair"] + (["ykill"] if params.y_count else [])
    family = rng.choice(families)
    if family == "square":
        return RelatorInstance.square(rng.randint(1, params.g))
    if family == "ykill":
        return RelatorInstance.ykill(rng.randint(1, params.y_count))
    return RelatorInstance.pair_commutator(*(rng.randint(1, params.g) for _ in range(4)))


def random_gamma_certificate(params: SurfaceParams, rng: random.Random, max_factors: int,
                             conjugator_length: int = 4) -> Certificate:
    """Random product of 1..max_factors conjugated relators; its expansion lies in Gamma."""
    entries = []
    for _ in range(rng.randint(1, max_factors)):
        conj = free_reduce(random_word(params, rng, conjugator_length))
        entries.append(CertificateEntry(conj, random_relator(params, rng), rng.choice((1, -1))))
    return Certificate(tuple(entries))


def random_gamma_element(params: SurfaceParams, rng: random.Random, max_factors: int) -> Word:
    return expand_certificate(random_gamma_certificate(params, rng, max_factors))


def all_words(letters: List[Letter], max_length: int, reduced: bool = True) -> Iterator[Word]:
    """Every word over ``letters`` of length <= max_length, freely reduced ones only by default."""
    yield Word(())
    frontier: List[Word] = [Word(())]
    for _ in range(max_length):
        grown = []
        for word in frontier:
            for letter in letters:
                if reduced and word and word[-1] == letter.inverse():
                    continue
                longer = Word(word.letters + (letter,))
                grown.append(longer)
                yield longer
        frontier = grown


def x_letters(params: SurfaceParams) -> List[Letter]:
    return [Letter(gen, e) for gen, e in itertools.product(params.x_generators(), (1, -1))]


def random_vector(length: int, bound: int, rng: random.Random) -> List[int]:
    """Integers in [-bound, bound] summing to 0; the last entry is fixed up and resampled if out of range."""
    while True:
        head = [rng.randint(-bound, bound) for _ in range(length - 1)]
        last = -sum(head)
        if abs(last) <= bound:
            return head + [last]


@contextmanager
def timer(label: str, sink: Optional[dict] = None):
    """Log the wall time of a block and optionally store it under ``label``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start
        if sink is not None:
            sink[label] = elapsed
        logger.info(f"{label} took {elapsed:.3f}s")
