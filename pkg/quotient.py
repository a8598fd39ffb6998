"""
Normal form for the quotient pi_g^{b-1} = pi_1 / <<x_i^2, y_j, (x_i x_j x_k)^2>>.

Elements are modelled as pairs (v, parity) in Z^{g-1} x| Z/2 where the parity
bit acts on the vector part by negation:

    (v1, e1) . (v2, e2) = (v1 + (-1)^e1 v2, e1 xor e2)

x_i (i < g) maps to (e_i, 1), x_g to (0, 1) and every y_j to the identity.
Every generator image has order at most 2, so exponent signs are ignored.
The model is checked against the Gamma predicate by the kernel concordance
tests rather than assumed faithful.
"""
from __future__ import annotations

from dataclasses import dataclass

from errors import IndexRangeError
from surface import SurfaceParams
from words import Word


@dataclass(frozen=True)
class NormalForm:
    v: tuple[int, ...]
    parity: int = 0

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {self.parity}")

    @classmethod
    def identity(cls, g: int) -> NormalForm:
        return cls((0,) * (g - 1), 0)

    def to_json(self) -> dict:
        return {"v": list(self.v), "parity": self.parity}


def nf_mul(a: NormalForm, b: NormalForm) -> NormalForm:
    if len(a.v) != len(b.v):
        raise IndexRangeError(f"normal forms of different rank: {len(a.v)} vs {len(b.v)}")
    sign = -1 if a.parity else 1
    return NormalForm(tuple(p + sign * q for p, q in zip(a.v, b.v)), a.parity ^ b.parity)


def generator_image(index: int, params: SurfaceParams) -> NormalForm:
    v = [0] * (params.g - 1)
    if index < params.g:
        v[index - 1] = 1
    return NormalForm(tuple(v), 1)


def nf(w: Word, params: SurfaceParams) -> NormalForm:
    params.check_word(w)
    # Letter-by-letter product, inlined on a mutable vector.
    v = [0] * (params.g - 1)
    parity = 0
    for letter in w:
        gen = letter.generator
        if gen.kind == "y":
            continue
        if gen.index < params.g:
            v[gen.index - 1] += -1 if parity else 1
        parity ^= 1
    return NormalForm(tuple(v), parity)


def is_trivial(a: NormalForm) -> bool:
    return a.parity == 0 and not any(a.v)
