"""
Integer homology of N_g^b and the push-map actions on it.

H_1(N_g^b; Z) = <c_1..c_g, d_1..d_b | 2(c_1+...+c_g) + (d_1+...+d_b) = 0>,
which is free of rank g+b-1. We use the basis (c_1..c_g, d_1..d_{b-1}) and
treat d_b as the derived class -(2 sum c_i + sum_{j<b} d_j), so that every
action below is written with d_b as its correction term.

Vectors are 1-d int64 arrays and matrices are square int64 arrays whose
columns are the images of the basis vectors. Everything returned is
read-only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from errors import ConstraintError, IndexRangeError, ParityError
from surface import SurfaceParams, project_p
from words import Word, format_word

logger = logging.getLogger("torelli-homology")

DTYPE = np.int64


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def rank(params: SurfaceParams) -> int:
    return params.g + params.b - 1


def basis_labels(params: SurfaceParams) -> list[str]:
    return [f"c{i}" for i in range(1, params.g + 1)] + [f"d{j}" for j in range(1, params.b)]


def identity(params: SurfaceParams) -> np.ndarray:
    return _frozen(np.eye(rank(params), dtype=DTYPE))


def basis_vector(label: str, params: SurfaceParams) -> np.ndarray:
    labels = basis_labels(params)
    if label not in labels:
        raise IndexRangeError(f"{label} is not a basis element for g={params.g}, b={params.b}")
    v = np.zeros(rank(params), dtype=DTYPE)
    v[labels.index(label)] = 1
    return _frozen(v)


@lru_cache(maxsize=None)
def _db_class(g: int, b: int) -> np.ndarray:
    v = np.empty(g + b - 1, dtype=DTYPE)
    v[:g] = -2
    v[g:] = -1
    return _frozen(v)


def db_class(params: SurfaceParams) -> np.ndarray:
    """Coordinates of d_b: -2 in every c-slot and -1 in every d-slot."""
    return _db_class(params.g, params.b)


@lru_cache(maxsize=None)
def _xij(i: int, j: int, g: int, b: int) -> np.ndarray:
    m = np.eye(g + b - 1, dtype=DTYPE)
    if i != j:
        db = _db_class(g, b)
        # c_i -> c_i - d_b, c_j -> c_j + d_b. The nilpotent part squares to
        # zero, so the same formula with i, j swapped is the inverse.
        m[:, i - 1] -= db
        m[:, j - 1] += db
    return _frozen(m)


def xij_matrix(i: int, j: int, params: SurfaceParams) -> np.ndarray:
    """The action x_ij = (x_i x_j)_* on H_1(N_g^b)."""
    for index in (i, j):
        if not 1 <= index <= params.g:
            raise IndexRangeError(f"x-index {index} out of range 1..{params.g}")
    return _xij(i, j, params.g, params.b)


def act(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    if m.shape[1] != v.shape[0]:
        raise IndexRangeError(f"cannot apply a {m.shape} matrix to a vector of length {v.shape[0]}")
    return _frozen(m @ v)


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a . b, i.e. apply b first."""
    if a.shape[1] != b.shape[0]:
        raise IndexRangeError(f"cannot compose {a.shape} with {b.shape}")
    return _frozen(a @ b)


def is_identity(m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and bool(np.array_equal(m, np.eye(m.shape[0], dtype=DTYPE)))


def push_action(w: Word, params: SurfaceParams) -> np.ndarray:
    """
    x_* = x_{i1 i2} x_{i3 i4} ... over the reduced p-projection of w.

    Args:
        w: Word in the parity subgroup
        params: Surface whose H_1 is acted on

    Returns:
        Read-only (g+b-1)x(g+b-1) int64 matrix in the c1..cg, d1..d(b-1) basis

    Raises:
        ParityError: the p-projection has odd length
    """
    p = project_p(w, params)
    if len(p) % 2:
        raise ParityError(f"{format_word(w)} is not in the parity subgroup (p-length {len(p)})")
    m = identity(params)
    indices = [letter.generator.index for letter in p]
    for first, second in zip(indices[::2], indices[1::2]):
        m = m @ xij_matrix(first, second, params)
    return _frozen(np.array(m, dtype=DTYPE))


def db_multiples(m: np.ndarray, params: SurfaceParams) -> tuple[int, ...]:
    """
    Decode a matrix of the form c_i -> c_i + n_i d_b, d_j -> d_j.

    Returns (n_1, ..., n_g). Raises ConstraintError when some d-column moves
    or some c-column differs from c_i by something other than a multiple of d_b.
    """
    n = rank(params)
    if m.shape != (n, n):
        raise ConstraintError(f"expected a {n}x{n} matrix, got {m.shape}")
    eye = np.eye(n, dtype=DTYPE)
    for col in range(params.g, n):
        if not np.array_equal(m[:, col], eye[:, col]):
            raise ConstraintError(f"column {basis_labels(params)[col]} is not fixed")
    db = db_class(params)
    multiples = []
    for col in range(params.g):
        delta = m[:, col] - eye[:, col]
        # db has -2 in the first slot
        k = -int(delta[0]) // 2 if delta[0] % 2 == 0 else None
        if k is None or not np.array_equal(delta, k * db):
            raise ConstraintError(f"column c{col + 1} is not c{col + 1} plus a multiple of d_b")
        multiples.append(k)
    return tuple(multiples)


@dataclass(frozen=True)
class Correction:
    """A correction-twist sequence and the verification product."""

    twists: tuple[tuple[int, int], ...]
    matrix: np.ndarray

    @property
    def verified(self) -> bool:
        return is_identity(self.matrix)


def twist_power(i: int, exponent: int, params: SurfaceParams) -> np.ndarray:
    """(tau_{i g})_*^exponent; tau_{ig} acts on homology as x_{ig}."""
    g = params.g
    base = xij_matrix(i, g, params) if exponent >= 0 else xij_matrix(g, i, params)
    return _frozen(np.linalg.matrix_power(base, abs(exponent)).astype(DTYPE))


def action_from_multiples(n: tuple[int, ...] | list[int], params: SurfaceParams) -> np.ndarray:
    """The matrix c_i -> c_i + n_i d_b, d_j -> d_j."""
    if len(n) != params.g:
        raise ConstraintError(f"expected {params.g} multiples, got {len(n)}")
    m = np.eye(rank(params), dtype=DTYPE)
    db = db_class(params)
    for col, k in enumerate(n):
        m[:, col] += int(k) * db
    return _frozen(m)


def correction_twists(n: tuple[int, ...] | list[int], params: SurfaceParams) -> Correction:
    """
    Twists tau = tau_{g-1 g}^{n_{g-1}} ... tau_{1g}^{n_1} cancelling an action
    c_i -> c_i + n_i d_b. Requires sum(n) == 0.

    Args:
        n: Multiples (n_1, ..., n_g)
        params: Surface the action lives on

    Returns:
        Correction with the (i, n_i) pairs for i = g-1 down to 1, pairs with
        n_i == 0 left out, and the composed matrix

    Raises:
        ConstraintError: wrong length or nonzero sum
    """
    n = tuple(int(k) for k in n)
    if len(n) != params.g:
        raise ConstraintError(f"expected {params.g} multiples, got {len(n)}")
    if sum(n):
        raise ConstraintError(f"the multiples must sum to 0, got sum {sum(n)}")
    twists = tuple((i, n[i - 1]) for i in range(params.g - 1, 0, -1) if n[i - 1])
    tau = identity(params)
    for i, exponent in twists:
        tau = tau @ twist_power(i, exponent, params)
    matrix = compose(tau, action_from_multiples(n, params))
    logger.debug(f"correction twists {twists} for n={n}")
    return Correction(twists, matrix)


def correction_from_matrix(m: np.ndarray, params: SurfaceParams) -> Correction:
    return correction_twists(db_multiples(m, params), params)
