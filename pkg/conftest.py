"""
Shared pytest fixtures and hypothesis strategies.
"""
import random

import pytest
from hypothesis import strategies as st

from surface import SurfaceParams
from utils import random_gamma_element
from words import Letter, Word, x, y


@pytest.fixture
def params_53():
    return SurfaceParams(5, 3)


@pytest.fixture
def params_32():
    return SurfaceParams(3, 2)


surface_params = st.builds(SurfaceParams, g=st.integers(1, 6), b=st.integers(1, 4))


def letters_for(params: SurfaceParams):
    gens = [x(i) for i in range(1, params.g + 1)] + [y(j) for j in range(1, params.b)]
    return st.builds(Letter, st.sampled_from(gens), st.sampled_from((1, -1)))


def words_for(params: SurfaceParams, max_size: int = 30):
    return st.lists(letters_for(params), max_size=max_size).map(lambda ls: Word(tuple(ls)))


@st.composite
def params_and_word(draw, max_size: int = 30):
    params = draw(surface_params)
    return params, draw(words_for(params, max_size))


@st.composite
def params_and_member(draw, max_factors: int = 6):
    """A Gamma element built as a random product of conjugated relators."""
    params = draw(surface_params)
    seed = draw(st.integers(0, 2**32 - 1))
    return params, random_gamma_element(params, random.Random(seed), max_factors)
