"""
Tests for presentations, reduction modulo generator orders, the mod-square
identities and Reidemeister-Schreier rewriting.
"""
from collections import Counter

import pytest
from hypothesis import given

from conftest import params_and_word
from errors import PreconditionError, PresentationError
from presentations import (
    MOD_SQUARE_IDENTITIES,
    CosetTable,
    Presentation,
    SchreierRewriter,
    default_namer,
    free_pi_presentation,
    parity_coset_table,
    pi_presentation,
    plus_namer,
    reduce_mod_orders,
    reidemeister_schreier,
    schreier_rewrite,
    surface_orders,
    trivial_coset_table,
    verify_mod_square_identities,
)
from suite import expected_plus_relators
from surface import SurfaceParams, in_plus, schreier_rewrite_plus
from words import EMPTY, Generator, Word, concat, conjugate, format_word, free_reduce, invert, parse_word, power, x


def test_reduce_mod_orders_examples():
    params = SurfaceParams(3, 4)
    orders = surface_orders(params)
    assert reduce_mod_orders(parse_word("x1^-1"), orders) == parse_word("x1")
    assert reduce_mod_orders(parse_word("y3 x2 y1"), orders) == parse_word("x2")
    left = power(parse_word("x1 x2 x3"), 2)
    right = parse_word("x1 x2 x3 x2 x2^-1 x1^-1 x2^-1 x3^-1")
    assert reduce_mod_orders(concat(left, invert(right)), orders) == EMPTY


def test_reduce_mod_orders_general_orders():
    a = Generator("a", 1)
    word = Word.of((a, 5))
    assert reduce_mod_orders(word, {a: 3}) == Word.of((a, 2))
    assert reduce_mod_orders(word, {}) == word
    assert reduce_mod_orders(Word.of((a, 2), (x(1), 1), (x(1), -1), (a, 1)), {a: 3}) == EMPTY


@given(params_and_word())
def test_reduce_mod_orders_is_canonical(pw):
    params, word = pw
    orders = surface_orders(params)
    once = reduce_mod_orders(word, orders)
    assert reduce_mod_orders(once, orders) == once
    assert all(letter.generator.kind == "x" and letter.exponent == 1 for letter in once)
    assert all(a.generator != b.generator for a, b in zip(once, once[1:]))


def test_identities_at_genus_five():
    report = verify_mod_square_identities(5)
    assert report.passed, report.failures
    assert report.checked > 2 * len(MOD_SQUARE_IDENTITIES) * 60


def test_identities_needs_four_indices():
    with pytest.raises(PreconditionError):
        verify_mod_square_identities(2)


def test_identities_spot_check():
    orders = {x(i): 2 for i in range(1, 4)}
    _, build = MOD_SQUARE_IDENTITIES["[xixj,xkxj] = (xixjxk)^2"]
    left, right = build(1, 2, 3)
    assert reduce_mod_orders(concat(left, invert(right)), orders) == EMPTY


@pytest.mark.parametrize("g, b, count", [(3, 1, 4), (4, 2, 9), (1, 1, 1)])
def test_pi_presentation_sizes(g, b, count):
    pres = pi_presentation(SurfaceParams(g, b))
    assert len(pres.relators) == count
    assert len(pres.generators) == g + b - 1


def test_presentation_rejects_undeclared_generators():
    with pytest.raises(PresentationError):
        Presentation((x(1),), (parse_word("x1 x2"),))
    with pytest.raises(PresentationError):
        Presentation((x(1), x(1)))


def test_parity_table():
    params = SurfaceParams(3, 2)
    table = parity_coset_table(free_pi_presentation(params), params)
    assert table.index == 2
    assert table.step(0, parse_word("x3")[0]) == 1
    assert table.step(1, parse_word("y1")[0]) == 1
    assert table.trace(parse_word("x1 x2 y1")) == 0


def test_parity_table_rejects_other_alphabets():
    params = SurfaceParams(3, 2)
    with pytest.raises(PresentationError):
        parity_coset_table(Presentation((Generator("A", 1),)), params)


@pytest.mark.parametrize("transversal, action", [
    ((parse_word("x1"),), {x(1): (0,)}),
    ((EMPTY, parse_word("x1")), {x(1): (1, 1)}),
    ((EMPTY, parse_word("x2")), {x(1): (1, 0)}),
])
def test_coset_table_validation(transversal, action):
    with pytest.raises(PresentationError):
        CosetTable(transversal, action)


def test_free_group_parity_subgroup_generators():
    params = SurfaceParams(5, 3)
    pres = free_pi_presentation(params)
    sub = reidemeister_schreier(pres, parity_coset_table(pres, params), plus_namer(params))
    names = sorted(map(str, sub.generators))
    assert names == sorted([f"A{i}" for i in range(1, 5)] + [f"B{j}" for j in range(1, 6)]
                           + ["y1", "y2", "C1", "C2"])
    assert sub.relators == ()
    assert format_word(sub.expansions[Generator("C", 2)]) == "x5 y2 x5^-1"


def test_pi_parity_subgroup_relators():
    params = SurfaceParams(5, 3)
    pres = pi_presentation(params)
    sub = reidemeister_schreier(pres, parity_coset_table(pres, params), plus_namer(params))
    assert Counter(sub.relators) == Counter(expected_plus_relators(params))
    assert Word.of(Generator("B", 5)) in sub.relators
    assert Word.of(Generator("A", 1), Generator("B", 1)) in sub.relators


def test_trivial_table_returns_input():
    params = SurfaceParams(4, 2)
    pres = pi_presentation(params)
    same = reidemeister_schreier(pres, trivial_coset_table(pres))
    assert same.generators == pres.generators
    assert list(same.relators) == [free_reduce(r) for r in pres.relators]


def test_default_namer_counts():
    name = default_namer()
    assert name(parse_word("x1")) == x(1)
    assert name(parse_word("x1 x2")) == Generator("s", 1)
    assert name(parse_word("x2^-1")) == Generator("s", 2)


def test_schreier_rewrite_rejects_outsiders():
    params = SurfaceParams(3, 2)
    pres = free_pi_presentation(params)
    with pytest.raises(PresentationError):
        schreier_rewrite(parse_word("x1"), pres, parity_coset_table(pres, params))


@given(params_and_word())
def test_generic_rewrite_matches_plus_rewrite(pw):
    params, word = pw
    if not in_plus(word, params):
        word = concat(word, parse_word("x1"))
    pres = free_pi_presentation(params)
    generic = schreier_rewrite(word, pres, parity_coset_table(pres, params), plus_namer(params))
    assert generic == schreier_rewrite_plus(word, params)


@pytest.mark.parametrize("g, b", [(3, 1), (4, 2), (5, 3)])
@pytest.mark.parametrize("build", [free_pi_presentation, pi_presentation])
def test_subgroup_generators_return_to_base_coset(build, g, b):
    params = SurfaceParams(g, b)
    pres = build(params)
    table = parity_coset_table(pres, params)
    sub = reidemeister_schreier(pres, table, plus_namer(params))
    for symbol, expansion in sub.expansions.items():
        assert table.trace(expansion) == 0, symbol
        assert in_plus(expansion, params), symbol


@pytest.mark.parametrize("g, b", [(3, 1), (4, 2), (5, 3)])
def test_rewritten_relators_expand_to_conjugated_relators(g, b):
    params = SurfaceParams(g, b)
    pres = pi_presentation(params)
    table = parity_coset_table(pres, params)
    sub = reidemeister_schreier(pres, table, plus_namer(params))
    rewriter = SchreierRewriter(pres, table, plus_namer(params))
    conjugates = {free_reduce(conjugate(u, r)) for u in table.transversal for r in pres.relators}
    for relator in sub.relators:
        assert free_reduce(rewriter.expand(relator)) in conjugates, format_word(relator)


def test_expand_inverts_rewrite():
    params = SurfaceParams(4, 2)
    pres = free_pi_presentation(params)
    table = parity_coset_table(pres, params)
    rewriter = SchreierRewriter(pres, table, plus_namer(params))
    word = parse_word("x1 y1 x4^-1 x2 x3 x1")
    assert table.trace(word) == 0
    assert free_reduce(rewriter.expand(rewriter.rewrite(word))) == free_reduce(word)
    assert rewriter.expand(EMPTY) == EMPTY
