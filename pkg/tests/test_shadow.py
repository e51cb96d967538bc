import pytest

from treepoly.graphs import complete_graph, spider2, t3mn
from treepoly.alphamaps import admissible_maps
from treepoly.shadow import (
    ForestShadow,
    add_expansions,
    expansion_from_signature,
    is_admissible,
    min_coefficient,
    poly_from_signature,
)
from treepoly.symfunc import chromatic_multicolor_2var, schur_expand

from conftest import random_tree


def test_engine_requires_bipartite():
    with pytest.raises(ValueError):
        ForestShadow(complete_graph(3))


def test_admissibility_predicate():
    g = spider2(1)
    assert is_admissible(g, (0, 0, 2))
    assert is_admissible(g, (2, 0, 1))
    assert is_admissible(g, (1, 1, 1))
    assert not is_admissible(g, (0, 1, 2))
    assert not is_admissible(g, (1, 2, 0))
    assert not is_admissible(g, (0, 3, 0))
    assert not is_admissible(g, (0, -1, 0))


def test_signature_matches_literal_shadow(rng):
    for _ in range(12):
        t = random_tree(rng, rng.randint(1, 8))
        ctx = ForestShadow(t)
        for w in admissible_maps(t):
            literal = schur_expand(chromatic_multicolor_2var(t, w)).coeffs
            assert dict(ctx.expansion(w)) == literal
            assert dict(ctx.poly(w)) == chromatic_multicolor_2var(t, w).terms


def test_signature_structure():
    g = t3mn(1, 1)
    ctx = ForestShadow(g)
    comps, twos = ctx.signature((0,) * g.n)
    assert comps == () and twos == 0
    all_one = (1,) * g.n
    comps, twos = ctx.signature(all_one)
    assert twos == 0 and len(comps) == 1
    p, q = comps[0]
    assert p + q == g.n and p >= q


def test_balanced_signatures_are_positive(rng):
    # every component with nearly equal parts gives a nonnegative expansion
    for _ in range(200):
        comps = []
        for _ in range(rng.randint(0, 4)):
            q = rng.randint(0, 5)
            comps.append((q + rng.randint(0, 1), q))
        comps = tuple(sorted((max(p, q), min(p, q)) for p, q in comps))
        twos = rng.randint(0, 3)
        exp = expansion_from_signature((comps, twos))
        assert min_coefficient(exp) >= 0, (comps, twos)


def test_caches_are_stable():
    sig = (((2, 1), (1, 1)), 1)
    first = expansion_from_signature(sig)
    again = expansion_from_signature(sig)
    assert first is again
    assert poly_from_signature(sig) is poly_from_signature(sig)


def test_add_expansions():
    a = {(2, 1): 1, (1, 1): -1}
    b = {(1, 1): 1}
    total = add_expansions(a, b)
    assert total == {(2, 1): 1}
    assert a == {(2, 1): 1, (1, 1): -1}
