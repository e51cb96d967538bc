import itertools
import random

import pytest

from treepoly.alphamaps import (
    EnumerationGuardError,
    admissible_maps,
    anchored_bare,
    bare_leg_count,
    check_forest_multi_marking,
    check_forest_pairing,
    check_leaf_spider_pairing,
    check_marking_bijection,
    check_negative_spider_pairing,
    check_no_singleton_when_deficient,
    check_spider_shadow_formula,
    classify_spider,
    count_admissible,
    extend_zero,
    has_isolated_clan_vertex,
    in_marked_family,
    in_vacated_class,
    mark_legs,
    mask_outside,
    restrict,
    sample_admissible,
    spider_suite,
    spider_view,
    split_by_clan_component,
    unmark_legs,
    vacated_signature,
)
from treepoly.graphs import clan_graph, connected_components, path_graph, spider2
from treepoly.shadow import ForestShadow, is_admissible
from treepoly.symfunc import chromatic_multicolor_2var, y_g_2var

from conftest import random_tree


def test_restrict_extend_roundtrip():
    w = (1, 2, 0, 1, 0)
    verts = (1, 3, 4)
    sub = restrict(w, verts)
    assert sub == (2, 1, 0)
    back = extend_zero(sub, verts, 5)
    assert back == (0, 2, 0, 1, 0)
    assert back == mask_outside(w, verts)
    assert extend_zero((), (), 3) == (0, 0, 0)


def test_admissible_k2_and_k1():
    k2 = path_graph(2)
    assert set(admissible_maps(k2)) == {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2), (1, 1)}
    k1 = path_graph(1)
    assert list(admissible_maps(k1)) == [(0,), (1,), (2,)]
    assert list(admissible_maps(path_graph(0))) == [()]


def test_admissible_stream_properties(rng):
    for _ in range(10):
        t = random_tree(rng, rng.randint(1, 9))
        maps = list(admissible_maps(t))
        assert len(maps) == len(set(maps)) == count_admissible(t)
        assert maps == sorted(maps)  # canonical depth-first order
        brute = [
            w
            for w in itertools.product((0, 1, 2), repeat=t.n)
            if is_admissible(t, w)
        ]
        assert set(maps) == set(brute)


def test_admissible_guard():
    with pytest.raises(EnumerationGuardError):
        list(admissible_maps(path_graph(20), guard=10))


def test_every_omitted_map_has_zero_shadow(rng):
    # the admissible stream is exactly the support of the shadow sum
    t = random_tree(rng, 6)
    admissible = set(admissible_maps(t))
    for w in itertools.product((0, 1, 2), repeat=t.n):
        if w not in admissible:
            assert chromatic_multicolor_2var(t, w).is_zero


def test_weight_sum_matches_product(rng):
    for _ in range(8):
        t = random_tree(rng, rng.randint(1, 9))
        total = None
        for w in admissible_maps(t):
            part = chromatic_multicolor_2var(t, w)
            total = part if total is None else total + part
        assert total == y_g_2var(t)


def test_sampling_is_admissible_and_seeded(rng):
    t = random_tree(rng, 12)
    r1 = random.Random(7)
    r2 = random.Random(7)
    seq1 = [sample_admissible(t, r1) for _ in range(50)]
    seq2 = [sample_admissible(t, r2) for _ in range(50)]
    assert seq1 == seq2
    assert all(is_admissible(t, w) for w in seq1)


def test_bare_and_anchored():
    sp = spider_view(3)
    w = (1, 1, 1, 0, 0, 0, 2)
    assert bare_leg_count(w, sp) == 2
    assert anchored_bare(w, sp) == 2
    assert anchored_bare((0,) * 7, sp) is None
    assert anchored_bare((1, 2, 0, 0, 0, 0, 0), sp) is None
    assert bare_leg_count((0,) * 7, sp) == 0


def test_vacated_signature():
    sp = spider_view(2)
    assert vacated_signature((0, 2, 1, 0, 0), sp) == ((1,), 2)
    assert in_vacated_class((0, 2, 1, 0, 0), sp, (1,), 2)
    assert in_marked_family((0, 2, 1, 0, 0), sp, (1,))
    assert vacated_signature((1, 1, 1, 0, 0), sp) is None
    assert vacated_signature((0, 2, 1, 1, 0), sp) is None  # leg total above 2
    assert vacated_signature((0, 0, 0, 0, 0), sp) == ((), 0)


def test_mark_unmark_roundtrip_exhaustive():
    for n in range(1, 5):
        sp = spider_view(n)
        leg_options = ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1))
        for legs in itertools.product(leg_options, repeat=n):
            w = (1,) + tuple(h for h, _ in legs) + tuple(f for _, f in legs)
            k = anchored_bare(w, sp)
            for size in range(k + 1):
                for marks in itertools.combinations(range(1, k + 1), size):
                    image = mark_legs(w, sp, marks)
                    assert unmark_legs(image, sp) == w
                    assert vacated_signature(image, sp) == (marks, k)


def test_mark_rejects_bad_input():
    sp = spider_view(2)
    with pytest.raises(ValueError):
        mark_legs((0, 1, 1, 0, 0), sp, (1,))  # not anchored
    with pytest.raises(ValueError):
        mark_legs((1, 1, 1, 0, 0), sp, (3,))  # not enough bare legs


def test_classify_spider():
    n = 3
    g = spider2(n)
    ctx = ForestShadow(g)
    sp = spider_view(n)
    negative = (1, 1, 1, 1, 0, 0, 0)
    cls = classify_spider(negative, sp, ctx)
    assert cls.kind == "negative" and cls.family_index is None
    marked = mark_legs(negative, sp, (1,))
    cls = classify_spider(marked, sp, ctx)
    assert cls.kind == "marked" and cls.marks == (1,) and cls.family_index == 1
    zero = (0,) * g.n
    cls = classify_spider(zero, sp, ctx)
    assert cls.kind == "marked" and cls.marks == () and cls.settled
    assert cls.family_index == 0
    anchored = (1, 1, 1, 1, 1, 1, 1)
    cls = classify_spider(anchored, sp, ctx)
    assert cls.kind == "residual" and cls.family_index == 0


def test_classify_exclusive_families():
    # one map can never sit in two marked families
    for n in range(1, 5):
        g = spider2(n)
        sp = spider_view(n)
        for w in admissible_maps(g):
            sig = vacated_signature(w, sp)
            if sig is None:
                continue
            marks, t = sig
            for other in range(1, n + 1):
                if (other,) != marks:
                    assert not in_marked_family(w, sp, (other,)) or marks == (other,)


def test_isolated_clan_vertices():
    g = spider2(2)
    assert has_isolated_clan_vertex(g, (0, 1, 0, 0, 0))
    assert not has_isolated_clan_vertex(g, (0, 2, 0, 0, 0))
    assert not has_isolated_clan_vertex(g, (1, 1, 0, 0, 0))
    assert not has_isolated_clan_vertex(g, (0, 0, 0, 0, 0))


def test_split_by_clan_component(rng):
    for _ in range(10):
        t = random_tree(rng, rng.randint(2, 9))
        ctx = ForestShadow(t)
        for w in admissible_maps(t):
            clan = clan_graph(t, w)
            for comp in connected_components(clan):
                split = split_by_clan_component(t, w, comp)
                assert set(split.core) | set(split.rest) == set(range(t.n))
                assert not set(split.core) & set(split.rest)
                # the shadow factors across the split
                wc = mask_outside(w, split.core)
                wr = mask_outside(w, split.rest)
                assert chromatic_multicolor_2var(t, w) == chromatic_multicolor_2var(
                    t, wc
                ) * chromatic_multicolor_2var(t, wr)


def test_split_factorization_with_agreeing_rest(rng):
    # any map agreeing with the original outside the core factors through the
    # original rest shadow
    for _ in range(6):
        t = random_tree(rng, rng.randint(2, 7))
        for w in admissible_maps(t):
            clan = clan_graph(t, w)
            comps = connected_components(clan)
            if not comps:
                continue
            comp = comps[0]
            split = split_by_clan_component(t, w, comp)
            other = list(w)
            for v in split.core:
                other[v] = rng.randint(0, 2)
            other = tuple(other)
            lhs = chromatic_multicolor_2var(t, other)
            rhs = chromatic_multicolor_2var(t, mask_outside(other, split.core)) * (
                chromatic_multicolor_2var(t, mask_outside(w, split.rest))
            )
            assert lhs == rhs, (w, other, split)


def test_component_with_doubled_vertex_is_a_pair(rng):
    # a nonzero shadow forces every weight-2 vertex into its own pair block
    from treepoly.graphs import clan_owners

    for _ in range(6):
        t = random_tree(rng, rng.randint(1, 8))
        for w in admissible_maps(t):
            if chromatic_multicolor_2var(t, w).is_zero:
                continue
            clan = clan_graph(t, w)
            owners = clan_owners(t, w)
            for comp in connected_components(clan):
                if any(w[owners[cv]] == 2 for cv in comp):
                    assert len(comp) == 2


def test_spider_checks_all_pass():
    for rep in spider_suite(max_legs=4):
        assert rep.ok, (rep.lemma, rep.violations[:3])


def test_check_cases_nonempty():
    assert check_marking_bijection(3).cases == 216
    assert check_spider_shadow_formula(3).cases == 1
    assert check_negative_spider_pairing(4).cases == 13
    assert check_leaf_spider_pairing(2).cases > 0
    assert check_forest_pairing(2).cases == 9
    assert check_forest_multi_marking(3).cases == 84
    # spiders with at most two legs can never go negative
    assert check_no_singleton_when_deficient(max_legs=2, max_components=2).cases == 0
    assert check_no_singleton_when_deficient(max_legs=3, max_components=2).cases > 0
