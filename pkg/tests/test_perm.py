import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import closure, perm_tuple, subgroup
from selfsim_lie.errors import LevelTooLarge
from selfsim_lie.perm import (
    Permutation,
    bsgs_build,
    is_subgroup,
    member,
    normal_closure,
    point_of,
    project,
    word_of,
)
from selfsim_lie.tree import C, IDENTITY, MU, TAU, TreeElement, apply, multiply, random_word

words = st.text(alphabet="tTmM", max_size=14).map(TreeElement.from_word)


def G(k):
    return bsgs_build([project(TAU, k), project(MU, k)])


def test_project_examples():
    assert project(TAU, 2).images.tolist() == [1, 2, 3, 0]
    for k in (1, 4):
        assert project(IDENTITY, k).is_identity()
    assert project(C, 1).is_identity()


def test_project_matches_action_oracle():
    rng = random.Random(3)
    for _ in range(50):
        g = random_word(rng, 12)
        k = rng.randint(1, 6)
        assert tuple(project(g, k).images.tolist()) == perm_tuple(g.word, k)


def test_level_limits():
    with pytest.raises(LevelTooLarge):
        project(TAU, 17)
    with pytest.raises(LevelTooLarge):
        project(TAU, 0)


def test_bsgs_examples():
    # tau and mu induce the same permutation on level 2: a 4-cycle
    b = bsgs_build([project(TAU, 2), project(MU, 2)])
    assert b.order == len(closure([perm_tuple("t", 2), perm_tuple("m", 2)], 4)) == 4
    assert bsgs_build([], 3).order == 1
    assert bsgs_build([project(TAU, 1)]).order == 2


def test_member_examples():
    assert member(G(3), project(C, 3))
    assert not member(bsgs_build([], 3), project(TAU, 3))
    cyc = bsgs_build([project(TAU, 3)])
    assert cyc.order == 8
    assert not member(cyc, project(MU, 3))


def test_normal_closure_examples():
    g = G(3)
    assert normal_closure(g, g.generators).order == g.order
    assert normal_closure(g, []).order == 1
    n = normal_closure(g, [project(C, 3)])
    # index from the element-set oracle
    gens = [perm_tuple("t", 3), perm_tuple("m", 3)]
    whole = closure(gens, 8)
    normal = subgroup([perm_tuple(C.word, 3)], 8, gens)
    assert g.order // n.order == len(whole) // len(normal) == 8


@pytest.mark.parametrize("k", range(1, 7))
def test_order_matches_sympy(k):
    from sympy.combinatorics import Permutation as SPerm
    from sympy.combinatorics import PermutationGroup

    gens = [SPerm(list(perm_tuple(w, k))) for w in ("t", "m")]
    assert G(k).order == PermutationGroup(gens).order()


def test_quotient_orders():
    assert [G(k).log2order for k in range(1, 8)] == [1, 2, 4, 7, 13, 24, 46]


@given(words, words, st.integers(1, 7))
def test_project_is_homomorphism(g, h, k):
    assert project(multiply(g, h), k) == project(g, k) * project(h, k)


@given(words, st.integers(1, 7))
def test_level_compatibility(g, k):
    assert project(g, k + 1).restrict(k) == project(g, k)


@given(st.lists(words, max_size=3), st.integers(1, 6))
def test_order_is_power_of_two(gens, k):
    b = bsgs_build([project(g, k) for g in gens], k)
    assert b.order & (b.order - 1) == 0
    assert b.log2order <= (1 << k) - 1
    assert all(b.contains(p) for p in b.strong_generators)
    assert sum(s == 2 for s in b.basic_orbit_sizes()) == b.log2order


def test_member_agrees_with_enumeration():
    rng = random.Random(5)
    for _ in range(40):
        k = rng.randint(2, 5)
        gen_words = [random_word(rng, 8).word for _ in range(rng.randint(1, 3))]
        b = bsgs_build([project(TreeElement.from_word(w), k) for w in gen_words], k)
        if b.log2order > 10:
            continue
        elements = closure([perm_tuple(w, k) for w in gen_words], 1 << k)
        assert len(elements) == b.order
        for _ in range(30):
            x = perm_tuple(random_word(rng, 10).word, k)
            assert b.contains(Permutation(np.array(x, dtype=np.int32), k)) == (x in elements)


def test_subgroup_relation():
    g = G(5)
    h = normal_closure(g, [project(C, 5)])
    assert is_subgroup(h, g) and not is_subgroup(g, h)


def test_point_encoding():
    assert point_of("10") == 1 and point_of("01") == 2
    assert word_of(6, 3) == "011"
    for i in range(8):
        w = word_of(i, 3)
        assert project(TAU, 3).images[i] == point_of(apply(TAU, w))


def test_describe_and_transversal():
    g = G(3)
    assert "level 3" in g.describe()
    assert len(g.transversal(0, 0)) == 2
    assert g.base == [0, 0, 1, 0, 1, 2, 3]
