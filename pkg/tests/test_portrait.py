import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from selfsim_lie.perm import project
from selfsim_lie.portrait import BranchPortrait, branch_portrait, epsilon_portrait, reconstruct, vertices
from selfsim_lie.tree import C, IDENTITY, MU, TAU, delta, equals, multiply, power, random_word


def test_epsilon_examples():
    p = epsilon_portrait(TAU, 3)
    assert {v for v, b in p.labels.items() if b} == {"", "1", "11"}
    assert set(p.labels) == set(vertices(3))
    assert not any(epsilon_portrait(IDENTITY, 4).labels.values())
    assert epsilon_portrait(C, 1).labels == {"": 0}


def test_branch_examples():
    p = branch_portrait(C, 1)
    assert (p.i, p.j, p.labels) == (0, 0, {"": 1}) and p.remainder_certified
    p = branch_portrait(TAU, 1)
    assert (p.i, p.j, p.labels) == (1, 0, {"": 0})
    p = branch_portrait(delta(C), 2)
    assert (p.i, p.j, p.labels) == (0, 0, {"": 0, "0": 1, "1": 0})
    assert equals(reconstruct(p), delta(C))


def test_json_round_trip():
    p = branch_portrait(multiply(C, delta(C)), 3)
    data = p.to_json()
    assert set(data) >= {"i", "j", "labels", "depth"}
    assert data["labels"][""] == 1
    assert BranchPortrait.from_json(data) == p


def test_depth_must_be_positive():
    with pytest.raises(ValueError):
        epsilon_portrait(TAU, 0)
    with pytest.raises(ValueError):
        branch_portrait(TAU, 0)


def test_reconstruction_property():
    rng = random.Random(11)
    for _ in range(300):
        g = random_word(rng, 10)
        depth = rng.randint(1, 4)
        p = branch_portrait(g, depth)
        assert p.remainder_certified
        r = reconstruct(p)
        d = depth + 2
        assert epsilon_portrait(r, d).labels == epsilon_portrait(g, d).labels
        assert project(r, d) == project(g, d)


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_portraits_on_simple_elements(a, b, k):
    g = multiply(multiply(power(TAU, a), power(MU, b)), power(C, k))
    p = branch_portrait(g, 2)
    assert (p.i, p.j, p.labels[""]) == (a, b, k)
    assert epsilon_portrait(reconstruct(p), 4).labels == epsilon_portrait(g, 4).labels


def test_identity_portraits_agree():
    p = branch_portrait(IDENTITY, 3)
    assert not any(p.labels.values()) and (p.i, p.j) == (0, 0)
    assert reconstruct(p) == IDENTITY
