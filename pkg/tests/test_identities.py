import pytest

from oracles import same_action
from selfsim_lie import identities
from selfsim_lie.identities import FAMILIES, apply_word, mu_commutator_rhs
from selfsim_lie.tree import MU, TAU, commutator, equals, power


@pytest.mark.parametrize("family", ["wreath_c", "mu_power_exact", "nabla_tau", "nabla_delta_tau", "mu_side"])
def test_family_holds_exactly(family):
    ids = FAMILIES[family]()
    assert ids
    failing = [i.name for i in ids if not i.holds()]
    assert failing == []


def test_printed_mu_power_form_is_not_exact():
    # holds only modulo higher degree; every n <= 4 fails as an equality
    assert [i.holds() for i in identities.mu_power()] == [False] * 4


def test_mu_power_sign_at_even_n():
    for n in (0, 2, 4):
        lhs = commutator(power(MU, 1 << n), TAU)
        g = apply_word("D" * n)
        assert equals(lhs, power(g, -1))


def test_family_sizes():
    assert len(identities.nabla_tau()) == 4  # n = 0..3
    assert len(identities.nabla_delta_tau()) == 3 * 7  # n <= 2, |W| <= 2
    assert len(identities.mu_power()) == 4


def test_identities_agree_with_action_oracle():
    # equality verdicts cross-checked on the first levels of the tree
    for idn in identities.nabla_tau(2) + identities.mu_side(1, 1):
        assert same_action(idn.lhs.word, idn.rhs.word, 7)


@pytest.mark.parametrize("word", ["", "N", "D", "ND", "DN", "NND"])
@pytest.mark.parametrize("sign", [1, -1])
def test_mu_commutator_rule(word, sign):
    lhs = commutator(apply_word(word), power(MU, sign))
    assert equals(lhs, mu_commutator_rhs(word, sign))


def test_bad_sign():
    with pytest.raises(ValueError):
        mu_commutator_rhs("", 2)
