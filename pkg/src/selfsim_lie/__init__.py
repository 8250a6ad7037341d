"""Exact computations in the group generated by the tree automorphisms tau
and mu: equality, the delta/nabla endomorphisms, finite quotients, their
2-dimension series and the closed-form restricted Lie algebra."""

from .errors import DomainError, ExprSyntaxError, LevelTooLarge
from .expr import element, evaluate, parse, unparse
from .lie import (
    BasisVector,
    LieGraph,
    basis_of_degree,
    degree,
    lie_graph,
    realize,
    theorem_ranks,
    to_dot,
)
from .perm import BSGS, Permutation, bsgs_build, member, normal_closure, project
from .portrait import BranchPortrait, EpsilonPortrait, branch_portrait, epsilon_portrait, reconstruct
from .power_series import IntSeries, closed_form_check, growth_bound, jennings_product, partitions
from .series import RankSequence, SeriesTerm, degree_in_quotient, jennings_series, ranks
from .tree import (
    C,
    IDENTITY,
    MU,
    TAU,
    TreeElement,
    WreathTriple,
    abelianization,
    apply,
    commutator,
    conjugate,
    delta,
    equals,
    inverse,
    multiply,
    nabla,
    power,
    right_embed,
    wreath,
)

__version__ = "0.1.0"
