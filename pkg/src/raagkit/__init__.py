"""raagkit: computational kernel for right-angled Artin groups.

Presentation by a commutation graph; canonical shortlex normal forms; the
length-induced prefix order with meets, medians and partial joins; cyclic
reduction and conjugacy with certificates; foldings onto axes and the
attached preorders and quasidirections; primitive decomposition and
centralizers. Brute-force oracles validate every algorithm at desk scale.
"""

from __future__ import annotations

from .errors import (
    GraphMismatchError,
    InvariantViolationError,
    ParseError,
    RaagError,
    ResourceCapError,
)
from .presentation import (
    CommutationGraph,
    SignedLetter,
    Word,
    letter_order,
    load_graph,
    parse_graph,
    parse_word,
    render_word,
)
from .elements import (
    GroupElement,
    element,
    equal,
    first_letters,
    identity,
    invert,
    multiply,
    normalize,
    power,
    render,
    support,
)
from .order import (
    Interval,
    ball,
    boundary,
    check_agroup_axioms,
    check_median_axioms,
    interval,
    is_orthogonal,
    is_orthogonal_definitional,
    is_prefix,
    join,
    median,
    meet,
    oracle_qdir,
)
from .conjugacy import (
    CyclicReduction,
    are_conjugate,
    conjugacy_witness,
    cyclic_reduce,
    cyclically_reduced_conjugates,
    is_cyclically_reduced,
    max_root,
    mth_root,
)
from .dynamics import (
    WContext,
    decompose_axis,
    dir_join,
    equiv,
    fold_phi,
    in_axis,
    in_axis_slice,
    ll,
    preceq,
    psi_fold,
    qdir,
    sim,
)
from .structure import (
    CentralizerPresentation,
    PrimitiveDecomposition,
    center,
    centralizer,
    h_basis,
    in_centralizer,
    is_primitive,
    prim_decompose,
    s_perp_set,
)
from .checks import SUITES, failure_count, run_suite

__version__ = "0.1.0"
