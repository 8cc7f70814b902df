"""Seeded invariant suites over the dynamic and structural layers.

Each suite draws reproducible random instances and returns one record per
law: {"axiom": name, "samples": count, "failures": [counterexample word
dicts]}.  Bounded one-sided searches additionally carry "inconclusive", the
number of instances the search budget could not settle; those are reported,
never counted as failures.  Identical (graph, seed, samples, max_len) input
yields identical reports.
"""

from __future__ import annotations

import itertools

from .conjugacy import cyclic_reduce, is_cyclically_reduced
from .dynamics import (
    WContext,
    decompose_axis,
    dir_join,
    equiv,
    fold_phi,
    in_axis,
    in_axis_slice,
    preceq,
    psi_fold,
    qdir,
    sim,
)
from .elements import GroupElement, identity, render
from .errors import InvariantViolationError
from .order import (
    ball,
    check_agroup_axioms,
    check_median_axioms,
    interval,
    is_orthogonal,
    join,
    median,
    meet,
    oracle_qdir,
)
from .presentation import CommutationGraph
from .sampling import random_codes, stream
from .structure import centralizer, in_centralizer, prim_decompose

_ATTEMPT_FACTOR = 10_000


def _fail(**words) -> dict:
    return {name: render(x) for name, x in words.items()}


def _draw(rng, g: CommutationGraph, max_len: int, min_len: int = 0) -> GroupElement:
    return GroupElement(g, random_codes(rng, g, max_len, min_len))


def check_cyclic(
    g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8
) -> list[dict]:
    """Cyclic reduction and power laws."""
    rng = stream(seed, "cyclic")

    meet_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, max_len)
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        if meet(w**n, w**-m) != meet(w, ~w):
            meet_fail.append(_fail(w=w))

    red_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, max_len)
        n = rng.choice([-3, -2, -1, 1, 2, 3])
        if is_cyclically_reduced(w**n) != is_cyclically_reduced(w):
            red_fail.append(_fail(w=w))

    torsion_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, max_len, min_len=1)
        n = rng.randint(2, 4)
        if (w**n).is_identity():
            torsion_fail.append(_fail(w=w))

    len_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, max_len)
        r = cyclic_reduce(w)
        n = rng.randint(1, 5)
        if len(w**n) != 2 * len(r.conjugator) + n * len(r.core):
            len_fail.append(_fail(w=w))

    return [
        {"axiom": "power-meet-stability", "samples": samples, "failures": meet_fail},
        {"axiom": "cyclic-reduced-powers", "samples": samples, "failures": red_fail},
        {"axiom": "torsion-free-powers", "samples": samples, "failures": torsion_fail},
        {"axiom": "power-length-formula", "samples": samples, "failures": len_fail},
    ]


def _directed_pair(rng, g, max_len):
    """(w-context, lower, upper) with lower below upper in the w-preorder.

    The direction operation lands in the part of the cell above both inputs,
    so its value is an upper bound for either argument.
    """
    w = _draw(rng, g, min(max_len, 3))
    ctx = WContext(w)
    a = _draw(rng, g, min(max_len, 4))
    b = _draw(rng, g, min(max_len, 4))
    return ctx, a, qdir(ctx, a, b)


def check_preorder(
    g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8
) -> list[dict]:
    """The relation x below y when y sits between x and its w-translate."""
    rng = stream(seed, "preorder")

    refl_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 4))
        x = _draw(rng, g, max_len)
        if not preceq(w, x, x):
            refl_fail.append(_fail(w=w, x=x))

    trans_fail: list[dict] = []
    for _ in range(samples):
        ctx, a, u = _directed_pair(rng, g, max_len)
        v = qdir(ctx, u, _draw(rng, g, min(max_len, 4)))
        if not (preceq(ctx, a, u) and preceq(ctx, u, v) and preceq(ctx, a, v)):
            trans_fail.append(_fail(w=ctx.w, x=a, y=u, z=v))

    hered_fail: list[dict] = []
    for _ in range(samples):
        ctx, a, u = _directed_pair(rng, g, max_len)
        z = median(a, u, _draw(rng, g, max_len))
        if not (preceq(ctx, a, z) and preceq(ctx, z, u)):
            hered_fail.append(_fail(w=ctx.w, x=a, y=u, z=z))

    cong_fail: list[dict] = []
    for _ in range(samples):
        ctx, y, x = _directed_pair(rng, g, max_len)
        a = _draw(rng, g, max_len)
        b = _draw(rng, g, max_len)
        if not preceq(ctx, median(a, b, y), median(a, b, x)):
            cong_fail.append(_fail(w=ctx.w, x=x, y=y, a=a, b=b))

    transl_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 4))
        x = _draw(rng, g, min(max_len, 5))
        y = _draw(rng, g, min(max_len, 5))
        t = _draw(rng, g, min(max_len, 4))
        moved = preceq(~t * w * t, ~t * x, ~t * y)
        if preceq(w, x, y) != moved:
            transl_fail.append(_fail(w=w, x=x, y=y, t=t))

    cell_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 3))
        x = _draw(rng, g, min(max_len, 4))
        y = _draw(rng, g, min(max_len, 4))
        cells_equal = interval(x, w * y).elements == interval(y, w * x).elements
        if sim(w, x, y) != cells_equal:
            cell_fail.append(_fail(w=w, x=x, y=y))

    return [
        {"axiom": "preorder-reflexive", "samples": samples, "failures": refl_fail},
        {"axiom": "preorder-transitive", "samples": samples, "failures": trans_fail},
        {"axiom": "interval-heredity", "samples": samples, "failures": hered_fail},
        {
            "axiom": "median-translation-congruence",
            "samples": samples,
            "failures": cong_fail,
        },
        {
            "axiom": "translation-equivariance",
            "samples": samples,
            "failures": transl_fail,
        },
        {"axiom": "equivalence-cell-form", "samples": samples, "failures": cell_fail},
    ]


def check_folding(
    g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8
) -> list[dict]:
    """The median projection onto the set of points with a reduced conjugate."""
    rng = stream(seed, "folding")

    idem_fail: list[dict] = []
    gate_fail: list[dict] = []
    fixed_fail: list[dict] = []
    conj_fail: list[dict] = []
    power_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5))
        ctx = WContext(w)
        x = _draw(rng, g, max_len)
        fx = fold_phi(ctx, x)
        if fold_phi(ctx, fx) != fx or not in_axis(ctx, fx):
            idem_fail.append(_fail(w=w, x=x))
        c = fold_phi(ctx, _draw(rng, g, max_len))
        if median(x, fx, c) != fx:
            gate_fail.append(_fail(w=w, x=x, c=c))
        if in_axis(ctx, x) != (fx == x):
            fixed_fail.append(_fail(w=w, x=x))
        if fx != x * cyclic_reduce(~x * w * x).conjugator:
            conj_fail.append(_fail(w=w, x=x))
        n = rng.choice([-2, -1, 2, 3])
        if not w.is_identity() and fold_phi(w**n, x) != fx:
            power_fail.append(_fail(w=w, x=x))

    anti_fail: list[dict] = []
    step_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5))
        ctx = WContext(w)
        rev = WContext(~w)
        x = fold_phi(ctx, _draw(rng, g, max_len))
        y = fold_phi(ctx, _draw(rng, g, max_len))
        if preceq(ctx, x, y) != preceq(rev, y, x):
            anti_fail.append(_fail(w=w, x=x, y=y))
        if not preceq(ctx, x, w * x):
            step_fail.append(_fail(w=w, x=x))

    slice_fail: list[dict] = []
    dec_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5), min_len=1)
        ctx = WContext(w)
        a = fold_phi(ctx, _draw(rng, g, min(max_len, 5)))
        x = _draw(rng, g, min(max_len, 6))
        z = psi_fold(ctx, a, x)
        if not in_axis_slice(ctx, a, z) or psi_fold(ctx, a, z) != z:
            slice_fail.append(_fail(w=w, a=a, x=x))
        ax = fold_phi(ctx, x)
        y, z2 = decompose_axis(ctx, a, ax)
        if y * ~a * z2 != ax or z2 * ~a * y != ax:
            dec_fail.append(_fail(w=w, a=a, x=ax))

    return [
        {"axiom": "fold-idempotent-into-axis", "samples": samples, "failures": idem_fail},
        {"axiom": "fold-is-cell-gate", "samples": samples, "failures": gate_fail},
        {"axiom": "axis-is-fixed-point-set", "samples": samples, "failures": fixed_fail},
        {"axiom": "fold-by-core-conjugator", "samples": samples, "failures": conj_fail},
        {"axiom": "fold-ignores-power", "samples": samples, "failures": power_fail},
        {"axiom": "axis-reversal-antitone", "samples": samples, "failures": anti_fail},
        {"axiom": "axis-step-increases", "samples": samples, "failures": step_fail},
        {"axiom": "slice-fold-lands-and-fixes", "samples": samples, "failures": slice_fail},
        {
            "axiom": "axis-decomposition-reconstructs",
            "samples": samples,
            "failures": dec_fail,
        },
    ]


def check_qdir(
    g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8
) -> list[dict]:
    """The direction operation against its enumerated-cell oracle and laws."""
    rng = stream(seed, "qdir")

    oracle_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 2))
        ctx = WContext(w)
        x = _draw(rng, g, min(max_len, 3))
        y = _draw(rng, g, min(max_len, 3))
        ref = oracle_qdir(x, y, lambda u, v: preceq(ctx, u, v))
        if qdir(ctx, x, y) != ref:
            oracle_fail.append(_fail(w=w, x=x, y=y))

    idem_fail: list[dict] = []
    exch_fail: list[dict] = []
    recov_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 3))
        ctx = WContext(w)
        x = _draw(rng, g, min(max_len, 4))
        y = _draw(rng, g, min(max_len, 4))
        z = _draw(rng, g, min(max_len, 4))
        if qdir(ctx, x, x) != x:
            idem_fail.append(_fail(w=w, x=x))
        if qdir(ctx, qdir(ctx, x, y), z) != qdir(ctx, qdir(ctx, x, z), y):
            exch_fail.append(_fail(w=w, x=x, y=y, z=z))
        if preceq(ctx, x, y) != (qdir(ctx, y, x) == y):
            recov_fail.append(_fail(w=w, x=x, y=y))

    cong_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 3))
        ctx = WContext(w)
        x = _draw(rng, g, min(max_len, 3))
        y = _draw(rng, g, min(max_len, 3))
        if equiv(ctx, x, y) != (qdir(ctx, x, y) == qdir(ctx, y, x)):
            cong_fail.append(_fail(w=w, x=x, y=y))

    both_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 3))
        ctx = WContext(w)
        rev = WContext(~w)
        x = _draw(rng, g, min(max_len, 4))
        y = _draw(rng, g, min(max_len, 4))
        lhs = median(qdir(ctx, x, y), qdir(rev, x, y), x)
        if lhs != median(x, y, fold_phi(ctx, x)):
            both_fail.append(_fail(w=w, x=x, y=y))

    djoin_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 3))
        ctx = WContext(w)
        a = fold_phi(ctx, _draw(rng, g, min(max_len, 4)))
        x = _draw(rng, g, min(max_len, 4))
        y = _draw(rng, g, min(max_len, 4))
        j = dir_join(ctx, a, x, y)
        if j != dir_join(ctx, a, y, x) or j != median(
            qdir(ctx, x, y), a, qdir(ctx, y, x)
        ):
            djoin_fail.append(_fail(w=w, a=a, x=x, y=y))

    return [
        {"axiom": "matches-enumerated-gate", "samples": samples, "failures": oracle_fail},
        {"axiom": "direction-idempotent", "samples": samples, "failures": idem_fail},
        {"axiom": "direction-exchange", "samples": samples, "failures": exch_fail},
        {"axiom": "direction-recovers-preorder", "samples": samples, "failures": recov_fail},
        {
            "axiom": "direction-balance-is-congruence",
            "samples": samples,
            "failures": cong_fail,
        },
        {
            "axiom": "two-directions-median-identity",
            "samples": samples,
            "failures": both_fail,
        },
        {"axiom": "directed-join-formula", "samples": samples, "failures": djoin_fail},
    ]


def _generated_within(graph, gens, radius):
    start = identity(graph)
    seen = {start}
    frontier = [start]
    steps = list(gens) + [~t for t in gens]
    while frontier:
        cur = frontier.pop()
        for s in steps:
            nxt = cur * s
            if len(nxt) <= radius and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def check_structure(
    g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8
) -> list[dict]:
    """Primitive decompositions and centralizers, with bounded completeness."""
    rng = stream(seed, "structure")

    round_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 10), min_len=1)
        d = prim_decompose(w)
        a = d.conjugator
        roots = [~a * p * a for p, _ in d.pairs]
        ok = d.whole() == w
        ok = ok and all(
            is_orthogonal(r1, r2) for r1, r2 in itertools.combinations(roots, 2)
        )
        ok = ok and [p.codes for p, _ in d.pairs] == sorted(p.codes for p, _ in d.pairs)
        if not ok:
            round_fail.append(_fail(w=w))

    equi_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 7), min_len=1)
        t = _draw(rng, g, min(max_len, 4))
        moved = {(p.codes, m) for p, m in prim_decompose(t * w * ~t).pairs}
        direct = {((t * p * ~t).codes, m) for p, m in prim_decompose(w).pairs}
        if moved != direct:
            equi_fail.append(_fail(w=w, t=t))

    sound_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, max_len)
        try:
            z = centralizer(w)
        except InvariantViolationError:
            sound_fail.append(_fail(w=w))
            continue
        for t in z.raag_generators + z.abelian_generators:
            if not in_centralizer(w, t):
                sound_fail.append(_fail(w=w, t=t))

    complete_fail: list[dict] = []
    inconclusive = 0
    ball3 = sorted(ball(g, 3), key=lambda t: (len(t), t.codes))
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 6), min_len=1)
        z = centralizer(w)
        gens = list(z.raag_generators) + list(z.abelian_generators)
        commuting = [x for x in ball3 if in_centralizer(w, x)]
        radius = max(len(x) for x in commuting) + 2
        reached = _generated_within(g, gens, radius)
        for x in commuting:
            if x not in reached:
                inconclusive += 1

    power_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5), min_len=1)
        m = rng.choice([2, 3])
        x = _draw(rng, g, min(max_len, 4))
        if in_centralizer(w**m, x) != in_centralizer(w, x):
            power_fail.append(_fail(w=w, x=x))

    axes_fail: list[dict] = []
    compose_fail: list[dict] = []
    pre_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 6), min_len=1)
        parts = [p for p, _ in prim_decompose(w).pairs]
        ctx = WContext(w)
        part_ctx = [WContext(p) for p in parts]
        x = _draw(rng, g, min(max_len, 5))
        if in_axis(ctx, x) != all(in_axis(c, x) for c in part_ctx):
            axes_fail.append(_fail(w=w, x=x))
        through = fold_phi(ctx, x)
        forward = x
        for c in part_ctx:
            forward = fold_phi(c, forward)
        backward = x
        for c in reversed(part_ctx):
            backward = fold_phi(c, backward)
        if through != forward or through != backward:
            compose_fail.append(_fail(w=w, x=x))
        y = _draw(rng, g, min(max_len, 5))
        if preceq(ctx, x, y) != all(preceq(c, x, y) for c in part_ctx):
            pre_fail.append(_fail(w=w, x=x, y=y))

    perp_fail: list[dict] = []
    found = 0
    attempts = 0
    attempts_cap = samples * _ATTEMPT_FACTOR
    one = identity(g)
    while found < samples:
        attempts += 1
        if attempts > attempts_cap:
            raise InvariantViolationError(
                "rejection sampling for orthogonal prefix pairs exhausted its budget"
            )
        w = _draw(rng, g, max_len)
        x = median(one, w, _draw(rng, g, max_len))
        y = median(one, w, _draw(rng, g, max_len))
        if not is_orthogonal(x, y):
            continue
        found += 1
        both = in_centralizer(w, x) and in_centralizer(w, y)
        if in_centralizer(w, x * y) != both:
            perp_fail.append(_fail(w=w, x=x, y=y))

    lattice_fail: list[dict] = []
    for _ in range(samples):
        x = _draw(rng, g, min(max_len, 7))
        picks = {one, x}
        for _ in range(5):
            picks.add(median(one, x, _draw(rng, g, max_len)))
        good = sorted(
            (y for y in picks if in_centralizer(x, y)),
            key=lambda t: (len(t), t.codes),
        )
        for y, z in itertools.combinations_with_replacement(good, 2):
            j = join(y, z)
            if j is None or not in_centralizer(x, j) or not in_centralizer(x, meet(y, z)):
                lattice_fail.append(_fail(x=x, y=y, z=z))
                break

    stab_fail: list[dict] = []
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5), min_len=1)
        z = centralizer(w)
        gens = list(z.raag_generators) + list(z.abelian_generators)
        t = one
        for _ in range(rng.randint(1, 3)):
            pick = rng.choice(gens)
            t = t * (pick if rng.random() < 0.5 else ~pick)
        ctx = WContext(w)
        x = _draw(rng, g, min(max_len, 5))
        if t * fold_phi(ctx, x) != fold_phi(ctx, t * x):
            stab_fail.append(_fail(w=w, t=t, x=x))

    witness_inconclusive = 0
    ball2 = sorted(ball(g, 2), key=lambda t: (len(t), t.codes))
    witness_tried = 0
    for _ in range(samples):
        w = _draw(rng, g, min(max_len, 5), min_len=1)
        t = _draw(rng, g, min(max_len, 4))
        if in_centralizer(w, t):
            continue
        witness_tried += 1
        ctx = WContext(w)
        if not any(t * fold_phi(ctx, x) != fold_phi(ctx, t * x) for x in ball2):
            witness_inconclusive += 1

    return [
        {"axiom": "decomposition-round-trip", "samples": samples, "failures": round_fail},
        {
            "axiom": "decomposition-conjugation-equivariant",
            "samples": samples,
            "failures": equi_fail,
        },
        {
            "axiom": "centralizer-generators-commute",
            "samples": samples,
            "failures": sound_fail,
        },
        {
            "axiom": "centralizer-reaches-commuting-ball",
            "samples": samples,
            "failures": complete_fail,
            "inconclusive": inconclusive,
        },
        {"axiom": "powers-share-centralizer", "samples": samples, "failures": power_fail},
        {
            "axiom": "axis-intersects-over-primitives",
            "samples": samples,
            "failures": axes_fail,
        },
        {
            "axiom": "folding-composes-over-primitives",
            "samples": samples,
            "failures": compose_fail,
        },
        {
            "axiom": "preorder-intersects-over-primitives",
            "samples": samples,
            "failures": pre_fail,
        },
        {
            "axiom": "orthogonal-prefix-product-law",
            "samples": samples,
            "failures": perp_fail,
        },
        {
            "axiom": "commuting-prefixes-sublattice",
            "samples": samples,
            "failures": lattice_fail,
        },
        {
            "axiom": "centralizer-stabilizes-folding",
            "samples": samples,
            "failures": stab_fail,
        },
        {
            "axiom": "noncommuting-translation-moves-folding",
            "samples": witness_tried,
            "failures": [],
            "inconclusive": witness_inconclusive,
        },
    ]


SUITES = {
    "median-axioms": check_median_axioms,
    "agroup-axioms": check_agroup_axioms,
    "cyclic": check_cyclic,
    "preorder": check_preorder,
    "folding": check_folding,
    "qdir": check_qdir,
    "structure": check_structure,
}

SUITE_ORDER = tuple(SUITES)


def run_suite(
    name: str,
    g: CommutationGraph,
    samples: int = 1000,
    seed: int = 0,
    max_len: int = 8,
) -> list[dict]:
    """One named suite's records, or every suite in declaration order for "all"."""
    if name == "all":
        out: list[dict] = []
        for suite in SUITE_ORDER:
            for record in SUITES[suite](g, samples=samples, seed=seed, max_len=max_len):
                record["suite"] = suite
                out.append(record)
        return out
    if name not in SUITES:
        raise ValueError(f"unknown check suite {name!r}")
    records = SUITES[name](g, samples=samples, seed=seed, max_len=max_len)
    for record in records:
        record["suite"] = name
    return records


def failure_count(report: list[dict]) -> int:
    return sum(len(record["failures"]) for record in report)
