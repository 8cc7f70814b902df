"""The order-theoretic layer.

The canonical length induces the prefix order x ⊂ y ⟺ l(x) + l(x⁻¹y) = l(y).
This module decides it and computes the derived structure: greatest common
prefixes (meet), medians, joins (partial), orthogonality, geodesic intervals
(cells), cell boundaries, metric balls, and the interval-based oracle for
quasidirections. It also hosts the randomized axiom checkers for the median
laws and for the order axioms every group of this class satisfies.

Tuple-level functions (suffix `_codes`) are the fast path shared by the rest
of the package; same-named wrappers operate on GroupElement.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .errors import InvariantViolationError, ResourceCapError
from .presentation import CommutationGraph
from .elements import (
    GroupElement,
    _require_same_graph,
    fl_set,
    inv_codes,
    mul_codes,
    render_codes,
    support_codes,
)
from .sampling import random_codes, stream

DEFAULT_INTERVAL_CAP = 20_000


# ---------------------------------------------------------------------------
# tuple-level order operations


def prefix_codes(graph: CommutationGraph, a, b) -> bool:
    """Whether a ⊂ b, i.e. l(a) + l(a⁻¹b) = l(b)."""
    la = len(a)
    lb = len(b)
    if la > lb:
        return False
    return la + len(mul_codes(graph, inv_codes(graph, a), b)) == lb


def meet_codes(graph: CommutationGraph, a, b) -> tuple[int, ...]:
    """Greatest common prefix, emitted directly in canonical form.

    Any common first letter s of a and b is a prefix of the meet, and the set
    of first letters of the meet is the intersection of the two first-letter
    sets; popping the least common first letter therefore builds the
    shortlex-least spelling of the meet letter by letter.
    """
    if not a or not b:
        return ()
    wa = list(a)
    wb = list(b)
    out: list[int] = []
    while True:
        fa = fl_set(graph, wa)
        if not fa:
            break
        common = fa & fl_set(graph, wb)
        if not common:
            break
        s = min(common)
        out.append(s)
        # The available occurrence of letter s is its first occurrence.
        wa.remove(s)
        wb.remove(s)
    return tuple(out)


def median_codes(graph: CommutationGraph, x, y, z) -> tuple[int, ...]:
    """The median, as z·((z⁻¹x) ∩ (z⁻¹y))."""
    iz = inv_codes(graph, z)
    m = meet_codes(graph, mul_codes(graph, iz, x), mul_codes(graph, iz, y))
    return mul_codes(graph, z, m)


def join_codes(graph: CommutationGraph, x, y) -> Optional[tuple[int, ...]]:
    """x ∪ y = x(x∩y)⁻¹y when both are prefixes of it; None when no join exists."""
    m = meet_codes(graph, x, y)
    j = mul_codes(graph, mul_codes(graph, x, inv_codes(graph, m)), y)
    if prefix_codes(graph, x, j) and prefix_codes(graph, y, j):
        return j
    return None


def orth_codes(graph: CommutationGraph, x, y) -> bool:
    """Orthogonality, by the support criterion: disjoint supports, every cross
    pair commuting. Validated against the definitional test in the suites."""
    sx = support_codes(x)
    sy = support_codes(y)
    if sx & sy:
        return False
    comm = graph.comm_mask
    ymask = 0
    for g in sy:
        ymask |= 1 << g
    return all((comm[g] & ymask) == ymask for g in sx)


def orth_codes_definitional(graph: CommutationGraph, x, y) -> bool:
    """The definition: x ∩ y = 1 and x ∪ y exists. Kept as the oracle."""
    if meet_codes(graph, x, y):
        return False
    return join_codes(graph, x, y) is not None


def interval_codes(graph: CommutationGraph, z, cap: int = DEFAULT_INTERVAL_CAP) -> list[tuple[int, ...]]:
    """All prefixes of z (the cell [1, z]) by breadth-first geodesic closure.

    Deterministic order: by length, then discovery. Raises when the cell
    exceeds the cap; never truncates.
    """
    z = tuple(z)
    start: tuple[int, ...] = ()
    seen: set[tuple[int, ...]] = {start}
    out: list[tuple[int, ...]] = [start]
    frontier: list[tuple[tuple[int, ...], tuple[int, ...]]] = [(start, z)]
    block = graph.block_mask
    while frontier:
        nxt: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
        for t, rest in frontier:
            seen_gens = 0
            for i, s in enumerate(rest):
                g = s >> 1
                if not (seen_gens & block[g]):
                    t2 = mul_codes(graph, t, (s,))
                    if t2 not in seen:
                        seen.add(t2)
                        if len(seen) > cap:
                            raise ResourceCapError("interval enumeration", cap)
                        out.append(t2)
                        nxt.append((t2, rest[:i] + rest[i + 1:]))
                seen_gens |= 1 << g
        frontier = nxt
    return out


def ball_codes(graph: CommutationGraph, r: int, cap: int = DEFAULT_INTERVAL_CAP) -> list[tuple[int, ...]]:
    """All canonical tuples of length ≤ r, in breadth-first deterministic order."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    nletters = 2 * graph.ngens
    seen: set[tuple[int, ...]] = {()}
    out: list[tuple[int, ...]] = [()]
    current: list[tuple[int, ...]] = [()]
    for _ in range(r):
        nxt: list[tuple[int, ...]] = []
        for t in current:
            for s in range(nletters):
                t2 = mul_codes(graph, t, (s,))
                if len(t2) == len(t) + 1 and t2 not in seen:
                    seen.add(t2)
                    if len(seen) > cap:
                        raise ResourceCapError("ball enumeration", cap)
                    out.append(t2)
                    nxt.append(t2)
        current = nxt
    return out


# ---------------------------------------------------------------------------
# public element-level operations


class Interval:
    """The finite cell [x, y]: all z with l(x⁻¹z) + l(z⁻¹y) = l(x⁻¹y)."""

    def __init__(self, x: GroupElement, y: GroupElement, elements: frozenset[GroupElement]):
        self.x = x
        self.y = y
        self.elements = elements

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, z: GroupElement) -> bool:
        return z in self.elements

    def __repr__(self) -> str:
        return f"Interval({self.x!r}, {self.y!r}, size={len(self.elements)})"


def is_prefix(x: GroupElement, y: GroupElement) -> bool:
    _require_same_graph(x, y)
    return prefix_codes(x.graph, x.codes, y.codes)


def meet(x: GroupElement, y: GroupElement) -> GroupElement:
    _require_same_graph(x, y)
    return GroupElement(x.graph, meet_codes(x.graph, x.codes, y.codes))


def median(x: GroupElement, y: GroupElement, z: GroupElement) -> GroupElement:
    _require_same_graph(x, y)
    _require_same_graph(x, z)
    return GroupElement(x.graph, median_codes(x.graph, x.codes, y.codes, z.codes))


def join(x: GroupElement, y: GroupElement) -> Optional[GroupElement]:
    _require_same_graph(x, y)
    j = join_codes(x.graph, x.codes, y.codes)
    return None if j is None else GroupElement(x.graph, j)


def is_orthogonal(x: GroupElement, y: GroupElement) -> bool:
    _require_same_graph(x, y)
    return orth_codes(x.graph, x.codes, y.codes)


def is_orthogonal_definitional(x: GroupElement, y: GroupElement) -> bool:
    _require_same_graph(x, y)
    return orth_codes_definitional(x.graph, x.codes, y.codes)


def interval(x: GroupElement, y: GroupElement, cap: int = DEFAULT_INTERVAL_CAP) -> Interval:
    _require_same_graph(x, y)
    graph = x.graph
    z = mul_codes(graph, inv_codes(graph, x.codes), y.codes)
    suffixes = interval_codes(graph, z, cap)
    elements = frozenset(GroupElement(graph, mul_codes(graph, x.codes, t)) for t in suffixes)
    return Interval(x, y, elements)


def boundary(c: Interval) -> set[GroupElement]:
    """The ends of a cell based at the identity: {a ⊂ v : a ⊥ a⁻¹v}."""
    if not c.x.is_identity():
        raise ValueError("boundary is defined for cells [1, v] based at the identity")
    graph = c.x.graph
    v = c.y.codes
    out: set[GroupElement] = set()
    for a in c.elements:
        rest = mul_codes(graph, inv_codes(graph, a.codes), v)
        if orth_codes(graph, a.codes, rest):
            out.add(a)
    return out


def ball(g: CommutationGraph, r: int, cap: int = DEFAULT_INTERVAL_CAP) -> set[GroupElement]:
    """All elements of canonical length at most r."""
    return {GroupElement(g, t) for t in ball_codes(g, r, cap)}


def oracle_qdir(
    a: GroupElement,
    b: GroupElement,
    pre: Callable[[GroupElement, GroupElement], bool],
    cap: int = DEFAULT_INTERVAL_CAP,
) -> GroupElement:
    """Interval-based oracle for the quasidirection induced by a preorder.

    Enumerates the cell [a, b], keeps the elements above both a and b under
    the supplied preorder (a nonempty sub-cell when the preorder is genuine),
    and folds them toward a with the internal direction (u, v) ↦ Y(u, a, v).
    The result is the a-side end of that sub-cell.
    """
    _require_same_graph(a, b)
    graph = a.graph
    cell = interval(a, b, cap)
    upper = [u for u in cell.elements if pre(a, u) and pre(b, u)]
    if not upper:
        raise InvariantViolationError(
            "no common upper bound inside the cell; the supplied preorder is not compatible"
        )
    upper.sort(key=lambda e: (len(e.codes), e.codes))
    acc = upper[0].codes
    for u in upper[1:]:
        acc = median_codes(graph, acc, a.codes, u.codes)
    return GroupElement(graph, acc)


# ---------------------------------------------------------------------------
# randomized axiom checkers


def _failure(graph: CommutationGraph, **words) -> dict:
    return {name: render_codes(graph, t) for name, t in words.items()}


def check_median_axioms(g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8) -> list[dict]:
    """Random instances of the three median laws; failures are counterexample words.

    One instance draws a triple and a quintuple and asserts symmetry,
    absorption, and selfdistributivity.
    """
    rng = stream(seed, "median-axioms")
    sym_fail: list[dict] = []
    abs_fail: list[dict] = []
    dist_fail: list[dict] = []
    for _ in range(samples):
        x = random_codes(rng, g, max_len)
        y = random_codes(rng, g, max_len)
        z = random_codes(rng, g, max_len)
        u = random_codes(rng, g, max_len)
        v = random_codes(rng, g, max_len)
        m = median_codes(g, x, y, z)
        if any(
            median_codes(g, p, q, r) != m
            for p, q, r in ((x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x))
        ):
            sym_fail.append(_failure(g, x=x, y=y, z=z))
        if median_codes(g, x, y, x) != x:
            abs_fail.append(_failure(g, x=x, y=y))
        lhs = median_codes(g, x, y, median_codes(g, z, u, v))
        rhs = median_codes(
            g,
            median_codes(g, x, y, z),
            median_codes(g, x, y, u),
            median_codes(g, x, y, v),
        )
        if lhs != rhs:
            dist_fail.append(_failure(g, x=x, y=y, z=z, u=u, v=v))
    return [
        {"axiom": "median-symmetry", "samples": samples, "failures": sym_fail},
        {"axiom": "median-absorption", "samples": samples, "failures": abs_fail},
        {"axiom": "median-selfdistributivity", "samples": samples, "failures": dist_fail},
    ]


def check_agroup_axioms(g: CommutationGraph, samples: int = 1000, seed: int = 0, max_len: int = 8) -> list[dict]:
    """Hypothesis-satisfying instances of the four order axioms of this group class.

    orthogonal-product-law: x ⊥ y ⟹ x ∪ y = xy = yx (orthogonality tested by
    definition here, not by the support fast path).
    inverse-prefix-transfer: x ∪ y ≠ ∞ and x⁻¹ ⊂ y⁻¹ ⟹ x ⊂ y.
    meet-triviality-transfer: x∩y = x⁻¹∩z = y⁻¹∩z = 1 ⟹ xz ∩ yz ⊂ z.
    no-inverse-join: x ∪ x⁻¹ ≠ ∞ ⟹ x = 1 (every sample checks the implication;
    the hypothesis forces x = 1, which is the axiom's content).
    """
    rng = stream(seed, "agroup-axioms")
    attempts_cap = samples * 10_000

    perp_fail: list[dict] = []
    found = 0
    attempts = 0
    while found < samples:
        attempts += 1
        if attempts > attempts_cap:
            raise InvariantViolationError("rejection sampling for orthogonal pairs exhausted its budget")
        x = random_codes(rng, g, max_len)
        y = random_codes(rng, g, max_len)
        if not orth_codes_definitional(g, x, y):
            continue
        found += 1
        xy = mul_codes(g, x, y)
        if xy != mul_codes(g, y, x) or join_codes(g, x, y) != xy:
            perp_fail.append(_failure(g, x=x, y=y))

    a1_fail: list[dict] = []
    found = 0
    attempts = 0
    while found < samples:
        attempts += 1
        if attempts > attempts_cap:
            raise InvariantViolationError("constructive sampling for the inverse-prefix axiom exhausted its budget")
        y = random_codes(rng, g, max_len)
        iy = inv_codes(g, y)
        prefixes = interval_codes(g, iy)
        x = inv_codes(g, rng.choice(prefixes))
        if join_codes(g, x, y) is None:
            continue
        found += 1
        if not prefix_codes(g, x, y):
            a1_fail.append(_failure(g, x=x, y=y))

    a2_fail: list[dict] = []
    found = 0
    attempts = 0
    while found < samples:
        attempts += 1
        if attempts > attempts_cap:
            raise InvariantViolationError("rejection sampling for the meet-triviality axiom exhausted its budget")
        x = random_codes(rng, g, max_len)
        y = random_codes(rng, g, max_len)
        z = random_codes(rng, g, max_len)
        if meet_codes(g, x, y):
            continue
        if meet_codes(g, inv_codes(g, x), z):
            continue
        if meet_codes(g, inv_codes(g, y), z):
            continue
        found += 1
        lhs = meet_codes(g, mul_codes(g, x, z), mul_codes(g, y, z))
        if not prefix_codes(g, lhs, z):
            a2_fail.append(_failure(g, x=x, y=y, z=z))

    a4_fail: list[dict] = []
    for _ in range(samples):
        x = random_codes(rng, g, max_len)
        if join_codes(g, x, inv_codes(g, x)) is not None and x != ():
            a4_fail.append(_failure(g, x=x))

    return [
        {"axiom": "orthogonal-product-law", "samples": samples, "failures": perp_fail},
        {"axiom": "inverse-prefix-transfer", "samples": samples, "failures": a1_fail},
        {"axiom": "meet-triviality-transfer", "samples": samples, "failures": a2_fail},
        {"axiom": "no-inverse-join", "samples": samples, "failures": a4_fail},
    ]
