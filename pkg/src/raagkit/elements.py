"""Canonical normal forms and group arithmetic.

An element is stored as the shortlex-least reduced word over signed letters,
encoded as a tuple of ints (see presentation.letter_code). Two words represent
the same element iff their canonical tuples are equal, so equality is a byte
comparison and the word problem is solved by `normalize`.

The canonical form is computed in two passes:

1. reduction: a stack-per-generator sweep cancels a letter against a pending
   inverse exactly when every letter stacked between them commutes with it;
2. shortlex extraction: repeatedly remove the least letter among those that
   commute with everything before them.

Pass 1 yields some reduced word of the element; pass 2 picks the least
linearization of its dependence order, which is the shortlex-least reduced
word since all reduced words of an element have the same length and multiset
of letters.

Module-level functions ending in `_codes` work on raw int tuples for speed;
the GroupElement wrapper and the named operations are the public surface.
"""

from __future__ import annotations

from .errors import GraphMismatchError
from .presentation import (
    CommutationGraph,
    SignedLetter,
    Word,
    code_letter,
    letter_code,
    render_word,
)


def reduce_codes(graph: CommutationGraph, codes) -> list[int]:
    """One reduced word (not necessarily canonical) equal to the input in the group."""
    blockers = graph.blockers
    piles: list[list[int]] = [[] for _ in range(graph.ngens)]
    letters: list[int] = []  # entry id -> letter code, -1 once cancelled
    for s in codes:
        pile = piles[s >> 1]
        while pile and letters[pile[-1]] < 0:
            pile.pop()
        if pile and letters[pile[-1]] == (s ^ 1):
            # The most recent uncancelled letter that does not commute with s
            # is exactly s^-1, so the pair cancels.
            letters[pile[-1]] = -1
            pile.pop()
            continue
        eid = len(letters)
        letters.append(s)
        for h in blockers[s >> 1]:
            piles[h].append(eid)
    return [l for l in letters if l >= 0]


def shortlex_codes(graph: CommutationGraph, word) -> tuple[int, ...]:
    """Least linearization of a reduced word's dependence order."""
    n = len(word)
    if n <= 1:
        return tuple(word)
    block = graph.block_mask
    w = list(word)
    out: list[int] = []
    for _ in range(n - 1):
        seen = 0
        best_val = -1
        best_idx = 0
        for i, l in enumerate(w):
            if (best_val < 0 or l < best_val) and not (seen & block[l >> 1]):
                best_val = l
                best_idx = i
            seen |= 1 << (l >> 1)
        out.append(best_val)
        del w[best_idx]
    out.append(w[0])
    return tuple(out)


def canon_codes(graph: CommutationGraph, codes) -> tuple[int, ...]:
    """Canonical (shortlex-least reduced) tuple for an arbitrary letter sequence."""
    return shortlex_codes(graph, reduce_codes(graph, codes))


def mul_codes(graph: CommutationGraph, a, b) -> tuple[int, ...]:
    """Canonical form of the product of two canonical tuples."""
    if not a:
        return tuple(b)
    if not b:
        return tuple(a)
    return canon_codes(graph, a + b)


def inv_codes(graph: CommutationGraph, t) -> tuple[int, ...]:
    """Canonical form of the inverse. The reversed sign-flipped word is already
    reduced, so only the shortlex pass is needed."""
    return shortlex_codes(graph, [l ^ 1 for l in reversed(t)])


def pow_codes(graph: CommutationGraph, t, n: int) -> tuple[int, ...]:
    """Canonical form of the n-th power (n may be negative or zero)."""
    if n == 0:
        return ()
    if n < 0:
        return pow_codes(graph, inv_codes(graph, t), -n)
    acc: tuple[int, ...] = ()
    base = tuple(t)
    while n:
        if n & 1:
            acc = mul_codes(graph, acc, base)
        n >>= 1
        if n:
            base = mul_codes(graph, base, base)
    return acc


def fl_codes(graph: CommutationGraph, t) -> list[int]:
    """First letters: codes s with l(s^-1 x) = l(x) - 1, in scan order.

    A position is a first letter iff every earlier letter commutes with it;
    at most one occurrence per generator qualifies.
    """
    block = graph.block_mask
    seen = 0
    out: list[int] = []
    for l in t:
        g = l >> 1
        if not (seen & block[g]):
            out.append(l)
        seen |= 1 << g
    return out


def fl_set(graph: CommutationGraph, t) -> set[int]:
    return set(fl_codes(graph, t))


def support_codes(t) -> set[int]:
    return {l >> 1 for l in t}


class GroupElement:
    """A group element in canonical form. Construct via `normalize` or `element`."""

    __slots__ = ("graph", "codes", "_hash")

    def __init__(self, graph: CommutationGraph, codes: tuple[int, ...]):
        self.graph = graph
        self.codes = codes
        self._hash = hash(codes)

    @property
    def letters(self) -> tuple[SignedLetter, ...]:
        """The canonical word as signed letters."""
        return tuple(code_letter(c) for c in self.codes)

    def length(self) -> int:
        """The canonical length l(x)."""
        return len(self.codes)

    def is_identity(self) -> bool:
        return not self.codes

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __invert__(self) -> "GroupElement":
        return invert(self)

    def __pow__(self, n: int) -> "GroupElement":
        return power(self, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.codes == other.codes and self.graph == other.graph

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.codes)

    def __repr__(self) -> str:
        return f"<{render(self)}>"


def normalize(w: Word, g: CommutationGraph) -> GroupElement:
    """Canonical form of a raw word; constant on group-equal words."""
    codes = [letter_code(l) for l in w.letters]
    for l in w.letters:
        if l.gen >= g.ngens:
            raise ValueError(f"letter {l} is not valid for this graph")
    return GroupElement(g, canon_codes(g, codes))


def identity(g: CommutationGraph) -> GroupElement:
    return GroupElement(g, ())


def element(g: CommutationGraph, text: str) -> GroupElement:
    """Parse-and-normalize convenience."""
    from .presentation import parse_word

    return normalize(parse_word(text, g), g)


def _require_same_graph(x: GroupElement, y: GroupElement) -> None:
    if x.graph != y.graph:
        raise GraphMismatchError("elements come from different presentations")


def multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    _require_same_graph(x, y)
    return GroupElement(x.graph, mul_codes(x.graph, x.codes, y.codes))


def invert(x: GroupElement) -> GroupElement:
    return GroupElement(x.graph, inv_codes(x.graph, x.codes))


def power(x: GroupElement, n: int) -> GroupElement:
    return GroupElement(x.graph, pow_codes(x.graph, x.codes, n))


def equal(x: GroupElement, y: GroupElement) -> bool:
    _require_same_graph(x, y)
    return x.codes == y.codes


def first_letters(x: GroupElement) -> set[SignedLetter]:
    """The signed letters that begin some geodesic spelling of x; empty iff x = 1."""
    return {code_letter(c) for c in fl_codes(x.graph, x.codes)}


def support(x: GroupElement) -> set[int]:
    """Generator indices occurring in the reduced word (a trace invariant)."""
    return support_codes(x.codes)


def render(x: GroupElement) -> str:
    """Tokens with run-length powers, e.g. ``a^3 b^-1``; the identity is ``1``."""
    return render_word(Word(x.letters), x.graph)


def render_codes(g: CommutationGraph, t) -> str:
    return render_word(Word(tuple(code_letter(c) for c in t)), g)
