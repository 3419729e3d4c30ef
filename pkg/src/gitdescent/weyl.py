"""Weyl group elements as words in simple reflections.

Elements are canonicalized to the lexicographically smallest reduced word,
found by greedy left-descent extraction from the element's action on the
root lattice.  That makes equality, hashing, and serialization cheap and
deterministic without any matrix representation in the public API.

Words are tuples of 1-based simple-reflection indices; ``w.word == (1, 2)``
means s_1 applied after s_2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

from .errors import DimensionMismatch, GroupTooLarge, IndexOutOfRange, NotARoot
from .rootsys import (
    RootCoords,
    RootSystem,
    Weight,
    reflect_root_coords,
    reflect_weight,
    rho,
)

__all__ = [
    "WeylElement",
    "identity",
    "simple_reflection",
    "from_word",
    "apply",
    "apply_to_root",
    "inversion_set",
    "longest_element",
    "weyl_order",
    "enumerate_weyl_group",
]

_EXCEPTIONAL_ORDERS = {"G": 12, "F": 1152, ("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600}


def weyl_order(rs: RootSystem) -> int:
    """|W| from the classical order formulas."""
    if rs.family == "A":
        return factorial(rs.rank + 1)
    if rs.family in ("B", "C"):
        return 2**rs.rank * factorial(rs.rank)
    if rs.family == "D":
        return 2 ** (rs.rank - 1) * factorial(rs.rank)
    if rs.family == "E":
        return _EXCEPTIONAL_ORDERS[("E", rs.rank)]
    return _EXCEPTIONAL_ORDERS[rs.family]


# -- action bookkeeping ------------------------------------------------------
#
# An action state is a tuple of rank columns, column j being w(alpha_j) in
# root coordinates.  Right multiplication by s_i maps column j to
# col_j - cartan[i][j] * col_i; left multiplication applies s_i to each
# column.  Canonical words are extracted from the action of w^{-1}: the
# smallest i whose column is negative is the first letter.


def _identity_cols(rank: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if k == j else 0 for k in range(rank)) for j in range(rank))


def _right_mult(rs: RootSystem, cols, i: int):
    ci = cols[i]
    return tuple(
        tuple(cols[j][k] - rs.cartan[i][j] * ci[k] for k in range(rs.rank))
        for j in range(rs.rank)
    )


def _left_mult(rs: RootSystem, cols, i: int):
    return tuple(reflect_root_coords(rs, col, i) for col in cols)


def _inverse_action_of_word(rs: RootSystem, word0) -> tuple:
    """Action state of w^{-1} for w given by a 0-based word."""
    cols = _identity_cols(rs.rank)
    for i in reversed(word0):
        cols = _right_mult(rs, cols, i)
    return cols


def _canonical_from_inverse_action(rs: RootSystem, inv_cols) -> tuple[int, ...]:
    """Greedy smallest-left-descent extraction; O(length * rank^2)."""
    ident = _identity_cols(rs.rank)
    word = []
    cols = inv_cols
    while cols != ident:
        for i in range(rs.rank):
            if all(c <= 0 for c in cols[i]):
                word.append(i + 1)
                cols = _right_mult(rs, cols, i)
                break
        else:
            raise AssertionError("non-identity action without a descent")
    return tuple(word)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element, stored by its canonical reduced word."""

    rs: RootSystem = field(repr=False)
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.rs is not other.rs and (self.rs.family, self.rs.rank) != (
            other.rs.family,
            other.rs.rank,
        ):
            raise DimensionMismatch("elements of different Weyl groups")
        return from_word(self.rs, self.word + other.word)

    def inverse(self) -> "WeylElement":
        return from_word(self.rs, tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return not self.word

    def __repr__(self):
        return f"W({self.rs.type_name}:{'.'.join(map(str, self.word)) or 'e'})"


def identity(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"reflection index {i} outside 1..{rs.rank}")
    return WeylElement(rs, (i,))


def from_word(rs: RootSystem, word) -> WeylElement:
    """Canonicalize an arbitrary word in simple reflections (1-based)."""
    word0 = []
    for i in word:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"reflection index {i} outside 1..{rs.rank}")
        word0.append(i - 1)
    inv = _inverse_action_of_word(rs, word0)
    return WeylElement(rs, _canonical_from_inverse_action(rs, inv))


def _check_element(rs: RootSystem, w: WeylElement):
    if (w.rs.family, w.rs.rank) != (rs.family, rs.rank):
        raise DimensionMismatch(
            f"element of W({w.rs.type_name}) used with {rs.type_name}"
        )


def apply(rs: RootSystem, w: WeylElement, lam: Weight) -> Weight:
    """Act on a weight; the word composes right-to-left."""
    _check_element(rs, w)
    if len(lam) != rs.rank:
        raise DimensionMismatch("weight length differs from rank")
    v = lam.coords
    for i in reversed(w.word):
        v = reflect_weight(rs, v, i - 1)
    return Weight(v)


def apply_to_root(rs: RootSystem, w: WeylElement, r: RootCoords) -> RootCoords:
    """Act on a root in simple-root coordinates."""
    _check_element(rs, w)
    if not rs.is_root(r):
        raise NotARoot(f"{r.coords} is not a root of {rs.type_name}")
    v = r.coords
    for i in reversed(w.word):
        v = reflect_root_coords(rs, v, i - 1)
    return RootCoords(v)


def inversion_set(rs: RootSystem, w: WeylElement) -> frozenset[RootCoords]:
    """The positive roots sent negative by w; its size is the length."""
    _check_element(rs, w)
    out = []
    for r in rs.positive_roots:
        v = r.coords
        for i in reversed(w.word):
            v = reflect_root_coords(rs, v, i - 1)
        if all(c <= 0 for c in v):
            out.append(r)
    return frozenset(out)


def longest_element(rs: RootSystem) -> WeylElement:
    """The unique element sending the dominant chamber to its negative."""
    v = tuple(-c for c in rho(rs).coords)
    rev = []
    while True:
        for i in range(rs.rank):
            if v[i] < 0:
                v = reflect_weight(rs, v, i)
                rev.append(i + 1)
                break
        else:
            break
    return from_word(rs, tuple(reversed(rev)))


def enumerate_weyl_group(rs: RootSystem, size_bound: int = 10**6) -> Iterator[WeylElement]:
    """Yield every element exactly once, by length then canonical word.

    Breadth-first search over the right Cayley graph, deduplicated by the
    element's action on the root lattice.  Refuses with GroupTooLarge when
    |W| exceeds size_bound; exhaustive-or-refused, never silently partial.
    """
    order = weyl_order(rs)
    if order > size_bound:
        raise GroupTooLarge(order, size_bound)

    def stream():
        start = _identity_cols(rs.rank)
        seen = {start}
        frontier = [start]
        while frontier:
            named = [(_canonical_from_inverse_action(rs, cols), cols) for cols in frontier]
            named.sort(key=lambda t: t[0])
            for word, _ in named:
                yield WeylElement(rs, word)
            nxt = []
            for _, cols in named:
                for i in range(rs.rank):
                    # state is act(w^{-1}); (w s_i)^{-1} = s_i w^{-1}
                    cand = _left_mult(rs, cols, i)
                    if cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt

    return stream()
