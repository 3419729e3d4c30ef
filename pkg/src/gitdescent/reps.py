"""Representation-theoretic quantities over a root system.

Weyl dimensions, full character tables by the Freudenthal recursion, tensor
product multiplicities by the alternating-sum (Klimyk) method, a brute-force
vector partition counter usable as an oracle at low rank, and the one-sided
semistability probe dim [V(N lambda) x V(N mu) x V(N nu)]^G > 0.

All multiplicity arithmetic is exact integer arithmetic.  Work bounds are
measured in character-support size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotDominant, NotDominantRegular, WorkBoundExceeded
from .rootsys import (
    RootCoords,
    RootSystem,
    Weight,
    reflect_weight,
    root_to_weight_coords,
    rho,
    sym_pairing,
    weight_to_root_coords,
)
from .weyl import apply, longest_element

__all__ = [
    "CharacterTable",
    "ProbeResult",
    "weyl_dimension",
    "weight_multiplicities",
    "kostant_partition",
    "tensor_decomposition",
    "tensor_multiplicity",
    "triple_invariant_dim",
    "semistable_probe",
]

DEFAULT_SUPPORT_BOUND = 100_000
DEFAULT_PARTITION_HEIGHT_BOUND = 40


@dataclass(frozen=True)
class CharacterTable:
    """Weight multiplicities of one irreducible representation."""

    highest_weight: Weight
    mults: dict[Weight, int]

    @property
    def dimension(self) -> int:
        return sum(self.mults.values())


@dataclass(frozen=True)
class ProbeResult:
    """Outcome of the scaling probe: the least N with a nonzero invariant,
    or the fact that none exists up to n_max.  Never claims emptiness."""

    nonempty: bool
    n: int

    def __repr__(self):
        return f"NonEmpty({self.n})" if self.nonempty else f"EmptyUpTo({self.n})"


def _require_dominant(*weights):
    for w in weights:
        if not w.is_dominant:
            raise NotDominant(f"{w.coords} has a negative coordinate")


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Exact dimension by the product formula over positive roots."""
    _require_dominant(lam)
    shifted = lam + rho(rs)
    num = 1
    den = 1
    r = rho(rs)
    for alpha in rs.positive_roots:
        num *= sym_pairing(rs, shifted, alpha)
        den *= sym_pairing(rs, r, alpha)
    assert num % den == 0
    return num // den


def _dominant_conjugate(rs: RootSystem, v: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        for i in range(rs.rank):
            if v[i] < 0:
                v = reflect_weight(rs, v, i)
                break
        else:
            return v


def _dominant_conjugate_signed(rs: RootSystem, v: tuple[int, ...]):
    """(dominant conjugate, det sign) for regular v; (None, 0) on a wall."""
    sign = 1
    while True:
        hit_wall = False
        for i in range(rs.rank):
            if v[i] == 0:
                hit_wall = True
            elif v[i] < 0:
                v = reflect_weight(rs, v, i)
                sign = -sign
                break
        else:
            return (None, 0) if hit_wall else (v, sign)


def _weyl_orbit(rs: RootSystem, dom: tuple[int, ...]) -> list[tuple[int, ...]]:
    seen = {dom}
    frontier = [dom]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                u = reflect_weight(rs, v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return list(seen)


@lru_cache(maxsize=None)
def _dominant_character(rs: RootSystem, lam_t: tuple[int, ...], bound: int):
    """Multiplicities on the dominant chamber by the Freudenthal recursion.

    Returns a tuple of ((weight tuple, root coords of lam - weight), mult)
    sorted by increasing depth below lam.
    """
    rank = rs.rank
    pos_w = [root_to_weight_coords(rs, a).coords for a in rs.positive_roots]
    pos_r = [a.coords for a in rs.positive_roots]
    norm2 = [
        sym_pairing(rs, root_to_weight_coords(rs, a), a) for a in rs.positive_roots
    ]

    # every dominant weight of V(lam) is reachable from a higher dominant
    # weight by subtracting a single positive root
    dominants = {lam_t}
    frontier = [lam_t]
    while frontier:
        nxt = []
        for v in frontier:
            for a in pos_w:
                u = tuple(x - y for x, y in zip(v, a))
                if all(c >= 0 for c in u) and u not in dominants:
                    dominants.add(u)
                    nxt.append(u)
        frontier = nxt
        if len(dominants) > bound:
            raise WorkBoundExceeded(
                f"dominant support exceeds {bound} weights for {lam_t}"
            )

    lam_w = Weight(lam_t)
    depth_of = {}
    for v in dominants:
        rc = weight_to_root_coords(rs, lam_w - Weight(v)).coords
        depth_of[v] = (sum(rc), rc)
    order = sorted(dominants, key=lambda v: (depth_of[v][0], v))

    two_rho_plus = {}  # cache of lam + mu + 2 rho per mu, as tuples
    mults: dict[tuple[int, ...], int] = {order[0]: 1}
    for mu in order[1:]:
        total = 0
        for a_w, a_r, n2 in zip(pos_w, pos_r, norm2):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a_w))
                dom = _dominant_conjugate(rs, nu)
                m = mults.get(dom)
                if m is None:
                    break
                # (nu, alpha) with alpha in root coordinates
                total += m * sum(
                    a_r[j] * rs.symmetrizer[j] * nu[j] for j in range(rank)
                )
                k += 1
        depth_rc = depth_of[mu][1]
        shifted = tuple(l + m + 2 for l, m in zip(lam_t, mu))
        den = sum(depth_rc[j] * rs.symmetrizer[j] * shifted[j] for j in range(rank))
        assert den > 0 and (2 * total) % den == 0
        mults[mu] = 2 * total // den
    return tuple((v, mults[v]) for v in order)


def weight_multiplicities(
    rs: RootSystem, lam: Weight, *, support_bound: int = DEFAULT_SUPPORT_BOUND
) -> CharacterTable:
    """Full character table of V(lam) (all weights, not just dominant)."""
    _require_dominant(lam)
    table: dict[Weight, int] = {}
    count = 0
    for dom, m in _dominant_character(rs, lam.coords, support_bound):
        orbit = _weyl_orbit(rs, dom)
        count += len(orbit)
        if count > support_bound:
            raise WorkBoundExceeded(
                f"character support exceeds {support_bound} weights"
            )
        for v in orbit:
            table[Weight(v)] = m
    return CharacterTable(highest_weight=lam, mults=table)


def kostant_partition(
    rs: RootSystem,
    v: RootCoords,
    *,
    height_bound: int = DEFAULT_PARTITION_HEIGHT_BOUND,
) -> int:
    """Number of ways to write v as an N-combination of positive roots.

    Exhaustive enumeration; restricted to rank <= 3 and bounded height to
    keep the combinatorics honest.  Meant as a test oracle.
    """
    if rs.rank > 3:
        raise WorkBoundExceeded("partition oracle is limited to rank <= 3")
    if v.height > height_bound:
        raise WorkBoundExceeded(f"height {v.height} exceeds bound {height_bound}")
    if any(c < 0 for c in v.coords):
        return 0
    roots = sorted((a.coords for a in rs.positive_roots), key=sum, reverse=True)

    def count(idx: int, rem: tuple[int, ...]) -> int:
        if not any(rem):
            return 1
        if idx == len(roots):
            return 0
        a = roots[idx]
        kmax = min(r // c for r, c in zip(rem, a) if c > 0)
        total = 0
        for k in range(kmax + 1):
            total += count(idx + 1, tuple(r - k * c for r, c in zip(rem, a)))
        return total

    return count(0, v.coords)


@lru_cache(maxsize=None)
def _klimyk_decomposition(
    rs: RootSystem,
    lam_t: tuple[int, ...],
    mu_t: tuple[int, ...],
    bound: int,
):
    """Signed dominant-chamber accumulation of the product character.

    Iterates over the character of the smaller-dimensional factor (ties go
    to mu); wall terms drop out with their stabilizers.
    """
    lam, mu = Weight(lam_t), Weight(mu_t)
    if weyl_dimension(rs, lam) < weyl_dimension(rs, mu):
        expand, anchor = lam, mu
    else:
        expand, anchor = mu, lam
    char = weight_multiplicities(rs, expand, support_bound=bound)
    one = rho(rs).coords
    anchor_shifted = tuple(a + r for a, r in zip(anchor.coords, one))
    out: dict[tuple[int, ...], int] = {}
    for xi, m in char.mults.items():
        v = tuple(a + x for a, x in zip(anchor_shifted, xi.coords))
        dom, sign = _dominant_conjugate_signed(rs, v)
        if dom is None:
            continue
        target = tuple(c - r for c, r in zip(dom, one))
        out[target] = out.get(target, 0) + sign * m
    cleaned = {k: v for k, v in out.items() if v}
    assert all(v > 0 for v in cleaned.values())
    return tuple(sorted(cleaned.items()))


def tensor_decomposition(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    *,
    support_bound: int = DEFAULT_SUPPORT_BOUND,
) -> dict[Weight, int]:
    """Decomposition of V(lam) x V(mu) into irreducibles."""
    _require_dominant(lam, mu)
    return {
        Weight(k): v
        for k, v in _klimyk_decomposition(rs, lam.coords, mu.coords, support_bound)
    }


def tensor_multiplicity(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu_target: Weight,
    *,
    support_bound: int = DEFAULT_SUPPORT_BOUND,
) -> int:
    """Multiplicity of V(nu_target) inside V(lam) x V(mu)."""
    _require_dominant(lam, mu, nu_target)
    table = dict(_klimyk_decomposition(rs, lam.coords, mu.coords, support_bound))
    return table.get(nu_target.coords, 0)


def triple_invariant_dim(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    *,
    support_bound: int = DEFAULT_SUPPORT_BOUND,
) -> int:
    """dim of the invariants in V(lam) x V(mu) x V(nu).

    Equals the multiplicity of the dual of V(lam) inside V(mu) x V(nu); the
    dual highest weight is -w0(lam).
    """
    _require_dominant(lam, mu, nu)
    w0 = longest_element(rs)
    dual = -apply(rs, w0, lam)
    return tensor_multiplicity(rs, mu, nu, dual, support_bound=support_bound)


def semistable_probe(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    n_max: int = 8,
    *,
    support_bound: int = DEFAULT_SUPPORT_BOUND,
) -> ProbeResult:
    """Search for the least N <= n_max with a nonzero triple invariant.

    One-sided by design: EmptyUpTo(n_max) never asserts genuine emptiness.
    """
    for w in (lam, mu, nu):
        if not w.is_dominant_regular:
            raise NotDominantRegular(f"{w.coords} is not dominant regular")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    for n in range(1, n_max + 1):
        try:
            if triple_invariant_dim(rs, n * lam, n * mu, n * nu, support_bound=support_bound) > 0:
                return ProbeResult(nonempty=True, n=n)
        except WorkBoundExceeded as exc:
            raise WorkBoundExceeded(f"{exc} (while probing N={n})", at_scale=n) from exc
    return ProbeResult(nonempty=False, n=n_max)
