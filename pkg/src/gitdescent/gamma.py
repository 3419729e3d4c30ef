"""The named lattices attached to a root system, in fundamental-weight
coordinates: the root lattice Q, the weight lattice, its integer multiples,
and the type-dependent descent lattice Gamma.

Gamma is the intersection of all finite-index sublattices ZS of Q generated
by subsets S of positive roots.  It is stored through explicit finite
generating sets; the D-type congruence descriptions become test oracles.
"""

from __future__ import annotations

from .errors import RankOutOfTableRange
from .lattice import IntegerLattice, lattice_from_generators
from .rootsys import RootCoords, RootSystem, root_to_weight_coords

__all__ = [
    "root_lattice",
    "weight_lattice",
    "scaled_weight_lattice",
    "gamma_lattice",
    "gamma_root_generators",
]

_CACHE: dict = {}


def _cached(kind, rs, builder, *extra):
    key = (kind, rs.family, rs.rank, *extra)
    if key not in _CACHE:
        _CACHE[key] = builder()
    return _CACHE[key]


def root_lattice(rs: RootSystem) -> IntegerLattice:
    """Q: the span of the simple roots, i.e. of the Cartan columns."""
    return _cached(
        "Q",
        rs,
        lambda: lattice_from_generators(
            rs.rank,
            [root_to_weight_coords(rs, rs.simple_root(i + 1)) for i in range(rs.rank)],
        ),
    )


def weight_lattice(rs: RootSystem) -> IntegerLattice:
    """The full weight lattice: Z^rank in these coordinates."""
    return scaled_weight_lattice(rs, 1)


def scaled_weight_lattice(rs: RootSystem, k: int) -> IntegerLattice:
    """k times the weight lattice, k >= 1."""
    if k < 1:
        raise ValueError(f"scale must be >= 1, got {k}")
    return _cached(
        "kL",
        rs,
        lambda: lattice_from_generators(
            rs.rank,
            [tuple(k if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)],
        ),
        k,
    )


def gamma_root_generators(rs: RootSystem) -> list[RootCoords] | None:
    """Generators of Gamma in simple-root coordinates, or None where the
    table instead gives Gamma as a multiple of the full weight lattice."""
    fam, rank = rs.family, rs.rank
    e = rs.simple_root
    if fam == "A":
        return [e(i) for i in range(1, rank + 1)]
    if fam == "B":
        if rank < 3:
            raise RankOutOfTableRange(f"no descent lattice tabulated for B{rank}")
        return [2 * e(i) for i in range(1, rank + 1)]
    if fam == "C":
        return None  # 2 * weight lattice
    if fam == "D":
        if rank == 4:
            return [2 * e(1), 2 * e(2), e(1) + e(3), e(1) + e(4)]
        return (
            [2 * e(i) for i in range(1, rank - 1)]
            + [e(rank - 1) + e(rank), 2 * e(rank - 1)]
        )
    if fam == "G":
        return [6 * e(1), 2 * e(2)]
    if fam == "F":
        return [6 * e(1), 6 * e(2), 12 * e(3), 12 * e(4)]
    if fam == "E":
        if rank == 8:
            return [60 * e(i) for i in range(1, 9)]
        return None  # 6 or 12 times the weight lattice
    raise RankOutOfTableRange(f"no descent lattice tabulated for {rs.type_name}")


def gamma_lattice(rs: RootSystem) -> IntegerLattice:
    """The descent lattice Gamma of the type, in weight coordinates.

    Raises RankOutOfTableRange off the tabulated ranks (e.g. B2).
    """

    def build():
        gens = gamma_root_generators(rs)
        if gens is None:
            scale = {"C": 2, ("E", 6): 6, ("E", 7): 12}[
                rs.family if rs.family == "C" else (rs.family, rs.rank)
            ]
            return scaled_weight_lattice(rs, scale)
        return lattice_from_generators(
            rs.rank, [root_to_weight_coords(rs, g) for g in gens]
        )

    return _cached("Gamma", rs, build)
