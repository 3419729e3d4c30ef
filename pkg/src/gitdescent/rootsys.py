"""Root-system data for the simple complex Lie types.

Everything here is exact integer data: Cartan matrices in Bourbaki numbering,
positive roots generated by height-graded closure, the highest root theta and
the lcm d of its coefficients, and the symmetrizer making the Cartan matrix a
positive definite form.

Coordinate conventions used throughout the package:

* ``Weight`` vectors are coefficients over the fundamental weights, so the
  j-th column of the Cartan matrix is the simple root alpha_j written as a
  Weight.  A weight is dominant iff all coordinates are >= 0.
* ``RootCoords`` vectors are coefficients over the simple roots; they house
  roots and elements of sublattices of the root lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, InvalidType, NotInRootLattice

__all__ = [
    "Weight",
    "RootCoords",
    "RootSystem",
    "build_root_system",
    "parse_type",
    "root_to_weight_coords",
    "weight_to_root_coords",
    "rho",
    "sym_pairing",
]


def _check_same_length(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"length {len(a)} vs {len(b)}")


@dataclass(frozen=True)
class Weight:
    """Integer vector of coefficients over the fundamental weights."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        _check_same_length(self.coords, other.coords)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_same_length(self.coords, other.coords)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_dominant_regular(self) -> bool:
        return all(c >= 1 for c in self.coords)


@dataclass(frozen=True)
class RootCoords:
    """Integer vector of coefficients over the simple roots."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "RootCoords") -> "RootCoords":
        _check_same_length(self.coords, other.coords)
        return RootCoords(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootCoords") -> "RootCoords":
        _check_same_length(self.coords, other.coords)
        return RootCoords(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootCoords":
        return RootCoords(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "RootCoords":
        return RootCoords(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)


# Admissible (family, min_rank, max_rank) windows.  B2/C2 are constructible
# on purpose: the rep-theory operations want them even though the descent
# lattice table starts at B3.  D3 is rejected as an alias of A3.
_RANK_WINDOWS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _cartan_matrix(family: str, rank: int) -> list[list[int]]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family in ("A", "B", "C"):
        for i in range(rank - 1):
            bond(i, i + 1)
        if family == "B" and rank >= 2:
            a[rank - 1][rank - 2] = -2  # alpha_rank is short
        if family == "C" and rank >= 2:
            a[rank - 2][rank - 1] = -2  # alpha_rank is long
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            bond(i, j)
        if rank >= 7:
            bond(5, 6)
        if rank == 8:
            bond(6, 7)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, aij=-1, aji=-2)  # alpha_3, alpha_4 short
        bond(2, 3)
    elif family == "G":
        bond(0, 1, aij=-3, aji=-1)  # alpha_1 short
    return a


def _symmetrizer(family: str, rank: int) -> tuple[int, ...]:
    if family == "B":
        return tuple([2] * (rank - 1) + [1])
    if family == "C":
        return tuple([1] * (rank - 1) + [2])
    if family == "F":
        return (2, 2, 1, 1)
    if family == "G":
        return (1, 3)
    return tuple([1] * rank)


def _close_positive_roots(cartan: list[list[int]], rank: int) -> list[tuple[int, ...]]:
    """Height-graded closure from the simple roots.

    A root string argument drives the step: for a positive root r and simple
    root alpha_i, r + alpha_i is a root iff p - <r, alpha_i^vee> >= 1 where p
    is how far the string extends downward from r.
    """
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    known = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(rank):
                pairing = sum(cartan[i][j] * r[j] for j in range(rank))
                p = 0
                down = list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing >= 1:
                    up = list(r)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return sorted(known, key=lambda r: (sum(r), r))


def _invert(cartan: list[list[int]], rank: int) -> tuple[tuple[Fraction, ...], ...]:
    aug = [
        [Fraction(cartan[i][j]) for j in range(rank)]
        + [Fraction(1 if j == i else 0) for j in range(rank)]
        for i in range(rank)
    ]
    for col in range(rank):
        piv = next(r for r in range(col, rank) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(rank):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[rank:]) for row in aug)


@dataclass(frozen=True)
class RootSystem:
    """Immutable description of one simple type.

    ``cartan[i][j]`` is the pairing of alpha_j against the coroot of alpha_i,
    so column j is alpha_j over the fundamental weights.  ``positive_roots``
    are ordered by height then lexicographically.  ``d`` is the lcm of the
    simple-root coefficients of the highest root ``theta``.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[RootCoords, ...]
    theta: RootCoords
    d: int
    inv_cartan: tuple[tuple[Fraction, ...], ...]
    _positive_set: frozenset

    @property
    def type_name(self) -> str:
        return f"{self.family}{self.rank}"

    def is_root(self, r: RootCoords) -> bool:
        t = r.coords
        return t in self._positive_set or tuple(-c for c in t) in self._positive_set

    def simple_root(self, i: int) -> RootCoords:
        """The i-th simple root, 1-based."""
        return RootCoords(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [list(r.coords) for r in self.positive_roots],
            "theta": list(self.theta.coords),
            "d": self.d,
        }

    def __repr__(self):
        return f"RootSystem({self.type_name})"


_CACHE: dict[tuple[str, int], RootSystem] = {}


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of a simple type.

    Admissible: A (rank >= 1), B and C (rank >= 2), D (rank >= 4),
    E6/E7/E8, F4, G2.  Raises InvalidType otherwise.
    """
    key = (family, rank)
    if key in _CACHE:
        return _CACHE[key]
    window = _RANK_WINDOWS.get(family)
    if window is None:
        raise InvalidType(f"unknown family {family!r}")
    lo, hi = window
    if rank < lo or (hi is not None and rank > hi):
        raise InvalidType(f"{family}{rank} is not an admissible simple type")

    cartan = _cartan_matrix(family, rank)
    pos = _close_positive_roots(cartan, rank)
    theta = max(pos, key=lambda r: (sum(r), r))
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizer=_symmetrizer(family, rank),
        positive_roots=tuple(RootCoords(r) for r in pos),
        theta=RootCoords(theta),
        d=lcm(*theta),
        inv_cartan=_invert(cartan, rank),
        _positive_set=frozenset(pos),
    )
    _CACHE[key] = rs
    return rs


def parse_type(name: str) -> RootSystem:
    """Build a root system from a compact name such as ``"B3"``."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise InvalidType(f"cannot parse type name {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


def root_to_weight_coords(rs: RootSystem, r: RootCoords) -> Weight:
    """Express a root-lattice vector over the fundamental weights."""
    if len(r) != rs.rank:
        raise DimensionMismatch(f"rank {rs.rank} vs vector length {len(r)}")
    return Weight(
        tuple(
            sum(rs.cartan[j][i] * r.coords[i] for i in range(rs.rank))
            for j in range(rs.rank)
        )
    )


def weight_to_root_coords(rs: RootSystem, w: Weight) -> RootCoords:
    """Inverse change of basis; raises NotInRootLattice off the root lattice."""
    if len(w) != rs.rank:
        raise DimensionMismatch(f"rank {rs.rank} vs vector length {len(w)}")
    out = []
    for i in range(rs.rank):
        x = sum(rs.inv_cartan[i][j] * w.coords[j] for j in range(rs.rank))
        if x.denominator != 1:
            raise NotInRootLattice(f"{w.coords} is not in the root lattice of {rs.type_name}")
        out.append(int(x))
    return RootCoords(tuple(out))


def rho(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots: the all-ones weight."""
    return Weight((1,) * rs.rank)


def sym_pairing(rs: RootSystem, w: Weight, q: RootCoords) -> int:
    """Invariant symmetric form of a weight against a root-lattice vector.

    Normalized so that (omega_i, alpha_j) = d_j * delta_ij with d the
    symmetrizer; always an integer.
    """
    if len(w) != rs.rank or len(q) != rs.rank:
        raise DimensionMismatch("rank mismatch in pairing")
    return sum(q.coords[j] * rs.symmetrizer[j] * w.coords[j] for j in range(rs.rank))


def reflect_weight(rs: RootSystem, v: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Apply the i-th simple reflection (0-based) to fundamental coordinates."""
    c = v[i]
    if c == 0:
        return v
    return tuple(v[j] - c * rs.cartan[j][i] for j in range(rs.rank))


def reflect_root_coords(rs: RootSystem, r: tuple[int, ...], i: int) -> tuple[int, ...]:
    """Apply the i-th simple reflection (0-based) to simple-root coordinates."""
    pairing = sum(rs.cartan[i][j] * r[j] for j in range(rs.rank))
    out = list(r)
    out[i] -= pairing
    return tuple(out)
