"""Exact arithmetic for finitely generated subgroups of Z^n.

The canonical form is a row-style Hermite normal form: pivots positive,
entries above each pivot reduced into [0, pivot), zero rows dropped, rows
ordered by pivot column.  Two generating sets span the same lattice iff they
normalize to the identical basis, so lattice equality is tuple equality.

All arithmetic is on Python ints; intermediate swell at rank 8 (e.g. bases
scaled by 60) stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, inf, prod

from .errors import DimensionMismatch, NotASublattice

__all__ = [
    "IntegerLattice",
    "QuotientStructure",
    "lattice_from_generators",
    "contains",
    "index_in",
    "lattice_sum",
    "intersect",
    "quotient_structure",
    "INFINITE",
]

#: Returned by index_in when the sublattice has strictly smaller rank.
INFINITE = inf


def _hnf(rows: list[list[int]], n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Canonical row HNF; returns (basis rows, pivot columns)."""
    work = [list(r) for r in rows if any(r)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(n):
        active = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            p = active[0]
            if p[col] < 0:
                active[0] = p = [-x for x in p]
            keep = [p]
            for r in active[1:]:
                q = r[col] // p[col]
                r2 = [a - q * b for a, b in zip(r, p)]
                if r2[col] != 0:
                    keep.append(r2)
                elif any(r2):
                    rest.append(r2)
            active = keep
        if active:
            p = active[0]
            if p[col] < 0:
                p = [-x for x in p]
            basis.append(p)
            pivots.append(col)
        work = rest
    # reduce entries above each pivot into [0, pivot)
    for k in range(len(basis)):
        c, v = pivots[k], basis[k][pivots[k]]
        for j in range(k):
            q = basis[j][c] // v
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[k])]
    return tuple(tuple(r) for r in basis), tuple(pivots)


def _reduce_against(basis, pivots, v: list[int]) -> tuple[list[int], list[int]]:
    """Back-substitute v against an HNF basis.

    Returns (residual, coefficients); v is in the lattice iff the residual is
    zero AND every pivot division was exact, which is encoded by a None
    coefficient list.
    """
    w = list(v)
    coeffs = []
    for row, c in zip(basis, pivots):
        piv = row[c]
        if w[c] % piv != 0:
            return w, None
        q = w[c] // piv
        coeffs.append(q)
        if q:
            w = [a - q * b for a, b in zip(w, row)]
    return w, coeffs


@dataclass(frozen=True)
class IntegerLattice:
    """A subgroup of Z^ambient_dim with its canonical HNF basis."""

    ambient_dim: int
    hnf_basis: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...] = field(compare=False)
    generators: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.hnf_basis)

    @property
    def is_zero(self) -> bool:
        return not self.hnf_basis

    def contains(self, v) -> bool:
        return contains(self, v)

    def basis_determinant(self) -> int:
        """Product of pivot entries: the index in Z^n when full rank."""
        return prod(row[c] for row, c in zip(self.hnf_basis, self.pivots))

    def to_json_dict(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": [list(r) for r in self.hnf_basis]}

    def __repr__(self):
        return f"IntegerLattice(dim={self.ambient_dim}, basis={list(map(list, self.hnf_basis))})"


def lattice_from_generators(ambient_dim: int, vectors) -> IntegerLattice:
    """Canonicalize a generating set; an empty set gives the zero lattice."""
    gens = []
    for v in vectors:
        t = tuple(int(x) for x in _coords_of(v))
        if len(t) != ambient_dim:
            raise DimensionMismatch(f"generator of length {len(t)} in ambient dim {ambient_dim}")
        gens.append(t)
    basis, pivots = _hnf([list(g) for g in gens], ambient_dim)
    return IntegerLattice(ambient_dim, basis, pivots, tuple(gens))


def _coords_of(v):
    coords = getattr(v, "coords", None)
    return coords if coords is not None else tuple(v)


def contains(lat: IntegerLattice, v) -> bool:
    """Exact membership by back-substitution against the canonical basis."""
    t = _coords_of(v)
    if len(t) != lat.ambient_dim:
        raise DimensionMismatch(f"vector length {len(t)} in ambient dim {lat.ambient_dim}")
    residual, coeffs = _reduce_against(lat.hnf_basis, lat.pivots, list(t))
    return coeffs is not None and not any(residual)


def _coordinates_in(sub: IntegerLattice, sup: IntegerLattice) -> list[list[int]]:
    """Rows of sub expressed over sup's basis; NotASublattice if impossible."""
    out = []
    for row in sub.hnf_basis:
        residual, coeffs = _reduce_against(sup.hnf_basis, sup.pivots, list(row))
        if coeffs is None or any(residual):
            raise NotASublattice(f"{list(row)} is not in the claimed overlattice")
        out.append(coeffs)
    return out


def index_in(sub: IntegerLattice, sup: IntegerLattice):
    """[sup : sub]; INFINITE on a rank drop, NotASublattice if sub ⊄ sup."""
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    coords = _coordinates_in(sub, sup)
    if sub.rank < sup.rank:
        return INFINITE
    diag = _snf_diagonal(coords)
    return prod(d for d in diag if d)


def lattice_sum(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    return lattice_from_generators(a.ambient_dim, a.hnf_basis + b.hnf_basis)


def intersect(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    """Intersection via HNF of the stacked block matrix [A|A; B|0].

    Rows whose left half vanishes carry exactly A ∩ B in their right half.
    """
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    n = a.ambient_dim
    rows = [list(r) + list(r) for r in a.hnf_basis] + [list(r) + [0] * n for r in b.hnf_basis]
    stacked, _ = _hnf(rows, 2 * n)
    inner = [row[n:] for row in stacked if not any(row[:n])]
    return lattice_from_generators(n, inner)


@dataclass(frozen=True)
class QuotientStructure:
    """Finite/free decomposition of a quotient of abelian groups.

    invariant_factors are the Smith divisors > 1, each dividing the next;
    free_rank counts the Z summands.
    """

    free_rank: int
    invariant_factors: tuple[int, ...]


def quotient_structure(sup: IntegerLattice, sub: IntegerLattice) -> QuotientStructure:
    """Structure of sup/sub from the Smith form of the coordinate matrix."""
    if sub.ambient_dim != sup.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    coords = _coordinates_in(sub, sup)
    diag = _snf_diagonal(coords)
    nonzero = [d for d in diag if d]
    return QuotientStructure(
        free_rank=sup.rank - len(nonzero),
        invariant_factors=tuple(d for d in nonzero if d > 1),
    )


def _snf_diagonal(mat: list[list[int]]) -> list[int]:
    """Smith normal form divisors (non-negative, divisibility chain)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return []
    a = [row[:] for row in mat]
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        stable = False
        while not stable:
            stable = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        stable = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        stable = False
        t += 1
    diag = sorted(abs(a[i][i]) for i in range(min(m, n)) if a[i][i])
    # enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
        diag.sort()
    return diag + [0] * (min(m, n) - len(diag))
