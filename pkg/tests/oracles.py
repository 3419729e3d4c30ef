"""Independent brute-force oracles used by the test suite.

Lattice oracles work from a *construction* the oracle keeps for itself
(echelon rows over known pivot columns), so containment, residue sets, and
index counting never touch the package's HNF engine.  Multiplicity oracles
recompute characters from the alternating partition-count formula and tensor
decompositions from full character products.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm, prod

from gitdescent.reps import kostant_partition, weight_multiplicities, weyl_dimension
from gitdescent.rootsys import Weight, rho, weight_to_root_coords
from gitdescent.weyl import apply, enumerate_weyl_group

# ---------------------------------------------------------------------------
# lattice oracles


@dataclass
class EchelonLattice:
    """A lattice defined by echelon generator rows over known pivot columns.

    Row k has a positive entry at pivots[k], zeros at pivots[j] for j < k,
    and arbitrary entries elsewhere, so the coefficients of any lattice
    point can be read off by sequential exact division at the pivots.  That
    decision procedure only uses the construction data, never the package's
    HNF engine.
    """

    n: int
    pivots: list[int]
    rows: list[list[int]]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coefficients_of(self, v) -> list[int] | None:
        w = list(v)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            if w[p] % row[p] != 0:
                return None
            q = w[p] // row[p]
            coeffs.append(q)
            w = [a - q * b for a, b in zip(w, row)]
        return coeffs if not any(w) else None

    def contains(self, v) -> bool:
        return self.coefficients_of(v) is not None

    def determinant(self) -> int:
        """Product of pivot entries; for full rank, det Z^n / L."""
        return prod(row[p] for row, p in zip(self.rows, self.pivots))


def random_echelon_lattice(rng, n: int, rank: int, *, max_diag: int = 3) -> EchelonLattice:
    pivots = sorted(rng.sample(range(n), rank))
    rows = []
    for k in range(rank):
        row = [0] * n
        row[pivots[k]] = rng.randint(1, max_diag)
        for j in range(n):
            if j == pivots[k] or j in pivots[:k]:
                continue
            row[j] = rng.randint(-2, 2)
        rows.append(row)
    return EchelonLattice(n, pivots, rows)


def echelon_sublattice(rng, sup: EchelonLattice, *, max_diag: int = 2) -> EchelonLattice:
    """sup composed with an upper-triangular integer matrix: a sublattice of
    the same rank whose rows still vanish at earlier pivots, keeping the
    pivot-division oracle valid."""
    r = sup.rank
    t = [[0] * r for _ in range(r)]
    for i in range(r):
        t[i][i] = rng.randint(1, max_diag)
        for j in range(i + 1, r):
            t[i][j] = rng.randint(-1, 1)
    rows = [
        [sum(t[i][j] * sup.rows[j][c] for j in range(r)) for c in range(sup.n)]
        for i in range(r)
    ]
    return EchelonLattice(sup.n, list(sup.pivots), rows)


def scrambled_generators(rng, lat: EchelonLattice, extra: int = 2) -> list[tuple[int, ...]]:
    """A messier generating set for the same lattice: the rows plus a few
    random integer combinations, shuffled."""
    gens = [tuple(r) for r in lat.rows]
    for _ in range(extra):
        combo = [0] * lat.n
        for row in lat.rows:
            c = rng.randint(-2, 2)
            combo = [a + c * b for a, b in zip(combo, row)]
        gens.append(tuple(combo))
    rng.shuffle(gens)
    return gens


def residue_set(lat: EchelonLattice, m: int) -> frozenset:
    """All residues of lattice points mod m, for m a multiple of det(L).

    Requires full rank: then det(L) * Z^n lies inside L (adjugate), so
    membership is m-periodic and v is in L iff (v mod m) is in this set.
    """
    assert lat.rank == lat.n and m % lat.determinant() == 0
    hits = []
    for v in product(range(m), repeat=lat.n):
        if lat.contains(v):
            hits.append(v)
    return frozenset(hits)


def brute_index(sup: EchelonLattice, sub: EchelonLattice) -> int:
    """[sup : sub] by counting residues modulo a common period."""
    m = lcm(sup.determinant(), sub.determinant())
    r_sup = residue_set(sup, m)
    r_sub = residue_set(sub, m)
    assert len(r_sup) % len(r_sub) == 0
    return len(r_sup) // len(r_sub)


def coefficient_box_points(gens, bounds) -> set:
    """All integer combinations of gens with the k-th coefficient bounded in
    absolute value by bounds[k]: literal box enumeration."""
    pts = set()
    ranges = [range(-b, b + 1) for b in bounds]
    n = len(gens[0])
    for combo in product(*ranges):
        v = tuple(sum(c * g[i] for c, g in zip(combo, gens)) for i in range(n))
        pts.add(v)
    return pts


# ---------------------------------------------------------------------------
# multiplicity oracles


def kostant_multiplicity(rs, lam: Weight, mu: Weight) -> int:
    """Weight multiplicity from the alternating sum of partition counts."""
    shift = rho(rs)
    target = mu + shift
    total = 0
    for w in enumerate_weyl_group(rs, 10**5):
        v = apply(rs, w, lam + shift) - target
        rc = weight_to_root_coords(rs, v)
        if all(c >= 0 for c in rc.coords):
            total += (-1) ** w.length * kostant_partition(rs, rc, height_bound=200)
    return total


def char_product_decomposition(rs, lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Decompose V(lam) x V(mu) by multiplying full characters and greedily
    peeling off highest weights."""
    ca = weight_multiplicities(rs, lam).mults
    cb = weight_multiplicities(rs, mu).mults
    prod_char: dict[Weight, int] = {}
    for w1, m1 in ca.items():
        for w2, m2 in cb.items():
            key = w1 + w2
            prod_char[key] = prod_char.get(key, 0) + m1 * m2

    top = lam + mu

    def depth(w: Weight) -> tuple:
        rc = weight_to_root_coords(rs, top - w).coords
        return (sum(rc), w.coords)

    out: dict[Weight, int] = {}
    while prod_char:
        head = min(prod_char, key=depth)
        assert head.is_dominant, head
        mult = prod_char[head]
        assert mult > 0, (head, mult)
        out[head] = mult
        for w, m in weight_multiplicities(rs, head).mults.items():
            rem = prod_char.get(w, 0) - mult * m
            if rem:
                prod_char[w] = rem
            else:
                prod_char.pop(w, None)
    assert sum(m * weyl_dimension(rs, w) for w, m in out.items()) == weyl_dimension(
        rs, lam
    ) * weyl_dimension(rs, mu)
    return out
