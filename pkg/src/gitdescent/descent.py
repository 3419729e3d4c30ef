"""The descent decision layer.

For a triple of dominant regular weights this module evaluates one necessary
condition and three sufficient conditions for the associated ample line
bundle on the triple flag variety to descend to the GIT quotient, and folds
them into an explainable tri-state verdict:

* necessary: lambda + mu + nu must lie in the root lattice Q;
* sufficient: all three weights in d * (weight lattice) and the sum in Gamma;
* sufficient: all three weights in Gamma;
* sufficient (conservative): lambda + w1 mu + w2 nu in Gamma for every pair
  (w1, w2) of Weyl group elements, an over-approximation of the pairs that
  can actually support semistable points, hence still sound for "descends".

Because the exact set of relevant pairs and root supports is not known, a
failed sufficient check proves nothing, and the verdict falls back to
Unknown rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    GroupTooLarge,
    NotARoot,
    NotDominantRegular,
    RankOutOfTableRange,
)
from .gamma import gamma_lattice, root_lattice, scaled_weight_lattice
from .lattice import (
    IntegerLattice,
    _snf_diagonal,
    contains,
    lattice_from_generators,
)
from .reps import ProbeResult, semistable_probe
from .rootsys import RootCoords, RootSystem, Weight, root_to_weight_coords
from .weyl import WeylElement, apply, enumerate_weyl_group, inversion_set, weyl_order

__all__ = [
    "RULE_NECESSARY",
    "RULE_SCALED_GAMMA",
    "RULE_GAMMA_TRIPLE",
    "RULE_ALL_PAIRS",
    "RULE_PROBE",
    "OUTCOME_DESCENDS",
    "OUTCOME_DOES_NOT_DESCEND",
    "OUTCOME_UNKNOWN",
    "RuleRecord",
    "DescentVerdict",
    "StabilizerStructure",
    "necessary_condition",
    "sufficient_scaled_gamma",
    "sufficient_gamma_triple",
    "pairing_character",
    "generic_pair_lattice",
    "all_pairs_in_gamma",
    "stabilizer_structure",
    "verdict",
    "verdict_from_json_dict",
]

RULE_NECESSARY = "necessary_root_lattice"
RULE_SCALED_GAMMA = "sufficient_scaled_gamma"
RULE_GAMMA_TRIPLE = "sufficient_gamma_triple"
RULE_ALL_PAIRS = "sufficient_all_pairs_gamma"
RULE_PROBE = "semistable_probe"

OUTCOME_DESCENDS = "Descends"
OUTCOME_DOES_NOT_DESCEND = "DoesNotDescend"
OUTCOME_UNKNOWN = "Unknown"


@dataclass(frozen=True, eq=True)
class RuleRecord:
    """One evaluated (or skipped) rule with machine-readable witness data."""

    rule: str
    result: bool | None
    witness: dict = field(default_factory=dict)


@dataclass(frozen=True, eq=True)
class DescentVerdict:
    """Tri-state outcome plus the ordered trace of rules that produced it."""

    type_name: str
    rank: int
    lam: Weight
    mu: Weight
    nu: Weight
    outcome: str
    reasons: tuple[RuleRecord, ...]
    probe: ProbeResult | None = None

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_name,
            "rank": self.rank,
            "lambda": list(self.lam.coords),
            "mu": list(self.mu.coords),
            "nu": list(self.nu.coords),
            "outcome": self.outcome,
            "reasons": [
                {"rule": r.rule, "result": r.result, "witness": r.witness}
                for r in self.reasons
            ],
            "probe": (
                None
                if self.probe is None
                else {"nonempty": self.probe.nonempty, "n": self.probe.n}
            ),
        }


def verdict_from_json_dict(data: dict) -> DescentVerdict:
    probe = data.get("probe")
    return DescentVerdict(
        type_name=data["type"],
        rank=data["rank"],
        lam=Weight(tuple(data["lambda"])),
        mu=Weight(tuple(data["mu"])),
        nu=Weight(tuple(data["nu"])),
        outcome=data["outcome"],
        reasons=tuple(
            RuleRecord(r["rule"], r["result"], r["witness"]) for r in data["reasons"]
        ),
        probe=None if probe is None else ProbeResult(probe["nonempty"], probe["n"]),
    )


@dataclass(frozen=True)
class StabilizerStructure:
    """Structure of the common kernel in the torus of a set of root characters:
    a torus factor plus a finite abelian part given by invariant factors."""

    torus_rank: int
    finite_factors: tuple[int, ...]

    @property
    def divisible(self) -> bool:
        return not self.finite_factors


def _require_dominant_regular(*weights):
    for w in weights:
        if not w.is_dominant_regular:
            raise NotDominantRegular(f"{w.coords} is not dominant regular")


def necessary_condition(rs: RootSystem, lam: Weight, mu: Weight, nu: Weight) -> bool:
    """Whether lambda + mu + nu lies in the root lattice.

    Failure refutes descent outright; success proves nothing by itself.
    Inputs must be dominant regular, matching the ample line bundles the
    refutation speaks about.
    """
    _require_dominant_regular(lam, mu, nu)
    return contains(root_lattice(rs), lam + mu + nu)


def sufficient_scaled_gamma(rs: RootSystem, lam: Weight, mu: Weight, nu: Weight) -> bool:
    """Main sufficient condition: each weight divisible by d and the sum in
    Gamma.  Uniform across GIT classes.

    A pure lattice predicate: no dominance requirement, so it stays usable
    on boundary examples and generator sanity checks.
    """
    d_lattice = scaled_weight_lattice(rs, rs.d)
    gam = gamma_lattice(rs)
    return all(contains(d_lattice, w) for w in (lam, mu, nu)) and contains(
        gam, lam + mu + nu
    )


def sufficient_gamma_triple(rs: RootSystem, lam: Weight, mu: Weight, nu: Weight) -> bool:
    """Weaker sufficient condition (sharper only for G2/F4): all three
    weights individually in Gamma."""
    gam = gamma_lattice(rs)
    return all(contains(gam, w) for w in (lam, mu, nu))


def pairing_character(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    w1: WeylElement,
    w2: WeylElement,
) -> Weight:
    """The character lambda + w1 mu + w2 nu whose triviality on a point
    stabilizer controls the fiber action."""
    return lam + apply(rs, w1, mu) + apply(rs, w2, nu)


def generic_pair_lattice(rs: RootSystem, w1: WeylElement, w2: WeylElement) -> IntegerLattice:
    """Span of the roots supporting a generic point over the pair (w1, w2):
    the union of the inversion sets of the inverses, in weight coordinates."""
    roots = set(inversion_set(rs, w1.inverse())) | set(inversion_set(rs, w2.inverse()))
    return lattice_from_generators(
        rs.rank, [root_to_weight_coords(rs, r) for r in sorted(roots, key=lambda r: r.coords)]
    )


def _all_pairs_scan(rs, lam, mu, nu, size_bound):
    order = weyl_order(rs)
    if order * order > size_bound:
        raise GroupTooLarge(order * order, size_bound)
    gam = gamma_lattice(rs)
    elements = list(enumerate_weyl_group(rs, size_bound))
    mu_images = [apply(rs, w, mu) for w in elements]
    nu_images = [apply(rs, w, nu) for w in elements]
    checked = 0
    for w1, m_img in zip(elements, mu_images):
        base = lam + m_img
        for w2, n_img in zip(elements, nu_images):
            checked += 1
            if not contains(gam, base + n_img):
                return False, {
                    "counterexample": {
                        "w1": list(w1.word),
                        "w2": list(w2.word),
                        "character": list((base + n_img).coords),
                    },
                    "pairs_checked": checked,
                }
    return True, {"pairs_checked": checked}


def all_pairs_in_gamma(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    size_bound: int = 10**6,
) -> bool:
    """Conservative exhaustive check of lambda + w1 mu + w2 nu in Gamma over
    the full W x W; true implies descent.

    Raises GroupTooLarge when |W|^2 exceeds size_bound; the check is
    exhaustive or refused, never partial.
    """
    ok, _ = _all_pairs_scan(rs, lam, mu, nu, size_bound)
    return ok


def stabilizer_structure(rs: RootSystem, roots) -> StabilizerStructure:
    """Structure of the subgroup of the torus killed by a set of roots.

    The kernel of the characters of S inside the rank-ell torus is a torus of
    dimension ell - rank(ZS) times the finite group dual to the torsion of
    Z^ell / ZS, read off the Smith form of the weight-coordinate matrix.
    """
    rows = []
    for r in roots:
        rc = r if isinstance(r, RootCoords) else RootCoords(tuple(r))
        if not rs.is_root(rc):
            raise NotARoot(f"{rc.coords} is not a root of {rs.type_name}")
        rows.append(list(root_to_weight_coords(rs, rc).coords))
    if not rows:
        return StabilizerStructure(torus_rank=rs.rank, finite_factors=())
    diag = _snf_diagonal(rows)
    nonzero = [x for x in diag if x]
    return StabilizerStructure(
        torus_rank=rs.rank - len(nonzero),
        finite_factors=tuple(x for x in nonzero if x > 1),
    )


def verdict(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    nu: Weight,
    *,
    n_max: int = 8,
    size_bound: int = 10**6,
    run_probe: bool = False,
) -> DescentVerdict:
    """Evaluate all rules in a fixed order and combine them.

    The necessary condition is decided first; its failure refutes descent.
    The two cheap sufficient conditions are always evaluated for the trace.
    The exhaustive pair scan only runs when it could still change the
    outcome, and is recorded as not-applicable when the group exceeds the
    size bound or the type has no tabulated Gamma.
    """
    _require_dominant_regular(lam, mu, nu)
    reasons: list[RuleRecord] = []

    sum_w = lam + mu + nu
    necessary = contains(root_lattice(rs), sum_w)
    reasons.append(
        RuleRecord(
            RULE_NECESSARY,
            necessary,
            {"sum": list(sum_w.coords), "in_root_lattice": necessary},
        )
    )

    sufficient_hit = False
    try:
        d_lattice = scaled_weight_lattice(rs, rs.d)
        gam = gamma_lattice(rs)
    except RankOutOfTableRange as exc:
        gam = None
        for rule in (RULE_SCALED_GAMMA, RULE_GAMMA_TRIPLE):
            reasons.append(RuleRecord(rule, None, {"skipped": str(exc)}))
    if gam is not None:
        in_d = [contains(d_lattice, w) for w in (lam, mu, nu)]
        sum_in_gamma = contains(gam, sum_w)
        scaled_ok = all(in_d) and sum_in_gamma
        reasons.append(
            RuleRecord(
                RULE_SCALED_GAMMA,
                scaled_ok,
                {
                    "d": rs.d,
                    "weights_in_scaled_lattice": in_d,
                    "sum_in_gamma": sum_in_gamma,
                },
            )
        )
        in_gamma = [contains(gam, w) for w in (lam, mu, nu)]
        triple_ok = all(in_gamma)
        reasons.append(
            RuleRecord(RULE_GAMMA_TRIPLE, triple_ok, {"weights_in_gamma": in_gamma})
        )
        sufficient_hit = scaled_ok or triple_ok

        if not necessary or sufficient_hit:
            reasons.append(
                RuleRecord(RULE_ALL_PAIRS, None, {"skipped": "outcome already decided"})
            )
        else:
            try:
                ok, witness = _all_pairs_scan(rs, lam, mu, nu, size_bound)
                reasons.append(RuleRecord(RULE_ALL_PAIRS, ok, witness))
                sufficient_hit = sufficient_hit or ok
            except GroupTooLarge as exc:
                reasons.append(
                    RuleRecord(
                        RULE_ALL_PAIRS,
                        None,
                        {"skipped": "group too large", "pairs": exc.order},
                    )
                )
    else:
        reasons.append(
            RuleRecord(RULE_ALL_PAIRS, None, {"skipped": "no tabulated Gamma"})
        )

    if not necessary:
        outcome = OUTCOME_DOES_NOT_DESCEND
    elif sufficient_hit:
        outcome = OUTCOME_DESCENDS
    else:
        outcome = OUTCOME_UNKNOWN

    probe = None
    if run_probe:
        try:
            probe = semistable_probe(rs, lam, mu, nu, n_max)
        except Exception as exc:
            # callers can still read the rules evaluated before the probe died
            exc.partial_reasons = tuple(reasons)
            raise
        reasons.append(
            RuleRecord(
                RULE_PROBE,
                None,
                {"nonempty": probe.nonempty, "n": probe.n},
            )
        )

    return DescentVerdict(
        type_name=rs.type_name,
        rank=rs.rank,
        lam=lam,
        mu=mu,
        nu=nu,
        outcome=outcome,
        reasons=tuple(reasons),
        probe=probe,
    )
