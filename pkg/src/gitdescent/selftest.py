"""Embedded example suite: deterministic checks of the worked examples the
package is built around.  Used by ``gitdescent selftest``."""

from __future__ import annotations

from .descent import (
    OUTCOME_DESCENDS,
    OUTCOME_DOES_NOT_DESCEND,
    OUTCOME_UNKNOWN,
    pairing_character,
    stabilizer_structure,
    verdict,
)
from .errors import GroupTooLarge
from .gamma import gamma_lattice, root_lattice, scaled_weight_lattice
from .lattice import contains, index_in
from .reps import semistable_probe, triple_invariant_dim
from .rootsys import RootCoords, Weight, parse_type, rho
from .weyl import enumerate_weyl_group, longest_element

EXPECTED_THETA = {
    "A1": (1,), "A2": (1, 1), "A3": (1, 1, 1), "A4": (1, 1, 1, 1), "A5": (1,) * 5,
    "B3": (1, 2, 2), "B4": (1, 2, 2, 2), "B5": (1, 2, 2, 2, 2),
    "C2": (2, 1), "C3": (2, 2, 1), "C4": (2, 2, 2, 1),
    "D4": (1, 2, 1, 1), "D5": (1, 2, 2, 1, 1), "D6": (1, 2, 2, 2, 1, 1),
    "G2": (3, 2), "F4": (2, 3, 4, 2),
    "E6": (1, 2, 2, 3, 2, 1), "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}
EXPECTED_D = {
    "A1": 1, "A2": 1, "A3": 1, "A4": 1, "A5": 1,
    "B3": 2, "B4": 2, "B5": 2, "C2": 2, "C3": 2, "C4": 2,
    "D4": 2, "D5": 2, "D6": 2, "G2": 6, "F4": 12,
    "E6": 6, "E7": 12, "E8": 60,
}


def _check_theta_table():
    for name, theta in EXPECTED_THETA.items():
        rs = parse_type(name)
        assert rs.theta.coords == theta, f"{name}: theta {rs.theta.coords}"
        assert rs.d == EXPECTED_D[name], f"{name}: d {rs.d}"


def _check_root_counts():
    expected = {"A3": 6, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E8": 120}
    for name, count in expected.items():
        rs = parse_type(name)
        assert len(rs.positive_roots) == count, name


def _check_sl2_parity():
    a1 = parse_type("A1")
    v = verdict(a1, Weight((1,)), Weight((1,)), Weight((1,)))
    assert v.outcome == OUTCOME_DOES_NOT_DESCEND
    v = verdict(a1, Weight((1,)), Weight((1,)), Weight((2,)))
    assert v.outcome == OUTCOME_DESCENDS
    v = verdict(a1, Weight((2,)), Weight((2,)), Weight((2,)))
    assert v.outcome == OUTCOME_DESCENDS


def _check_sl3_top_triple():
    a2 = parse_type("A2")
    two_rho, one_rho = Weight((2, 2)), Weight((1, 1))
    v = verdict(a2, two_rho, one_rho, one_rho, run_probe=True)
    assert v.outcome == OUTCOME_DESCENDS
    assert v.probe is not None and v.probe.nonempty and v.probe.n == 1
    w0 = longest_element(a2)
    chi = pairing_character(a2, two_rho, one_rho, one_rho, w0, w0)
    assert chi.coords == (0, 0)
    assert triple_invariant_dim(a2, two_rho, one_rho, one_rho) == 1


def _check_top_triple_all_types():
    for name in ("A1", "B3", "C2", "G2"):
        rs = parse_type(name)
        two_rho = 2 * rho(rs)
        r = rho(rs)
        assert triple_invariant_dim(rs, two_rho, r, r) == 1, name
        w0 = longest_element(rs)
        assert pairing_character(rs, two_rho, r, r, w0, w0).coords == (0,) * rs.rank


def _check_b3_unknown():
    b3 = parse_type("B3")
    two_rho = Weight((2, 2, 2))
    v = verdict(b3, two_rho, two_rho, two_rho)
    assert v.outcome == OUTCOME_UNKNOWN
    assert v.reasons[0].result is True  # sum is in Q


def _check_stabilizers():
    a1, a2 = parse_type("A1"), parse_type("A2")
    st = stabilizer_structure(a1, [RootCoords((1,))])
    assert st.torus_rank == 0 and st.finite_factors == (2,)
    st = stabilizer_structure(a2, [RootCoords((1, 0)), RootCoords((0, 1))])
    assert st.torus_rank == 0 and st.finite_factors == (3,)
    st = stabilizer_structure(a2, [RootCoords((1, 0))])
    assert st.torus_rank == 1 and st.divisible


def _check_gamma_inclusions():
    for name in EXPECTED_THETA:
        rs = parse_type(name)
        q, gam = root_lattice(rs), gamma_lattice(rs)
        for row in q.hnf_basis:
            assert contains(gam, tuple(rs.d * x for x in row)), f"dQ in Gamma: {name}"
        for row in gam.hnf_basis:
            assert contains(q, row), f"Gamma in Q: {name}"
    g2 = parse_type("G2")
    assert index_in(gamma_lattice(g2), root_lattice(g2)) == 12
    for name in ("G2", "F4"):
        rs = parse_type(name)
        d_lat = scaled_weight_lattice(rs, rs.d)
        for row in d_lat.hnf_basis:
            assert contains(gamma_lattice(rs), row), f"dL in Gamma: {name}"


def _check_enumeration():
    assert sum(1 for _ in enumerate_weyl_group(parse_type("A2"), 100)) == 6
    assert sum(1 for _ in enumerate_weyl_group(parse_type("G2"), 100)) == 12
    assert sum(1 for _ in enumerate_weyl_group(parse_type("F4"), 10**6)) == 1152
    try:
        enumerate_weyl_group(parse_type("E8"), 10**6)
    except GroupTooLarge as exc:
        assert exc.order == 696729600
    else:
        raise AssertionError("E8 enumeration should refuse")


def _check_probe_examples():
    a1 = parse_type("A1")
    pr = semistable_probe(a1, Weight((1,)), Weight((1,)), Weight((1,)), 4)
    assert pr.nonempty and pr.n == 2
    pr = semistable_probe(a1, Weight((1,)), Weight((1,)), Weight((4,)), 6)
    assert not pr.nonempty and pr.n == 6


CHECKS = [
    ("theta table", _check_theta_table),
    ("positive root counts", _check_root_counts),
    ("sl2 parity criterion", _check_sl2_parity),
    ("sl3 top triple descends", _check_sl3_top_triple),
    ("top triple invariants across types", _check_top_triple_all_types),
    ("b3 scaled top triple is unknown", _check_b3_unknown),
    ("rank one and two stabilizers", _check_stabilizers),
    ("gamma inclusions", _check_gamma_inclusions),
    ("weyl enumeration counts", _check_enumeration),
    ("probe examples", _check_probe_examples),
]


def run(stream) -> int:
    """Run every check; print one line per check; return the failure count."""
    failures = 0
    for name, check in CHECKS:
        try:
            check()
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures += 1
            print(f"FAIL {name}: {exc}", file=stream)
        else:
            print(f"PASS {name}", file=stream)
    total = len(CHECKS)
    print(f"{total - failures}/{total} checks passed", file=stream)
    return failures
