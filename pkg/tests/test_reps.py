import random
from itertools import permutations

import pytest

from gitdescent.errors import NotDominant, NotDominantRegular, WorkBoundExceeded
from gitdescent.reps import (
    kostant_partition,
    semistable_probe,
    tensor_decomposition,
    tensor_multiplicity,
    triple_invariant_dim,
    weight_multiplicities,
    weyl_dimension,
)
from gitdescent.rootsys import RootCoords, Weight, parse_type, rho, weight_to_root_coords
from gitdescent.weyl import apply, longest_element
from oracles import char_product_decomposition, kostant_multiplicity


def dominant_weights_up_to(rs, coord_sum):
    from itertools import product

    for coords in product(range(coord_sum + 1), repeat=rs.rank):
        if sum(coords) <= coord_sum:
            yield Weight(coords)


def test_weyl_dimension_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    for m in range(6):
        assert weyl_dimension(a1, Weight((m,))) == m + 1
    assert weyl_dimension(a2, Weight((1, 1))) == 8
    assert weyl_dimension(a2, Weight((0, 0))) == 1
    assert weyl_dimension(a2, Weight((1, 0))) == 3
    assert weyl_dimension(parse_type("G2"), Weight((1, 0))) == 7
    assert weyl_dimension(parse_type("G2"), Weight((0, 1))) == 14
    with pytest.raises(NotDominant):
        weyl_dimension(a2, Weight((-1, 0)))


def test_character_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    ct = weight_multiplicities(a1, Weight((2,)))
    assert {w.coords[0]: m for w, m in ct.mults.items()} == {2: 1, 0: 1, -2: 1}
    ct = weight_multiplicities(a2, Weight((1, 1)))
    assert ct.mults[Weight((0, 0))] == 2
    assert ct.dimension == 8
    ct = weight_multiplicities(a2, Weight((1, 0)))
    assert ct.dimension == 3 and all(m == 1 for m in ct.mults.values())


def test_character_invariants():
    rng = random.Random(3)
    for name in ["A2", "B2", "C2", "G2"]:
        rs = parse_type(name)
        lam = Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
        ct = weight_multiplicities(rs, lam)
        assert ct.dimension == weyl_dimension(rs, lam)
        # W-invariance on the simple reflections
        from gitdescent.weyl import simple_reflection

        for i in range(1, rs.rank + 1):
            s = simple_reflection(rs, i)
            for w, m in ct.mults.items():
                assert ct.mults[apply(rs, s, w)] == m
        # support lies under the highest weight
        for w in ct.mults:
            rc = weight_to_root_coords(rs, lam - w)
            assert all(c >= 0 for c in rc.coords)


def test_kostant_partition_examples():
    a2, b2 = parse_type("A2"), parse_type("B2")
    assert kostant_partition(a2, RootCoords((0, 0))) == 1
    assert kostant_partition(a2, RootCoords((1, 0))) == 1
    assert kostant_partition(a2, RootCoords((1, 1))) == 2
    assert kostant_partition(a2, RootCoords((2, 1))) == 2  # a1+(a1+a2), a1+a1+a2
    assert kostant_partition(b2, RootCoords((1, 1))) == 2
    assert kostant_partition(b2, RootCoords((1, 2))) == 3  # strings through a1+2a2
    assert kostant_partition(a2, RootCoords((-1, 0))) == 0
    with pytest.raises(WorkBoundExceeded):
        kostant_partition(parse_type("D4"), RootCoords((1, 1, 1, 1)))
    with pytest.raises(WorkBoundExceeded):
        kostant_partition(a2, RootCoords((50, 50)), height_bound=40)


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_freudenthal_matches_kostant_formula(name):
    rs = parse_type(name)
    for lam in dominant_weights_up_to(rs, 4):
        ct = weight_multiplicities(rs, lam)
        seen_dominant = [w for w in ct.mults if w.is_dominant]
        for mu in seen_dominant:
            assert ct.mults[mu] == kostant_multiplicity(rs, lam, mu), (lam, mu)


def test_tensor_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    assert tensor_multiplicity(a1, Weight((1,)), Weight((1,)), Weight((2,))) == 1
    assert tensor_multiplicity(a2, Weight((1, 1)), Weight((1, 1)), Weight((2, 2))) == 1
    assert tensor_multiplicity(a2, Weight((1, 0)), Weight((1, 0)), Weight((0, 0))) == 0
    dec = tensor_decomposition(a2, Weight((1, 1)), Weight((1, 1)))
    assert dec == {
        Weight((2, 2)): 1,
        Weight((3, 0)): 1,
        Weight((0, 3)): 1,
        Weight((1, 1)): 2,
        Weight((0, 0)): 1,
    }


@pytest.mark.parametrize("name", ["A1", "A2", "C2"])
def test_klimyk_matches_character_product(name):
    rs = parse_type(name)
    small = [lam for lam in dominant_weights_up_to(rs, 3) if weyl_dimension(rs, lam) <= 40]
    rng = random.Random(11)
    pairs = [(a, b) for a in small for b in small]
    rng.shuffle(pairs)
    for lam, mu in pairs[:25]:
        assert tensor_decomposition(rs, lam, mu) == char_product_decomposition(rs, lam, mu)


@pytest.mark.parametrize("name", ["A1", "A2", "C2"])
def test_klimyk_matches_character_product_larger_sample(name):
    rs = parse_type(name)
    pool = [
        lam for lam in dominant_weights_up_to(rs, 8) if weyl_dimension(rs, lam) <= 200
    ]
    rng = random.Random(29)
    for _ in range(6):
        lam, mu = rng.choice(pool), rng.choice(pool)
        assert tensor_decomposition(rs, lam, mu) == char_product_decomposition(rs, lam, mu)


def test_klimyk_in_types_with_multiple_root_lengths():
    # exercises the dominant-chamber walk where the Cartan entries are least
    # symmetric; B3 and G2 back the top-triple acceptance path
    g2, b3 = parse_type("G2"), parse_type("B3")
    for rs, pairs in [
        (g2, [((1, 0), (1, 0)), ((0, 1), (1, 0)), ((1, 1), (1, 0)), ((2, 2), (1, 1))]),
        (b3, [((1, 0, 0), (1, 0, 0)), ((1, 1, 1), (1, 0, 0)), ((0, 0, 2), (0, 0, 1))]),
    ]:
        for a, b in pairs:
            lam, mu = Weight(a), Weight(b)
            assert tensor_decomposition(rs, lam, mu) == char_product_decomposition(rs, lam, mu)
    # the G2 adjoint sits at the highest root with zero-weight space of rank size
    adj = weight_multiplicities(g2, Weight((0, 1)))
    assert adj.dimension == 14 and adj.mults[Weight((0, 0))] == 2


def test_dimension_consistency():
    rng = random.Random(8)
    for name in ["A2", "B2", "G2"]:
        rs = parse_type(name)
        for _ in range(5):
            lam = Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
            mu = Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
            dec = tensor_decomposition(rs, lam, mu)
            total = sum(m * weyl_dimension(rs, w) for w, m in dec.items())
            assert total == weyl_dimension(rs, lam) * weyl_dimension(rs, mu)


def test_triple_invariant_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    assert triple_invariant_dim(a2, Weight((2, 2)), Weight((1, 1)), Weight((1, 1))) == 1
    assert triple_invariant_dim(a1, Weight((1,)), Weight((1,)), Weight((1,))) == 0
    assert triple_invariant_dim(a2, Weight((0, 0)), Weight((0, 0)), Weight((0, 0))) == 1
    assert triple_invariant_dim(a2, Weight((1, 1)), Weight((1, 1)), Weight((1, 1))) == 2


def test_triple_invariant_symmetry():
    rng = random.Random(17)
    for name in ["A2", "B2", "C2"]:
        rs = parse_type(name)
        for _ in range(4):
            trip = [
                Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank))) for _ in range(3)
            ]
            vals = {triple_invariant_dim(rs, *p) for p in permutations(trip)}
            assert len(vals) == 1


def test_cartan_component_always_present():
    rng = random.Random(23)
    for name in ["A2", "B3", "C2", "G2"]:
        rs = parse_type(name)
        w0 = longest_element(rs)
        for _ in range(4):
            lam = Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
            mu = Weight(tuple(rng.randint(0, 2) for _ in range(rs.rank)))
            top = -apply(rs, w0, lam + mu)
            assert triple_invariant_dim(rs, top, lam, mu) >= 1


def test_probe_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    pr = semistable_probe(a1, Weight((1,)), Weight((1,)), Weight((1,)), 4)
    assert pr.nonempty and pr.n == 2
    pr = semistable_probe(a2, Weight((2, 2)), Weight((1, 1)), Weight((1, 1)), 2)
    assert pr.nonempty and pr.n == 1
    pr = semistable_probe(a1, Weight((1,)), Weight((1,)), Weight((4,)), 6)
    assert not pr.nonempty and pr.n == 6
    with pytest.raises(NotDominantRegular):
        semistable_probe(a2, Weight((1, 0)), Weight((1, 1)), Weight((1, 1)), 2)


def test_work_bounds_report_scale():
    a2 = parse_type("A2")
    with pytest.raises(WorkBoundExceeded) as exc:
        semistable_probe(
            a2, Weight((9, 9)), Weight((9, 9)), Weight((9, 9)), 8, support_bound=50
        )
    assert exc.value.at_scale is not None
