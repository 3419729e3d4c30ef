import random
from fractions import Fraction

import pytest

from gitdescent.errors import DimensionMismatch, GroupTooLarge, IndexOutOfRange, NotARoot
from gitdescent.gamma import root_lattice
from gitdescent.lattice import contains
from gitdescent.rootsys import RootCoords, Weight, parse_type, rho
from gitdescent.weyl import (
    apply,
    apply_to_root,
    enumerate_weyl_group,
    from_word,
    identity,
    inversion_set,
    longest_element,
    simple_reflection,
    weyl_order,
)


def test_apply_examples():
    a1, a2 = parse_type("A1"), parse_type("A2")
    assert apply(a1, simple_reflection(a1, 1), Weight((1,))).coords == (-1,)
    w0 = longest_element(a2)
    assert apply(a2, w0, rho(a2)).coords == (-1, -1)
    assert apply(a2, simple_reflection(a2, 1), Weight((1, 0))).coords == (-1, 1)
    with pytest.raises(IndexOutOfRange):
        simple_reflection(a2, 3)
    with pytest.raises(IndexOutOfRange):
        from_word(a2, (0,))


def test_apply_to_root_examples():
    a2 = parse_type("A2")
    s1 = simple_reflection(a2, 1)
    assert apply_to_root(a2, s1, RootCoords((1, 0))).coords == (-1, 0)
    assert apply_to_root(a2, s1, RootCoords((0, 1))).coords == (1, 1)
    assert apply_to_root(a2, identity(a2), RootCoords((1, 1))).coords == (1, 1)
    with pytest.raises(NotARoot):
        apply_to_root(a2, s1, RootCoords((2, 0)))
    # result is always a root with a definite sign
    for w in enumerate_weyl_group(a2, 10):
        for r in a2.positive_roots:
            img = apply_to_root(a2, w, r)
            assert rs_sign(img) in (-1, 1)
            assert a2.is_root(img)


def rs_sign(r):
    if all(c >= 0 for c in r.coords):
        return 1
    if all(c <= 0 for c in r.coords):
        return -1
    return 0


def test_inversion_sets():
    a2 = parse_type("A2")
    assert inversion_set(a2, identity(a2)) == frozenset()
    assert inversion_set(a2, simple_reflection(a2, 1)) == {RootCoords((1, 0))}
    assert inversion_set(a2, longest_element(a2)) == frozenset(a2.positive_roots)


@pytest.mark.parametrize("name,length", [("A1", 1), ("A2", 3), ("B3", 9)])
def test_longest_element(name, length):
    rs = parse_type(name)
    w0 = longest_element(rs)
    assert w0.length == length == len(rs.positive_roots)
    assert (w0 * w0).is_identity()


def test_longest_element_acts_as_minus_one_in_b3():
    b3 = parse_type("B3")
    w0 = longest_element(b3)
    rng = random.Random(0)
    for _ in range(20):
        lam = Weight(tuple(rng.randint(-5, 5) for _ in range(3)))
        assert apply(b3, w0, lam) == -lam


def test_w0_properties_everywhere():
    for name in ["A1", "A3", "B2", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]:
        rs = parse_type(name)
        w0 = longest_element(rs)
        assert w0.length == len(rs.positive_roots), name
        assert (w0 * w0).is_identity(), name
        assert apply(rs, w0, rho(rs)) == -rho(rs), name


def test_canonical_words():
    a2 = parse_type("A2")
    assert from_word(a2, (2, 1, 2)).word == (1, 2, 1)
    assert from_word(a2, (1, 1)).word == ()
    assert from_word(a2, (2, 2, 1)).word == (1,)
    x, y = from_word(a2, (1, 2)), from_word(a2, (2, 1))
    assert x != y and x.inverse() == y


def test_enumeration_counts_and_order():
    a2 = parse_type("A2")
    els = list(enumerate_weyl_group(a2, 100))
    assert [e.word for e in els] == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
    assert len(set(els)) == 6
    b2 = parse_type("B2")
    words = [e.word for e in enumerate_weyl_group(b2, 100)]
    assert words == [
        (), (1,), (2,), (1, 2), (2, 1), (1, 2, 1), (2, 1, 2), (1, 2, 1, 2),
    ]
    assert weyl_order(parse_type("F4")) == 1152
    assert sum(1 for _ in enumerate_weyl_group(parse_type("F4"), 10**6)) == 1152
    assert weyl_order(parse_type("E7")) == 2903040
    with pytest.raises(GroupTooLarge) as exc:
        enumerate_weyl_group(parse_type("E8"), 10**6)
    assert exc.value.order == 696729600


@pytest.mark.parametrize("name", ["A3", "B3", "D4"])
def test_length_equals_inversion_count_exhaustively(name):
    rs = parse_type(name)
    for w in enumerate_weyl_group(rs, 1000):
        assert w.length == len(inversion_set(rs, w))


def test_apply_preserves_invariant_form():
    rng = random.Random(42)
    for name in ["A2", "B3", "C2", "G2", "F4"]:
        rs = parse_type(name)
        l = rs.rank
        # Gram matrix of the fundamental weights: d_i * invA[i][j] symmetrized
        gram = [
            [rs.symmetrizer[i] * rs.inv_cartan[i][j] for j in range(l)] for i in range(l)
        ]

        def form(x, y):
            return sum(
                Fraction(x.coords[i]) * gram[i][j] * y.coords[j]
                for i in range(l)
                for j in range(l)
            )

        for _ in range(10):
            x = Weight(tuple(rng.randint(-4, 4) for _ in range(l)))
            y = Weight(tuple(rng.randint(-4, 4) for _ in range(l)))
            w = from_word(rs, tuple(rng.randint(1, l) for _ in range(rng.randint(0, 8))))
            assert form(apply(rs, w, x), apply(rs, w, y)) == form(x, y)


def test_weight_minus_image_lands_in_root_lattice():
    rng = random.Random(2024)
    for name in ["A2", "B3", "C2", "D4", "G2", "F4"]:
        rs = parse_type(name)
        q = root_lattice(rs)
        for _ in range(60):
            lam = Weight(tuple(rng.randint(-6, 6) for _ in range(rs.rank)))
            w = from_word(rs, tuple(rng.randint(1, rs.rank) for _ in range(rng.randint(0, 10))))
            assert contains(q, lam - apply(rs, w, lam))


def test_cross_type_elements_rejected():
    a2, b3 = parse_type("A2"), parse_type("B3")
    with pytest.raises(DimensionMismatch):
        apply(b3, simple_reflection(a2, 1), Weight((1, 1, 1)))


def test_duality_involution_matches_diagram_automorphism():
    # -w0 permutes the fundamental weights: the reversal for A, the fork
    # swap for odd D, the order-two symmetry for E6, identity elsewhere
    def dual_perm(name):
        rs = parse_type(name)
        w0 = longest_element(rs)
        perm = []
        for i in range(rs.rank):
            e = Weight(tuple(1 if j == i else 0 for j in range(rs.rank)))
            img = -apply(rs, w0, e)
            assert sum(abs(c) for c in img.coords) == 1
            perm.append(img.coords.index(1) + 1)
        return perm

    assert dual_perm("A3") == [3, 2, 1]
    assert dual_perm("A4") == [4, 3, 2, 1]
    assert dual_perm("D5") == [1, 2, 3, 5, 4]
    assert dual_perm("D4") == [1, 2, 3, 4]
    assert dual_perm("E6") == [6, 2, 5, 4, 3, 1]
    for name in ("B3", "C3", "G2", "F4", "E7"):
        rs = parse_type(name)
        assert dual_perm(name) == list(range(1, rs.rank + 1)), name
