from fractions import Fraction

import pytest

from prudentwalks.walks import (
    SQUARE_CLASSES,
    SquareWalk,
    TriWalk,
    WalkClass,
    endpoint_stats,
    enumerate_counts,
    enumerate_tri_by_box,
    enumerate_walks,
    exact_mean,
    exact_variance,
    in_class,
    is_k_sided,
    is_prudent,
    is_triangular_prudent,
    walk_from_json,
)

# exhaustive reference counts, themselves frozen from this oracle and
# cross-checked against the series routes in test_acceptance
COUNTS = {
    WalkClass.ONE_SIDED: [1, 3, 7, 17, 41, 99, 239, 577, 1393],
    WalkClass.TWO_SIDED: [1, 4, 10, 26, 66, 168, 426, 1078, 2722],
    WalkClass.THREE_SIDED: [1, 4, 12, 34, 90, 236, 612, 1580, 4060],
    WalkClass.PRUDENT4: [1, 4, 12, 36, 100, 276, 748, 2012, 5356],
    WalkClass.TRIANGULAR: [1, 6, 30, 132, 552, 2244, 8928],
}


def test_prudence_examples():
    assert is_prudent(SquareWalk("NES"))
    assert not is_prudent(SquareWalk("NESW"))  # W points back at the origin
    assert is_prudent(SquareWalk(""))


def test_k_sided_examples():
    assert not is_k_sided(SquareWalk("ESW"), 3)  # the footnote walk
    assert is_k_sided(SquareWalk("EN"), 1)
    assert is_k_sided(SquareWalk("S"), 2)  # degenerate box: right edge
    assert not is_k_sided(SquareWalk("S"), 1)


def test_one_sided_equals_partially_directed():
    # 1-sided = self-avoiding over {N, E, W}
    for n in range(7):
        got = {w.to_text() for w in enumerate_walks(WalkClass.ONE_SIDED, n)}
        for text in got:
            assert "S" not in text
        assert len(got) == COUNTS[WalkClass.ONE_SIDED][n]


@pytest.mark.parametrize("wc", list(COUNTS))
def test_enumeration_counts(wc):
    n = len(COUNTS[wc]) - 1
    assert enumerate_counts(wc, n) == COUNTS[wc]


def test_class_inclusion_chain():
    # 1-sided subset 2-sided subset 3-sided subset prudent, on every walk
    for w in enumerate_walks(WalkClass.PRUDENT4, 6):
        flags = [is_k_sided(w, k) for k in (1, 2, 3)] + [is_prudent(w)]
        for a, b in zip(flags, flags[1:]):
            assert (not a) or b


def test_every_length2_saw_is_prudent():
    assert enumerate_counts(WalkClass.PRUDENT4, 2)[2] == 12


def test_endpoint_on_box_border():
    for wc in SQUARE_CLASSES:
        for w in enumerate_walks(wc, 5):
            x, y = w.endpoint()
            b = w.box()
            assert x in (b.x_min, b.x_max) or y in (b.y_min, b.y_max)
    for w in enumerate_walks(WalkClass.TRIANGULAR, 4):
        x, y = w.endpoint()
        b = w.box()
        assert x == b.x_min or y == b.y_min or x + y == b.s_max


def test_triangular_single_steps():
    for s in range(6):
        w = TriWalk((s,))
        assert is_triangular_prudent(w)
        assert w.box().size == 1


def test_triangular_box_spanning_small():
    assert enumerate_tri_by_box(0) == (1, {(0, 0): 1})
    total, r = enumerate_tri_by_box(1)
    assert total == 12
    assert r == {(0, 1): 4, (1, 0): 4}
    total, r = enumerate_tri_by_box(2)
    assert total == 144
    assert r[(1, 1)] == 16 and r[(0, 2)] == 32


def test_triangular_rotation_symmetry():
    # counts are invariant under the 120-degree rotation (x,y) -> (-x-y, x),
    # which maps step code s to s - 2 (mod 6)
    for n in range(1, 6):
        walks = {w.to_text() for w in enumerate_walks(WalkClass.TRIANGULAR, n)}
        rotated = {
            "".join(str((int(c) - 2) % 6) for c in text) for text in walks
        }
        assert walks == rotated


def test_two_sided_diagonal_reflection():
    # reflection in the diagonal maps N<->E and S<->W and preserves the class
    swap = {"N": "E", "E": "N", "S": "W", "W": "S"}
    for n in range(1, 7):
        walks = {w.to_text() for w in enumerate_walks(WalkClass.TWO_SIDED, n)}
        mirrored = {"".join(swap[c] for c in text) for text in walks}
        assert walks == mirrored


def test_inclusion_exclusion_against_box_formula():
    # consistency of the oracle with P(t;u) = 1 + 3R(u,u) - 3R(u,0): per box
    # size k >= 1, total = 3*(right-edge enders) - 3*(one corner's enders)
    for k in range(1, 4):
        total, r = enumerate_tri_by_box(k)
        right = sum(r.values())
        assert total == 3 * (right - r[(k, 0)])
        assert r[(0, k)] == r[(k, 0)]  # edge symmetry


def test_endpoint_stats_examples():
    st = endpoint_stats(WalkClass.TWO_SIDED, 1)
    assert dict(st["sum"]) == {1: 2, -1: 2}
    assert exact_mean(st["diff"]) == 0  # diagonal symmetry
    st3 = endpoint_stats(WalkClass.TWO_SIDED, 3)
    assert exact_mean(st3["sum"]) == Fraction(11, 13)
    assert sum(st3["sum"].values()) == 26


def test_walk_text_and_json():
    w = SquareWalk("NESW")
    assert SquareWalk.from_text(w.to_text()) == w
    assert walk_from_json(w.to_json()) == w
    t = TriWalk("0123450")
    assert TriWalk.from_text(t.to_text()) == t
    assert walk_from_json(t.to_json()) == t


def test_boxes():
    w = SquareWalk("NES")
    b = w.box()
    assert (b.x_min, b.x_max, b.y_min, b.y_max) == (0, 1, 0, 1)
    t = TriWalk("2")  # E
    tb = t.box()
    assert (tb.x_min, tb.y_min, tb.s_max, tb.size) == (0, 0, 1, 1)


def test_in_class_dispatch():
    assert in_class(SquareWalk("EN"), WalkClass.ONE_SIDED)
    assert in_class(TriWalk("21"), WalkClass.TRIANGULAR)
