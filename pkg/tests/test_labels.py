from collections import Counter

import pytest

from prudentwalks.labels import RULES
from prudentwalks.walks import WalkClass, enumerate_walks


def _reachable_plabels(rules, depth):
    seen = set(rules.root)
    frontier = list(rules.root)
    for _ in range(depth - 1):
        nxt = []
        for p in frontier:
            for c in rules.p_children(p):
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


@pytest.mark.parametrize("wc", list(WalkClass))
def test_refinement_coherence(wc):
    # the L-projection of the P-children multiset equals the L-children
    # multiset of the L-projection, for every reachable label
    rules = RULES[wc]
    for p in _reachable_plabels(rules, 9):
        left = Counter(rules.l_of_p(c) for c in rules.p_children(p))
        right = Counter(rules.l_children(rules.l_of_p(p)))
        assert left == right, p


def test_two_sided_rule_examples():
    rules = RULES[WalkClass.TWO_SIDED]
    # (I;0) -> {(I;0), (I;0), (F;1)} as an L-multiset
    got = Counter(rules.l_children((0, 0)))
    assert got == Counter({(0, 0): 2, (2, 1): 1})


def test_one_sided_rule():
    rules = RULES[WalkClass.ONE_SIDED]
    assert Counter(rules.l_children((0,))) == Counter({(0,): 1, (1,): 2})
    assert Counter(rules.l_children((1,))) == Counter({(0,): 1, (1,): 1})


def test_triangular_root_children():
    rules = RULES[WalkClass.TRIANGULAR]
    assert len(rules.root) == 6
    steps = sorted(rules.step_of(p) for p in rules.root)
    assert steps == [0, 1, 2, 3, 4, 5]
    for p in rules.root:
        assert (p[1], p[2]) == (0, 1)


def test_three_sided_f_special_child():
    # the width-0 descending walk has the extra West child (I_h; i, 1 | 3)
    rules = RULES[WalkClass.THREE_SIDED]
    kids = rules.p_children((4, 2, 0, 1))  # F; i=2, j=0, d=1
    assert (1, 2, 1, 3) in kids
    assert len(kids) == 3


def test_four_sided_doubled_children():
    # I-label with i = j = 0: both corner branches fire, duplicating the child
    rules = RULES[WalkClass.PRUDENT4]
    got = Counter(rules.l_children((0, 0, 0, 1)))
    assert got == Counter({(0, 0, 0, 2): 1, (0, 0, 1, 1): 2})


@pytest.mark.parametrize("wc,n", [
    (WalkClass.ONE_SIDED, 8),
    (WalkClass.TWO_SIDED, 8),
    (WalkClass.THREE_SIDED, 8),
    (WalkClass.PRUDENT4, 8),
    (WalkClass.TRIANGULAR, 6),
])
def test_good_labelling_bijection(wc, n):
    # the refined tree reconstructs every walk of the class exactly once:
    # this is the label-soundness check against brute-force geometry
    rules = RULES[wc]
    out = []

    def rec(p, steps, depth):
        if depth == n:
            out.append(steps)
            return
        for c in rules.p_children(p):
            rec(c, steps + (rules.step_of(c),), depth + 1)

    for p in rules.root:
        rec(p, (rules.step_of(p),), 1)
    real = sorted(w.steps for w in enumerate_walks(wc, n))
    assert sorted(out) == real
    assert len(set(out)) == len(out)
