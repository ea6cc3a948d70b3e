import random
from fractions import Fraction

import pytest

from prudentwalks.sampler import (
    ExtTable,
    ResourceBudgetError,
    UniformSampler,
    estimate_entries,
    exact_distribution,
    kinetic_sample,
    uniform_sample,
)
from prudentwalks.walks import (
    WalkClass,
    enumerate_counts,
    in_class,
    is_prudent,
)


def test_ext_table_hand_values():
    # hand expansion of the 2-sided rule: Ex((I;0),1) = 3, Ex((F;1),1) = 2,
    # so p_2 = 2*3 + 2*2 = 10
    table = ExtTable(WalkClass.TWO_SIDED, 2)
    assert table.ex((0, 0), 1) == 3
    assert table.ex((2, 1), 1) == 2
    assert table.root_total() == 10


def test_ext_table_counts_match_oracle():
    for wc, n in [
        (WalkClass.ONE_SIDED, 12),
        (WalkClass.TWO_SIDED, 12),
        (WalkClass.THREE_SIDED, 11),
        (WalkClass.PRUDENT4, 10),
        (WalkClass.TRIANGULAR, 9),
    ]:
        assert ExtTable(wc, n).counts() == enumerate_counts(wc, n)


def test_ext_table_root_total_26():
    assert ExtTable(WalkClass.TWO_SIDED, 3).root_total() == 26


def test_budget_guard():
    est = estimate_entries(WalkClass.PRUDENT4, 200)
    with pytest.raises(ResourceBudgetError) as err:
        ExtTable(WalkClass.PRUDENT4, 200, max_entries=1_000_000)
    assert err.value.estimate == est
    assert est > 1_000_000


def test_exact_uniformity_small_n():
    # symbolic path probabilities: exactly 1/p_n per walk
    for wc in WalkClass:
        for n in (2, 4):
            dist = exact_distribution(wc, n)
            pn = enumerate_counts(wc, n)[n]
            assert len(dist) == pn
            assert set(dist.values()) == {Fraction(1, pn)}
            assert all(in_class(w, wc) for w in dist)


def test_sample_determinism():
    for wc in WalkClass:
        a = uniform_sample(wc, 25, seed=987)
        b = uniform_sample(wc, 25, seed=987)
        assert a == b
        c = uniform_sample(wc, 25, seed=988)
        assert a != c or wc is WalkClass.ONE_SIDED  # different seed, almost surely


def test_n1_uniform_over_steps():
    # length-1: every unit step with equal probability
    for wc, arity in [
        (WalkClass.TWO_SIDED, 4),
        (WalkClass.TRIANGULAR, 6),
    ]:
        dist = exact_distribution(wc, 1)
        assert len(dist) == arity
        assert set(dist.values()) == {Fraction(1, arity)}


def test_sampled_walks_are_members():
    rng = random.Random(5150)
    for wc in WalkClass:
        sampler = UniformSampler(wc, 40)
        for _ in range(40):
            assert in_class(sampler.sample(rng), wc)


def test_sampler_chi_square_smoke():
    # cheap consistency proxy for the full acceptance chi-square: frequencies
    # of the 10 length-2 2-sided walks over 20k draws stay within 5 sigma
    rng = random.Random(31337)
    sampler = UniformSampler(WalkClass.TWO_SIDED, 2)
    counts = {}
    trials = 20_000
    for _ in range(trials):
        w = sampler.sample(rng)
        counts[w.to_text()] = counts.get(w.to_text(), 0) + 1
    assert len(counts) == 10
    expected = trials / 10
    sigma = (trials * 0.1 * 0.9) ** 0.5
    for v in counts.values():
        assert abs(v - expected) < 5 * sigma


def test_zero_length():
    assert len(uniform_sample(WalkClass.TWO_SIDED, 0, seed=1)) == 0


def test_kinetic_sampler():
    w = kinetic_sample(500, seed=17)
    assert len(w) == 500
    assert is_prudent(w)
    assert kinetic_sample(500, seed=17) == w
    # n=1: uniform over the four steps
    seen = {kinetic_sample(1, seed=s).steps[0] for s in range(60)}
    assert seen == {0, 1, 2, 3}


def test_kinetic_step_probability_example():
    # after N the three prudent continuations are N, E, W: the kinetic
    # probability of the walk NE is 1/4 * 1/3
    hits = 0
    trials = 24_000
    rng = random.Random(2)
    for _ in range(trials):
        if kinetic_sample(2, rng).to_text() == "NE":
            hits += 1
    assert abs(hits / trials - 1 / 12) < 0.01


def test_shared_table_many_samplers():
    table = ExtTable(WalkClass.THREE_SIDED, 30)
    s1 = UniformSampler(WalkClass.THREE_SIDED, 30, table=table)
    s2 = UniformSampler(WalkClass.THREE_SIDED, 30, table=table)
    a = s1.sample(random.Random(4))
    b = s2.sample(random.Random(4))
    assert a == b
