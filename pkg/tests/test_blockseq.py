import math
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multlab.blockseq import (
    BlockSequence,
    blocks_ending_at,
    estimated_digits,
    generate_block_sequence,
    nonempty_subsets_in_block_order,
    normalize_index_set,
    precedes,
    subset_sum,
    verify_block_divisibility,
)

from oracles import powerset_sums


def test_frozen_initial_terms():
    seq = generate_block_sequence(4)
    assert seq.terms == (1, 1, 2, 144, 29720977239060172800)


def test_fifth_term_digit_count():
    seq = generate_block_sequence(5)
    assert len(str(seq.terms[5])) == 332
    assert estimated_digits(5) == 332


def test_recurrence_against_direct_product():
    # independent recomputation: s_{m+1} as a plain product over subsets
    seq = generate_block_sequence(4)
    for m in range(4):
        prefix = seq.terms[: m + 1]
        expected = math.prod(
            sum(combo)
            for size in range(1, m + 2)
            for combo in combinations(prefix, size)
        )
        assert seq.terms[m + 1] == expected


def test_generation_cap_mentions_digits():
    with pytest.raises(ValueError, match="decimal digits"):
        generate_block_sequence(9)
    generate_block_sequence(3, cap=3)
    with pytest.raises(ValueError):
        generate_block_sequence(4, cap=3)


def test_sequence_validation():
    with pytest.raises(ValueError):
        BlockSequence(())
    with pytest.raises(ValueError):
        BlockSequence((2, 3))
    with pytest.raises(ValueError):
        BlockSequence((1, 3, 2))
    BlockSequence((1, 1, 2))  # repeat only between s_0 and s_1 is fine


def test_verify_accepts_generated_sequences():
    for n in range(7):
        report = verify_block_divisibility(generate_block_sequence(n))
        assert report.ok
        assert report.counterexample is None


def test_verify_finds_first_counterexample_in_block_order():
    report = verify_block_divisibility(BlockSequence((1, 2, 3)))
    assert not report.ok
    assert report.counterexample == ((1,), (2,))


def test_subset_sum_and_validation():
    seq = generate_block_sequence(3)
    assert subset_sum(seq, [0]) == 1
    assert subset_sum(seq, [1, 2]) == 3
    assert subset_sum(seq, (3,)) == 144
    with pytest.raises(ValueError):
        subset_sum(seq, [])
    with pytest.raises(ValueError):
        subset_sum(seq, [4])
    with pytest.raises(ValueError):
        subset_sum(seq, [1, 1])


def test_block_order_enumeration():
    blocks = list(nonempty_subsets_in_block_order(1, 3))
    assert blocks == [
        (1,),
        (1, 2),
        (2,),
        (1, 2, 3),
        (1, 3),
        (2, 3),
        (3,),
    ]
    assert blocks == sorted(blocks, key=lambda b: (max(b), b))
    assert list(blocks_ending_at(1, 3)) == [(1, 2, 3), (1, 3), (2, 3), (3,)]


@given(st.integers(min_value=0, max_value=5))
def test_block_order_is_a_permutation_of_all_subsets(hi):
    blocks = list(nonempty_subsets_in_block_order(0, hi))
    assert len(blocks) == 2 ** (hi + 1) - 1
    assert len(set(blocks)) == len(blocks)
    assert [max(b) for b in blocks] == sorted(max(b) for b in blocks)


def test_normalize_and_precedes():
    assert normalize_index_set([3, 1]) == (1, 3)
    assert precedes((1, 2), (3,))
    assert not precedes((1, 3), (3,))
    with pytest.raises(ValueError):
        normalize_index_set([])
    with pytest.raises(ValueError):
        normalize_index_set([-1])
    with pytest.raises(ValueError):
        precedes((), (1,))


@given(st.integers(min_value=0, max_value=5), st.data())
def test_separated_subset_sums_divide(n, data):
    # the defining property, on randomly drawn separated pairs
    seq = generate_block_sequence(n)
    if n < 1:
        return
    cut = data.draw(st.integers(min_value=1, max_value=n))
    a = data.draw(st.sets(st.integers(0, cut - 1), min_size=1))
    b = data.draw(st.sets(st.integers(cut, n), min_size=1))
    assert subset_sum(seq, b) % subset_sum(seq, a) == 0


def test_every_nonempty_subset_sum_appears_in_powerset_oracle():
    seq = generate_block_sequence(4)
    sums = sorted(powerset_sums(seq.terms))
    for block in nonempty_subsets_in_block_order(0, 4):
        assert subset_sum(seq, block) in sums
