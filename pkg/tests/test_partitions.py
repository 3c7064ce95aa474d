"""Set and integer partition machinery: enumeration, canonical forms,
permutation action, induced partitions, and size caps."""

import itertools
import math

import hypothesis.strategies as st
import pytest
from hypothesis import given

from divcolor import (
    IntegerPartition,
    PartitionIndex,
    SetPartition,
    SizeLimitError,
    apply_permutation,
    bell_number,
    enumerate_integer_partitions,
    enumerate_set_partitions,
    induced_partition,
    integer_shape,
)
from divcolor.partitions import canonical_rgs, partitions_with_shape, shape_count_in_rer

small_n = st.integers(1, 7)


def test_bell_numbers_match_enumeration():
    for n in range(1, 9):
        assert len(enumerate_set_partitions(n)) == bell_number(n)


def test_bell_recurrence():
    # B(n+1) = sum_k C(n,k) B(k)
    for n in range(0, 10):
        assert bell_number(n + 1) == sum(
            math.comb(n, k) * bell_number(k) for k in range(n + 1)
        )


def test_set_partitions_lexicographic_and_distinct():
    for n in range(1, 7):
        seq = [pi.rgs for pi in enumerate_set_partitions(n)]
        assert seq == sorted(seq)
        assert len(set(seq)) == len(seq)
        assert seq[0] == tuple([0] * n)  # one class first
        assert seq[-1] == tuple(range(n))  # singletons last


@given(st.integers(1, 7), st.data())
def test_canonical_rgs_fixes_arbitrary_labels(n, data):
    labels = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    rgs = canonical_rgs(labels)
    # same classes, first occurrences increasing by at most one
    for i, j in itertools.combinations(range(n), 2):
        assert (labels[i] == labels[j]) == (rgs[i] == rgs[j])
    assert rgs[0] == 0
    assert all(rgs[i] <= max(rgs[:i]) + 1 for i in range(1, n))
    assert canonical_rgs(rgs) == rgs


def test_set_partition_rejects_non_canonical():
    with pytest.raises(ValueError):
        SetPartition(3, (1, 0, 0))
    with pytest.raises(ValueError):
        SetPartition(3, (0, 2, 1))
    with pytest.raises(ValueError):
        SetPartition(2, (0, 0, 0))


def test_blocks_and_class_count():
    pi = SetPartition.from_blocks(4, [{1, 3}, {2}, {4}])
    assert pi.rgs == (0, 1, 0, 2)
    assert pi.num_classes() == 3
    assert sorted(sorted(b) for b in pi.blocks()) == [[1, 3], [2], [4]]


def test_induced_partition_examples():
    pi = SetPartition(5, (0, 0, 1, 1, 2))
    assert induced_partition(pi, (1, 2, 5)).rgs == (0, 0, 1)
    assert induced_partition(pi, (3, 4)).rgs == (0, 0)
    assert induced_partition(pi, tuple(range(1, 6))) == pi
    assert induced_partition(pi, (2,)).rgs == (0,)


@given(small_n, st.data())
def test_permutation_action_is_a_group_action(n, data):
    perm = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    pi = data.draw(st.sampled_from(enumerate_set_partitions(n)))
    moved = apply_permutation(perm, pi)
    assert integer_shape(moved) == integer_shape(pi)
    identity = tuple(range(1, n + 1))
    assert apply_permutation(identity, pi) == pi
    # u ~ v iff perm(u) ~ perm(v)
    for u, v in itertools.combinations(range(1, n + 1), 2):
        same_before = pi.rgs[u - 1] == pi.rgs[v - 1]
        same_after = moved.rgs[perm[u - 1] - 1] == moved.rgs[perm[v - 1] - 1]
        assert same_before == same_after


def test_integer_partition_counts_and_order():
    counts = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 10: 42}
    for n, expected in counts.items():
        shapes = enumerate_integer_partitions(n)
        assert len(shapes) == expected
        parts = [s.parts for s in shapes]
        assert parts == sorted(parts, reverse=True)  # reverse-lexicographic
        assert parts[0] == (n,)
        assert parts[-1] == tuple([1] * n)


def test_integer_partition_validation():
    with pytest.raises(ValueError):
        IntegerPartition(4, (1, 2, 1))  # not sorted
    with pytest.raises(ValueError):
        IntegerPartition(4, (3, 2))  # wrong sum
    with pytest.raises(ValueError):
        IntegerPartition(2, (2, 0))  # zero part


def test_string_round_trips():
    pi = SetPartition(4, (0, 1, 0, 2))
    assert SetPartition.from_string(pi.to_string()) == pi
    assert pi.to_string() == "RGS:0102"
    shape = IntegerPartition(6, (3, 2, 1))
    assert IntegerPartition.from_string(shape.to_string()) == shape
    assert shape.to_string() == "3-2-1"
    big = SetPartition(11, tuple(range(11)))
    with pytest.raises(ValueError):
        big.to_string()  # class label 10 has no single-digit form


def test_partition_index_round_trip():
    index = PartitionIndex.build(4)
    for i, pi in enumerate(enumerate_set_partitions(4)):
        assert index.at(i) == pi
        assert index.index_of(pi) == i


@given(st.integers(1, 6))
def test_shape_counts_partition_bell(n):
    total = 0
    for shape in enumerate_integer_partitions(n):
        members = partitions_with_shape(n, shape)
        assert len(members) == shape_count_in_rer(shape)
        assert all(integer_shape(pi) == shape for pi in members)
        total += len(members)
    assert total == bell_number(n)


def test_size_caps():
    with pytest.raises(SizeLimitError):
        enumerate_set_partitions(14)
    with pytest.raises(SizeLimitError):
        enumerate_integer_partitions(61)
