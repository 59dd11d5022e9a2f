import numpy as np
import pytest

from core.public_tests import Dataset
from core.tot_engine import PartitionError, partition, partition_indices


def test_balanced_sizes(rng):
    sizes = sorted(len(indices) for indices in partition_indices(10, 3, rng))
    assert sizes == [3, 3, 4]


@pytest.mark.parametrize("m", [1, 4, 17])
def test_disjoint_cover(m, rng):
    parts = partition_indices(17, m, rng)
    joined = np.concatenate(parts)
    assert len(parts) == m
    assert sorted(joined.tolist()) == list(range(17))
    assert max(map(len, parts)) - min(map(len, parts)) <= 1


def test_extreme_subset_counts(rng):
    data = Dataset.univariate(np.arange(6.0))
    whole = partition(data, 1, rng)
    assert sorted(whole[0].column().tolist()) == list(range(6))
    singletons = partition(data, 6, rng)
    assert all(subset.n == 1 for subset in singletons)


@pytest.mark.parametrize("m", [0, 11])
def test_invalid_subset_count(m, rng):
    with pytest.raises(PartitionError):
        partition_indices(10, m, rng)


def test_stratified_by_group(rng):
    labels = np.array(["a"] * 6 + ["b"] * 3)
    data = Dataset.univariate(np.arange(9.0), labels)
    for subset in partition(data, 3, rng):
        assert sorted(subset.group_labels.tolist()) == ["a", "a", "b"]


def test_assignment_ignores_values():
    first = partition_indices(12, 4, np.random.default_rng(5))
    second = partition_indices(12, 4, np.random.default_rng(5))
    for left, right in zip(first, second):
        np.testing.assert_array_equal(left, right)
    data = Dataset.univariate(np.arange(12.0))
    neighbour = data.with_row(3, [1000.0])
    for left, right in zip(partition(data, 4, np.random.default_rng(5)), partition(neighbour, 4, np.random.default_rng(5))):
        assert np.sum(left.column() != right.column()) <= 1
