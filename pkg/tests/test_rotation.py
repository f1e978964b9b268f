from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_ppf, is_ppf

from parkfn import rotation
from parkfn.errors import InvalidInputError
from parkfn.rotation import SampleConfig


def test_rotation_example():
    p0 = (2, 3, 3, 2)
    assert rotation.valid_shifts(p0) == [2]
    assert rotation.rotate(p0, 2) == (1, 2, 2, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_unique_shift_exhaustive(n):
    for p0 in product(range(1, n), repeat=n):
        hits = [i for i in range(n - 1) if is_ppf(rotation.rotate(p0, i))]
        assert len(hits) == 1
        assert rotation.rotation_shift(p0) == hits[0]


@given(st.integers(2, 30).flatmap(lambda n: st.lists(st.lists(st.integers(1, n - 1), min_size=n, max_size=n), min_size=1, max_size=20)))
def test_vectorized_rotation(rows):
    arr = np.array(rows, dtype=np.int64)
    got = rotation.rotate_to_prime(arr)
    for row, out in zip(rows, got.tolist()):
        assert tuple(out) == rotation.rotate(row, rotation.rotation_shift(row))
        assert is_ppf(out)


@pytest.mark.parametrize("n", range(2, 6))
def test_difference_bijection(n):
    ppfs = all_ppf(n)
    images = [rotation.l_map(p) for p in ppfs]
    assert sorted(images) == list(product(range(n - 1), repeat=n - 1))
    for p, d in zip(ppfs, images):
        assert rotation.l_inverse(d) == p


def test_l_map_rejects_non_prime():
    with pytest.raises(InvalidInputError):
        rotation.l_map((1, 2, 3))
    with pytest.raises(InvalidInputError):
        rotation.l_inverse((0, 3))


def test_sampler_deterministic_and_prime():
    cfg = SampleConfig(6, 1000, seed=42)
    a = rotation.kalikow_sample_array(cfg)
    b = rotation.kalikow_sample_array(cfg)
    assert np.array_equal(a, b)
    assert all(is_ppf(row) for row in a.tolist())
    assert [tuple(r) for r in a.tolist()] == list(rotation.kalikow_sample(cfg))
    other = rotation.kalikow_sample_array(SampleConfig(6, 1000, seed=43))
    assert not np.array_equal(a, other)


def test_blocks_are_prefix_stable():
    short = rotation.kalikow_sample_array(SampleConfig(5, 10, seed=3))
    long = rotation.kalikow_sample_array(SampleConfig(5, rotation.BLOCK + 10, seed=3))
    assert np.array_equal(short, long[:10])


def test_n2_is_constant():
    assert list(rotation.kalikow_sample(SampleConfig(2, 5))) == [(1, 1)] * 5


def test_difference_sampler():
    got = list(rotation.difference_sample(SampleConfig(5, 200, seed=1)))
    assert all(is_ppf(p) for p in got)


@pytest.mark.parametrize("kw", [dict(n=1, samples=1), dict(n=3, samples=0), dict(n=3, samples=1, seed=-1)])
def test_config_validation(kw):
    with pytest.raises(InvalidInputError):
        SampleConfig(**kw)


def test_residues_unbiased():
    from scipy import stats

    draws = rotation.uniform_residues(rotation._block_rng(11, 0), 100_000, 10).ravel()
    counts = np.bincount(draws, minlength=10)
    assert counts[0] == 0 and counts.sum() == 10**6
    assert stats.chisquare(counts[1:]).pvalue > stats.norm.sf(5)


def test_both_samplers_share_the_uniform_law():
    from scipy import stats

    support = all_ppf(4)
    index = {p: i for i, p in enumerate(support)}
    k = 27 * 800
    for gen in (rotation.kalikow_sample, rotation.difference_sample):
        counts = np.zeros(len(support))
        for p in gen(SampleConfig(4, k, seed=8)):
            counts[index[p]] += 1
        assert stats.chisquare(counts).pvalue > stats.norm.sf(5), gen.__name__
