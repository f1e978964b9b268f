"""Circular rotation: uniform sampling of PPF_n and the difference bijection.

Put ``n`` cars' preferences on a circle of ``n-1`` spots (representatives
``1..n-1``).  Exactly one of the ``n-1`` rotations of the circle turns the
preferences into a prime parking function, so rotating a uniform residue
vector gives a uniform element of PPF_n.  The same fact makes
``p -> consecutive differences mod n-1`` a bijection from PPF_n onto all
residue vectors of length ``n-1``.

Random draws come from numpy's PCG64 in blocks of :data:`BLOCK` samples;
block ``b`` is seeded from ``(seed, b)`` so any block can be regenerated
on its own.  ``Generator.integers`` draws bounded integers by rejection,
so residues carry no modulo bias.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from parkfn.core import PrefVector, as_prefs, forward_differences, is_prime_parking_function
from parkfn.errors import ConsistencyError, InvalidInputError

BLOCK = 1 << 16

DiffVector = tuple[int, ...]


@dataclass(frozen=True)
class SampleConfig:
    n: int
    samples: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInputError(f"need n >= 2, got {self.n}")
        if self.samples < 1:
            raise InvalidInputError(f"need samples >= 1, got {self.samples}")
        if not 0 <= self.seed < 2**64:
            raise InvalidInputError(f"seed must fit in 64 bits, got {self.seed}")


def rotate(p0: Sequence[int], i: int) -> PrefVector:
    """Add ``i`` to every entry modulo ``n-1``, representatives ``1..n-1``."""
    m = len(p0) - 1
    return tuple((x - 1 + i) % m + 1 for x in p0)


def valid_shifts(p0: Sequence[int]) -> list[int]:
    """Every ``i`` in ``0..n-2`` whose rotation of ``p0`` is prime (brute force)."""
    m = len(p0) - 1
    return [i for i in range(m) if is_prime_parking_function(rotate(p0, i))]


def rotation_shift(p0: Sequence[int]) -> int:
    """The unique valid shift, found in linear time.

    With ``c_r`` cars on spot ``r`` the running excess ``g(r) = sum_{v<=r} (c_v - 1)``
    ends at 1.  Starting the circle just after the last minimum of ``g``
    keeps every proper prefix excess >= 1, which is primality.
    """
    m = len(p0) - 1
    counts = [0] * (m + 1)
    for x in p0:
        counts[x] += 1
    g, best, arg = 0, 0, 0
    for r in range(1, m):
        g += counts[r] - 1
        if g <= best:
            best, arg = g, r
    return (-arg) % m


def l_map(p: Iterable[int]) -> DiffVector:
    """Consecutive differences of a prime parking function, mod ``n-1``."""
    p = as_prefs(p)
    if len(p) < 2:
        raise InvalidInputError("need n >= 2")
    if not is_prime_parking_function(p):
        raise InvalidInputError(f"{p} is not a prime parking function")
    return forward_differences(p)


def l_inverse(d: Sequence[int]) -> PrefVector:
    """The unique prime parking function with difference vector ``d``."""
    d = tuple(d)
    n = len(d) + 1
    m = n - 1
    if n < 2:
        raise InvalidInputError("difference vector is empty")
    if any(not isinstance(r, int) or not 0 <= r < m for r in d):
        raise InvalidInputError(f"residues must lie in 0..{m - 1}: {d}")
    p0 = [1]
    for r in d:
        p0.append((p0[-1] - 1 + r) % m + 1)
    shifts = valid_shifts(p0)
    if len(shifts) != 1:
        raise ConsistencyError(f"{len(shifts)} valid rotations of {tuple(p0)}")
    return rotate(p0, shifts[0])


# ---------------------------------------------------------------------------
# sampling


def _block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, block])))


def uniform_residues(rng: np.random.Generator, rows: int, n: int) -> np.ndarray:
    """``rows x n`` residues uniform on ``1..n-1``."""
    return rng.integers(1, n, size=(rows, n), endpoint=False, dtype=np.int64)


def rotate_to_prime(p0: np.ndarray) -> np.ndarray:
    """Vectorized :func:`rotation_shift` + :func:`rotate` over the rows of ``p0``."""
    rows, n = p0.shape
    m = n - 1
    flat = (p0 - 1) + m * np.arange(rows)[:, None]
    counts = np.bincount(flat.ravel(), minlength=rows * m).reshape(rows, m)
    g = np.zeros((rows, m), dtype=np.int64)
    np.cumsum(counts[:, : m - 1] - 1, axis=1, out=g[:, 1:])
    # last argmin of g over 0..m-1
    arg = (m - 1) - np.argmin(g[:, ::-1], axis=1)
    shift = (-arg) % m
    return (p0 - 1 + shift[:, None]) % m + 1


def kalikow_sample_array(cfg: SampleConfig) -> np.ndarray:
    """``cfg.samples x cfg.n`` array of uniform prime parking functions."""
    out = np.empty((cfg.samples, cfg.n), dtype=np.int64)
    for b, start in enumerate(range(0, cfg.samples, BLOCK)):
        rows = min(BLOCK, cfg.samples - start)
        p0 = uniform_residues(_block_rng(cfg.seed, b), rows, cfg.n)
        out[start:start + rows] = rotate_to_prime(p0)
    return out


def kalikow_sample(cfg: SampleConfig) -> Iterator[PrefVector]:
    """Stream of uniform prime parking functions, deterministic given ``cfg.seed``."""
    for b, start in enumerate(range(0, cfg.samples, BLOCK)):
        rows = min(BLOCK, cfg.samples - start)
        block = rotate_to_prime(uniform_residues(_block_rng(cfg.seed, b), rows, cfg.n))
        for row in block.tolist():
            yield tuple(row)


def difference_sample(cfg: SampleConfig) -> Iterator[PrefVector]:
    """Uniform PPF_n through :func:`l_inverse` of uniform difference vectors."""
    m = cfg.n - 1
    for b, start in enumerate(range(0, cfg.samples, BLOCK)):
        rows = min(BLOCK, cfg.samples - start)
        diffs = _block_rng(cfg.seed, b).integers(0, m, size=(rows, m), dtype=np.int64)
        for row in diffs.tolist():
            yield l_inverse(row)
