"""Łukasiewicz words, labeled paths, and labeled Dyck paths.

A parking function ``p`` of length ``n`` gives the word
``steps[j-1] = #{i : p_i = j} - 1`` whose prefix sums (the heights) stay
nonnegative and end at zero.  Labeling the axis under step ``j`` with the
cars that prefer spot ``j`` gives a labeled path, which is the same data
as the parking function.  Reading ``steps[j-1] + 1`` as the height of
column ``j`` gives a Dyck path carrying the same labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from parkfn.core import (
    PrefVector,
    as_prefs,
    check_limit,
    is_parking_function,
    is_prime_parking_function,
)
from parkfn.errors import ConsistencyError, InvalidInputError


def _prefix_sums(steps: Sequence[int]) -> tuple[int, ...]:
    h = [0]
    for s in steps:
        h.append(h[-1] + s)
    return tuple(h)


@dataclass(frozen=True)
class LukasiewiczWord:
    steps: tuple[int, ...]

    def __post_init__(self):
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise InvalidInputError("empty Łukasiewicz word")
        if any(not isinstance(s, int) or s < -1 for s in steps):
            raise InvalidInputError(f"steps must be integers >= -1: {steps}")
        h = _prefix_sums(steps)
        if min(h) < 0 or h[-1] != 0:
            raise InvalidInputError(f"not a Łukasiewicz word (heights {h})")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def heights(self) -> tuple[int, ...]:
        return _prefix_sums(self.steps)

    @property
    def is_prime(self) -> bool:
        """Touches the axis only at the two endpoints."""
        return all(x >= 1 for x in self.heights[1:-1])


def is_lukasiewicz(steps: Sequence[int]) -> bool:
    try:
        LukasiewiczWord(tuple(steps))
    except InvalidInputError:
        return False
    return True


def word_from_pf(p: Iterable[int]) -> LukasiewiczWord:
    """``steps[j-1] = #{i : p_i = j} - 1``."""
    p = as_prefs(p)
    if not is_parking_function(p):
        raise InvalidInputError(f"{p} is not a parking function")
    n = len(p)
    counts = [0] * n
    for x in p:
        counts[x - 1] += 1
    w = LukasiewiczWord(tuple(c - 1 for c in counts))
    if w.is_prime != is_prime_parking_function(p):
        raise ConsistencyError(f"prime flag of {w.steps} disagrees with primality of {p}")
    return w


def height_sequence(w: LukasiewiczWord | Sequence[int]) -> tuple[int, ...]:
    """Heights ``h_0..h_n`` after each step."""
    if not isinstance(w, LukasiewiczWord):
        w = LukasiewiczWord(tuple(w))
    return w.heights


def area(w: LukasiewiczWord | Sequence[int]) -> int:
    """Sum of the heights; equals the displacement of the parking function."""
    return sum(height_sequence(w))


# ---------------------------------------------------------------------------
# labeled paths


@dataclass(frozen=True)
class LabeledLukasiewiczPath:
    """A word plus the ordered set partition of cars by preferred spot.

    Empty blocks are kept, so there are always ``n`` blocks; each block is
    a sorted tuple.
    """

    word: LukasiewiczWord
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        word = self.word if isinstance(self.word, LukasiewiczWord) else LukasiewiczWord(tuple(self.word))
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "blocks", blocks)
        n = len(word)
        if len(blocks) != n:
            raise InvalidInputError(f"{len(blocks)} blocks for a word of length {n}")
        for i, (b, s) in enumerate(zip(blocks, word.steps), start=1):
            if len(b) != s + 1:
                raise InvalidInputError(f"block {i} has {len(b)} labels, step {s} needs {s + 1}")
        labels = [x for b in blocks for x in b]
        if sorted(labels) != list(range(1, n + 1)):
            raise InvalidInputError(f"blocks do not partition [1, {n}]")

    def __len__(self) -> int:
        return len(self.word)

    def to_dict(self) -> dict:
        return {"word": list(self.word.steps), "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, d: Mapping) -> LabeledLukasiewiczPath:
        try:
            return cls(LukasiewiczWord(tuple(d["word"])), tuple(tuple(b) for b in d["blocks"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad labeled path object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> LabeledLukasiewiczPath:
        return cls.from_dict(json.loads(s))


def labeled_path_from_pf(p: Iterable[int]) -> LabeledLukasiewiczPath:
    p = as_prefs(p)
    w = word_from_pf(p)
    blocks: list[list[int]] = [[] for _ in p]
    for car, pref in enumerate(p, start=1):
        blocks[pref - 1].append(car)
    return LabeledLukasiewiczPath(w, tuple(tuple(b) for b in blocks))


def pf_from_labeled_path(path: LabeledLukasiewiczPath) -> PrefVector:
    """Car ``k`` prefers spot ``m`` whenever ``k`` is in block ``m``."""
    alpha = [0] * len(path)
    for m, block in enumerate(path.blocks, start=1):
        for k in block:
            alpha[k - 1] = m
    return tuple(alpha)


def alpha_permutation(path: LabeledLukasiewiczPath) -> tuple[int, ...]:
    """Concatenation of the sorted blocks, read left to right."""
    return tuple(k for block in path.blocks for k in block)


def inverse_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(sigma)
    for pos, v in enumerate(sigma, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def path_stat_sets(path: LabeledLukasiewiczPath) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """``(Des, Asc, Tie)`` read off the blocks holding ``i`` and ``i+1``."""
    n = len(path)
    block_of = [0] * (n + 1)
    for j, block in enumerate(path.blocks, start=1):
        for k in block:
            block_of[k] = j
    des, asc, tie = set(), set(), set()
    for i in range(1, n):
        a, b = block_of[i], block_of[i + 1]
        (tie if a == b else des if b < a else asc).add(i)
    return frozenset(des), frozenset(asc), frozenset(tie)


# ---------------------------------------------------------------------------
# labeled Dyck paths


@dataclass(frozen=True)
class LabeledDyckPath:
    """An N/E word from (0,0) to (n,n) staying weakly above the diagonal.

    ``labels`` lists the car on each north step in the order the steps are
    walked; within a vertical run the labels increase.
    """

    word: str
    labels: tuple[int, ...]

    def __post_init__(self):
        word, labels = str(self.word), tuple(self.labels)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "labels", labels)
        if set(word) - {"N", "E"}:
            raise InvalidInputError(f"Dyck word may only contain N and E: {word!r}")
        n = word.count("N")
        if word.count("E") != n or n == 0:
            raise InvalidInputError(f"need equal nonzero numbers of N and E steps: {word!r}")
        excess = 0
        for ch in word:
            excess += 1 if ch == "N" else -1
            if excess < 0:
                raise InvalidInputError(f"path dips below the diagonal: {word!r}")
        if sorted(labels) != list(range(1, n + 1)):
            raise InvalidInputError(f"labels must be a permutation of 1..{n}: {labels}")
        for run in self.columns():
            if any(a >= b for a, b in zip(run, run[1:])):
                raise InvalidInputError(f"labels not increasing within a run: {run}")

    @property
    def n(self) -> int:
        return len(self.labels)

    def columns(self) -> list[tuple[int, ...]]:
        """Labels of the north steps in each column ``1..n`` (column = 1 + #E before the run)."""
        n = self.word.count("N")
        cols: list[list[int]] = [[] for _ in range(n)]
        col, k = 0, 0
        for ch in self.word:
            if ch == "N":
                cols[col].append(self.labels[k])
                k += 1
            else:
                col += 1
        return [tuple(c) for c in cols]

    def to_dict(self) -> dict:
        return {"word": self.word, "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, d: Mapping) -> LabeledDyckPath:
        try:
            return cls(d["word"], tuple(d["labels"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"bad labeled Dyck object: {exc}") from None


def dyck_from_labeled_lukas(path: LabeledLukasiewiczPath) -> LabeledDyckPath:
    """Column ``i`` gets ``steps[i-1] + 1`` north steps then one east step."""
    word = "".join("N" * (s + 1) + "E" for s in path.word.steps)
    return LabeledDyckPath(word, alpha_permutation(path))


def lukas_from_labeled_dyck(d: LabeledDyckPath) -> LabeledLukasiewiczPath:
    cols = d.columns()
    return LabeledLukasiewiczPath(LukasiewiczWord(tuple(len(c) - 1 for c in cols)), tuple(cols))


def pf_from_labeled_dyck(d: LabeledDyckPath) -> PrefVector:
    """Car ``i`` prefers column ``j`` when its label sits on a north step in column ``j``."""
    alpha = [0] * d.n
    for j, col in enumerate(d.columns(), start=1):
        for i in col:
            alpha[i - 1] = j
    return tuple(alpha)


def labeled_dyck_from_pf(p: Iterable[int]) -> LabeledDyckPath:
    """Build the Dyck path directly from column heights ``#{i : p_i = j}``."""
    p = as_prefs(p)
    if not is_parking_function(p):
        raise InvalidInputError(f"{p} is not a parking function")
    n = len(p)
    cols: list[list[int]] = [[] for _ in range(n)]
    for car, pref in enumerate(p, start=1):
        cols[pref - 1].append(car)
    return LabeledDyckPath("".join("N" * len(c) + "E" for c in cols), tuple(k for c in cols for k in c))


# ---------------------------------------------------------------------------
# enumeration and counting


def _gen_words(n: int, prime: bool) -> Iterator[LukasiewiczWord]:
    steps = [0] * n

    def rec(i: int, h: int) -> Iterator[LukasiewiczWord]:
        if i == n:
            if h == 0:
                yield LukasiewiczWord(tuple(steps))
            return
        remaining = n - i - 1  # steps left after this one
        for s in range(-1, remaining - h + 1):
            nh = h + s
            if nh < 0 or nh > remaining:
                continue
            if prime and remaining > 0 and nh < 1:
                continue
            steps[i] = s
            yield from rec(i + 1, nh)

    return rec(0, 0)


def enumerate_lukas(n: int, *, limit: int | None = None) -> Iterator[LukasiewiczWord]:
    """All Łukasiewicz words of length ``n``, depth-first with steps tried from -1 upward."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    check_limit(n, limit)
    return _gen_words(n, prime=False)


def enumerate_prime_lukas(n: int, *, limit: int | None = None) -> Iterator[LukasiewiczWord]:
    """Words whose interior heights are all >= 1, in the same order."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    check_limit(n, limit)
    return _gen_words(n, prime=True)


def labelings(w: LukasiewiczWord) -> int:
    """Number of labeled paths over ``w``: ``n! / prod (steps_i + 1)!``."""
    denom = 1
    for s in w.steps:
        denom *= factorial(s + 1)
    return factorial(len(w)) // denom


def count_by_paths(n: int, prime: bool = False, *, limit: int | None = None) -> int:
    """|PF_n| (or |PPF_n|) as a sum of labelings over (prime) Łukasiewicz words."""
    gen = enumerate_prime_lukas if prime else enumerate_lukas
    return sum(labelings(w) for w in gen(n, limit=limit))

