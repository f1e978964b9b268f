"""Parking functions and prime parking functions.

Recognition, the linear-probe simulation, per-sequence statistics,
lexicographic enumeration, and closed-form counts.

Preference vectors are plain tuples of positive ints, 1-based like the
parking spots they name.  Index sets (descents, ties, ...) are
``frozenset``s of 1-based positions ``i`` meaning the pair ``(i, i+1)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from parkfn.errors import ConsistencyError, InvalidInputError, LimitExceeded, ParkingFailure

PrefVector = tuple[int, ...]

DEFAULT_LIMIT = 9
LIMIT_ENV = "PARKFN_LIMIT"


def enumeration_limit(limit: int | None = None) -> int:
    """Resolve the enumeration bound: explicit argument, then ``$PARKFN_LIMIT``, then 9."""
    if limit is not None:
        return int(limit)
    env = os.environ.get(LIMIT_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidInputError(f"{LIMIT_ENV}={env!r} is not an integer") from None
    return DEFAULT_LIMIT


def check_limit(n: int, limit: int | None = None) -> None:
    bound = enumeration_limit(limit)
    if n > bound:
        raise LimitExceeded(f"n={n} exceeds enumeration limit {bound}")


def as_prefs(p: Iterable[int]) -> PrefVector:
    """Validate and freeze a preference sequence."""
    t = tuple(p)
    if not t:
        raise InvalidInputError("preference sequence is empty")
    for x in t:
        if isinstance(x, bool) or not isinstance(x, int):
            raise InvalidInputError(f"preference {x!r} is not an integer")
        if x < 1:
            raise InvalidInputError(f"preference {x} is < 1")
    return t


# ---------------------------------------------------------------------------
# recognition


def is_parking_function(p: Iterable[int]) -> bool:
    """True iff the sorted rearrangement satisfies ``lam[i] <= i`` (1-based)."""
    p = as_prefs(p)
    return all(x <= i for i, x in enumerate(sorted(p), start=1))


def is_prime_parking_function(p: Iterable[int]) -> bool:
    """True iff at least ``i+1`` cars prefer the first ``i`` spots for every ``i < n``.

    >>> is_prime_parking_function((3, 2, 1, 1))
    True
    >>> is_prime_parking_function((1, 2, 3))
    False
    """
    p = as_prefs(p)
    if not is_parking_function(p):
        return False
    n = len(p)
    counts = [0] * (n + 1)
    for x in p:
        if x <= n:
            counts[x] += 1
    at_most = 0
    for i in range(1, n):
        at_most += counts[i]
        if at_most < i + 1:
            return False
    return True


def is_prime_by_removal(p: Iterable[int]) -> bool:
    """Primality by its definition: deleting any single 1 leaves a parking function.

    Only the first 1 needs deleting since the result does not depend on
    which occurrence goes.  A length-1 input leaves the empty sequence,
    which counts as a parking function.
    """
    p = as_prefs(p)
    if not is_parking_function(p):
        return False
    i = p.index(1)
    rest = p[:i] + p[i + 1:]
    return not rest or is_parking_function(rest)


# ---------------------------------------------------------------------------
# simulation and statistics


@dataclass(frozen=True)
class ParkingOutcome:
    spot_of_car: tuple[int, ...]
    per_car_displacement: tuple[int, ...]
    total: int


def displacement(p: Iterable[int]) -> int:
    """Total displacement ``n(n+1)/2 - sum(p)``; assumes a parking function."""
    p = as_prefs(p)
    n = len(p)
    return n * (n + 1) // 2 - sum(p)


def park(p: Iterable[int]) -> ParkingOutcome:
    """Run the linear probe: each car takes the first free spot at or after its preference."""
    p = as_prefs(p)
    n = len(p)
    taken = [False] * (n + 2)
    spots = []
    for car, pref in enumerate(p, start=1):
        s = pref
        while s <= n and taken[s]:
            s += 1
        if s > n:
            raise ParkingFailure(f"car {car} (preference {pref}) finds no spot in 1..{n}")
        taken[s] = True
        spots.append(s)
    disp = tuple(s - x for s, x in zip(spots, p))
    total = sum(disp)
    if total != n * (n + 1) // 2 - sum(p):
        raise ConsistencyError("simulated displacement disagrees with n(n+1)/2 - sum(p)")
    return ParkingOutcome(tuple(spots), disp, total)


@dataclass(frozen=True)
class StatProfile:
    descent_set: frozenset[int]
    ascent_set: frozenset[int]
    tie_set: frozenset[int]
    ones_count: int
    forward_diff_sets: dict[int, frozenset[int]]

    @property
    def des(self) -> int:
        return len(self.descent_set)

    @property
    def asc(self) -> int:
        return len(self.ascent_set)

    @property
    def ties(self) -> int:
        return len(self.tie_set)


def descent_set(x: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(x)) if x[i - 1] > x[i])


def ascent_set(x: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(x)) if x[i - 1] < x[i])


def tie_set(x: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(x)) if x[i - 1] == x[i])


def forward_differences(x: Sequence[int]) -> tuple[int, ...]:
    """Consecutive differences ``x[i+1] - x[i]`` reduced mod ``n-1`` into ``0..n-2``."""
    n = len(x)
    if n < 2:
        return ()
    return tuple((x[i] - x[i - 1]) % (n - 1) for i in range(1, n))


def forward_diff_set(x: Sequence[int], ell: int) -> frozenset[int]:
    """Positions ``i`` where ``x`` has an ``ell``-forward difference."""
    return frozenset(i for i, d in enumerate(forward_differences(x), start=1) if d == ell)


def stat_profile(p: Iterable[int]) -> StatProfile:
    p = as_prefs(p)
    n = len(p)
    sets: dict[int, set[int]] = {ell: set() for ell in range(max(n - 1, 0))}
    for i, d in enumerate(forward_differences(p), start=1):
        sets[d].add(i)
    return StatProfile(
        descent_set=descent_set(p),
        ascent_set=ascent_set(p),
        tie_set=tie_set(p),
        ones_count=p.count(1),
        forward_diff_sets={ell: frozenset(s) for ell, s in sets.items()},
    )


# ---------------------------------------------------------------------------
# enumeration


def _generate(n: int, cap: list[int], prefix: Sequence[int]) -> Iterator[PrefVector]:
    # cap[i] bounds #{entries > i}; a prefix extends iff no bound is exceeded
    # (pad with 1s), so the admissible next values are 1..min{i : slack[i] == 0}.
    slack = cap[:]
    cur = [1] * n
    for pos, v in enumerate(prefix):
        if v < 1 or any(slack[i] == 0 for i in range(1, v)):
            return
        cur[pos] = v
        for i in range(1, v):
            slack[i] -= 1
    start = len(prefix)
    if start == n:
        yield tuple(cur)
        return

    def top() -> int:
        for i in range(1, n + 1):
            if slack[i] == 0:
                return i
        return n

    def rec(pos: int) -> Iterator[PrefVector]:
        m = top()
        if pos == n - 1:
            for v in range(1, m + 1):
                cur[pos] = v
                yield tuple(cur)
            return
        for v in range(1, m + 1):
            cur[pos] = v
            for i in range(1, v):
                slack[i] -= 1
            yield from rec(pos + 1)
            for i in range(1, v):
                slack[i] += 1

    yield from rec(start)


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"length must be a positive integer, got {n!r}")


def enumerate_pf(n: int, *, limit: int | None = None, prefix: Sequence[int] = ()) -> Iterator[PrefVector]:
    """Stream PF_n in lexicographic order.

    ``prefix`` restricts the stream to sequences starting with it, which is
    how the enumeration is sharded for parallel aggregation.
    """
    _check_n(n)
    check_limit(n, limit)
    cap = [n] + [n - i for i in range(1, n + 1)]
    return _generate(n, cap, tuple(prefix))


def enumerate_ppf(n: int, *, limit: int | None = None, prefix: Sequence[int] = ()) -> Iterator[PrefVector]:
    """Stream PPF_n in lexicographic order."""
    _check_n(n)
    check_limit(n, limit)
    cap = [n] + [n - 1 - i for i in range(1, n)] + [0]
    return _generate(n, cap, tuple(prefix))


# ---------------------------------------------------------------------------
# closed-form counts


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def count_pf(n: int) -> int:
    """``(n+1)^(n-1)``, with ``count_pf(0) == 1`` for the empty parking function."""
    if n < 0:
        raise InvalidInputError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    return (n + 1) ** (n - 1)


def count_ppf(n: int) -> int:
    """``(n-1)^(n-1)`` for ``n >= 2``; ``count_ppf(1) == 1`` counts the sequence ``(1)``."""
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    return (n - 1) ** (n - 1)


def count_pf_ones(n: int, k: int) -> int:
    """Number of PF_n with exactly ``k`` ones: ``C(n-1, k-1) n^(n-k)``."""
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got n={n}, k={k}")
    return comb(n - 1, k - 1) * n ** (n - k)


def count_pf_first(n: int, j: int) -> int:
    """Number of PF_n with first entry ``j``, as a sum over parking-function shuffles."""
    if not 1 <= j <= n:
        raise InvalidInputError(f"need 1 <= j <= n, got n={n}, j={j}")
    # l^(l-2) = |PF_{l-1}| and (n-l+1)^(n-l-1) = |PF_{n-l}|, both 1 on the empty side
    return sum(comb(n - 1, l - 1) * count_pf(l - 1) * count_pf(n - l) for l in range(j, n + 1))


def f_n_jk(n: int, j: int, k: int) -> int:
    """Number of PF_n with first entry ``j >= 2`` and exactly ``k`` ones."""
    if not 2 <= j <= n:
        raise InvalidInputError(f"need 2 <= j <= n, got n={n}, j={j}")
    if k < 1:
        raise InvalidInputError(f"need k >= 1, got {k}")
    total = 0
    for l in range(max(j, k + 1), n + 1):
        total += (
            comb(n - 1, l - 1)
            * _binom(l - 2, k - 1)
            * (l - 1) ** (l - 1 - k)
            * count_pf(n - l)
        )
    return total


def count_ppf_first(n_plus_1: int, j: int) -> int:
    """Number of PPF_{n+1} with first entry ``j``.

    ``j = 1`` gives ``|PF_n|``; for ``j >= 2`` each such function arises
    ``k+1`` times by inserting a 1 into one of ``n`` slots of a PF_n with
    ``k`` ones.  Entries never reach ``n+1``, so ``j > n`` gives 0.
    """
    n = n_plus_1 - 1
    if n < 1:
        raise InvalidInputError(f"need n+1 >= 2, got {n_plus_1}")
    if j < 1:
        raise InvalidInputError(f"need j >= 1, got {j}")
    if j == 1:
        return count_pf(n)
    if j > n:
        return 0
    total = sum(Fraction(n, k + 1) * f_n_jk(n, j, k) for k in range(1, n))
    if total.denominator != 1:
        raise ConsistencyError(f"count_ppf_first({n_plus_1}, {j}) = {total} is not an integer")
    return total.numerator


def _check_subset(n: int, s: Iterable[int], name: str) -> frozenset[int]:
    s = frozenset(s)
    bad = [i for i in s if not 1 <= i <= n - 1]
    if bad:
        raise InvalidInputError(f"{name} must be a subset of [1, {n - 1}], has {sorted(bad)}")
    return s


def count_forward_diff_set(n: int, ell: int, s: Iterable[int]) -> int:
    """Number of PPF_n whose ``ell``-forward-difference set is exactly ``s``."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    if not 0 <= ell <= n - 2:
        raise InvalidInputError(f"need 0 <= ell <= {n - 2}, got {ell}")
    s = _check_subset(n, s, "S")
    return (n - 2) ** (n - 1 - len(s))  # 0**0 == 1


def count_forward_diff_set_pair(n: int, ell: int, m: int, s: Iterable[int], t: Iterable[int]) -> int:
    """Number of PPF_n with ``ell``-set ``s`` and ``m``-set ``t`` (``ell != m``)."""
    if n < 3:
        raise InvalidInputError(f"need n >= 3 for two distinct residues, got {n}")
    for name, r in (("ell", ell), ("m", m)):
        if not 0 <= r <= n - 2:
            raise InvalidInputError(f"need 0 <= {name} <= {n - 2}, got {r}")
    if ell == m:
        raise InvalidInputError("ell and m must differ")
    s = _check_subset(n, s, "S")
    t = _check_subset(n, t, "T")
    if s & t:
        raise InvalidInputError(f"S and T overlap at {sorted(s & t)}")
    return (n - 3) ** (n - 1 - len(s) - len(t))
