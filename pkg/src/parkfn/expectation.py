"""Expected first preference, displacement, and difference statistics of PPF.

Functions taking ``n`` for ``E[pi_1]`` and ``E[dis]`` refer to PPF_{n+1},
following the closed form ``(n + 3 - T(n)) / 2`` with
``T(n) = n!/n^n * sum_{s<=n} n^s/s!``.  The statistics functions
(:func:`expected_stats_exact`, :func:`monte_carlo_report`) take the length
``n`` of the prime parking functions themselves.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from parkfn.core import displacement, enumerate_ppf, forward_differences
from parkfn.errors import InvalidInputError
from parkfn.poly import fraction_str
from parkfn.rotation import SampleConfig, kalikow_sample_array

EXACT_LIMIT = 200


def _check(n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")


def poisson_factor_exact(n: int) -> Fraction:
    _check(n)
    nf, nn = factorial(n), n**n
    return sum((Fraction(nf * n**s, factorial(s) * nn) for s in range(n + 1)), Fraction(0))


def poisson_factor(n: int) -> float:
    """``T(n) = sum_{k=0}^{n} prod_{j=1}^{k} (n-j+1)/n`` in floating point, overflow-free."""
    _check(n)
    terms = [1.0]
    term = 1.0
    for j in range(1, n + 1):
        term *= (n - j + 1) / n
        if term == 0.0:
            break
        terms.append(term)
    return math.fsum(terms)


def expected_pi1_exact(n: int) -> Fraction:
    """``E[pi_1 | pi in PPF_{n+1}]`` as an exact rational."""
    _check(n)
    return (n + 3 - poisson_factor_exact(n)) / 2


def expected_pi1_float(n: int, *, exact_limit: int = EXACT_LIMIT) -> float:
    if n <= exact_limit:
        return float(expected_pi1_exact(n))
    return 0.5 * (n + 3 - poisson_factor(n))


def expected_pi1_asymptotic(n: int) -> float:
    _check(n)
    return 0.5 * (n - math.sqrt(math.pi * n / 2) + 7 / 3)


def expected_displacement_exact(n: int) -> Fraction:
    """``E[dis | PPF_{n+1}] = (n+1)(n+2)/2 - (n+1) E[pi_1]``."""
    _check(n)
    return Fraction((n + 1) * (n + 2), 2) - (n + 1) * expected_pi1_exact(n)


def expected_displacement_float(n: int, *, exact_limit: int = EXACT_LIMIT) -> float:
    if n <= exact_limit:
        return float(expected_displacement_exact(n))
    return (n + 1) * (n + 2) / 2 - (n + 1) * expected_pi1_float(n, exact_limit=exact_limit)


def expected_displacement_asymptotic(n: int) -> float:
    _check(n)
    return math.sqrt(2 * math.pi) / 4 * n**1.5 - n / 6


def expected_pi1_brute(n: int, *, limit: int | None = None) -> Fraction:
    """Average first entry over PPF_{n+1}, by enumeration."""
    _check(n)
    total = count = 0
    for p in enumerate_ppf(n + 1, limit=limit):
        total += p[0]
        count += 1
    return Fraction(total, count)


def expected_displacement_brute(n: int, *, limit: int | None = None) -> Fraction:
    _check(n)
    total = count = 0
    for p in enumerate_ppf(n + 1, limit=limit):
        total += displacement(p)
        count += 1
    return Fraction(total, count)


@dataclass(frozen=True)
class ExpectedStats:
    ties: Fraction
    des: Fraction
    asc: Fraction
    per_ell: dict[int, Fraction]


def expected_stats_exact(n: int, *, limit: int | None = None) -> ExpectedStats:
    """Mean ties, descents, ascents, and ``ell``-forward differences over PPF_n, by enumeration."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    ties = des = asc = count = 0
    per_ell: Counter = Counter()
    for p in enumerate_ppf(n, limit=limit):
        count += 1
        for i in range(n - 1):
            a, b = p[i], p[i + 1]
            if a == b:
                ties += 1
            elif a > b:
                des += 1
            else:
                asc += 1
        per_ell.update(forward_differences(p))
    return ExpectedStats(
        Fraction(ties, count),
        Fraction(des, count),
        Fraction(asc, count),
        {ell: Fraction(per_ell[ell], count) for ell in range(n - 1)},
    )


def expected_stats_closed(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(1, (n-2)/2, (n-2)/2)``."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    half = Fraction(n - 2, 2)
    return Fraction(1), half, half


# ---------------------------------------------------------------------------
# Monte Carlo


def sample_statistics(samples: np.ndarray) -> dict[str, np.ndarray]:
    """Per-row ``pi1``, ``displacement``, ``ties``, ``des``, ``asc`` of a sample array."""
    n = samples.shape[1]
    diff = np.diff(samples, axis=1)
    return {
        "pi1": samples[:, 0],
        "displacement": n * (n + 1) // 2 - samples.sum(axis=1),
        "ties": (diff == 0).sum(axis=1),
        "des": (diff < 0).sum(axis=1),
        "asc": (diff > 0).sum(axis=1),
    }


def _mean_se(x: np.ndarray) -> tuple[float, float]:
    x = x.astype(np.float64)
    mean = float(x.mean())
    se = float(x.std(ddof=1) / math.sqrt(len(x))) if len(x) > 1 else 0.0
    return mean, se


def monte_carlo_report(cfg: SampleConfig, *, exact_limit: int = EXACT_LIMIT) -> dict:
    """Sample means and standard errors next to the exact and asymptotic values.

    Exact values are ``"num/den"`` strings when ``n - 1 <= exact_limit``;
    beyond that the overflow-free float evaluation is reported instead.
    """
    n = cfg.n
    stats = sample_statistics(kalikow_sample_array(cfg))
    half = Fraction(n - 2, 2)
    if n - 1 <= exact_limit:
        exact = {
            "pi1": expected_pi1_exact(n - 1),
            "displacement": expected_displacement_exact(n - 1),
        }
    else:
        exact = {
            "pi1": expected_pi1_float(n - 1, exact_limit=exact_limit),
            "displacement": expected_displacement_float(n - 1, exact_limit=exact_limit),
        }
    exact.update({"ties": Fraction(1), "des": half, "asc": half})
    asymptotic = {
        "pi1": expected_pi1_asymptotic(n - 1),
        "displacement": expected_displacement_asymptotic(n - 1),
    }
    out = {}
    for key, values in stats.items():
        mean, se = _mean_se(values)
        ex = exact[key]
        entry = {
            "mean": mean,
            "se": se,
            "exact": fraction_str(ex) if isinstance(ex, Fraction) else ex,
            "exact_float": float(ex),
            "z": (mean - float(ex)) / se if se > 0 else None,
        }
        if key in asymptotic:
            entry["asymptotic"] = asymptotic[key]
        out[key] = entry
    return {"n": n, "samples": cfg.samples, "seed": cfg.seed, "stats": out}


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)
