"""Generating functions over prime parking functions, and Abel sums.

The displacement enumerator is computed two ways: by brute force over
PPF_n, and as a weighted sum over Łukasiewicz paths.  The forward
difference generating functions come with their closed forms
``(q+n-2)^(n-1)`` and ``(q+t+n-3)^(n-1)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import comb, factorial
from typing import Any

from parkfn.core import (
    check_limit,
    displacement,
    enumerate_ppf,
    forward_differences,
)
from parkfn.errors import ConsistencyError, InvalidInputError, PoleError
from parkfn.lukasiewicz import enumerate_lukas, enumerate_prime_lukas
from parkfn.poly import BiPoly, UniPoly


def _from_counts(counts: Counter, var: str = "q") -> UniPoly:
    deg = max(counts, default=-1)
    return UniPoly([counts.get(d, 0) for d in range(deg + 1)], var)


def displacement_enumerator_brute(n: int, *, limit: int | None = None) -> UniPoly:
    """``sum over PPF_n of q^dis(p)``."""
    return _from_counts(Counter(displacement(p) for p in enumerate_ppf(n, limit=limit)))


def displacement_enumerator_paths(n_plus_1: int, *, limit: int | None = None) -> UniPoly:
    """PPF_{n+1}(q) as a weighted sum over Łukasiewicz paths of length ``n``.

    Each path with heights ``h`` contributes
    ``q^sum(h) / (h_1 - h_0 + 2) / prod (h_j - h_{j-1} + 1)!``; the total
    is scaled by ``(n+1)! q^n``.  Rational weights must cancel to integer
    coefficients.
    """
    n = n_plus_1 - 1
    if n < 1:
        raise InvalidInputError(f"need n+1 >= 2, got {n_plus_1}")
    check_limit(n_plus_1, limit)
    acc: dict[int, Fraction] = {}
    for w in enumerate_lukas(n, limit=limit):
        h = w.heights
        weight = Fraction(1, h[1] - h[0] + 2)
        for j in range(1, n + 1):
            weight /= factorial(h[j] - h[j - 1] + 1)
        d = sum(h)
        acc[d] = acc.get(d, Fraction(0)) + weight
    scale = factorial(n + 1)
    poly = UniPoly.monomial(1, n) * UniPoly([acc.get(d, 0) * scale for d in range(max(acc) + 1)])
    return poly.to_integral()


def displacement_enumerator_prime_paths(n_plus_1: int, *, limit: int | None = None) -> UniPoly:
    """PPF_{n+1}(q) as ``(n+1)! sum over prime paths of prod q^h_j / (h_j - h_{j-1} + 1)!``."""
    if n_plus_1 < 1:
        raise InvalidInputError(f"need n+1 >= 1, got {n_plus_1}")
    acc: dict[int, Fraction] = {}
    for w in enumerate_prime_lukas(n_plus_1, limit=limit):
        h = w.heights
        weight = Fraction(1)
        for j in range(1, n_plus_1 + 1):
            weight /= factorial(h[j] - h[j - 1] + 1)
        d = sum(h)
        acc[d] = acc.get(d, Fraction(0)) + weight
    scale = factorial(n_plus_1)
    return UniPoly([acc.get(d, 0) * scale for d in range(max(acc) + 1)]).to_integral()


# ---------------------------------------------------------------------------
# forward differences


def _check_residue(n: int, r: int, name: str = "ell") -> None:
    if not 0 <= r <= n - 2:
        raise InvalidInputError(f"need 0 <= {name} <= {n - 2}, got {r}")


def ell_genfun(n: int, ell: int, *, limit: int | None = None) -> UniPoly:
    """``sum over PPF_n of q^(number of ell-forward differences)``."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    _check_residue(n, ell)
    counts = Counter(forward_differences(p).count(ell) for p in enumerate_ppf(n, limit=limit))
    return _from_counts(counts)


def ell_genfun_closed(n: int) -> UniPoly:
    """``(q + n - 2)^(n-1)``; the same for every residue."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    return UniPoly([n - 2, 1]) ** (n - 1)


def mixed_genfun(n: int, ell: int, m: int, *, limit: int | None = None) -> BiPoly:
    """``sum over PPF_n of q^(#ell-differences) t^(#m-differences)`` for ``ell != m``."""
    if n < 3:
        raise InvalidInputError(f"need n >= 3 for two distinct residues, got {n}")
    _check_residue(n, ell)
    _check_residue(n, m, "m")
    if ell == m:
        raise InvalidInputError("ell and m must differ")
    counts: Counter = Counter()
    for p in enumerate_ppf(n, limit=limit):
        d = forward_differences(p)
        counts[(d.count(ell), d.count(m))] += 1
    return BiPoly(counts)


def mixed_genfun_closed(n: int) -> BiPoly:
    """``(q + t + n - 3)^(n-1)``."""
    if n < 3:
        raise InvalidInputError(f"need n >= 3, got {n}")
    return (BiPoly.q() + BiPoly.t() + (n - 3)) ** (n - 1)


# ---------------------------------------------------------------------------
# Abel sums


def _power(base: Any, exp: int) -> Fraction:
    base = Fraction(base)
    if base == 0 and exp < 0:
        raise PoleError(f"0 raised to negative power {exp}")
    return base**exp


def abel_sum(n: int, x: Any, y: Any, p: int, q: int) -> Fraction:
    """``A_n(x, y; p, q) = sum_s C(n, s) (x+s)^(s+p) (y+n-s)^(n-s+q)``, exactly."""
    if n < 0:
        raise InvalidInputError(f"need n >= 0, got {n}")
    x, y = Fraction(x), Fraction(y)
    return sum(
        (comb(n, s) * _power(x + s, s + p) * _power(y + n - s, n - s + q) for s in range(n + 1)),
        Fraction(0),
    )


def abel_split_rhs(n: int, x: Any, y: Any, p: int, q: int) -> Fraction:
    """``A_{n-1}(x, y+1; p, q+1) + A_{n-1}(x+1, y; p+1, q)``."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    x, y = Fraction(x), Fraction(y)
    return abel_sum(n - 1, x, y + 1, p, q + 1) + abel_sum(n - 1, x + 1, y, p + 1, q)


def abel_factorial_rhs(n: int, x: Any, y: Any, p: int, q: int) -> Fraction:
    """``sum_s C(n, s) s! (x+s) A_{n-s}(x+s, y; p-1, q)``."""
    x, y = Fraction(x), Fraction(y)
    return sum(
        (comb(n, s) * factorial(s) * (x + s) * abel_sum(n - s, x + s, y, p - 1, q) for s in range(n + 1)),
        Fraction(0),
    )


def abel_closed_p_minus1_q0(n: int, x: Any, y: Any) -> Fraction:
    """Closed form of ``A_n(x, y; -1, 0)``: ``(x + y + n)^n / x``."""
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        raise PoleError("x = 0")
    return (x + y + n) ** n / x


def abel_closed_p_minus1_q1(n: int, x: Any, y: Any) -> Fraction:
    """Closed form of ``A_n(x, y; -1, 1)``: ``x^-1 sum_s C(n, s) (x+y+n)^s (y+n-s) (n-s)!``."""
    x, y = Fraction(x), Fraction(y)
    if x == 0:
        raise PoleError("x = 0")
    total = sum(
        (comb(n, s) * (x + y + n) ** s * (y + n - s) * factorial(n - s) for s in range(n + 1)),
        Fraction(0),
    )
    return total / x


def check_abel(n: int, x: Any, y: Any, p: int, q: int) -> dict[str, bool]:
    """Evaluate both recurrences at one point; keys are ``split`` and ``factorial``."""
    lhs = abel_sum(n, x, y, p, q)
    out = {"factorial": lhs == abel_factorial_rhs(n, x, y, p, q)}
    if n >= 1:
        out["split"] = lhs == abel_split_rhs(n, x, y, p, q)
    return out


def ppf_count_via_abel(n: int) -> int:
    """``A_n(1, -1; -1, 0) = n^n``, the count of PPF_{n+1}."""
    v = abel_sum(n, 1, -1, -1, 0)
    if v.denominator != 1:
        raise ConsistencyError(f"A_{n}(1,-1;-1,0) = {v} is not an integer")
    return v.numerator
