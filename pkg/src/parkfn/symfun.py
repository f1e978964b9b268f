"""Fundamental quasisymmetric and hook Schur functions in finitely many variables.

Everything is truncated to ``x_1..x_k``.  A monomial is its exponent
vector (a tuple of length ``k``); an :class:`MVPoly` maps monomials to
``UniPoly`` coefficients in ``q``, so integer identities simply use
constant coefficients.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Iterator, Mapping

from parkfn.core import enumerate_ppf, forward_diff_set, forward_differences, tie_set
from parkfn.errors import ConsistencyError, InvalidInputError
from parkfn.poly import UniPoly

Monomial = tuple[int, ...]


class MVPoly:
    """Polynomial in ``x_1..x_k`` with ``UniPoly`` coefficients; zero terms are dropped."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Monomial, Any] | None = None):
        if k < 1:
            raise InvalidInputError(f"need k >= 1 variables, got {k}")
        self.k = k
        clean: dict[Monomial, UniPoly] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != k or any(e < 0 for e in exp):
                raise InvalidInputError(f"bad exponent vector {exp} for k={k}")
            c = c if isinstance(c, UniPoly) else UniPoly.const(c)
            if not c.is_zero():
                clean[exp] = c
        self.terms = dict(sorted(clean.items()))

    def __add__(self, other: MVPoly) -> MVPoly:
        if not isinstance(other, MVPoly):
            return NotImplemented
        self._same_k(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out[exp] + c if exp in out else c
        return MVPoly(self.k, out)

    def scale(self, c: Any) -> MVPoly:
        """Multiply every coefficient by an int or a ``UniPoly``."""
        return MVPoly(self.k, {exp: v * c for exp, v in self.terms.items()})

    def _same_k(self, other: MVPoly) -> None:
        if other.k != self.k:
            raise InvalidInputError(f"variable counts differ: {self.k} vs {other.k}")

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, MVPoly) and self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, tuple(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exp: Iterable[int]) -> UniPoly:
        return self.terms.get(tuple(exp), UniPoly())

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(exp) == degree for exp in self.terms)

    def permute_vars(self, perm: Iterable[int]) -> MVPoly:
        """Rename ``x_i`` to ``x_{perm[i]}`` (0-based)."""
        perm = tuple(perm)
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.k
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MVPoly(self.k, out)

    def is_symmetric(self) -> bool:
        return all(self.permute_vars(_transposition(self.k, i)) == self for i in range(self.k - 1))

    def zero_vars(self, keep: Iterable[int]) -> MVPoly:
        """Set every variable not in ``keep`` (0-based indices) to zero."""
        keep = set(keep)
        return MVPoly(self.k, {exp: c for exp, c in self.terms.items() if all(e == 0 or i in keep for i, e in enumerate(exp))})

    def eval_q(self, value: Any) -> MVPoly:
        return MVPoly(self.k, {exp: c(value) for exp, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"MVPoly(k={self.k}, terms={len(self.terms)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e) or "1"
            if c == 1:
                parts.append(mono)
            elif c.degree == 0:
                parts.append(f"{c[0]}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_dict(self) -> dict:
        return {"k": self.k, "terms": [{"exp": list(exp), "coeff": c.to_dict()} for exp, c in self.terms.items()]}

    @classmethod
    def from_dict(cls, d: Mapping) -> MVPoly:
        try:
            return cls(int(d["k"]), {tuple(t["exp"]): UniPoly.from_dict(t["coeff"]) for t in d["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"bad MVPoly object: {exc}") from None

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, s: str) -> MVPoly:
        return cls.from_dict(json.loads(s))


def _transposition(k: int, i: int) -> tuple[int, ...]:
    perm = list(range(k))
    perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


def _mono(k: int, entries: Iterable[int]) -> Monomial:
    exp = [0] * k
    for b in entries:
        exp[b - 1] += 1
    return tuple(exp)


def _chains(n: int, strict: frozenset[int], k: int) -> Iterator[tuple[int, ...]]:
    chain = [0] * n

    def rec(i: int, low: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(chain)
            return
        # keep room for the strict rises still to come
        need = sum(1 for j in range(i + 1, n) if j in strict)
        for b in range(low, k - need + 1):
            chain[i] = b
            yield from rec(i + 1, b + 1 if (i + 1) in strict else b)

    return rec(0, 1)


@lru_cache(maxsize=None)
def _fundamental(n: int, s: frozenset[int], k: int) -> MVPoly:
    counts = Counter(_mono(k, c) for c in _chains(n, s, k))
    return MVPoly(k, counts)


def fundamental_qsym(n: int, s: Iterable[int], k: int) -> MVPoly:
    """Sum of ``x_{b_1}..x_{b_n}`` over ``1 <= b_1 <= .. <= b_n <= k`` with ``b_i < b_{i+1}`` for ``i`` in ``s``."""
    if n < 1:
        raise InvalidInputError(f"need n >= 1, got {n}")
    if k < 1:
        raise InvalidInputError(f"need k >= 1, got {k}")
    s = frozenset(s)
    if any(not 1 <= i <= n - 1 for i in s):
        raise InvalidInputError(f"S must be a subset of [1, {n - 1}]: {sorted(s)}")
    return _fundamental(n, s, k)


def _check_hook(i: int, n: int, k: int) -> None:
    if not 1 <= i <= n:
        raise InvalidInputError(f"need 1 <= i <= n, got i={i}, n={n}")
    if k < 1:
        raise InvalidInputError(f"need k >= 1, got {k}")


def schur_hook_from_f(i: int, n: int, k: int) -> MVPoly:
    """``s_(i, 1^(n-i))`` as the sum of ``F_{n,S}`` over ``|S| = n - i``."""
    _check_hook(i, n, k)
    total = MVPoly(k)
    for s in combinations(range(1, n), n - i):
        total = total + fundamental_qsym(n, s, k)
    return total


def hook_tableaux(i: int, n: int, k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Semistandard fillings of the hook: ``(row, column below the corner)``.

    The row (including the corner) weakly increases; the column from the
    corner down strictly increases; entries lie in ``1..k``.
    """
    _check_hook(i, n, k)
    leg = n - i

    def rows(length: int, low: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for b in range(low, k + 1):
            for rest in rows(length - 1, b):
                yield (b,) + rest

    for row in rows(i, 1):
        for col in combinations(range(row[0] + 1, k + 1), leg):
            yield row, col


def schur_hook_ssyt(i: int, n: int, k: int) -> MVPoly:
    counts = Counter(_mono(k, row + col) for row, col in hook_tableaux(i, n, k))
    return MVPoly(k, counts)


def schur_hook(i: int, n: int, k: int) -> MVPoly:
    """Hook Schur function, computed from F-expansion and from tableaux; the two must agree."""
    a = schur_hook_from_f(i, n, k)
    b = schur_hook_ssyt(i, n, k)
    if a != b:
        raise ConsistencyError(f"F-expansion and tableaux disagree for s_({i},1^{n - i}) in {k} variables")
    return a


# ---------------------------------------------------------------------------
# identities over PPF_n


@dataclass(frozen=True)
class Identity:
    lhs: MVPoly
    rhs: MVPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def verify_quasisym(n: int, k: int | None = None, *, limit: int | None = None) -> Identity:
    """``sum_{PPF_n} F_{n,Tie}`` against ``sum_i (n-2)^(i-1) s_(i,1^(n-i))``."""
    if n < 2:
        raise InvalidInputError(f"need n >= 2, got {n}")
    k = n if k is None else k
    by_tie = Counter(tie_set(p) for p in enumerate_ppf(n, limit=limit))
    lhs = MVPoly(k)
    for s, count in sorted(by_tie.items(), key=lambda kv: sorted(kv[0])):
        lhs = lhs + fundamental_qsym(n, s, k).scale(count)
    rhs = MVPoly(k)
    for i in range(1, n + 1):
        rhs = rhs + schur_hook(i, n, k).scale((n - 2) ** (i - 1))
    return Identity(lhs, rhs)


@dataclass(frozen=True)
class CorrIdentities:
    same: Identity
    mixed: Identity

    @property
    def eq1(self) -> bool:
        return self.same.equal

    @property
    def eq2(self) -> bool:
        return self.mixed.equal


def verify_quasisym_corr(n: int, ell: int, m: int, k: int | None = None, *, limit: int | None = None) -> CorrIdentities:
    """Both q-refined identities for residues ``ell != m``.

    ``same``:  ``sum q^#ell F_{n,Set^ell}  =  sum_i q^(n-i) (n-2)^(i-1) s_hook``
    ``mixed``: ``sum q^#ell F_{n,Set^m}    =  sum_i (q+n-3)^(i-1) s_hook``
    """
    if n < 3:
        raise InvalidInputError(f"need n >= 3 for two distinct residues, got {n}")
    for name, r in (("ell", ell), ("m", m)):
        if not 0 <= r <= n - 2:
            raise InvalidInputError(f"need 0 <= {name} <= {n - 2}, got {r}")
    if ell == m:
        raise InvalidInputError("ell and m must differ")
    k = n if k is None else k
    same: Counter = Counter()
    mixed: Counter = Counter()
    for p in enumerate_ppf(n, limit=limit):
        d = forward_differences(p)
        c = d.count(ell)
        same[(forward_diff_set(p, ell), c)] += 1
        mixed[(forward_diff_set(p, m), c)] += 1

    def lhs_of(tally: Counter) -> MVPoly:
        total = MVPoly(k)
        for (s, c), count in sorted(tally.items(), key=lambda kv: (sorted(kv[0][0]), kv[0][1])):
            total = total + fundamental_qsym(n, s, k).scale(UniPoly.monomial(count, c))
        return total

    q = UniPoly.x()
    rhs1 = MVPoly(k)
    rhs2 = MVPoly(k)
    for i in range(1, n + 1):
        hook = schur_hook(i, n, k)
        rhs1 = rhs1 + hook.scale(UniPoly.monomial((n - 2) ** (i - 1), n - i))
        rhs2 = rhs2 + hook.scale((q + (n - 3)) ** (i - 1))
    return CorrIdentities(Identity(lhs_of(same), rhs1), Identity(lhs_of(mixed), rhs2))
