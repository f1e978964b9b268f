"""Named checks pairing each closed form with an independent computation.

Every check returns a :class:`Check` holding a pass flag plus JSON-ready
``lhs`` (what was computed by enumeration or construction) and ``rhs``
(the closed form or the other route).  ``THEOREMS`` maps the ids accepted
by ``parkfn verify --theorem``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations
from typing import Any, Callable

from parkfn import core, expectation, genfun, lukasiewicz as lk, rotation, symfun
from parkfn.errors import InvalidInputError
from parkfn.poly import fraction_str


@dataclass
class Check:
    theorem: str
    params: dict
    passed: bool
    lhs: Any
    rhs: Any
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"theorem": self.theorem, "params": self.params, "pass": self.passed, "lhs": self.lhs, "rhs": self.rhs}
        if self.details:
            out["details"] = self.details
        return out


def _subsets(n: int):
    base = range(1, n)
    return chain.from_iterable(combinations(base, r) for r in range(n))


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidInputError(msg)


def check_counts(n: int, limit: int | None = None, **_) -> Check:
    pf = sum(1 for _ in core.enumerate_pf(n, limit=limit))
    ppf = sum(1 for _ in core.enumerate_ppf(n, limit=limit))
    lhs = {"pf": str(pf), "ppf": str(ppf)}
    rhs = {"pf": str(core.count_pf(n)), "ppf": str(core.count_ppf(n))}
    return Check("counts", {"n": n}, lhs == rhs, lhs, rhs)


def check_first_entry(n: int, limit: int | None = None, **_) -> Check:
    """First-entry, ones, and (first, ones) counts over PF_n, plus first-entry counts over PPF_n."""
    first: Counter = Counter()
    ones: Counter = Counter()
    joint: Counter = Counter()
    for p in core.enumerate_pf(n, limit=limit):
        k = p.count(1)
        first[p[0]] += 1
        ones[k] += 1
        joint[(p[0], k)] += 1
    ppf_first = Counter(p[0] for p in core.enumerate_ppf(n, limit=limit)) if n >= 2 else Counter()
    lhs = {
        "pf_first": [first[j] for j in range(1, n + 1)],
        "pf_ones": [ones[k] for k in range(1, n + 1)],
        "f_njk": [[joint[(j, k)] for k in range(1, n)] for j in range(2, n + 1)],
        "ppf_first": [ppf_first[j] for j in range(1, n)] if n >= 2 else [],
    }
    rhs = {
        "pf_first": [core.count_pf_first(n, j) for j in range(1, n + 1)],
        "pf_ones": [core.count_pf_ones(n, k) for k in range(1, n + 1)],
        "f_njk": [[core.f_n_jk(n, j, k) for k in range(1, n)] for j in range(2, n + 1)],
        "ppf_first": [core.count_ppf_first(n, j) for j in range(1, n)] if n >= 2 else [],
    }
    return Check("first-entry", {"n": n}, lhs == rhs, lhs, rhs)


def check_displacement_enum(n: int, limit: int | None = None, **_) -> Check:
    _require(n >= 2, "displacement-enum needs n >= 2")
    brute = genfun.displacement_enumerator_brute(n, limit=limit)
    paths = genfun.displacement_enumerator_paths(n, limit=limit)
    prime = genfun.displacement_enumerator_prime_paths(n, limit=limit)
    return Check(
        "displacement-enum",
        {"n": n},
        brute == paths == prime,
        brute.to_dict(),
        paths.to_dict(),
        {"prime_paths": prime.to_dict(), "text": str(paths)},
    )


def check_ell_genfun(n: int, ell: int | None = None, limit: int | None = None, **_) -> Check:
    ells = range(n - 1) if ell is None else [ell]
    closed = genfun.ell_genfun_closed(n)
    brute = {e: genfun.ell_genfun(n, e, limit=limit) for e in ells}
    ok = all(b == closed for b in brute.values())
    lhs = brute[ell].to_dict() if ell is not None else {str(e): b.to_dict() for e, b in brute.items()}
    return Check("ell-genfun", {"n": n, "ell": ell}, ok, lhs, closed.to_dict(), {"text": str(closed)})


def _pairs(n: int, ell: int | None, m: int | None):
    if ell is not None and m is not None:
        return [(ell, m)]
    return [(a, b) for a in range(n - 1) for b in range(n - 1) if a != b
            and (ell is None or a == ell) and (m is None or b == m)]


def check_mixed_genfun(n: int, ell: int | None = None, m: int | None = None, limit: int | None = None, **_) -> Check:
    closed = genfun.mixed_genfun_closed(n)
    brute = {(a, b): genfun.mixed_genfun(n, a, b, limit=limit) for a, b in _pairs(n, ell, m)}
    ok = bool(brute) and all(v == closed for v in brute.values())
    lhs = {f"{a},{b}": v.to_dict() for (a, b), v in brute.items()}
    return Check("mixed-genfun", {"n": n, "ell": ell, "m": m}, ok, lhs, closed.to_dict(), {"text": str(closed)})


def check_tie_set_count(n: int, ell: int | None = None, limit: int | None = None, **_) -> Check:
    _require(n >= 2, "tie-set-count needs n >= 2")
    ells = range(n - 1) if ell is None else [ell]
    tallies = {e: Counter() for e in ells}
    for p in core.enumerate_ppf(n, limit=limit):
        for e in ells:
            tallies[e][core.forward_diff_set(p, e)] += 1
    lhs, rhs = {}, {}
    for e in ells:
        for s in _subsets(n):
            key = f"{e}:{','.join(map(str, s))}"
            lhs[key] = tallies[e][frozenset(s)]
            rhs[key] = core.count_forward_diff_set(n, e, s)
    return Check("tie-set-count", {"n": n, "ell": ell}, lhs == rhs, lhs, rhs)


def check_tie_set_count_mixed(n: int, ell: int | None = None, m: int | None = None, limit: int | None = None, **_) -> Check:
    _require(n >= 3, "tie-set-count-mixed needs n >= 3")
    pairs = _pairs(n, ell, m)
    tallies = {pr: Counter() for pr in pairs}
    for p in core.enumerate_ppf(n, limit=limit):
        d = core.forward_differences(p)
        for a, b in pairs:
            s = frozenset(i for i, x in enumerate(d, start=1) if x == a)
            t = frozenset(i for i, x in enumerate(d, start=1) if x == b)
            tallies[(a, b)][(s, t)] += 1
    lhs, rhs = {}, {}
    subsets = list(_subsets(n))
    for a, b in pairs:
        for s in subsets:
            for t in subsets:
                if set(s) & set(t):
                    continue
                key = f"{a},{b}:{','.join(map(str, s))}|{','.join(map(str, t))}"
                lhs[key] = tallies[(a, b)][(frozenset(s), frozenset(t))]
                rhs[key] = core.count_forward_diff_set_pair(n, a, b, s, t)
    return Check("tie-set-count-mixed", {"n": n, "ell": ell, "m": m}, lhs == rhs, lhs, rhs)


def check_quasisym(n: int, vars: int | None = None, limit: int | None = None, **_) -> Check:
    res = symfun.verify_quasisym(n, vars, limit=limit)
    return Check("quasisym", {"n": n, "vars": res.lhs.k}, res.equal, res.lhs.to_dict(), res.rhs.to_dict())


def check_quasisym_corr(n: int, ell: int | None = None, m: int | None = None, vars: int | None = None,
                        limit: int | None = None, **_) -> Check:
    pairs = _pairs(n, ell, m)
    results = {pr: symfun.verify_quasisym_corr(n, pr[0], pr[1], vars, limit=limit) for pr in pairs}
    ok = bool(results) and all(r.eq1 and r.eq2 for r in results.values())
    details = {f"{a},{b}": {"eq1": r.eq1, "eq2": r.eq2} for (a, b), r in results.items()}
    if len(pairs) == 1:
        r = results[pairs[0]]
        lhs = {"same": r.same.lhs.to_dict(), "mixed": r.mixed.lhs.to_dict()}
        rhs = {"same": r.same.rhs.to_dict(), "mixed": r.mixed.rhs.to_dict()}
    else:
        lhs = rhs = None
    return Check("quasisym-corr", {"n": n, "ell": ell, "m": m, "vars": vars or n}, ok, lhs, rhs, details)


def _random_rational(rng: random.Random) -> Fraction:
    # a non-integer keeps every x+s and y+n-s away from zero
    while True:
        f = Fraction(rng.randint(-40, 40), rng.randint(2, 13))
        if f.denominator != 1:
            return f


def check_abel(n: int, pairs: int = 50, seed: int | None = None, **_) -> Check:
    """Both recurrences at ``(p, q)`` in a small grid, and the two special cases, at random rationals."""
    _require(n >= 0, "abel needs n >= 0")
    rng = random.Random(n if seed is None else seed)
    failures = []
    for _ in range(pairs):
        x, y = _random_rational(rng), _random_rational(rng)
        for p, q in ((-1, 0), (-1, 1), (0, 0), (1, -1), (2, 1)):
            for name, ok in genfun.check_abel(n, x, y, p, q).items():
                if not ok:
                    failures.append(f"{name} n={n} x={x} y={y} p={p} q={q}")
        if genfun.abel_sum(n, x, y, -1, 0) != genfun.abel_closed_p_minus1_q0(n, x, y):
            failures.append(f"(-1,0) closed form n={n} x={x} y={y}")
        if genfun.abel_sum(n, x, y, -1, 1) != genfun.abel_closed_p_minus1_q1(n, x, y):
            failures.append(f"(-1,1) closed form n={n} x={x} y={y}")
    lhs = str(genfun.ppf_count_via_abel(n)) if n >= 1 else None
    rhs = str(n**n) if n >= 1 else None
    ok = not failures and lhs == rhs
    return Check("abel", {"n": n, "pairs": pairs}, ok, lhs, rhs, {"failures": failures[:10]})


def check_bijection(n: int, limit: int | None = None, **_) -> Check:
    """Round trips PF -> labeled path -> Dyck -> PF, and the statistic sets on the way."""
    counts = Counter()
    for p in core.enumerate_pf(n, limit=limit):
        counts["total"] += 1
        path = lk.labeled_path_from_pf(p)
        dyck = lk.dyck_from_labeled_lukas(path)
        back = lk.lukas_from_labeled_dyck(dyck)
        counts["path_roundtrip"] += lk.pf_from_labeled_path(path) == p
        counts["dyck_roundtrip"] += back == path
        counts["dyck_classical"] += lk.pf_from_labeled_dyck(dyck) == p and lk.labeled_dyck_from_pf(p) == dyck
        des, asc, tie = lk.path_stat_sets(path)
        counts["stat_sets"] += (des, asc, tie) == (core.descent_set(p), core.ascent_set(p), core.tie_set(p))
        inv = lk.inverse_permutation(lk.alpha_permutation(path))
        counts["inverse_descents"] += core.descent_set(inv) == core.descent_set(p)
        counts["inverse_ascents"] += core.ascent_set(inv) == core.ascent_set(p) | core.tie_set(p)
    lhs = dict(counts)
    rhs = {k: counts["total"] for k in lhs}
    return Check("bijection", {"n": n}, lhs == rhs, lhs, rhs)


def check_area(n: int, limit: int | None = None, **_) -> Check:
    good = total = 0
    for p in core.enumerate_pf(n, limit=limit):
        total += 1
        good += lk.area(lk.word_from_pf(p)) == core.park(p).total
    return Check("area", {"n": n}, good == total, good, total)


def check_path_counts(n: int, limit: int | None = None, **_) -> Check:
    lhs = {"pf": str(lk.count_by_paths(n, limit=limit)), "ppf": str(lk.count_by_paths(n, True, limit=limit))}
    rhs = {"pf": str(core.count_pf(n)), "ppf": str(core.count_ppf(n))}
    return Check("path-counts", {"n": n}, lhs == rhs, lhs, rhs)


def check_expected_pi1(n: int, limit: int | None = None, **_) -> Check:
    """``n`` indexes PPF_{n+1}."""
    brute = expectation.expected_pi1_brute(n, limit=limit)
    exact = expectation.expected_pi1_exact(n)
    dis_brute = expectation.expected_displacement_brute(n, limit=limit)
    dis_exact = expectation.expected_displacement_exact(n)
    lhs = {"pi1": fraction_str(brute), "displacement": fraction_str(dis_brute)}
    rhs = {"pi1": fraction_str(exact), "displacement": fraction_str(dis_exact)}
    return Check("expected-pi1", {"n": n}, lhs == rhs, lhs, rhs)


def check_expected_stats(n: int, limit: int | None = None, **_) -> Check:
    st = expectation.expected_stats_exact(n, limit=limit)
    ties, des, asc = expectation.expected_stats_closed(n)
    lhs = {"ties": fraction_str(st.ties), "des": fraction_str(st.des), "asc": fraction_str(st.asc),
           "per_ell": {str(k): fraction_str(v) for k, v in st.per_ell.items()}}
    rhs = {"ties": fraction_str(ties), "des": fraction_str(des), "asc": fraction_str(asc),
           "per_ell": {str(k): "1/1" for k in st.per_ell}}
    return Check("expected-stats", {"n": n}, lhs == rhs, lhs, rhs)


def check_kalikow(n: int, limit: int | None = None, **_) -> Check:
    """``l_map`` and ``l_inverse`` are inverse bijections between PPF_n and residue vectors."""
    _require(n >= 2, "kalikow needs n >= 2")
    core.check_limit(n, limit)
    from itertools import product

    ppf = list(core.enumerate_ppf(n, limit=limit))
    images = {rotation.l_map(p) for p in ppf}
    forward = sum(rotation.l_inverse(rotation.l_map(p)) == p for p in ppf)
    vectors = list(product(range(n - 1), repeat=n - 1))
    backward = sum(rotation.l_map(rotation.l_inverse(d)) == d for d in vectors)
    lhs = {"ppf": len(ppf), "images": len(images), "forward": forward, "backward": backward}
    rhs = {"ppf": len(vectors), "images": len(vectors), "forward": len(ppf), "backward": len(vectors)}
    return Check("kalikow", {"n": n}, lhs == rhs, lhs, rhs)


THEOREMS: dict[str, Callable[..., Check]] = {
    "counts": check_counts,
    "first-entry": check_first_entry,
    "displacement-enum": check_displacement_enum,
    "ell-genfun": check_ell_genfun,
    "mixed-genfun": check_mixed_genfun,
    "tie-set-count": check_tie_set_count,
    "tie-set-count-mixed": check_tie_set_count_mixed,
    "quasisym": check_quasisym,
    "quasisym-corr": check_quasisym_corr,
    "abel": check_abel,
    "bijection": check_bijection,
    "area": check_area,
    "path-counts": check_path_counts,
    "expected-pi1": check_expected_pi1,
    "expected-stats": check_expected_stats,
    "kalikow": check_kalikow,
}


def run(theorem: str, **params) -> Check:
    try:
        fn = THEOREMS[theorem]
    except KeyError:
        raise InvalidInputError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}") from None
    return fn(**params)
