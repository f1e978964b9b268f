from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import fundamental, hook_schur

from parkfn import symfun
from parkfn.errors import InvalidInputError
from parkfn.poly import UniPoly


def as_counts(mv):
    out = {}
    for exp, c in mv.terms.items():
        assert c.degree == 0
        out[exp] = c[0]
    return out


def mono(k, *idx):
    e = [0] * k
    for i in idx:
        e[i - 1] += 1
    return tuple(e)


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (3, 3), (4, 3), (3, 5), (5, 4)])
def test_fundamental_against_oracle(n, k):
    for r in range(n):
        for s in combinations(range(1, n), r):
            assert as_counts(symfun.fundamental_qsym(n, s, k)) == dict(fundamental(n, s, k))


@pytest.mark.parametrize("n,k", [(3, 3), (4, 4), (5, 3), (4, 6)])
def test_hooks_against_tableaux(n, k):
    for i in range(1, n + 1):
        s = symfun.schur_hook(i, n, k)
        assert as_counts(s) == dict(hook_schur(i, n, k))
        assert s.is_symmetric() and s.is_homogeneous(n)


def test_n3_fundamentals_by_hand():
    k = 3
    assert as_counts(symfun.fundamental_qsym(3, {1, 2}, k)) == {mono(k, 1, 2, 3): 1}
    assert as_counts(symfun.fundamental_qsym(3, {1}, k)) == {
        mono(k, 1, 2, 2): 1, mono(k, 1, 3, 3): 1, mono(k, 2, 3, 3): 1, mono(k, 1, 2, 3): 1}
    assert as_counts(symfun.fundamental_qsym(3, {2}, k)) == {
        mono(k, 1, 1, 2): 1, mono(k, 1, 1, 3): 1, mono(k, 2, 2, 3): 1, mono(k, 1, 2, 3): 1}
    assert len(symfun.fundamental_qsym(3, set(), k)) == 10


def test_n3_expansion_term_for_term():
    res = symfun.verify_quasisym(3, 3)
    assert res.equal
    expected = {}
    for a in range(1, 4):
        expected[mono(3, a, a, a)] = 1
        for b in range(1, 4):
            if a != b:
                expected[mono(3, a, a, b)] = 2
    expected[mono(3, 1, 2, 3)] = 4
    assert as_counts(res.lhs) == expected
    s21 = as_counts(symfun.schur_hook(2, 3, 3))
    assert s21[mono(3, 1, 2, 3)] == 2 and len(s21) == 7


@pytest.mark.parametrize("n", range(2, 6))
def test_quasisym_identity(n):
    res = symfun.verify_quasisym(n)
    assert res.equal
    assert res.lhs.is_symmetric()


@pytest.mark.parametrize("n", [3, 4])
def test_quasisym_identity_fewer_variables(n):
    assert symfun.verify_quasisym(n, k=2).equal


@pytest.mark.parametrize("n", [3, 4])
def test_corr_identities(n):
    for ell in range(n - 1):
        for m in range(n - 1):
            if ell != m:
                res = symfun.verify_quasisym_corr(n, ell, m)
                assert res.eq1 and res.eq2


def test_corr_at_q1_is_plain_identity():
    n = 4
    res = symfun.verify_quasisym_corr(n, 0, 1)
    plain = symfun.verify_quasisym(n)
    # q = 1 on the "same residue" side forgets the weight
    assert res.same.lhs.eval_q(1) == plain.lhs.eval_q(1)


def test_single_variable_coefficients():
    n = 5
    res = symfun.verify_quasisym(n)
    x1 = res.lhs.zero_vars({0})
    # only chains with no strict rises survive: the PPF with empty tie set
    assert as_counts(x1) == {mono(n, *[1] * n): (n - 2) ** (n - 1)}
    assert res.lhs.coeff(mono(n, *range(1, n + 1))) == UniPoly.const((n - 1) ** (n - 1))


def test_mvpoly_roundtrip_and_validation():
    p = symfun.verify_quasisym_corr(3, 0, 1).mixed.rhs
    assert symfun.MVPoly.from_json(p.to_json()) == p
    with pytest.raises(InvalidInputError):
        symfun.MVPoly(2, {(1,): 1})
    with pytest.raises(InvalidInputError):
        symfun.fundamental_qsym(3, {3}, 3)
    with pytest.raises(InvalidInputError):
        symfun.verify_quasisym_corr(3, 1, 1)


@given(st.permutations(range(4)))
def test_hook_symmetric_under_any_permutation(perm):
    s = symfun.schur_hook(2, 4, 4)
    assert s.permute_vars(perm) == s


def test_dual_schur_all_small_hooks():
    # schur_hook raises if the F-expansion and the tableau count disagree
    for n in range(1, 7):
        for k in range(1, 7):
            for i in range(1, n + 1):
                s = symfun.schur_hook(i, n, k)
                assert s.is_homogeneous(n)
                assert len(s) == 0 or s.is_symmetric()
