"""Fundamental quasisymmetric expansion of PPF_n by tie sets vs hook Schur functions."""

from parkfn import symfun

res = symfun.verify_quasisym(3, 3)
print("sum of F_{3,Tie}:", res.lhs)
print("hook side:       ", res.rhs)
print("equal:", res.equal)

for i in range(1, 4):
    print(f"s_({i},1^{3 - i}) =", symfun.schur_hook(i, 3, 3))

for n in range(2, 6):
    print(n, symfun.verify_quasisym(n).equal)

r = symfun.verify_quasisym_corr(4, 0, 1)
print("\nq-refined identities at n=4, (ell,m)=(0,1):", r.eq1, r.eq2)
