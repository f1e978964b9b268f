"""Displacement enumerators and forward-difference generating functions."""

from parkfn import genfun

for m in range(2, 7):
    brute = genfun.displacement_enumerator_brute(m)
    paths = genfun.displacement_enumerator_paths(m)
    print(f"PPF_{m}(q) = {brute}   (path sum agrees: {brute == paths})")

n = 5
print()
for ell in range(n - 1):
    print(f"ell={ell}:", genfun.ell_genfun(n, ell))
print("closed:", genfun.ell_genfun_closed(n))

print("\nmixed, ell=0, m=1:", genfun.mixed_genfun(4, 0, 1))
print("closed:           ", genfun.mixed_genfun_closed(4))

print("\nAbel: A_n(1,-1;-1,0) =", [genfun.ppf_count_via_abel(k) for k in range(1, 7)])
