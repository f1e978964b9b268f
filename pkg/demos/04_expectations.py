"""Expected first preference and displacement over PPF_{n+1}: exact, float, asymptotic."""

from parkfn import expectation as ex

print(" n        E[pi1]          brute")
for n in range(1, 7):
    print(f"{n:2d} {str(ex.expected_pi1_exact(n)):>14}  {str(ex.expected_pi1_brute(n)):>14}")

print("\n      n     E[pi1]       asymptotic    |diff|")
for n in (10, 100, 1000, 10**4, 10**5):
    e, a = ex.expected_pi1_float(n), ex.expected_pi1_asymptotic(n)
    print(f"{n:7d} {e:12.5f} {a:12.5f} {abs(e - a):9.2e}")

n = 10**4
d, a = ex.expected_displacement_float(n), ex.expected_displacement_asymptotic(n)
print(f"\nE[dis] at n={n}: {d:.1f} vs {a:.1f} (rel {abs(d - a) / d:.1e})")
