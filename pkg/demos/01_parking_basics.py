"""Recognising, parking, and counting (prime) parking functions."""

from parkfn import core

p = (3, 2, 1, 1)
print("prefs", p)
print("parking?", core.is_parking_function(p), " prime?", core.is_prime_parking_function(p))

out = core.park(p)
print("spots taken by cars 1..n:", out.spot_of_car)
print("per-car displacement:    ", out.per_car_displacement, " total", out.total)

# dropping a 1 should still leave something that parks
print("(3,2,1) parks?", core.is_parking_function((3, 2, 1)))

print("\nPPF_3 in lexicographic order:")
for q in core.enumerate_ppf(3):
    print("  ", q, "displacement", core.displacement(q))

print("\n n   |PF_n|    |PPF_n|")
for n in range(1, 8):
    print(f"{n:2d} {core.count_pf(n):8d} {core.count_ppf(n):10d}")

prof = core.stat_profile((2, 1, 3, 1, 3, 1, 6, 4))
print("\nDes", sorted(prof.descent_set), "Asc", sorted(prof.ascent_set), "Tie", sorted(prof.tie_set))
