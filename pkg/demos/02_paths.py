"""From a parking function to its Łukasiewicz path and labeled Dyck path, and back."""

from parkfn import core, lukasiewicz as lk

p = (1, 1, 1, 3, 4, 4, 6)
w = lk.word_from_pf(p)
print("word   ", w.steps)
print("heights", w.heights, " prime path?", w.is_prime)
print("area", lk.area(w), "= displacement", core.displacement(p))

alpha = (2, 1, 3, 1, 3, 1, 6, 4)
path = lk.labeled_path_from_pf(alpha)
print("\nblocks ", path.blocks)
print("alpha_L", lk.alpha_permutation(path))
dyck = lk.dyck_from_labeled_lukas(path)
print("Dyck   ", dyck.word, dyck.labels)
print("back to", lk.pf_from_labeled_dyck(dyck))

des, asc, tie = lk.path_stat_sets(path)
inv = lk.inverse_permutation(lk.alpha_permutation(path))
print("\nDes(L)", sorted(des), " Des(alpha_L^-1)", sorted(core.descent_set(inv)))

# counting by labelings of paths
for n in range(1, 7):
    print(n, lk.count_by_paths(n), lk.count_by_paths(n, prime=True))
