"""Uniform prime parking functions by circular rotation, checked against exact means."""

import numpy as np

from parkfn import expectation as ex
from parkfn.rotation import SampleConfig, kalikow_sample_array, rotate, rotation_shift

p0 = (2, 3, 3, 2)
print(p0, "-> shift", rotation_shift(p0), "->", rotate(p0, rotation_shift(p0)))

cfg = SampleConfig(n=4, samples=200_000, seed=7)
arr = kalikow_sample_array(cfg)
rows, counts = np.unique(arr, axis=0, return_counts=True)
print(f"\n{len(rows)} distinct PPF_4 seen; counts range {counts.min()}..{counts.max()} (expect ~{cfg.samples // 27})")

rep = ex.monte_carlo_report(SampleConfig(n=50, samples=100_000, seed=1))
print("\nn=50, 1e5 samples")
for key, e in rep["stats"].items():
    print(f"  {key:13s} mean {e['mean']:10.4f}  se {e['se']:.4f}  exact {e['exact_float']:10.4f}  z {e['z']:+.2f}")
