import json
import math
from fractions import Fraction

import pytest

from oracles import all_ppf, mean

from parkfn import expectation as ex
from parkfn.rotation import SampleConfig


def test_spot_values():
    assert ex.expected_pi1_exact(2) == Fraction(5, 4)
    assert ex.expected_pi1_exact(3) == Fraction(14, 9)
    assert ex.expected_displacement_exact(2) == Fraction(9, 4)
    assert ex.poisson_factor_exact(1) == 2
    assert ex.poisson_factor_exact(2) == Fraction(5, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_exact_matches_brute(n):
    ppfs = all_ppf(n + 1)
    assert ex.expected_pi1_exact(n) == mean(p[0] for p in ppfs) == ex.expected_pi1_brute(n)
    dis = mean((n + 1) * (n + 2) // 2 - sum(p) for p in ppfs)
    assert ex.expected_displacement_exact(n) == dis == ex.expected_displacement_brute(n)


@pytest.mark.parametrize("n", [1, 5, 20, 150])
def test_float_backward_product(n):
    assert math.isclose(ex.poisson_factor(n), float(ex.poisson_factor_exact(n)), rel_tol=1e-13)


def test_float_path_beyond_exact_limit():
    n = ex.EXACT_LIMIT + 1
    assert math.isclose(ex.expected_pi1_float(n, exact_limit=0), float(ex.expected_pi1_exact(n)), rel_tol=1e-13)
    assert math.isfinite(ex.expected_pi1_float(10**6))


def test_asymptotic_trend():
    err = [abs(ex.expected_pi1_float(n) - ex.expected_pi1_asymptotic(n)) for n in (10, 100, 1000, 10000)]
    assert err == sorted(err, reverse=True)
    assert err[-1] < 0.05


@pytest.mark.parametrize("n", range(2, 7))
def test_expected_stats(n):
    st = ex.expected_stats_exact(n)
    assert (st.ties, st.des, st.asc) == ex.expected_stats_closed(n)
    assert all(v == 1 for v in st.per_ell.values())


def test_monte_carlo_report():
    rep = ex.monte_carlo_report(SampleConfig(8, 20000, seed=5))
    json.dumps(rep)
    assert set(rep["stats"]) == {"pi1", "displacement", "ties", "des", "asc"}
    for key, e in rep["stats"].items():
        assert abs(e["z"]) < 5, key
    assert rep["stats"]["pi1"]["exact"] == "/".join(map(str, ex.expected_pi1_exact(7).as_integer_ratio()))


def test_monte_carlo_zero_variance():
    rep = ex.monte_carlo_report(SampleConfig(2, 10))
    assert rep["stats"]["ties"]["z"] is None
    assert rep["stats"]["ties"]["mean"] == 1.0
