"""Exact enumeration, counting, sampling, and identity checking for parking functions."""

from parkfn.core import (
    ParkingOutcome,
    PrefVector,
    StatProfile,
    count_forward_diff_set,
    count_forward_diff_set_pair,
    count_pf,
    count_pf_first,
    count_pf_ones,
    count_ppf,
    count_ppf_first,
    displacement,
    enumerate_pf,
    enumerate_ppf,
    f_n_jk,
    forward_differences,
    is_parking_function,
    is_prime_parking_function,
    park,
    stat_profile,
)
from parkfn.errors import (
    ConsistencyError,
    InvalidInputError,
    LimitExceeded,
    ParkfnError,
    ParkingFailure,
    PoleError,
)
from parkfn.expectation import (
    expected_displacement_exact,
    expected_pi1_exact,
    monte_carlo_report,
)
from parkfn.genfun import (
    abel_sum,
    displacement_enumerator_brute,
    displacement_enumerator_paths,
    displacement_enumerator_prime_paths,
    ell_genfun,
    mixed_genfun,
)
from parkfn.lukasiewicz import (
    LabeledDyckPath,
    LabeledLukasiewiczPath,
    LukasiewiczWord,
    area,
    labeled_path_from_pf,
    word_from_pf,
)
from parkfn.poly import BiPoly, UniPoly
from parkfn.rotation import SampleConfig, kalikow_sample, l_inverse, l_map
from parkfn.symfun import MVPoly, fundamental_qsym, schur_hook

__version__ = "0.1.0"
