"""Twist isoclasses of irreducible representations of the maximal class groups M_n."""
from .combinatorics import gamma, t_number, t_number_mod
from .cyclotomic import RootOfUnity, depth, roots_of_power
from .enumeration import (
    CaseLabel, ShoutOrbit, case_counts, classify_case, count_twist_isoclasses,
    enumerate_tuples, orbit_of, orbit_size_fast, shout_shift,
)
from .errors import ConsistencyError
from .standard_form import (
    GroupSpec, LambdaTuple, closure_defect, is_irreducible, is_irreducible_by_depth,
    lambda_entry, minimal_period_exponent, profile, reducibility_ratio,
)
from .zeta import RationalSeries, expand, global_coefficients, local_closed_form

__version__ = '0.1.0'
