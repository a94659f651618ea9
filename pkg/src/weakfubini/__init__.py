"""Boolean intervals in the right weak order of S_n, counted and listed
through unit Fubini rankings."""

from .counting import (
    f_closed,
    f_total,
    fiber_count,
    fiber_count_nontrivial,
    fibonacci,
    fubini_number,
    generator_fiber_count,
    stirling2,
    weakly_increasing_ufr_count,
)
from .fubini import delta, delta_set, fiber, is_fubini_ranking, is_unit_fubini, phi, phi_inverse
from .parking import block_structure, is_parking_function, is_unit_interval_pf, park
from .perm import Permutation, ascent_blocks, ascent_set, descent_set, inverse, simple_transposition
from .weak_order import BooleanInterval, as_boolean_interval, boolean_intervals_with_min, covers, less_equal

__version__ = "0.1.0"
