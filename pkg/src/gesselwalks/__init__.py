"""Counting words over a barred alphabet and the confined lattice walks they encode."""

from .dyck import (
    MarkerLists,
    PHConstraint,
    ballot_count,
    catalan,
    count_ph_paths,
    format_path,
    iter_ph_paths,
    marker_floors,
    marker_lists,
    markers_to_word,
    parse_path,
    path_heights,
    word_steps,
    word_to_markers,
)
from .enumeration import (
    count_complete_words,
    iter_complete_words,
    marker_position_triangle,
    profile_triangle_row,
    triangle_rows,
)
from .exceptions import (
    CapExceededError,
    FixtureError,
    GesselError,
    IntegralityError,
    MalformedWordError,
    PathConstraintError,
)
from .formulas import (
    adjacent_marker_sum_closed,
    adjacent_marker_sum_direct,
    bar_first_pair_count,
    bar_first_total,
    catalan_triangle,
    count_words_fixed_markers,
    diamond_equal,
    even_marker_sum_free_closed,
    even_marker_sum_free_direct,
    even_marker_sum_reflected_closed,
    even_marker_sum_reflected_direct,
    gessel_closed_form,
    one_first_total,
    one_pair_closed,
    pair_position_count,
    pochhammer,
    triangle_ext,
)
from .norton import (
    achievable_odd_sums,
    diagonal_columns,
    disjoint_ten_pairs,
    max_suffix_balance,
    norton_count,
    stats,
    sum_witness,
    table_counts,
)
from .walks import count_confined_walks, g_sequence, gessel_steps, walk_count_table
from .words import (
    GesselWord,
    Letter,
    LetterProfile,
    is_complete,
    is_gessel_word,
    letter_profile,
)

__version__ = "0.1.0"

__all__ = [
    "GesselError",
    "MalformedWordError",
    "CapExceededError",
    "PathConstraintError",
    "IntegralityError",
    "FixtureError",
    "Letter",
    "LetterProfile",
    "GesselWord",
    "is_gessel_word",
    "is_complete",
    "letter_profile",
    "iter_complete_words",
    "count_complete_words",
    "profile_triangle_row",
    "marker_position_triangle",
    "triangle_rows",
    "ballot_count",
    "catalan",
    "parse_path",
    "format_path",
    "path_heights",
    "PHConstraint",
    "MarkerLists",
    "marker_floors",
    "marker_lists",
    "word_to_markers",
    "word_steps",
    "markers_to_word",
    "count_ph_paths",
    "iter_ph_paths",
    "gessel_steps",
    "count_confined_walks",
    "walk_count_table",
    "g_sequence",
    "pochhammer",
    "gessel_closed_form",
    "one_pair_closed",
    "catalan_triangle",
    "triangle_ext",
    "bar_first_pair_count",
    "pair_position_count",
    "diamond_equal",
    "count_words_fixed_markers",
    "adjacent_marker_sum_direct",
    "adjacent_marker_sum_closed",
    "even_marker_sum_free_direct",
    "even_marker_sum_free_closed",
    "even_marker_sum_reflected_direct",
    "even_marker_sum_reflected_closed",
    "bar_first_total",
    "one_first_total",
    "stats",
    "disjoint_ten_pairs",
    "max_suffix_balance",
    "sum_witness",
    "achievable_odd_sums",
    "norton_count",
    "table_counts",
    "diagonal_columns",
    "__version__",
]
