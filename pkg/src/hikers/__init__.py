"""Hiker's tracks, end-homogeneous witnesses and exact p(k, r, n) numbers for finite colorings."""

from .coloring import Coloring, ColoringOracle, KrtFormatError, color_of, gen_coloring, parse_krt, truncate, write_krt
from .combinatorics import binomial, colex_rank, colex_unrank
from .homogeneity import (
    MonochromaticWitness,
    TrieStats,
    WitnessSequence,
    build_track_trie,
    extract_monochromatic,
    find_end_homogeneous,
    is_end_homogeneous,
    is_monochromatic,
    longest_track_sequence,
    pigeonhole_extract,
)
from .pnumbers import (
    BudgetExceeded,
    PNumberReport,
    StatementSpec,
    exact_p,
    statement_holds,
    theorem9_bound,
    verify_bound_grid,
)
from .track import HikerMap, Track, build_track, check_injectivity, count_distinct_maps, hiker_map

__version__ = "0.1.0"
