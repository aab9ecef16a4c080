"""Exact polyomino strip-tiling counts, generating functions, and entropy bounds."""

from .automaton import (
    AutomatonError,
    CountSeries,
    OracleLimitError,
    TransferAutomaton,
    brute_force_count,
    build_automaton,
    count_rect,
    series,
    to_dot,
    trim_reachable,
)
from .gf import (
    LinearRecurrence,
    NoTilingsError,
    RationalGF,
    RecurrenceError,
    detect_step,
    expand,
    faultfree,
    from_faultfree,
    infer_recurrence,
    poly_gcd,
    recurrence_to_gf,
    resample,
    strip_gf,
)
from .ising import (
    BETA_CRITICAL,
    BETA_TILING,
    IsingBound,
    IsingError,
    eight_cell_bound,
    fylfot_sum,
    onsager_entropy,
    spin_weight_sum,
    t_tetromino_bound,
)
from .poly import (
    Polyomino,
    TileError,
    TileSet,
    make_tileset,
    orientations,
    parse_polyomino,
    parse_tile_file,
    preset,
)
from .spectral import (
    EntropyReport,
    SpectralError,
    dominant_root,
    entropy_lower,
    entropy_upper,
    perron_root,
    residual,
    strip_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "AutomatonError",
    "BETA_CRITICAL",
    "BETA_TILING",
    "CountSeries",
    "EntropyReport",
    "IsingBound",
    "IsingError",
    "LinearRecurrence",
    "NoTilingsError",
    "OracleLimitError",
    "Polyomino",
    "RationalGF",
    "RecurrenceError",
    "SpectralError",
    "TileError",
    "TileSet",
    "TransferAutomaton",
    "brute_force_count",
    "build_automaton",
    "count_rect",
    "detect_step",
    "dominant_root",
    "eight_cell_bound",
    "entropy_lower",
    "entropy_upper",
    "expand",
    "faultfree",
    "from_faultfree",
    "fylfot_sum",
    "infer_recurrence",
    "make_tileset",
    "onsager_entropy",
    "orientations",
    "parse_polyomino",
    "parse_tile_file",
    "perron_root",
    "poly_gcd",
    "preset",
    "recurrence_to_gf",
    "resample",
    "residual",
    "series",
    "spin_weight_sum",
    "strip_entropy",
    "strip_gf",
    "t_tetromino_bound",
    "to_dot",
    "trim_reachable",
]
