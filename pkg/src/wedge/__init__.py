"""Exact arithmetic for the BM 15285 problem xii figure and the YBC 7289 constants."""

from .construction import builtin_scripts, execute, format_script, parse_script
from .errors import (
    CoincidentLinesError,
    DegenerateLineError,
    DomainError,
    FalsificationError,
    GeometryError,
    InapplicableStepError,
    ParallelLinesError,
    ParseError,
    VerificationError,
    WedgeError,
)
from .geometry import (
    Figure,
    Line,
    Point,
    build_bm15285_figure,
    build_ybc7289_figure,
    verify_problem_xii,
)
from .numeric import QuadValue, approx_decimal, format_rat, isqrt, parse_rat, quad_sign
from .proofs import (
    DescentPair,
    IrrationalityCertificate,
    decide_sqrt_rational,
    descent_step,
    irrationality_gap,
    no_solution_search,
    parity_lemma,
)
from .render import render_svg
from .sexagesimal import (
    SexValue,
    best_sex_approx,
    best_sex_approx_recip,
    format_sex,
    heron_sqrt_sex,
    parse_sex,
    rational_to_sex,
    sex_scale,
    sex_to_rational,
)

__version__ = "0.1.0"
