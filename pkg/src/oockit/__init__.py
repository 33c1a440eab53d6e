"""Optical orthogonal codes from finite projective geometry.

Constructions over cyclic spreads, a brute-force correlation engine with a
compiled fast path, exact Johnson-type capacity bounds, shape transforms,
and the OOCX file format.
"""

from .bounds import (
    BoundResult,
    bound_relationships,
    gaussian,
    johnson_1d,
    johnson_amops,
    johnson_ideal,
    johnson_nd,
    johnson_nonbinary,
    num_lines,
    optimality_report,
    theta,
)
from .constructions import construct_conic_line_code, construct_spread_line_code
from .field import FieldTable, build_field
from .geometry import SingerGeometry, build_geometry, incidence_array
from .kernels import BACKEND as kernel_backend
from .ooc import (
    Code,
    CodeShape,
    Codeword,
    CorrelationReport,
    canonical_time_shift,
    classify_sections,
    cross_correlation,
    max_cross,
    max_offpeak_auto,
    time_shift,
    validate_code,
)
from .oocx import read_oocx, write_oocx
from .transforms import FoldTransfer, ReshapeTransfer, fold_time, optimality_transfer, reshape

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "Code",
    "CodeShape",
    "Codeword",
    "CorrelationReport",
    "FieldTable",
    "FoldTransfer",
    "ReshapeTransfer",
    "SingerGeometry",
    "bound_relationships",
    "build_field",
    "build_geometry",
    "canonical_time_shift",
    "classify_sections",
    "construct_conic_line_code",
    "construct_spread_line_code",
    "cross_correlation",
    "fold_time",
    "gaussian",
    "incidence_array",
    "johnson_1d",
    "johnson_amops",
    "johnson_ideal",
    "johnson_nd",
    "johnson_nonbinary",
    "kernel_backend",
    "max_cross",
    "max_offpeak_auto",
    "num_lines",
    "optimality_report",
    "optimality_transfer",
    "read_oocx",
    "reshape",
    "theta",
    "time_shift",
    "validate_code",
    "write_oocx",
]
