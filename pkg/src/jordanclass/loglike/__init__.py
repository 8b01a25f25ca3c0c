"""Log-like maps for GL_n, SL_n and Sp_4 and their verification."""

from .compat import (
    BatchReport,
    JordanCompatReport,
    batch_jordan_compat,
    batch_stratification,
    check_induction_compat,
    check_jordan_compat,
    check_stratification,
)
from .etale import EtaleCertificate, etale_certificate, fiber_points, fiber_polynomial
from .maps import LogLikeMap, apply
from .sl2char2 import Sl2Char2Report, sl2_char2_report
from .sp4 import MinimalLeviVerdict, Sp4Report, minimal_levi_probe, probe_grid, sp4_isolated_report

__all__ = [
    "BatchReport", "JordanCompatReport", "batch_jordan_compat", "batch_stratification",
    "check_induction_compat", "check_jordan_compat", "check_stratification",
    "EtaleCertificate", "etale_certificate", "fiber_points", "fiber_polynomial",
    "LogLikeMap", "apply", "Sl2Char2Report", "sl2_char2_report",
    "MinimalLeviVerdict", "Sp4Report", "minimal_levi_probe", "probe_grid", "sp4_isolated_report",
]
