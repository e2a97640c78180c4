"""gamma_4 bounds, with evidence, for double twist knots C(m, n)."""
from .bridge import DoubleTwist, TwoBridgeFraction, canonicalize, classifying_fraction
from .obstructions import lower_bound
from .report import GenusReport, genus_report
from .surgery import upper_bound

__all__ = [
    "DoubleTwist",
    "GenusReport",
    "TwoBridgeFraction",
    "canonicalize",
    "classifying_fraction",
    "genus_report",
    "lower_bound",
    "upper_bound",
]
