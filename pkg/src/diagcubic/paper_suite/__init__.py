from .suite import (
    CHECKS,
    FAULTS,
    CheckReport,
    full_report,
    inject_fault,
    theorem2_skeleton,
    verify_generators,
    verify_geometry,
    verify_step1,
    verify_steps2to4,
    verify_theorem1,
)
from .tables import reference_data

__all__ = [
    "CHECKS", "FAULTS", "CheckReport", "full_report", "inject_fault", "reference_data",
    "theorem2_skeleton", "verify_generators", "verify_geometry", "verify_step1",
    "verify_steps2to4", "verify_theorem1",
]
