"""Brauer groups of diagonal cubic surfaces x^3 + b y^3 + c z^3 + d t^3 = 0, computed exactly."""
from .classifier import (
    BrauerStructure,
    CubeClassVector,
    SurfaceInput,
    brauer_quotient,
    classify_h1,
    cube_class_rational,
    generator_string,
    has_obvious_rational_point,
    normalize,
)
from .cohomology import (
    Cochain,
    FiniteGroup,
    LatticeModule,
    MultiplicativeModule,
    Mu3Module,
    bar_cohomology,
    coboundary_witness,
    connecting_cocycle,
    differential,
    is_cocycle,
    symbol_cocycle,
    tate_h_minus1,
)

__version__ = "0.1.0"
