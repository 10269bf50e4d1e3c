"""Structure of H^1(k, Pic) and Br(V)/Br(k) for x^3 + b y^3 + c z^3 + d t^3 = 0 from cube classes.

Cube classes live in k*/(k*)^3, written additively as F_3-vectors.  Over the
rationals the coordinates are the primes, and a rational is a cube in Q(ζ)
exactly when it is a cube in Q: if x = c^3 with c in Q(ζ) then
x^2 = N(x) = N(c)^3, so x = (x / N(c))^3.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import sympy

from .cubic_geometry.lines import FieldAutomorphism


class CubeClassVector:
    """Sparse F_3-vector; keys are primes (rational mode) or 0..m-1 (abstract mode)."""

    __slots__ = ("coords", "dimension")

    def __init__(self, coords=None, dimension=None):
        self.coords = {k: v % 3 for k, v in (coords or {}).items() if v % 3}
        self.dimension = dimension
        if dimension is not None and any(not 0 <= k < dimension for k in self.coords):
            raise ValueError("coordinate index outside the declared dimension")

    @classmethod
    def from_vector(cls, values, dimension=None) -> CubeClassVector:
        values = list(values)
        if any(int(v) != v or not 0 <= v <= 2 for v in values):
            raise ValueError("cube-class components must lie in {0, 1, 2}")
        return cls(dict(enumerate(values)), len(values) if dimension is None else dimension)

    def vector(self, keys=None) -> tuple:
        if keys is None:
            keys = range(self.dimension) if self.dimension is not None else sorted(self.coords)
        return tuple(self.coords.get(k, 0) for k in keys)

    def _dim(self, other):
        return self.dimension if self.dimension is not None else other.dimension

    def __add__(self, other):
        acc = dict(self.coords)
        for k, v in other.coords.items():
            acc[k] = acc.get(k, 0) + v
        return CubeClassVector(acc, self._dim(other))

    def __neg__(self):
        return CubeClassVector({k: -v for k, v in self.coords.items()}, self.dimension)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, n: int) -> CubeClassVector:
        return CubeClassVector({k: n * v for k, v in self.coords.items()}, self.dimension)

    def is_trivial(self) -> bool:
        return not self.coords

    def __eq__(self, other):
        return isinstance(other, CubeClassVector) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in sorted(self.coords.items()))
        return f"CubeClassVector({{{inner}}})"


def cube_class_rational(q) -> CubeClassVector:
    """Exponents mod 3 of the prime factorization of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("zero has no cube class")
    coords = dict(sympy.factorint(abs(q.numerator)))
    for p, e in sympy.factorint(q.denominator).items():
        coords[p] = coords.get(p, 0) - e
    coords.pop(1, None)
    return CubeClassVector({int(p): e for p, e in coords.items()})


@dataclass(frozen=True)
class SurfaceInput:
    coefficients: Optional[tuple] = None
    classes: Optional[tuple] = None
    has_rational_point: Optional[bool] = None
    cd_at_most_2: Optional[bool] = None

    def __post_init__(self):
        if (self.coefficients is None) == (self.classes is None):
            raise ValueError("give either four coefficients or three cube classes")
        if self.coefficients is not None:
            coeffs = tuple(Fraction(c) for c in self.coefficients)
            if len(coeffs) != 4:
                raise ValueError("need exactly four coefficients a, b, c, d")
            if any(c == 0 for c in coeffs):
                raise ValueError("coefficients must be nonzero")
            object.__setattr__(self, "coefficients", coeffs)
        else:
            if len(self.classes) != 3:
                raise ValueError("need the three classes of λ, μ, ν")

    @classmethod
    def rational(cls, a, b, c, d, **flags) -> SurfaceInput:
        return cls(coefficients=(a, b, c, d), **flags)

    @classmethod
    def abstract(cls, lam, mu, nu, **flags) -> SurfaceInput:
        return cls(classes=(lam, mu, nu), **flags)

    @property
    def is_rational(self) -> bool:
        return self.coefficients is not None

    def ratios(self) -> tuple:
        """(λ, μ, ν) = (b/a, c/a, ad/(bc)) in rational mode."""
        a, b, c, d = self.coefficients
        return b / a, c / a, a * d / (b * c)


def normalize(inp: SurfaceInput) -> tuple:
    """Cube classes (λ, μ, ν)."""
    if inp.is_rational:
        return tuple(cube_class_rational(r) for r in inp.ratios())
    return tuple(inp.classes)


TRIVIAL, Z3, Z3_SQUARED = "Trivial", "Z3", "Z3Squared"
H1_ONLY, EQUALS_BR_QUOTIENT = "h1_only", "equals_br_quotient"


@dataclass(frozen=True)
class BrauerStructure:
    structure: str
    tag: str
    condition: str

    def invariant_factors(self) -> list[int]:
        return {TRIVIAL: [], Z3: [3], Z3_SQUARED: [3, 3]}[self.structure]


_TRIVIAL_TESTS = (("ν", lambda l, m, n: n), ("ν/λ", lambda l, m, n: n - l), ("ν/μ", lambda l, m, n: n - m))
_SIX_TESTS = (
    ("λ", lambda l, m, n: l),
    ("μ", lambda l, m, n: m),
    ("λ/μ", lambda l, m, n: l - m),
    ("λμν", lambda l, m, n: l + m + n),
    ("λν", lambda l, m, n: l + n),
    ("μν", lambda l, m, n: m + n),
)


def classify_h1(lam: CubeClassVector, mu: CubeClassVector, nu: CubeClassVector) -> BrauerStructure:
    for name, f in _TRIVIAL_TESTS:
        if f(lam, mu, nu).is_trivial():
            return BrauerStructure(TRIVIAL, H1_ONLY, f"{name} is a cube")
    cubes = [name for name, f in _SIX_TESTS if f(lam, mu, nu).is_trivial()]
    if len(cubes) == 3:
        return BrauerStructure(Z3_SQUARED, H1_ONLY, "exactly three cubes among λ, μ, λ/μ, λμν, λν, μν: "
                               + ", ".join(cubes))
    listed = ", ".join(cubes) if cubes else "none"
    return BrauerStructure(Z3, H1_ONLY, f"none of ν, ν/λ, ν/μ is a cube; cubes among the six: {listed}")


def has_obvious_rational_point(inp: SurfaceInput) -> bool:
    """Two coefficients in the same cube class, e.g. a = b u^3 gives the point (u : -1 : 0 : 0).

    The five normal forms x^3+y^3+z^3+v^e t^3 etc. are all of this shape.  With
    cube classes alone the test reads: one of λ, μ, μ/λ, λμν, μν, λν is a cube.
    """
    if inp.is_rational:
        classes = [cube_class_rational(c) for c in inp.coefficients]
        return any(p == q for p, q in itertools.combinations(classes, 2))
    lam, mu, nu = normalize(inp)
    return any(f(lam, mu, nu).is_trivial() for _, f in _SIX_TESTS)


def brauer_quotient(inp: SurfaceInput) -> BrauerStructure:
    """H^1 structure, tagged equals_br_quotient when Br(V)/Br(k) -> H^1 is known to be onto."""
    h1 = classify_h1(*normalize(inp))
    if inp.cd_at_most_2:
        return BrauerStructure(h1.structure, EQUALS_BR_QUOTIENT, h1.condition + "; cd(k) ≤ 2")
    if inp.has_rational_point:
        return BrauerStructure(h1.structure, EQUALS_BR_QUOTIENT, h1.condition + "; V(k) ≠ ∅")
    if inp.has_rational_point is None and has_obvious_rational_point(inp):
        return BrauerStructure(h1.structure, EQUALS_BR_QUOTIENT,
                               h1.condition + "; V(k) ≠ ∅ (two coefficients share a cube class)")
    return h1


def c_of_k_condition(m) -> bool:
    """dim_{F_3} k*/(k*)^3 ≥ 2; ``None`` stands for an infinite dimension."""
    if m is None:
        return True
    if m < 0:
        raise ValueError("dimension must be non-negative")
    return m >= 2


def all_class_triples(m: int):
    """Every (λ, μ, ν) in (F_3^m)^3."""
    vectors = [CubeClassVector.from_vector(v) for v in itertools.product(range(3), repeat=m)]
    return itertools.product(vectors, repeat=3)


def galois_elements(lam, mu, nu) -> list[FieldAutomorphism]:
    """Gal(k(α, γ, α′)/k) inside (Z/3)^3, via Kummer duality.

    An automorphism moving α, γ, α′ by ζ^x, ζ^y, ζ^z exists iff a·x + b·y + c·z ≡ 0
    for every relation λ^a ν^b μ^c ∈ (k*)^3.
    """
    relations = [(a, b, c) for a, b, c in itertools.product(range(3), repeat=3)
                 if (lam.scale(a) + nu.scale(b) + mu.scale(c)).is_trivial()]
    return [FieldAutomorphism(x, y, z) for x, y, z in itertools.product(range(3), repeat=3)
            if all((a * x + b * y + c * z) % 3 == 0 for a, b, c in relations)]


def generator_string(inp: SurfaceInput, result: BrauerStructure) -> Optional[str]:
    """Explicit symbol generating Br(V)/Br(k) when λ is a cube and the quotient is Z/3."""
    if result.structure == Z3_SQUARED:
        return "see Manin"
    if result.structure != Z3 or result.tag != EQUALS_BR_QUOTIENT:
        return None
    lam, _, _ = normalize(inp)
    if not lam.is_trivial():
        return None
    if not inp.is_rational:
        return "{ν, (x+ζαy)/(x+αy)}_3"
    lam_q, _, nu_q = inp.ratios()
    r = _rational_cube_root(lam_q)
    ry = "y" if r == 1 else f"{_fmt(r)}y"
    return f"{{{_fmt(nu_q)}, (x+ζ{ry})/(x+{ry})}}_3"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _rational_cube_root(q: Fraction) -> Fraction:
    def root(n):
        r = sympy.integer_nthroot(abs(n), 3)
        if not r[1]:
            raise ValueError(f"{n} is not a cube")
        return r[0] if n > 0 else -r[0]
    return Fraction(root(q.numerator), root(q.denominator))
