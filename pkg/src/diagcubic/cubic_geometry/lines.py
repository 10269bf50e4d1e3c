"""The 27 lines on x^3 + lambda y^3 + mu z^3 + lambda mu nu t^3 = 0.

Each line is stored as a pair of plane coefficient vectors over the coordinates
(x, y, z, t).  The pair is kept in reduced echelon form so that the key of a
line is independent of how it was produced (in particular after applying a
Galois automorphism).
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from ..exact_algebra.laurent import (
    ALPHA,
    ALPHA_PRIME,
    BETA,
    BETA_PRIME,
    LAMBDA,
    MU,
    NU,
    ONE,
    ZERO,
    SymbolicScalar,
    symbolic_det,
    zeta_power,
)

FAMILIES = ("L", "Lp", "Ldp", "M", "Mp", "Mdp", "N", "Np", "Ndp")
_PRETTY = {"L": "L", "Lp": "L′", "Ldp": "L″", "M": "M", "Mp": "M′", "Mdp": "M″",
           "N": "N", "Np": "N′", "Ndp": "N″"}


class LineLabel(NamedTuple):
    family: str
    index: int

    def __str__(self):
        return f"{self.family}{self.index}"

    def pretty(self) -> str:
        return f"{_PRETTY[self.family]}({self.index})"

    @classmethod
    def parse(cls, text: str) -> LineLabel:
        fam, idx = text[:-1], int(text[-1])
        if fam not in FAMILIES or idx not in (0, 1, 2):
            raise ValueError(f"bad line label {text!r}")
        return cls(fam, idx)


ALL_LABELS = tuple(LineLabel(f, i) for f in FAMILIES for i in range(3))


class FieldAutomorphism(NamedTuple):
    """alpha -> zeta^alpha alpha, gamma -> zeta^gamma gamma, alpha' -> zeta^alpha_prime alpha'."""

    alpha: int
    gamma: int
    alpha_prime: int

    def __mul__(self, other):
        return FieldAutomorphism(
            (self.alpha + other.alpha) % 3,
            (self.gamma + other.gamma) % 3,
            (self.alpha_prime + other.alpha_prime) % 3,
        )

    def __pow__(self, n: int):
        return FieldAutomorphism(self.alpha * n % 3, self.gamma * n % 3, self.alpha_prime * n % 3)

    def inverse(self):
        return self ** 2

    def apply(self, x: SymbolicScalar) -> SymbolicScalar:
        return x.galois(*self)

    @property
    def exponents(self) -> tuple[int, int, int]:
        """Exponents (a, b, c) in the word s^a t^b w^c."""
        return self.gamma, self.alpha, self.alpha_prime

    def __str__(self):
        a, b, c = self.exponents
        return f"s^{a} t^{b} w^{c}"


def word(s: int = 0, t: int = 0, w: int = 0) -> FieldAutomorphism:
    """The automorphism s^s t^t w^w (t moves alpha, s moves gamma, w moves alpha')."""
    return FieldAutomorphism(t % 3, s % 3, w % 3)


IDENTITY = word()
S = word(s=1)
T = word(t=1)
W = word(w=1)


def _z(k):
    return zeta_power(k)


def plane(x=ZERO, y=ZERO, z=ZERO, t=ZERO) -> tuple:
    return tuple(SymbolicScalar.coerce(c) for c in (x, y, z, t))


def pivot(p) -> int:
    for k, c in enumerate(p):
        if not c.is_zero():
            return k
    raise ValueError("zero plane")


def normalize_plane(p):
    """Return (lead, q) with p == lead * q and the first nonzero entry of q equal to 1."""
    lead = p[pivot(p)]
    if not lead.is_unit():
        raise ValueError(f"plane leading coefficient {lead} is not a unit")
    inv = lead.inverse()
    return lead, tuple(c * inv for c in p)


def canonical_pair(p1, p2):
    """Reduced echelon form of the 2x4 system; raises if the planes are dependent."""
    _, p1 = normalize_plane(p1)
    _, p2 = normalize_plane(p2)
    if pivot(p2) < pivot(p1):
        p1, p2 = p2, p1
    k1 = pivot(p1)
    if pivot(p2) == k1:
        c = p2[k1]
        p2 = tuple(b - c * a for a, b in zip(p1, p2))
        _, p2 = normalize_plane(p2)
        if pivot(p2) < k1:
            raise ValueError("unexpected pivot order")
    k2 = pivot(p2)
    c = p1[k2]
    if not c.is_zero():
        p1 = tuple(a - c * b for a, b in zip(p1, p2))
    return (p1, p2)


@lru_cache(maxsize=None)
def build_lines() -> dict:
    """Map every LineLabel to its (canonical) pair of planes."""
    out = {}
    alpha_inv = ALPHA.inverse()
    for i in range(3):
        a_plane = plane(ONE, _z(i) * ALPHA)
        for fam, off in (("L", 0), ("Lp", 1), ("Ldp", 2)):
            out[LineLabel(fam, i)] = canonical_pair(a_plane, plane(z=ONE, t=_z(i + off) * BETA))
        c_plane = plane(ONE, z=_z(i) * ALPHA_PRIME)
        for fam, off in (("M", 1), ("Mp", 2), ("Mdp", 0)):
            out[LineLabel(fam, i)] = canonical_pair(c_plane, plane(y=ONE, t=_z(i + off) * BETA_PRIME))
        e_plane = plane(ONE, t=_z(i) * ALPHA * BETA_PRIME)
        for fam, off in (("N", 2), ("Np", 0), ("Ndp", 1)):
            out[LineLabel(fam, i)] = canonical_pair(
                e_plane, plane(y=ONE, z=_z(i + off) * alpha_inv * ALPHA_PRIME))
    return {lab: out[lab] for lab in ALL_LABELS}


SURFACE_COEFFICIENTS = (ONE, LAMBDA, MU, LAMBDA * MU * NU)


def lies_on_surface(pair) -> bool:
    """Substitute a parametrisation of the line into the cubic and test for identical vanishing."""
    p1, p2 = pair
    k1, k2 = pivot(p1), pivot(p2)
    free = [k for k in range(4) if k not in (k1, k2)]
    # coordinate k as a linear form a*u + b*v in the two free coordinates
    coords = [None] * 4
    coords[free[0]] = (ONE, ZERO)
    coords[free[1]] = (ZERO, ONE)
    coords[k1] = (-p1[free[0]], -p1[free[1]])
    coords[k2] = (-p2[free[0]], -p2[free[1]])
    cubic = [ZERO] * 4  # coefficients of u^3, u^2 v, u v^2, v^3
    for c, (a, b) in zip(SURFACE_COEFFICIENTS, coords):
        cubic[0] += c * a * a * a
        cubic[1] += c * 3 * a * a * b
        cubic[2] += c * 3 * a * b * b
        cubic[3] += c * b * b * b
    return all(x.is_zero() for x in cubic)


def lines_intersect(p, q) -> bool:
    """Two distinct lines meet iff their four spanning planes are linearly dependent."""
    if p == q:
        raise ValueError("self-intersection of a line is undefined here")
    return symbolic_det([*p, *q]).is_zero()


@lru_cache(maxsize=None)
def _line_lookup() -> dict:
    return {pair: lab for lab, pair in build_lines().items()}


def apply_to_pair(g: FieldAutomorphism, pair):
    return canonical_pair(*(tuple(g.apply(c) for c in p) for p in pair))


@lru_cache(maxsize=None)
def action_on_lines(g: FieldAutomorphism) -> dict:
    """Permutation of the 27 labels induced by ``g``."""
    lines, lookup = build_lines(), _line_lookup()
    perm = {}
    for lab, pair in lines.items():
        image = apply_to_pair(g, pair)
        if image not in lookup:
            raise RuntimeError(f"image of {lab} under {g} is not one of the 27 lines")
        perm[lab] = lookup[image]
    if len(set(perm.values())) != 27:
        raise RuntimeError("line action is not a bijection")
    return perm


@lru_cache(maxsize=None)
def _incidence() -> tuple:
    lines = build_lines()
    n = len(ALL_LABELS)
    m = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            hit = lines_intersect(lines[ALL_LABELS[i]], lines[ALL_LABELS[j]])
            m[i][j] = m[j][i] = hit
    return tuple(tuple(row) for row in m)


def incidence_graph() -> list[list[bool]]:
    """27x27 symmetric meeting matrix, rows ordered as ``ALL_LABELS``."""
    return [list(row) for row in _incidence()]


def meets(a: LineLabel, b: LineLabel) -> bool:
    return _incidence()[ALL_LABELS.index(a)][ALL_LABELS.index(b)]


def incidence_json(incidence=None) -> dict:
    incidence = incidence or incidence_graph()
    return {
        str(a): [str(b) for j, b in enumerate(ALL_LABELS) if incidence[i][j]]
        for i, a in enumerate(ALL_LABELS)
    }
