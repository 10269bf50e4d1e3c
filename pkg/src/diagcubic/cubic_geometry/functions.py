"""Rational functions on the surface built from linear forms, and their divisors.

A ``MonomialFunction`` is ``scalar * prod(form_i ** e_i)`` with ``scalar`` a
monomial unit of the coefficient ring and each ``form_i`` a linear form in
x, y, z, t normalised to leading coefficient 1.  On the surface the three
splittings of the cubic give relations such as

    (x+αy)(x+ζαy)(x+ζ²αy) = -mu (z+βt)(z+ζβt)(z+ζ²βt)

and the canonical form eliminates the ζ² member of each left-hand triple.
"""
from __future__ import annotations

from functools import lru_cache

from ..exact_algebra.laurent import (
    ALPHA,
    ALPHA_PRIME,
    BETA,
    BETA_PRIME,
    LAMBDA,
    MU,
    ONE,
    ZERO,
    SymbolicScalar,
    symbolic_det,
    zeta_power,
)
from .lines import ALL_LABELS, FieldAutomorphism, LineLabel, action_on_lines, build_lines, normalize_plane, plane
from .picard import class_of_line

X_FORM = plane(ONE)


def a_form(i: int):
    """x + ζ^i α y"""
    return plane(ONE, zeta_power(i) * ALPHA)


def b_form(j: int):
    """z + ζ^j β t"""
    return plane(z=ONE, t=zeta_power(j) * BETA)


def _relations():
    alpha_inv = ALPHA.inverse()
    fams = [
        ([a_form(i) for i in range(3)], [b_form(j) for j in range(3)], -MU),
        ([plane(ONE, z=zeta_power(i) * ALPHA_PRIME) for i in range(3)],
         [plane(y=ONE, t=zeta_power(j) * BETA_PRIME) for j in range(3)], -LAMBDA),
        ([plane(ONE, t=zeta_power(i) * ALPHA * BETA_PRIME) for i in range(3)],
         [plane(y=ONE, z=zeta_power(j) * alpha_inv * ALPHA_PRIME) for j in range(3)], -LAMBDA),
    ]
    return [(lhs, rhs, c) for lhs, rhs, c in fams]


# each entry: (P0, P1, P2), (Q0, Q1, Q2), c   with  P0 P1 P2 = c Q0 Q1 Q2 on the surface
RELATIONS = _relations()
_ELIMINATE = {lhs[2]: (lhs[0], lhs[1], rhs, c) for lhs, rhs, c in RELATIONS}


def _form_key(form):
    return tuple(sorted((e, str(c)) for x in form for e, c in x.terms.items())), str(form)


class MonomialFunction:
    __slots__ = ("scalar", "_factors", "_hash")

    def __init__(self, scalar=ONE, factors=None):
        scalar = SymbolicScalar.coerce(scalar)
        if not scalar.is_unit():
            raise ValueError(f"scalar part {scalar} must be a monomial unit")
        acc = {}
        for form, e in (factors or {}).items():
            if not e:
                continue
            lead, norm = normalize_plane(form)
            scalar = scalar * lead ** e
            acc[norm] = acc.get(norm, 0) + e
        for elim, (p0, p1, rhs, c) in _ELIMINATE.items():
            e = acc.pop(elim, 0)
            if e:
                scalar = scalar * c ** e
                acc[p0] = acc.get(p0, 0) - e
                acc[p1] = acc.get(p1, 0) - e
                for q in rhs:
                    acc[q] = acc.get(q, 0) + e
        self.scalar = scalar
        self._factors = {f: e for f, e in acc.items() if e}
        self._hash = None

    @classmethod
    def _raw(cls, scalar, factors) -> MonomialFunction:
        # factors already normalized (products, inverses, powers of existing functions)
        f = cls.__new__(cls)
        f.scalar = scalar
        f._factors = {k: e for k, e in factors.items() if e}
        f._hash = None
        return f

    @classmethod
    def form(cls, coeffs) -> MonomialFunction:
        return cls(ONE, {tuple(coeffs): 1})

    @classmethod
    def constant(cls, c) -> MonomialFunction:
        return cls(c)

    @property
    def factors(self) -> dict:
        return dict(self._factors)

    def degree(self) -> int:
        return sum(self._factors.values())

    def is_constant(self) -> bool:
        return not self._factors

    def is_one(self) -> bool:
        return not self._factors and self.scalar == ONE

    def linear_part(self) -> MonomialFunction:
        f = MonomialFunction()
        f._factors = dict(self._factors)
        return f

    def __eq__(self, other):
        if isinstance(other, SymbolicScalar):
            other = MonomialFunction(other)
        if not isinstance(other, MonomialFunction):
            return NotImplemented
        return self.scalar == other.scalar and self._factors == other._factors

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.scalar, frozenset(self._factors.items())))
        return self._hash

    def __mul__(self, other):
        if isinstance(other, (SymbolicScalar, int)):
            other = MonomialFunction(other)
        if not isinstance(other, MonomialFunction):
            return NotImplemented
        acc = dict(self._factors)
        for f, e in other._factors.items():
            acc[f] = acc.get(f, 0) + e
        return MonomialFunction._raw(self.scalar * other.scalar, acc)

    __rmul__ = __mul__

    def inverse(self) -> MonomialFunction:
        return MonomialFunction._raw(self.scalar.inverse(), {f: -e for f, e in self._factors.items()})

    def __truediv__(self, other):
        if isinstance(other, (SymbolicScalar, int)):
            other = MonomialFunction(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return MonomialFunction(other) * self.inverse()

    def __pow__(self, n: int):
        return MonomialFunction._raw(self.scalar ** n, {f: e * n for f, e in self._factors.items()})

    def galois(self, g: FieldAutomorphism) -> MonomialFunction:
        return MonomialFunction(
            g.apply(self.scalar),
            {tuple(g.apply(c) for c in f): e for f, e in self._factors.items()},
        )

    def __repr__(self):
        return f"MonomialFunction({self})"

    def __str__(self):
        parts = [] if self.scalar == ONE else [f"({self.scalar})"]
        for f, e in sorted(self._factors.items(), key=lambda fe: _form_key(fe[0])):
            s = format_form(f)
            parts.append(f"({s})" if e == 1 else f"({s})^{e}")
        return "·".join(parts) or "1"


_VARS = "xyzt"


def format_form(form) -> str:
    out = []
    for v, c in zip(_VARS, form):
        if c.is_zero():
            continue
        if c == ONE:
            out.append(v)
        else:
            out.append(f"({c}){v}")
    return " + ".join(out)


def a_ratio(i: int, j: int) -> MonomialFunction:
    """(x + ζ^i α y) / (z + ζ^j β t)"""
    return MonomialFunction(ONE, {a_form(i): 1, b_form(j): -1})


def f_function(n: int) -> MonomialFunction:
    """The functions f1, ..., f5 spanning the principal part of the lattice D."""
    if n in (1, 2):
        num = a_form(n - 1)
    elif n in (3, 4, 5):
        num = b_form(n - 3)
    else:
        raise ValueError("f_n is defined for n = 1..5")
    return MonomialFunction(ONE, {num: 1, X_FORM: -1})


# ----- the lattice D = Z H + sum Z L(i) + sum Z L'(i) + sum Z L''(i) -----

DIVISOR_BASIS = ("H",) + tuple(LineLabel(f, i) for f in ("L", "Lp", "Ldp") for i in range(3))
DIVISOR_RANK = 10


class DivisorOutsideLattice(ValueError):
    pass


def divisor_unit(key) -> tuple:
    k = DIVISOR_BASIS.index(key)
    return tuple(int(i == k) for i in range(DIVISOR_RANK))


def _rank_at_most_2(rows) -> bool:
    # all 3x3 minors of a 3x4 matrix vanish
    for drop in range(4):
        cols = [k for k in range(4) if k != drop]
        if not symbolic_det([[r[k] for k in cols] for r in rows]).is_zero():
            return False
    return True


@lru_cache(maxsize=None)
def lines_in_plane(form) -> tuple:
    lines = build_lines()
    return tuple(lab for lab in ALL_LABELS if _rank_at_most_2([form, *lines[lab]]))


def divisor_of_form(form) -> tuple:
    _, form = normalize_plane(form)
    if form == X_FORM:
        return divisor_unit("H")
    found = lines_in_plane(form)
    if not found or any(lab not in DIVISOR_BASIS for lab in found):
        raise DivisorOutsideLattice(f"divisor outside D: plane {format_form(form)}")
    v = [0] * DIVISOR_RANK
    for lab in found:
        v[DIVISOR_BASIS.index(lab)] += 1
    return tuple(v)


def divisor_of_function(f: MonomialFunction) -> tuple:
    if f.degree() != 0:
        raise ValueError(f"function {f} is not homogeneous of degree 0")
    v = [0] * DIVISOR_RANK
    for form, e in f.factors.items():
        for k, x in enumerate(divisor_of_form(form)):
            v[k] += e * x
    return tuple(v)


@lru_cache(maxsize=None)
def _action_on_divisors(g: FieldAutomorphism) -> tuple:
    perm = action_on_lines(g)
    m = [[0] * DIVISOR_RANK for _ in range(DIVISOR_RANK)]
    m[0][0] = 1
    for k, lab in enumerate(DIVISOR_BASIS[1:], start=1):
        img = perm[lab]
        if img not in DIVISOR_BASIS:
            raise RuntimeError(f"D is not stable under {g}: {lab} -> {img}")
        m[DIVISOR_BASIS.index(img)][k] = 1
    return tuple(tuple(r) for r in m)


def action_on_divisors(g: FieldAutomorphism) -> list[list[int]]:
    return [list(r) for r in _action_on_divisors(g)]


def divisor_to_pic_matrix() -> list[list[int]]:
    """7x10 matrix of the class map D -> Pic."""
    from .picard import HYPERPLANE

    cols = [HYPERPLANE] + [class_of_line(lab) for lab in DIVISOR_BASIS[1:]]
    return [[c[i] for c in cols] for i in range(7)]


def divisor_to_pic(v) -> tuple:
    m = divisor_to_pic_matrix()
    return tuple(sum(m[i][k] * v[k] for k in range(DIVISOR_RANK)) for i in range(7))


def principal_basis() -> list[tuple]:
    """Divisors D1..D5 of f1..f5."""
    return [divisor_of_function(f_function(n)) for n in range(1, 6)]


def format_divisor(v) -> str:
    terms = []
    for k, c in enumerate(v):
        if not c:
            continue
        name = "H" if k == 0 else DIVISOR_BASIS[k].pretty()
        coef = "" if abs(c) == 1 else str(abs(c))
        terms.append(("- " if c < 0 else "+ ") + coef + name)
    if not terms:
        return "0"
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
