"""Laurent polynomials in alpha, gamma, alpha' over Q(zeta).

``SymbolicScalar`` models the ring Q(zeta)[alpha^±, gamma^±, alpha'^±] with
the three generators algebraically independent.  The cube roots
lambda = alpha^3, nu = gamma^3, mu = alpha'^3 stay formal monomials.
"""
from __future__ import annotations

from itertools import permutations

from .cyclotomic import Cyclotomic

VARIABLES = ("α", "γ", "α′")


class SymbolicScalar:
    """Immutable Laurent polynomial; ``terms`` maps (p, q, r) to a nonzero coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in dict(terms).items():
                c = Cyclotomic.coerce(c)
                if not c.is_zero():
                    clean[tuple(int(e) for e in exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c) -> SymbolicScalar:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, exp, coeff=1) -> SymbolicScalar:
        return cls({tuple(exp): coeff})

    @classmethod
    def coerce(cls, x) -> SymbolicScalar:
        if isinstance(x, SymbolicScalar):
            return x
        return cls.constant(x)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self._terms)

    def leading(self):
        """The single (exponent, coefficient) pair of a unit."""
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        return next(iter(self._terms.items()))

    def __eq__(self, other):
        if not isinstance(other, SymbolicScalar):
            try:
                other = SymbolicScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        try:
            other = SymbolicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out[e] + c if e in out else c
        return SymbolicScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicScalar({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-SymbolicScalar.coerce(other))

    def __rsub__(self, other):
        return SymbolicScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = SymbolicScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for (p1, q1, r1), c1 in self._terms.items():
            for (p2, q2, r2), c2 in other._terms.items():
                e = (p1 + p2, q1 + q2, r1 + r2)
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return SymbolicScalar(out)

    __rmul__ = __mul__

    def inverse(self) -> SymbolicScalar:
        (p, q, r), c = self.leading()
        return SymbolicScalar({(-p, -q, -r): c.inverse()})

    def __truediv__(self, other):
        return self * SymbolicScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return SymbolicScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, i: int, j: int, k: int) -> SymbolicScalar:
        """Apply alpha -> zeta^i alpha, gamma -> zeta^j gamma, alpha' -> zeta^k alpha'."""
        return SymbolicScalar({
            (p, q, r): c * Cyclotomic.zeta_power(i * p + j * q + k * r)
            for (p, q, r), c in self._terms.items()
        })

    def __repr__(self):
        return f"SymbolicScalar({self._terms!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in sorted(self._terms.items()):
            mono = "·".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(VARIABLES, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}·{mono}")
        return " + ".join(parts)


ZERO = SymbolicScalar()
ONE = SymbolicScalar.constant(1)
ZETA = SymbolicScalar.constant(Cyclotomic(0, 1))
ALPHA = SymbolicScalar.monomial((1, 0, 0))
GAMMA = SymbolicScalar.monomial((0, 1, 0))
ALPHA_PRIME = SymbolicScalar.monomial((0, 0, 1))
BETA = ALPHA * GAMMA
BETA_PRIME = ALPHA_PRIME * GAMMA
LAMBDA = ALPHA ** 3
NU = GAMMA ** 3
MU = ALPHA_PRIME ** 3


def zeta_power(k: int) -> SymbolicScalar:
    return SymbolicScalar.constant(Cyclotomic.zeta_power(k))


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symbolic_det(m) -> SymbolicScalar:
    """Exact determinant of a square matrix (size <= 4) of SymbolicScalar entries."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("symbolic_det needs a square matrix")
    if n > 4:
        raise ValueError("symbolic_det supports size <= 4")
    rows = [[SymbolicScalar.coerce(x) for x in row] for row in m]
    total = ZERO
    for perm in permutations(range(n)):
        term = ONE
        for i, j in enumerate(perm):
            term = term * rows[i][j]
            if term.is_zero():
                break
        if not term.is_zero():
            total = total + (term if _perm_sign(perm) > 0 else -term)
    return total
