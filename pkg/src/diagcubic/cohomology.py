"""Inhomogeneous cochains of finite groups and the operations built on them.

Coefficient modules come in three kinds:

* ``LatticeModule``: Z^r with an integer matrix per group element;
* ``MultiplicativeModule``: functions/scalars with the Galois action, written
  multiplicatively;
* ``Mu3Module``: Z/3 (exponents of zeta) with trivial action.

Cochains are dense: a value for every n-tuple of group elements.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cubic_geometry.functions import MonomialFunction
from .cubic_geometry.lines import FieldAutomorphism, word
from .exact_algebra.intlinalg import (
    identity,
    integer_kernel,
    inverse_unimodular,
    matmul,
    rank_mod_p,
    smith_normal_form,
    solve_linear,
    transpose,
)
from .exact_algebra.laurent import ALPHA, ALPHA_PRIME, GAMMA, ONE, SymbolicScalar, zeta_power


class FiniteGroup:
    """A finite group given by its elements and multiplication table."""

    def __init__(self, elements, table, identity_index=None, labels=None):
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        n = len(self.elements)
        if identity_index is None:
            identity_index = next(i for i in range(n)
                                  if all(self.table[i][j] == j for j in range(n)))
        self.identity = identity_index
        self.labels = list(labels) if labels else [str(e) for e in self.elements]
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._check_axioms()
        self.inverses = [next(j for j in range(n) if self.table[i][j] == self.identity)
                         for i in range(n)]

    def _check_axioms(self):
        n = len(self.elements)
        t = self.table
        if any(sorted(row) != list(range(n)) for row in t):
            raise ValueError("multiplication table is not a Latin square")
        if any(t[self.identity][j] != j or t[j][self.identity] != j for j in range(n)):
            raise ValueError("identity element is not neutral")
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError("multiplication is not associative")

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self._index[element]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def __len__(self):
        return len(self.elements)

    @classmethod
    def galois(cls, generators) -> FiniteGroup:
        """Subgroup of (Z/3)^3 = <s, t, w> generated by FieldAutomorphisms."""
        elems = {word()}
        frontier = [word()]
        gens = list(generators)
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    h = e * g
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
            frontier = nxt
        elems = sorted(elems, key=lambda e: e.exponents[::-1])
        idx = {e: i for i, e in enumerate(elems)}
        table = [[idx[a * b] for b in elems] for a in elems]
        return cls(elems, table, idx[word()], [str(e) for e in elems])

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        return cls(range(n), [[(i + j) % n for j in range(n)] for i in range(n)], 0,
                   [f"s^{i}" for i in range(n)])


# ---------------------------------------------------------------- modules

class LatticeModule:
    kind = "lattice"

    def __init__(self, group: FiniteGroup, matrices, rank=None):
        """``matrices``: list indexed like group.elements, or a callable element -> matrix."""
        if callable(matrices):
            matrices = [matrices(e) for e in group.elements]
        self.group = group
        self.matrices = [[list(r) for r in m] for m in matrices]
        self.rank = rank if rank is not None else len(self.matrices[0])
        t = group.table
        for i in range(len(group)):
            for j in range(len(group)):
                if matmul(self.matrices[i], self.matrices[j]) != self.matrices[t[i][j]]:
                    raise ValueError("action is not a homomorphism")
        if self.matrices[group.identity] != identity(self.rank):
            raise ValueError("identity does not act trivially")

    def zero(self):
        return (0,) * self.rank

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, k: int):
        return tuple(k * x for x in a)

    def act(self, gi: int, v):
        m = self.matrices[gi]
        return tuple(sum(m[i][j] * v[j] for j in range(self.rank)) for i in range(self.rank))

    def is_zero(self, a) -> bool:
        return not any(a)

    def eq(self, a, b) -> bool:
        return tuple(a) == tuple(b)

    def encode(self, a):
        return list(a)


class MultiplicativeModule:
    """Values are MonomialFunction or SymbolicScalar units; the group law is multiplication."""

    kind = "multiplicative"

    def __init__(self, group: FiniteGroup, trivial_action: bool = False):
        self.group = group
        self.trivial_action = trivial_action
        # cochain tables repeat a handful of values many times over
        self._memo = {}

    def _cached(self, key, compute):
        hit = self._memo.get(key)
        if hit is None:
            if len(self._memo) > 100_000:
                self._memo.clear()
            hit = self._memo[key] = compute()
        return hit

    def zero(self):
        return ONE

    def add(self, a, b):
        return self._cached(("add", a, b), lambda: a * b)

    def neg(self, a):
        return self._cached(("neg", a), a.inverse)

    def scale(self, a, k: int):
        return a ** k

    def act(self, gi: int, v):
        if self.trivial_action:
            return v
        g = self.group.elements[gi]
        if isinstance(v, MonomialFunction):
            return self._cached(("act", gi, v), lambda: v.galois(g))
        return g.apply(v)

    def is_zero(self, a) -> bool:
        return a == ONE

    def eq(self, a, b) -> bool:
        return a == b

    def encode(self, a):
        return str(a)


class Mu3Module:
    """mu_3 written additively: the value k stands for zeta^k.  Trivial action."""

    kind = "mu3"

    def __init__(self, group: FiniteGroup):
        self.group = group

    def zero(self):
        return 0

    def add(self, a, b):
        return (a + b) % 3

    def neg(self, a):
        return (-a) % 3

    def scale(self, a, k):
        return (a * k) % 3

    def act(self, gi, v):
        return v

    def is_zero(self, a):
        return a % 3 == 0

    def eq(self, a, b):
        return (a - b) % 3 == 0

    def encode(self, a):
        return a % 3


# ---------------------------------------------------------------- cochains

@dataclass
class Cochain:
    group: FiniteGroup
    module: object
    degree: int
    values: dict = field(repr=False)

    @classmethod
    def from_function(cls, group, module, degree, fn) -> Cochain:
        """``fn`` receives group *elements* (not indices)."""
        els = group.elements
        vals = {args: fn(*(els[i] for i in args))
                for args in itertools.product(range(len(group)), repeat=degree)}
        return cls(group, module, degree, vals)

    @classmethod
    def zero(cls, group, module, degree) -> Cochain:
        return cls.from_function(group, module, degree, lambda *a: module.zero())

    def __call__(self, *elements):
        return self.values[tuple(self.group.index(e) for e in elements)]

    def first_difference(self, other):
        """First argument tuple (as labels) where the cochains differ, with both values."""
        for args in sorted(self.values):
            a, b = self.values[args], other.values[args]
            if not self.module.eq(a, b):
                return [self.group.labels[i] for i in args], a, b
        return None

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self.first_difference(other) is None

    def map_values(self, fn, module=None) -> Cochain:
        return Cochain(self.group, module or self.module, self.degree,
                       {k: fn(v) for k, v in self.values.items()})

    def combine(self, other, op) -> Cochain:
        return Cochain(self.group, self.module, self.degree,
                       {k: op(v, other.values[k]) for k, v in self.values.items()})

    def __add__(self, other):
        return self.combine(other, self.module.add)

    def __sub__(self, other):
        m = self.module
        return self.combine(other, lambda a, b: m.add(a, m.neg(b)))

    def is_zero(self) -> bool:
        return all(self.module.is_zero(v) for v in self.values.values())

    def to_json(self) -> list:
        return [
            {"args": [self.group.labels[i] for i in args], "value": self.module.encode(v)}
            for args, v in sorted(self.values.items())
        ]


def differential(c: Cochain) -> Cochain:
    """(dc)(g1..g_{n+1}) = g1 c(g2..) + sum (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g1..g_n)."""
    if isinstance(c.module, Mu3Module):
        return _mu3_differential(c)
    G, M, n = c.group, c.module, c.degree
    t = G.table
    out = {}
    for args in itertools.product(range(len(G)), repeat=n + 1):
        acc = M.act(args[0], c.values[args[1:]])
        for i in range(n):
            merged = args[:i] + (t[args[i]][args[i + 1]],) + args[i + 2:]
            v = c.values[merged]
            acc = M.add(acc, v if i % 2 else M.neg(v))
        last = c.values[args[:n]]
        acc = M.add(acc, M.neg(last) if n % 2 == 0 else last)
        out[args] = acc
    return Cochain(G, M, n + 1, out)


def _as_array(c: Cochain) -> np.ndarray:
    k = len(c.group)
    arr = np.zeros((k,) * c.degree, dtype=np.int64)
    for args, v in c.values.items():
        arr[args] = v % 3
    return arr


def _mu3_differential(c: Cochain) -> Cochain:
    G, n = c.group, c.degree
    k = len(G)
    t = np.array(G.table)
    a = _as_array(c)
    grids = np.indices((k,) * (n + 1), sparse=False)
    acc = a[tuple(grids[1:])] if n else np.zeros((k,), dtype=np.int64)
    for i in range(n):
        idx = [grids[j] for j in range(i)] + [t[grids[i], grids[i + 1]]] + \
              [grids[j] for j in range(i + 2, n + 1)]
        acc = acc + (1 if i % 2 else -1) * a[tuple(idx)]
    last = a[tuple(grids[:n])] if n else np.zeros((k,), dtype=np.int64)
    acc = acc + (-1 if n % 2 == 0 else 1) * last
    acc %= 3
    vals = {args: int(acc[args]) for args in itertools.product(range(k), repeat=n + 1)}
    return Cochain(G, c.module, n + 1, vals)


def is_cocycle(c: Cochain) -> bool:
    if isinstance(c.module, Mu3Module):
        return _mu3_is_cocycle(c)
    return differential(c).is_zero()


def _mu3_is_cocycle(c):
    return differential(c).is_zero()


def differential_matrix(group: FiniteGroup, matrices, rank: int, n: int) -> np.ndarray:
    """Integer matrix of d: C^n(G, Z^r) -> C^{n+1}(G, Z^r), coordinates (tuple index, component)."""
    k = len(group)
    t = group.table
    rows, cols = k ** (n + 1) * rank, k ** n * rank
    d = np.zeros((rows, cols), dtype=np.int64)
    eye = np.eye(rank, dtype=np.int64)
    mats = [np.array(m, dtype=np.int64) for m in matrices]

    def flat(args):
        x = 0
        for a in args:
            x = x * k + a
        return x

    for args in itertools.product(range(k), repeat=n + 1):
        r0 = flat(args) * rank
        c0 = flat(args[1:]) * rank
        d[r0:r0 + rank, c0:c0 + rank] += mats[args[0]]
        for i in range(n):
            merged = args[:i] + (t[args[i]][args[i + 1]],) + args[i + 2:]
            c0 = flat(merged) * rank
            d[r0:r0 + rank, c0:c0 + rank] += (eye if i % 2 else -eye)
        c0 = flat(args[:n]) * rank
        d[r0:r0 + rank, c0:c0 + rank] += (-eye if n % 2 == 0 else eye)
    return d


def _flatten(c: Cochain, encode) -> list[int]:
    out = []
    for args in itertools.product(range(len(c.group)), repeat=c.degree):
        out.extend(encode(c.values[args]))
    return out


def _unflatten(group, module, degree, vec, rank, decode) -> Cochain:
    vals = {}
    for n, args in enumerate(itertools.product(range(len(group)), repeat=degree)):
        vals[args] = decode(vec[n * rank:(n + 1) * rank])
    return Cochain(group, module, degree, vals)


class NotACocycle(ValueError):
    pass


def coboundary_witness(c: Cochain, atoms=()):
    """Return b with d(b) == c, or None when c is not a coboundary.

    Lattice coefficients are solved over Z, mu_3 over F_3, multiplicative
    coefficients over the exponent lattice of the atoms occurring in c (plus
    ``atoms``), closed under the group action.
    """
    if not is_cocycle(c):
        raise NotACocycle("coboundary_witness needs a cocycle")
    if c.degree == 0:
        return None if not c.is_zero() else Cochain.zero(c.group, c.module, 0)
    G, M, n = c.group, c.module, c.degree
    if isinstance(M, LatticeModule):
        d = differential_matrix(G, M.matrices, M.rank, n - 1)
        x = solve_linear(d, _flatten(c, list))
        if x is None:
            return None
        b = _unflatten(G, M, n - 1, x, M.rank, tuple)
    elif isinstance(M, Mu3Module):
        d = differential_matrix(G, [[[1]]] * len(G), 1, n - 1)
        x = solve_linear(d, _flatten(c, lambda v: [v % 3]), ring="mod3")
        if x is None:
            return None
        b = _unflatten(G, M, n - 1, x, 1, lambda v: v[0] % 3)
    elif isinstance(M, MultiplicativeModule):
        coords = ExponentCoordinates(G, list(c.values.values()) + list(atoms),
                                     trivial_action=M.trivial_action)
        mats = [coords.action_matrix(e) for e in G.elements]
        d = differential_matrix(G, mats, coords.rank, n - 1)
        rhs = _flatten(c, coords.encode)
        # torsion coordinates: add slack columns carrying the modulus
        rows = d.shape[0]
        slack = [(r, coords.moduli[r % coords.rank]) for r in range(rows)
                 if coords.moduli[r % coords.rank]]
        full = np.zeros((rows, d.shape[1] + len(slack)), dtype=np.int64)
        full[:, :d.shape[1]] = d
        for col, (r, mod) in enumerate(slack):
            full[r, d.shape[1] + col] = mod
        x = solve_linear(full, rhs)
        if x is None:
            return None
        b = _unflatten(G, M, n - 1, x[:d.shape[1]], coords.rank, coords.decode)
    else:
        raise TypeError(f"unsupported module {M!r}")
    if not (differential(b) == c):
        raise RuntimeError("coboundary witness failed re-verification")
    return b


class ExponentCoordinates:
    """Finite exponent lattice for multiplicative values: linear forms, alpha, gamma, alpha', zeta, -1."""

    SCALARS = ("alpha", "gamma", "alpha_prime", "zeta", "minus_one")

    def __init__(self, group: FiniteGroup, values, trivial_action=False):
        self.group = group
        self.trivial_action = trivial_action
        forms = set()
        for v in values:
            if isinstance(v, MonomialFunction):
                forms.update(v.factors)
        if not trivial_action:
            frontier = list(forms)
            while frontier:
                nxt = []
                for f in frontier:
                    for g in group.elements:
                        for h in MonomialFunction.form(f).galois(g).factors:
                            if h not in forms:
                                forms.add(h)
                                nxt.append(h)
                frontier = nxt
        self.forms = sorted(forms, key=str)
        self.rank = len(self.forms) + len(self.SCALARS)
        self.moduli = [0] * (len(self.forms) + 3) + [3, 2]
        self._form_index = {f: i for i, f in enumerate(self.forms)}

    def encode(self, v) -> list[int]:
        if isinstance(v, SymbolicScalar):
            v = MonomialFunction(v)
        vec = [0] * self.rank
        for f, e in v.factors.items():
            vec[self._form_index[f]] = e
        (p, q, r), coeff = v.scalar.leading()
        root = coeff.root_of_unity_exponent()
        if root is None:
            raise ValueError(f"scalar {v.scalar} is outside ±ζ^k α^p γ^q α′^r")
        sign, k = root
        base = len(self.forms)
        vec[base:base + 5] = [p, q, r, k, 0 if sign > 0 else 1]
        return vec

    def decode(self, vec) -> MonomialFunction:
        base = len(self.forms)
        p, q, r, k, m = vec[base:base + 5]
        scalar = (ALPHA ** p) * (GAMMA ** q) * (ALPHA_PRIME ** r) * zeta_power(k) * ((-1) ** (m % 2))
        return MonomialFunction(scalar, {f: e for f, e in zip(self.forms, vec[:base]) if e})

    def generator(self, i: int):
        base = len(self.forms)
        if i < base:
            return MonomialFunction.form(self.forms[i])
        return [ALPHA, GAMMA, ALPHA_PRIME, zeta_power(1), SymbolicScalar.constant(-1)][i - base]

    def action_matrix(self, g: FieldAutomorphism):
        cols = []
        for i in range(self.rank):
            gen = self.generator(i)
            if self.trivial_action:
                img = gen
            else:
                img = gen.galois(g) if isinstance(gen, MonomialFunction) else g.apply(gen)
            cols.append(self.encode(img))
        return transpose(cols)


# ---------------------------------------------------------------- cohomology groups

def tate_h_minus1(sigma, order: int):
    """ker(N) / im(sigma - 1) for the cyclic group generated by ``sigma``.

    Returns (invariant factors != 1, generator vectors in the ambient lattice).
    A factor 0 stands for a free summand.
    """
    r = len(sigma)
    power = identity(r)
    norm = [[0] * r for _ in range(r)]
    for _ in range(order):
        norm = [[a + b for a, b in zip(x, y)] for x, y in zip(norm, power)]
        power = matmul(sigma, power)
    if power != identity(r):
        raise ValueError(f"sigma^{order} is not the identity")
    kernel = integer_kernel(norm)
    if not kernel:
        return [], []
    kt = transpose(kernel)
    aug = [[sigma[i][j] - int(i == j) for j in range(r)] for i in range(r)]
    cols = []
    for v in transpose(aug):
        x = solve_linear(kt, v)
        if x is None:
            raise RuntimeError("image of sigma - 1 escapes ker N")
        cols.append(x)
    rel = transpose(cols) if cols else [[0] for _ in kernel]
    u, s, _ = smith_normal_form(rel)
    uinv = inverse_unimodular(u)
    factors, gens = [], []
    for i in range(len(kernel)):
        d = s[i][i] if i < len(s[0]) else 0
        if d == 1:
            continue
        coords = [uinv[k][i] for k in range(len(kernel))]
        factors.append(d)
        gens.append(tuple(sum(kernel[k][j] * coords[k] for k in range(len(kernel))) for j in range(r)))
    return factors, gens


class SizeGuardExceeded(ValueError):
    pass


def bar_cohomology(group: FiniteGroup, module: LatticeModule, n: int, size_guard: int = 200_000):
    """Invariant factors of H^n(G, M), n <= 2 (0 marks a free Z summand)."""
    if n < 0 or n > 2:
        raise ValueError("bar_cohomology supports degrees 0, 1, 2")
    k, r = len(group), module.rank
    if k ** (n + 1) * r > size_guard:
        raise SizeGuardExceeded(f"|G|^{n + 1} * rank = {k ** (n + 1) * r} exceeds {size_guard}")
    dim = k ** n * r
    d_out = differential_matrix(group, module.matrices, r, n)
    if n == 0:
        return [0] * (dim - _exact_rank(d_out, upper=dim))
    d_in = differential_matrix(group, module.matrices, r, n - 1)
    _, s, _ = smith_normal_form(d_in)
    diag = [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i]]
    rank_in = len(diag)
    rank_out = _exact_rank(d_out, upper=dim - rank_in)
    torsion = [d for d in diag if d != 1]
    return torsion + [0] * (dim - rank_in - rank_out)


def _exact_rank(m: np.ndarray, upper: int) -> int:
    """Rank of m; the modular rank is a lower bound, ``upper`` is a proven upper bound."""
    rk = rank_mod_p(m)
    if rk == upper:
        return rk
    from .exact_algebra.intlinalg import invariant_factors

    return len(invariant_factors(m))


def describe_group(factors) -> str:
    if not factors:
        return "0"
    return " ⊕ ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


# ---------------------------------------------------------------- connecting maps and symbols

class InvalidExtensionData(ValueError):
    pass


def connecting_cocycle(c: Cochain, lift, ambient, in_submodule, restrict=None, submodule=None) -> Cochain:
    """Connecting-map cocycle d(lift o c) of a short exact sequence.

    ``lift`` maps values of c into the ambient module (a set-theoretic
    section); ``in_submodule`` tests that a value of the result lies in the
    submodule; ``restrict``/``submodule`` optionally re-express the result there.
    """
    if not is_cocycle(c):
        raise NotACocycle("connecting_cocycle needs a cocycle")
    lifted = c.map_values(lift, module=ambient)
    dl = differential(lifted)
    for args, v in dl.values.items():
        if not in_submodule(v):
            labels = [c.group.labels[i] for i in args]
            raise InvalidExtensionData(
                f"invalid short exact sequence data: value at {labels} escapes the submodule")
    if restrict is not None:
        dl = dl.map_values(restrict, module=submodule or dl.module)
    return dl


def a_coefficient(i: int, j: int, n: int = 3) -> int:
    """a(i, j) = floor((i+j)/n) - floor(i/n) - floor(j/n) on representatives 0..n-1."""
    i, j = i % n, j % n
    return (i + j) // n - i // n - j // n


def symbol_cocycle(n: int, f, group: FiniteGroup = None, generator=None, module=None) -> Cochain:
    """The 2-cocycle (s^i, s^j) -> f^{a(i,j)} of a cyclic group of order n."""
    if group is None:
        group = FiniteGroup.cyclic(n)
        generator = 1
    if module is None:
        module = MultiplicativeModule(group, trivial_action=True)
    exponent = {}
    g = group.index(generator)
    cur = group.identity
    for i in range(n):
        exponent[cur] = i
        cur = group.mul(cur, g)
    if len(exponent) != len(group):
        raise ValueError("group is not cyclic of the stated order with this generator")
    vals = {(a, b): module.scale(f, a_coefficient(exponent[a], exponent[b], n))
            for a in range(len(group)) for b in range(len(group))}
    return Cochain(group, module, 2, vals)
