import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from diagcubic.cohomology import (
    Cochain,
    ExponentCoordinates,
    FiniteGroup,
    InvalidExtensionData,
    LatticeModule,
    MultiplicativeModule,
    Mu3Module,
    NotACocycle,
    SizeGuardExceeded,
    a_coefficient,
    bar_cohomology,
    coboundary_witness,
    connecting_cocycle,
    describe_group,
    differential,
    is_cocycle,
    symbol_cocycle,
    tate_h_minus1,
)
from diagcubic.cubic_geometry.functions import (
    MonomialFunction,
    action_on_divisors,
    divisor_to_pic_matrix,
    f_function,
)
from diagcubic.cubic_geometry.lines import S, T, W, word
from diagcubic.cubic_geometry.picard import action_on_pic, apply, rank5_action
from diagcubic.exact_algebra import ALPHA, GAMMA, ONE, identity, inverse_unimodular, matmul, zeta_power

G3 = FiniteGroup.galois([S])
G9 = FiniteGroup.galois([S, T])


def random_lattice_cochain(group, module, degree, rng):
    return Cochain.from_function(group, module, degree,
                                 lambda *g: tuple(rng.randint(-3, 3) for _ in range(module.rank)))


def random_function(rng):
    f = MonomialFunction(zeta_power(rng.randint(0, 2)) * ALPHA ** rng.randint(-2, 2) * GAMMA ** rng.randint(-2, 2))
    for n in range(1, 6):
        f = f * f_function(n) ** rng.randint(-1, 1)
    return f


# ---- groups

def test_galois_subgroups():
    assert G3.order == 3 and G9.order == 9
    assert FiniteGroup.galois([S, T, W]).order == 27
    assert G9.labels[G9.identity] == "s^0 t^0 w^0"
    assert FiniteGroup.galois([]).order == 1


def test_group_axioms_are_checked():
    with pytest.raises(ValueError):
        FiniteGroup([0, 1], [[0, 1], [0, 1]], 0)
    with pytest.raises(ValueError):
        FiniteGroup([0, 1, 2], [[0, 1, 2], [1, 0, 2], [2, 2, 0]], 0)


def test_module_must_be_a_homomorphism():
    bad = [identity(2), [[0, 1], [1, 0]], [[0, 1], [1, 0]]]
    with pytest.raises(ValueError):
        LatticeModule(G3, bad)


# ---- differential

@pytest.mark.parametrize("degree", [0, 1, 2])
def test_d_squared_lattice(degree):
    rng = random.Random(degree)
    m = LatticeModule(G9, rank5_action)
    c = random_lattice_cochain(G9, m, degree, rng)
    assert differential(differential(c)).is_zero()


@pytest.mark.parametrize("degree", [0, 1, 2])
def test_d_squared_multiplicative(degree):
    rng = random.Random(10 + degree)
    m = MultiplicativeModule(G9)
    c = Cochain.from_function(G9, m, degree, lambda *g: random_function(rng))
    assert differential(differential(c)).is_zero()


@given(st.integers(0, 2), st.randoms(use_true_random=False))
@settings(max_examples=20, deadline=None)
def test_d_squared_mu3(degree, rng):
    m = Mu3Module(G9)
    c = Cochain.from_function(G9, m, degree, lambda *g: rng.randint(0, 2))
    assert differential(differential(c)).is_zero()


@given(st.integers(0, 2), st.randoms(use_true_random=False))
@settings(max_examples=20, deadline=None)
def test_mu3_fast_path_matches_generic(degree, rng):
    vals = {}
    m = Mu3Module(G9)
    c = Cochain.from_function(G9, m, degree, lambda *g: vals.setdefault(g, rng.randint(0, 2)))
    lat = LatticeModule(G9, [[[1]]] * 9)
    generic = differential(c.map_values(lambda v: (v,), module=lat))
    fast = differential(c)
    assert all(fast.values[k] == generic.values[k][0] % 3 for k in fast.values)


def test_constant_zero_cochain():
    m = LatticeModule(G3, [[[1]]] * 3)
    c = Cochain.from_function(G3, m, 0, lambda: (5,))
    assert differential(c).is_zero()
    assert is_cocycle(c)


def test_differential_formula_degree_one():
    m = LatticeModule(G3, rank5_action)
    rng = random.Random(3)
    c = random_lattice_cochain(G3, m, 1, rng)
    dc = differential(c)
    for g, h in itertools.product(G3.elements, repeat=2):
        expected = tuple(a - b + x for a, b, x in zip(apply(rank5_action(g), c(h)), c(g * h), c(g)))
        assert dc(g, h) == expected


def test_perturbed_cocycle_is_not_closed():
    m = LatticeModule(G3, rank5_action)
    phi = Cochain.from_function(G3, m, 1, lambda g: [(0,) * 5, (0, 1, 0, -1, 0), (0, 1, -1, 0, 0)][g.gamma])
    assert is_cocycle(phi)
    bent = Cochain(G3, m, 1, dict(phi.values))
    key = (G3.index(S),)
    bent.values[key] = tuple(x + (i == 0) for i, x in enumerate(bent.values[key]))
    assert not is_cocycle(bent)


# ---- coboundary witnesses

@pytest.mark.parametrize("degree", [1, 2])
def test_witness_for_lattice_coboundary(degree):
    rng = random.Random(20 + degree)
    m = LatticeModule(G9, rank5_action)
    b = random_lattice_cochain(G9, m, degree - 1, rng)
    c = differential(b)
    w = coboundary_witness(c)
    assert w is not None and differential(w) == c


@given(st.randoms(use_true_random=False))
@settings(max_examples=15, deadline=None)
def test_witness_for_mu3_coboundary(rng):
    m = Mu3Module(G9)
    b = Cochain.from_function(G9, m, 1, lambda g: rng.randint(0, 2))
    c = differential(b)
    w = coboundary_witness(c)
    assert w is not None and differential(w) == c


@pytest.mark.parametrize("seed", [0, 1])
def test_witness_for_multiplicative_coboundary(seed):
    rng = random.Random(seed)
    m = MultiplicativeModule(G3)
    b = Cochain.from_function(G3, m, 1, lambda g: random_function(rng))
    c = differential(b)
    w = coboundary_witness(c)
    assert w is not None and differential(w) == c


def test_zero_cocycle_witness_is_zero():
    m = LatticeModule(G3, rank5_action)
    z = Cochain.zero(G3, m, 2)
    w = coboundary_witness(z)
    assert w is not None and w.is_zero()


def test_witness_requires_a_cocycle():
    m = Mu3Module(G3)
    c = Cochain.from_function(G3, m, 1, lambda g: 1)
    with pytest.raises(NotACocycle):
        coboundary_witness(c)


def test_nontrivial_h2_mu3_class_has_no_witness():
    m = Mu3Module(G3)
    c = Cochain.from_function(G3, m, 2, lambda g, h: a_coefficient(g.gamma, h.gamma))
    assert is_cocycle(c)
    assert coboundary_witness(c) is None


def test_exponent_coordinates_round_trip():
    rng = random.Random(5)
    vals = [random_function(rng) for _ in range(4)]
    coords = ExponentCoordinates(G9, vals)
    for v in vals:
        assert coords.decode(coords.encode(v)) == v
    with pytest.raises(ValueError):
        coords.encode(MonomialFunction(ONE * 2))


# ---- Tate and bar cohomology

AUG = [[0, -1], [1, -1]]          # Z[C3] / (1 + s + s^2)
REG = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]


def block_diag(blocks):
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            m[k + i][k:k + len(b)] = row
        k += len(b)
    return m


def random_unimodular(n, rng):
    u = identity(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            k = rng.randint(-2, 2)
            u = [[u[r][c] + (k * u[j][c] if r == i else 0) for c in range(n)] for r in range(n)]
    return u


@given(st.lists(st.sampled_from(["triv", "reg", "aug"]), min_size=1, max_size=3),
       st.randoms(use_true_random=False))
@settings(max_examples=25, deadline=None)
def test_tate_matches_bar_h1_on_cyclic_groups(kinds, rng):
    blocks = [{"triv": [[1]], "reg": REG, "aug": AUG}[k] for k in kinds]
    sigma = block_diag(blocks)
    u = random_unimodular(len(sigma), rng)
    sigma = matmul(matmul(u, sigma), inverse_unimodular(u))
    powers = [identity(len(sigma)), sigma, matmul(sigma, sigma)]
    g = FiniteGroup.cyclic(3)
    tate, _ = tate_h_minus1(sigma, 3)
    bar = bar_cohomology(g, LatticeModule(g, powers), 1)
    assert tate == bar == [3] * kinds.count("aug")


def test_tate_examples():
    assert tate_h_minus1(identity(4), 3) == ([], [])
    assert tate_h_minus1(REG, 3)[0] == []
    factors, gens = tate_h_minus1(rank5_action(S), 3)
    assert factors == [3]
    with pytest.raises(ValueError):
        tate_h_minus1([[0, 1], [1, 0]], 3)


def test_bar_cohomology_examples():
    z = LatticeModule(G9, [[[1]]] * 9)
    assert bar_cohomology(G9, z, 0) == [0]
    assert bar_cohomology(G9, z, 1) == []
    assert bar_cohomology(G9, z, 2) == [3, 3]
    assert bar_cohomology(G9, LatticeModule(G9, rank5_action), 1) == [3]
    assert bar_cohomology(G3, LatticeModule(G3, action_on_pic), 1) == [3, 3]


def test_bar_cohomology_size_guard():
    with pytest.raises(SizeGuardExceeded):
        bar_cohomology(G9, LatticeModule(G9, rank5_action), 2, size_guard=100)
    with pytest.raises(ValueError):
        bar_cohomology(G3, LatticeModule(G3, rank5_action), 3)


def test_describe_group():
    assert describe_group([]) == "0"
    assert describe_group([3, 0]) == "Z/3 ⊕ Z"


# ---- connecting maps and symbols

def _phi_pic(group):
    pic = LatticeModule(group, action_on_pic)
    vals = {0: (0,) * 7, 1: (1, 0, -1, 0, 0, 0, 0), 2: (1, -1, 0, 0, 0, 0, 0)}
    return pic, Cochain.from_function(group, pic, 1, lambda g: vals[(g.gamma - g.alpha) % 3])


def _in_d0(v):
    return not any(apply(divisor_to_pic_matrix(), v))


def test_connecting_cocycle_zero():
    div = LatticeModule(G3, action_on_divisors)
    pic = LatticeModule(G3, action_on_pic)
    z = Cochain.zero(G3, pic, 1)
    out = connecting_cocycle(z, lambda v: (0,) * 10, div, _in_d0)
    assert out.degree == 2 and out.is_zero()


def test_connecting_cocycle_rejects_bad_lift():
    div = LatticeModule(G3, action_on_divisors)
    pic, phi = _phi_pic(G3)
    with pytest.raises(InvalidExtensionData, match="invalid short exact sequence data"):
        connecting_cocycle(phi, lambda v: (1,) + (0,) * 9 if any(v) else (0,) * 10, div, _in_d0)


def test_connecting_cocycle_is_independent_of_lift():
    div = LatticeModule(G9, action_on_divisors)
    pic, phi = _phi_pic(G9)
    unit = lambda k: tuple(int(i == k) for i in range(10))
    sub = lambda a, b: tuple(x - y for x, y in zip(a, b))
    lift1 = {phi(S): sub(unit(1), unit(3)), phi(S ** 2): sub(unit(1), unit(2)), phi(word()): (0,) * 10}
    # L'(1) - L'(0) and (1 + s)(L'(1) - L'(0)) also lift [L0]-[L2] and [L0]-[L1]
    v = sub(unit(5), unit(4))
    sv = apply(action_on_divisors(S), v)
    lift2 = {phi(S): v, phi(S ** 2): tuple(a + b for a, b in zip(v, sv)), phi(word()): (0,) * 10}
    c1 = connecting_cocycle(phi, lift1.__getitem__, div, _in_d0)
    c2 = connecting_cocycle(phi, lift2.__getitem__, div, _in_d0)
    assert is_cocycle(c1) and is_cocycle(c2)
    assert c1 != c2
    assert coboundary_witness(c1 - c2) is not None


def test_a_coefficient():
    assert a_coefficient(1, 2) == 1
    assert a_coefficient(1, 1) == 0
    assert a_coefficient(2, 2) == 1
    assert a_coefficient(0, 2) == 0


@given(st.integers(2, 6))
def test_symbol_cocycle_identity(n):
    for i, j, k in itertools.product(range(n), repeat=3):
        a = lambda x, y: a_coefficient(x, y, n)
        assert a(j, k) - a(i + j, k) + a(i, j + k) - a(i, j) == 0


def test_symbol_cocycle_values():
    f = f_function(2) / f_function(1)
    c = symbol_cocycle(3, f)
    g = c.group
    assert c.values[(1, 2)] == f
    assert c.values[(1, 1)] == ONE
    assert is_cocycle(c)
    c9 = symbol_cocycle(3, f, group=G3, generator=S)
    assert c9(S, S ** 2) == f and c9(S ** 2, S ** 2) == f


def test_cochain_json():
    m = Mu3Module(G9)
    c = Cochain.from_function(G9, m, 1, lambda g: g.alpha)
    data = json.loads(json.dumps(c.to_json()))
    assert {"args": ["s^0 t^1 w^0"], "value": 1} in data
    assert len(data) == 9
