"""Reference data, grouped by the check that owns it.

Group elements are exponent triples (i, j, k) for s^i t^j w^k.  Divisor
entries such as "B1/A2" mean div((z + ζβt)/(x + ζ²αy)) with
A_i = x + ζ^i α y and B_j = z + ζ^j β t.  Multiplicative entries in the
δ∂φ and ψ tables are exponents e standing for 1 (e = 0) or -μ^e.
"""
import copy

# ------------------------------------------------------------ geometry

# s acting on (l, [L(0)], [L(1)], [L(2)], [M]): row r lists the image of the
# r-th basis element.
S_MATRIX_LITERAL = [
    [4, -1, -1, -1, 2],
    [2, -1, -1, 0, -1],
    [2, 0, -1, -1, -1],
    [2, -1, 0, -1, -1],
    [3, 0, 0, 0, -2],
]
# Same matrix with the (1, 5) sign fixed: the only entry that breaks s^3 = 1,
# form preservation and s[H] = [H].
S_MATRIX_CORRECTED = [
    [4, -1, -1, -1, -2],
    [2, -1, -1, 0, -1],
    [2, 0, -1, -1, -1],
    [2, -1, 0, -1, -1],
    [3, 0, 0, 0, -2],
]

# classes in the basis ([L0],[L1],[L2],[M0],[M1],[M2], l)
CLASS_FORMULAS = {
    "Lp0": (-1, -1, 0, -1, -1, -1, 2),   # 2l - [L(0)] - [L(1)] - [M]
    "Ldp0": (-1, 0, -1, 0, 0, 0, 1),     # l - [L(0)] - [L(2)]
}

# ------------------------------------------------------------ generators

# phi'(s^a) in the Pic basis ([L0],[L1],[L2],[M0],[M1],[M2], l)
PHI_PRIME = {
    0: (0, 0, 0, 0, 0, 0, 0),
    1: (1, 0, -1, 0, 0, 0, 0),
    2: (1, -1, 0, 0, 0, 0, 0),
}
# phi(s^a (st)^i) depends on a only
PHI = dict(PHI_PRIME)
TATE_GENERATOR_RANK5 = (0, -1, 1, 0, 0)  # [L(1)] - [L(0)] in (l, L0, L1, L2, M)

# ------------------------------------------------------------ Step 1

# lifts of 0, [L0]-[L2], [L0]-[L1] to the lattice D, keyed by the class index a
STEP1_LIFTS = {0: {}, 1: {"L0": 1, "L2": -1}, 2: {"L0": 1, "L1": -1}}

# del phi(s^{i1} t^{j1}, s^{i2}) for i2 in {1, 2}; None is the zero divisor
DEL_PHI = {
    (0, 0, 1): None, (0, 0, 2): None,
    (1, 0, 1): "B1/A2", (1, 0, 2): "A0/B2",
    (2, 0, 1): "A0/B1", (2, 0, 2): "B2/A1",
    (0, 1, 1): None, (0, 1, 2): None,
    (1, 1, 1): "B2/A0", (1, 1, 2): "A1/B0",
    (2, 1, 1): "A1/B2", (2, 1, 2): "B0/A2",
    (0, 2, 1): None, (0, 2, 2): None,
    (1, 2, 1): "B0/A1", (1, 2, 2): "A2/B1",
    (2, 2, 1): "A2/B0", (2, 2, 2): "B1/A0",
}

# delta del phi(s^{i1} t^{j1}, s^{i2} t^{j2}, s^{i3}) for i1, i3 in {1, 2};
# independent of j1.  Keys (i1, i2, j2, i3).
DELTA_DEL_PHI = {}
_DDP_ROWS = {
    1: {(1, 0): (0, 1), (2, 0): (0, -1), (0, 1): (0, -1), (1, 1): (-1, 1),
        (2, 1): (1, 0), (0, 2): (1, 0), (1, 2): (-1, 0), (2, 2): (0, 0)},
    2: {(1, 0): (-1, 0), (2, 0): (1, 0), (0, 1): (0, 1), (1, 1): (0, 0),
        (2, 1): (0, -1), (0, 2): (-1, 0), (1, 2): (0, 1), (2, 2): (1, -1)},
}
for _i1, _row in _DDP_ROWS.items():
    for (_i2, _j2), (_e1, _e2) in _row.items():
        DELTA_DEL_PHI[(_i1, _i2, _j2, 1)] = _e1
        DELTA_DEL_PHI[(_i1, _i2, _j2, 2)] = _e2

# ------------------------------------------------------------ Steps 2-4

# psi(s^{i1} t^{j1} w^{k1}, s^{i2} w^{k2}) for i1, i2 in {1, 2}: exponent e of -mu^e.
PSI = {(1, 1): -1, (1, 2): 1, (2, 1): 1, (2, 2): -1}
# psi~ has the same shape with alpha' in place of mu
PSI_TILDE = dict(PSI)
# Psi(s^{i1} t^{j1}, s^{i2} t^{j2}) = zeta^e, keyed by (i1, j2)
PSI_STEP4 = {(0, 0): 0, (0, 1): 0, (0, 2): 0,
             (1, 0): 0, (1, 1): 2, (1, 2): 1,
             (2, 0): 0, (2, 1): 1, (2, 2): 2}


def reference_data() -> dict:
    """Fresh, mutable copy of all reference data, one section per check.

    Sections are copied independently so that no table is shared between two
    checks.
    """
    sections = {
        "geometry": {
            "s_matrix": S_MATRIX_CORRECTED,
            "s_matrix_literal": S_MATRIX_LITERAL,
            "class_formulas": CLASS_FORMULAS,
            "incidence_toggles": [],
        },
        "generators": {"phi_prime": PHI_PRIME, "phi": PHI, "tate_generator": TATE_GENERATOR_RANK5},
        "theorem1": {"phi_prime": PHI_PRIME, "symbol_function": (2, 1)},
        "step1": {"lifts": STEP1_LIFTS, "del_phi": DEL_PHI, "delta_del_phi": DELTA_DEL_PHI},
        "steps2to4": {"psi": PSI, "psi_tilde": PSI_TILDE, "Psi": PSI_STEP4},
    }
    return {name: copy.deepcopy(section) for name, section in sections.items()}
