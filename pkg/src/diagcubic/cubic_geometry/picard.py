"""Picard lattice of the cubic surface and the Galois action on it.

Pic is written in the basis ([L0], [L1], [L2], [M0], [M1], [M2], l) where l is
the pull-back of a line under the blow-down of the six skew lines.  The
intersection form is diag(-1, -1, -1, -1, -1, -1, 1).  Line classes are derived
from the incidence graph, never tabulated.

Matrices act on column vectors: column k of ``action_on_pic(g)`` is the image
of the k-th basis class.
"""
from __future__ import annotations

from functools import lru_cache

from ..exact_algebra.intlinalg import (
    hermite_normal_form,
    identity,
    integer_kernel,
    matmul,
    solve_linear,
    transpose,
)
from .lines import ALL_LABELS, IDENTITY, FieldAutomorphism, LineLabel, action_on_lines, meets

BASIS_LINES = tuple(LineLabel(f, i) for f in ("L", "M") for i in range(3))
PIC_RANK = 7
FORM = [[(-1 if i < 6 else 1) if i == j else 0 for j in range(7)] for i in range(7)]
# [H] = 3l - [L] - [M], the anticanonical class
HYPERPLANE = (-1, -1, -1, -1, -1, -1, 3)


def dot(u, v) -> int:
    """Intersection pairing."""
    return sum(FORM[i][i] * u[i] * v[i] for i in range(7))


def unit(k: int, n: int = 7) -> tuple:
    return tuple(int(i == k) for i in range(n))


L_CLASS = unit(6)


class InconsistentGeometry(RuntimeError):
    pass


@lru_cache(maxsize=None)
def class_of_line(label: LineLabel) -> tuple:
    if label in BASIS_LINES:
        return unit(BASIS_LINES.index(label))
    b = [int(meets(label, e)) for e in BASIS_LINES]
    if (1 + sum(b)) % 3:
        raise InconsistentGeometry(f"{label}: 1 + {sum(b)} is not divisible by 3")
    a = (1 + sum(b)) // 3
    v = tuple(-x for x in b) + (a,)
    if dot(v, v) != -1 or dot(v, HYPERPLANE) != 1:
        raise InconsistentGeometry(f"{label}: class {v} is not a (-1)-curve of degree 1")
    return v


def pic_classes() -> dict:
    return {lab: class_of_line(lab) for lab in ALL_LABELS}


def pic_classes_json() -> dict:
    return {str(lab): list(v) for lab, v in pic_classes().items()}


@lru_cache(maxsize=None)
def _action_on_pic(g: FieldAutomorphism) -> tuple:
    perm = action_on_lines(g)
    images = [class_of_line(perm[e]) for e in BASIS_LINES]
    # g fixes [H] = 3l - sum(e_i), so g(l) = ([H] + sum g(e_i)) / 3
    total = [HYPERPLANE[k] + sum(img[k] for img in images) for k in range(7)]
    if any(x % 3 for x in total):
        raise InconsistentGeometry(f"image of l under {g} is not integral")
    images.append(tuple(x // 3 for x in total))
    return tuple(tuple(row) for row in transpose(images))


def action_on_pic(g: FieldAutomorphism) -> list[list[int]]:
    return [list(row) for row in _action_on_pic(g)]


def preserves_form(m) -> bool:
    return matmul(matmul(transpose(m), FORM), m) == FORM


def apply(m, v) -> tuple:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def invariant_sublattice(generators) -> list[tuple]:
    """Hermite-reduced basis of the sublattice of Z^7 fixed by every generator."""
    rows = []
    for g in generators:
        m = action_on_pic(g)
        rows.extend([m[i][j] - int(i == j) for j in range(7)] for i in range(7))
    if not rows:
        return [tuple(r) for r in identity(7)]
    return [tuple(r) for r in hermite_normal_form(integer_kernel(rows))]


# The lattice Pic(V_{k'}) of w-invariant classes, in the basis l, [L0], [L1], [L2], [M].
RANK5_BASIS = (
    unit(6),
    unit(0),
    unit(1),
    unit(2),
    (0, 0, 0, 1, 1, 1, 0),
)


def coordinates_in(basis, v):
    """Integer coordinates of ``v`` in the given lattice basis; raises if v is outside."""
    x = solve_linear(transpose([list(b) for b in basis]), list(v))
    if x is None:
        raise ValueError(f"{v} is not in the lattice")
    return tuple(x)


def restrict_action(m, basis) -> list[list[int]]:
    """Matrix (column convention) of ``m`` on an invariant sublattice with the given basis."""
    cols = [coordinates_in(basis, apply(m, b)) for b in basis]
    return transpose([list(c) for c in cols])


def rank5_action(g: FieldAutomorphism) -> list[list[int]]:
    return restrict_action(action_on_pic(g), RANK5_BASIS)


__all__ = [
    "BASIS_LINES", "FORM", "HYPERPLANE", "IDENTITY", "L_CLASS", "RANK5_BASIS",
    "action_on_pic", "apply", "class_of_line", "coordinates_in", "dot",
    "invariant_sublattice", "pic_classes", "preserves_form", "rank5_action",
    "restrict_action", "unit",
]
