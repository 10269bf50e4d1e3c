"""
The 27 lines of a diagonal cubic surface
========================================

x^3 + λ y^3 + μ z^3 + λμν t^3 = 0, with α^3 = λ, γ^3 = ν, α'^3 = μ kept symbolic.
"""
import numpy as np

from diagcubic.cubic_geometry.functions import format_form
from diagcubic.cubic_geometry.lines import ALL_LABELS, S, T, W, build_lines, incidence_graph
from diagcubic.cubic_geometry.picard import FORM, HYPERPLANE, action_on_pic, apply, pic_classes

# every line is cut out by two planes with coefficients in Q(ζ)[α, γ, α'] (Laurent)
lines = build_lines()
for label in ALL_LABELS[::3]:
    p, q = lines[label]
    print(f"{label.pretty():6} {format_form(p)} = {format_form(q)} = 0")

# intersection pattern: each line meets ten others
g = np.array(incidence_graph(), dtype=int)
print("degrees:", sorted(set(g.sum(axis=1).tolist())), "edges:", int(g.sum()) // 2)

# Pic in the basis [L0],[L1],[L2],[M0],[M1],[M2], l
classes = pic_classes()
print("[L'(0)] =", classes[ALL_LABELS[3]])

# Galois generators act by permuting lines; they are isometries fixing [H]
form = np.array(FORM)
for name, g in (("s", S), ("t", T), ("w", W)):
    m = np.array(action_on_pic(g))
    print(name, "isometry:", (m.T @ form @ m == form).all(), " fixes [H]:", apply(action_on_pic(g), HYPERPLANE) == HYPERPLANE)

# order three
ms = np.array(action_on_pic(S))
print("s^3 = 1:", (np.linalg.matrix_power(ms, 3) == np.eye(7, dtype=int)).all())
