"""
From [φ] to a symbol and back
=============================

Runs the cohomological computations and prints their certificates.
"""
import json

from diagcubic.cohomology import FiniteGroup, LatticeModule, tate_h_minus1
from diagcubic.cubic_geometry.lines import S
from diagcubic.cubic_geometry.picard import rank5_action
from diagcubic.paper_suite import full_report, theorem2_skeleton

# Tate cohomology of <s> on the w-invariant rank-5 lattice
factors, gens = tate_h_minus1(rank5_action(S), 3)
print("H^-1 =", factors, "generated by", gens)

reports = full_report()
for r in reports:
    print(f"{r.status:4} {r.name:10} {r.elapsed:.2f}s")

theorem1 = {r.name: r for r in reports}["theorem1"].certificate
print("connecting cocycle (s^i, s^j) ->", json.dumps(theorem1["table"], ensure_ascii=False)[:200], "...")

steps = {r.name: r for r in reports}["steps2to4"].certificate
print("r Psi:", steps["r_psi"])
print(theorem2_skeleton(reports))
