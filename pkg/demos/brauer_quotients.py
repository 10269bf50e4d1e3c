"""
Brauer quotients from cube classes
==================================

Everything depends on λ = b/a, μ = c/a, ν = ad/(bc) modulo cubes.
"""
from diagcubic.classifier import (
    SurfaceInput,
    all_class_triples,
    brauer_quotient,
    classify_h1,
    galois_elements,
    generator_string,
    normalize,
)
from diagcubic.cohomology import FiniteGroup, LatticeModule, bar_cohomology
from diagcubic.cubic_geometry.picard import action_on_pic

for coeffs in [(1, 1, 1, 2), (1, 1, 2, 3), (1, 2, 3, 6), (1, 2, 4, 3), (5, 7, 11, 13)]:
    surface = SurfaceInput.rational(*coeffs)
    result = brauer_quotient(surface)
    print(coeffs, result.structure, result.tag, generator_string(surface, result) or "")

# same answer straight from group cohomology of the splitting field's Galois group
surface = SurfaceInput.rational(1, 1, 2, 3)
group = FiniteGroup.galois(galois_elements(*normalize(surface)))
print("|G| =", group.order, " H^1 =", bar_cohomology(group, LatticeModule(group, action_on_pic), 1))

# with a single cube class direction, Z/3 never occurs
outcomes = {classify_h1(*t).structure for t in all_class_triples(1)}
print("m = 1:", sorted(outcomes))
outcomes = {classify_h1(*t).structure for t in all_class_triples(2)}
print("m = 2:", sorted(outcomes))
