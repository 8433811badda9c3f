"""
Grothendieck polynomials of vexillary permutations
==================================================

A 2143-avoiding permutation has a shape and a flagging.  Its double
Grothendieck polynomial is a sum over set-valued tableaux, over faces of
the flagged Young complex, or over ordinary tableaux with their minimal new
faces; all three agree.
"""

from tabcomplex import (
    LaurentPolynomial,
    diagram,
    grothendieck,
    is_vexillary,
    jacobi_trudi_schur,
    shape_and_flagging_of,
    specialize_buch,
    specialize_schubert,
)

pi = [8, 7, 1, 6, 2, 9, 5, 3, 4]
print(pi, "vexillary:", is_vexillary(pi), " diagram boxes:", len(diagram(pi)))
print("shape and flags:", shape_and_flagging_of(pi))

print(grothendieck([1, 3, 2], "all"))

# a Grassmannian permutation: one descent, equal flags
w = [1, 3, 5, 2, 4]
shape, flags = shape_and_flagging_of(w)
G = grothendieck(w, "all")
print("shape", shape, "flags", flags, " terms:", len(G))

buch = specialize_buch(G)
print("single Grothendieck:", buch)

low = buch.lowest_degree_component()
low = low.map_monomials(lambda v, e: LaurentPolynomial.gen("a", v.key, e))
print("lowest degree part:", low)
print("matches the tableau sum:", low == specialize_schubert(shape, flags, "single"))
print("matches the determinant:", low == jacobi_trudi_schur(shape, 3))

print("double version:", specialize_schubert(shape, flags))
