"""
Shelling a flagged Young complex
================================

Shape (2,1) with row bounds (2,3).  Facets are the flagged semistandard
tableaux; the shelling order and minimal new faces give the h-vector,
which can be read off the K-polynomial as well.
"""

from tabcomplex import (
    LaurentPolynomial,
    empty_face_tableau,
    h_vector,
    hilbert_coarse_check,
    kpoly,
    render_tableau,
    shelling_order,
    young_complex,
)
from tabcomplex.young import Partition

shape, flags = Partition((2, 1)), (2, 3)
cx = young_complex(shape, flags)

print("empty face:", empty_face_tableau(shape, flags))

cert = shelling_order(cx)
for f, N, eta in zip(cert.facets, cert.new_faces, cert.etas):
    print(render_tableau(shape, f, compact=True), " new face", render_tableau(shape, N), " eta", eta)

print("h-vector:", h_vector(cx))

# four formulas for the same polynomial
polys = {m: kpoly(cx, m) for m in ("faces", "interior", "shelling", "recursive")}
assert len(set(polys.values())) == 1
K = polys["faces"]
print("K has", len(K), "terms")

t = LaurentPolynomial.gen("t")
print("coarsened:", K.coarsen())
print("equals (1-t)^3 (1+3t+t^2):", K.coarsen() == (1 - t) ** 3 * (1 + 3 * t + t**2))
print(hilbert_coarse_check(cx, K))
