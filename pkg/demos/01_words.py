"""
A complex made of words
=======================

Seven four-letter words, one letter per position.  Each word is a facet;
a vertex is a (position, letter) pair that some word avoids.
"""

from tabcomplex import build_complex, homeomorphism_certificate

words = ["dead", "deal", "dell", "head", "heal", "held", "hell"]
cx = build_complex([tuple(w) for w in words], points=(1, 2, 3, 4))

print("facets:", len(cx.facets), " dimension:", cx.dimension)
print("f-vector:", cx.f_vector())

# every word has "e" in position 2, so that pair never shows up as a vertex
print("phantom pairs:", cx.phantom_pairs)
print("vertices:", cx.vertices)

# ridges lying in one facet only form the boundary
for ridge in cx.boundary_ridges():
    print("boundary ridge:", ["".join(sorted(s)) for s in ridge])

# the word list is not a poset problem, so topology is only reported on request
print("topology:", homeomorphism_certificate(cx, assume_shellable=True).value)

# star of (1 -/-> d): the words not starting with d
star = cx.star((1, "d"))
print("star:", ["".join(f) for f in star.facets])

# (4 -/-> d) is not safe: "heal" cannot end in d
print("safe (4, d)?", cx.is_safe((4, "d")))
