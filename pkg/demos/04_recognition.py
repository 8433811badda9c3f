"""
Which complexes are tableau complexes?
======================================

A pure complex is one exactly when its non-cone vertices split into
blocks, each facet missing one vertex from every block.
"""

import itertools

from tabcomplex import (
    AbstractComplex,
    abstract_from_tableau_complex,
    boundary_of_simplex,
    join_complexes,
    recognize_tableau_complex,
    young_complex,
)

triangle = boundary_of_simplex("abc")
print("triangle:", recognize_tableau_complex(triangle).to_json())

points = AbstractComplex(("a", "b", "c"), ({"a"}, {"b"}, {"c"}))
print("three points:", recognize_tableau_complex(points))

# spanning trees of K4 (16 facets)
edges = list(itertools.combinations(range(4), 2))
trees = [
    frozenset(c)
    for c in itertools.combinations(edges, 3)
    if len({v for e in c for v in e}) == 4
]
print("K4 trees:", len(trees), "->", recognize_tableau_complex(AbstractComplex(tuple(edges), tuple(trees))))

# a join of simplex boundaries always qualifies
j = join_complexes([boundary_of_simplex("abc"), boundary_of_simplex("xy")])
rec = recognize_tableau_complex(j)
print("join: blocks", rec.blocks, " facets", len(j.facets))

# round trip through a Young complex
cx = young_complex((2, 2), 3)
ab = abstract_from_tableau_complex(cx)
rec = recognize_tableau_complex(ab)
print("2x2, n=3:", len(rec.blocks), "points, isomorphic:", rec.is_isomorphic_to(ab))
