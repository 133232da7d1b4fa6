"""
Matrix subspaces, projections and transitivity
==============================================

A subspace is stored as a canonical echelon basis, so two spans are equal
exactly when their bases match.
"""

from crosssections import Mat, span_reduce
from crosssections.matrices import elementary
from crosssections.subspaces import contains, equals, image_delete_rc, transitivity


def E(i, j):
    return elementary(3, 3, i, j)


a = span_reduce([E(1, 1), E(1, 2), E(2, 2)])
b = span_reduce([E(1, 1) + E(1, 2), E(1, 1) - E(1, 2), E(2, 2) + E(1, 1)])
print("a == b:", equals(a, b), " dim", a.dim)
print("contains [[1,5,0],[0,2,0],[0,0,0]]:", contains(a, Mat([[1, 5, 0], [0, 2, 0], [0, 0, 0]])))

# deleting row 1 and column 1 keeps only the lower-right 2x2 corner
print("image after deleting row 1, col 1:", image_delete_rc(a, 1, 1))

# matrices supported on the first row send every vector into span(e1)
row = span_reduce([E(1, 1), E(1, 2), E(1, 3)])
v = transitivity(row, trials=100)
print("first-row algebra:", v.kind, "witness", [str(t) for t in v.witness])

full = span_reduce([E(i, j) for i in (1, 2, 3) for j in (1, 2, 3)])
print("all of M3:", transitivity(full, trials=100).kind)
