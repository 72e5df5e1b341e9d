"""Characteristic polynomial two ways.

The coefficient of x^(n-k) is a signed sum over order-k unions of disjoint
edges and cycles, weighted by inverse host degrees.  That exact rational
route has to agree with expanding prod(x - lambda_i) from the eigensolver.
"""

from mixedrandic import (
    char_poly_combinatorial,
    char_poly_numeric,
    randic_matrix,
    sample_mixed_graphs,
)

g = sample_mixed_graphs(5, 1, seed=42)[0]
print("graph:", *[f"{e.u}{e.kind.value}{e.v}" for e in g.edges])

exact = char_poly_combinatorial(g)
numeric = char_poly_numeric(randic_matrix(g))

print(f"{'k':>2} {'combinatorial':>18} {'numeric':>22}")
for k, (a, b) in enumerate(zip(exact.coefficients, numeric.coefficients)):
    print(f"{k:>2} {str(a):>18} {b:>22.15f}")
print("largest gap:", exact.max_difference(numeric))
