"""The gl(1|2) Verma module with highest weight (1|0,0), explored in a finite window.

The even raising operator E(2,1) kills a singular vector one step down. Quotienting
by the submodule it generates leaves a 4-dimensional module, which turns out to be
the Kac module of the same weight; its simple top is 3-dimensional.
"""

from superbgg.replab.verma import build_verma_gl12, verma_gl12_report

depth = 6
M = build_verma_gl12(depth)
print(f"window of height <= {depth}: {M.dim} basis vectors")
print("first few:", ", ".join(M.labels[:8]))

rep = verma_gl12_report(depth)
print()
print("proper singular vectors:")
for line in rep.proper_singular_lines:
    print(f"  weight {line.weight}: {line.expression}")

print()
print("quotient by the submodule of E(2,1)v:", rep.quotient_dim)
print("simple quotient:", rep.irreducible_dim)
print("same weights as the Kac module:", rep.weights_match_kac)
print("isomorphic to the Kac module:", rep.isomorphic_to_kac)
