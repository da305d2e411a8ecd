"""Cohomology of the odd raising part with coefficients in a tensor module.

For the natural module of gl(2|1) each degree contributes one highest weight. These
are exactly the (natural-twisted) terms of the resolution, which is what makes the
Kac-module resolution tick.
"""

from superbgg.replab.cohomology import cohomology
from superbgg.weights import format_weight, natural, split_hook
from superbgg.weyl_cosets import enumerate_w0k

m, n, lam, kmax = 2, 1, (1,), 3

res = cohomology(m, n, lam, kmax)
print("d^2 = 0:", res.d_squared_zero)
print("cochain dims:", res.cochain_dims[: kmax + 1])
print("cohomology dims:", res.cohomology_dims)

layers = enumerate_w0k(split_hook(lam, m), kmax)
for k in range(kmax + 1):
    found = sorted(format_weight(w) for w, _ in res.degrees[k].items())
    predicted = sorted(format_weight(natural(e)) for e in layers[k] if len(natural(e).pos) <= n)
    print(f"H^{k}: {found}   predicted {predicted}")
