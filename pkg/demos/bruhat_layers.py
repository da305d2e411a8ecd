"""Terms in a single layer of the resolution never compare in the Bruhat order.

We take lambda = (1,1) with m = 2, list the layers, and test every pair both in
the gl(m+n) order and in the super order after conjugating the positive part.
"""

import itertools

from superbgg.bruhat_order import leq_gl, leq_gl_closure, leq_super
from superbgg.weights import format_weight, natural, split_hook
from superbgg.weyl_cosets import enumerate_w0k

layers = enumerate_w0k(split_hook((1, 1), 2), 4)
for k, layer in layers.items():
    print(f"k={k}: " + ", ".join(format_weight(w) for w in layer))
    for u, v in itertools.combinations(layer, 2):
        gl = leq_gl(u, v) or leq_gl(v, u)
        sup = leq_super(natural(u), natural(v)) or leq_super(natural(v), natural(u))
        assert gl == (leq_gl_closure(u, v) or leq_gl_closure(v, u))
        print(f"    {format_weight(u)} vs {format_weight(v)}: comparable in gl={gl}, super={sup}")

# across layers things do compare
a, b = layers[0][0], layers[1][0]
print()
print(f"{format_weight(b)} <= {format_weight(a)}:", leq_gl(b, a))
