"""Singular vectors in small Kac modules and the simple quotients they cut out.

For polynomial highest weights the simple quotient should be the tensor module,
whose character is a hook Schur function. We check that for every hook partition
of size at most 3 in gl(2|1).
"""

from superbgg.characters import hook_schur
from superbgg.partitions import hook_partitions
from superbgg.replab.kac import build_kac
from superbgg.replab.modules import irreducible_quotient, singular_vectors
from superbgg.weights import format_weight, is_atypical, natural, split_hook

m, n = 2, 1
for size in range(4):
    for p in hook_partitions(size, m, n):
        nu = natural(split_hook(p, m)).with_n(n)
        K = build_kac(m, n, nu)
        proper = singular_vectors(K).proper
        q = irreducible_quotient(K)
        ok = q.quotient.character() == hook_schur(p, m, n)
        tag = "atypical" if is_atypical(nu, n) else "typical"
        print(f"{str(p.parts):<10} nu={format_weight(nu):<8} {tag:<9} dim K={K.dim:<3} simple={q.quotient.dim:<3} hook Schur: {ok}")
        for line in proper:
            print(f"    singular at {line.weight}: {line.expression}")
