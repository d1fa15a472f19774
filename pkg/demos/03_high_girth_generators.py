"""Random balanced complexes with large girth, and how many faces survive."""

from girthlab import girth, girth_exceeds
from girthlab import bounds as B
from girthlab import generators as G

# Graphs without 4-cycles: drop one edge from every complete K_{2,2}.  The
# floor's constant is free, so only the ratio is meaningful.
for m in (6, 10, 14):
    c = G.high_girth_pdim(m, 2, seed=1, a=0.5)
    n = c.n
    ratio = c.f(1) / B.existence_floor_crosspoly(n, 2)
    print(f"n={n:3d}  f_1={c.f(1):4d}  f_1/n^(4/3)={ratio:.3f}  girth={girth(c, 1).value}")

# The same idea one dimension up: purge every octahedron.
c = G.high_girth_pdim(4, 3, seed=1, a=0.5)
print("p=3:", c.f_vector(), "gr_2 > 6:", girth_exceeds(c, 2, 6))

# Two-dimensional complexes with gr_2 > k via a density condition on small sets.
c = G.certified_sparse_2d(5, 6, seed=1, a=0.3)
print("sparse 2d:", c.f_vector(), "violations:", len(G.density_violations(c, 6)))
print("gr_2 =", girth(c, 2).value)
