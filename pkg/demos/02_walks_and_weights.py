"""Non-returning walks, and weights that make the uniform arc distribution
stationary."""

import numpy as np

from girthlab import (
    SimplicialComplex,
    admissible_arcs,
    flag_completion,
    stable_weights,
    tree_lemma_check,
)
from girthlab import generators as G

# Below half the girth, non-returning walks between two vertices are unique:
# the ball of radius r looks like a tree.
for name, c, r in (("C7", G.cycle_complex(7), 3), ("Petersen", G.petersen_graph(), 2),
                   ("Heawood", G.heawood_graph(), 2)):
    print(name, tree_lemma_check(c, r).to_json())

# On a triangle-free graph every arc keeps all of its continuations, so the
# constant weights already work.
s = stable_weights(admissible_arcs(G.petersen_graph(), 0.5))
print("Petersen weights:", sorted(set(round(z, 12) for z in s.z.values())))

# A random flag complex with sparse links needs genuinely uneven weights.
rng = np.random.default_rng(4)
n = 40
edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < 0.25]
c = flag_completion(SimplicialComplex(edges))
try:
    s = stable_weights(admissible_arcs(c, 0.4), tol=1e-12)
    z = np.array(list(s.z.values()))
    print(f"{len(s.arcs)} arcs, residual {s.residual:.1e}, weights in [{z.min():.3f}, {z.max():.3f}]")
except ValueError as exc:
    # some vertex admits no positive solution for this draw
    print("no stationary weights:", exc)
