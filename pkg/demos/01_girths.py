"""Girths of a few small complexes, with the witness that certifies each one."""

from girthlab import girth_all, verify_witness
from girthlab import generators as G

corpus = G.corpus()

# A graph's 1-girth is its usual girth; its 0-girth is 2 as soon as two
# vertices are non-adjacent.
for name in ("C5", "K4_graph", "petersen", "heawood"):
    c = corpus[name]
    print(f"{name:10s}", [w.to_json()["girth"] for w in girth_all(c)])

# Higher girths need the links.  The octahedron has girths 2, 4, 6: an
# antipodal pair, an equatorial square, the whole sphere.
oct_ = corpus["octahedron"]
for w in girth_all(oct_):
    print(f"gr_{w.p_minus_1} = {w.value}  F={w.witness_face}  W={w.witness_set}")
    assert verify_witness(oct_, w)

# The cone over K_4 has no 2-dimensional homology anywhere, but the hollow
# triangles of K_4 give gr_1 = 3, and the link of the apex gives gr_0 = 2.
for w in girth_all(corpus["cone_K4"]):
    print(w.to_json())
