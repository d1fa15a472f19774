"""Betti tables from induced homology, maximal shifts, and the multiplicity
bound they give."""

from girthlab import betti_table, check_girth_link, multiplicity_bound, shift_profile
from girthlab import generators as G

corpus = G.corpus()

t = betti_table(corpus["C5"])
print("C5 table:", t.to_json()["entries"])
print("C5 shifts:", shift_profile(t).to_json())

# Missing shifts, shifted by one, are the girths (capped by n - d + p + 1).
for name in ("octahedron", "cone_K4", "tetra_boundary"):
    rep = check_girth_link(corpus[name])
    print(name, [(r["g_tilde"], r["girth"], r["cap"]) for r in rep.extra["per_p"]], rep.passed)

# f_{d-1} <= n(n-1)...(n-d+1) / prod(gr_q - 1), tight on cycles and the octahedron.
for name in ("C5", "octahedron", "petersen", "turan_9_3", "cone_K4"):
    rep = multiplicity_bound(corpus[name])
    print(f"{name:10s} f_(d-1)={rep.measured_value:3d}  bound={rep.extra['bound_exact']:>6s}  {rep.notes}")
