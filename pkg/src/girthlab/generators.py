"""Named complexes and the seeded random high-girth constructions.

Named complexes use vertex ids starting at 1.  Random constructions draw from
numpy's PCG64 generator (``numpy.random.default_rng(seed)``), visiting
candidate top faces in lexicographic order and keeping each one when a uniform
draw falls below the probability; this order is part of the reproducibility
contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .complex import SimplicialComplex, cone, flag_completion
from .errors import CertificationError, DomainError
from .girth import girth_exceeds

RNG_NAME = "numpy.PCG64"


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def part_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for p in self.parts for v in p))

    @classmethod
    def consecutive(cls, sizes: Sequence[int], start: int = 1) -> "Partition":
        parts, v = [], start
        for s in sizes:
            parts.append(tuple(range(v, v + s)))
            v += s
        return cls(tuple(parts))


def is_balanced(c: SimplicialComplex, part: Partition) -> bool:
    """Every face meets every part at most once, and the parts cover ``V(c)``."""
    owner = part.part_of()
    if set(owner) != set(c.vertices) or sum(part.sizes) != len(owner):
        return False
    return all(owner[a] != owner[b] for a, b in c.faces(1))


# -- named complexes -------------------------------------------------------------


def simplex(n_vertices: int) -> SimplicialComplex:
    """The full simplex on ``1..n_vertices``."""
    if n_vertices < 1:
        raise DomainError("a simplex needs at least one vertex")
    return SimplicialComplex([tuple(range(1, n_vertices + 1))])


def cycle_complex(n: int) -> SimplicialComplex:
    if n < 3:
        raise DomainError("cycles need n >= 3")
    return SimplicialComplex([(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise DomainError("paths need n >= 1")
    return SimplicialComplex([(i, i + 1) for i in range(1, n)], [1])


def complete_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise DomainError("complete graphs need n >= 1")
    return SimplicialComplex(combinations(range(1, n + 1), 2), range(1, n + 1))


def complete_multipartite_graph(sizes: Sequence[int]) -> SimplicialComplex:
    part = Partition.consecutive(sizes)
    edges = [
        (a, b)
        for i, j in combinations(range(len(part.parts)), 2)
        for a in part.parts[i]
        for b in part.parts[j]
    ]
    return SimplicialComplex(edges, part.vertices())


def simplex_boundary(p: int) -> SimplicialComplex:
    """Boundary of the ``p``-simplex: all proper subsets of ``{1..p+1}``."""
    if p < 1:
        raise DomainError("simplex_boundary needs p >= 1")
    return SimplicialComplex(combinations(range(1, p + 2), p))


def cross_polytope_boundary(p: int) -> SimplicialComplex:
    """Boundary of the ``p``-dimensional cross-polytope.

    Vertices ``2i-1, 2i`` (``i = 1..p``) are antipodal; faces take at most one
    vertex from each pair.
    """
    if p < 1:
        raise DomainError("cross_polytope_boundary needs p >= 1")
    return SimplicialComplex(product(*[(2 * i - 1, 2 * i) for i in range(1, p + 1)]))


def antipodal_partition(p: int) -> Partition:
    return Partition.consecutive([2] * p)


def cone_over_complete_graph(n: int) -> SimplicialComplex:
    """Cone (apex ``n``) over ``K_{n-1}``: ``f_2 = C(n-1, 2)`` and ``gr_2 = ∞``."""
    if n < 2:
        raise DomainError("need n >= 2")
    return cone(complete_graph(n - 1), n)


def petersen_graph() -> SimplicialComplex:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return SimplicialComplex(outer + spokes + inner)


def heawood_graph() -> SimplicialComplex:
    """Incidence graph of the Fano plane: points 1..7, lines 8..14."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    return SimplicialComplex([(pt + 1, 8 + li) for li, ln in enumerate(lines) for pt in ln])


def turan_flag(n: int, d: int) -> SimplicialComplex:
    """Vertices ``1..n`` split into ``d`` nearly equal parts; faces are the
    sets meeting each part at most once."""
    if not 1 <= d <= n:
        raise DomainError("turan_flag needs 1 <= d <= n")
    q, r = divmod(n, d)
    part = Partition.consecutive([q + 1] * r + [q] * (d - r))
    return SimplicialComplex(product(*part.parts))


def turan_partition(n: int, d: int) -> Partition:
    q, r = divmod(n, d)
    return Partition.consecutive([q + 1] * r + [q] * (d - r))


# -- random balanced complexes ------------------------------------------------------


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= int(seed) < 2**64:
        raise DomainError("seed must be a 64-bit unsigned integer")
    return np.random.default_rng(int(seed))


def random_balanced(m: int, p: int, a: float, seed: int) -> tuple[SimplicialComplex, Partition]:
    """``p`` parts of ``m`` vertices; every transversal set of size ``< p`` is a
    face and each transversal ``p``-set is a face with probability ``a``."""
    if m < 1 or p < 2:
        raise DomainError("random_balanced needs m >= 1 and p >= 2")
    if not 0 <= a <= 1:
        raise DomainError("probability must lie in [0, 1]")
    part = Partition.consecutive([m] * p)
    rng = _rng(seed)
    tops = [t for t in product(*part.parts) if rng.random() < a]
    lower = [s for t in product(*part.parts) for s in combinations(t, p - 1)]
    return SimplicialComplex(tops + lower, part.vertices()), part


def random_tripartite_2d(m: int, a: float, seed: int) -> tuple[SimplicialComplex, Partition]:
    """Complete tripartite 1-skeleton with each transversal triangle kept with
    probability ``a``."""
    return random_balanced(m, 3, a, seed)


def _top_faces(c: SimplicialComplex, p: int) -> set[tuple[int, ...]]:
    return set(c.faces(p - 1))


def find_cross_polytope_boundaries(
    c: SimplicialComplex, part: Partition, *, faces: Iterable[tuple[int, ...]] | None = None
) -> list[tuple[int, ...]]:
    """Vertex sets taking two vertices from every part whose ``2^p`` transversal
    ``p``-sets are all faces, in lexicographic order of the pair choices."""
    p = len(part.parts)
    if not is_balanced(c, part) or c.dim > p - 1:
        raise DomainError("complex is not balanced with respect to the partition")
    tops = set(faces) if faces is not None else _top_faces(c, p)
    out = []
    for pairs in product(*(combinations(pt, 2) for pt in part.parts)):
        if all(t in tops for t in product(*pairs)):
            out.append(tuple(sorted(v for pr in pairs for v in pr)))
    return out


def purge_cross_polytopes(c: SimplicialComplex, part: Partition) -> SimplicialComplex:
    """Delete the lexicographically least top face of every cross-polytope
    boundary still fully present, in witness order."""
    p = len(part.parts)
    tops = _top_faces(c, p)
    for w in find_cross_polytope_boundaries(c, part):
        pairs = [tuple(v for v in w if v in pt) for pt in part.parts]
        cells = sorted(product(*pairs))
        if all(t in tops for t in cells):
            tops.discard(cells[0])
    return _replace_top(c, p, tops)


def _replace_top(c: SimplicialComplex, p: int, tops: set[tuple[int, ...]]) -> SimplicialComplex:
    lower = c.faces(p - 2) if p >= 2 else []
    return SimplicialComplex(list(tops) + lower, c.vertices)


def default_probability(n: int, p: int, scale: float = 1.0) -> float:
    """``min(1, scale * n^(-p/(2^p-1)))``."""
    return min(1.0, scale * n ** (-p / (2**p - 1)))


def high_girth_pdim(
    m: int, p: int, seed: int, a: float | None = None, *, certify: bool = False, field: int = 2
) -> SimplicialComplex:
    """Random balanced complex with cross-polytope boundaries purged, so that
    ``gr_{p-1} > 2p``.  With ``certify`` the girth bound is re-checked by
    exhaustive search and :class:`CertificationError` raised on failure."""
    n = m * p
    if a is None:
        a = default_probability(n, p)
    c, part = random_balanced(m, p, a, seed)
    out = purge_cross_polytopes(c, part)
    if certify and not girth_exceeds(out, p - 1, 2 * p, field):
        raise CertificationError(f"gr_{p - 1} <= {2 * p} after purging")
    return out


def sparsify_for_gr2(c: SimplicialComplex, k: int, part: Partition | None = None) -> SimplicialComplex:
    """Delete triangles until ``f_2(c[W]) < 2|W| - 4`` for all ``3 <= |W| <= k``.

    Sets are visited by size then lexicographically; each offending set loses
    its lexicographically least triangle until it complies.  Balanced
    two-dimensional input then has ``gr_2 > k``.
    """
    if c.dim > 2:
        raise DomainError("sparsify_for_gr2 expects a complex of dimension <= 2")
    if part is not None and not is_balanced(c, part):
        raise DomainError("complex is not balanced with respect to the partition")
    if k > c.n:
        raise DomainError("k exceeds the number of vertices")
    tris = set(c.faces(2))
    verts = c.vertices
    for size in range(3, k + 1):
        limit = 2 * size - 4
        for w in combinations(verts, size):
            ws = set(w)
            inside = sorted(t for t in tris if ws.issuperset(t))
            while len(inside) >= limit:
                tris.discard(inside.pop(0))
    return SimplicialComplex(list(tris) + c.faces(1), c.vertices)


def density_violations(c: SimplicialComplex, k: int) -> list[tuple[int, ...]]:
    """Sets ``W`` with ``3 <= |W| <= k`` and ``f_2(c[W]) >= 2|W| - 4``."""
    tris = c.faces(2)
    out = []
    for size in range(3, k + 1):
        for w in combinations(c.vertices, size):
            ws = set(w)
            if sum(1 for t in tris if ws.issuperset(t)) >= 2 * size - 4:
                out.append(w)
    return out


def default_tripartite_probability(n: int, k: int, eps: float = 1.0) -> float:
    """``min(1, eps * n^(-1/2) * k^(-3/2))``."""
    return min(1.0, eps * n**-0.5 * k**-1.5)


def certified_sparse_2d(
    m: int, k: int, seed: int, a: float | None = None, *, certify: bool = True, field: int = 2
) -> SimplicialComplex:
    n = 3 * m
    if a is None:
        a = default_tripartite_probability(n, k)
    c, part = random_tripartite_2d(m, a, seed)
    out = sparsify_for_gr2(c, k, part)
    if certify and not girth_exceeds(out, 2, k, field):
        raise CertificationError(f"gr_2 <= {k} after sparsification")
    return out


def corpus() -> dict[str, SimplicialComplex]:
    """Small named complexes used by the checks and demos."""
    return {
        "point": simplex(1),
        "two_points": SimplicialComplex([], [1, 2]),
        "edge": simplex(2),
        "path4": path_graph(4),
        "C4": cycle_complex(4),
        "C5": cycle_complex(5),
        "C6": cycle_complex(6),
        "C7": cycle_complex(7),
        "K4_graph": complete_graph(4),
        "K33": complete_multipartite_graph([3, 3]),
        "K33_flag": flag_completion(complete_multipartite_graph([3, 3])),
        "triangle_boundary": simplex_boundary(2),
        "full_triangle": simplex(3),
        "tetra_boundary": simplex_boundary(3),
        "simplex3": simplex(4),
        "octahedron": cross_polytope_boundary(3),
        "cone_K4": cone_over_complete_graph(5),
        "petersen": petersen_graph(),
        "heawood": heawood_graph(),
        "turan_9_3": turan_flag(9, 3),
        "cross4": cross_polytope_boundary(4),
    }

