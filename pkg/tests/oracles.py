"""Independent reference implementations used only by the tests.

These work on plain ``frozenset`` faces and use sympy for ranks over GF(p), so
they share no code with the package beyond the input data.
"""

from __future__ import annotations

import random
from itertools import combinations

from sympy import GF
from sympy.polys.matrices import DomainMatrix


def closure(facets) -> set[frozenset]:
    out = {frozenset()}
    for f in facets:
        f = tuple(f)
        for k in range(len(f) + 1):
            out.update(frozenset(s) for s in combinations(f, k))
    return out


def faces_of(c) -> set[frozenset]:
    return {frozenset(f) for f in c.faces()}


def rank_gf(rows: list[list[int]], ncols: int, p: int) -> int:
    if not rows or not ncols:
        return 0
    dom = GF(p)
    m = DomainMatrix([[dom(x) for x in r] for r in rows], (len(rows), ncols), dom)
    return m.rank()


def boundary_rank(faces: set[frozenset], k: int, p: int) -> int:
    """Rank of the map from faces with ``k`` vertices to faces with ``k - 1``."""
    upper = sorted(tuple(sorted(f)) for f in faces if len(f) == k)
    lower = sorted(tuple(sorted(f)) for f in faces if len(f) == k - 1)
    if not upper or not lower:
        return 0
    idx = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for i in range(len(f)):
            rows[idx[f[:i] + f[i + 1 :]]][j] = (-1) ** i
    return rank_gf(rows, len(upper), p)


def betti(faces: set[frozenset], q: int, p: int) -> int:
    n_q = sum(1 for f in faces if len(f) == q + 1)
    return n_q - boundary_rank(faces, q + 1, p) - boundary_rank(faces, q + 2, p)


def link(faces: set[frozenset], F: frozenset) -> set[frozenset]:
    return {G - F for G in faces if F <= G}


def induced(faces: set[frozenset], W) -> set[frozenset]:
    W = frozenset(W)
    return {G for G in faces if G <= W}


def vertices(faces: set[frozenset]) -> list[int]:
    return sorted({v for f in faces for v in f})


def girth(faces: set[frozenset], q: int, p: int = 2) -> float:
    """Full brute force over every face ``F`` and every ``W`` of link vertices."""
    best = float("inf")
    for F in faces:
        lk = link(faces, F)
        vs = vertices(lk)
        for s in range(q + 2, min(len(vs), int(min(best, 99)) - 1) + 1):
            if any(betti(induced(lk, W), q, p) for W in combinations(vs, s)):
                best = min(best, s)
                break
    return best


def graph_girth(edges) -> float:
    """Shortest cycle by trying every vertex subset as a cycle (tiny graphs only)."""
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    best = float("inf")

    def dfs(start, cur, seen, depth):
        nonlocal best
        if depth >= best:
            return
        for w in adj[cur]:
            if w == start and depth >= 3:
                best = min(best, depth)
            elif w not in seen and w > start:
                dfs(start, w, seen | {w}, depth + 1)

    for s in adj:
        dfs(s, s, {s}, 1)
    return best


def non_returning_walks(faces: set[frozenset], u: int, length: int) -> list[tuple]:
    """Every walk ``u = v_0, ..., v_length`` with ``v_i != v_{i+2}`` and no
    consecutive triple spanning a face, by direct recursion."""
    edges = {f for f in faces if len(f) == 2}
    vs = vertices(faces)
    out = []

    def grow(w):
        if len(w) == length + 1:
            out.append(tuple(w))
            return
        for x in vs:
            if frozenset((w[-1], x)) not in edges:
                continue
            if len(w) >= 2 and (x == w[-2] or frozenset((w[-2], w[-1], x)) in faces):
                continue
            grow(w + [x])

    grow([u])
    return out


def random_facets(rng: random.Random, n: int, k: int, max_size: int | None = None):
    """``k`` random nonempty subsets of ``{1..n}``."""
    max_size = max_size or n
    out = []
    for _ in range(k):
        s = rng.randint(1, max_size)
        out.append(tuple(sorted(rng.sample(range(1, n + 1), s))))
    return out


def sinkhorn(mat: list[list[float]], iters: int = 20000, tol: float = 1e-14):
    """Scale a nonnegative square matrix to be doubly stochastic; returns the
    column factors."""
    import numpy as np

    a = np.array(mat, dtype=float)
    r = np.ones(a.shape[0])
    col = np.ones(a.shape[1])
    for _ in range(iters):
        r = 1.0 / (a @ col)
        col = 1.0 / (a.T @ r)
        if np.abs((r[:, None] * a * col[None, :]).sum(axis=0) - 1).max() < tol:
            break
    return col


def transition_matrix(faces: set[frozenset], arcs, z):
    """The non-returning transition matrix on ``arcs`` built from its definition."""
    import numpy as np

    arcs = sorted(arcs)
    idx = {a: i for i, a in enumerate(arcs)}
    P = np.zeros((len(arcs), len(arcs)))
    for (u, v) in arcs:
        cont = [(v, w) for (a, w) in arcs if a == v and frozenset((u, w)) not in faces]
        total = sum(z[e] for e in cont)
        for e in cont:
            P[idx[(u, v)], idx[e]] = z[e] / total
    return P, arcs


def has_total_support(rows) -> bool:
    """Every nonzero of the square 0/1 matrix lies on a permutation (brute force)."""
    from itertools import permutations

    k = len(rows)
    if any(len(r) != k for r in rows):
        return False
    cover = set()
    for pm in permutations(range(k)):
        if all(rows[i][pm[i]] for i in range(k)):
            cover.update((i, pm[i]) for i in range(k))
    return bool(cover) and all((i, j) in cover for i in range(k) for j in range(k) if rows[i][j])
