"""Non-returning walks on the directed 1-skeleton and stationary edge weights.

A walk ``v_0 -> v_1 -> ... -> v_k`` along edges is *non-returning* when, at
every interior step, ``v_i != v_{i+2}`` and ``{v_i, v_{i+1}, v_{i+2}}`` is not
a face.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import brentq
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .complex import SimplicialComplex
from .errors import ConvergenceError, DomainError
from .girth import INF, girth

Arc = tuple[int, int]


@dataclass(frozen=True)
class WalkDigraph:
    """Both orientations of every edge of ``complex``."""

    complex: SimplicialComplex
    out: dict[int, tuple[int, ...]]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.complex.vertices

    @property
    def arcs(self) -> list[Arc]:
        return [(u, v) for u in sorted(self.out) for v in self.out[u]]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out.get(u, ())

    def is_triangle(self, a: int, b: int, c: int) -> bool:
        return self.complex.is_face((a, b, c))

    def successors(self, arc: Arc) -> list[Arc]:
        """Arcs that may follow ``arc`` in a non-returning walk."""
        a, b = arc
        return [(b, c) for c in self.out[b] if c != a and not self.complex.is_face((a, b, c))]


def directed_skeleton(c: SimplicialComplex) -> WalkDigraph:
    return WalkDigraph(c, {v: c.neighbors(v) for v in c.vertices})


def is_non_returning(c: SimplicialComplex, walk: Sequence[int]) -> bool:
    for a, b in zip(walk, walk[1:]):
        if a == b or not c.is_face((a, b)):
            raise DomainError(f"{a}-{b} is not an edge")
    for a, b, x in zip(walk, walk[1:], walk[2:]):
        if a == x or c.is_face((a, b, x)):
            return False
    return True


def _counts_from(g: WalkDigraph, u: int, length: int) -> dict[Arc, int]:
    """Number of non-returning walks of ``length`` arcs from ``u``, by last arc."""
    layer = {(u, v): 1 for v in g.out.get(u, ())}
    succ_cache: dict[Arc, list[Arc]] = {}
    for _ in range(length - 1):
        nxt: dict[Arc, int] = defaultdict(int)
        for arc, cnt in layer.items():
            s = succ_cache.get(arc)
            if s is None:
                s = succ_cache[arc] = g.successors(arc)
            for b in s:
                nxt[b] += cnt
        layer = nxt
    return layer


def count_non_returning_walks(c: SimplicialComplex | WalkDigraph, u: int, v: int, length: int) -> int:
    """Exact count by dynamic programming over the last arc."""
    if length < 1:
        raise DomainError("walk length must be >= 1")
    g = c if isinstance(c, WalkDigraph) else directed_skeleton(c)
    return sum(cnt for (_, end), cnt in _counts_from(g, u, length).items() if end == v)


def enumerate_non_returning_walks(c: SimplicialComplex, u: int, length: int) -> list[tuple[int, ...]]:
    """All non-returning walks of ``length`` arcs starting at ``u``, by recursion."""
    out: list[tuple[int, ...]] = []

    def grow(walk: tuple[int, ...]) -> None:
        if len(walk) == length + 1:
            out.append(walk)
            return
        for x in c.neighbors(walk[-1]):
            if len(walk) >= 2 and (x == walk[-2] or c.is_face((walk[-2], walk[-1], x))):
                continue
            grow(walk + (x,))

    grow((u,))
    return out


@dataclass
class WalkCountReport:
    r: int
    bound: int
    max_count: int
    passed: bool
    odd_clause_pass: bool | None
    girth: float = field(default=INF)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "bound": self.bound,
            "max_count": self.max_count,
            "pass": self.passed,
            "odd_clause_pass": self.odd_clause_pass,
        }


def tree_lemma_check(c: SimplicialComplex, r: int, field: int = 2) -> WalkCountReport:
    """Compare the largest number of non-returning ``r``-walks between two
    vertices with ``(d-1)^(r-1)``; needs ``gr_1 > 2r``.

    When ``gr_1 > 2r+1`` also check that ``(r+1)``-walks starting with ``u->v``
    and with ``v->u`` never share an endpoint.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    g1 = girth(c, 1, field).value
    if not g1 > 2 * r:
        raise DomainError(f"needs gr_1 > {2 * r}, found {g1}")
    d = c.dim + 1
    bound = (d - 1) ** (r - 1)
    g = directed_skeleton(c)
    best = 0
    for u in g.vertices:
        ends: dict[int, int] = defaultdict(int)
        for (_, end), cnt in _counts_from(g, u, r).items():
            ends[end] += cnt
        if ends:
            best = max(best, max(ends.values()))
    odd = None
    if g1 > 2 * r + 1:
        odd = True
        for u, v in c.faces(1):
            if _endpoints_after(g, (u, v), r) & _endpoints_after(g, (v, u), r):
                odd = False
                break
    return WalkCountReport(r, bound, best, best <= bound, odd, g1)


def _endpoints_after(g: WalkDigraph, arc: Arc, steps: int) -> set[int]:
    layer = {arc}
    for _ in range(steps):
        layer = {b for a in layer for b in g.successors(a)}
    return {b for _, b in layer}


# -- admissible arcs and stable weights -------------------------------------------


@dataclass
class EdgeWeightSystem:
    """Admissible arcs ``E`` with optional positive weights ``z``."""

    complex: SimplicialComplex
    arcs: frozenset[Arc]
    alpha: float
    z: dict[Arc, float] | None = None
    residual: float | None = None

    def out_set(self, v: int) -> list[int]:
        """``T(v)``: heads of admissible arcs leaving ``v``."""
        return sorted(w for (a, w) in self.arcs if a == v)

    def t_set(self, u: int, v: int) -> list[int]:
        """``T_u(v) = {w : v->w ∈ E, uw ∉ Γ}`` (``w = u`` is excluded since ``{u}`` is a face)."""
        c = self.complex
        return [w for w in self.out_set(v) if not c.is_face({u, w})]

    def stationarity(self) -> dict[Arc, float]:
        """``(xP)`` on every admissible arc, for ``x`` uniform on ``E``."""
        if self.z is None:
            raise DomainError("weights not set")
        ne = len(self.arcs)
        out = {}
        for v in sorted({a for a, _ in self.arcs}):
            ins = [u for (u, b) in self.arcs if b == v]
            tsets = {u: self.t_set(u, v) for u in ins}
            sums = {u: sum(self.z[(v, w)] for w in ts) for u, ts in tsets.items()}
            for w in self.out_set(v):
                out[(v, w)] = sum(
                    self.z[(v, w)] / sums[u] / ne for u in ins if w in tsets[u] and sums[u] > 0
                )
        return out


def admissible_arcs(c: SimplicialComplex, alpha: float) -> EdgeWeightSystem:
    """Drop arcs whose edge has a large link, then close under the vertex rule.

    ``u->v`` starts in the removed set when ``f_0(lk(uv)) >= alpha * deg(u)`` or
    ``>= alpha * deg(v)``.  Then, while some vertex has more than
    ``4/3 * deg(v)`` removed arcs incident to it (both orientations counted),
    all of its incident arcs are removed.  The closure is monotone, so the
    result does not depend on the order vertices are visited.
    """
    if not 0 < alpha < 1:
        raise DomainError("alpha must lie in (0, 1)")
    edges = c.faces(1)
    if not edges:
        raise DomainError("complex has no edges")
    deg = {v: c.degree(v) for v in c.vertices}
    a = Fraction(alpha).limit_denominator(10**12)
    removed: set[Arc] = set()
    for u, v in edges:
        codeg = c.link((u, v)).n
        if codeg >= a * deg[u] or codeg >= a * deg[v]:
            removed.update({(u, v), (v, u)})
    _close(c, removed, deg)
    arcs = frozenset((x, y) for u, v in edges for (x, y) in ((u, v), (v, u))) - removed
    return EdgeWeightSystem(c, arcs, alpha)


def _close(c: SimplicialComplex, removed: set[Arc], deg: dict[int, int]) -> None:
    changed = True
    while changed:
        changed = False
        for v in c.vertices:
            incident = sum(1 for (a, b) in removed if v in (a, b))
            if 3 * incident > 4 * deg[v]:
                new = {(v, w) for w in c.neighbors(v)} | {(w, v) for w in c.neighbors(v)}
                if not new <= removed:
                    removed |= new
                    changed = True


def stable_weights(
    ews: EdgeWeightSystem, tol: float = 1e-10, max_iters: int = 100_000
) -> EdgeWeightSystem:
    """Positive weights making the uniform distribution on ``E`` stationary.

    Vertices are solved independently.  At each step the arc ``v->w`` with the
    largest ``(xP)_{vw}`` has its weight lowered to the larger of
    ``z - D|E|/(2t(v))`` and the value that brings ``(xP)_{vw}`` down to
    ``1/|E|``; the weights at ``v`` are then rescaled to sum to ``t(v)``.
    Ties go to the lexicographically least arc.
    """
    if not ews.arcs:
        raise DomainError("no admissible arcs")
    ne = len(ews.arcs)
    z: dict[Arc, float] = {}
    worst = 0.0
    for v in sorted({a for a, _ in ews.arcs}):
        zv, res = _solve_vertex(ews, v, ne, tol, max_iters)
        worst = max(worst, res)
        z.update({(v, w): val for w, val in zv.items()})
    return EdgeWeightSystem(ews.complex, ews.arcs, ews.alpha, z, worst)


def _solve_vertex(
    ews: EdgeWeightSystem, v: int, ne: int, tol: float, max_iters: int
) -> tuple[dict[int, float], float]:
    outs = ews.out_set(v)
    t = len(outs)
    ins = [u for (u, b) in sorted(ews.arcs) if b == v]
    tsets = {u: ews.t_set(u, v) for u in ins}
    for u, ts in tsets.items():
        if not ts:
            raise DomainError(f"arc {u}->{v} has no admissible continuation")
    if not has_total_support([[w in tsets[u] for w in outs] for u in ins]):
        raise DomainError(f"no positive stationary weights exist at vertex {v}")
    # users[w]: in-neighbours u with w ∈ T_u(v)
    users = {w: [u for u in ins if w in tsets[u]] for w in outs}
    z = {w: 1.0 for w in outs}
    target = 1.0 / ne

    def xp() -> dict[int, float]:
        sums = {u: sum(z[w] for w in tsets[u]) for u in ins}
        return {w: sum(z[w] / sums[u] for u in users[w]) / ne for w in outs}

    for _ in range(max_iters):
        vals = xp()
        dev = {w: abs(x - target) for w, x in vals.items()}
        res = max(dev.values())
        if res <= tol:
            return z, res
        big_d = sum(dev.values())
        w = max(outs, key=lambda k: (vals[k], -k))
        case1 = z[w] - big_d * ne / (2 * t)
        case2 = _exact_fix(z, w, users[w], tsets, ne)
        new = max(case1, case2)
        if not new > 0:
            new = z[w] / 2
        z[w] = new
        scale = t / sum(z.values())
        for k in z:
            z[k] *= scale
    vals = xp()
    res = max(abs(x - target) for x in vals.values())
    if res <= tol:
        return z, res
    raise ConvergenceError(f"stable weights at vertex {v} did not converge", res)


def _perfect(a: np.ndarray) -> bool:
    if a.shape[0] != a.shape[1]:
        return False
    if a.shape[0] == 0:
        return True
    match = maximum_bipartite_matching(csr_matrix(a.astype(np.int8)), perm_type="column")
    return bool((match >= 0).all())


def has_total_support(rows: list[list[bool]]) -> bool:
    """True iff every nonzero of the square 0/1 matrix lies on a perfect
    matching; equivalently it can be scaled to a doubly stochastic matrix."""
    a = np.array(rows, dtype=bool).reshape(len(rows), -1)
    if not _perfect(a):
        return False
    for i, j in zip(*np.nonzero(a)):
        rest = np.delete(np.delete(a, i, axis=0), j, axis=1)
        if not _perfect(rest):
            return False
    return True


def _exact_fix(z: dict[int, float], w: int, users: list[int], tsets: dict, ne: int) -> float:
    """Weight on ``v->w`` at which ``(xP)_{vw} = 1/|E|``, others fixed; 0 if none."""
    rest = [sum(z[k] for k in tsets[u] if k != w) for u in users]
    if sum(1 for r in rest if r == 0) >= 1:
        # an in-arc whose only continuation is w pins (xP)_{vw} >= 1/|E|
        return 0.0

    def f(x: float) -> float:
        return sum(x / (x + r) for r in rest) - 1.0

    if f(z[w]) <= 0:
        return z[w]
    return brentq(f, 0.0, z[w], xtol=1e-300, maxiter=500)


def walk_counts_table(c: SimplicialComplex, length: int) -> dict[tuple[int, int], int]:
    """Counts for every ordered pair of vertices (zero pairs omitted)."""
    g = directed_skeleton(c)
    out: dict[tuple[int, int], int] = {}
    for u in g.vertices:
        for (_, end), cnt in _counts_from(g, u, length).items():
            out[(u, end)] = out.get((u, end), 0) + cnt
    return out


__all__ = [
    "WalkDigraph",
    "directed_skeleton",
    "is_non_returning",
    "count_non_returning_walks",
    "enumerate_non_returning_walks",
    "walk_counts_table",
    "tree_lemma_check",
    "WalkCountReport",
    "EdgeWeightSystem",
    "admissible_arcs",
    "stable_weights",
]
