"""Girths of simplicial complexes.

``gr_q(Γ)`` is the least ``|W|`` such that ``H̃_q(lk_Γ(F)[W]) ≠ 0`` for some
face ``F`` (the empty face included) and ``W`` a set of link vertices.  The
search ascends in ``|W|`` and, inside a level, visits ``F`` by size then
lexicographically and ``W`` lexicographically, so the witness returned is the
least one in that order.

A candidate ``W`` is skipped without a homology evaluation when some vertex of
``W`` lies in no ``q``-face of ``lk(F)[W]``: deleting such a vertex leaves
``H̃_q`` unchanged, and the smaller set was already rejected one level down.
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Sequence, Union

from .complex import SimplicialComplex, iter_bits
from .errors import BudgetExceeded, DomainError, VerificationError
from .homology import DEFAULT_FIELD, betti_of_masks, check_prime

INF = math.inf
Girth = Union[int, float]

DEFAULT_BUDGET = int(os.environ.get("GIRTHLAB_BUDGET", 10**6))


@dataclass(frozen=True)
class GirthWitness:
    p_minus_1: int
    value: Girth
    witness_face: tuple[int, ...] = ()
    witness_set: tuple[int, ...] = ()
    field: int = DEFAULT_FIELD
    evaluations: int = dc_field(default=0, compare=False)

    @property
    def finite(self) -> bool:
        return self.value != INF

    def to_json(self) -> dict:
        return {
            "p_minus_1": self.p_minus_1,
            "girth": "inf" if self.value == INF else int(self.value),
            "F": list(self.witness_face),
            "W": list(self.witness_set),
            "field": self.field,
        }

    @classmethod
    def from_json(cls, d: dict) -> "GirthWitness":
        g = d["girth"]
        return cls(
            d["p_minus_1"], INF if g == "inf" else int(g), tuple(d["F"]), tuple(d["W"]), d["field"]
        )


def verify_witness(c: SimplicialComplex, w: GirthWitness) -> bool:
    """Re-check a finite witness from scratch."""
    from .homology import reduced_betti

    if not w.finite:
        return True
    if len(w.witness_set) != w.value or set(w.witness_set) & set(w.witness_face):
        return False
    if not c.is_face(w.witness_face):
        return False
    lk = c.link(w.witness_face)
    if not set(w.witness_set) <= set(lk.vertices):
        return False
    return reduced_betti(lk.induced(w.witness_set), w.p_minus_1, w.field) > 0


class _LinkTable:
    """Per-face data for one homology degree: link faces of the three sizes
    that matter and the link's vertex positions."""

    __slots__ = ("face", "faces", "qfaces", "verts")

    def __init__(self, face: int, faces: list[int], qfaces: list[int], verts: list[int]):
        self.face = face
        self.faces = faces
        self.qfaces = qfaces
        self.verts = verts


def _tables(c: SimplicialComplex, q: int, only_empty: bool) -> list[_LinkTable]:
    sizes = c._by_size
    out = []
    candidates = [0] if only_empty else [m for lst in sizes for m in lst]
    for fm in candidates:
        k = fm.bit_count()
        # the link needs faces with q+1 vertices
        if k + q + 1 >= len(sizes):
            continue
        faces, qfaces = [], []
        verts = 0
        for s in (k + q, k + q + 1, k + q + 2):
            if 0 <= s < len(sizes):
                for g in sizes[s]:
                    if g & fm == fm:
                        h = g ^ fm
                        faces.append(h)
                        if s == k + q + 1:
                            qfaces.append(h)
        if not qfaces:
            continue
        for g in sizes[k + 1]:
            if g & fm == fm:
                verts |= g ^ fm
        out.append(_LinkTable(fm, faces, qfaces, list(iter_bits(verts))))
    return out


def _search(
    c: SimplicialComplex,
    q: int,
    p: int,
    budget: int,
    *,
    only_empty: bool = False,
    max_size: int | None = None,
) -> tuple[int, int, int, int] | tuple[None, None, None, int]:
    """Core ascending search; returns ``(size, F, W, evals)`` or ``(None, ..., evals)``."""
    tables = _tables(c, q, only_empty)
    if not tables:
        return None, None, None, 0
    top = max(len(t.verts) for t in tables)
    if max_size is not None:
        top = min(top, max_size)
    evals = 0
    for s in range(q + 2, top + 1):
        for t in tables:
            if len(t.verts) < s:
                continue
            bits = [1 << i for i in t.verts]
            for combo in combinations(bits, s):
                wm = 0
                for b in combo:
                    wm |= b
                cover = 0
                for h in t.qfaces:
                    if h & ~wm == 0:
                        cover |= h
                if cover != wm:
                    continue
                if evals >= budget:
                    raise BudgetExceeded(
                        f"girth search exceeded {budget} homology evaluations", lower_bound=s
                    )
                evals += 1
                sub = frozenset(h for h in t.faces if h & ~wm == 0)
                if betti_of_masks(sub, q, p):
                    return s, t.face, wm, evals
    return None, None, None, evals


def girth(
    c: SimplicialComplex,
    p_minus_1: int,
    field: int = DEFAULT_FIELD,
    budget: int = DEFAULT_BUDGET,
) -> GirthWitness:
    """``gr_{p-1}(c)`` with its lexicographically least certifying ``(F, W)``.

    Flag complexes are routed to :func:`girth_flag_fast`; the witness is the
    same because the empty face is visited first at every level.

    Raises :class:`BudgetExceeded` (with a certified lower bound) when more
    than ``budget`` homology evaluations would be needed.
    """
    if p_minus_1 < 0:
        raise DomainError("p_minus_1 must be >= 0")
    p = check_prime(field)
    only_empty = c.is_flag()
    s, fm, wm, evals = _search(c, p_minus_1, p, budget, only_empty=only_empty)
    if s is None:
        return GirthWitness(p_minus_1, INF, field=p, evaluations=evals)
    return GirthWitness(p_minus_1, s, c._tuple(fm), c._tuple(wm), p, evals)


def girth_flag_fast(
    c: SimplicialComplex, p_minus_1: int, field: int = DEFAULT_FIELD, budget: int = DEFAULT_BUDGET
) -> GirthWitness:
    """Girth of a flag complex, searching only induced subcomplexes of ``c``."""
    if not c.is_flag():
        raise DomainError("girth_flag_fast needs a flag complex")
    return minimal_homology_support(c, p_minus_1, field, budget)


def minimal_homology_support(
    c: SimplicialComplex, q: int, field: int = DEFAULT_FIELD, budget: int = DEFAULT_BUDGET
) -> GirthWitness:
    """Least ``|W|`` with ``H̃_q(c[W]) ≠ 0``; the ``F = ∅`` slice of :func:`girth`."""
    p = check_prime(field)
    s, _, wm, evals = _search(c, q, p, budget, only_empty=True)
    if s is None:
        return GirthWitness(q, INF, field=p, evaluations=evals)
    return GirthWitness(q, s, (), c._tuple(wm), p, evals)


def girth_exceeds(
    c: SimplicialComplex,
    p_minus_1: int,
    k: int,
    field: int = DEFAULT_FIELD,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True iff ``gr_{p-1}(c) > k``, checking only sets of size ``<= k``."""
    p = check_prime(field)
    s, *_ = _search(c, p_minus_1, p, budget, only_empty=c.is_flag(), max_size=k)
    return s is None


def girth_all(
    c: SimplicialComplex, field: int = DEFAULT_FIELD, budget: int = DEFAULT_BUDGET
) -> list[GirthWitness]:
    """``[gr_0, ..., gr_dim]``, after checking ``gr_{q-j} <= gr_q - j``."""
    out = [girth(c, q, field, budget) for q in range(max(c.dim, -1) + 1)]
    for q, w in enumerate(out):
        if not w.finite:
            continue
        for j in range(1, q + 1):
            if out[q - j].value > w.value - j:
                raise VerificationError(
                    f"gr_{q - j} = {out[q - j].value} > gr_{q} - {j} = {w.value - j}"
                )
    return out


def graph_girth(g: SimplicialComplex) -> Girth:
    """Length of a shortest cycle of a graph (BFS from every vertex)."""
    if g.dim > 1:
        raise DomainError("graph_girth expects a complex of dimension <= 1")
    adj = {v: g.neighbors(v) for v in g.vertices}
    best = INF
    for root in adj:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def check_cycle_hypothesis(c: SimplicialComplex, walk: Sequence[int]) -> bool:
    """True iff at most one index ``i`` has ``{v_{i-1}, v_i, v_{i+1}}`` a face.

    ``walk`` is a closed walk ``v_1 .. v_r`` (the edge ``v_r v_1`` is implied).
    When this holds, ``gr_1(c) <= r``.
    """
    r = len(walk)
    if r < 3:
        raise DomainError("a closed walk needs at least 3 vertices")
    for i in range(r):
        a, b = walk[i], walk[(i + 1) % r]
        if a == b or not c.is_face((a, b)):
            raise DomainError(f"{a}-{b} is not an edge")
    hits = sum(1 for i in range(r) if c.is_face({walk[i - 1], walk[i], walk[(i + 1) % r]}))
    return hits <= 1


def as_int_or_inf(x: Girth) -> Union[int, str]:
    return "inf" if x == INF else int(x)
