"""Finite simplicial complexes.

A complex is stored as its full, downward-closed face set.  Faces are kept
internally as integer bitmasks over a sorted *universe* of vertex ids; complexes
derived from one another (links, induced subcomplexes, skeleta) share the
parent's universe so that identical face sets have identical mask sets.  The
public surface speaks in sorted tuples of vertex ids.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import DomainError

Face = tuple[int, ...]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask`` itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """An immutable finite simplicial complex.

    The void complex (no faces at all) is not representable: the smallest
    complex is ``{∅}``, which has no vertices.
    """

    __slots__ = ("_universe", "_pos", "_faces", "_by_size", "_vmask", "_cache")

    def __init__(self, facets: Iterable[Iterable[int]] = (), isolated: Iterable[int] = ()):
        gens: list[tuple[int, ...]] = []
        ids: set[int] = set()
        for f in facets:
            t = tuple(f)
            if len(set(t)) != len(t):
                raise DomainError(f"facet {t} repeats a vertex")
            gens.append(t)
            ids.update(t)
        iso = [int(v) for v in isolated]
        ids.update(iso)
        for v in ids:
            if not isinstance(v, int) or v < 0:
                raise DomainError(f"vertex ids must be non-negative integers, got {v!r}")
        universe = tuple(sorted(ids))
        pos = {v: i for i, v in enumerate(universe)}
        faces: set[int] = {0}
        for t in gens:
            m = 0
            for v in t:
                m |= 1 << pos[v]
            if m not in faces:
                faces.update(submasks(m))
        for v in iso:
            faces.add(1 << pos[v])
        self._init(universe, frozenset(faces))

    # -- internal constructors -------------------------------------------------

    def _init(self, universe: tuple[int, ...], faces: frozenset[int]) -> None:
        self._universe = universe
        self._pos = None
        self._faces = faces
        by_size: list[list[int]] = []
        vmask = 0
        for m in faces:
            k = m.bit_count()
            while len(by_size) <= k:
                by_size.append([])
            by_size[k].append(m)
            if k == 1:
                vmask |= m
        # ascending bit order == ascending vertex id, so this key is lexicographic
        self._by_size = tuple(tuple(sorted(lst, key=lambda m: tuple(iter_bits(m)))) for lst in by_size)
        self._vmask = vmask
        self._cache: dict = {}

    @classmethod
    def _from_masks(cls, universe: tuple[int, ...], faces: Iterable[int]) -> "SimplicialComplex":
        obj = cls.__new__(cls)
        fs = frozenset(faces)
        if 0 not in fs:
            fs = fs | {0}
        obj._init(universe, fs)
        return obj

    def _mask(self, vertices: Iterable[int]) -> int:
        if self._pos is None:
            self._pos = {v: i for i, v in enumerate(self._universe)}
        m = 0
        for v in vertices:
            try:
                m |= 1 << self._pos[v]
            except KeyError:
                raise DomainError(f"vertex {v} is not in the complex") from None
        return m

    def _tuple(self, mask: int) -> Face:
        u = self._universe
        return tuple(u[i] for i in iter_bits(mask))

    # -- basic queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._tuple(self._vmask)

    @property
    def n(self) -> int:
        return self._vmask.bit_count()

    @property
    def dim(self) -> int:
        return len(self._by_size) - 2

    def f_vector(self) -> tuple[int, ...]:
        """``(f_0, ..., f_dim)``; empty for the ``{∅}`` complex."""
        return tuple(len(lst) for lst in self._by_size[1:])

    def f(self, i: int) -> int:
        """Number of faces with ``i + 1`` vertices (``f(-1) == 1``)."""
        k = i + 1
        return len(self._by_size[k]) if 0 <= k < len(self._by_size) else 0

    def faces(self, dim: int | None = None) -> list[Face]:
        """Faces as sorted tuples, by size then lexicographically."""
        if dim is not None:
            k = dim + 1
            if not 0 <= k < len(self._by_size):
                return []
            return [self._tuple(m) for m in self._by_size[k]]
        return [self._tuple(m) for lst in self._by_size for m in lst]

    def facets(self) -> list[Face]:
        """Inclusion-maximal faces (isolated vertices included)."""
        out = []
        vm = self._vmask
        fs = self._faces
        for lst in self._by_size:
            for m in lst:
                free = vm & ~m
                if not any((m | (1 << i)) in fs for i in iter_bits(free)):
                    out.append(self._tuple(m))
        return out

    def is_face(self, face: Iterable[int]) -> bool:
        try:
            return self._mask(face) in self._faces
        except DomainError:
            return False

    __contains__ = is_face

    def degree(self, v: int) -> int:
        """Number of edges containing ``v``."""
        if not self.is_face((v,)):
            raise DomainError(f"vertex {v} is not in the complex")
        b = self._mask((v,))
        return sum(1 for m in self._by_size[2] if m & b) if len(self._by_size) > 2 else 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        b = self._mask((v,))
        if b not in self._faces:
            raise DomainError(f"vertex {v} is not in the complex")
        nb = 0
        if len(self._by_size) > 2:
            for m in self._by_size[2]:
                if m & b:
                    nb |= m
        return self._tuple(nb & ~b)

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self._universe == other._universe:
            return self._faces == other._faces
        return set(self.faces()) == set(other.faces())

    def __hash__(self) -> int:
        return hash(frozenset(self.faces()))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, f={self.f_vector()}, facets={self.facets()})"

    # -- structural operations -------------------------------------------------

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """``{G - F : F ⊆ G ∈ Γ}``."""
        fm = self._mask(face)
        if fm not in self._faces:
            raise DomainError(f"{tuple(face)} is not a face")
        return SimplicialComplex._from_masks(
            self._universe, (g ^ fm for g in self._faces if g & fm == fm)
        )

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """The induced subcomplex on ``vertices``."""
        vs = tuple(vertices)
        wm = self._mask(vs)
        if wm & ~self._vmask:
            raise DomainError("induced() needs a subset of the vertex set")
        return SimplicialComplex._from_masks(self._universe, (g for g in self._faces if g & ~wm == 0))

    def skeleton(self, i: int) -> "SimplicialComplex":
        if i < 0:
            raise DomainError("skeleton dimension must be >= 0")
        if i >= self.dim:
            return self
        return SimplicialComplex._from_masks(
            self._universe, (m for lst in self._by_size[: i + 2] for m in lst)
        )

    def minimal_nonfaces(self) -> list[Face]:
        """Inclusion-minimal non-faces over the vertex set, lexicographically."""
        key = "mnf"
        if key not in self._cache:
            fs = self._faces
            out: set[int] = set()
            for g in fs:
                for i in iter_bits(self._vmask & ~g):
                    nm = g | (1 << i)
                    if nm in fs or nm in out:
                        continue
                    if all((nm ^ (1 << j)) in fs for j in iter_bits(nm)):
                        out.add(nm)
            self._cache[key] = sorted(out, key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
        return [self._tuple(m) for m in self._cache[key]]

    def is_flag(self) -> bool:
        """True iff every minimal non-face has exactly two vertices."""
        if "flag" not in self._cache:
            self._cache["flag"] = all(len(f) == 2 for f in self.minimal_nonfaces())
        return self._cache["flag"]


def from_facets(facets: Iterable[Sequence[int]] = (), isolated: Iterable[int] = ()) -> SimplicialComplex:
    return SimplicialComplex(facets, isolated)


def flag_completion(graph: SimplicialComplex) -> SimplicialComplex:
    """Clique complex of a graph."""
    if graph.dim > 1:
        raise DomainError("flag_completion expects a complex of dimension <= 1")
    verts = graph.vertices
    adj = {v: set(graph.neighbors(v)) for v in verts}
    cliques: list[tuple[int, ...]] = []

    def extend(clique: tuple[int, ...], cands: list[int]) -> None:
        maximal = True
        for idx, w in enumerate(cands):
            maximal = False
            extend(clique + (w,), [x for x in cands[idx + 1 :] if x in adj[w]])
        if maximal and clique:
            # not necessarily maximal overall; downward closure absorbs duplicates
            cliques.append(clique)

    extend((), list(verts))
    return SimplicialComplex(cliques, verts)


def suspension(c: SimplicialComplex, u: int, v: int) -> SimplicialComplex:
    """Join of ``c`` with the two-point complex ``{u}, {v}``."""
    if u == v or c.is_face((u,)) or c.is_face((v,)):
        raise DomainError("suspension apexes must be two fresh vertex ids")
    facets = c.facets() or [()]
    return SimplicialComplex([f + (u,) for f in facets] + [f + (v,) for f in facets])


def cone(c: SimplicialComplex, apex: int) -> SimplicialComplex:
    if c.is_face((apex,)):
        raise DomainError(f"apex {apex} already a vertex")
    facets = c.facets() or [()]
    return SimplicialComplex([f + (apex,) for f in facets])
