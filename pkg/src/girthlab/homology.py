"""Reduced simplicial homology over prime fields.

Ranks of the augmented boundary maps are computed by exact Gaussian
elimination mod ``p``.  Two kernels live here: a dense one on numpy arrays
(``rank``) for the public :class:`BoundaryMatrix`, and a column-sparse one on
face bitmasks used by the search-heavy modules, memoized on the face set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .complex import SimplicialComplex, iter_bits
from .errors import BudgetExceeded, DomainError

DEFAULT_FIELD = 2
MAX_MATRIX_CELLS = 50_000_000


def check_prime(p: int) -> int:
    p = int(p)
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise DomainError(f"field characteristic must be prime, got {p}")
    return p


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the augmented boundary map from ``i``-faces to ``(i-1)``-faces."""

    data: np.ndarray
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    p: int

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape


def boundary_matrix(c: SimplicialComplex, i: int, p: int = DEFAULT_FIELD) -> BoundaryMatrix:
    """Boundary map ``∂_i`` with entries reduced mod ``p``.

    Row ``i = 0`` is the augmentation: every vertex maps to ``∅`` with
    coefficient 1.  Removing the ``k``-th vertex (in increasing order) carries
    sign ``(-1)**k``.
    """
    p = check_prime(p)
    if not 0 <= i <= c.dim:
        raise DomainError(f"boundary dimension {i} outside 0..{c.dim}")
    rows = tuple(c.faces(i - 1))
    cols = tuple(c.faces(i))
    if len(rows) * len(cols) > MAX_MATRIX_CELLS:
        raise BudgetExceeded(f"boundary matrix {len(rows)}x{len(cols)} exceeds size guard")
    index = {f: r for r, f in enumerate(rows)}
    data = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, f in enumerate(cols):
        for k in range(len(f)):
            data[index[f[:k] + f[k + 1 :]], j] = 1 if k % 2 == 0 else -1
    return BoundaryMatrix(data % p, rows, cols, p)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p), by dense row reduction."""
    m = np.array(a, dtype=np.int64) % p
    if m.size == 0:
        return 0
    if m.size > MAX_MATRIX_CELLS:
        raise BudgetExceeded(f"matrix with {m.size} cells exceeds size guard")
    nrows, ncols = m.shape
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(m[r:, col])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, col]), p - 2, p)
        m[r] = (m[r] * inv) % p
        below = m[:, col].copy()
        below[r] = 0
        hit = np.flatnonzero(below)
        if hit.size:
            m[hit] = (m[hit] - np.outer(below[hit], m[r])) % p
        r += 1
    return r


def rank(m: BoundaryMatrix) -> int:
    return rank_mod_p(m.data, m.p)


# -- sparse mask kernel --------------------------------------------------------


def _rank_gf2(cols: list[int]) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for col in cols:
        while col:
            low = col & -col
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                r += 1
                break
            col ^= piv
    return r


def _rank_gfp(cols: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        while col:
            lead = min(col)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(col[lead], p - 2, p)
                pivots[lead] = {k: (v * inv) % p for k, v in col.items()}
                break
            c = col[lead]
            for k, v in piv.items():
                nv = (col.get(k, 0) - c * v) % p
                if nv:
                    col[k] = nv
                else:
                    col.pop(k, None)
    return len(pivots)


def _boundary_rank(upper: list[int], lower: list[int], p: int) -> int:
    if not upper or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    if p == 2:
        cols = []
        for g in upper:
            col = 0
            for b in iter_bits(g):
                col |= 1 << index[g ^ (1 << b)]
            cols.append(col)
        return _rank_gf2(cols)
    dcols = []
    for g in upper:
        col = {}
        for k, b in enumerate(iter_bits(g)):
            col[index[g ^ (1 << b)]] = 1 if k % 2 == 0 else p - 1
        dcols.append(col)
    return _rank_gfp(dcols, p)


@lru_cache(maxsize=1 << 17)
def betti_of_masks(faces: frozenset[int], q: int, p: int) -> int:
    """``dim H̃_q`` of the complex whose faces with ``q``, ``q+1`` and ``q+2``
    vertices are ``faces`` (other sizes are ignored).

    Relabelling vertices does not change homology, so the cache key is just the
    mask set and is shared between a complex and its induced subcomplexes.
    """
    lower, mid, upper = [], [], []
    for m in faces:
        k = m.bit_count() - q
        if k == 1:
            mid.append(m)
        elif k == 0:
            lower.append(m)
        elif k == 2:
            upper.append(m)
    if not mid:
        return 0
    r_q = _boundary_rank(mid, lower, p) if q >= 0 else 0
    r_up = _boundary_rank(upper, mid, p)
    return len(mid) - r_q - r_up


# -- public API ----------------------------------------------------------------


@dataclass(frozen=True)
class BettiVector:
    """``dims[k]`` is ``dim H̃_{k-1}``, so ``dims[0]`` is degree ``-1``."""

    dims: tuple[int, ...]
    field: int

    def __getitem__(self, q: int) -> int:
        return self.dims[q + 1] if -1 <= q < len(self.dims) - 1 else 0

    def nonzero_degrees(self) -> list[int]:
        return [q - 1 for q, d in enumerate(self.dims) if d]


def _relevant(c: SimplicialComplex, q: int) -> frozenset[int]:
    sizes = c._by_size
    return frozenset(m for k in (q, q + 1, q + 2) if 0 <= k < len(sizes) for m in sizes[k])


def reduced_betti(c: SimplicialComplex, q: int, p: int = DEFAULT_FIELD) -> int:
    """``dim H̃_q(c; GF(p))``; zero above the dimension."""
    p = check_prime(p)
    if q < -1:
        raise DomainError("homology degree must be >= -1")
    if q > c.dim:
        return 0
    return betti_of_masks(_relevant(c, q), q, p)


def betti_vector(c: SimplicialComplex, p: int = DEFAULT_FIELD) -> BettiVector:
    p = check_prime(p)
    return BettiVector(tuple(reduced_betti(c, q, p) for q in range(-1, c.dim + 1)), p)


def euler_characteristic(c: SimplicialComplex) -> int:
    """Reduced Euler characteristic ``Σ_{i≥-1} (-1)^i f_i``."""
    return sum((-1) ** (k - 1) * len(lst) for k, lst in enumerate(c._by_size))
