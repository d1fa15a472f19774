"""Stanley-Reisner data: Betti tables by Hochster's formula, maximal shifts and
the girth cross-checks they support.

Everything here comes from one sweep over vertex subsets ``W``: for each ``W``
the reduced Betti vector of ``c[W]`` is computed once and reused for the
Betti table and for ``g'``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import BoundReport
from .complex import Face, SimplicialComplex
from .errors import BudgetExceeded, VerificationError
from .girth import DEFAULT_BUDGET, INF, Girth, as_int_or_inf, girth_all
from .homology import betti_of_masks, check_prime

DEFAULT_MAX_N = 20


def minimal_nonfaces(c: SimplicialComplex) -> list[Face]:
    """Minimal generators of the Stanley-Reisner ideal, by size then lex."""
    return c.minimal_nonfaces()


def _sweep(c: SimplicialComplex, p: int, max_n: int) -> list[tuple[int, tuple[int, ...]]]:
    """``(|W|, betti)`` for every ``W ⊆ V``; ``betti[k]`` is ``dim H̃_{k-1}(c[W])``."""
    key = ("sweep", p)
    if key in c._cache:
        return c._cache[key]
    n = c.n
    if n > max_n:
        raise BudgetExceeded(f"subset sweep over {n} vertices exceeds max_n={max_n}")
    faces = sorted(c._faces)
    out = []
    for wm in range(1 << n):
        inside = [m for m in faces if m & ~wm == 0]
        top = max(m.bit_count() for m in inside)
        dims = []
        for q in range(-1, top):
            sub = frozenset(m for m in inside if q <= m.bit_count() <= q + 2)
            dims.append(betti_of_masks(sub, q, p))
        out.append((wm.bit_count(), tuple(dims)))
    c._cache[key] = out
    return out


@dataclass(frozen=True)
class BettiTable:
    """``entries[(i, j)] = β_{i,j}``; only nonzero entries are stored."""

    entries: dict[tuple[int, int], int]
    n: int
    d: int
    field: int

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries.get(ij, 0)

    def row(self, i: int) -> dict[int, int]:
        return {j: v for (a, j), v in self.entries.items() if a == i}

    @property
    def length(self) -> int:
        return max(i for i, _ in self.entries)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "field": self.field,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "beta"])
        for (i, j), v in sorted(self.entries.items()):
            w.writerow([i, j, v])
        return buf.getvalue()


def betti_table(c: SimplicialComplex, field: int = 2, max_n: int = DEFAULT_MAX_N) -> BettiTable:
    """``β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(c[W])``."""
    p = check_prime(field)
    entries: dict[tuple[int, int], int] = {}
    for j, dims in _sweep(c, p, max_n):
        for k, b in enumerate(dims):
            if b:
                i = j - k
                entries[(i, j)] = entries.get((i, j), 0) + b
    return BettiTable(entries, c.n, c.dim + 1, p)


@dataclass(frozen=True)
class ShiftProfile:
    M: tuple[int, ...]
    Q: tuple[int, ...]
    g_tilde: tuple[int, ...]

    def to_json(self) -> dict:
        return {"M": list(self.M), "Q": list(self.Q), "g_tilde": list(self.g_tilde)}

    def multiplicity_bound(self) -> Fraction:
        """``M_1 ... M_c / c!``."""
        return Fraction(math.prod(self.M), math.factorial(len(self.M)))


def shift_profile(t: BettiTable) -> ShiftProfile:
    """Maximal shifts ``M_1..M_{n-d}``, the missing values ``Q`` and ``g̃ = Q + 1``."""
    codim = t.n - t.d
    M = []
    for i in range(1, codim + 1):
        row = t.row(i)
        if not row:
            raise VerificationError(f"Betti row {i} is empty but codim is {codim}")
        M.append(max(row))
    if any(a >= b for a, b in zip(M, M[1:])):
        raise VerificationError(f"maximal shifts {M} are not strictly increasing")
    Q = tuple(j for j in range(1, t.n + 1) if j not in set(M))
    if len(Q) != t.d:
        raise VerificationError(f"expected {t.d} missing shifts, found {len(Q)}")
    return ShiftProfile(tuple(M), Q, tuple(x + 1 for x in Q))


def g_prime(
    c: SimplicialComplex,
    p_minus_1: int,
    field: int = 2,
    budget: int = DEFAULT_BUDGET,
) -> Girth:
    """``min |W| - j`` over ``W ⊆ V`` and ``j >= 0`` with ``H̃_{p-1+j}(c[W]) ≠ 0``."""
    p = check_prime(field)
    if (1 << c.n) > budget:
        raise BudgetExceeded(
            f"g' needs {1 << c.n} subsets, budget is {budget}", lower_bound=p_minus_1 + 2
        )
    best: Girth = INF
    for size, dims in _sweep(c, p, max(DEFAULT_MAX_N, c.n)):
        for k in range(p_minus_1 + 1, len(dims)):
            if dims[k]:
                best = min(best, size - (k - 1 - p_minus_1))
    return best


def check_girth_link(
    c: SimplicialComplex,
    field: int = 2,
    budget: int = DEFAULT_BUDGET,
    max_n: int = DEFAULT_MAX_N,
) -> BoundReport:
    """For every ``p = 1..d`` check ``g̃_{p-1} = min(n-d+p+1, gr_{p-1})`` and
    ``gr_{p-1} = g'_{p-1}``."""
    p = check_prime(field)
    n, d = c.n, c.dim + 1
    prof = shift_profile(betti_table(c, p, max_n))
    girths = [w.value for w in girth_all(c, p, budget)]
    rows, ok = [], True
    for k in range(d):
        cap = min(n - d + k + 2, girths[k])
        gp = g_prime(c, k, p, budget)
        a = prof.g_tilde[k] == cap
        b = girths[k] == gp
        ok &= a and b
        rows.append(
            {
                "p": k + 1,
                "g_tilde": prof.g_tilde[k],
                "cap": n - d + k + 2,
                "girth": as_int_or_inf(girths[k]),
                "g_prime": as_int_or_inf(gp),
                "shift_equality": a,
                "g_prime_equality": b,
            }
        )
    return BoundReport(
        "girth_link",
        {"n": n, "d": d, "field": p},
        float("nan"),
        float("nan"),
        ok,
        "",
        {"per_p": rows, "shifts": prof.to_json()},
    )
