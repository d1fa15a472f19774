"""Closed-form face-number bounds and the exponents they use.

Exponents are exact :class:`~fractions.Fraction` values; bound values are
floats, except where a comparison against an integer face count can be done
exactly (the Moore bound and the multiplicity bound).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable

from .complex import SimplicialComplex
from .errors import DomainError
from .girth import DEFAULT_BUDGET, INF, girth_all

RELATIVE_GUARD = 1e-9


@dataclass
class BoundReport:
    bound_name: str
    parameters: dict[str, Any]
    bound_value: float
    measured_value: float
    passed: bool
    notes: str = ""
    extra: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def reports_to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "n", "d", "r", "p", "i", "bound", "measured", "pass"])
    for rep in reports:
        prm = rep.parameters
        w.writerow(
            [rep.bound_name]
            + [prm.get(k, "") for k in ("n", "d", "r", "p", "i")]
            + [rep.bound_value, rep.measured_value, rep.passed]
        )
    return buf.getvalue()


def within(measured: float, bound: float) -> bool:
    """``measured <= bound`` up to a relative guard band."""
    return measured <= bound + RELATIVE_GUARD * max(1.0, abs(bound))


# -- Moore bound ------------------------------------------------------------------


def moore_bound(a: Fraction | int | float, g: int) -> Fraction | float:
    """``n_0(a, g)``: fewest vertices of a graph with average degree ``a`` and
    girth ``g`` (exact when ``a`` is rational)."""
    if g < 3:
        raise DomainError("moore_bound needs g >= 3")
    if a < 2:
        raise DomainError("moore_bound needs average degree >= 2")
    if not isinstance(a, float):
        a = Fraction(a)
    r, odd = divmod(g, 2)
    geom = sum((a - 1) ** i for i in range(r))
    return 1 + a * geom if odd else 2 * geom


def moore_check(g: SimplicialComplex) -> BoundReport:
    """``n >= n_0(a, gr)`` for a graph with finite girth ``gr`` and ``a >= 2``."""
    from .girth import graph_girth

    n = g.n
    a = Fraction(2 * g.f(1), n) if n else Fraction(0)
    gr = graph_girth(g.skeleton(1))
    if gr == INF or a < 2:
        return BoundReport("moore", {"n": n}, float("nan"), n, True, "not applicable", {"a": str(a)})
    n0 = moore_bound(a, int(gr))
    return BoundReport(
        "moore", {"n": n, "g": int(gr) - 1}, float(n0), n, n >= n0, "", {"a": str(a), "n0": str(n0)}
    )


# -- exponents ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def a_exponent(p: int, r: int, i: int) -> Fraction:
    """``a_{p,r,i}``: ``1 + 1/r + ... + 1/r^(i-1)`` for ``p = 2``, ``p - 1`` at
    ``i = p - 1``, else the average of ``a_{p-1,r,i-1}`` and ``a_{p,r,i-1}``
    plus one."""
    if p < 2 or r < 2 or i < p - 1:
        raise DomainError(f"a_exponent undefined at p={p}, r={r}, i={i}")
    if i == p - 1:
        return Fraction(p - 1)
    if p == 2:
        return Fraction(r**i - 1, r**i - r ** (i - 1))
    return (a_exponent(p - 1, r, i - 1) + a_exponent(p, r, i - 1)) / 2 + 1


def a_exponent_limit(p: int, r: int) -> Fraction:
    return Fraction(2 * p - 3) + Fraction(1, r - 1)


def geometric_exponent(r: int, i: int) -> Fraction:
    """``1/r + 1/r^2 + ... + 1/r^i``."""
    return sum((Fraction(1, r**k) for k in range(1, i + 1)), Fraction(0))


# -- one-girth bounds --------------------------------------------------------------


def f1_bound(n: float, d: int, r: int, eps: float = 0.0, parity: str = "even") -> float:
    """Edge bound under ``gr_1 > 2r`` (``even``) or ``gr_1 > 2r+1`` (``odd``)."""
    if r < 2 or d < 2:
        raise DomainError("f1_bound needs r >= 2 and d >= 2")
    if parity == "even":
        const = 0.5 + eps
    elif parity == "odd":
        const = 2 ** (-1 - 1 / r) + eps
    else:
        raise DomainError("parity must be 'even' or 'odd'")
    return const * (d - 1) ** (1 - 1 / r) * n ** (1 + 1 / r)


def f1_bound_d3_r3(n: float, eps: float = 0.0) -> float:
    """Sharper edge bound for two-dimensional complexes with ``gr_1 > 6``."""
    return (0.5 + eps) * 3 ** (1 / 3) * n ** (4 / 3)


def delta_ratio(n: float, d: int, r: int) -> float:
    """``r / log(n/d)``; the bounds above hold only when this is small."""
    return r / math.log(n / d) if n > d else INF


def fi_bound(n: float, d: float, r: int, i: int, C: float = 1.0) -> float:
    """``C d^(i - s) n^(1 + s)`` with ``s = 1/r + ... + 1/r^i``.

    The ``d`` exponent is ``i - s``, as produced by summing the vertex-link
    bound over vertices; with ``i = 1`` this has the shape of :func:`f1_bound`.
    """
    if r < 2 or i < 0:
        raise DomainError("fi_bound needs r >= 2 and i >= 0")
    s = geometric_exponent(r, i)
    return C * d ** float(i - s) * n ** float(1 + s)


def fi_conjecture_bound(n: float, d: int, r: int, i: int, eps: float = 0.0) -> float:
    """``(1/(i+1)! + eps) (d-1)^(1-1/r^i) (d-2)^(1-1/r^(i-1)) ... (d-i)^(1-1/r) n^(1+s)``."""
    if r < 2 or i < 1 or d <= i:
        raise DomainError("fi_conjecture_bound needs r >= 2, i >= 1, d > i")
    val = 1 / math.factorial(i + 1) + eps
    for j in range(1, i + 1):
        val *= (d - j) ** (1 - 1 / r ** (i + 1 - j))
    return val * n ** float(1 + geometric_exponent(r, i))


def gen_conjecture_bound(n: float, d: float, p: int, r: int, i: int, C: float = 1.0) -> float:
    """``C d^(i - a) n^a`` bounding ``f_{i-1}`` with ``a = a_{p,r,i}``."""
    a = a_exponent(p, r, i)
    return C * d ** float(i - a) * n ** float(a)


def existence_floor_crosspoly(n: float, p: int, C: float = 1.0) -> float:
    """``C n^(p - p/(2^p - 1))``."""
    return C * n ** float(existence_exponent_crosspoly(p))


def existence_exponent_crosspoly(p: int) -> Fraction:
    return p - Fraction(p, 2**p - 1)


def existence_floor_2d(n: float, k: float, C: float = 1.0) -> float:
    """``C n^(5/2) k^(-3/2)``."""
    return C * n**2.5 * k**-1.5


# -- multiplicity bound ---------------------------------------------------------------


def capped_girths(c: SimplicialComplex, girths: list[float]) -> list[int]:
    """``min(n - d + p + 1, gr_{p-1})`` for ``p = 1..d``."""
    n, d = c.n, c.dim + 1
    return [int(min(n - d + q + 2, g)) for q, g in enumerate(girths)]


def multiplicity_bound(c: SimplicialComplex, field: int = 2, budget: int = DEFAULT_BUDGET) -> BoundReport:
    """``f_{d-1} <= n(n-1)...(n-d+1) / Π (gr_q - 1)`` with infinite girths
    replaced by ``n - d + q + 2`` (the value the Betti-table shifts give)."""
    n, d = c.n, c.dim + 1
    girths = [w.value for w in girth_all(c, field, budget)]
    capped = capped_girths(c, girths)
    num = math.prod(range(n - d + 1, n + 1))
    den = math.prod(g - 1 for g in capped)
    bound = Fraction(num, den) if den else Fraction(0)
    measured = c.f(d - 1)
    notes = "infinite girths capped at n-d+p+1" if INF in girths else ""
    return BoundReport(
        "multiplicity",
        {"n": n, "d": d, "field": field},
        float(bound),
        measured,
        measured <= bound,
        notes,
        {
            "girths": ["inf" if g == INF else int(g) for g in girths],
            "capped": capped,
            "bound_exact": str(bound),
            "equality": measured == bound,
            "multiplicity": measured,
        },
    )


def face_bound_report(
    name: str, bound: float, measured: float, params: dict[str, Any], notes: str = ""
) -> BoundReport:
    return BoundReport(name, params, bound, measured, within(measured, bound), notes)
