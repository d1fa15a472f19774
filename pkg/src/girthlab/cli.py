"""``girthlab`` command line.

Exit codes: 0 success, 1 usage error, 2 ``.scx`` parse error, 3 budget
exhausted or no convergence, 4 a checked property failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Any, Callable, Sequence

from . import __version__
from . import bounds, generators, homology, stanley_reisner, walks
from .complex import SimplicialComplex
from .errors import (
    BudgetExceeded,
    ConvergenceError,
    DomainError,
    ScxParseError,
    VerificationError,
)
from .girth import DEFAULT_BUDGET, INF, as_int_or_inf, girth, girth_all
from .scx import emit_scx, format_scx, parse_scx

SCHEMA = "girthlab.run/1"

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", type=int, default=2, help="prime characteristic (default 2)")
    p.add_argument("--budget", type=int, default=None, help="cap on homology evaluations")
    p.add_argument("--threads", type=int, default=1, help="worker count (runs serially)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output", default=None, help="write to this path instead of stdout")
    p.add_argument("--seed", type=int, default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="girthlab", description="Girths and face bounds of simplicial complexes.")
    parser.add_argument("--version", action="version", version=f"girthlab {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("girth", parents=[common], help="girths with witnesses")
    g.add_argument("input")
    g.add_argument("--p", type=int, default=None, help="report gr_{p-1} only")

    b = sub.add_parser("betti", parents=[common], help="reduced Betti numbers")
    b.add_argument("input")

    h = sub.add_parser("hochster", parents=[common], help="Betti table and maximal shifts")
    h.add_argument("input")
    h.add_argument("--max-n", type=int, default=stanley_reisner.DEFAULT_MAX_N)

    w = sub.add_parser("walks", parents=[common], help="non-returning walk counts")
    w.add_argument("input")
    w.add_argument("--r", type=int, required=True, help="walk length")

    s = sub.add_parser("weights", parents=[common], help="admissible arcs and stable weights")
    s.add_argument("input")
    s.add_argument("--alpha", type=float, default=0.5)
    s.add_argument("--tol", type=float, default=1e-10)

    gen = sub.add_parser("gen", parents=[common], help="generate a complex as .scx")
    gen.add_argument(
        "kind",
        choices=("crosspoly", "simplex", "boundary", "cycle", "highgirth", "sparse2d", "corpus"),
    )
    gen.add_argument("args", nargs="*", help="kind-specific parameters")
    gen.add_argument("--a", type=float, default=None, help="face probability")
    gen.add_argument("--certify", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="check bounds and girth identities")
    v.add_argument("input")
    v.add_argument(
        "--bounds",
        default="mult,girthlink",
        help="comma list from mult, girthlink, moore, increasing",
    )
    return parser


# -- verbs ------------------------------------------------------------------------------


def _budget(ns) -> int:
    return DEFAULT_BUDGET if ns.budget is None else ns.budget


def _girth(ns, c: SimplicialComplex) -> tuple[Any, str]:
    if ns.p is not None:
        if ns.p < 1:
            raise DomainError("--p must be >= 1")
        ws = [girth(c, ns.p - 1, ns.field, _budget(ns))]
    else:
        ws = girth_all(c, ns.field, _budget(ns))
    rows = [w.to_json() for w in ws]
    flat = [
        [r["p_minus_1"], r["girth"], " ".join(map(str, r["F"])), " ".join(map(str, r["W"])), r["field"]]
        for r in rows
    ]
    text = _table(["p_minus_1", "girth", "F", "W", "field"], flat)
    return (rows[0] if ns.p is not None else rows), text


def _betti(ns, c: SimplicialComplex) -> tuple[Any, str]:
    bv = homology.betti_vector(c, ns.field)
    res = {
        "field": bv.field,
        "reduced_betti": {str(q): bv[q] for q in range(-1, c.dim + 1)},
        "f_vector": list(c.f_vector()),
        "reduced_euler": homology.euler_characteristic(c),
    }
    return res, _table(["degree", "betti"], [[q, bv[q]] for q in range(-1, c.dim + 1)])


def _hochster(ns, c: SimplicialComplex) -> tuple[Any, str]:
    t = stanley_reisner.betti_table(c, ns.field, ns.max_n)
    prof = stanley_reisner.shift_profile(t)
    res = {"table": t.to_json(), "shifts": prof.to_json()}
    return res, t.to_csv()


def _walks(ns, c: SimplicialComplex) -> tuple[Any, str]:
    rep = walks.tree_lemma_check(c, ns.r, ns.field)
    counts = walks.walk_counts_table(c, ns.r)
    res = rep.to_json()
    res["counts"] = [[u, v, k] for (u, v), k in sorted(counts.items())]
    return res, _table(["u", "v", "count"], res["counts"])


def _weights(ns, c: SimplicialComplex) -> tuple[Any, str]:
    ews = walks.stable_weights(walks.admissible_arcs(c, ns.alpha), tol=ns.tol)
    rows = [[u, v, ews.z[(u, v)]] for u, v in sorted(ews.arcs)]
    res = {"alpha": ns.alpha, "arcs": len(ews.arcs), "residual": ews.residual, "weights": rows}
    return res, _table(["u", "v", "z"], rows)


def _ints(args: Sequence[str], n: int, kind: str) -> list[int]:
    if len(args) != n:
        raise UsageError(f"gen {kind} takes {n} integer argument(s)")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"gen {kind}: arguments must be integers") from None


def _gen(ns) -> tuple[SimplicialComplex, dict]:
    kind, args = ns.kind, ns.args
    prov: dict[str, Any] = {"generator": kind, "args": list(args), "rng": generators.RNG_NAME}
    if kind == "corpus":
        if len(args) != 1:
            raise UsageError("gen corpus takes a name")
        named = generators.corpus()
        if args[0] not in named:
            raise UsageError(f"unknown corpus name {args[0]!r}; choose from {sorted(named)}")
        return named[args[0]], prov
    if kind in ("crosspoly", "simplex", "boundary", "cycle"):
        (k,) = _ints(args, 1, kind)
        fn: Callable[[int], SimplicialComplex] = {
            "crosspoly": generators.cross_polytope_boundary,
            "simplex": generators.simplex,
            "boundary": generators.simplex_boundary,
            "cycle": generators.cycle_complex,
        }[kind]
        return fn(k), prov
    seed = 0 if ns.seed is None else ns.seed
    prov.update(seed=seed, a=ns.a)
    m, k = _ints(args, 2, kind)
    if kind == "highgirth":
        c = generators.high_girth_pdim(m, k, seed, ns.a, certify=ns.certify, field=ns.field)
    else:
        c = generators.certified_sparse_2d(m, k, seed, ns.a, certify=ns.certify, field=ns.field)
    return c, prov


def _verify(ns, c: SimplicialComplex) -> tuple[Any, str]:
    wanted = [x.strip() for x in ns.bounds.split(",") if x.strip()]
    reports = []
    for name in wanted:
        if name == "mult":
            reports.append(bounds.multiplicity_bound(c, ns.field, _budget(ns)))
        elif name == "girthlink":
            reports.append(stanley_reisner.check_girth_link(c, ns.field, _budget(ns)))
        elif name == "moore":
            reports.append(bounds.moore_check(c.skeleton(1)))
        elif name == "increasing":
            try:
                ws = girth_all(c, ns.field, _budget(ns))
                ok, note = True, ""
            except VerificationError as exc:
                ws, ok, note = [], False, str(exc)
            reports.append(
                bounds.BoundReport(
                    "increasing_girths",
                    {"n": c.n, "d": c.dim + 1},
                    float("nan"),
                    float("nan"),
                    ok,
                    note,
                    {"girths": [as_int_or_inf(w.value) for w in ws]},
                )
            )
        else:
            raise UsageError(f"unknown bound {name!r}")
    res = {"all_pass": all(r.passed for r in reports), "reports": [r.to_json() for r in reports]}
    return res, bounds.reports_to_csv(reports)


def _table(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _nan_to_none(x: Any) -> Any:
    if isinstance(x, float) and x != x:
        return None
    if isinstance(x, float) and x == INF:
        return "inf"
    if isinstance(x, dict):
        return {k: _nan_to_none(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_nan_to_none(v) for v in x]
    return x


# -- entry point -------------------------------------------------------------------------


def _write(text: str, path: str | None, out) -> None:
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    start = time.perf_counter()
    try:
        ns = build_parser().parse_args(argv)
        if ns.threads < 1:
            raise UsageError("--threads must be >= 1")
        homology.check_prime(ns.field)
        if ns.verb == "gen":
            c, prov = _gen(ns)
            results: Any = {"f_vector": list(c.f_vector()), "provenance": prov}
            if ns.output:
                emit_scx(c, ns.output, prov)
                results["path"] = ns.output
            else:
                results["scx"] = format_scx(c, prov)
            csv_text = _table(["i", "f_i"], [[i, f] for i, f in enumerate(c.f_vector())])
            out_path = None
        else:
            c = parse_scx(ns.input)
            handler = {
                "girth": _girth,
                "betti": _betti,
                "hochster": _hochster,
                "walks": _walks,
                "weights": _weights,
                "verify": _verify,
            }[ns.verb]
            results, csv_text = handler(ns, c)
            out_path = ns.output
    except UsageError as exc:
        print(str(exc), file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and --version
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except ScxParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(json.dumps({"error": str(exc), "lower_bound": exc.lower_bound}), file=stderr)
        return EXIT_BUDGET
    except ConvergenceError as exc:
        print(json.dumps({"error": str(exc), "residual": exc.residual}), file=stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE

    if ns.format == "csv":
        text = csv_text
    else:
        report = {
            "schema": SCHEMA,
            "command": argv,
            "version": __version__,
            "seed": ns.seed,
            "results": _nan_to_none(results),
            "wall_time": round(time.perf_counter() - start, 6),
        }
        text = json.dumps(report, sort_keys=True) + "\n"
    _write(text, out_path, stdout)
    if ns.verb == "verify" and not results["all_pass"]:
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())
