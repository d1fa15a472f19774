"""Reading and writing ``.scx`` facet files.

One facet per line as whitespace-separated vertex ids, ``vertex <id>`` for an
isolated vertex, ``#`` to end of line is a comment.  Emitted files may carry a
``# girthlab-provenance: {json}`` header, which :func:`read_provenance` parses.
"""

from __future__ import annotations

import json
import os
from typing import Any

from .complex import SimplicialComplex
from .errors import DomainError, ScxParseError

PROVENANCE_TAG = "# girthlab-provenance:"


def parse_scx_text(text: str) -> SimplicialComplex:
    facets, isolated = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ScxParseError("'vertex' takes exactly one id", lineno)
            isolated.append(_vertex_id(tokens[1], lineno))
            continue
        ids = [_vertex_id(t, lineno) for t in tokens]
        if len(set(ids)) != len(ids):
            raise ScxParseError("duplicate vertex in facet", lineno)
        facets.append(ids)
    try:
        return SimplicialComplex(facets, isolated)
    except DomainError as exc:
        raise ScxParseError(str(exc), 0) from exc


def _vertex_id(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ScxParseError(f"bad vertex id {tok!r}", lineno) from None
    if v < 0:
        raise ScxParseError(f"negative vertex id {v}", lineno)
    return v


def parse_scx(path: str | os.PathLike) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_scx_text(fh.read())


def format_scx(c: SimplicialComplex, provenance: dict[str, Any] | None = None) -> str:
    lines = []
    if provenance is not None:
        lines.append(f"{PROVENANCE_TAG} {json.dumps(provenance, sort_keys=True)}")
    for f in c.facets():
        if len(f) == 1 and c.degree(f[0]) == 0:
            lines.append(f"vertex {f[0]}")
        elif f:
            lines.append(" ".join(map(str, f)))
    return "\n".join(lines) + "\n"


def emit_scx(
    c: SimplicialComplex, path: str | os.PathLike, provenance: dict[str, Any] | None = None
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_scx(c, provenance))


def read_provenance(path: str | os.PathLike) -> dict[str, Any] | None:
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(PROVENANCE_TAG):
                return json.loads(line[len(PROVENANCE_TAG) :])
    return None
