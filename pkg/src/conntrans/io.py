"""DIMACS-style edge lists and solver reports.

Files are 1-indexed::

    c optional comment
    p edge <n> <m>
    e <u> <v>
"""
from __future__ import annotations

import json
from typing import Iterable

from .graph import Graph, GraphError, build_graph
from .solvers import SolveReport


class GraphFormatError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def parse_graph(text: str) -> Graph:
    n = declared_m = None
    header_line = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError(lineno, "duplicate 'p' header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(lineno, f"expected 'p edge <n> <m>', got {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(lineno, f"non-integer header fields in {line!r}") from None
            if n < 0 or declared_m < 0:
                raise GraphFormatError(lineno, "negative header fields")
            header_line = lineno
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(lineno, "edge line before 'p' header")
            if len(parts) != 3:
                raise GraphFormatError(lineno, f"expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(lineno, f"non-integer endpoint in {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(lineno, f"endpoint out of range 1..{n} in {line!r}")
            if u == v:
                raise GraphFormatError(lineno, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphFormatError(lineno, f"unrecognised line {line!r}")
    if n is None:
        raise GraphFormatError(0, "missing 'p edge <n> <m>' header")
    if len(edges) != declared_m:
        raise GraphFormatError(header_line, f"header declares {declared_m} edges, found {len(edges)}")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(header_line, str(exc)) from None


def serialize_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def report_dict(report: SolveReport) -> dict:
    return {
        "kind": report.kind.value,
        "connected": report.connected_required,
        "size": report.size,
        "solution": [v + 1 for v in sorted(report.solution)],
        "certificate": report.certificate.kind,
        "padding_used": report.padding_used,
        "elapsed_ms": round(report.elapsed * 1000, 3),
    }


def emit_report(report: SolveReport, fmt: str = "json") -> str:
    d = report_dict(report)
    if fmt == "json":
        return json.dumps(d, sort_keys=True)
    if fmt != "human":
        raise ValueError(f"unknown report format {fmt!r}")
    width = max(map(len, d))
    rows = []
    for key, val in d.items():
        if key == "solution":
            val = "{" + ", ".join(map(str, val)) + "}"
        rows.append(f"{key:<{width}}  {val}")
    return "\n".join(rows)
