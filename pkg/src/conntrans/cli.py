"""Command-line front end.

Exit codes: 0 decided/solved, 1 usage or input-format error, 2 rejected
precondition (disconnected input, non-sP2-free input under AUTO padding,
oracle ceiling exceeded, ...).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus
from .enumerators import (
    enumerate_maximal_independent_sets,
    enumerate_minimal_transversals,
)
from .gadgets import Provenance, build_gadget, source_holds, target_holds
from .graph import PreconditionError, find_induced_claw, find_induced_matching, girth
from .io import GraphFormatError, emit_report, parse_graph, serialize_graph
from .kinds import TransversalKind
from .solvers import AUTO, HARD_CEILING, min_connected_transversal, min_transversal

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    kind: str | None = None
    connected: bool = False
    s: int = 2
    pad_budget: int | str = AUTO
    oracle_ceiling: int = 16
    output: str = "human"
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.s < 1:
            raise UsageError(f"--s must be >= 1, got {self.s}")
        if not 0 < self.oracle_ceiling <= HARD_CEILING:
            raise UsageError(f"--ceiling must be in 1..{HARD_CEILING}, got {self.oracle_ceiling}")
        if isinstance(self.pad_budget, str):
            if self.pad_budget.lower() == AUTO:
                self.pad_budget = AUTO
            else:
                try:
                    self.pad_budget = int(self.pad_budget)
                except ValueError:
                    raise UsageError(f"--pad-budget must be AUTO or an integer, got {self.pad_budget!r}") from None
        if self.pad_budget != AUTO and self.pad_budget < 0:
            raise UsageError("--pad-budget must be non-negative")
        if self.output not in ("human", "json"):
            raise UsageError(f"unknown output format {self.output!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="conntrans", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-", help="DIMACS edge-list file ('-' for stdin)")
        p.add_argument("--json", dest="output", action="store_const", const="json", default="human")
        p.add_argument("--ceiling", type=int, default=16, help="brute-force oracle vertex ceiling")

    p = sub.add_parser("solve", help="minimum (connected) transversal")
    common(p)
    p.add_argument("--kind", required=True, choices=["vc", "fvs", "oct"])
    p.add_argument("--connected", action="store_true")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--pad-budget", default="AUTO")

    p = sub.add_parser("enumerate", help="stream maximal independent sets or minimal transversals")
    common(p)
    p.add_argument("--kind", required=True, choices=["mis", "vc", "fvs", "oct"])
    p.add_argument("--limit", type=int, default=None)

    p = sub.add_parser("gadget", help="build a reduction instance from the input graph")
    common(p)
    p.add_argument("--name", required=True, choices=[x.value for x in Provenance])
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("verify", help="brute-force check of a reduction on the input graph")
    common(p)
    p.add_argument("--gadget", required=True, choices=[x.value for x in Provenance])
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("gen", help="generate graphs from a named family")
    common(p, with_input=False)
    p.add_argument("--family", required=True, choices=corpus.FAMILIES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--parts", default=None, help="comma-separated part sizes")
    p.add_argument("--out-dir", default=None, help="write one .dimacs file per graph")

    p = sub.add_parser("check", help="structural property of the input graph")
    common(p)
    p.add_argument("--property", required=True, choices=["sp2free", "girth", "claw-free"])
    p.add_argument("--s", type=int, default=2)
    return parser


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _one_indexed(S) -> list[int]:
    return [v + 1 for v in sorted(S)]


def cmd_solve(cfg: RunConfig) -> str:
    G = _read_graph(cfg.input)
    kind = TransversalKind.parse(cfg.kind)
    if cfg.connected:
        report = min_connected_transversal(G, kind, cfg.pad_budget, cfg.s)
    else:
        report = min_transversal(G, kind)
    return emit_report(report, cfg.output)


def cmd_enumerate(cfg: RunConfig) -> str:
    G = _read_graph(cfg.input)
    if cfg.kind == "mis":
        stream = enumerate_maximal_independent_sets(G)
    else:
        stream = enumerate_minimal_transversals(G, TransversalKind.parse(cfg.kind))
    limit = cfg.extra.get("limit")
    sets = []
    for S in stream:
        sets.append(_one_indexed(S))
        if limit is not None and len(sets) >= limit:
            break
    if cfg.output == "json":
        return json.dumps({"kind": cfg.kind, "count": len(sets), "sets": sets})
    return "\n".join(" ".join(map(str, S)) if S else "{}" for S in sets)


def _gadget(cfg: RunConfig, G, name):
    return build_gadget(name, G, cfg.extra.get("p"), cfg.extra.get("k"))


def cmd_gadget(cfg: RunConfig) -> str:
    G = _read_graph(cfg.input)
    inst = _gadget(cfg, G, cfg.extra["name"])
    if cfg.output == "json":
        return json.dumps({
            "provenance": inst.provenance.value,
            "budget_k": inst.budget_k,
            "n": inst.graph.n,
            "m": inst.graph.m,
            "edges": [[u + 1, v + 1] for u, v in inst.graph.edges],
            "labels": list(inst.labels),
        })
    comments = [f"gadget {inst.provenance.value}", f"budget_k {inst.budget_k}"]
    comments += [f"vertex {i + 1} {lab}" for i, lab in enumerate(inst.labels)]
    return serialize_graph(inst.graph, comments).rstrip("\n")


def cmd_verify(cfg: RunConfig) -> str:
    G = _read_graph(cfg.input)
    inst = _gadget(cfg, G, cfg.extra["name"])
    src = source_holds(inst, G, cfg.oracle_ceiling)
    tgt = target_holds(inst, cfg.oracle_ceiling)
    result = {
        "gadget": inst.provenance.value,
        "budget_k": inst.budget_k,
        "target_n": inst.graph.n,
        "source": src,
        "target": tgt,
        "equivalent": src == tgt,
    }
    if cfg.output == "json":
        return json.dumps(result)
    return "\n".join(f"{k:<10}  {v}" for k, v in result.items())


def cmd_gen(cfg: RunConfig) -> str:
    family = cfg.extra["family"]
    params = {}
    if cfg.extra.get("n") is not None:
        params["n"] = cfg.extra["n"]
    if family == "random-filtered-sP2free":
        params["s"] = cfg.s
        if cfg.extra.get("count") is not None:
            params["count"] = cfg.extra["count"]
    if cfg.extra.get("parts"):
        try:
            params["parts"] = [int(x) for x in cfg.extra["parts"].split(",")]
        except ValueError:
            raise UsageError(f"--parts must be comma-separated integers, got {cfg.extra['parts']!r}") from None
    graphs = corpus.generate_corpus(family, params, cfg.seed)
    blocks = []
    out_dir = cfg.extra.get("out_dir")
    for entry in graphs:
        comments = [f"name {entry.name}", f"family {family}", f"seed {cfg.seed}"]
        if entry.s is not None:
            comments.append(f"sP2-free s {entry.s}")
        text = serialize_graph(entry.graph, comments)
        if out_dir:
            Path(out_dir).mkdir(parents=True, exist_ok=True)
            (Path(out_dir) / f"{entry.name}.dimacs").write_text(text)
        blocks.append(text)
    if cfg.output == "json":
        return json.dumps([
            {"name": e.name, "s": e.s, "n": e.graph.n, "edges": [[u + 1, v + 1] for u, v in e.graph.edges]}
            for e in graphs
        ])
    return "\n".join(blocks).rstrip("\n")


def cmd_check(cfg: RunConfig) -> str:
    G = _read_graph(cfg.input)
    prop = cfg.extra["property"]
    if prop == "sp2free":
        witness = find_induced_matching(G, cfg.s)
        result = {"property": f"{cfg.s}P2-free", "holds": witness is None,
                  "witness": None if witness is None else [[u + 1, v + 1] for u, v in witness]}
    elif prop == "girth":
        g = girth(G)
        result = {"property": "girth", "value": None if g == float("inf") else g}
    else:
        claw = find_induced_claw(G)
        result = {"property": "claw-free", "holds": claw is None,
                  "witness": None if claw is None else [v + 1 for v in claw]}
    if cfg.output == "json":
        return json.dumps(result)
    return "\n".join(f"{k:<9}  {'infinite' if v is None and k == 'value' else v}" for k, v in result.items())


COMMANDS = {
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "gadget": cmd_gadget,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "check": cmd_check,
}


def config_from_args(args: argparse.Namespace) -> RunConfig:
    extra = {}
    for key in ("limit", "name", "p", "k", "family", "n", "count", "parts", "out_dir", "property"):
        if hasattr(args, key):
            extra[key] = getattr(args, key)
    if args.command == "verify":
        extra["name"] = args.gadget
    return RunConfig(
        command=args.command,
        input=getattr(args, "input", "-"),
        kind=getattr(args, "kind", None),
        connected=getattr(args, "connected", False),
        s=getattr(args, "s", 2),
        pad_budget=getattr(args, "pad_budget", AUTO),
        oracle_ceiling=args.ceiling,
        output=args.output,
        seed=getattr(args, "seed", 0),
        extra=extra,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = config_from_args(args)
        out = COMMANDS[cfg.command](cfg)
    except (UsageError, GraphFormatError, FileNotFoundError) as exc:
        print(f"conntrans: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"conntrans: rejected: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
