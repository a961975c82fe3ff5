"""Command line entry point.

One binary, subcommand style; edge-list files are the composition
mechanism.  Exit codes: 0 success, 1 check/bound violation, 2 usage or
parse error, 3 size guard exceeded.  JSON output is emitted with sorted
keys so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from typing import List, Optional

from . import families, ops, solver, theorems
from .graph import EdgeListError, Graph, SizeGuardError, read_edge_list, write_edge_list

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return read_edge_list(fh.read())


def _emit_graph(g: Graph, out: Optional[str], sidecar: dict) -> None:
    """Edge list to --out (sidecar JSON on stdout) or to stdout (sidecar on stderr)."""
    text = write_edge_list(g)
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
        print(_dump(sidecar))
    else:
        sys.stdout.write(text)
        print(_dump(sidecar), file=sys.stderr)


def _cert_json(cert: solver.SuperDomCertificate) -> dict:
    return {
        "value": cert.value,
        "set": list(cert.vertices),
        "witnesses": {str(u): v for u, v in sorted(cert.witnesses.items())},
    }


def cmd_gen(args) -> int:
    params = tuple(args.params)
    if args.family == "gnp_random":
        if len(params) != 2:
            raise ValueError("gnp_random takes: n p (p as num/den); seed via --seed")
        p = Fraction(params[1])
        params = (int(params[0]), p.numerator, p.denominator, args.seed)
    else:
        params = tuple(int(x) for x in params)
    inst = families.build_family(args.family, params)
    meta = {
        "family": inst.kind,
        "params": list(inst.params),
        "order": inst.graph.n,
        "size": inst.graph.m,
        "distinguished": inst.distinguished,
    }
    _emit_graph(inst.graph, args.out, meta)
    return EXIT_OK


def cmd_gamma_sp(args) -> int:
    g = _load_graph(args.file)
    cert = solver.gamma_sp(g, guard=args.guard_n)
    if args.format == "text":
        print(f"gamma_sp = {cert.value}")
        print("set =", " ".join(str(v) for v in cert.vertices))
        print("witnesses =", " ".join(f"{u}->{v}" for u, v in sorted(cert.witnesses.items())))
    else:
        print(_dump(_cert_json(cert)))
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = _load_graph(args.file)
    cert = solver.gamma(g, guard=args.guard_n)
    if args.format == "text":
        print(f"gamma = {cert.value}")
        print("set =", " ".join(str(v) for v in cert.vertices))
    else:
        print(_dump({"value": cert.value, "set": list(cert.vertices)}))
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load_graph(args.file)
    members = [int(x) for x in args.set.split(",")] if args.set else []
    witnesses = solver.super_domination_witnesses(g, members)
    if witnesses is None:
        violation = solver.first_violation(g, members)
        if args.format == "text":
            print(f"not super dominating: {violation}")
        else:
            print(_dump({"super_dominating": False, "violation": violation}))
        return EXIT_VIOLATION
    if args.format == "text":
        print("super dominating")
        print("witnesses =", " ".join(f"{u}->{v}" for u, v in sorted(witnesses.items())))
    else:
        print(_dump({"super_dominating": True, "witnesses": {str(u): v for u, v in sorted(witnesses.items())}}))
    return EXIT_OK


def _parse_attach(spec: str, fields: int) -> List:
    parts = spec.rsplit(":", fields)
    if len(parts) != fields + 1:
        raise ValueError(f"expected file{':x' * fields} in {spec!r}")
    return [parts[0]] + [int(x) for x in parts[1:]]


def cmd_op(args) -> int:
    name = args.operation
    if name == "odot":
        g = _load_graph(args.args[0])
        result = ops.odot(g, int(args.args[1]))
        sidecar = {"order": result.n, "size": result.m, "vertex_maps": [list(range(g.n))], "merged": []}
        _emit_graph(result, args.out, sidecar)
    elif name == "contract":
        g = _load_graph(args.args[0])
        v = int(args.args[1])
        result = ops.contract_clique(g, v)
        mapping = [w if w < v else w - 1 for w in range(g.n)]
        mapping[v] = -1  # deleted vertex has no image
        sidecar = {"order": result.n, "size": result.m, "vertex_maps": [mapping], "merged": []}
        _emit_graph(result, args.out, sidecar)
    elif name == "union":
        g = _load_graph(args.args[0])
        h = _load_graph(args.args[1])
        comp = ops.disjoint_union(g, h)
        sidecar = {
            "order": comp.graph.n,
            "size": comp.graph.m,
            "vertex_maps": [list(m) for m in comp.vertex_maps],
            "merged": list(comp.merged),
        }
        _emit_graph(comp.graph, args.out, sidecar)
    elif name == "chain":
        parts = []
        for spec in args.args:
            path, x, y = _parse_attach(spec, 2)
            parts.append((_load_graph(path), x, y))
        comp = ops.chain(parts)
        sidecar = {
            "order": comp.graph.n,
            "size": comp.graph.m,
            "vertex_maps": [list(m) for m in comp.vertex_maps],
            "merged": list(comp.merged),
        }
        _emit_graph(comp.graph, args.out, sidecar)
    elif name == "bouquet":
        parts = []
        for spec in args.args:
            path, x = _parse_attach(spec, 1)
            parts.append((_load_graph(path), x))
        comp = ops.bouquet(parts)
        sidecar = {
            "order": comp.graph.n,
            "size": comp.graph.m,
            "vertex_maps": [list(m) for m in comp.vertex_maps],
            "merged": list(comp.merged),
        }
        _emit_graph(comp.graph, args.out, sidecar)
    else:
        raise ValueError(f"unknown operation {name!r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.config in (None, "default"):
        cfg = theorems.DEFAULT_CONFIG
    else:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = theorems.config_from_dict(json.load(fh))
    if args.guard_n != solver.DEFAULT_GUARD:
        cfg = replace(cfg, guard=args.guard_n)
    reports, summary = theorems.run_harness(cfg)
    doc = theorems.report_document(reports, summary, cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        if args.format == "text":
            for tid, slot in sorted(summary["per_theorem"].items()):
                print(f"{tid}: {slot['checked']} checked, {slot['failed']} failed")
            print(f"total: {summary['total']} checked, {summary['failed']} failed")
        else:
            print(_dump({"summary": summary}))
    else:
        sys.stdout.write(doc)
    return EXIT_OK if summary["failed"] == 0 else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superdom",
        description="Exact super domination solver and bound verification toolkit.",
    )
    parser.add_argument("--guard-n", type=int, default=solver.DEFAULT_GUARD, metavar="N",
                        help="size guard for the exact solvers (default %(default)s)")
    parser.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default %(default)s)")
    parser.add_argument("--seed", type=int, default=0, help="seed for random generation")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a named family instance")
    p_gen.add_argument("family", choices=families.FAMILY_KINDS)
    p_gen.add_argument("params", nargs="+", help="family parameters (gnp_random: n num/den)")
    p_gen.add_argument("--out", help="edge-list output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_gsp = sub.add_parser("gamma-sp", help="minimum super dominating set with witnesses")
    p_gsp.add_argument("file", help="edge-list file")
    p_gsp.set_defaults(func=cmd_gamma_sp)

    p_g = sub.add_parser("gamma", help="minimum dominating set")
    p_g.add_argument("file", help="edge-list file")
    p_g.set_defaults(func=cmd_gamma)

    p_check = sub.add_parser("check", help="test whether a set super dominates")
    p_check.add_argument("file", help="edge-list file")
    p_check.add_argument("--set", required=True, help="comma-separated vertex indices")
    p_check.set_defaults(func=cmd_check)

    p_op = sub.add_parser("op", help="apply a graph operation")
    p_op.add_argument("operation", choices=("odot", "contract", "union", "chain", "bouquet"))
    p_op.add_argument("args", nargs="+",
                      help="odot/contract: file v; union: file file; chain: file:x:y ...; bouquet: file:x ...")
    p_op.add_argument("--out", help="edge-list output path (default stdout)")
    p_op.set_defaults(func=cmd_op)

    p_verify = sub.add_parser("verify", help="run the bound verification harness")
    p_verify.add_argument("--config", help="config JSON path, or 'default'")
    p_verify.add_argument("--out", help="report output path (default stdout)")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (EdgeListError, ValueError, IndexError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
