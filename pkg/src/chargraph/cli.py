"""Command-line surface: construct graphs, analyze n-exactness, search
exponents, run the verification suite, and export JSON/DOT documents.

Exit codes: 0 success (and every verification PASS), 1 verification FAIL,
2 usage error, 3 range or size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .errors import ChargraphError, OutOfRange, TooLarge
from .exactness import (
    ExactnessReport,
    VerificationRecord,
    check_n_exact,
    verify_hamilton_characterization,
)
from .graphs import PrimeGraph, connected_components
from .models import DegreeSet, graph_from_degrees, psl2_graph, suzuki_graph
from .search import sweep_models

DEFAULT_SUITE_NS = (4, 5, 6, 7)
HAMILTON_F_RANGE = (2, 12)


def graph_to_document(g: PrimeGraph, metadata: dict[str, Any] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.sorted_edges()],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def document_to_graph(doc: Any) -> tuple[PrimeGraph, dict[str, Any]]:
    if not isinstance(doc, dict):
        raise ChargraphError("graph document must be a JSON object")
    vertices = doc.get("vertices")
    edges = doc.get("edges", [])
    if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
        raise ChargraphError('"vertices" must be a list of integers')
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges
    ):
        raise ChargraphError('"edges" must be a list of 2-element integer lists')
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ChargraphError('"metadata" must be an object when present')
    return PrimeGraph(vertices, [tuple(e) for e in edges]), metadata


def graph_to_dot(g: PrimeGraph) -> str:
    lines = ["graph primes {"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {a} -- {b};" for a, b in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _report_to_dict(report: ExactnessReport) -> dict[str, Any]:
    return {
        "n": report.n,
        "order": report.order,
        "is_kn_free": report.is_kn_free,
        "clique_witness": list(report.clique_witness) if report.clique_witness else None,
        "odd_cycle": list(report.odd_cycle.vertices_in_order) if report.odd_cycle else None,
        "verdict": report.verdict,
        "extremal_class": report.extremal_class,
    }


def _record_to_dict(record: VerificationRecord) -> dict[str, Any]:
    return {
        "check": record.check,
        "description": record.description,
        "passed": record.passed,
        "details": record.details,
    }


def _emit_graph(g: PrimeGraph, metadata: dict[str, Any], fmt: str, quiet: bool, summary: str) -> int:
    if fmt == "dot":
        sys.stdout.write(graph_to_dot(g))
    else:
        sys.stdout.write(_dump_json(graph_to_document(g, metadata)))
    if not quiet:
        print(summary, file=sys.stderr)
    return 0


def _cmd_psl2(args: argparse.Namespace) -> int:
    g = psl2_graph(args.q)
    components = [list(c) for c in connected_components(g)]
    metadata = {"model": f"PSL2({args.q})", "components": components}
    return _emit_graph(
        g, metadata, args.format, args.quiet,
        f"character graph of PSL2({args.q}): {g.order} vertices, {g.size} edges, {len(components)} components",
    )


def _cmd_suzuki(args: argparse.Namespace) -> int:
    g = suzuki_graph(args.m)
    q2 = 2 ** (2 * args.m + 1)
    metadata = {"model": f"Suzuki(m={args.m})", "q_squared": q2}
    return _emit_graph(
        g, metadata, args.format, args.quiet,
        f"character graph of the Suzuki group with q^2 = {q2}: {g.order} vertices, {g.size} edges",
    )


def _parse_degree_file(path: Path) -> DegreeSet:
    degrees = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            degrees.append(int(line))
        except ValueError:
            raise ChargraphError(f"{path}:{lineno}: not an integer: {line!r}") from None
    return DegreeSet(frozenset(degrees))


def _cmd_degrees(args: argparse.Namespace) -> int:
    degrees = _parse_degree_file(Path(args.file))
    g = graph_from_degrees(degrees)
    metadata = {"source": "degrees", "degree_count": len(degrees.degrees)}
    return _emit_graph(
        g, metadata, args.format, args.quiet,
        f"graph of {len(degrees.degrees)} degrees: {g.order} vertices, {g.size} edges",
    )


def _cmd_analyze(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.input).read_text())
    g, metadata = document_to_graph(doc)
    tagged = args.character_model or bool(metadata.get("model"))
    report = check_n_exact(g, args.n, character_model=tagged)
    sys.stdout.write(_dump_json(_report_to_dict(report)))
    if not args.quiet:
        verdict = "n-exact" if report.verdict else "not n-exact"
        print(
            f"n = {args.n}: {verdict} ({report.extremal_class}), order {report.order}",
            file=sys.stderr,
        )
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    from .search import find_alphas

    k_target = {"n-3": args.n - 3, "n-2": args.n - 2, "n-1": args.n - 1}[args.k]
    result = find_alphas(args.n, k_target, (2, args.alpha_max))
    payload = {
        "n": result.n,
        "k_target": result.k_target,
        "case": result.case,
        "alpha_range": list(result.exhausted_range),
        "realizations": [
            {"alpha": r.alpha, "pi_minus": list(r.pi_minus), "pi_plus": list(r.pi_plus)}
            for r in result.realizations
        ],
        "near_misses": list(result.near_misses),
    }
    sys.stdout.write(_dump_json(payload))
    if not args.quiet:
        hits = [r.alpha for r in result.realizations]
        print(
            f"k = {k_target}: {len(hits)} realization(s) in alpha {result.exhausted_range}: {hits}; "
            f"{len(result.near_misses)} near miss(es)",
            file=sys.stderr,
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not args.suite:
        raise ChargraphError("verify requires --suite")
    ns = [args.n] if args.n is not None else list(DEFAULT_SUITE_NS)
    records: list[VerificationRecord] = []
    for n in ns:
        records.extend(sweep_models(n, (2, args.alpha_max)))
    for f in range(HAMILTON_F_RANGE[0], HAMILTON_F_RANGE[1] + 1):
        records.append(verify_hamilton_characterization(f))
    failures = [r for r in records if not r.passed]
    payload = {
        "n_values": ns,
        "alpha_range": [2, args.alpha_max],
        "records": [_record_to_dict(r) for r in records],
        "failures": len(failures),
        "passed": not failures,
    }
    sys.stdout.write(_dump_json(payload))
    if not args.quiet:
        for n in ns:
            n_records = [r for r in records if r.details.get("n") == n and r.check == "order_bound"]
            n_failures = [r for r in n_records if not r.passed]
            print(f"order bound, n = {n}: {len(n_records)} models, {len(n_failures)} FAIL", file=sys.stderr)
        ham = [r for r in records if r.check == "hamilton_characterization"]
        print(f"hamilton characterization, f in {list(HAMILTON_F_RANGE)}: {sum(not r.passed for r in ham)} FAIL", file=sys.stderr)
        for record in failures:
            print(f"FAIL: {record.check}: {record.description}", file=sys.stderr)
        print("PASS" if not failures else f"FAIL ({len(failures)} record(s))", file=sys.stderr)
    return 0 if not failures else 1


def _cmd_export(args: argparse.Namespace) -> int:
    doc = json.loads(Path(args.input).read_text())
    g, metadata = document_to_graph(doc)
    return _emit_graph(g, metadata, args.format, args.quiet, f"{g.order} vertices, {g.size} edges")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chargraph",
        description="Prime-divisor character graphs: construction, n-exactness analysis, extremal search and verification.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress the human-readable summary on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psl2", help="character graph of PSL2(q)")
    p.add_argument("q", type=int, help="prime power >= 4")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_psl2)

    p = sub.add_parser("suzuki", help="character graph of the Suzuki group with q^2 = 2^(2m+1)")
    p.add_argument("m", type=int, help="integer >= 1")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_suzuki)

    p = sub.add_parser("degrees", help="graph of a degree file (one integer per line, # comments)")
    p.add_argument("file")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_degrees)

    p = sub.add_parser("analyze", help="n-exactness report for a graph document")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True, help="graph document (JSON)")
    p.add_argument(
        "--character-model",
        action="store_true",
        help="treat the graph as a character-graph model (enables the MaxExtremal class)",
    )
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("search", help="exponents alpha realizing a prime-divisor count target")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", choices=("n-3", "n-2", "n-1"), required=True)
    p.add_argument("--alpha-max", type=int, required=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--suite", action="store_true", help="verify the constructed model space")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--alpha-max", type=int, default=12)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="re-emit a graph document as JSON or DOT")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "dot"), required=True)
    p.set_defaults(func=_cmd_export)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OutOfRange, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ChargraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
