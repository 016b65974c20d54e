"""Command-line interface.

Subcommands operate on HG/GR text documents (``-`` reads standard input) and
emit line-oriented reports; ``--json`` switches every report line to a JSON
object with the same content.  Exit codes: 0 when the checked property
holds, 1 when it fails (a witness is printed), 2 for usage or parse errors,
3 when an input exceeds a configured cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import theorems
from .core import (
    Hypergraph,
    dually_sperner_violation,
    is_conformal,
    is_one_sperner,
    is_sperner,
    sperner_violation,
    vertex_classes,
)
from .decomp import decompose_fully, format_tree, internal_nodes, is_safe, rebuild
from .errors import (
    CapExceeded,
    NotOneSperner,
    OneSpernerError,
    ParseError,
)
from .formats import format_hg, parse_gr, parse_hg
from .gen import antistar, extremal_family, random_one_sperner, star
from .graphs import clique_hypergraph, threshold_equivalence_report
from .oracle import (
    ThresholdCertificate,
    enumerate_sperner,
    is_k_asummable,
    is_threshold,
)
from .weights import (
    char_rank,
    equalizing_violation,
    equalizing_weights,
    threshold_property_violation,
    threshold_separator,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _members(values) -> list[str]:
    return sorted(values)


def _set_token(values) -> str:
    names = ",".join(sorted(values))
    return f"({names})"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


class Report:
    """Accumulates records; renders them as plain text or JSON lines."""

    def __init__(self):
        self.records: list[dict] = []

    def add(self, **record) -> None:
        self.records.append(record)

    def hypergraph(self, h: Hypergraph) -> None:
        self.add(
            kind="hypergraph",
            vertices=list(h.vertices),
            edges=[_members(h.labels_of(e)) for e in h.edges],
            text=format_hg(h),
        )

    def emit(self, as_json: bool) -> None:
        for rec in self.records:
            if as_json:
                slim = {k: v for k, v in rec.items() if k != "text"}
                print(json.dumps(slim, sort_keys=True))
            else:
                print(_plain(rec))


def _plain(rec: dict) -> str:
    kind = rec["kind"]
    if kind == "flag":
        value = rec["value"]
        shown = "n/a" if value is None else ("true" if value else "false")
        return f"{rec['name']} {shown}"
    if kind == "violation":
        return f"violation {rec['name']} {_set_token(rec['first'])} {_set_token(rec['second'])}"
    if kind == "witness":
        return f"witness {rec['name']} {_set_token(rec['members'])}"
    if kind == "tree":
        return rec["value"]
    if kind == "node":
        return f"node {rec['z']} {'safe' if rec['safe'] else 'unsafe'}"
    if kind == "weight":
        return f"w {rec['vertex']} {rec['value']}"
    if kind == "threshold":
        return f"t {rec['value']}"
    if kind == "verified":
        return "verified"
    if kind == "counterexample":
        return f"counterexample {_set_token(rec['members'])}"
    if kind == "rank":
        return f"rank {rec['value']}"
    if kind == "asummable":
        return f"asummable {'true' if rec['value'] else 'false'}"
    if kind == "sum-side":
        return f"{rec['side']} {_set_token(rec['members'])}"
    if kind == "certificate":
        return f"threshold {'true' if rec['value'] else 'false'}"
    if kind == "conflict":
        members = rec.get("members")
        if rec["constraint"] == "floor":
            return "conflict floor"
        return f"conflict {rec['constraint']} {_set_token(members)}"
    if kind == "hypergraph":
        return rec["text"].rstrip("\n")
    if kind == "theorem":
        status = "PASS" if rec["passed"] else "FAIL"
        return f"[{rec['index']:>2}] {status} {rec['name']} ({rec['detail']})"
    if kind == "summary":
        return f"{rec['passed']}/{rec['total']} checks passed"
    raise ValueError(f"unknown record kind {kind!r}")


# ---------------------------------------------------------------------------
# Subcommand handlers


def _cmd_check(args, report: Report) -> int:
    h = parse_hg(_read_text(args.file))
    sp = is_sperner(h)
    report.add(kind="flag", name="sperner", value=sp)
    if not sp:
        first, second = sperner_violation(h)
        report.add(
            kind="violation", name="sperner", first=_members(first), second=_members(second)
        )
    dually_pair = dually_sperner_violation(h)
    report.add(kind="flag", name="dually-sperner", value=dually_pair is None)
    if dually_pair is not None:
        first, second = dually_pair
        report.add(
            kind="violation",
            name="dually-sperner",
            first=_members(first),
            second=_members(second),
        )
    ones = sp and dually_pair is None
    report.add(kind="flag", name="one-sperner", value=ones)
    conformal = is_conformal(h) if sp else None
    report.add(kind="flag", name="conformal", value=conformal)
    return EXIT_OK if ones else EXIT_FAIL


def _cmd_decompose(args, report: Report) -> int:
    h = parse_hg(_read_text(args.file))
    try:
        tree = decompose_fully(h)
    except NotOneSperner:
        first, second = (sperner_violation(h) or dually_sperner_violation(h))
        report.add(kind="flag", name="one-sperner", value=False)
        report.add(
            kind="violation",
            name="one-sperner",
            first=_members(first),
            second=_members(second),
        )
        return EXIT_FAIL
    report.add(kind="tree", value=format_tree(tree))
    for node in internal_nodes(tree):
        report.add(
            kind="node", z=node.z, safe=is_safe(rebuild(node.left), rebuild(node.right))
        )
    return EXIT_OK


def _weights_command(args, report: Report, equalize: bool) -> int:
    h = parse_hg(_read_text(args.file))
    try:
        wa = equalizing_weights(h) if equalize else threshold_separator(h)
    except NotOneSperner:
        first, second = (sperner_violation(h) or dually_sperner_violation(h))
        report.add(kind="flag", name="one-sperner", value=False)
        report.add(
            kind="violation",
            name="one-sperner",
            first=_members(first),
            second=_members(second),
        )
        return EXIT_FAIL
    for v in h.vertices:
        report.add(kind="weight", vertex=v, value=str(wa.weights[v]))
    report.add(kind="threshold", value=str(wa.threshold))
    if args.verify:
        finder = equalizing_violation if equalize else threshold_property_violation
        bad = finder(h, wa.weights, wa.threshold, cap=args.cap)
        if bad is None:
            report.add(kind="verified")
        else:
            report.add(kind="counterexample", members=_members(bad))
            return EXIT_FAIL
    return EXIT_OK


def _cmd_weights(args, report: Report) -> int:
    return _weights_command(args, report, equalize=False)


def _cmd_equalize(args, report: Report) -> int:
    return _weights_command(args, report, equalize=True)


def _cmd_rank(args, report: Report) -> int:
    h = parse_hg(_read_text(args.file))
    report.add(kind="rank", value=char_rank(h))
    return EXIT_OK


def _cmd_oracle_threshold(args, report: Report) -> int:
    h = parse_hg(_read_text(args.file))
    outcome = is_threshold(h, cap=args.cap)
    if isinstance(outcome, ThresholdCertificate):
        report.add(kind="certificate", value=True)
        for v in h.vertices:
            report.add(kind="weight", vertex=v, value=_frac(outcome.weights[v]))
        report.add(kind="threshold", value=_frac(outcome.threshold))
        return EXIT_OK
    report.add(kind="certificate", value=False)
    for c in outcome.minimized().constraints:
        report.add(kind="conflict", constraint=c.kind, members=_members(c.members))
    return EXIT_FAIL


def _cmd_oracle_asummable(args, report: Report) -> int:
    h = parse_hg(_read_text(args.file))
    outcome = is_k_asummable(h, args.k, cap=args.cap)
    if outcome is True:
        report.add(kind="asummable", value=True)
        return EXIT_OK
    report.add(kind="asummable", value=False)
    for side, sets in (("A", outcome.independent_sets), ("B", outcome.dependent_sets)):
        for s in sets:
            report.add(kind="sum-side", side=side, members=_members(s))
    return EXIT_FAIL


def _cmd_oracle_enumerate(args, report: Report) -> int:
    for h in enumerate_sperner(args.n):
        if args.filter == "one-sperner" and not is_one_sperner(h):
            continue
        if args.filter == "reduced":
            if not is_one_sperner(h):
                continue
            classes = vertex_classes(h)
            if classes.universal or classes.isolated or classes.twin_pairs:
                continue
        report.hypergraph(h)
    return EXIT_OK


def _cmd_graph_check(args, report: Report) -> int:
    g = parse_gr(_read_text(args.file))
    rep = threshold_equivalence_report(g)
    report.add(kind="flag", name="graph-threshold", value=rep.graph_threshold)
    if rep.forbidden_witness is not None:
        report.add(
            kind="witness", name="forbidden-subset", members=_members(rep.forbidden_witness)
        )
    report.add(kind="flag", name="clique-one-sperner", value=rep.clique_one_sperner)
    report.add(kind="flag", name="clique-threshold", value=rep.clique_threshold)
    report.add(kind="flag", name="clique-two-asummable", value=rep.clique_two_asummable)
    if rep.asummability_witness is not None:
        for side, sets in (
            ("A", rep.asummability_witness.independent_sets),
            ("B", rep.asummability_witness.dependent_sets),
        ):
            for s in sets:
                report.add(kind="sum-side", side=side, members=_members(s))
    return EXIT_OK if rep.graph_threshold else EXIT_FAIL


def _cmd_graph_cliques(args, report: Report) -> int:
    g = parse_gr(_read_text(args.file))
    report.hypergraph(clique_hypergraph(g))
    return EXIT_OK


def _parse_label_list(text: str) -> list[str]:
    return [tok for tok in text.split(",") if tok]


def _cmd_generate(args, report: Report) -> int:
    if args.family in ("star", "antistar"):
        xs = _parse_label_list(args.x)
        ys = _parse_label_list(args.y)
        vs = _parse_label_list(args.v) if args.v else xs + ys
        maker = star if args.family == "star" else antistar
        report.hypergraph(maker(vs, xs, ys))
    elif args.family == "extremal":
        report.hypergraph(extremal_family(args.k))
    else:
        report.hypergraph(random_one_sperner(args.n, args.seed))
    return EXIT_OK


def _cmd_verify_theorems(args, report: Report) -> int:
    results = theorems.run_all(enum_cap=args.n, graph_cap=min(args.n, 5))
    for i, res in enumerate(results, 1):
        report.add(
            kind="theorem", index=i, name=res.name, passed=res.passed, detail=res.detail
        )
    passed = sum(1 for r in results if r.passed)
    report.add(kind="summary", passed=passed, total=len(results))
    return EXIT_OK if passed == len(results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onesperner",
        description=(
            "Recognition, decomposition, weight synthesis and exact oracles "
            "for 1-Sperner hypergraphs and threshold graphs."
        ),
    )
    parser.add_argument("--json", action="store_true", help="emit JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report Sperner-family flags for an HG file")
    p.add_argument("file", help="HG document, or - for stdin")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("decompose", help="print the full gluing decomposition tree")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_decompose)

    for name, handler in (("weights", _cmd_weights), ("equalize", _cmd_equalize)):
        p = sub.add_parser(
            name,
            help=(
                "synthesize a nice threshold separator"
                if name == "weights"
                else "synthesize equalizing weights"
            ),
        )
        p.add_argument("file")
        p.add_argument("--verify", action="store_true", help="exhaustive subset check")
        p.add_argument("--cap", type=int, default=24, help="verification cap (vertices)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("rank", help="exact rational rank of the incidence matrix")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_rank)

    oracle = sub.add_parser("oracle", help="brute-force and exact-LP oracles")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)

    p = osub.add_parser("threshold", help="exact rational thresholdness test")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=16)
    p.set_defaults(handler=_cmd_oracle_threshold)

    p = osub.add_parser("asummable", help="search for equal independent/dependent sums")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(handler=_cmd_oracle_asummable)

    p = osub.add_parser("enumerate", help="stream all antichains on n vertices")
    p.add_argument("-n", type=int, required=True)
    p.add_argument(
        "--filter",
        choices=["one-sperner", "reduced"],
        help="restrict to 1-Sperner, or additionally to instances without "
        "universal, isolated or twin vertices",
    )
    p.set_defaults(handler=_cmd_oracle_enumerate)

    graph = sub.add_parser("graph", help="graph-side operations on GR files")
    gsub = graph.add_subparsers(dest="graph_command", required=True)

    p = gsub.add_parser("check", help="the four threshold-graph verdicts")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_graph_check)

    p = gsub.add_parser("cliques", help="emit the maximal-clique hypergraph")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_graph_cliques)

    p = sub.add_parser("generate", help="construct named families and random instances")
    p.add_argument("family", choices=["star", "antistar", "extremal", "random"])
    p.add_argument("--x", default="", help="comma-separated common part (star/antistar)")
    p.add_argument("--y", default="", help="comma-separated varying part (star/antistar)")
    p.add_argument("--v", default="", help="full vertex list; defaults to X then Y")
    p.add_argument("--k", type=int, default=2, help="extremal family level")
    p.add_argument("--n", type=int, default=0, help="random instance vertex count")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_generate)

    p = sub.add_parser("verify-theorems", help="run the structural-guarantee sweep")
    p.add_argument("-n", type=int, default=4, help="enumeration cap (and graph cap, max 5)")
    p.set_defaults(handler=_cmd_verify_theorems)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report()
    try:
        code = args.handler(args, report)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OneSpernerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.emit(args.json)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
