"""Batch command line: build coronas, classify trees, recognise coronas,
sweep all small trees, enumerate trees.

Exit codes: 0 success, 1 negative answer or failed sweep, 2 bad input or
usage, 3 invalid partition, 4 graph is not a tree, 5 tree too small.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Any, Iterator

from .characterize import recognize_general_corona, verify_equivalences, verify_witness, witness_to_json
from .corona import CoronaGraph, InvalidPartitionError, general_corona, partition_from_json
from .domination import domination_number, has_unique_dominating_2packing_with_leaves, is_2packing, is_dominating
from .graph import External, Graph, GraphError, format_edge_list, is_tree, leaves, parse_edge_list, to_dot
from .randomgen import random_partition, random_tree
from .subdivision import SubdivisionNotFound, subdivision_number
from .trees import MAX_ORDER, free_trees, trees_up_to

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PARSE = 2
EXIT_PARTITION = 3
EXIT_NOT_TREE = 4
EXIT_TOO_SMALL = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@contextmanager
def _sink(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _read_graph(path: str) -> Graph:
    try:
        return parse_edge_list(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None


def _read_tree(path: str) -> Graph:
    g = _read_graph(path)
    if not is_tree(g):
        raise CliError(f"{path}: graph is not a tree", EXIT_NOT_TREE)
    if g.vertex_count < 3:
        raise CliError(f"{path}: tree has fewer than three vertices", EXIT_TOO_SMALL)
    return g


def corona_to_json(c: CoronaGraph) -> dict[str, Any]:
    tags = []
    for v, tag in enumerate(c.tags):
        if isinstance(tag, External):
            tags.append({"vertex": v, "kind": "external", "origin": tag.origin})
        else:
            tags.append({"vertex": v, "kind": "internal", "origin": tag.origin, "block": sorted(tag.block)})
    return {
        "n": c.graph.vertex_count,
        "edges": [list(e) for e in c.graph.edges()],
        "tags": tags,
    }


def render_corona(c: CoronaGraph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(corona_to_json(c)) + "\n"
    if fmt == "dot":
        return to_dot(c.graph, "corona")
    return format_edge_list(c.graph, with_tags=True)


def cmd_corona(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    raw: Any = {}
    if args.partition is not None:
        try:
            raw = json.loads(Path(args.partition).read_text(encoding="utf-8"))
        except OSError as exc:
            raise CliError(f"cannot read {args.partition}: {exc.strerror}", EXIT_PARSE) from None
        except json.JSONDecodeError as exc:
            raise CliError(f"{args.partition}: malformed JSON: {exc}", EXIT_PARSE) from None
    try:
        c = general_corona(g, partition_from_json(g, raw))
    except InvalidPartitionError as exc:
        raise CliError(f"invalid partition: {exc}", EXIT_PARTITION) from None
    with _sink(args.output) as out:
        out.write(render_corona(c, args.format))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    t = _read_tree(args.graph)
    try:
        sd = subdivision_number(t, args.max_k)
    except SubdivisionNotFound:
        print(f"sd > {args.max_k}: no subdivision of at most {args.max_k} edges raises gamma", file=sys.stderr)
        return EXIT_NEGATIVE
    with _sink(args.output) as out:
        if args.format == "json":
            out.write(json.dumps({"class": f"S{sd}", "sd": sd}) + "\n")
        else:
            out.write(f"S{sd} sd={sd}\n")
    return EXIT_OK


def cmd_recognize(args: argparse.Namespace) -> int:
    t = _read_tree(args.graph)
    w = recognize_general_corona(t)
    if w is None:
        print("not a general corona")
        return EXIT_NEGATIVE
    with _sink(args.output) as out:
        out.write(json.dumps(witness_to_json(w)) + "\n")
    return EXIT_OK


def _report_line(args: tuple[Graph, int]) -> tuple[int, bool, bool, str]:
    t, bound = args
    r = verify_equivalences(t, bound)
    return r.n, r.cond_sd3, r.agree, json.dumps(r.to_json(), sort_keys=True)


def cmd_verify(args: argparse.Namespace) -> int:
    if not 3 <= args.n_max <= MAX_ORDER:
        raise CliError(f"--n-max must lie in 3..{MAX_ORDER}", EXIT_PARSE)
    work = ((t, args.n_max) for t in trees_up_to(args.n_max, 3))
    counts: dict[int, int] = {}
    s3: dict[int, int] = {}
    failures = 0
    with _sink(args.output) as out:
        if args.jobs > 1:
            pool = ProcessPoolExecutor(max_workers=args.jobs)
            results = pool.map(_report_line, work, chunksize=16)
        else:
            pool = None
            results = map(_report_line, work)
        try:
            for n, is_s3, agree, line in results:
                out.write(line + "\n")
                counts[n] = counts.get(n, 0) + 1
                s3[n] = s3.get(n, 0) + int(is_s3)
                failures += not agree
        finally:
            if pool is not None:
                pool.shutdown()
        status = "PASS" if failures == 0 else "FAIL"
        summary = {
            "summary": {
                "trees": {str(k): v for k, v in counts.items()},
                "s3": {str(k): v for k, v in s3.items()},
                "total": sum(counts.values()),
                "failures": failures,
                "status": status,
            }
        }
        out.write(json.dumps(summary, sort_keys=True) + "\n")
    print(f"{status}: {sum(counts.values())} trees, {failures} disagreements", file=sys.stderr)
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_ORDER:
        raise CliError(f"--n must lie in 1..{MAX_ORDER}", EXIT_PARSE)
    with _sink(args.output) as out:
        blocks = []
        for i, t in enumerate(free_trees(args.n)):
            blocks.append(to_dot(t, f"T{i}") if args.format == "dot" else format_edge_list(t))
        out.write("\n".join(blocks))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Randomised corona properties: Ext is a dominating 2-packing through
    all leaves, gamma equals the base order, and recognition round-trips."""
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        base = random_tree(rng, rng.randint(2, args.n_max))
        c = general_corona(base, random_partition(rng, base))
        g, ext = c.graph, set(c.externals())
        ok = (
            is_dominating(g, ext)
            and is_2packing(g, ext)
            and leaves(g) <= ext
            and domination_number(g) == base.vertex_count
        )
        w = recognize_general_corona(g)
        ok = ok and w is not None and verify_witness(g, w) and w.externals() == ext
        ok = ok and has_unique_dominating_2packing_with_leaves(g) == (True, frozenset(ext))
        failures += not ok
    status = "PASS" if failures == 0 else "FAIL"
    print(f"{status}: {args.count} random coronas, seed {args.seed}, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gencorona", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--output", "-o", help="write data here instead of standard output")
        return p

    p = with_output(sub.add_parser("corona", help="build the general corona of a graph"))
    p.add_argument("graph", help="edge-list file")
    p.add_argument("partition", nargs="?", help="partition JSON file (default: trivial partition)")
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.set_defaults(func=cmd_corona)

    p = with_output(sub.add_parser("classify", help="print the S1/S2/S3 class and sd of a tree"))
    p.add_argument("graph")
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_classify)

    p = with_output(sub.add_parser("recognize", help="find a corona witness for a tree"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = with_output(sub.add_parser("verify", help="check the equivalences on every tree up to --n-max"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = with_output(sub.add_parser("enumerate", help="list all free trees on --n vertices"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="randomised corona property checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-max", type=int, default=8, help="largest base tree order")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
