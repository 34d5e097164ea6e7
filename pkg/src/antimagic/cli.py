"""Command-line front door.

Subcommands: construct | verify | oracle | generate | batch.
Exit codes: 0 success, 1 verification failure / negative oracle,
2 rejected instance, 3 unsupported or over budget, 64 parse error,
65 malformed certificate.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass

from .errors import (
    BudgetError,
    GenerationFailureError,
    MalformedLabelingError,
    ParseError,
    RejectedInstanceError,
    UnsupportedInstanceError,
)
from .graph import (
    Graph,
    format_certificate,
    format_edge_list,
    is_antimagic,
    parse_certificate,
    parse_edge_list,
    radius,
    center_vertices,
    vertex_sums,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_REJECTED = 2
EXIT_UNSUPPORTED = 3
EXIT_PARSE = 64
EXIT_MALFORMED = 65

log = logging.getLogger("antimagic")


@dataclass
class RunReport:
    instance: str
    strategy: str
    success: bool
    seconds: float
    summary: str
    certificate_path: str | None


def _parse_msg(e: ParseError) -> str:
    if e.line is not None:
        return f"parse error at line {e.line}: {e}"
    return f"parse error: {e}"


def _read_graph(path: str) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def _bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    color = [-1] * g.n
    nbrs = g.neighbor_sets()
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in nbrs[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    a = {v for v in range(g.n) if color[v] == 0}
    return (a, set(range(g.n)) - a)


def _construct(g: Graph, strategy: str):
    """(orientation, labeling, tag); raises the domain errors on failure."""
    from .alpha import antimagic_by_alpha
    from .matching import MatchingInstance, construct_from_matching, find_saturating_matching
    from .xconstruct import WitnessConfig, construct_x_orientation

    if strategy == "matching":
        sides = _bipartition(g)
        if sides is None:
            raise RejectedInstanceError("graph is not bipartite; supply A explicitly")
        a, b = sides
        A = a if len(a) >= len(b) else b
        M = find_saturating_matching(g, A)
        if M is None:
            raise RejectedInstanceError("no matching saturating the complement of A")
        o, l, trace = construct_from_matching(MatchingInstance(g, A, M))
        return o, l, "matching"
    if strategy == "x-set":
        if radius(g) > 2:
            raise RejectedInstanceError("radius exceeds 2; no center works as X")
        center = center_vertices(g)[0]
        o, l, trace = construct_x_orientation(g, WitnessConfig((center,)))
        return o, l, f"x-set(center={center})"
    if strategy == "alpha":
        return antimagic_by_alpha(g)
    # auto: cheapest hypothesis first, then the full cascade.
    try:
        return _construct(g, "x-set")
    except RejectedInstanceError:
        pass
    sides = _bipartition(g)
    if sides is not None:
        try:
            return _construct(g, "matching")
        except RejectedInstanceError:
            pass
    return antimagic_by_alpha(g)


def cmd_construct(args) -> int:
    try:
        g = _read_graph(args.input)
    except ParseError as e:
        print(_parse_msg(e), file=sys.stderr)
        return EXIT_PARSE
    try:
        o, l, tag = _construct(g, args.strategy)
    except RejectedInstanceError as e:
        print(f"rejected: {e}", file=sys.stderr)
        return EXIT_REJECTED
    except (UnsupportedInstanceError, BudgetError) as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    out = args.out or args.input + ".cert"
    with open(out, "w") as fh:
        fh.write(format_certificate(o, l))
    sums = vertex_sums(o, l)
    print(f"strategy: {tag}")
    print("sums: " + " ".join(str(s) for s in sums.sums))
    print(f"certificate: {out}")
    log.info("constructed %s via %s", args.input, tag)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
        with open(args.certificate) as fh:
            cert_text = fh.read()
    except ParseError as e:
        print(_parse_msg(e), file=sys.stderr)
        return EXIT_PARSE
    try:
        o, l = parse_certificate(cert_text, g)
        l.validate()
    except MalformedLabelingError as e:
        print(f"malformed certificate: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except ParseError as e:
        print(_parse_msg(e), file=sys.stderr)
        return EXIT_PARSE
    ok, clash = is_antimagic(o, l)
    if not ok:
        print(f"not antimagic: vertices {clash[0]} and {clash[1]} share a sum")
        return EXIT_FAIL
    print("ok")
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .oracle import oracle_antimagic_exists

    try:
        g = _read_graph(args.input)
    except ParseError as e:
        print(_parse_msg(e), file=sys.stderr)
        return EXIT_PARSE
    try:
        exists, witness = oracle_antimagic_exists(g)
    except BudgetError as e:
        print(f"over budget: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    if not exists:
        print("no antimagic orientation exists")
        return EXIT_FAIL
    o, l = witness
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(format_certificate(o, l))
    print("exists")
    return EXIT_OK


def _parse_params(pairs):
    params = {}
    for item in pairs or []:
        key, _, value = item.partition("=")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def cmd_generate(args) -> int:
    from .generators import FamilySpec, generate

    try:
        g = generate(FamilySpec(args.family, _parse_params(args.param), args.seed))
    except ValueError as e:
        print(f"invalid parameters: {e}", file=sys.stderr)
        return EXIT_REJECTED
    except GenerationFailureError as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_batch_config(path: str) -> dict:
    config = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ParseError(f"expected key=value, got {line!r}", lineno)
            key = key.strip()
            value = value.strip()
            try:
                config[key] = int(value)
            except ValueError:
                config[key] = value
    return config


def cmd_batch(args) -> int:
    from .generators import FamilySpec, generate

    try:
        config = _read_batch_config(args.config)
    except (ParseError, OSError) as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_PARSE
    family = config.pop("family", None)
    count = int(config.pop("count", args.count or 1))
    seed = int(config.pop("seed", args.seed or 0))
    strategy = config.pop("strategy", "auto")
    if family is None:
        print("config error: missing family", file=sys.stderr)
        return EXIT_PARSE
    ok_count = 0
    failures = 0
    for i in range(count):
        t0 = time.time()
        report = RunReport(f"{family}#{i}", "", False, 0.0, "", None)
        try:
            g = generate(FamilySpec(family, dict(config), seed + i))
            o, l, tag = _construct(g, strategy)
            good, clash = is_antimagic(o, l)
            report.strategy = tag
            report.success = good
            report.summary = "ok" if good else f"collision {clash}"
            if good:
                ok_count += 1
            else:
                failures += 1
        except (RejectedInstanceError, UnsupportedInstanceError, BudgetError) as e:
            report.summary = f"{type(e).__name__}: {e}"
        except Exception as e:  # construction bugs are release blockers
            report.summary = f"{type(e).__name__}: {e}"
            failures += 1
        report.seconds = time.time() - t0
        print(
            f"{report.instance}\t{report.strategy or '-'}\t"
            f"{'ok' if report.success else 'fail'}\t{report.seconds:.3f}s\t{report.summary}"
        )
    print(f"{ok_count}/{count}")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antimagic")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a certificate for a graph file")
    c.add_argument("input")
    c.add_argument("--strategy", choices=["auto", "matching", "x-set", "alpha"],
                   default="auto")
    c.add_argument("--out")
    c.set_defaults(fn=cmd_construct)

    v = sub.add_parser("verify", help="check a certificate against a graph")
    v.add_argument("graph")
    v.add_argument("certificate")
    v.set_defaults(fn=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search on a tiny graph")
    o.add_argument("input")
    o.add_argument("--out")
    o.set_defaults(fn=cmd_oracle)

    ge = sub.add_parser("generate", help="emit a graph from a seeded family")
    ge.add_argument("--family", required=True)
    ge.add_argument("--seed", type=int, default=0)
    ge.add_argument("--param", action="append", metavar="KEY=VALUE")
    ge.add_argument("--out")
    ge.set_defaults(fn=cmd_generate)

    b = sub.add_parser("batch", help="generate + construct + verify a family")
    b.add_argument("config")
    b.add_argument("--count", type=int)
    b.add_argument("--seed", type=int)
    b.set_defaults(fn=cmd_batch)
    return p


def main(argv=None) -> int:
    level = os.environ.get("ANTIMAGIC_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
