"""Command-line front end.

Exit codes: 0 success, 1 domain failure (solver refused, outcome not
envy-free, bad cover, ...), 2 usage or parse error.

    house-subsidy solve instance.json --output outcome.json
    house-subsidy check instance.json outcome.json --threshold 1/2
    house-subsidy reduce graph.txt --k 1 --output red.json --witness 2
    house-subsidy gen --agents 3 --houses 5 --seed 1 --output inst.json
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import io
from .errors import HouseSubsidyError, ValidationError
from .model import Instance, find_violation, format_rational, to_rational, total_subsidy
from .reduction import extract_cover, is_vertex_cover, reduce_vertex_cover, witness_outcome
from .solvers import DEFAULT_MAX_SURPLUS, STRATEGIES, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(args, summary: dict, text: str) -> None:
    if args.json:
        print(json.dumps(summary))
    else:
        print(text)


def cmd_solve(args) -> int:
    inst = io.load_instance(args.input)
    max_surplus = None if args.max_surplus < 0 else args.max_surplus
    report = solve(inst, args.algo, max_surplus=max_surplus, workers=args.workers)
    if args.output:
        io.save_outcome(report.outcome, args.output, report.algorithm)
    summary = io.outcome_to_dict(report.outcome, report.algorithm)
    summary["explored"] = report.explored
    summary["elapsed"] = report.elapsed
    pairs = ", ".join(
        f"{inst.agent_name(i)} <- {inst.house_name(h)} (+{format_rational(s)})"
        for i, (h, s) in enumerate(zip(report.outcome.allocation, report.outcome.subsidy))
    )
    _emit(
        args,
        summary,
        f"total subsidy {format_rational(report.total)} [{report.algorithm}]\n{pairs}",
    )
    return EXIT_OK


def cmd_check(args) -> int:
    inst = io.load_instance(args.instance)
    out = io.load_outcome(args.outcome)
    threshold = to_rational(args.threshold) if args.threshold is not None else None
    violation = find_violation(inst, out)
    total = total_subsidy(out)
    summary = {"envy_free": violation is None, "total": format_rational(total)}
    if violation is not None:
        i, k, lhs, rhs = violation
        summary["violation"] = {
            "envious": i + 1,
            "envied": k + 1,
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
        }
        _emit(
            args,
            summary,
            f"not envy-free: {inst.agent_name(i)} envies {inst.agent_name(k)} "
            f"({format_rational(lhs)} < {format_rational(rhs)})",
        )
        return EXIT_FAIL
    if threshold is not None:
        summary["threshold"] = format_rational(threshold)
        summary["within_threshold"] = total <= threshold
        if total > threshold:
            _emit(
                args,
                summary,
                f"envy-free, but total subsidy {format_rational(total)} "
                f"exceeds threshold {format_rational(threshold)}",
            )
            return EXIT_FAIL
    _emit(args, summary, f"envy-free, total subsidy {format_rational(total)}")
    return EXIT_OK


def _parse_cover(graph, spec: str) -> set:
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    return {graph.vertex(t) for t in tokens}


def cmd_reduce(args) -> int:
    graph = io.load_graph(args.graph)
    red = reduce_vertex_cover(graph, args.k)
    output = Path(args.output)
    io.save_instance(red.instance, output)
    roles_path = output.with_name(output.stem + ".roles.json")
    roles_path.write_text(json.dumps(io.roles_to_dict(red)) + "\n")
    summary = {
        "agents": red.instance.n,
        "houses": red.instance.m,
        "k": red.k,
        "threshold": format_rational(Fraction(red.k, graph.vertex_count)),
        "instance": str(output),
        "roles": str(roles_path),
    }
    lines = [
        f"reduction instance: {red.instance.n} agents, {red.instance.m} houses, "
        f"threshold k/|V| = {summary['threshold']}",
        f"wrote {output} and {roles_path}",
    ]
    if args.witness is not None:
        cover = _parse_cover(graph, args.witness)
        out = witness_outcome(red, cover)
        path = Path(args.witness_output or output.with_name(output.stem + ".witness.json"))
        io.save_outcome(out, path, "witness")
        summary["witness"] = str(path)
        summary["witness_total"] = format_rational(total_subsidy(out))
        lines.append(f"witness outcome total {summary['witness_total']} -> {path}")
    if args.extract is not None:
        out = io.load_outcome(args.extract)
        found = extract_cover(red, out)
        covers = is_vertex_cover(graph, found)
        summary["extracted"] = [graph.labels[v] for v in sorted(found)]
        summary["is_cover"] = covers
        lines.append(
            f"extracted {{{', '.join(summary['extracted'])}}}: "
            f"{'a' if covers else 'not a'} vertex cover"
        )
    _emit(args, summary, "\n".join(lines))
    return EXIT_OK


def generate_instance(
    agents: int,
    houses: int,
    max_util: int,
    seed: int,
    identical: bool = False,
    denominator: int = 1,
) -> Instance:
    """Reproducible pseudorandom instance.

    With ``denominator > 1`` each entry is p/q with q uniform on
    ``1..denominator`` and p uniform on ``0..max_util*q``.
    """
    if not 1 <= agents <= houses:
        raise ValidationError(f"need 1 <= agents <= houses, got {agents} and {houses}")
    if max_util < 0 or denominator < 1:
        raise ValidationError("max-util must be >= 0 and denominator >= 1")
    rng = random.Random(seed)

    def draw():
        if denominator == 1:
            return Fraction(rng.randint(0, max_util))
        q = rng.randint(1, denominator)
        return Fraction(rng.randint(0, max_util * q), q)

    if identical:
        row = tuple(draw() for _ in range(houses))
        rows = (row,) * agents
    else:
        rows = tuple(tuple(draw() for _ in range(houses)) for _ in range(agents))
    return Instance(rows)


def cmd_gen(args) -> int:
    inst = generate_instance(
        args.agents, args.houses, args.max_util, args.seed, args.identical, args.denominator
    )
    text = io.dumps_instance(inst)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="house-subsidy",
        description="Envy-free house allocation with minimum total subsidy.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable summary")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="compute a minimum-subsidy envy-free outcome")
    p.add_argument("input")
    p.add_argument("--algo", choices=STRATEGIES, default="auto")
    p.add_argument(
        "--max-surplus",
        type=int,
        default=DEFAULT_MAX_SURPLUS,
        help="largest m - n the subset solver accepts (negative: no cap)",
    )
    p.add_argument("--workers", type=int, default=None, help="processes for the subset solver")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", parents=[common], help="verify that an outcome is envy-free")
    p.add_argument("instance")
    p.add_argument("outcome")
    p.add_argument("--threshold", help="also require total subsidy <= this value (p/q)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", parents=[common], help="build the vertex-cover reduction instance")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", "-o", required=True)
    p.add_argument("--witness", help="comma-separated cover vertices (1-indexed ids)")
    p.add_argument("--witness-output")
    p.add_argument("--extract", help="outcome file to extract a vertex set from")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", parents=[common], help="generate a random instance")
    p.add_argument("--agents", type=int, required=True)
    p.add_argument("--houses", type=int, required=True)
    p.add_argument("--max-util", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--identical", action="store_true")
    p.add_argument("--denominator", type=int, default=1)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HouseSubsidyError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
