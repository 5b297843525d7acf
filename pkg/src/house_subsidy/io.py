"""Instance, outcome and graph file formats.

Instances and outcomes are JSON; rationals travel as ``"p/q"`` strings
(plain integers are accepted on input). Graphs use a DIMACS-style edge list::

    c comment
    p 3 2
    e 1 2
    e 2 3
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional

from .errors import DimensionMismatch, ValidationError
from .model import Instance, Outcome, format_rational, to_rational, total_subsidy, validate_instance
from .reduction import Graph, ReductionInstance


class ParseError(ValidationError):
    """A file could not be read as the expected format."""


def _read_json(path) -> Any:
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from None


def instance_to_dict(inst: Instance) -> dict:
    doc = {
        "agents": inst.n,
        "houses": [inst.house_name(j) for j in range(inst.m)],
        "utilities": [[format_rational(x) for x in row] for row in inst.utilities],
    }
    if inst.agent_labels is not None:
        doc["agent_labels"] = list(inst.agent_labels)
    return doc


def dumps_instance(inst: Instance) -> str:
    """JSON text with one utility row per line."""
    doc = instance_to_dict(inst)
    lines = ["{"]
    lines.append(f'  "agents": {doc["agents"]},')
    lines.append(f'  "houses": {json.dumps(doc["houses"])},')
    if "agent_labels" in doc:
        lines.append(f'  "agent_labels": {json.dumps(doc["agent_labels"])},')
    rows = [json.dumps(row) for row in doc["utilities"]]
    lines.append('  "utilities": [')
    lines.append(",\n".join("    " + r for r in rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def instance_from_dict(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("instance file must hold a JSON object")
    houses = doc.get("houses")
    if houses is not None and not isinstance(houses, list):
        raise ParseError("'houses' must be a list of labels")
    return validate_instance(doc)


def load_instance(path) -> Instance:
    return instance_from_dict(_read_json(path))


def save_instance(inst: Instance, path) -> None:
    Path(path).write_text(dumps_instance(inst))


def outcome_to_dict(out: Outcome, algorithm: str) -> dict:
    return {
        "allocation": list(out.allocation),
        "subsidy": [format_rational(s) for s in out.subsidy],
        "total": format_rational(total_subsidy(out)),
        "algorithm": algorithm,
    }


def outcome_from_dict(doc: Any) -> Outcome:
    if not isinstance(doc, dict):
        raise ParseError("outcome file must hold a JSON object")
    try:
        allocation = doc["allocation"]
        subsidy = doc["subsidy"]
    except KeyError as e:
        raise ParseError(f"outcome file lacks {e.args[0]!r}") from None
    if not isinstance(allocation, list) or not all(
        isinstance(h, int) and not isinstance(h, bool) for h in allocation
    ):
        raise ParseError("'allocation' must be a list of house indices")
    if not isinstance(subsidy, list):
        raise ParseError("'subsidy' must be a list")
    if len(subsidy) != len(allocation):
        raise DimensionMismatch(
            f"{len(subsidy)} subsidies for {len(allocation)} allocated agents"
        )
    out = Outcome(tuple(allocation), tuple(to_rational(s) for s in subsidy))
    if "total" in doc and to_rational(doc["total"]) != total_subsidy(out):
        raise ParseError(
            f"'total' is {doc['total']} but the subsidies sum to "
            f"{format_rational(total_subsidy(out))}"
        )
    return out


def load_outcome(path) -> Outcome:
    return outcome_from_dict(_read_json(path))


def save_outcome(out: Outcome, path, algorithm: str) -> None:
    Path(path).write_text(json.dumps(outcome_to_dict(out, algorithm), indent=2) + "\n")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format; vertices are 1-indexed in the file."""
    header: Optional[tuple] = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if header is not None:
                    raise ParseError(f"line {lineno}: second 'p' header")
                # tolerate the DIMACS "p edge V E" spelling
                nums = parts[2:] if len(parts) == 4 else parts[1:]
                if len(nums) != 2:
                    raise ParseError(f"line {lineno}: header must be 'p <vertices> <edges>'")
                header = (int(nums[0]), int(nums[1]))
            elif parts[0] == "e":
                if header is None:
                    raise ParseError(f"line {lineno}: edge before 'p' header")
                if len(parts) != 3:
                    raise ParseError(f"line {lineno}: edge line must be 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                    raise ParseError(f"line {lineno}: endpoint out of range 1..{header[0]}")
                key = frozenset((u, v))
                if key in seen:
                    raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
                seen.add(key)
                edges.append((u - 1, v - 1))
            else:
                raise ParseError(f"line {lineno}: unknown line type {parts[0]!r}")
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers in {line!r}") from None
    if header is None:
        raise ParseError("graph file has no 'p' header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, file has {len(edges)}")
    try:
        return Graph(header[0], frozenset(edges))
    except ValidationError as e:
        raise ParseError(str(e)) from None


def load_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def dumps_graph(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {len(g.edges)}"]
    lines += [f"e {x + 1} {y + 1}" for x, y in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def roles_to_dict(r: ReductionInstance) -> dict:
    """Sidecar describing which agent/house plays which part in the reduction."""
    g = r.graph

    def agent(role):
        if role.kind == "edge":
            return {"kind": "edge", "edge": [g.labels[v] for v in role.key]}
        if role.kind == "vertex":
            return {"kind": "vertex", "vertex": g.labels[role.key], "copy": role.copy + 1}
        return {"kind": "special"}

    def house(role):
        if role.kind == "special":
            return {"kind": "special"}
        return {"kind": role.kind, "vertex": g.labels[role.key], "copy": role.copy + 1}

    return {
        "vertices": len(g.labels),
        "edges": [[g.labels[x], g.labels[y]] for x, y in g.sorted_edges()],
        "k": r.k,
        "agents": [agent(a) for a in r.agent_roles],
        "houses": [house(h) for h in r.house_roles],
    }
