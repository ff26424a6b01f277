"""Text and JSON forms of groups, functions, lattices, sign spaces and reports.

The machine-readable report is a plain JSON document tagged with
``SCHEMA``.  The text form is rendered from the same document, so both
carry identical data.
"""
from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .borel_smith import borel_smith_lattice
from .errors import InvalidPermutation, ParseError
from .intlinalg import IntegerLattice
from .perm import DEFAULT_BOUND, FiniteGroup, Permutation, group_from_generators
from .structure import SubgroupClassTable, p_subgroup_classes
from .superclass import SuperclassFunction, SylowLevelFunction
from .tuples import TupleGroup, min_generators, reduced_tuple_group
from .units import SignSpace, dimension_image, stable_unit_space, unit_space
from .verdict import Verdict, lefschetz_verdict

SCHEMA = "lefschetz-report/1"


# -- group files ---------------------------------------------------------------

def parse_group_text(text: str, bound: int = DEFAULT_BOUND, name: str = "") -> FiniteGroup:
    """Parse the ``degree N`` / ``gen (..)(..)`` format; ``#`` starts a comment line."""
    degree: int | None = None
    gens: list[Permutation] = []
    pending: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key == "degree":
            if degree is not None:
                raise ParseError(f"line {lineno}: degree given twice")
            if not re.fullmatch(r"\d+", rest.strip()) or int(rest) < 1:
                raise ParseError(f"line {lineno}: degree must be a positive integer")
            degree = int(rest)
        elif key == "gen":
            pending.append((lineno, rest))
        else:
            raise ParseError(f"line {lineno}: expected 'degree' or 'gen', got {key!r}")
    if degree is None:
        raise ParseError("missing 'degree' line")
    if not pending:
        raise ParseError("empty generator list")
    for lineno, body in pending:
        try:
            gens.append(Permutation.parse(body, degree))
        except InvalidPermutation as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return group_from_generators(degree, gens, bound, name)


def parse_group_file(path: str | Path, bound: int = DEFAULT_BOUND) -> FiniteGroup:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_group_text(text, bound, name=path.stem)


def group_to_text(G: FiniteGroup) -> str:
    lines = [f"# {G.name}"] if G.name else []
    lines.append(f"degree {G.degree}")
    lines += [f"gen {g}" for g in G.generators]
    return "\n".join(lines) + "\n"


def group_descriptor(G: FiniteGroup) -> dict[str, Any]:
    return {"name": G.name, "degree": G.degree, "order": G.order,
            "generators": [str(g) for g in G.generators]}


# -- class tables and functions ------------------------------------------------

def class_header(table: SubgroupClassTable, scope: str = "G") -> list[str]:
    reps = table.class_reps if scope == "G" else table.s_class_reps
    return [H.label() for H in reps]


def function_to_text(f: SuperclassFunction | SylowLevelFunction) -> str:
    return " | ".join(class_header(f.table, f.scope)) + "\n" + " ".join(map(str, f.values))


def function_from_text(table: SubgroupClassTable, text: str):
    head, _, body = text.strip().partition("\n")
    scope = "G" if head.split(" | ") == class_header(table, "G") else "S"
    if head.split(" | ") != class_header(table, scope):
        raise ParseError("header does not match the class table")
    values = tuple(int(v) for v in body.split())
    cls = SuperclassFunction if scope == "G" else SylowLevelFunction
    return cls(table, values)


def lattice_to_dict(lattice: IntegerLattice, table: SubgroupClassTable, scope: str) -> dict:
    return {"columns": class_header(table, scope), "rows": [list(r) for r in lattice.hnf],
            "hnf": True, "rank": lattice.rank}


def lattice_to_text(lattice: IntegerLattice, table: SubgroupClassTable, scope: str) -> str:
    lines = ["# " + " | ".join(class_header(table, scope)), "# hnf: true"]
    lines += [" ".join(str(v) for v in row) for row in lattice.hnf]
    return "\n".join(lines)


def lattice_from_text(text: str) -> IntegerLattice:
    rows = [[int(v) for v in ln.split()] for ln in text.splitlines()
            if ln.strip() and not ln.startswith("#")]
    if not rows:
        raise ParseError("lattice text has no rows")
    return IntegerLattice.span(rows, len(rows[0]))


def sign_space_to_dict(space: SignSpace) -> dict:
    return {"columns": class_header(space.table, space.scope), "dimension": space.dim,
            "rows": [[-1 if b else 1 for b in row] for row in space.basis]}


def sign_space_to_text(space: SignSpace) -> str:
    lines = ["# " + " | ".join(class_header(space.table, space.scope))]
    lines += [" ".join(f"{-1 if b else 1:+d}" for b in row) for row in space.basis]
    return "\n".join(lines)


def tuple_group_to_dict(R: TupleGroup) -> dict:
    comps = []
    for cls, comp in enumerate(R.components):
        comps.append({"class": cls, "subgroup": R.table.class_reps[cls].label(),
                      "automizer_order": comp.quotient.order,
                      "hom": list(comp.group.invariants),
                      "generators": [str(x) for x in comp.gen_elements]})
    basis = []
    for u in R.basis:
        values = []
        for cls, comp in enumerate(R.components):
            values.append([R.character_value(u, cls, x) for x in comp.gen_elements])
        basis.append(values)
    return {"unit_order": R.m, "components": comps, "constraints": len(R.constraints),
            "invariants": list(R.group.invariants), "order": R.group.order,
            "min_generators": min_generators(R.group), "basis": basis,
            "basis_orders": list(R.basis_orders)}


def _plain(value: Any) -> Any:
    """Recursively convert tuples and other containers to JSON-native types."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def verdict_to_dict(v: Verdict) -> dict:
    return {"outcome": v.outcome,
            "reasons": [{"criterion": name, "evidence": _plain(ev)} for name, ev in v.reasons],
            "certificate": _plain(v.certificate)}


# -- analysis report -------------------------------------------------------------

def skipped(reason: str) -> dict:
    return {"skipped": reason}


@dataclass
class AnalysisReport:
    group: dict
    prime: int
    unit_order: int
    class_table: dict
    borel_smith: dict
    units: dict
    tuples: dict
    verdict: dict
    schema: str = field(default=SCHEMA)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        if data.get("schema") != SCHEMA:
            raise ParseError(f"unsupported report schema {data.get('schema')!r}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc

    def to_text(self) -> str:
        return render_text(self.to_dict())


def render_text(data: Any, indent: int = 0) -> str:
    """Indented ``key: value`` rendering; integer rows stay on one line."""
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(pad + _inline(data))
    return "\n".join(ln for ln in lines if ln)


def _is_flat(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}" if not v else json.dumps(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def build_report(G: FiniteGroup, p: int, m: int | None = None,
                 table: SubgroupClassTable | None = None) -> AnalysisReport:
    m = m if m is not None else (1 if p == 2 else p - 1)
    table = table if table is not None else p_subgroup_classes(G, p)
    lattice = borel_smith_lattice(table, "G")
    summary = {"classes": len(table), "c": table.c, "sylow_order": table.sylow.order,
               "representatives": class_header(table, "G"),
               "cyclic": [bool(x) for x in table.cyclic_flags]}
    if p == 2:
        units = {"unit_space": sign_space_to_dict(unit_space(table)),
                 "stable_units": sign_space_to_dict(stable_unit_space(table)),
                 "dimension_image": sign_space_to_dict(dimension_image(table))}
    else:
        units = skipped("odd prime: the unit group of B(S) is {+1, -1}")
    if p != 2 or m > 1:
        tuples = tuple_group_to_dict(reduced_tuple_group(G, p, m, table))
    else:
        tuples = skipped("p = 2 over the prime field: every Hom component is trivial")
    verdict = verdict_to_dict(lefschetz_verdict(G, p, m, table))
    return AnalysisReport(group_descriptor(G), p, m, summary,
                          lattice_to_dict(lattice, table, "G"), units, tuples, verdict)


__all__ = ["SCHEMA", "AnalysisReport", "build_report", "parse_group_text", "parse_group_file",
           "group_to_text", "group_descriptor", "class_header", "function_to_text",
           "function_from_text", "lattice_to_dict", "lattice_to_text", "lattice_from_text",
           "sign_space_to_dict", "sign_space_to_text", "tuple_group_to_dict",
           "verdict_to_dict", "render_text"]
