"""JSON documents for multisets and decision reports."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .decision import ColumnSets, DecisionReport, DecisionTable, UniverseDecision
from .model import SoftMultiset, UniverseSpec, ValidationError, validate
from .products import ProductKind

FORMAT_VERSION = 1


class LoadError(ValidationError):
    """Unreadable, malformed or unsupported document."""


def _check_version(doc: Any, source: str) -> None:
    if not isinstance(doc, dict):
        raise LoadError(f"{source}: top level must be a JSON object", source)
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise LoadError(
            f"{source}: unsupported format_version {version!r} (expected {FORMAT_VERSION})",
            "format_version",
        )


def _read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"{path}: {exc.strerror or exc}", str(path)) from exc
    except UnicodeDecodeError as exc:
        raise LoadError(f"{path}: not valid UTF-8 ({exc.reason})", str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(
            f"{path}: JSON parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            str(path),
        ) from exc


def multiset_from_dict(doc: Any, source: str = "<document>") -> SoftMultiset:
    _check_version(doc, source)
    for key in ("universes", "parameters", "choices"):
        if not isinstance(doc.get(key), list):
            raise LoadError(f"{source}: {key!r} must be a list", key)
    return validate(doc["universes"], doc["parameters"], doc["choices"])


def multiset_to_dict(ms: SoftMultiset) -> dict[str, Any]:
    """Serialize; approximation lists follow universe element order."""
    return {
        "format_version": FORMAT_VERSION,
        "universes": [{"id": u.id, "elements": list(u.elements)} for u in ms.universes],
        "parameters": [{"universe": p.universe, "names": list(p.names)} for p in ms.parameters],
        "choices": [
            {
                "name": c.name,
                "params": list(c.coordinates),
                "approx": [
                    [e for e in u.elements if e in subset]
                    for u, subset in zip(ms.universes, c.approximations)
                ],
            }
            for c in ms.choices
        ],
    }


def load_multiset(path: str | Path) -> SoftMultiset:
    return multiset_from_dict(_read_json(path), str(path))


def dump_multiset(ms: SoftMultiset, path: str | Path) -> None:
    Path(path).write_text(json.dumps(multiset_to_dict(ms), indent=2) + "\n", encoding="utf-8")


def report_to_dict(report: DecisionReport) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": report.kind.value,
        "universes": [
            {
                "index": d.index,
                "id": d.universe.id,
                "elements": list(d.universe.elements),
                "source_cols": d.column_sets.source_cols,
                "column_offset": d.column_sets.offset,
                "column_sets": [
                    {"k": k, "local": list(loc), "global": list(glob)}
                    for k, (loc, glob) in enumerate(
                        zip(d.column_sets.local, d.column_sets.global_), start=1
                    )
                ],
                "w": [list(row) for row in d.table.w],
                "v": list(d.table.v),
                "optimum": list(d.optimum),
                "empty_optimum": d.empty_optimum,
            }
            for d in report.universes
        ],
    }


def report_from_dict(doc: Any, source: str = "<report>") -> DecisionReport:
    _check_version(doc, source)
    try:
        kind = ProductKind.parse(doc["kind"])
        decisions = []
        for u in doc["universes"]:
            i = int(u["index"])
            universe = UniverseSpec(u["id"], tuple(u["elements"]))
            local = tuple(tuple(int(p) for p in s["local"]) for s in u["column_sets"])
            sets = ColumnSets(i, int(u["source_cols"]), int(u["column_offset"]), local)
            if [list(g) for g in sets.global_] != [s["global"] for s in u["column_sets"]]:
                raise LoadError(f"{source}: universe {u['id']!r} global sets disagree with offset", u["id"])
            w = tuple(tuple(int(x) for x in row) for row in u["w"])
            v = tuple(int(x) for x in u["v"])
            if any(x not in (0, 1) for row in w for x in row) or any(x not in (0, 1) for x in v):
                raise LoadError(f"{source}: universe {u['id']!r} has non-boolean w/v entries", u["id"])
            decisions.append(UniverseDecision(universe, sets, DecisionTable(i, w, v), tuple(u["optimum"])))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, LoadError):
            raise
        raise LoadError(f"{source}: malformed report ({exc})", source) from exc
    return DecisionReport(kind, tuple(decisions))


def dump_report(report: DecisionReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report_to_dict(report), indent=2) + "\n", encoding="utf-8")


def load_report(path: str | Path) -> DecisionReport:
    return report_from_dict(_read_json(path), str(path))
