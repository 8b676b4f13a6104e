"""Output helpers: asciitree reports for humans, JSON for machines."""

import json
from typing import Any, Dict, List, Mapping, Sequence

import asciitree  # type: ignore

from prvkit.utils.config import get_config
from prvkit.utils import logging as log
from prvkit.utils.logging import cout, fmt

_ASCII_TREE_BOX = {
    "UP_AND_RIGHT": "└",
    "HORIZONTAL": "─",
    "VERTICAL": "│",
    "VERTICAL_AND_RIGHT": "├",
}
_ASCII_TREE_STYLE = asciitree.drawing.BoxStyle(gfx=_ASCII_TREE_BOX)
ASCII_TREE = asciitree.LeftAligned(draw=_ASCII_TREE_STYLE)

Tree = Dict[str, "Tree"]


def _is_vector(value: Any) -> bool:
    return isinstance(value, (list, tuple)) and all(isinstance(v, int) and not isinstance(v, bool) for v in value)


def format_value(value: Any) -> str:
    """Vectors print as (1, 0, 2), lists of vectors space-separated, booleans as yes/no."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if _is_vector(value):
        return "(" + ", ".join(str(v) for v in value) + ")"
    if isinstance(value, (list, tuple)) and all(_is_vector(v) for v in value):
        return " ".join(format_value(v) for v in value) if value else "none"
    if isinstance(value, Mapping):
        return ", ".join(f"{k}: {format_value(v)}" for k, v in value.items())
    return str(value)


def _is_branch(value: Any) -> bool:
    if isinstance(value, Mapping):
        return bool(value)
    return isinstance(value, (list, tuple)) and bool(value) and not _is_vector(value) and not all(
        _is_vector(v) for v in value
    )


def make_tree(fields: Mapping[str, Any]) -> Tree:
    """One node per field; mappings nest, lists of records become one leaf per record."""
    tree: Tree = {}
    for key, value in fields.items():
        if not _is_branch(value):
            tree[f"{key}: {format_value(value)}"] = {}
        elif isinstance(value, Mapping):
            tree[str(key)] = make_tree(value)
        else:
            tree[f"{key} ({len(value)})"] = {format_value(v): {} for v in value}
    return tree


def format_report(title: str, fields: Mapping[str, Any]) -> str:
    if get_config().compact:
        flat = [f"{k}={format_value(v)}" for k, v in fields.items() if not _is_branch(v)]
        return "  ".join([title] + flat)
    escaped = title.replace("{", "{{").replace("}", "}}")
    return ASCII_TREE({fmt(escaped, color=log.COLOR_STDOUT, fg="cyan"): make_tree(fields)})


def print_report(title: str, fields: Mapping[str, Any]):
    cout("{}\n", format_report(title, fields))


def _json_default(value: Any):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    return str(value)


def to_json_line(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, default=_json_default)


def print_json(obj: Any):
    # Payloads may contain braces; keep them out of the format string.
    cout("{}\n", to_json_line(obj))


def print_json_lines(objs: Sequence[Any]):
    for obj in objs:
        print_json(obj)


def emit(args, title: str, fields: Dict[str, Any], replay: List[str]):
    """Print a result as a tree, or as one JSON object carrying its replay argv with --json."""
    if getattr(args, "json", False):
        print_json({**fields, "replay": replay})
    else:
        print_report(title, fields)
