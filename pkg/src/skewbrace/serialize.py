"""JSON (de)serialization for every public value type.

``dumps`` is the canonical printer: sorted keys, one line, trailing newline.
Golden files are stored in that form, so ``dumps(load(text)) == text``.
"""

from __future__ import annotations

import json

from .baer import Direction, ExactSequence, make_direction, make_sequence
from .braces import Digroup, SkewBrace, is_brace, validate_digroup
from .errors import ShapeError
from .groups import FiniteGroup, GroupAction, validate_action, validate_group
from .normality import SubObject, subobject
from .points import SplitPoint, validate_point
from .yangbaxter import YBMap, make_yb


def dumps(obj) -> str:
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True) + "\n"


def _need(d, *keys):
    if not isinstance(d, dict):
        raise ShapeError("expected a JSON object")
    missing = [k for k in keys if k not in d]
    if missing:
        raise ShapeError(f"missing keys: {', '.join(missing)}")


def _table(rows, what="table"):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ShapeError(f"{what} must be a list of lists")
    try:
        return [[int(v) for v in r] for r in rows]
    except (TypeError, ValueError):
        raise ShapeError(f"{what} has a non-integer entry") from None


def _check_n(d, size):
    if "n" in d and d["n"] != size:
        raise ShapeError(f"declared n={d['n']} but the table has {size} rows")


def parse_group(d) -> FiniteGroup:
    _need(d, "table")
    t = _table(d["table"])
    _check_n(d, len(t))
    return validate_group(t)


def parse_digroup(d) -> Digroup:
    _need(d, "star", "circ")
    s, c = _table(d["star"], "star"), _table(d["circ"], "circ")
    _check_n(d, len(s))
    return validate_digroup(s, c)


def parse_brace_or_digroup(d) -> Digroup:
    D = parse_digroup(d)
    return SkewBrace(D.star, D.circ) if is_brace(D) else D


def parse_action(d) -> GroupAction:
    _need(d, "actor", "target", "perms")
    return validate_action(
        GroupAction(parse_group(d["actor"]), parse_group(d["target"]), tuple(tuple(p) for p in _table(d["perms"], "perms")))
    )


def parse_point(d) -> SplitPoint:
    _need(d, "X", "Y", "f", "s")
    return validate_point(parse_brace_or_digroup(d["X"]), parse_brace_or_digroup(d["Y"]), d["f"], d["s"])


def parse_subobject(d) -> SubObject:
    _need(d, "parent", "elems")
    return subobject(parse_brace_or_digroup(d["parent"]), d["elems"])


def parse_sequence(d) -> ExactSequence:
    _need(d, "A", "X", "Y", "k", "f")
    return make_sequence(*(parse_brace_or_digroup(d[x]) for x in "AXY"), d["k"], d["f"])


def parse_direction(d) -> Direction:
    _need(d, "Y", "A", "phi_star", "phi_circ", "xi")
    return make_direction(
        parse_brace_or_digroup(d["Y"]),
        parse_brace_or_digroup(d["A"]),
        _table(d["phi_star"]),
        _table(d["phi_circ"]),
        _table(d["xi"]),
    )


def parse_yb(d) -> YBMap:
    _need(d, "n", "r")
    if not isinstance(d["r"], list):
        raise ShapeError("r must be a list")
    return make_yb(int(d["n"]), d["r"])


def parse_action_pair(d):
    _need(d, "star", "circ")
    return parse_action(d["star"]), parse_action(d["circ"])


# detection by key set; order matters (most specific first)
_KINDS = [
    ("sequence", {"A", "X", "Y", "k", "f"}, parse_sequence),
    ("direction", {"phi_star", "phi_circ", "xi"}, parse_direction),
    ("point", {"X", "Y", "f", "s"}, parse_point),
    ("subobject", {"parent", "elems"}, parse_subobject),
    ("action", {"actor", "target", "perms"}, parse_action),
    ("digroup", {"star", "circ", "n"}, parse_brace_or_digroup),
    ("yb", {"n", "r"}, parse_yb),
    ("group", {"table"}, parse_group),
]


def kind_of(d) -> str:
    if isinstance(d, dict):
        for name, keys, _ in _KINDS:
            if keys <= d.keys():
                return name
    raise ShapeError("unrecognized JSON value")


def load(d):
    """Parse any recognized JSON value (already decoded)."""
    k = kind_of(d)
    return next(p for name, _, p in _KINDS if name == k)(d)


def loads(text: str):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShapeError(f"invalid JSON: {exc}") from None
    return load(d)


def read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()
