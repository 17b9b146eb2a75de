"""Small-groups catalog: one labeled table per isomorphism class up to order 8."""

import json
from functools import lru_cache
from importlib import resources

from .groups import FiniteGroup, validate_group


@lru_cache(maxsize=None)
def _raw() -> dict:
    text = resources.files(__package__).joinpath("data/catalog.json").read_text("utf-8")
    return json.loads(text)


def ids(max_order: int = 8) -> list:
    """Catalog ids in file order (which is by increasing order)."""
    return [k for k, t in _raw().items() if len(t) <= max_order]


@lru_cache(maxsize=None)
def group(name: str) -> FiniteGroup:
    try:
        table = _raw()[name]
    except KeyError:
        raise KeyError(f"unknown catalog id {name!r}; known: {', '.join(_raw())}") from None
    return validate_group(table)


def groups(max_order: int = 8, abelian=None) -> list:
    """(id, group) pairs, optionally filtered on commutativity."""
    out = []
    for name in ids(max_order):
        G = group(name)
        if abelian is None or G.is_abelian == abelian:
            out.append((name, G))
    return out


def name_of(G: FiniteGroup):
    """The catalog id whose *table* equals G's, else None."""
    for name in ids(G.n):
        if group(name).table == G.table:
            return name
    return None
