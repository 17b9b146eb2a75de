"""Instance generators over the catalog, for property suites and the CLI.

Everything random takes an explicit ``random.Random`` so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

from . import catalog
from .braces import Digroup, enumerate_braces
from .groups import FiniteGroup, actions, identity_perm, relabel
from .points import build_with_xi


@lru_cache(maxsize=None)
def labeled_groups(n: int) -> tuple:
    """Every group table on range(n) with identity 0, up to order 6.

    Obtained by relabeling each catalog group along all bijections fixing 0.
    """
    if n > 6:
        raise ValueError("labeled enumeration is limited to n <= 6")
    seen = {}
    for name in catalog.ids(n):
        G = catalog.group(name)
        if G.n != n:
            continue
        for rest in permutations(range(1, n)):
            H = relabel(G, (0,) + rest)
            seen.setdefault(H.table, H)
    return tuple(seen[t] for t in sorted(seen))


@lru_cache(maxsize=None)
def digroups(n: int) -> tuple:
    """A deterministic pool of digroups of order n.

    For n <= 4 this is every pair of labeled group tables.  Above that it is
    every pair of catalog tables of order n plus (G, G^op).
    """
    if n <= 4:
        tabs = labeled_groups(n)
        return tuple(Digroup(a, b) for a in tabs for b in tabs)
    gs = [catalog.group(name) for name in catalog.ids(n) if catalog.group(name).n == n]
    pool = [Digroup(a, b) for a in gs for b in gs]
    pool += [Digroup(G, G.op()) for G in gs if not G.is_abelian]
    return tuple(pool)


@lru_cache(maxsize=None)
def _actions(Y: FiniteGroup, K: FiniteGroup) -> tuple:
    return tuple(actions(Y, K))


def all_actions(Y: FiniteGroup, K: FiniteGroup) -> tuple:
    """Cached list of every action of Y on K."""
    return _actions(Y, K)


def random_xi(rng: random.Random, ny: int, m: int, p_trivial: float = 0.25) -> tuple:
    """A pointed family of kernel permutations, each fixing 0."""
    ident = identity_perm(m)
    if rng.random() < p_trivial:
        return (ident,) * ny
    rows = [ident]
    for _ in range(1, ny):
        rest = list(range(1, m))
        rng.shuffle(rest)
        rows.append((0,) + tuple(rest))
    return tuple(rows)


def random_split_points(rng: random.Random, count: int, max_size: int = 16, min_kernel: int = 2) -> list:
    """``count`` points build_with_xi(psi_star, psi_circ, xi) with random inputs."""
    shapes = [
        (ny, nk)
        for ny in range(1, 9)
        for nk in range(min_kernel, 9)
        if ny * nk <= max_size
    ]
    out = []
    while len(out) < count:
        ny, nk = rng.choice(shapes)
        Y = rng.choice(digroups(ny))
        K = rng.choice(digroups(nk))
        ps = rng.choice(all_actions(Y.star, K.star))
        pc = rng.choice(all_actions(Y.circ, K.circ))
        xi = random_xi(rng, ny, nk)
        out.append(build_with_xi(ps, pc, xi))
    return out


@lru_cache(maxsize=None)
def braces(n: int) -> tuple:
    """Every brace on every catalog star table of order n."""
    out = []
    for name in catalog.ids(n):
        G = catalog.group(name)
        if G.n == n:
            out.extend(enumerate_braces(G))
    return tuple(out)


def catalog_abelian(max_order: int = 8) -> list:
    return [G for _, G in catalog.groups(max_order, abelian=True)]


def digroup_of_group(G: FiniteGroup) -> Digroup:
    return Digroup(G, G)


__all__ = [
    "labeled_groups",
    "digroups",
    "all_actions",
    "random_xi",
    "random_split_points",
    "braces",
    "catalog_abelian",
]
