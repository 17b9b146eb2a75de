"""Exact arithmetic on finite groups given by Cayley tables.

Carriers are always ``range(n)`` with the identity at index 0.  Permutations
are plain tuples ``p`` with ``p[i]`` the image of ``i``; composition follows
function notation, ``compose(p, q)[i] == p[q[i]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .errors import (
    NoIdentityAtZero,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotHomomorphism,
    NotLatin,
    NotMultiplicative,
    NotUnital,
    ShapeError,
)

Perm = tuple  # tuple[int, ...]


# ---------------------------------------------------------------- permutations

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` after ``q``."""
    return tuple(p[i] for i in q)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def is_perm(p, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


# ---------------------------------------------------------------------- groups

@dataclass(frozen=True)
class FiniteGroup:
    """A validated group law on ``range(n)``; build with :func:`validate_group`."""

    table: tuple
    inv: tuple

    @property
    def n(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, *xs: int) -> int:
        t = self.table
        acc = 0
        for x in xs:
            acc = t[acc][x]
        return acc

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        t = self.table
        return t[t[g][x]][self.inv[g]]

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a))

    @cached_property
    def orders(self) -> tuple:
        out = []
        for a in range(self.n):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def op(self) -> "FiniteGroup":
        """The opposite group: a *op* b = b * a."""
        n = self.n
        return FiniteGroup(
            tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n)),
            self.inv,
        )

    def generated(self, gens) -> frozenset:
        """Subgroup generated by ``gens``."""
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    @cached_property
    def generators(self) -> tuple:
        """A small generating set, chosen greedily (largest order first)."""
        gens = []
        span = frozenset({0})
        candidates = sorted(range(1, self.n), key=lambda a: (-self.orders[a], a))
        while len(span) < self.n:
            g = next(a for a in candidates if a not in span)
            gens.append(g)
            span = self.generated(gens)
        return tuple(gens)

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        if 0 not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    def is_normal(self, elems) -> bool:
        s = set(elems)
        return self.is_subgroup(s) and all(self.conj(g, k) in s for g in range(self.n) for k in s)

    def to_json(self) -> dict:
        return {"n": self.n, "table": [list(r) for r in self.table]}


def validate_group(table) -> FiniteGroup:
    """Check the group axioms on a Cayley table with identity 0.

    Raises the first violated axiom, in the order: shape, identity at 0,
    latin rows/columns, inverses, associativity.
    """
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"table is not an integer matrix: {exc}") from None
    n = len(rows)
    if n == 0:
        raise ShapeError("empty carrier")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise ShapeError(f"row {a} has length {len(row)}, expected {n}", (a,))
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise ShapeError(f"entry ({a},{b}) = {v} out of range", (a, b))
    for a in range(n):
        if rows[a][0] != a or rows[0][a] != a:
            raise NoIdentityAtZero(f"0 is not a two-sided identity at {a}", (a,))
    full = list(range(n))
    for a in range(n):
        if sorted(rows[a]) != full:
            raise NotLatin(f"row {a} is not a permutation", ("row", a))
    for b in range(n):
        if sorted(rows[a][b] for a in range(n)) != full:
            raise NotLatin(f"column {b} is not a permutation", ("col", b))
    inv = []
    for a in range(n):
        b = rows[a].index(0)
        if rows[b][a] != 0:
            raise NoInverse(f"{a} has no two-sided inverse", (a,))
        inv.append(b)
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            rab = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise NotAssociative(f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c))
    return FiniteGroup(rows, tuple(inv))


def group_from_json(obj) -> FiniteGroup:
    if isinstance(obj, dict):
        table = obj.get("table")
        if table is None:
            raise ShapeError("group JSON needs a 'table'")
        if "n" in obj and obj["n"] != len(table):
            raise ShapeError(f"n={obj['n']} but table has {len(table)} rows")
        return validate_group(table)
    return validate_group(obj)


def perm_group(perms):
    """Group of permutations under composition, as ``(group, elements)``.

    Elements are indexed in sorted order of their image tuples, so the
    identity lands at 0.  Closure is assumed; a missing product raises.
    """
    elems = tuple(sorted(set(perms)))
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[compose(p, q)] for q in elems] for p in elems]
    return validate_group(table), elems


# -------------------------------------------------------------- homomorphisms

@dataclass(frozen=True)
class GroupHom:
    dom: FiniteGroup
    cod: FiniteGroup
    map: tuple


def hom_witness(dom: FiniteGroup, cod: FiniteGroup, m):
    """First pair (a, b) with m(ab) != m(a)m(b), or None."""
    dt, ct = dom.table, cod.table
    for a in range(dom.n):
        ma = ct[m[a]]
        da = dt[a]
        for b in range(dom.n):
            if m[da[b]] != ma[m[b]]:
                return (a, b)
    return None


def is_hom(dom: FiniteGroup, cod: FiniteGroup, m) -> bool:
    return len(m) == dom.n and hom_witness(dom, cod, m) is None


def validate_hom(dom: FiniteGroup, cod: FiniteGroup, m) -> GroupHom:
    m = tuple(int(v) for v in m)
    if len(m) != dom.n or any(not 0 <= v < cod.n for v in m):
        raise ShapeError("map has the wrong length or range")
    w = hom_witness(dom, cod, m)
    if w is not None:
        raise NotHomomorphism(f"map fails on the pair {w}", w)
    return GroupHom(dom, cod, m)


def compose_hom(g: GroupHom, f: GroupHom) -> GroupHom:
    """``g`` after ``f``."""
    if f.cod != g.dom:
        raise ShapeError("homomorphisms are not composable")
    return GroupHom(f.dom, g.cod, tuple(g.map[x] for x in f.map))


def _extend_from_generators(dom: FiniteGroup, cod: FiniteGroup, gens, images):
    """Extend gens -> images to a map by right multiplication; None on conflict."""
    m = [-1] * dom.n
    m[0] = 0
    frontier = [0]
    dt, ct = dom.table, cod.table
    while frontier:
        x = frontier.pop()
        mx = m[x]
        for g, h in zip(gens, images):
            y = dt[x][g]
            v = ct[mx][h]
            if m[y] == -1:
                m[y] = v
                frontier.append(y)
            elif m[y] != v:
                return None
    return tuple(m)


def homomorphisms(dom: FiniteGroup, cod: FiniteGroup) -> list:
    """All homomorphism maps dom -> cod, sorted.

    Backtracks over images of ``dom.generators``; an image must have order
    dividing the generator's order, and each candidate is verified in full.
    """
    gens = dom.generators
    cands = [
        [h for h in range(cod.n) if dom.orders[g] % cod.orders[h] == 0] for g in gens
    ]
    out = []

    def rec(i, images):
        if i == len(gens):
            m = _extend_from_generators(dom, cod, gens, images)
            if m is not None and hom_witness(dom, cod, m) is None:
                out.append(m)
            return
        for h in cands[i]:
            images.append(h)
            # prune on the partial subgroup generated so far
            sub = gens[: i + 1]
            ok = _partial_consistent(dom, cod, sub, images)
            if ok:
                rec(i + 1, images)
            images.pop()

    rec(0, [])
    return sorted(set(out))


def _partial_consistent(dom, cod, gens, images) -> bool:
    dt, ct = dom.table, cod.table
    m = {0: 0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g, h in zip(gens, images):
            y = dt[x][g]
            v = ct[m[x]][h]
            old = m.get(y)
            if old is None:
                m[y] = v
                frontier.append(y)
            elif old != v:
                return False
    return True


def automorphisms(G: FiniteGroup, method: str = "generators") -> list:
    """The full automorphism list of ``G`` as sorted permutation tuples.

    ``method="generators"`` backtracks over images of a generating set with
    order-preserving pruning; ``method="brute"`` enumerates every bijection
    fixing 0 (only sensible for n <= 8).
    """
    n = G.n
    if method == "brute":
        out = []
        for rest in permutations(range(1, n)):
            p = (0,) + rest
            if hom_witness(G, G, p) is None:
                out.append(p)
        return sorted(out)
    if method != "generators":
        raise ValueError(f"unknown method {method!r}")
    gens = G.generators
    cands = [[h for h in range(n) if G.orders[h] == G.orders[g]] for g in gens]
    out = []

    def rec(i, images):
        if i == len(gens):
            m = _extend_from_generators(G, G, gens, images)
            if m is not None and is_perm(m, n) and hom_witness(G, G, m) is None:
                out.append(m)
            return
        for h in cands[i]:
            if h in images:
                continue
            images.append(h)
            if _partial_consistent(G, G, gens[: i + 1], images):
                rec(i + 1, images)
            images.pop()

    rec(0, [])
    return sorted(set(out))


# --------------------------------------------------------------------- actions

@dataclass(frozen=True)
class GroupAction:
    """A left action of ``actor`` on ``target`` by automorphisms."""

    actor: FiniteGroup
    target: FiniteGroup
    perms: tuple

    def __call__(self, y: int, k: int) -> int:
        return self.perms[y][k]

    def to_json(self) -> dict:
        return {
            "actor": self.actor.to_json(),
            "target": self.target.to_json(),
            "perms": [list(p) for p in self.perms],
        }


def validate_action(psi: GroupAction) -> GroupAction:
    Y, K, P = psi.actor, psi.target, psi.perms
    if len(P) != Y.n or any(len(p) != K.n for p in P):
        raise ShapeError("action table has the wrong shape")
    if tuple(P[0]) != identity_perm(K.n):
        raise NotUnital("the identity does not act trivially", (0,))
    for y in range(Y.n):
        p = P[y]
        if not is_perm(p, K.n):
            raise NotAutomorphism(f"psi_{y} is not a bijection", (y,))
        w = hom_witness(K, K, p)
        if w is not None:
            raise NotAutomorphism(f"psi_{y} is not a homomorphism at {w}", (y,) + w)
    for y in range(Y.n):
        for y2 in range(Y.n):
            if tuple(P[Y.table[y][y2]]) != compose(P[y], P[y2]):
                raise NotMultiplicative(f"psi_{y}{y2} != psi_{y} psi_{y2}", (y, y2))
    return GroupAction(Y, K, tuple(tuple(p) for p in P))


def trivial_action(Y: FiniteGroup, K: FiniteGroup) -> GroupAction:
    return GroupAction(Y, K, (identity_perm(K.n),) * Y.n)


def actions(Y: FiniteGroup, K: FiniteGroup) -> list:
    """Every action of Y on K by automorphisms, i.e. every hom Y -> Aut(K)."""
    A, elems = perm_group(automorphisms(K))
    return [GroupAction(Y, K, tuple(elems[i] for i in m)) for m in homomorphisms(Y, A)]


def semidirect_gp(psi: GroupAction) -> FiniteGroup:
    """The group (y,k)(y',k') = (y y', k psi_y(k')) on pairs indexed y*|K| + k."""
    psi = validate_action(psi)
    Y, K, P = psi.actor, psi.target, psi.perms
    m = K.n
    table = []
    for y in range(Y.n):
        for k in range(m):
            row = []
            for y2 in range(Y.n):
                base = Y.table[y][y2] * m
                py = P[y]
                for k2 in range(m):
                    row.append(base + K.table[k][py[k2]])
            table.append(row)
    return validate_group(table)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    return semidirect_gp(trivial_action(G, H))


def relabel(G: FiniteGroup, p: Perm) -> FiniteGroup:
    """Transport the law of G along the bijection p (p[0] must be 0)."""
    q = invert(p)
    n = G.n
    return validate_group(
        [[p[G.table[q[a]][q[b]]] for b in range(n)] for a in range(n)]
    )


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def find_isomorphism(G: FiniteGroup, H: FiniteGroup):
    """An isomorphism G -> H as a tuple, or None."""
    if G.n != H.n or sorted(G.orders) != sorted(H.orders):
        return None
    gens = G.generators
    cands = [[h for h in range(H.n) if H.orders[h] == G.orders[g]] for g in gens]

    def rec(i, images):
        if i == len(gens):
            m = _extend_from_generators(G, H, gens, images)
            if m is not None and is_perm(m, H.n) and hom_witness(G, H, m) is None:
                return m
            return None
        for h in cands[i]:
            images.append(h)
            if _partial_consistent(G, H, gens[: i + 1], images):
                r = rec(i + 1, images)
                if r is not None:
                    return r
            images.pop()
        return None

    return rec(0, [])
