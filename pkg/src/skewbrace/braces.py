"""Digroups, left skew braces and their lambda maps.

A digroup is a carrier with two group laws ``star`` and ``circ`` sharing the
identity 0.  It is a left skew brace when

    a o (b * c) = (a o b) * a^-* * (a o c)

equivalently when ``lam[a o b] == lam[a] lam[b]`` where
``lam[a][b] = a^-* * (a o b)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    Axiom2Fail,
    BoundExceeded,
    NotAutomorphism,
    NotGroupLaw,
    NotUnital,
    ShapeError,
    SizeMismatch,
    AlgebraError,
    NotABrace,
)
from .groups import (
    FiniteGroup,
    automorphisms,
    compose,
    hom_witness,
    identity_perm,
    is_perm,
    validate_group,
)


@dataclass(frozen=True)
class Verdict:
    """A checked property: ``ok`` plus the first counterexample found."""

    ok: bool
    witness: tuple = None

    def __bool__(self):
        return self.ok

    def to_json(self):
        d = {"ok": self.ok}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


OK = Verdict(True)


def verdict(witness) -> Verdict:
    return OK if witness is None else Verdict(False, tuple(witness))


@dataclass(frozen=True)
class Digroup:
    star: FiniteGroup
    circ: FiniteGroup

    @property
    def n(self) -> int:
        return self.star.n

    @cached_property
    def lam(self) -> tuple:
        return lambda_of(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "star": [list(r) for r in self.star.table],
            "circ": [list(r) for r in self.circ.table],
        }


@dataclass(frozen=True)
class SkewBrace(Digroup):
    """A digroup known to satisfy the brace axiom; build with :func:`validate_brace`."""


def _as_group(g) -> FiniteGroup:
    return g if isinstance(g, FiniteGroup) else validate_group(g)


def validate_digroup(star, circ) -> Digroup:
    """Two group laws on the same carrier; errors are tagged with the law."""
    try:
        s = _as_group(star)
    except AlgebraError as exc:
        raise type(exc)(f"star law: {exc}", exc.witness) from None
    try:
        c = _as_group(circ)
    except AlgebraError as exc:
        raise type(exc)(f"circ law: {exc}", exc.witness) from None
    if s.n != c.n:
        raise SizeMismatch(f"star has order {s.n}, circ has order {c.n}", (s.n, c.n))
    return Digroup(s, c)


def lambda_of(D: Digroup) -> tuple:
    st, ct, inv = D.star.table, D.circ.table, D.star.inv
    n = D.n
    return tuple(tuple(st[inv[a]][ct[a][b]] for b in range(n)) for a in range(n))


@dataclass(frozen=True)
class BraceReport:
    axiom1: Verdict
    axiom2: Verdict
    lambda_hom: Verdict

    @property
    def ok(self) -> bool:
        return self.axiom1.ok and self.axiom2.ok and self.lambda_hom.ok

    @property
    def agree(self) -> bool:
        return self.axiom1.ok == self.axiom2.ok == self.lambda_hom.ok

    def to_json(self):
        return {
            "axiom1": self.axiom1.to_json(),
            "axiom2": self.axiom2.to_json(),
            "lambda_hom": self.lambda_hom.to_json(),
            "ok": self.ok,
        }


def axiom1_witness(D: Digroup):
    st, ct, inv = D.star.table, D.circ.table, D.star.inv
    n = D.n
    for a in range(n):
        ca, sai = ct[a], st[inv[a]]
        for b in range(n):
            left = st[ca[b]]
            for c in range(n):
                if ca[st[b][c]] != left[sai[ca[c]]]:
                    return (a, b, c)
    return None


def axiom2_witness(D: Digroup, lam=None):
    lam = lam or lambda_of(D)
    ct = D.circ.table
    n = D.n
    for a in range(n):
        for b in range(n):
            lab, la, lb = lam[ct[a][b]], lam[a], lam[b]
            for c in range(n):
                if lab[c] != la[lb[c]]:
                    return (a, b, c)
    return None


def lambda_hom_witness(D: Digroup, lam=None, elems=None):
    """First (a, b, c) with lam_a(b*c) != lam_a(b)*lam_a(c), a ranging over elems."""
    lam = lam or lambda_of(D)
    st = D.star.table
    n = D.n
    for a in range(n) if elems is None else elems:
        la = lam[a]
        for b in range(n):
            row = st[la[b]]
            sb = st[b]
            for c in range(n):
                if la[sb[c]] != row[la[c]]:
                    return (a, b, c)
    return None


def check_brace(D: Digroup) -> BraceReport:
    """Evaluate the three equivalent brace conditions independently."""
    lam = lambda_of(D)
    return BraceReport(
        axiom1=verdict(axiom1_witness(D)),
        axiom2=verdict(axiom2_witness(D, lam)),
        lambda_hom=verdict(lambda_hom_witness(D, lam)),
    )


def is_brace(D: Digroup) -> bool:
    return axiom1_witness(D) is None


def validate_brace(star, circ=None) -> SkewBrace:
    """Promote a digroup (or a pair of tables) to a SkewBrace, or raise NotABrace."""
    D = star if circ is None else validate_digroup(star, circ)
    if isinstance(D, SkewBrace):
        return D
    w = axiom1_witness(D)
    if w is not None:
        raise NotABrace(f"brace axiom fails at (a,b,c)={w}", w)
    return SkewBrace(D.star, D.circ)


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    """(G, *, *)"""
    return validate_brace(Digroup(G, G))


def opposite_brace(G: FiniteGroup) -> SkewBrace:
    """(G, *, *^op)"""
    return validate_brace(Digroup(G, G.op()))


def brace_from_lambda(star, lam) -> SkewBrace:
    """Build a o b := a * lam_a(b) and check it is a brace."""
    G = _as_group(star)
    n = G.n
    lam = tuple(tuple(int(v) for v in row) for row in lam)
    if len(lam) != n:
        raise ShapeError(f"lambda has {len(lam)} rows, expected {n}")
    if lam[0] != identity_perm(n):
        raise NotUnital("lambda_0 is not the identity", (0,))
    for a in range(n):
        if not is_perm(lam[a], n):
            raise NotAutomorphism(f"lambda_{a} is not a bijection", (a,))
        w = hom_witness(G, G, lam[a])
        if w is not None:
            raise NotAutomorphism(f"lambda_{a} is not a *-homomorphism at {w}", (a,) + w)
    circ = [[G.table[a][lam[a][b]] for b in range(n)] for a in range(n)]
    try:
        C = validate_group(circ)
    except AlgebraError as exc:
        raise NotGroupLaw(f"induced circ law: {exc}", exc.witness) from None
    for a in range(n):
        for b in range(n):
            if lam[C.table[a][b]] != compose(lam[a], lam[b]):
                raise Axiom2Fail(f"lambda_(a o b) != lambda_a lambda_b at {(a, b)}", (a, b))
    return SkewBrace(G, C)


def is_abelian_brace(B: Digroup) -> bool:
    return B.star.table == B.circ.table and B.star.is_abelian


# ------------------------------------------------------------------ enumeration

def enumerate_braces(star, bound: int = 8, auts=None) -> list:
    """Every skew brace whose star law is exactly ``star``.

    Braces with star law G correspond to regular subgroups
    {(a, lam_a)} of the holomorph G x| Aut(G).  We grow such a subgroup
    one generator at a time (always adjoining the smallest element not yet
    covered), closing under the holomorph product
    (a, f)(b, g) = (a * f(b), f g) and rejecting any closure that assigns
    two automorphisms to one element.  Each subgroup is reached exactly once.
    Output is sorted by lambda table.
    """
    G = _as_group(star)
    n = G.n
    if n > bound:
        raise BoundExceeded(f"order {n} exceeds the enumeration bound {bound}", (n, bound))
    auts = automorphisms(G) if auts is None else auts
    st = G.table
    ident = identity_perm(n)
    found = []

    def close(gens):
        lam = {0: ident}
        frontier = [0]
        while frontier:
            a = frontier.pop()
            la = lam[a]
            row = st[a]
            for b, lb in gens:
                c = row[la[b]]
                lc = compose(la, lb)
                old = lam.get(c)
                if old is None:
                    lam[c] = lc
                    frontier.append(c)
                elif old != lc:
                    return None
        return lam

    def rec(gens, lam):
        if len(lam) == n:
            found.append(tuple(lam[a] for a in range(n)))
            return
        a = min(x for x in range(n) if x not in lam)
        for alpha in auts:
            new = close(gens + [(a, alpha)])
            if new is not None:
                rec(gens + [(a, alpha)], new)

    rec([], {0: ident})
    return [brace_from_lambda(G, lam) for lam in sorted(found)]


def brace_isomorphism(B1: Digroup, B2: Digroup, candidates=None):
    """A bijection preserving both laws, or None.

    ``candidates`` restricts the search (e.g. to Aut(star) when both braces
    share the star table); by default every bijection fixing 0 is tried.
    """
    from itertools import permutations

    if B1.n != B2.n:
        return None
    n = B1.n
    if candidates is None:
        candidates = ((0,) + p for p in permutations(range(1, n)))
    for p in candidates:
        if hom_witness(B1.star, B2.star, p) is None and hom_witness(B1.circ, B2.circ, p) is None:
            return tuple(p)
    return None


def dedupe_braces(braces) -> list:
    """Keep the first brace of each isomorphism class, in input order.

    Two braces on the same star table can only be identified by an
    automorphism of that table, so the search is restricted accordingly.
    """
    kept = []
    auts = {}
    for B in braces:
        for K in kept:
            if K.n != B.n:
                continue
            cands = None
            if K.star == B.star:
                if B.star not in auts:
                    auts[B.star] = automorphisms(B.star)
                cands = auts[B.star]
            if brace_isomorphism(B, K, cands) is not None:
                break
        else:
            kept.append(B)
    return kept
