"""Normal subobjects, ideals, quotients and commutation of subobjects."""

from __future__ import annotations

from dataclasses import dataclass

from .braces import Digroup, SkewBrace, Verdict, is_brace, validate_brace, verdict
from .errors import (
    NotAnIdeal,
    NotHomomorphism,
    NotSubobject,
    ShapeError,
    WellDefinednessFail,
)
from .groups import FiniteGroup, GroupHom, hom_witness, validate_group, validate_hom


@dataclass(frozen=True)
class SubObject:
    parent: Digroup
    elems: tuple

    def to_json(self):
        return {"parent": self.parent.to_json(), "elems": list(self.elems)}


def subobject(parent: Digroup, elems) -> SubObject:
    """Check closure under both laws (finite, so inverses come for free)."""
    es = tuple(sorted(set(int(e) for e in elems)))
    if not es or es[0] != 0:
        raise NotSubobject("a subobject must contain the identity 0")
    if es[-1] >= parent.n:
        raise ShapeError("element index out of range")
    s = set(es)
    for law in ("star", "circ"):
        t = getattr(parent, law).table
        for a in es:
            for b in es:
                if t[a][b] not in s:
                    raise NotSubobject(f"not closed under {law}: {a}, {b}", (a, b))
    return SubObject(parent, es)


def whole(parent: Digroup) -> SubObject:
    return SubObject(parent, tuple(range(parent.n)))


def zero(parent: Digroup) -> SubObject:
    return SubObject(parent, (0,))


def induced(S: SubObject) -> Digroup:
    """The digroup (or brace) structure carried by S, relabeled 0..|S|-1."""
    loc = {x: i for i, x in enumerate(S.elems)}
    laws = [
        validate_group([[loc[getattr(S.parent, law).table[a][b]] for b in S.elems] for a in S.elems])
        for law in ("star", "circ")
    ]
    D = Digroup(*laws)
    return SkewBrace(*laws) if is_brace(D) else D


def _normal_witness(G: FiniteGroup, elems):
    s = set(elems)
    for g in range(G.n):
        for k in elems:
            if G.conj(g, k) not in s:
                return (g, k)
    return None


@dataclass(frozen=True)
class ThreeConditions:
    i: Verdict
    ii: Verdict
    iii: Verdict

    @property
    def ok(self) -> bool:
        return self.i.ok and self.ii.ok and self.iii.ok

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"i": self.i.to_json(), "ii": self.ii.to_json(), "iii": self.iii.to_json(), "ok": self.ok}


def is_normal_digroup(S: SubObject) -> ThreeConditions:
    """Normality in digroups: normal for each law, and the two coset
    relations coincide: y * x^-* in K iff y o x^-o in K."""
    G = S.parent
    s = set(S.elems)
    st, ct = G.star.table, G.circ.table
    si, ci = G.star.inv, G.circ.inv
    w3 = None
    for x in range(G.n):
        for y in range(G.n):
            if (st[y][si[x]] in s) != (ct[y][ci[x]] in s):
                w3 = (x, y)
                break
        if w3:
            break
    return ThreeConditions(
        verdict(_normal_witness(G.star, S.elems)),
        verdict(_normal_witness(G.circ, S.elems)),
        verdict(w3),
    )


def is_ideal(S: SubObject) -> ThreeConditions:
    """Ideal conditions: (K, o) normal, K * a = a * K, lam_a(K) inside K."""
    G = S.parent
    s = set(S.elems)
    st = G.star.table
    w2 = None
    for a in range(G.n):
        left = {st[k][a] for k in S.elems}
        right = {st[a][k] for k in S.elems}
        if left != right:
            w2 = (a,)
            break
    lam = G.lam
    w3 = None
    for a in range(G.n):
        k = next((k for k in S.elems if lam[a][k] not in s), None)
        if k is not None:
            w3 = (a, k)
            break
    return ThreeConditions(verdict(_normal_witness(G.circ, S.elems)), verdict(w2), verdict(w3))


def quotient_by_ideal(S: SubObject):
    """Quotient brace G/K and the projection, classes indexed by minimal member.

    Classes are the circ-cosets x o K; we verify they coincide with the
    star-cosets x * K and that both induced laws are representative-free.
    """
    if not is_ideal(S):
        raise NotAnIdeal("subobject is not an ideal", is_ideal(S).to_json())
    G = S.parent
    st, ct = G.star.table, G.circ.table
    proj = [-1] * G.n
    reps = []
    for x in range(G.n):
        if proj[x] != -1:
            continue
        cls = {ct[x][k] for k in S.elems}
        if cls != {st[x][k] for k in S.elems}:
            raise WellDefinednessFail("circ and star cosets differ", (x,))
        q = len(reps)
        reps.append(x)
        for y in cls:
            if proj[y] != -1:
                raise WellDefinednessFail("cosets overlap", (x, y))
            proj[y] = q
    proj = tuple(proj)
    laws = []
    for t in (st, ct):
        table = [[proj[t[a][b]] for b in reps] for a in reps]
        for a in range(G.n):
            for b in range(G.n):
                if proj[t[a][b]] != table[proj[a]][proj[b]]:
                    raise WellDefinednessFail("induced law depends on representatives", (a, b))
        laws.append(validate_group(table))
    Q = validate_brace(Digroup(*laws)) if is_brace(G) else Digroup(*laws)
    for law in ("star", "circ"):
        w = hom_witness(getattr(G, law), getattr(Q, law), proj)
        if w is not None:
            raise WellDefinednessFail(f"projection is not a {law}-homomorphism", w)
    return Q, proj


def kernel_elems(m) -> tuple:
    return tuple(x for x, v in enumerate(m) if v == 0)


# ---------------------------------------------------------------- commutation

def huq_commutes(U: SubObject, V: SubObject) -> Verdict:
    """Whether (u, v) -> u * v is a two-law homomorphism U x V -> G.

    The diagram forces that map: it must send (u, 0) to u and (0, v) to v.
    """
    if U.parent != V.parent:
        raise ShapeError("subobjects of different parents")
    G = U.parent
    st, ct = G.star.table, G.circ.table
    for u in U.elems:
        for v in V.elems:
            if st[u][v] != st[v][u]:
                return Verdict(False, ("star-commute", u, v))
    for t, name in ((st, "star"), (ct, "circ")):
        for u in U.elems:
            for v in V.elems:
                p = st[u][v]
                for u2 in U.elems:
                    tu = t[u][u2]
                    for v2 in V.elems:
                        if st[tu][t[v][v2]] != t[p][st[u2][v2]]:
                            return Verdict(False, (name, u, v, u2, v2))
    return Verdict(True)


# --------------------------------------------------------- factorization lemma

@dataclass(frozen=True)
class GroupPoint:
    """A split epimorphism of groups f: X -> Y with section s."""

    X: FiniteGroup
    Y: FiniteGroup
    f: tuple
    s: tuple

    @property
    def kernel(self) -> tuple:
        return kernel_elems(self.f)

    def kernel_group(self) -> FiniteGroup:
        es = self.kernel
        loc = {x: i for i, x in enumerate(es)}
        return validate_group([[loc[self.X.table[a][b]] for b in es] for a in es])


def group_point(X: FiniteGroup, Y: FiniteGroup, f, s) -> GroupPoint:
    f, s = tuple(f), tuple(s)
    validate_hom(X, Y, f)
    validate_hom(Y, X, s)
    if any(f[s[y]] != y for y in range(Y.n)):
        raise ShapeError("s is not a section of f")
    return GroupPoint(X, Y, f, s)


def law_point(P, law: str) -> GroupPoint:
    """One law's view of a digroup split point."""
    return group_point(getattr(P.X, law), getattr(P.Y, law), P.f, P.s)


def factor_through_point(P: GroupPoint, gK: GroupHom, gY: GroupHom):
    """The unique g: X -> D with g k_f = gK and g s = gY, if it exists.

    Exists iff gK(phi_y(k)) * gY(y) == gY(y) * gK(k) for all (y, k); returns
    the GroupHom, or a failing Verdict with witness (y, k).
    """
    es = P.kernel
    Kg = P.kernel_group()
    if gK.dom != Kg or gY.dom != P.Y or gK.cod != gY.cod:
        raise ShapeError("gK must start at the kernel, gY at Y, with a common codomain")
    D = gK.cod
    dt = D.table
    X = P.X
    loc = {x: i for i, x in enumerate(es)}
    for y in range(P.Y.n):
        for i, k in enumerate(es):
            phik = loc[X.conj(P.s[y], k)]
            if dt[gK.map[phik]][gY.map[y]] != dt[gY.map[y]][gK.map[i]]:
                return Verdict(False, (y, k))
    g = [0] * X.n
    xt, xi = X.table, X.inv
    for x in range(X.n):
        y = P.f[x]
        k = xt[x][xi[P.s[y]]]
        g[x] = dt[gK.map[loc[k]]][gY.map[y]]
    g = tuple(g)
    w = hom_witness(X, D, g)
    if w is not None:
        raise NotHomomorphism("factorization is not a homomorphism despite the criterion", w)
    return GroupHom(X, D, g)


# ------------------------------------------------------- strong protomodularity

@dataclass(frozen=True)
class PointMono:
    """A sub-point v: (X, f, s) -> (X', f', s') over the same Y.

    ``outer`` is the point (X', f', s'); ``elems`` is the carrier of X inside
    X', which must contain s'(Y) and be closed under both laws.
    """

    outer: object
    elems: tuple


def point_mono(outer, elems) -> PointMono:
    S = subobject(outer.X, elems)
    s = set(S.elems)
    if any(outer.s[y] not in s for y in range(outer.Y.n)):
        raise ShapeError("the subobject must contain the section's image")
    return PointMono(outer, S.elems)


@dataclass(frozen=True)
class ProtoReport:
    antecedent: bool
    consequent: bool

    @property
    def holds(self) -> bool:
        return (not self.antecedent) or self.consequent

    def to_json(self):
        return {"antecedent": self.antecedent, "consequent": self.consequent, "holds": self.holds}


def strong_proto_check(M: PointMono) -> ProtoReport:
    """If Ker f is an ideal of Ker f', then Ker f is an ideal of X'."""
    P = M.outer
    if not (is_brace(P.X) and is_brace(P.Y)):
        raise ShapeError("strong protomodularity check needs a point of skew braces")
    kf = tuple(x for x in M.elems if P.f[x] == 0)
    kf_outer = kernel_elems(P.f)
    # Ker f as a subobject of Ker f', in Ker f' labels
    loc = {x: i for i, x in enumerate(kf_outer)}
    inner = SubObject(induced(SubObject(P.X, kf_outer)), tuple(sorted(loc[x] for x in kf)))
    antecedent = is_ideal(inner).ok
    consequent = is_ideal(SubObject(P.X, kf)).ok
    return ProtoReport(antecedent, consequent)


def gerstenhaber_check(X: FiniteGroup, Y: FiniteGroup, f, elems) -> ProtoReport:
    """Groups: for f: X ->> Y and a subgroup H <= X with f(H) = Y, if
    Ker(f|H) is normal in Ker f then it is normal in X."""
    f = tuple(f)
    validate_hom(X, Y, f)
    H = set(elems)
    if not X.is_subgroup(H):
        raise ShapeError("elems is not a subgroup")
    if {f[h] for h in H} != set(range(Y.n)):
        raise ShapeError("f restricted to the subgroup is not onto Y")
    kf_outer = kernel_elems(f)
    kf = [x for x in kf_outer if x in H]
    kset = set(kf)
    antecedent = all(X.conj(g, k) in kset for g in kf_outer for k in kf)
    consequent = all(X.conj(g, k) in kset for g in range(X.n) for k in kf)
    return ProtoReport(antecedent, consequent)


def sub_braces_containing(P, max_extra: int = 2) -> list:
    """Sub-braces of P.X that contain s(Y), generated by s(Y) plus up to
    ``max_extra`` kernel elements; sorted, without repeats."""
    from itertools import combinations

    X = P.X
    base = {P.s[y] for y in range(P.Y.n)}
    kern = kernel_elems(P.f)
    found = set()
    for r in range(max_extra + 1):
        for extra in combinations(kern[1:], r):
            found.add(tuple(sorted(closure(X, base | set(extra)))))
    return sorted(found)


def closure(X: Digroup, gens) -> set:
    s = set(gens) | {0}
    frontier = list(s)
    tables = (X.star.table, X.circ.table)
    while frontier:
        a = frontier.pop()
        for b in list(s):
            for t in tables:
                for c in (t[a][b], t[b][a]):
                    if c not in s:
                        s.add(c)
                        frontier.append(c)
    return s
