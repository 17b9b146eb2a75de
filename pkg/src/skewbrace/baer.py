"""Abelian-kernel extensions of skew braces and their Baer sum.

A sequence is ``A --k--> X --f--> Y`` with A an abelian brace (A, +, +),
k injective, f surjective, k(A) = f^-1(0).  Its direction is the triple
(phi_star, phi_circ, xi) read off any fibre representative; sequences
with equal directions (tablewise, over the same labeled A and Y) form a
group under Baer sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .braces import Digroup, SkewBrace, Verdict, is_abelian_brace, is_brace, validate_brace, verdict
from .errors import (
    CodomainMismatch,
    DirectionMismatch,
    IncompatibleDirection,
    InternalCheckFail,
    NotAbelianKernel,
    NotExact,
    NotHomomorphism,
    SearchBoundExceeded,
    SequenceCheckFail,
    ShapeError,
)
from .groups import GroupAction, compose, hom_witness, identity_perm, invert, is_perm, validate_group
from .normality import SubObject, is_ideal, quotient_by_ideal
from .points import SplitPoint, build_with_xi, product_point, semidirect_digroup


@dataclass(frozen=True)
class ExactSequence:
    A: SkewBrace
    X: SkewBrace
    Y: SkewBrace
    k: tuple
    f: tuple

    def fibre(self, y: int) -> tuple:
        return tuple(x for x in range(self.X.n) if self.f[x] == y)

    def rep(self, y: int) -> int:
        return next(x for x in range(self.X.n) if self.f[x] == y)

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "X": self.X.to_json(),
            "Y": self.Y.to_json(),
            "k": list(self.k),
            "f": list(self.f),
        }


@dataclass(frozen=True)
class SequenceReport:
    lambda_trivial_on_A: Verdict
    lambda_constant_on_fibres: Verdict
    maltsev_on_fibres: Verdict
    xi_independent: Verdict

    @property
    def ok(self) -> bool:
        return all(getattr(self, n).ok for n in self.__dataclass_fields__)

    def to_json(self):
        d = {n: getattr(self, n).to_json() for n in self.__dataclass_fields__}
        d["ok"] = self.ok
        return d


def _shape(E: ExactSequence):
    for name in ("A", "X", "Y"):
        B = getattr(E, name)
        if not isinstance(B, Digroup):
            raise ShapeError(f"{name} is not a digroup")
        if not is_brace(B):
            raise ShapeError(f"{name} is not a skew brace")
    if not is_abelian_brace(E.A):
        raise NotAbelianKernel("the kernel must be (A, +, +) with + commutative")
    if len(E.k) != E.A.n or len(E.f) != E.X.n:
        raise ShapeError("k or f has the wrong length")
    if any(not 0 <= v < E.X.n for v in E.k) or any(not 0 <= v < E.Y.n for v in E.f):
        raise ShapeError("k or f leaves its codomain")
    for name, dom, cod, m in (
        ("k", E.A, E.X, E.k),
        ("f", E.X, E.Y, E.f),
    ):
        for law in ("star", "circ"):
            w = hom_witness(getattr(dom, law), getattr(cod, law), m)
            if w is not None:
                raise NotHomomorphism(f"{name} is not a {law}-homomorphism at {w}", w)
    if len(set(E.k)) != E.A.n:
        raise NotExact("k is not injective")
    if set(E.f) != set(range(E.Y.n)):
        raise NotExact("f is not surjective")
    if sorted(E.k) != list(E.fibre(0)):
        raise NotExact("image of k differs from the kernel of f")


def sequence_report(E: ExactSequence) -> SequenceReport:
    """Shape checks (raising), then the four fibre identities (reported)."""
    _shape(E)
    X = E.X
    st, ct, sinv, cinv = X.star.table, X.circ.table, X.star.inv, X.circ.inv
    lam = X.lam
    img = E.k
    fibres = [E.fibre(y) for y in range(E.Y.n)]

    w1 = next(((a, b) for a in img for b in img if lam[a][b] != b), None)
    w2 = None
    for fib in fibres:
        x0 = fib[0]
        for x in fib[1:]:
            a = next((a for a in img if lam[x][a] != lam[x0][a]), None)
            if a is not None:
                w2 = (x0, x, a)
                break
        if w2:
            break
    w3 = None
    for fib in fibres:
        for u, v, w in product(fib, repeat=3):
            if st[st[u][sinv[v]]][w] != ct[ct[u][cinv[v]]][w]:
                w3 = (u, v, w)
                break
        if w3:
            break
    w4 = None
    for fib in fibres:
        x0 = fib[0]
        for x in fib[1:]:
            a = next((a for a in img if st[ct[a][x]][sinv[x]] != st[ct[a][x0]][sinv[x0]]), None)
            if a is not None:
                w4 = (x0, x, a)
                break
        if w4:
            break
    return SequenceReport(verdict(w1), verdict(w2), verdict(w3), verdict(w4))


def validate_sequence(E: ExactSequence) -> ExactSequence:
    rep = sequence_report(E)
    if not rep.ok:
        name = next(n for n in rep.__dataclass_fields__ if not getattr(rep, n).ok)
        raise SequenceCheckFail(f"{name} fails", getattr(rep, name).witness)
    return E


def make_sequence(A, X, Y, k, f) -> ExactSequence:
    return validate_sequence(
        ExactSequence(A, X, Y, tuple(int(v) for v in k), tuple(int(v) for v in f))
    )


def sequence_of_point(P: SplitPoint) -> ExactSequence:
    """The exact sequence of a split point of braces with abelian kernel."""
    kd = P.kernel
    if not is_abelian_brace(kd.K):
        raise NotAbelianKernel("the point's kernel is not an abelian brace")
    return make_sequence(validate_brace(kd.K), validate_brace(P.X), validate_brace(P.Y), kd.elems, P.f)


# -------------------------------------------------------------------- direction

@dataclass(frozen=True)
class Direction:
    """(phi_star, phi_circ, xi) over fixed Y and A; ``lam`` is the derived
    table lam_y(a) = lambda^X_x(a), kept for the compatibility law."""

    Y: SkewBrace
    A: SkewBrace
    phi_star: tuple
    phi_circ: tuple
    xi: tuple
    lam: tuple

    def to_json(self) -> dict:
        return {
            "Y": self.Y.to_json(),
            "A": self.A.to_json(),
            "phi_star": [list(p) for p in self.phi_star],
            "phi_circ": [list(p) for p in self.phi_circ],
            "xi": [list(p) for p in self.xi],
        }


def _compat_witness(phis, phic, xi, lam):
    for y in range(len(xi)):
        left, right = compose(xi[y], phic[y]), compose(phis[y], lam[y])
        if left != right:
            a = next(i for i in range(len(left)) if left[i] != right[i])
            return (y, a)
    return None


def direction_of(E: ExactSequence) -> Direction:
    validate_sequence(E)
    X = E.X
    st, ct, sinv, cinv = X.star.table, X.circ.table, X.star.inv, X.circ.inv
    loc = {x: a for a, x in enumerate(E.k)}
    lam = X.lam
    cols = {"phi_star": [], "phi_circ": [], "xi": [], "lam": []}
    for y in range(E.Y.n):
        rows = None
        for x in E.fibre(y):
            r = (
                tuple(loc[st[st[x][ka]][sinv[x]]] for ka in E.k),
                tuple(loc[ct[ct[x][ka]][cinv[x]]] for ka in E.k),
                tuple(loc[st[ct[ka][x]][sinv[x]]] for ka in E.k),
                tuple(loc[lam[x][ka]] for ka in E.k),
            )
            if rows is None:
                rows = r
            elif r != rows:
                raise InternalCheckFail("direction depends on the fibre representative", (y, x))
        for key, row in zip(cols, rows):
            cols[key].append(row)
    d = Direction(E.Y, E.A, *(tuple(cols[k]) for k in ("phi_star", "phi_circ", "xi", "lam")))
    w = _compat_witness(d.phi_star, d.phi_circ, d.xi, d.lam)
    if w is not None:
        raise InternalCheckFail("xi phi_circ != phi_star lam", w)
    return d


def make_direction(Y, A, phi_star, phi_circ, xi) -> Direction:
    """A direction from user tables; lam is derived as phi_star^-1 xi phi_circ."""
    Y, A = validate_brace(Y), validate_brace(A)
    if not is_abelian_brace(A):
        raise NotAbelianKernel("the kernel must be (A, +, +) with + commutative")
    tabs = []
    for name, rows in (("phi_star", phi_star), ("phi_circ", phi_circ), ("xi", xi)):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if len(rows) != Y.n or any(not is_perm(r, A.n) for r in rows):
            raise ShapeError(f"{name} must be {Y.n} permutations of range({A.n})")
        tabs.append(rows)
    phis, phic, xi = tabs
    lam = tuple(compose(invert(phis[y]), compose(xi[y], phic[y])) for y in range(Y.n))
    return Direction(Y, A, phis, phic, xi, lam)


def direction_mismatch(d1: Direction, d2: Direction):
    """First differing component as (name, y, a), or (name,) for Y/A; None if equal."""
    if d1.Y != d2.Y:
        return ("Y",)
    if d1.A != d2.A:
        return ("A",)
    for name in ("phi_star", "phi_circ", "xi", "lam"):
        t1, t2 = getattr(d1, name), getattr(d2, name)
        for y in range(len(t1)):
            if t1[y] != t2[y]:
                a = next(i for i in range(len(t1[y])) if t1[y][i] != t2[y][i])
                return (name, y, a)
    return None


def _same_direction(E: ExactSequence, E2: ExactSequence) -> Direction:
    if E.Y != E2.Y:
        raise CodomainMismatch("the sequences have different Y")
    d1, d2 = direction_of(E), direction_of(E2)
    w = direction_mismatch(d1, d2)
    if w is not None:
        raise DirectionMismatch(f"directions differ at {w[0]}", w)
    return d1


# --------------------------------------------------------------------- pullback

@dataclass(frozen=True)
class Pullback:
    B: SkewBrace
    pairs: tuple

    @property
    def index(self) -> dict:
        return {p: i for i, p in enumerate(self.pairs)}

    @property
    def p1(self) -> tuple:
        return tuple(p[0] for p in self.pairs)

    @property
    def p2(self) -> tuple:
        return tuple(p[1] for p in self.pairs)


def pullback(E: ExactSequence, E2: ExactSequence) -> Pullback:
    """Fibre pairs (x, x') with f(x) = f'(x'), sorted, with componentwise laws."""
    if E.Y != E2.Y:
        raise CodomainMismatch("the sequences have different Y")
    pairs = tuple(
        (x, x2) for x in range(E.X.n) for x2 in range(E2.X.n) if E.f[x] == E2.f[x2]
    )
    idx = {p: i for i, p in enumerate(pairs)}
    laws = []
    for law in ("star", "circ"):
        t1, t2 = getattr(E.X, law).table, getattr(E2.X, law).table
        laws.append(validate_group([[idx[(t1[a][c], t2[b][d])] for c, d in pairs] for a, b in pairs]))
    B = validate_brace(Digroup(*laws))
    for law in ("star", "circ"):
        for X, proj in ((E.X, [p[0] for p in pairs]), (E2.X, [p[1] for p in pairs])):
            if hom_witness(getattr(B, law), getattr(X, law), proj) is not None:
                raise InternalCheckFail(f"pullback projection is not a {law}-homomorphism")
    return Pullback(B, pairs)


def antidiagonal(E: ExactSequence, E2: ExactSequence, pb: Pullback = None) -> SubObject:
    """{(k(-a), k'(a))} inside the pullback, verified to be an ideal."""
    _same_direction(E, E2)
    pb = pb or pullback(E, E2)
    idx = pb.index
    neg = E.A.star.inv
    elems = sorted(idx[(E.k[neg[a]], E2.k[a])] for a in range(E.A.n))
    S = SubObject(pb.B, tuple(elems))
    # the identity behind the ideal property: lambda agrees on fibre pairs
    loc1 = {x: a for a, x in enumerate(E.k)}
    loc2 = {x: a for a, x in enumerate(E2.k)}
    l1, l2 = E.X.lam, E2.X.lam
    for x, x2 in pb.pairs:
        for a in range(E.A.n):
            if loc1[l1[x][E.k[a]]] != loc2[l2[x2][E2.k[a]]]:
                raise InternalCheckFail("lambda differs on a fibre pair", (x, x2, a))
    rep = is_ideal(S)
    if not rep.ok:
        raise InternalCheckFail("antidiagonal is not an ideal", rep.to_json())
    return S


def baer_sum(E: ExactSequence, E2: ExactSequence) -> ExactSequence:
    d = _same_direction(E, E2)
    pb = pullback(E, E2)
    S = antidiagonal(E, E2, pb)
    Q, proj = quotient_by_ideal(S)
    idx = pb.index
    k = tuple(proj[idx[(E.k[a], E2.k[0])]] for a in range(E.A.n))
    k_other = tuple(proj[idx[(E.k[0], E2.k[a])]] for a in range(E.A.n))
    if k != k_other:
        raise InternalCheckFail("the two induced embeddings differ")
    f = [None] * Q.n
    for i, (x, _) in enumerate(pb.pairs):
        q = proj[i]
        if f[q] is None:
            f[q] = E.f[x]
        elif f[q] != E.f[x]:
            raise InternalCheckFail("induced surjection is not well defined", (i,))
    out = make_sequence(E.A, Q, E.Y, k, f)
    w = direction_mismatch(direction_of(out), d)
    if w is not None:
        raise InternalCheckFail("sum changed the direction", w)
    return out


def baer_inverse(E: ExactSequence) -> ExactSequence:
    """Same X, Y, f with embedding a -> k(-a)."""
    neg = E.A.star.inv
    return make_sequence(E.A, E.X, E.Y, tuple(E.k[neg[a]] for a in range(E.A.n)), E.f)


def baer_unit(d: Direction) -> ExactSequence:
    """The split sequence of build_with_xi(phi_star, phi_circ, xi)."""
    w = _compat_witness(d.phi_star, d.phi_circ, d.xi, d.lam)
    if w is not None:
        raise IncompatibleDirection("xi phi_circ != phi_star lam", w)
    ps = GroupAction(d.Y.star, d.A.star, d.phi_star)
    pc = GroupAction(d.Y.circ, d.A.circ, d.phi_circ)
    P = build_with_xi(ps, pc, d.xi)
    if not is_brace(P.X):
        raise IncompatibleDirection("the split point of this direction is not a skew brace")
    E = make_sequence(d.A, validate_brace(P.X), d.Y, range(d.A.n), P.f)
    w = direction_mismatch(direction_of(E), d)
    if w is not None:
        raise IncompatibleDirection("the unit does not reproduce the direction", w)
    return E


def trivial_direction(Y: SkewBrace, A: SkewBrace) -> Direction:
    ident = (identity_perm(A.n),) * Y.n
    return make_direction(Y, A, ident, ident, ident)


# ------------------------------------------------------------------ equivalence

def ext_equivalent(E: ExactSequence, E2: ExactSequence, bound: int = 32):
    """A brace isomorphism v: X -> X' with v k = k' and f' v = f, or None.

    v is fixed on k(A); the images of lifts of star-generators of Y are
    chosen inside the matching fibres of X', then extended by star-closure.
    """
    if E.Y != E2.Y or E.A != E2.A:
        raise CodomainMismatch("the sequences must share A and Y")
    if E.X.n > bound or E2.X.n > bound:
        raise SearchBoundExceeded(f"|X| exceeds the search bound {bound}", (E.X.n, E2.X.n, bound))
    if E.X.n != E2.X.n:
        return None
    X, X2 = E.X, E2.X
    gens = E.Y.star.generators
    lifts = [E.rep(g) for g in gens]
    choices = [E2.fibre(g) for g in gens]
    st, st2 = X.star.table, X2.star.table
    for imgs in product(*choices):
        v = {E.k[a]: E2.k[a] for a in range(E.A.n)}
        ok = True
        for x, x2 in zip(lifts, imgs):
            if v.setdefault(x, x2) != x2:
                ok = False
        if not ok:
            continue
        seeds = list(v.items())
        frontier = list(v)
        while frontier and ok:
            a = frontier.pop()
            for b, vb in seeds:
                c, vc = st[a][b], st2[v[a]][vb]
                old = v.get(c)
                if old is None:
                    v[c] = vc
                    frontier.append(c)
                elif old != vc:
                    ok = False
                    break
        if not ok or len(v) != X.n:
            continue
        m = tuple(v[x] for x in range(X.n))
        if not is_perm(m, X.n):
            continue
        if any(E2.f[m[x]] != E.f[x] for x in range(X.n)):
            continue
        if hom_witness(X.star, X2.star, m) is None and hom_witness(X.circ, X2.circ, m) is None:
            return m
    return None


# ---------------------------------------------------------------------- fixtures

def _cyclic(n: int):
    return validate_brace(Digroup(*(validate_group([[(a + b) % n for b in range(n)] for a in range(n)]),) * 2))


def z4_over_z2() -> ExactSequence:
    """(Z2,+,+) -> (Z4,+,+) -> (Z2,+,+), a -> 2a, x -> x mod 2."""
    return make_sequence(_cyclic(2), _cyclic(4), _cyclic(2), (0, 2), (0, 1, 0, 1))


def split_v4_over_z2() -> ExactSequence:
    Z2 = _cyclic(2)
    return sequence_of_point(product_point(Z2, Z2))


def semidirect_sequence(psi_star: GroupAction, psi_circ: GroupAction) -> ExactSequence:
    return sequence_of_point(semidirect_digroup(psi_star, psi_circ))
