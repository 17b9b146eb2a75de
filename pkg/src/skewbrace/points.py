"""Split epimorphisms of digroups.

A point ``(f, s): X -> Y`` is a pair of carrier maps, homomorphic for both
laws, with ``f s = id``.  Its kernel ``K = f^-1(0)`` is relabeled
``0..m-1`` in increasing order of X-index (so 0 stays 0); ``embed[i]`` is
the X-element behind kernel label ``i``.

Pair carriers ``Y x K`` are linearized as ``y * |K| + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .braces import Digroup, Verdict, verdict
from .errors import (
    BadSkewingIndex,
    InternalCheckFail,
    NotHomomorphism,
    NotSection,
    SearchBoundExceeded,
    ShapeError,
)
from .groups import (
    FiniteGroup,
    GroupAction,
    automorphisms,
    compose,
    hom_witness,
    identity_perm,
    invert,
    is_perm,
    trivial_action,
    validate_action,
    validate_group,
)


@dataclass(frozen=True)
class KernelData:
    elems: tuple
    K: Digroup

    @property
    def embed(self) -> tuple:
        return self.elems

    @cached_property
    def local(self) -> dict:
        return {x: i for i, x in enumerate(self.elems)}


@dataclass(frozen=True)
class SplitPoint:
    X: Digroup
    Y: Digroup
    f: tuple
    s: tuple

    @cached_property
    def kernel(self) -> KernelData:
        return kernel_of(self)

    def to_json(self) -> dict:
        return {"X": self.X.to_json(), "Y": self.Y.to_json(), "f": list(self.f), "s": list(self.s)}


def validate_point(X: Digroup, Y: Digroup, f, s) -> SplitPoint:
    f = tuple(int(v) for v in f)
    s = tuple(int(v) for v in s)
    if len(f) != X.n or len(s) != Y.n:
        raise ShapeError("f or s has the wrong length")
    if any(not 0 <= v < Y.n for v in f) or any(not 0 <= v < X.n for v in s):
        raise ShapeError("f or s leaves its codomain")
    for name, dom, cod, m in (
        ("f (star)", X.star, Y.star, f),
        ("f (circ)", X.circ, Y.circ, f),
        ("s (star)", Y.star, X.star, s),
        ("s (circ)", Y.circ, X.circ, s),
    ):
        w = hom_witness(dom, cod, m)
        if w is not None:
            raise NotHomomorphism(f"{name} is not a homomorphism at {w}", w)
    for y in range(Y.n):
        if f[s[y]] != y:
            raise NotSection(f"f(s({y})) = {f[s[y]]}", (y,))
    return SplitPoint(X, Y, f, s)


def _induced(G: FiniteGroup, elems) -> FiniteGroup:
    local = {x: i for i, x in enumerate(elems)}
    return validate_group([[local[G.table[a][b]] for b in elems] for a in elems])


def kernel_of(P: SplitPoint) -> KernelData:
    elems = tuple(x for x in range(P.X.n) if P.f[x] == 0)
    K = Digroup(_induced(P.X.star, elems), _induced(P.X.circ, elems))
    return KernelData(elems, K)


def _conj_action(P: SplitPoint, law: str) -> GroupAction:
    kd = P.kernel
    G = getattr(P.X, law)
    loc = kd.local
    perms = tuple(
        tuple(loc[G.conj(P.s[y], k)] for k in kd.elems) for y in range(P.Y.n)
    )
    return validate_action(GroupAction(getattr(P.Y, law), getattr(kd.K, law), perms))


def canonical_actions(P: SplitPoint):
    """(phi_star, phi_circ): y acts on the kernel by conjugation with s(y)."""
    return _conj_action(P, "star"), _conj_action(P, "circ")


def chi_of(P: SplitPoint) -> tuple:
    """The index x -> (x * sf(x)^-*) o sf(x), with its invariants verified."""
    st, ct, inv = P.X.star.table, P.X.circ.table, P.X.star.inv
    chi = []
    for x in range(P.X.n):
        t = P.s[P.f[x]]
        chi.append(ct[st[x][inv[t]]][t])
    chi = tuple(chi)
    if not is_perm(chi, P.X.n):
        raise InternalCheckFail("index is not a bijection", chi)
    for x in range(P.X.n):
        if P.f[chi[x]] != P.f[x]:
            raise InternalCheckFail("index does not preserve f", (x,))
    for y in range(P.Y.n):
        if chi[P.s[y]] != P.s[y]:
            raise InternalCheckFail("index does not fix s", (y,))
    for k in P.kernel.elems:
        if chi[k] != k:
            raise InternalCheckFail("index is not the identity on the kernel", (k,))
    return chi


def skewing_index_of(P: SplitPoint) -> tuple:
    """xi_y(k) = (k o s(y)) * s(y)^-*, as permutations of kernel labels."""
    kd = P.kernel
    st, ct, inv = P.X.star.table, P.X.circ.table, P.X.star.inv
    loc = kd.local
    chi = chi_of(P)
    xi = []
    for y in range(P.Y.n):
        t = P.s[y]
        row = tuple(loc[st[ct[k][t]][inv[t]]] for k in kd.elems)
        if not is_perm(row, len(kd.elems)):
            raise InternalCheckFail(f"xi_{y} is not a bijection", (y,))
        for i, k in enumerate(kd.elems):
            if chi[st[k][t]] != st[kd.elems[row[i]]][t]:
                raise InternalCheckFail("chi(k * s(y)) != xi_y(k) * s(y)", (y, k))
        xi.append(row)
    if xi[0] != identity_perm(len(kd.elems)):
        raise InternalCheckFail("xi_0 is not the identity", (0,))
    return tuple(xi)


@dataclass(frozen=True)
class TrivialIndexReport:
    chi_identity: Verdict
    kernel_quotients_agree: Verdict
    laws_agree_on_k_s: Verdict
    xi_trivial: Verdict
    lambda_fixes_section: Verdict

    @property
    def values(self) -> tuple:
        return (
            self.chi_identity.ok,
            self.kernel_quotients_agree.ok,
            self.laws_agree_on_k_s.ok,
            self.xi_trivial.ok,
            self.lambda_fixes_section.ok,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1

    def to_json(self):
        return {
            "chi_identity": self.chi_identity.to_json(),
            "kernel_quotients_agree": self.kernel_quotients_agree.to_json(),
            "laws_agree_on_k_s": self.laws_agree_on_k_s.to_json(),
            "xi_trivial": self.xi_trivial.to_json(),
            "lambda_fixes_section": self.lambda_fixes_section.to_json(),
        }


def trivial_index_report(P: SplitPoint) -> TrivialIndexReport:
    """Evaluate the five trivial-index conditions independently of each other."""
    X = P.X
    st, ct = X.star.table, X.circ.table
    sinv, cinv = X.star.inv, X.circ.inv
    kd = P.kernel
    chi = chi_of(P)
    w1 = next(((x,) for x in range(X.n) if chi[x] != x), None)
    w2 = None
    for x in range(X.n):
        t = P.s[P.f[x]]
        if ct[x][cinv[t]] != st[x][sinv[t]]:
            w2 = (x,)
            break
    w3 = None
    for y in range(P.Y.n):
        t = P.s[y]
        k = next((k for k in kd.elems if ct[k][t] != st[k][t]), None)
        if k is not None:
            w3 = (y, k)
            break
    xi = skewing_index_of(P)
    ident = identity_perm(len(kd.elems))
    w4 = next(((y,) for y in range(P.Y.n) if xi[y] != ident), None)
    lam = X.lam
    w5 = None
    for k in kd.elems:
        y = next((y for y in range(P.Y.n) if lam[k][P.s[y]] != P.s[y]), None)
        if y is not None:
            w5 = (k, y)
            break
    return TrivialIndexReport(verdict(w1), verdict(w2), verdict(w3), verdict(w4), verdict(w5))


# ------------------------------------------------------------------ constructions

def _digroup_of_actions(psi_star: GroupAction, psi_circ: GroupAction):
    psi_star = validate_action(psi_star)
    psi_circ = validate_action(psi_circ)
    if psi_star.actor.n != psi_circ.actor.n or psi_star.target.n != psi_circ.target.n:
        raise ShapeError("the two actions live on different carriers")
    Y = Digroup(psi_star.actor, psi_circ.actor)
    K = Digroup(psi_star.target, psi_circ.target)
    return psi_star, psi_circ, Y, K


def _semidirect_table(psi: GroupAction):
    Y, K, P = psi.actor, psi.target, psi.perms
    m = K.n
    return [
        [Y.table[y][y2] * m + K.table[k][P[y][k2]] for y2 in range(Y.n) for k2 in range(m)]
        for y in range(Y.n)
        for k in range(m)
    ]


def _projection_point(X: Digroup, Y: Digroup, m: int) -> SplitPoint:
    f = tuple(i // m for i in range(X.n))
    s = tuple(y * m for y in range(Y.n))
    return validate_point(X, Y, f, s)


def semidirect_digroup(psi_star: GroupAction, psi_circ: GroupAction) -> SplitPoint:
    """(Y x K, x|psi_star, x|psi_circ) -> Y with the projection and y -> (y, 0)."""
    psi_star, psi_circ, Y, K = _digroup_of_actions(psi_star, psi_circ)
    X = Digroup(validate_group(_semidirect_table(psi_star)), validate_group(_semidirect_table(psi_circ)))
    return _projection_point(X, Y, K.n)


def validate_xi(xi, ny: int, m: int) -> tuple:
    xi = tuple(tuple(int(v) for v in row) for row in xi)
    if len(xi) != ny:
        raise BadSkewingIndex(f"xi has {len(xi)} entries, expected {ny}")
    for y, row in enumerate(xi):
        if not is_perm(row, m):
            raise BadSkewingIndex(f"xi_{y} is not a permutation of the kernel", (y,))
        if row[0] != 0:
            raise BadSkewingIndex(f"xi_{y} moves the identity", (y,))
    if xi[0] != identity_perm(m):
        raise BadSkewingIndex("xi_0 is not the identity", (0,))
    return xi


def build_with_xi(psi_star: GroupAction, psi_circ: GroupAction, xi) -> SplitPoint:
    """The point (Y x K, x|psi_star, o_xi) -> Y.

    ``o_xi`` transports ``x|psi_circ`` along (y, k) -> (y, xi_y(k)):

        (y,k) o_xi (y',k') = (y o y', xi_{y o y'}(xi_y^-1(k) o psi_y(xi_y'^-1(k'))))

    The recovered kernel, actions and skewing index are checked against the
    inputs before returning.
    """
    psi_star, psi_circ, Y, K = _digroup_of_actions(psi_star, psi_circ)
    m = K.n
    xi = validate_xi(xi, Y.n, m)
    xinv = tuple(invert(p) for p in xi)
    yc, kc, pc = Y.circ.table, K.circ.table, psi_circ.perms
    circ = []
    for y in range(Y.n):
        for k in range(m):
            a = xinv[y][k]
            row = []
            for y2 in range(Y.n):
                yy = yc[y][y2]
                out = xi[yy]
                ka = kc[a]
                py = pc[y]
                xi2 = xinv[y2]
                for k2 in range(m):
                    row.append(yy * m + out[ka[py[xi2[k2]]]])
            circ.append(row)
    X = Digroup(validate_group(_semidirect_table(psi_star)), validate_group(circ))
    P = _projection_point(X, Y, m)
    kd = P.kernel
    if kd.elems != tuple(range(m)) or kd.K != K:
        raise InternalCheckFail("recovered kernel differs from K")
    phs, phc = canonical_actions(P)
    if phs.perms != psi_star.perms or phc.perms != psi_circ.perms:
        raise InternalCheckFail("recovered actions differ from the inputs")
    if skewing_index_of(P) != xi:
        raise InternalCheckFail("recovered skewing index differs from xi")
    return P


def reconstruct(P: SplitPoint):
    """Rebuild P as (Y x K, x|phi_star, o_xi) and the comparison map.

    Returns ``(canonical_point, theta)`` where ``theta[y*m + k] = k * s(y)``
    is verified to be a two-law isomorphism onto P.X commuting with the
    projections and sections.
    """
    phs, phc = canonical_actions(P)
    xi = skewing_index_of(P)
    C = build_with_xi(phs, phc, xi)
    kd = P.kernel
    m = len(kd.elems)
    st = P.X.star.table
    theta = tuple(st[kd.elems[k]][P.s[y]] for y in range(P.Y.n) for k in range(m))
    if not is_perm(theta, P.X.n):
        raise InternalCheckFail("theta is not a bijection")
    for law in ("star", "circ"):
        w = hom_witness(getattr(C.X, law), getattr(P.X, law), theta)
        if w is not None:
            raise InternalCheckFail(f"theta is not a {law}-homomorphism at {w}", w)
    for i in range(C.X.n):
        if P.f[theta[i]] != C.f[i]:
            raise InternalCheckFail("f theta != p_Y", (i,))
    for y in range(P.Y.n):
        if theta[C.s[y]] != P.s[y]:
            raise InternalCheckFail("theta iota_Y != s", (y,))
    return C, theta


@dataclass(frozen=True)
class IdReport:
    chi_trivial: bool
    alpha_exists: bool
    alpha: tuple = None

    @property
    def agree(self) -> bool:
        return self.chi_trivial == self.alpha_exists

    def to_json(self):
        d = {"chi_trivial": self.chi_trivial, "alpha_exists": self.alpha_exists, "agree": self.agree}
        if self.alpha is not None:
            d["alpha"] = list(self.alpha)
        return d


def theorem_id_check(P: SplitPoint, bound: int = 16) -> IdReport:
    """Compare 'index trivial' with 'P is isomorphic over Y to the semidirect
    point of its own actions'.

    Any such isomorphism alpha = (f, gamma) satisfies
    gamma(x) = gamma(x * sf(x)^-*) with gamma restricted to K a
    star-automorphism, so we search over Aut(K, *) and test each candidate
    for two-law homomorphy.
    """
    if P.X.n > bound:
        raise SearchBoundExceeded(f"|X| = {P.X.n} exceeds the search bound {bound}", (P.X.n, bound))
    chi = chi_of(P)
    chi_trivial = all(chi[x] == x for x in range(P.X.n))
    phs, phc = canonical_actions(P)
    target = semidirect_digroup(phs, phc)
    kd = P.kernel
    m = len(kd.elems)
    st, inv = P.X.star.table, P.X.star.inv
    loc = kd.local
    # kernel part x * sf(x)^-* of every x
    kpart = [loc[st[x][inv[P.s[P.f[x]]]]] for x in range(P.X.n)]
    for g in automorphisms(kd.K.star):
        alpha = tuple(P.f[x] * m + g[kpart[x]] for x in range(P.X.n))
        if not is_perm(alpha, P.X.n):
            continue
        if hom_witness(P.X.star, target.X.star, alpha) is None and hom_witness(
            P.X.circ, target.X.circ, alpha
        ) is None:
            return IdReport(chi_trivial, True, alpha)
    return IdReport(chi_trivial, False)


def split_compat_check(P: SplitPoint) -> Verdict:
    """xi_y phi_circ_y == phi_star_y lambda_{s(y)} on the kernel, for every y."""
    phs, phc = canonical_actions(P)
    xi = skewing_index_of(P)
    kd = P.kernel
    lam = P.X.lam
    loc = kd.local
    for y in range(P.Y.n):
        lam_k = tuple(loc[lam[P.s[y]][k]] for k in kd.elems)
        left = compose(xi[y], phc.perms[y])
        right = compose(phs.perms[y], lam_k)
        if left != right:
            k = next(i for i in range(len(kd.elems)) if left[i] != right[i])
            return Verdict(False, (y, kd.elems[k]))
    return Verdict(True)


def identity_point(X: Digroup) -> SplitPoint:
    ident = identity_perm(X.n)
    return validate_point(X, X, ident, ident)


def product_point(Y: Digroup, K: Digroup) -> SplitPoint:
    return semidirect_digroup(trivial_action(Y.star, K.star), trivial_action(Y.circ, K.circ))
