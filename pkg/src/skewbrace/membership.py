"""When does a digroup split point live among skew braces?

All reports evaluate every sub-condition; nothing short-circuits, because
the equivalences between the sub-conditions are themselves under test.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import (
    Digroup,
    SkewBrace,
    Verdict,
    axiom1_witness,
    check_brace,
    is_abelian_brace,
    lambda_hom_witness,
    validate_brace,
    verdict,
)
from .errors import InternalCheckFail, NotAbelianKernel, ShapeError
from .groups import GroupAction, hom_witness, is_perm, trivial_action, validate_action
from .points import SplitPoint, semidirect_digroup


def _fields_json(obj):
    out = {}
    for name in obj.__dataclass_fields__:
        v = getattr(obj, name)
        out[name] = v.to_json() if isinstance(v, Verdict) else v
    out["agree"] = obj.agree
    return out


def _kernel_lambda(P: SplitPoint, x: int):
    """lambda^X_x restricted to the kernel, in kernel labels (None if it leaves K)."""
    kd = P.kernel
    lam = P.X.lam[x]
    loc = kd.local
    out = []
    for k in kd.elems:
        v = loc.get(lam[k])
        if v is None:
            return None
        out.append(v)
    return tuple(out)


def _restricted_aut_witness(P: SplitPoint, ys):
    """First y whose lambda_{s(y)} is not a star-automorphism of K."""
    K = P.kernel.K.star
    for y in ys:
        p = _kernel_lambda(P, P.s[y])
        if p is None or not is_perm(p, K.n):
            return (y,)
        w = hom_witness(K, K, p)
        if w is not None:
            return (y,) + w
    return None


def _beta_iii_prop4_witness(P: SplitPoint):
    """lam_{s(g)} phi*_y (k) * s lam^Y_g (y) == s lam^Y_g (y) * lam_{s(g)} (k)."""
    X, Y = P.X, P.Y
    st = X.star.table
    lam, lamY = X.lam, Y.lam
    kd = P.kernel
    for g in range(Y.n):
        lg = lam[P.s[g]]
        for y in range(Y.n):
            t = P.s[lamY[g][y]]
            sy = P.s[y]
            for k in kd.elems:
                left = st[lg[X.star.conj(sy, k)]][t]
                right = st[t][lg[k]]
                if left != right:
                    return (g, y, k)
    return None


def _beta_iii_prop8_witness(P: SplitPoint):
    """lam_k phi*_y (kb) * lam_k(s(y)) == lam_k(s(y)) * lam_k(kb)."""
    X = P.X
    st = X.star.table
    lam = X.lam
    kd = P.kernel
    for y in range(P.Y.n):
        sy = P.s[y]
        for k in kd.elems:
            lk = lam[k]
            t = lk[sy]
            for kb in kd.elems:
                if st[lk[X.star.conj(sy, kb)]][t] != st[t][lk[kb]]:
                    return (y, k, kb)
    return None


def _section_witness(P: SplitPoint):
    """First k for which y -> lam_k(s(y)) is not a star-homomorphic section of f."""
    X, Y = P.X, P.Y
    lam = X.lam
    for k in P.kernel.elems:
        m = tuple(lam[k][P.s[y]] for y in range(Y.n))
        if any(P.f[m[y]] != y for y in range(Y.n)):
            return (k,)
        w = hom_witness(Y.star, X.star, m)
        if w is not None:
            return (k,) + w
    return None


@dataclass(frozen=True)
class LemmaReport:
    alpha: Verdict
    beta_i: Verdict
    beta_ii: Verdict
    beta_iii: Verdict

    @property
    def beta(self) -> bool:
        return self.beta_i.ok and self.beta_ii.ok and self.beta_iii.ok

    @property
    def agree(self) -> bool:
        return self.alpha.ok == self.beta

    def to_json(self):
        return _fields_json(self)


def lemma_prop4_report(P: SplitPoint) -> LemmaReport:
    """alpha: every lam_{s(y)} is a star-hom of X, against its three-part split."""
    sec = sorted({P.s[y] for y in range(P.Y.n)})
    alpha = lambda_hom_witness(P.X, elems=sec)
    return LemmaReport(
        alpha=verdict(alpha),
        beta_i=verdict(axiom1_witness(P.Y)),
        beta_ii=verdict(_restricted_aut_witness(P, range(P.Y.n))),
        beta_iii=verdict(_beta_iii_prop4_witness(P)),
    )


def lemma_prop8_report(P: SplitPoint) -> LemmaReport:
    """alpha: every lam_k (k in K) is a star-hom of X, against its three-part split."""
    alpha = lambda_hom_witness(P.X, elems=P.kernel.elems)
    return LemmaReport(
        alpha=verdict(alpha),
        beta_i=verdict(axiom1_witness(P.kernel.K)),
        beta_ii=verdict(_section_witness(P)),
        beta_iii=verdict(_beta_iii_prop8_witness(P)),
    )


@dataclass(frozen=True)
class MembershipVerdict:
    in_skb: bool
    section_lambdas: Verdict
    kernel_lambdas: Verdict
    direct: bool

    @property
    def agree(self) -> bool:
        return self.in_skb == self.direct

    @property
    def witness(self):
        return self.section_lambdas.witness or self.kernel_lambdas.witness

    def to_json(self):
        d = _fields_json(self)
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


def skb_membership(P: SplitPoint) -> MembershipVerdict:
    """Decide membership from lambda_{s(y)} and lambda_k alone, cross-checked
    against the brace axiom on all of X."""
    sec = sorted({P.s[y] for y in range(P.Y.n)})
    w1 = lambda_hom_witness(P.X, elems=sec)
    w2 = lambda_hom_witness(P.X, elems=P.kernel.elems)
    direct = check_brace(P.X).ok
    return MembershipVerdict(w1 is None and w2 is None, verdict(w1), verdict(w2), direct)


@dataclass(frozen=True)
class FinalReport:
    i_Y_brace: Verdict
    i_K_brace: Verdict
    ii_section_lambda_aut: Verdict
    ii_kernel_lambda_section: Verdict
    iii_kernel_equation: Verdict
    iii_section_equation: Verdict
    membership: bool

    @property
    def conjunction(self) -> bool:
        return all(
            getattr(self, name).ok
            for name in self.__dataclass_fields__
            if name != "membership"
        )

    @property
    def agree(self) -> bool:
        return self.conjunction == self.membership

    def to_json(self):
        d = _fields_json(self)
        d["conjunction"] = self.conjunction
        return d


def prop_final_report(P: SplitPoint) -> FinalReport:
    return FinalReport(
        i_Y_brace=verdict(axiom1_witness(P.Y)),
        i_K_brace=verdict(axiom1_witness(P.kernel.K)),
        ii_section_lambda_aut=verdict(_restricted_aut_witness(P, range(P.Y.n))),
        ii_kernel_lambda_section=verdict(_section_witness(P)),
        iii_kernel_equation=verdict(_beta_iii_prop8_witness(P)),
        iii_section_equation=verdict(_beta_iii_prop4_witness(P)),
        membership=skb_membership(P).in_skb,
    )


@dataclass(frozen=True)
class ActionsReport:
    c1: Verdict
    c2: Verdict
    c3: Verdict
    membership: bool

    @property
    def conjunction(self) -> bool:
        return self.c1.ok and self.c2.ok and self.c3.ok

    @property
    def agree(self) -> bool:
        return self.conjunction == self.membership

    def to_json(self):
        d = _fields_json(self)
        d["conjunction"] = self.conjunction
        return d


def actions_theorem_report(psi_star: GroupAction, psi_circ: GroupAction, Y: SkewBrace, K: SkewBrace) -> ActionsReport:
    """Three conditions on an action pair, against membership of the double
    semidirect point (Y x K, x|psi_star, x|psi_circ) -> Y."""
    psi_star = validate_action(psi_star)
    psi_circ = validate_action(psi_circ)
    if (
        psi_star.actor != Y.star
        or psi_circ.actor != Y.circ
        or psi_star.target != K.star
        or psi_circ.target != K.circ
    ):
        raise ShapeError("actions do not match the given braces")
    Ks = K.star
    ps, pc = psi_star.perms, psi_circ.perms
    w1 = None
    for y in range(Y.n):
        w = hom_witness(Ks, Ks, pc[y])
        if w is not None:
            w1 = (y,) + w
            break
    lamK = K.lam
    w2 = None
    for y in range(Y.n):
        for k in range(K.n):
            a = next((kb for kb in range(K.n) if ps[y][lamK[k][kb]] != lamK[k][ps[y][kb]]), None)
            if a is not None:
                w2 = (y, k, a)
                break
        if w2:
            break
    w3 = None
    ys, yc, yinv = Y.star.table, Y.circ.table, Y.star.inv
    for g in range(Y.n):
        pg = pc[g]
        for y in range(Y.n):
            left = ps[ys[yc[g][y]][yinv[g]]]
            # psi_circ_g psi_star_y psi_circ_g^-1, evaluated pointwise
            for kb in range(K.n):
                pre = pg.index(kb)
                if left[kb] != pg[ps[y][pre]]:
                    w3 = (g, y, kb)
                    break
            if w3:
                break
        if w3:
            break
    P = semidirect_digroup(psi_star, psi_circ)
    return ActionsReport(verdict(w1), verdict(w2), verdict(w3), skb_membership(P).in_skb)


# -------------------------------------------------------------------- examples

def _require_abelian(B: Digroup, what: str):
    if not is_abelian_brace(B):
        raise NotAbelianKernel(f"{what} must be an abelian group (A,+,+)")


def example1(psi: GroupAction) -> SplitPoint:
    """(Y x A, x|psi, product of (Y,*^op) and A) over (Y, *, *^op)."""
    psi = validate_action(psi)
    Y, A = psi.actor, psi.target
    if not A.is_abelian:
        raise NotAbelianKernel("the kernel group must be abelian")
    P = semidirect_digroup(psi, trivial_action(Y.op(), A))
    return _checked_skb(P)


def example2(Y: SkewBrace, psi: GroupAction) -> SplitPoint:
    """(Y x A, product, x|psi) over the brace Y, psi an action of (Y, o)."""
    psi = validate_action(psi)
    Y = validate_brace(Y)
    if psi.actor != Y.circ:
        raise ShapeError("psi must be an action of (Y, o)")
    if not psi.target.is_abelian:
        raise NotAbelianKernel("the kernel group must be abelian")
    P = semidirect_digroup(trivial_action(Y.star, psi.target), psi)
    return _checked_skb(P)


def example3(psi: GroupAction, variant: str = "circ") -> SplitPoint:
    """Over (B,+,+) with B, A abelian: ``variant="circ"`` twists the circ law
    (B x A, x, x|psi); ``variant="star"`` twists the star law (B x A, x|psi, x)."""
    psi = validate_action(psi)
    B, A = psi.actor, psi.target
    if not (A.is_abelian and B.is_abelian):
        raise NotAbelianKernel("both groups must be abelian")
    triv = trivial_action(B, A)
    if variant == "circ":
        P = semidirect_digroup(triv, psi)
    elif variant == "star":
        P = semidirect_digroup(psi, triv)
    else:
        raise ValueError(f"variant must be 'star' or 'circ', not {variant!r}")
    return _checked_skb(P)


def _checked_skb(P: SplitPoint) -> SplitPoint:
    v = skb_membership(P)
    if not (v.in_skb and v.direct):
        raise InternalCheckFail("example construction left SkB", v.witness)
    if not is_abelian_brace(P.kernel.K):
        raise InternalCheckFail("example kernel is not abelian")
    return P
