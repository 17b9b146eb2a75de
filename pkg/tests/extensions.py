"""Sequence suites shared by the Baer tests and the acceptance run."""

from functools import lru_cache

from oracles import classify
from skewbrace import baer, catalog
from skewbrace.braces import is_brace, trivial_brace
from skewbrace.errors import AlgebraError
from skewbrace.generators import all_actions, braces, digroups
from skewbrace.groups import automorphisms, find_isomorphism, invert
from skewbrace.membership import example1, example2
from skewbrace.normality import induced, quotient_by_ideal, subobject


def _canonical(G):
    for name in catalog.ids(G.n):
        H = catalog.group(name)
        if H.n == G.n:
            iso = find_isomorphism(G, H)
            if iso is not None:
                return H, iso
    raise AssertionError("group missing from the catalog")


def _abelian_normal_subgroups(G):
    found = set()
    for a in range(1, G.n):
        for b in range(a, G.n):
            H = G.generated([a, b])
            if 1 < len(H) < G.n and G.is_normal(H):
                found.add(tuple(sorted(H)))
    out = []
    for H in sorted(found):
        if all(G.table[x][y] == G.table[y][x] for x in H for y in H):
            out.append(H)
    return out


@lru_cache(maxsize=None)
def group_extensions(max_order=8):
    """One-law sequences N -> G -> G/N over catalog groups, N abelian normal,
    transported onto catalog tables for A and Y, twisted by Aut(A)."""
    out = []
    for name, G in catalog.groups(max_order):
        X = trivial_brace(G)
        for N in _abelian_normal_subgroups(G):
            S = subobject(X, N)
            Q, proj = quotient_by_ideal(S)
            Acat, ia = _canonical(induced(S).star)
            Ycat, iy = _canonical(Q.star)
            ia_inv = invert(ia)
            k = tuple(N[ia_inv[a]] for a in range(len(N)))
            f = tuple(iy[proj[x]] for x in range(G.n))
            A, Y = trivial_brace(Acat), trivial_brace(Ycat)
            for alpha in automorphisms(Acat):
                out.append(baer.make_sequence(A, X, Y, tuple(k[alpha[a]] for a in range(A.n)), f))
    return tuple(out)


def direction_key(E):
    d = baer.direction_of(E)
    return (d.Y, d.A, d.phi_star, d.phi_circ, d.xi)


def families(seqs):
    """Group sequences by direction, keeping families with at least two members."""
    fam = {}
    for E in seqs:
        fam.setdefault(direction_key(E), []).append(E)
    return [v for v in fam.values() if len(v) >= 2]


@lru_cache(maxsize=None)
def example_sequences():
    """Sequences of example1/example2 points with small carriers."""
    out = []
    for ny in (2, 3):
        for _, Yg in catalog.groups(ny):
            if Yg.n != ny:
                continue
            for na in (2, 3, 4):
                for _, A in catalog.groups(na, abelian=True):
                    if A.n != na:
                        continue
                    for psi in all_actions(Yg, A):
                        out.append(baer.sequence_of_point(example1(psi)))
    for Y in braces(2) + braces(4):
        for _, A in catalog.groups(3, abelian=True):
            if A.n < 2:
                continue
            for psi in all_actions(Y.circ, A):
                out.append(baer.sequence_of_point(example2(Y, psi)))
    return tuple(out)


@lru_cache(maxsize=None)
def z2_by_z2_sequences():
    """Every sequence (Z2,+,+) -> X -> (Z2,+,+) with |X| = 4 and trivial
    direction, over all labeled order-4 braces X."""
    Z2 = trivial_brace(catalog.group("Z2"))
    triv = baer.trivial_direction(Z2, Z2)
    out = []
    for X in digroups(4):
        if not is_brace(X):
            continue
        for k1 in range(1, 4):
            for ones in ((1, 2), (1, 3), (2, 3)):
                f = tuple(1 if x in ones else 0 for x in range(4))
                try:
                    E = baer.make_sequence(Z2, baer.validate_brace(X), Z2, (0, k1), f)
                except AlgebraError:
                    continue
                if baer.direction_mismatch(baer.direction_of(E), triv) is None:
                    out.append(E)
    return tuple(out)


@lru_cache(maxsize=None)
def z2_by_z2_classes():
    return tuple(tuple(c) for c in classify(z2_by_z2_sequences()))


def class_index(E):
    from oracles import brute_equivalent

    for i, cls in enumerate(z2_by_z2_classes()):
        if brute_equivalent(E, cls[0]):
            return i
    return None
