"""Independent brute-force oracles.

Nothing here imports the search code under test: automorphisms come from
raw permutations, braces from raw lambda assignments, extension classes
from raw bijections, and group Baer sums from 2-cocycles.
"""

from itertools import permutations, product


def is_hom_table(dt, ct, m):
    n = len(dt)
    return all(m[dt[a][b]] == ct[m[a]][m[b]] for a in range(n) for b in range(n))


def brute_automorphisms(table):
    n = len(table)
    return sorted(
        (0,) + p for p in permutations(range(1, n)) if is_hom_table(table, table, (0,) + p)
    )


def is_group_table(t):
    n = len(t)
    if any(t[0][x] != x or t[x][0] != x for x in range(n)):
        return False
    if any(sorted(r) != list(range(n)) for r in t):
        return False
    if any(sorted(t[a][b] for a in range(n)) != list(range(n)) for b in range(n)):
        return False
    return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def inverse_of(t):
    n = len(t)
    return [next(b for b in range(n) if t[a][b] == 0) for a in range(n)]


def brace_axiom_holds(star, circ):
    n = len(star)
    inv = inverse_of(star)
    return all(
        circ[a][star[b][c]] == star[star[circ[a][b]][inv[a]]][circ[a][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def brute_brace_lambdas(star):
    """Every lambda family (lam_0 = id, each lam_a in Aut) whose induced
    circ law is a group law satisfying the brace axiom."""
    n = len(star)
    auts = brute_automorphisms(star)
    ident = tuple(range(n))
    out = []
    for choice in product(auts, repeat=n - 1):
        lam = (ident,) + choice
        circ = [[star[a][lam[a][b]] for b in range(n)] for a in range(n)]
        if is_group_table(circ) and brace_axiom_holds(star, circ):
            out.append(lam)
    return sorted(out)


def yb_braid_holds(r):
    n = len(r)
    for a, b, c in product(range(n), repeat=3):
        x, y = r[a][b]
        y, z = r[y][c]
        x, y = r[x][y]
        y2, z2 = r[b][c]
        x2, y2 = r[a][y2]
        y2, z2 = r[y2][z2]
        if (x, y, z) != (x2, y2, z2):
            return False
    return True


# --------------------------------------------------------- extension oracles

def brute_equivalent(E1, E2):
    """Bijection-by-bijection search for an equivalence of sequences."""
    n = E1.X.n
    if E2.X.n != n:
        return False
    s1, c1 = E1.X.star.table, E1.X.circ.table
    s2, c2 = E2.X.star.table, E2.X.circ.table
    for p in permutations(range(n)):
        if p[0] != 0:
            continue
        if any(p[E1.k[a]] != E2.k[a] for a in range(len(E1.k))):
            continue
        if any(E2.f[p[x]] != E1.f[x] for x in range(n)):
            continue
        if is_hom_table(s1, s2, p) and is_hom_table(c1, c2, p):
            return True
    return False


def classify(seqs):
    """Partition sequences into brute-force equivalence classes."""
    classes = []
    for E in seqs:
        for cls in classes:
            if brute_equivalent(E, cls[0]):
                cls.append(E)
                break
        else:
            classes.append([E])
    return classes


def cocycle(E):
    """2-cocycle of a one-law extension (X = (G,*,*)) for the section
    y -> min fibre element; values in kernel labels."""
    st, inv = E.X.star.table, E.X.star.inv
    ny = E.Y.n
    sec = [min(x for x in range(E.X.n) if E.f[x] == y) for y in range(ny)]
    loc = {x: a for a, x in enumerate(E.k)}
    yt = E.Y.star.table
    return tuple(
        tuple(loc[st[st[sec[y1]][sec[y2]]][inv[sec[yt[y1][y2]]]]] for y2 in range(ny))
        for y1 in range(ny)
    )


def is_coboundary(c, Y, A, phi):
    """c == delta h for some h: Y -> A, where
    (delta h)(y1, y2) = h(y1) + phi_y1(h(y2)) - h(y1 y2)."""
    ny, at, ainv = Y.n, A.table, A.inv
    yt = Y.table
    for h in product(range(A.n), repeat=ny):
        if all(
            c[y1][y2] == at[at[h[y1]][phi[y1][h[y2]]]][ainv[h[yt[y1][y2]]]]
            for y1 in range(ny)
            for y2 in range(ny)
        ):
            return True
    return False


def cocycle_sum_consistent(E1, E2, S, phi):
    """Class of S equals class(E1) + class(E2) in H^2."""
    A = E1.A.star
    at, ainv = A.table, A.inv
    c1, c2, cs = cocycle(E1), cocycle(E2), cocycle(S)
    ny = E1.Y.n
    diff = tuple(
        tuple(at[cs[a][b]][ainv[at[c1[a][b]][c2[a][b]]]] for b in range(ny)) for a in range(ny)
    )
    return is_coboundary(diff, E1.Y.star, A, phi)
