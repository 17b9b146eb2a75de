"""Set-theoretic solutions of the Yang-Baxter equation from skew braces.

Convention (Guarnieri-Vendramin):

    r(a, b) = (lam_a(b), lam_a(b)^-o o a o b)
"""

from __future__ import annotations

from dataclasses import dataclass

from .braces import Verdict, validate_brace, verdict
from .errors import ShapeError


@dataclass(frozen=True)
class YBMap:
    n: int
    r: tuple  # r[a][b] == (u, v)

    def __call__(self, a: int, b: int) -> tuple:
        return self.r[a][b]

    def to_json(self) -> dict:
        return {"n": self.n, "r": [[list(p) for p in row] for row in self.r]}


def make_yb(n: int, r) -> YBMap:
    r = tuple(tuple((int(p[0]), int(p[1])) for p in row) for row in r)
    if len(r) != n or any(len(row) != n for row in r):
        raise ShapeError(f"r must be an {n} x {n} table of pairs")
    if any(not (0 <= u < n and 0 <= v < n) for row in r for u, v in row):
        raise ShapeError("r leaves the carrier")
    return YBMap(n, r)


def yb_map(B) -> YBMap:
    B = validate_brace(B)
    ct, cinv = B.circ.table, B.circ.inv
    lam = B.lam
    n = B.n
    r = []
    for a in range(n):
        row = []
        for b in range(n):
            u = lam[a][b]
            row.append((u, ct[cinv[u]][ct[a][b]]))
        r.append(tuple(row))
    return YBMap(n, tuple(r))


def flip(n: int) -> YBMap:
    return YBMap(n, tuple(tuple((b, a) for b in range(n)) for a in range(n)))


@dataclass(frozen=True)
class YBReport:
    braid: Verdict
    bijective: bool
    left_nondeg: bool
    right_nondeg: bool

    @property
    def ok(self) -> bool:
        return self.braid.ok and self.bijective and self.left_nondeg and self.right_nondeg

    def to_json(self):
        return {
            "braid": self.braid.to_json(),
            "bijective": self.bijective,
            "left_nondeg": self.left_nondeg,
            "right_nondeg": self.right_nondeg,
            "ok": self.ok,
        }


def braid_witness(r: YBMap):
    """First (a, b, c) where r12 r23 r12 and r23 r12 r23 differ."""
    R = r.r
    n = r.n
    for a in range(n):
        for b in range(n):
            for c in range(n):
                # left side: r12, then r23, then r12
                x, y = R[a][b]
                y, z = R[y][c]
                x, y = R[x][y]
                left = (x, y, z)
                # right side: r23, then r12, then r23
                y2, z2 = R[b][c]
                x2, y2 = R[a][y2]
                y2, z2 = R[y2][z2]
                if left != (x2, y2, z2):
                    return (a, b, c)
    return None


def certify_yb(r: YBMap) -> YBReport:
    n = r.n
    R = r.r
    images = {R[a][b] for a in range(n) for b in range(n)}
    left = all(len({R[a][b][0] for b in range(n)}) == n for a in range(n))
    right = all(len({R[a][b][1] for a in range(n)}) == n for b in range(n))
    return YBReport(verdict(braid_witness(r)), len(images) == n * n, left, right)
