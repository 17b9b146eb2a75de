"""Regenerate src/skewbrace/data/catalog.json.

One fixed Cayley table per isomorphism class of order <= 8, identity at 0.
Run from the repo root:  python3 tools/make_catalog.py
"""

import json
import pathlib
from itertools import product

OUT = pathlib.Path(__file__).resolve().parent.parent / "src/skewbrace/data/catalog.json"


def table_of(elements, mul):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[mul(a, b)] for b in elements] for a in elements]


def cyclic(n):
    return table_of(list(range(n)), lambda a, b: (a + b) % n)


def abelian(*mods):
    elems = list(product(*[range(m) for m in mods]))
    return table_of(elems, lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, mods)))


def s3():
    # id, (012), (021), (01), (02), (12); table[a][b] = a after b
    elems = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    return table_of(elems, lambda p, q: tuple(p[i] for i in q))


def dihedral4():
    # (r, f) means rotation^r then optional flip; rotations first
    elems = [(r, 0) for r in range(4)] + [(r, 1) for r in range(4)]

    def mul(a, b):
        r1, f1 = a
        r2, f2 = b
        return ((r1 + (-r2 if f1 else r2)) % 4, f1 ^ f2)

    return table_of(elems, mul)


def quaternion():
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    basis = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]

    def mul(a, b):
        s, ax = basis[(a[1], b[1])]
        return (a[0] * b[0] * s, ax)

    return table_of(elems, mul)


CATALOG = {
    "Z1": cyclic(1),
    "Z2": cyclic(2),
    "Z3": cyclic(3),
    "Z4": cyclic(4),
    "V4": abelian(2, 2),
    "Z5": cyclic(5),
    "Z6": cyclic(6),
    "S3": s3(),
    "Z7": cyclic(7),
    "Z8": cyclic(8),
    "Z4xZ2": abelian(4, 2),
    "Z2^3": abelian(2, 2, 2),
    "D4": dihedral4(),
    "Q8": quaternion(),
}


if __name__ == "__main__":
    lines = ["{"]
    items = list(CATALOG.items())
    for i, (name, table) in enumerate(items):
        comma = "," if i < len(items) - 1 else ""
        lines.append(f'  "{name}": {json.dumps(table)}{comma}')
    lines.append("}")
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(CATALOG)} groups to {OUT}")
