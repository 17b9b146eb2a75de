"""Regenerate tests/golden/*.json and the CLI fixtures in tests/data/.

Every file is written with the canonical printer, so the round-trip test
can compare bytes.  Run from the repository root.
"""

import random
from pathlib import Path

from skewbrace import baer, catalog
from skewbrace.braces import Digroup, enumerate_braces, opposite_brace, trivial_brace
from skewbrace.generators import all_actions, random_split_points
from skewbrace.groups import relabel
from skewbrace.membership import example1, example2
from skewbrace.normality import subobject
from skewbrace.points import validate_point
from skewbrace.serialize import dumps
from skewbrace.yangbaxter import flip, yb_map

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
DATA = ROOT / "tests" / "data"


def values():
    out = []
    for name, G in catalog.groups(8):
        out.append((f"group_{name}", G))

    S3, D4, Q8, Z4 = (catalog.group(x) for x in ("S3", "D4", "Q8", "Z4"))
    Z2, Z3 = catalog.group("Z2"), catalog.group("Z3")
    out += [
        ("brace_S3_trivial", trivial_brace(S3)),
        ("brace_S3_opposite", opposite_brace(S3)),
        ("brace_D4_opposite", opposite_brace(D4)),
        ("brace_Q8_opposite", opposite_brace(Q8)),
        ("brace_Z4_nontrivial", enumerate_braces(Z4)[-1]),
        ("brace_D4_first", enumerate_braces(D4)[1]),
        ("brace_Q8_last", enumerate_braces(Q8)[-1]),
        ("digroup_not_brace", Digroup(Z4, relabel(Z4, (0, 2, 1, 3)))),
    ]

    acts = all_actions(Z2, Z3) + all_actions(Z2, catalog.group("V4"))[1:3]
    out += [(f"action_{i}", a) for i, a in enumerate(acts)]

    sign = validate_point(
        Digroup(S3, S3.op()), Digroup(Z2, Z2), [0 if x < 3 else 1 for x in range(6)], [0, 3]
    )
    out.append(("point_s3_sign", sign))
    for i, P in enumerate(random_split_points(random.Random(2024), 7, max_size=12)):
        out.append((f"point_random_{i}", P))

    B = opposite_brace(S3)
    out += [
        ("subobject_a3", subobject(B, [0, 1, 2])),
        ("subobject_zero", subobject(B, [0])),
        ("subobject_transposition", subobject(trivial_brace(S3), [0, 3])),
    ]

    inv = next(a for a in all_actions(Z2, Z3) if a.perms[1] == (0, 2, 1))
    E = baer.z4_over_z2()
    e1 = baer.sequence_of_point(example1(inv))
    e2 = baer.sequence_of_point(example2(trivial_brace(Z2), inv))
    out += [
        ("sequence_z4_over_z2", E),
        ("sequence_v4_over_z2", baer.split_v4_over_z2()),
        ("sequence_example1", e1),
        ("sequence_example2", e2),
        ("sequence_z4_self_sum", baer.baer_sum(E, E)),
    ]
    out += [
        ("direction_z4_over_z2", baer.direction_of(E)),
        ("direction_example1", baer.direction_of(e1)),
        ("direction_example2", baer.direction_of(e2)),
    ]
    out += [
        ("yb_flip_3", flip(3)),
        ("yb_s3_trivial", yb_map(trivial_brace(S3))),
        ("yb_s3_opposite", yb_map(opposite_brace(S3))),
        ("yb_z4_nontrivial", yb_map(enumerate_braces(Z4)[-1])),
        ("yb_d4_first", yb_map(enumerate_braces(D4)[1])),
    ]
    return out


def main():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for old in GOLDEN.glob("*.json"):
        old.unlink()
    vals = values()
    for i, (name, v) in enumerate(vals):
        (GOLDEN / f"{i:02d}_{name}.json").write_text(dumps(v), encoding="utf-8")
    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "z4_trivial_brace.json").write_text(dumps(trivial_brace(catalog.group("Z4"))), encoding="utf-8")
    (DATA / "malformed.json").write_text('{"n": 2, "star": [[0, 1], [1, 0]]', encoding="utf-8")
    E = baer.z4_over_z2()
    (DATA / "z4_over_z2.json").write_text(dumps(E), encoding="utf-8")
    (DATA / "v4_over_z2.json").write_text(dumps(baer.split_v4_over_z2()), encoding="utf-8")
    print(f"wrote {len(vals)} golden files")


if __name__ == "__main__":
    main()
