"""Command-line front end.

Exit codes: 0 verified / ok, 1 verdict false, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import baer, catalog, membership, normality, points, serialize, yangbaxter
from .braces import Digroup, check_brace, dedupe_braces, enumerate_braces, lambda_of
from .errors import AlgebraError, ShapeError
from .groups import FiniteGroup
from .serialize import dumps, kind_of, load, read

EXIT_OK, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class Result:
    def __init__(self, payload, ok=True):
        self.payload = payload
        self.ok = ok


# ------------------------------------------------------------------ rendering

def _text(obj, indent=0) -> list:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        if set(obj) <= {"ok", "witness"} and "ok" in obj:
            s = "ok" if obj["ok"] else "FAIL"
            if "witness" in obj:
                s += f" witness={obj['witness']}"
            return [pad + s]
        for k, v in obj.items():
            if isinstance(v, dict) and not (set(v) <= {"ok", "witness"} and "ok" in v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            elif isinstance(v, dict):
                lines.append(f"{pad}{k}: {_text(v)[0]}")
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return lines
    return [pad + _scalar(obj)]


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return json.dumps(v)
    return str(v)


def emit(payload, fmt: str, out):
    if fmt == "json":
        out.write(dumps(payload))
    else:
        out.write("\n".join(_text(payload)) + "\n")


# ------------------------------------------------------------------- helpers

def _load_file(path, *kinds):
    try:
        text = read(path)
    except OSError as exc:
        raise ShapeError(f"cannot read {path}: {exc.strerror}") from None
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ShapeError(f"{path}: invalid JSON: {exc}") from None
    k = kind_of(d)
    if kinds and k not in kinds:
        raise ShapeError(f"{path}: expected {' or '.join(kinds)}, got {k}")
    return load(d)


# ------------------------------------------------------------------ commands

def cmd_verify(a):
    try:
        d = json.loads(read(a.file))
    except OSError as exc:
        raise ShapeError(f"cannot read {a.file}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ShapeError(f"invalid JSON: {exc}") from None
    k = kind_of(d)
    if k not in ("group", "digroup"):
        raise ShapeError(f"verify expects a group or digroup, got {k}")
    # table defects are verdicts here, not input errors
    try:
        obj = load(d)
    except ShapeError:  # malformed input stays an input error
        raise
    except AlgebraError as exc:
        return Result({"kind": k, "ok": False, "diagnosis": exc.to_dict()}, False)
    if isinstance(obj, FiniteGroup):
        return Result({"kind": "group", "ok": True, "abelian": obj.is_abelian})
    rep = check_brace(obj)
    return Result({"kind": "digroup", "brace": rep.to_json(), "agree": rep.agree, "ok": rep.ok}, rep.ok)


def cmd_lambda(a):
    D = _load_file(a.file, "digroup")
    return Result({"n": D.n, "lambda": [list(r) for r in lambda_of(D)]})


def cmd_enumerate(a):
    if a.star:
        stars = [(a.star, catalog.group(a.star))]
        if stars[0][1].n != a.order:
            raise ShapeError(f"{a.star} has order {stars[0][1].n}, not {a.order}")
    else:
        stars = [(i, G) for i, G in catalog.groups(a.order) if G.n == a.order]
    out = []
    for name, G in stars:
        bs = enumerate_braces(G, bound=a.bound)
        if a.up_to_iso:
            bs = dedupe_braces(bs)
        out.append({"star": name, "count": len(bs), "braces": [B.to_json() for B in bs]})
    return Result({"order": a.order, "up_to_iso": a.up_to_iso, "results": out})


def cmd_split(a):
    if a.action == "build":
        ps, pc = _load_action_pair(a.file)
        if a.xi:
            d = json.loads(read(a.xi))
            xi = d["xi"] if isinstance(d, dict) and "xi" in d else d
        else:
            xi = [list(range(ps.target.n))] * ps.actor.n
        return Result(points.build_with_xi(ps, pc, xi).to_json())
    if a.action == "sample":
        from .generators import random_split_points

        rng = random.Random(a.seed)
        pts = random_split_points(rng, a.count, max_size=a.max_size)
        return Result({"seed": a.seed, "points": [P.to_json() for P in pts]})
    P = _load_file(a.file, "point")
    if a.action == "index":
        chi = points.chi_of(P)
        trivial = all(chi[x] == x for x in range(P.X.n))
        return Result({"chi": list(chi), "trivial": trivial})
    if a.action == "skewing":
        return Result({"xi": [list(r) for r in points.skewing_index_of(P)]})
    rep = points.trivial_index_report(P)
    payload = {
        "conditions": rep.to_json(),
        "agree": rep.agree,
        "split_compat": points.split_compat_check(P).to_json(),
    }
    if P.X.n <= 16:
        payload["theorem_id"] = points.theorem_id_check(P).to_json()
    payload["ok"] = rep.chi_identity.ok
    return Result(payload, rep.chi_identity.ok)


def _load_action_pair(path):
    try:
        d = json.loads(read(path))
    except (OSError, json.JSONDecodeError) as exc:
        raise ShapeError(f"cannot read actions from {path}: {exc}") from None
    return serialize.parse_action_pair(d)


def cmd_skb(a):
    P = _load_file(a.file, "point")
    v = membership.skb_membership(P)
    payload = {
        "membership": v.to_json(),
        "prop4": membership.lemma_prop4_report(P).to_json(),
        "prop8": membership.lemma_prop8_report(P).to_json(),
        "final": membership.prop_final_report(P).to_json(),
        "ok": v.in_skb,
    }
    return Result(payload, v.in_skb)


def cmd_ideal(a):
    S = _load_file(a.file, "subobject")
    ideal = normality.is_ideal(S)
    payload = {"ideal": ideal.to_json(), "normal_digroup": normality.is_normal_digroup(S).to_json(), "ok": ideal.ok}
    return Result(payload, ideal.ok)


def cmd_baer(a):
    files = a.files
    want = {"direction": 1, "sum": 2, "inverse": 1, "unit": 1, "equivalent": 2}[a.action]
    if len(files) != want:
        raise ShapeError(f"baer {a.action} takes {want} file(s)")
    if a.action == "unit":
        d = _load_file(files[0], "direction", "sequence")
        if isinstance(d, baer.ExactSequence):
            d = baer.direction_of(d)
        return Result(baer.baer_unit(d).to_json())
    seqs = [_load_file(f, "sequence") for f in files]
    if a.action == "direction":
        return Result(baer.direction_of(seqs[0]).to_json())
    if a.action == "sum":
        return Result(baer.baer_sum(*seqs).to_json())
    if a.action == "inverse":
        return Result(baer.baer_inverse(seqs[0]).to_json())
    v = baer.ext_equivalent(*seqs)
    payload = {"equivalent": v is not None, "ok": v is not None}
    if v is not None:
        payload["map"] = list(v)
    return Result(payload, v is not None)


def cmd_yb(a):
    obj = _load_file(a.file, "digroup", "yb")
    if a.action == "emit":
        if not isinstance(obj, Digroup):
            raise ShapeError("yb emit expects a brace")
        return Result(yangbaxter.yb_map(obj).to_json())
    r = obj if isinstance(obj, yangbaxter.YBMap) else yangbaxter.yb_map(obj)
    rep = yangbaxter.certify_yb(r)
    return Result(rep.to_json(), rep.ok)


def cmd_catalog(a):
    if a.action == "list":
        rows = [
            {"id": i, "order": G.n, "abelian": G.is_abelian}
            for i, G in catalog.groups(a.max_order)
        ]
        return Result({"groups": rows})
    if not a.id:
        raise ShapeError("catalog show needs an id")
    G = catalog.group(a.id)
    if a.brace == "trivial":
        return Result(Digroup(G, G).to_json())
    if a.brace == "opposite":
        return Result(Digroup(G, G.op()).to_json())
    return Result(G.to_json())


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="skewbrace", description="Finite skew brace toolkit.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="diagnose a group or digroup file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("lambda", parents=[common], help="print the lambda table of a digroup")
    s.add_argument("file")
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("enumerate", parents=[common], help="all skew braces on catalog star tables")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--star", help="catalog id of the star group")
    s.add_argument("--up-to-iso", action="store_true")
    s.add_argument("--bound", type=int, default=8)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("split", parents=[common], help="split point tools")
    s.add_argument("action", choices=("index", "skewing", "report", "build", "sample"))
    s.add_argument("file", nargs="?")
    s.add_argument("--actions", help="JSON with 'star' and 'circ' actions (for build)")
    s.add_argument("--xi", help="JSON skewing index (for build)")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--max-size", type=int, default=16)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("skb", parents=[common], help="membership of a split point in skew braces")
    s.add_argument("action", choices=("check",))
    s.add_argument("file")
    s.set_defaults(func=cmd_skb)

    s = sub.add_parser("ideal", parents=[common], help="ideal test for a subobject")
    s.add_argument("action", choices=("check",))
    s.add_argument("file")
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("baer", parents=[common], help="extensions and Baer sums")
    s.add_argument("action", choices=("direction", "sum", "inverse", "unit", "equivalent"))
    s.add_argument("files", nargs="+")
    s.set_defaults(func=cmd_baer)

    s = sub.add_parser("yb", parents=[common], help="Yang-Baxter maps")
    s.add_argument("action", choices=("emit", "certify"))
    s.add_argument("file")
    s.set_defaults(func=cmd_yb)

    s = sub.add_parser("catalog", parents=[common], help="small groups catalog")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("id", nargs="?")
    s.add_argument("--max-order", type=int, default=8)
    s.add_argument("--brace", choices=("trivial", "opposite"))
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    if a.command == "split":
        if a.action == "build":
            if not a.actions:
                err.write("split build needs --actions\n")
                return EXIT_ERROR
            a.file = a.actions
        elif a.action != "sample" and not a.file:
            err.write(f"split {a.action} needs a point file\n")
            return EXIT_ERROR
    try:
        res = a.func(a)
    except AlgebraError as exc:
        emit(exc.to_dict(), a.format, err)
        return EXIT_ERROR
    except KeyError as exc:
        err.write(f"unknown id: {exc}\n")
        return EXIT_ERROR
    emit(res.payload, a.format, out)
    return EXIT_OK if res.ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
