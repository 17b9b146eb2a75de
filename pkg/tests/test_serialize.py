import json

import pytest

from conftest import GOLDEN
from skewbrace.errors import ShapeError
from skewbrace.serialize import dumps, kind_of, load, loads, parse_brace_or_digroup, parse_group

FILES = sorted(GOLDEN.glob("*.json"))


def test_fifty_golden_files():
    assert len(FILES) == 50


@pytest.mark.parametrize("path", FILES, ids=[p.stem for p in FILES])
def test_golden_round_trip_bit_exact(path):
    text = path.read_text(encoding="utf-8")
    obj = loads(text)
    assert dumps(obj) == text
    # and the object survives a second trip unchanged
    assert loads(dumps(obj)) == obj


@pytest.mark.parametrize("path", FILES, ids=[p.stem for p in FILES])
def test_kind_matches_file_name(path):
    kind = kind_of(json.loads(path.read_text()))
    prefix = path.stem.split("_")[1]
    expected = {"brace": "digroup", "digroup": "digroup"}.get(prefix, prefix)
    assert kind == expected


def test_parse_errors():
    with pytest.raises(ShapeError):
        loads("{not json")
    with pytest.raises(ShapeError):
        load({"foo": 1})
    with pytest.raises(ShapeError):
        parse_group({"n": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ShapeError):
        parse_group({"table": [[0, "a"], [1, 0]]})


def test_brace_detection():
    d = {"n": 2, "star": [[0, 1], [1, 0]], "circ": [[0, 1], [1, 0]]}
    assert type(parse_brace_or_digroup(d)).__name__ == "SkewBrace"
