import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

from skewbrace import catalog  # noqa: E402
from skewbrace.braces import Digroup, opposite_brace, trivial_brace  # noqa: E402
from skewbrace.points import validate_point  # noqa: E402
from skewbrace.serialize import load  # noqa: E402

DATA = HERE / "data"
GOLDEN = HERE / "golden"

# acceptance lines collected during the run, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


def load_data(name):
    return load(json.loads((DATA / name).read_text()))


def s3_sign_point():
    """(S3, *, *^op) -> (Z2, +, +): sign map, section hitting the transposition 3."""
    S3 = catalog.group("S3")
    Z2 = catalog.group("Z2")
    X = Digroup(S3, S3.op())
    Y = Digroup(Z2, Z2)
    f = [0 if x < 3 else 1 for x in range(6)]
    return validate_point(X, Y, f, [0, 3])


@pytest.fixture
def s3_point():
    return s3_sign_point()


@pytest.fixture
def z4():
    return trivial_brace(catalog.group("Z4"))


@pytest.fixture
def s3_opp():
    return opposite_brace(catalog.group("S3"))
