"""Finite skew braces, digroups, their split points and extensions."""

from .braces import (
    Digroup,
    SkewBrace,
    Verdict,
    check_brace,
    enumerate_braces,
    is_brace,
    lambda_of,
    validate_brace,
    validate_digroup,
)
from .errors import AlgebraError
from .groups import FiniteGroup, GroupAction, validate_group
from .points import SplitPoint, build_with_xi, validate_point

__all__ = [
    "AlgebraError",
    "Digroup",
    "FiniteGroup",
    "GroupAction",
    "SkewBrace",
    "SplitPoint",
    "Verdict",
    "build_with_xi",
    "check_brace",
    "enumerate_braces",
    "is_brace",
    "lambda_of",
    "validate_brace",
    "validate_digroup",
    "validate_group",
    "validate_point",
]
