import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brace_axiom_holds, brute_brace_lambdas
from skewbrace import catalog
from skewbrace.braces import (
    Digroup,
    brace_from_lambda,
    brace_isomorphism,
    check_brace,
    dedupe_braces,
    enumerate_braces,
    is_abelian_brace,
    is_brace,
    lambda_of,
    opposite_brace,
    trivial_brace,
    validate_brace,
    validate_digroup,
)
from skewbrace.errors import (
    BoundExceeded,
    NotABrace,
    NotAutomorphism,
    NotUnital,
    SizeMismatch,
)
from skewbrace.generators import digroups


def test_trivial_brace_lambda_is_identity(z4):
    assert all(row == tuple(range(4)) for row in z4.lam)


def test_opposite_brace_lambda_is_conjugation(s3_opp):
    S3 = s3_opp.star
    for a in range(6):
        for b in range(6):
            assert s3_opp.lam[a][b] == S3.conj(S3.inv[a], b)


def test_validate_digroup_tags_law():
    Z2 = catalog.group("Z2")
    with pytest.raises(SizeMismatch):
        validate_digroup(Z2, catalog.group("Z3"))
    with pytest.raises(Exception) as e:
        validate_digroup([[0, 1], [1, 0]], [[1, 0], [0, 1]])
    assert "circ" in str(e.value)


def test_non_brace_digroup_has_witness():
    # Z4 star with a relabeled Z4 circ that is not a brace
    from skewbrace.groups import relabel

    Z4 = catalog.group("Z4")
    D = Digroup(Z4, relabel(Z4, (0, 2, 1, 3)))
    rep = check_brace(D)
    assert not rep.ok and rep.agree
    assert rep.axiom1.witness is not None
    with pytest.raises(NotABrace):
        validate_brace(D)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_check_brace_agrees_exhaustively(n):
    for D in digroups(n):
        rep = check_brace(D)
        assert rep.agree, D
        assert rep.axiom1.ok == brace_axiom_holds(D.star.table, D.circ.table)


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3"])
def test_enumeration_matches_lambda_brute_force(name):
    G = catalog.group(name)
    fast = sorted(B.lam for B in enumerate_braces(G))
    assert fast == brute_brace_lambdas(G.table)


# census of braces up to isomorphism on each additive group
CENSUS = {"Z4": 2, "V4": 2, "Z6": 2, "S3": 4, "Z8": 5, "Z4xZ2": 14, "Z2^3": 8, "D4": 12, "Q8": 8}


@pytest.mark.parametrize("name,count", sorted(CENSUS.items()))
def test_census_up_to_isomorphism(name, count):
    assert len(dedupe_braces(enumerate_braces(catalog.group(name)))) == count


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_braces(catalog.group("Q8"), bound=7)


def test_brace_from_lambda_errors():
    Z3 = catalog.group("Z3")
    with pytest.raises(NotUnital):
        brace_from_lambda(Z3, [(0, 2, 1), (0, 1, 2), (0, 1, 2)])
    with pytest.raises(NotAutomorphism):
        brace_from_lambda(Z3, [(0, 1, 2), (1, 0, 2), (0, 1, 2)])
    B = brace_from_lambda(Z3, [(0, 1, 2)] * 3)
    assert B == trivial_brace(Z3)


@pytest.mark.parametrize("name,G", catalog.groups(8), ids=[n for n, _ in catalog.groups(8)])
def test_trivial_and_opposite_are_braces(name, G):
    assert is_brace(trivial_brace(G))
    assert is_brace(opposite_brace(G))
    assert is_abelian_brace(trivial_brace(G)) == G.is_abelian


def test_trivial_vs_opposite_isomorphism():
    # lambda is trivial in one, conjugation in the other
    S3 = catalog.group("S3")
    assert brace_isomorphism(trivial_brace(S3), opposite_brace(S3)) is None
    Z6 = catalog.group("Z6")
    assert trivial_brace(Z6) == opposite_brace(Z6)
    p = (0, 2, 1, 3, 5, 4)
    assert brace_isomorphism(opposite_brace(S3), opposite_brace(S3), [p]) == p
    assert brace_isomorphism(trivial_brace(catalog.group("Z4")), trivial_brace(catalog.group("V4"))) is None


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(enumerate_braces(catalog.group("D4"))))
def test_lambda_is_multiplicative(B):
    lam = lambda_of(B)
    ct = B.circ.table
    for a in range(B.n):
        for b in range(B.n):
            assert lam[ct[a][b]] == tuple(lam[a][lam[b][c]] for c in range(B.n))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(digroups(4)))
def test_lambda_determines_circ(D):
    lam = lambda_of(D)
    st_ = D.star.table
    assert all(D.circ.table[a][b] == st_[a][lam[a][b]] for a in range(4) for b in range(4))
