import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load_data
from skewbrace import catalog
from skewbrace.braces import trivial_brace
from skewbrace.errors import NotAbelianKernel
from skewbrace.generators import all_actions, braces, random_split_points
from skewbrace.groups import GroupAction, trivial_action
from skewbrace.membership import (
    actions_theorem_report,
    example1,
    example2,
    example3,
    lemma_prop4_report,
    lemma_prop8_report,
    prop_final_report,
    skb_membership,
)
from skewbrace.points import product_point, trivial_index_report

POINTS = random_split_points(random.Random(23), 300, max_size=12)
TRIVIAL_INDEX = [P for P in POINTS if trivial_index_report(P).chi_identity.ok]


def test_pool_has_both_kinds():
    assert 50 < len(TRIVIAL_INDEX) < len(POINTS)
    kinds = {skb_membership(P).in_skb for P in POINTS}
    assert kinds == {True, False}


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(POINTS))
def test_membership_matches_direct_check(P):
    assert skb_membership(P).agree


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(POINTS))
def test_forward_directions(P):
    for rep in (lemma_prop4_report(P), lemma_prop8_report(P)):
        if rep.alpha.ok:
            assert rep.beta
    fin = prop_final_report(P)
    if fin.membership:
        assert fin.conjunction


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TRIVIAL_INDEX))
def test_equivalences_on_trivial_index_points(P):
    assert lemma_prop4_report(P).agree
    assert lemma_prop8_report(P).agree
    assert prop_final_report(P).agree


@pytest.mark.xfail(strict=True, reason="beta does not imply alpha when the index is non-trivial")
@pytest.mark.parametrize(
    "name,report",
    [
        ("prop4_counterexample.json", lemma_prop4_report),
        ("prop8_counterexample.json", lemma_prop8_report),
        ("final_counterexample.json", prop_final_report),
    ],
)
def test_stated_equivalence_on_frozen_counterexamples(name, report):
    assert report(load_data(name)).agree


@pytest.mark.parametrize(
    "name,report",
    [
        ("prop4_counterexample.json", lemma_prop4_report),
        ("prop8_counterexample.json", lemma_prop8_report),
    ],
)
def test_counterexamples_are_what_they_claim(name, report):
    P = load_data(name)
    rep = report(P)
    assert rep.beta and not rep.alpha.ok
    assert not trivial_index_report(P).chi_identity.ok
    assert not skb_membership(P).in_skb


def test_prop4_counterexample_shape():
    P = load_data("prop4_counterexample.json")
    assert (P.X.n, P.Y.n) == (9, 3)
    assert P.f == (0, 0, 0, 1, 1, 1, 2, 2, 2) and P.s == (0, 3, 6)
    assert lemma_prop4_report(P).alpha.witness == (3, 1, 6)


def test_missing_condition_separates_counterexample():
    # lam_{s(g)}(k * s(y)) == lam_{s(g)}(k) * lam_{s(g)}(s(y)) fails there
    P = load_data("prop4_counterexample.json")
    X = P.X
    st_, lam = X.star.table, X.lam
    bad = [
        (g, y, k)
        for g in range(P.Y.n)
        for y in range(P.Y.n)
        for k in P.kernel.elems
        if lam[P.s[g]][st_[k][P.s[y]]] != st_[lam[P.s[g]][k]][lam[P.s[g]][P.s[y]]]
    ]
    assert bad


def test_skb_failing_point_has_witness():
    P = load_data("skb_fail_point.json")
    v = skb_membership(P)
    assert not v.in_skb and v.agree
    assert v.section_lambdas.witness == (4, 1, 1)


def test_product_of_braces_is_in_skb(s3_opp):
    P = product_point(s3_opp, trivial_brace(catalog.group("Z3")))
    assert skb_membership(P).in_skb
    assert lemma_prop4_report(P).beta and lemma_prop8_report(P).beta


def test_s3_sign_point_is_in_skb(s3_point):
    v = skb_membership(s3_point)
    assert v.in_skb and v.direct
    assert prop_final_report(s3_point).conjunction


def test_actions_theorem_small_exhaustive():
    for Y in braces(2) + braces(3):
        for K in braces(2) + braces(3):
            for ps in all_actions(Y.star, K.star):
                for pc in all_actions(Y.circ, K.circ):
                    assert actions_theorem_report(ps, pc, Y, K).agree


def test_actions_theorem_c3_only_failure():
    Z2 = trivial_brace(catalog.group("Z2"))
    V4 = trivial_brace(catalog.group("V4"))
    ps = GroupAction(Z2.star, V4.star, ((0, 1, 2, 3), (0, 1, 3, 2)))
    pc = GroupAction(Z2.circ, V4.circ, ((0, 1, 2, 3), (0, 2, 1, 3)))
    rep = actions_theorem_report(ps, pc, Z2, V4)
    assert rep.c1.ok and rep.c2.ok and not rep.c3.ok
    assert rep.c3.witness == (1, 1, 1)
    assert not rep.membership and rep.agree


def test_examples_are_in_skb_with_abelian_kernel():
    Z2, Z3 = catalog.group("Z2"), catalog.group("Z3")
    inv = next(a for a in all_actions(Z2, Z3) if a.perms[1] == (0, 2, 1))
    assert skb_membership(example1(inv)).in_skb
    Y = trivial_brace(Z2)
    assert example2(Y, inv).X.n == 6
    assert example3(inv, "circ").kernel.elems == (0, 1, 2)
    assert example3(inv, "star").kernel.elems == (0, 1, 2)
    with pytest.raises(ValueError):
        example3(inv, "both")


def test_examples_reject_non_abelian_kernel():
    Z2, S3 = catalog.group("Z2"), catalog.group("S3")
    with pytest.raises(NotAbelianKernel):
        example1(trivial_action(Z2, S3))
    with pytest.raises(NotAbelianKernel):
        example3(trivial_action(Z2, S3))
