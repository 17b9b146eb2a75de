import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_automorphisms, is_group_table
from skewbrace import catalog
from skewbrace.errors import NoIdentityAtZero, NoInverse, NotAssociative, NotLatin, ShapeError
from skewbrace.groups import (
    GroupAction,
    actions,
    automorphisms,
    compose,
    direct_product,
    find_isomorphism,
    homomorphisms,
    invert,
    is_hom,
    perm_group,
    relabel,
    semidirect_gp,
    trivial_action,
    validate_action,
    validate_group,
)

CATALOG = catalog.groups(8)


@pytest.mark.parametrize("name,G", CATALOG, ids=[n for n, _ in CATALOG])
def test_catalog_tables_are_groups(name, G):
    assert is_group_table(G.table)
    assert all(G.table[a][G.inv[a]] == 0 for a in range(G.n))


@pytest.mark.parametrize("name,G", CATALOG, ids=[n for n, _ in CATALOG])
def test_automorphisms_match_brute_force(name, G):
    assert automorphisms(G) == brute_automorphisms(G.table)


def test_aut_orders():
    sizes = {name: len(automorphisms(G)) for name, G in CATALOG}
    assert sizes["S3"] == 6
    assert sizes["V4"] == 6
    assert sizes["Q8"] == 24
    assert sizes["D4"] == 8
    assert sizes["Z2^3"] == 168
    assert sizes["Z8"] == 4


def test_validate_group_diagnoses():
    with pytest.raises(NoIdentityAtZero):
        validate_group([[1, 0], [0, 1]])
    with pytest.raises(NotLatin) as e:
        validate_group([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
    assert e.value.witness[0] == "row"
    with pytest.raises(ShapeError):
        validate_group([[0, 1], [1]])
    # latin, identity, but not associative (order 5 loop)
    loop = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative):
        validate_group(loop)
    assert issubclass(NoInverse, Exception)


def test_perm_group_puts_identity_first():
    G, elems = perm_group([(1, 2, 0), (2, 0, 1), (0, 1, 2)])
    assert elems[0] == (0, 1, 2)
    assert G.n == 3 and G.is_abelian


def test_homomorphism_counts():
    Z2, Z4, S3 = (catalog.group(x) for x in ("Z2", "Z4", "S3"))
    assert len(homomorphisms(Z4, Z2)) == 2
    assert len(homomorphisms(S3, Z2)) == 2
    assert len(homomorphisms(Z2, S3)) == 4  # trivial plus three involutions


def test_actions_and_semidirect():
    Z2, Z3 = catalog.group("Z2"), catalog.group("Z3")
    acts = actions(Z2, Z3)
    assert len(acts) == 2
    inv = next(a for a in acts if a.perms[1] != (0, 1, 2))
    S = semidirect_gp(inv)
    assert find_isomorphism(S, catalog.group("S3")) is not None
    assert direct_product(Z2, Z3).is_abelian


def test_validate_action_rejects_non_multiplicative():
    Z2, Z3 = catalog.group("Z2"), catalog.group("Z3")
    bad = GroupAction(Z3, Z3, ((0, 1, 2), (0, 2, 1), (0, 1, 2)))
    with pytest.raises(Exception):
        validate_action(bad)
    assert validate_action(trivial_action(Z2, Z3))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([G for _, G in CATALOG if G.n <= 6]), st.randoms(use_true_random=False))
def test_relabel_is_isomorphic(G, rnd):
    rest = list(range(1, G.n))
    rnd.shuffle(rest)
    p = (0,) + tuple(rest)
    H = relabel(G, p)
    assert is_hom(G, H, p)
    assert find_isomorphism(H, G) is not None


@settings(max_examples=60, deadline=None)
@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_compose_invert(p, q):
    p, q = tuple(p), tuple(q)
    assert compose(p, invert(p)) == tuple(range(6))
    assert invert(compose(p, q)) == compose(invert(q), invert(p))
