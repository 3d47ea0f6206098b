import pytest

from gradedpi.algebra import (chain_product, is_commutative, jacobson_radical, supercenter,
                              validate_algebra, verify_wedderburn)
from gradedpi.catalog import SIGNATURES, CatalogError, build, catalog_listing, default_instances
from gradedpi.linalg import Subspace


@pytest.mark.parametrize("spec", default_instances())
def test_catalog_bodies_validate(spec):
    A = build(spec).body
    assert validate_algebra(A).ok
    if A.wedderburn is not None and not spec.startswith(("M_", "N_", "P_")):
        rep = verify_wedderburn(A)
        assert rep.ok, rep.failures


@pytest.mark.parametrize("spec", default_instances())
def test_dimensions_match_listing(spec):
    entry = build(spec)
    dim = SIGNATURES[entry.id][1]
    if dim == "p":
        dim = int(entry.params[0])
    assert entry.body.dim == dim


def test_listing_covers_every_id():
    assert {r["id"] for r in catalog_listing()} == set(SIGNATURES)


def test_commutative_group_algebras():
    for p in (2, 3, 5):
        A = build(f"A2({p})@Z{p}").body
        assert is_commutative(A) and jacobson_radical(A).dim == 0


def test_chain_through_radical():
    A = build("A6(g,1,g)@Z2").body
    e = lambda lab: A.basis_vector(A.index(lab))  # noqa: E731
    J = A.wedderburn.radical
    P = chain_product(A, [Subspace.span([e("e11+e44")], A.dim), J, Subspace.span([e("e22")], A.dim)])
    assert P.contains(e("e12"))


def test_radical_of_triangular_pattern():
    A = build("A6(1,1,1)@1").body
    assert jacobson_radical(A).dim == 6


def test_grassmann_body_supercenter():
    # body F + F c with c odd, c^2 = 1: only the even part is central in E
    A = build("E_trivial").body
    assert supercenter(A, 0).dim == 1 and supercenter(A, 1).dim == 0


@pytest.mark.parametrize("spec", ["Q1(g)@Z2", "A6(g,1)@Z2", "A2(4)@Z4", "A3@Z2", "A6(g,1,g)"])
def test_bad_specs(spec):
    with pytest.raises(CatalogError):
        build(spec)
