import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetdet.algebra import Monomial, VariableTable
from jetdet.errors import CapExceeded, UsageError
from jetdet.groebner import MonomialIdeal
from jetdet.srcomplex import (
    FAMILY_TAGS,
    SimplicialComplexFacets,
    delta0,
    enumerate_facets_bruteforce,
    enumerate_facets_families,
    family_params,
    family_vertices,
    is_face,
    is_facet,
    minimal_transversals,
    sr_complex_from_ideal,
    star_vertex_order,
)
from oracles import exhaustive_maximal_faces


def _ideal(names, supports):
    table = VariableTable.from_names(names)
    monos = []
    for s in supports:
        exps = [0] * len(names)
        for v in s:
            exps[names.index(v)] += 1
        monos.append(Monomial.from_exponents(table, exps))
    return MonomialIdeal.from_monomials(monos)


def test_single_edge():
    C = sr_complex_from_ideal(_ideal(["x", "y"], [["x", "y"]]))
    assert C.forbidden == [0b11]
    assert enumerate_facets_bruteforce(C) == [0b01, 0b10]


def test_square_rejected():
    with pytest.raises(UsageError, match=r"x\^2"):
        sr_complex_from_ideal(_ideal(["x", "y"], [["x", "x"]]))


def test_eight_vertex_face_at_n3():
    C = delta0(3)
    S = C.mask(["x[1,1]", "x[1,2]", "x[2,2]", "x[2,3]", "y[1,3]", "z[2,1]", "z[2,2]", "z[2,3]"])
    assert is_face(S, C)
    assert not is_facet(S, C)


def test_leading_monomial_support_is_not_face():
    C = delta0(2)
    assert C.size == 12
    assert not is_face(C.mask(["x[1,2]", "x[2,1]"]), C)
    assert is_face(0, C)


def test_family_example_a_121():
    names = family_vertices("A", (1, 2, 1), 2)
    assert set(names) == {
        "x[1,1]", "x[2,1]", "x[2,2]", "y[1,1]", "y[1,2]", "z[1,1]", "z[1,2]", "z[2,1]", "z[2,2]",
    }
    C = delta0(2)
    assert is_facet(C.mask(names), C)


def test_family_counts_n2():
    counts = {tag: len(family_params(tag, 2)) for tag in FAMILY_TAGS}
    assert counts == {"A": 2, "C": 4, "D": 1, "E": 1, "F": 0}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_families_equal_bruteforce(n):
    C = delta0(n)
    fams = enumerate_facets_families(n)
    masks = [C.mask(names) for _, names in fams]
    assert len(set(masks)) == len(masks) == n ** 3
    assert all(len(names) == 3 * n + 3 for _, names in fams)
    assert sorted(masks) == enumerate_facets_bruteforce(C)


def test_vertex_order():
    assert star_vertex_order(2)[:3] == ["x[1,1]", "x[1,2]", "x[2,1]"]
    assert star_vertex_order(2)[-1] == "z[2,2]"


def test_universe_cap():
    with pytest.raises(CapExceeded):
        enumerate_facets_bruteforce(delta0(3), max_universe=10)
    with pytest.raises(CapExceeded):
        minimal_transversals([0b11, 0b1100, 0b110000], 6, max_sets=3)


def test_empty_edge_has_no_transversal():
    assert minimal_transversals([0], 3) == []


hypergraphs = st.integers(1, 16).flatmap(
    lambda size: st.tuples(
        st.just(size),
        st.lists(
            st.integers(1, (1 << size) - 1).filter(lambda m: bin(m).count("1") <= 4),
            max_size=12,
        ),
    )
)


@settings(max_examples=1000, deadline=None, derandomize=True)
@given(hypergraphs)
def test_random_squarefree_ideals(data):
    size, forbidden = data
    C = SimplicialComplexFacets([f"v{i}" for i in range(size)], forbidden)
    facets = enumerate_facets_bruteforce(C)
    assert facets == exhaustive_maximal_faces(size, forbidden)
    for F in facets:
        assert is_face(F, C) and is_facet(F, C)


def test_random_via_ideals():
    rng = random.Random(2)
    for _ in range(50):
        size = rng.randint(2, 9)
        names = [f"u{i}" for i in range(size)]
        supports = [rng.sample(names, rng.randint(1, min(3, size))) for _ in range(rng.randint(1, 6))]
        C = sr_complex_from_ideal(_ideal(names, supports))
        assert enumerate_facets_bruteforce(C) == exhaustive_maximal_faces(size, C.forbidden)
