import pytest

from jetdet.errors import UsageError
from jetdet.jets import (
    FAMILIES,
    JetIdealSpec,
    corrected_f_identity,
    expected_lm,
    gamma_basis,
    identity_rhs,
    indices,
    jet_generators,
    labeled_jet_generators,
)


def test_generator_count_2x4():
    assert len(jet_generators(JetIdealSpec(2, 4, 2, 2))) == 18


def test_order_zero_gives_plain_minors():
    gens = jet_generators(JetIdealSpec(2, 3, 2, 0))
    G = gamma_basis(3)
    assert [str(g) for g in gens] == [str(G.a(p, q)) for p, q in indices("a", 3)]


def test_first_coefficients_are_a_b_c():
    G = gamma_basis(3)
    labeled = labeled_jet_generators(JetIdealSpec(2, 3, 2, 2))
    for lab in labeled:
        (_, cols) = lab.index
        expected = {"f0": G.a, "f1": G.b, "f2": G.c}[lab.family](*cols)
        assert lab.poly == expected


def test_spec_validation():
    for bad in [(3, 2, 2, 1), (2, 3, 3, 1), (2, 3, 2, -1), (2, 3, 0, 1)]:
        with pytest.raises(UsageError):
            JetIdealSpec(*bad)


def test_gamma_sizes():
    assert len(gamma_basis(4)) == 32
    assert len(gamma_basis(3).families["g"]) == 0
    assert len(gamma_basis(2)) == 3


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_leading_monomials(n):
    G = gamma_basis(n)
    for lab in G.labeled():
        assert lab.poly.lm == expected_lm(G.table, lab.family, lab.index)


def test_index_sets():
    assert indices("f", 3) == [(1, 1, 2, 3)]
    assert len(indices("g", 5)) == 5
    with pytest.raises(UsageError):
        indices("h", 3)
    assert FAMILIES == ("a", "b", "c", "d", "e", "f", "g")


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("family", ["d", "e", "g"])
def test_identities_hold(n, family):
    G = gamma_basis(n)
    for idx in indices(family, n):
        assert G.families[family][idx] == identity_rhs(G, family, idx)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_corrected_f_expansion(n):
    G = gamma_basis(n)
    for idx in indices("f", n):
        assert G.families["f"][idx] == corrected_f_identity(G, idx)


def test_sign_flip_is_detected():
    G = gamma_basis(4)
    for family, idx in [("d", (1, 2, 3)), ("e", (1, 2, 4)), ("g", (1, 2, 3, 4))]:
        assert G.families[family][idx] == identity_rhs(G, family, idx)
        assert G.families[family][idx] != identity_rhs(G, family, idx, flip=0)


def test_repeated_columns_vanish():
    G = gamma_basis(3)
    assert G.a(2, 2).is_zero()
    assert G.d(1, 1, 3).is_zero()
