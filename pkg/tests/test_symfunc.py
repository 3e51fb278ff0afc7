from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from pyjcsf.core import PreconditionError, ResourceCapError
from pyjcsf.partitions import IntPartition, enumerate_partitions, conjugate
from pyjcsf.symfunc import (
    BASES, SymPoly, basis_element, PathDigraph, xi_basis_element, xi_to_m_closed_form, enumerate_ssyt,
    kostka_matrix, convert, transition_matrix, omega, omega_matrix_augmented, sign_c_matrix, multiply,
    principal_specialization
)


def m(terms):
    return SymPoly("m", terms)


@st.composite
def sym_poly_strategy(draw, basis="m", max_degree=4):
    d = draw(st.integers(min_value=1, max_value=max_degree))
    a_partition_list = enumerate_partitions(d)
    coefficients = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                                 min_size=len(a_partition_list), max_size=len(a_partition_list)))
    return SymPoly(basis, dict(zip(a_partition_list, coefficients)))


def test_sympoly_canonical_form():
    f = m({(2, 1): 1, (1, 1, 1): 0, (3,): Fraction(1, 2)})
    assert f == m({(3,): Fraction(1, 2), (2, 1): 1})
    assert list(f.terms) == [(3,), (2, 1)]
    assert f.coefficient((1, 1, 1)) == 0
    assert m({}).is_zero()
    assert m({(1,): 1}) != SymPoly("p", {(1,): 1})


def test_sympoly_refuses_floats_and_unknown_bases():
    with pytest.raises(TypeError):
        m({(1,): 0.5})
    with pytest.raises(ValueError):
        SymPoly("q", {(1,): 1})
    with pytest.raises(ValueError):
        m({(1, 2): 1})


def test_sympoly_arithmetic():
    f = m({(2,): 1, (1, 1): 2})
    assert f - f == m({})
    assert 2 * f == m({(2,): 2, (1, 1): 4})
    assert (f + m({(2,): -1})) == m({(1, 1): 2})
    with pytest.raises(ValueError):
        f + SymPoly("p", {(2,): 1})
    with pytest.raises(TypeError):
        f + 1


def test_sympoly_json():
    f = m({(2, 1): Fraction(-1, 2), (): 3})
    assert f.to_json() == {"basis": "m", "terms": [{"partition": [], "num": "3", "den": "1"},
                                                   {"partition": [2, 1], "num": "-1", "den": "2"}]}
    assert SymPoly.from_json(f.to_json()) == f
    assert f.term_map() == {"-": "3", "2,1": "-1/2"}


def test_degree_components():
    f = m({(1,): 1, (2,): 3, (1, 1): 1})
    assert f.degree_components() == {1: m({(1,): 1}), 2: m({(2,): 3, (1, 1): 1})}


def test_path_digraph():
    a_digraph = PathDigraph((3, 1))
    assert len(a_digraph.edges) == 2
    assert len(list(a_digraph.edge_subsets())) == 4
    assert a_digraph.component_partition(frozenset()) == (1, 1, 1, 1)
    assert a_digraph.component_partition(frozenset(a_digraph.edges)) == (3, 1)


def test_xi_examples():
    assert xi_basis_element((1,)) == m({(1,): 1})
    assert xi_basis_element((1, 1)) == m({(1, 1): 1})
    assert xi_basis_element((2,)) == m({(2,): 1, (1, 1): 1})
    assert xi_basis_element((2, 1)) == m({(2, 1): Fraction(1, 2), (1, 1, 1): 1})
    assert xi_basis_element((3,)) == m({(3,): 1, (2, 1): 1, (1, 1, 1): 1})
    with pytest.raises(PreconditionError):
        xi_basis_element(())


@pytest.mark.parametrize("d", range(1, 6))
def test_xi_closed_form_matches_definition(d):
    for mu in enumerate_partitions(d):
        assert xi_to_m_closed_form(mu) == xi_basis_element(mu)


@pytest.mark.slow
@pytest.mark.parametrize("d", [6, 7])
def test_xi_closed_form_matches_definition_large(d):
    for mu in enumerate_partitions(d):
        assert xi_to_m_closed_form(mu) == xi_basis_element(mu)


@pytest.mark.parametrize("d", range(1, 6))
def test_xi_is_a_basis(d):
    assert transition_matrix("xi", "m", d).det() != 0


def test_ssyt_and_kostka():
    assert len(list(enumerate_ssyt((2, 1), (1, 1, 1)))) == 2
    assert list(enumerate_ssyt((2,), (1, 1))) == [((1, 2),)]
    assert list(enumerate_ssyt((2,), (1, 2))) == []
    a_matrix = kostka_matrix(3)
    assert a_matrix == sympy.Matrix([[1, 1, 1], [0, 1, 2], [0, 0, 1]])


@pytest.mark.parametrize("d", range(1, 6))
def test_kostka_matrix_is_upper_unitriangular(d):
    a_matrix = kostka_matrix(d)
    size = a_matrix.shape[0]
    assert all(a_matrix[i, i] == 1 for i in range(size))
    assert all(a_matrix[i, j] == 0 for i in range(size) for j in range(i))
    assert all(a_matrix[0, j] == 1 for j in range(size))


def test_schur_degree_cap():
    with pytest.raises(ResourceCapError):
        kostka_matrix(9)
    with pytest.raises(ResourceCapError):
        convert(basis_element("s", (9,)), "m")


def test_convert_examples():
    assert convert(basis_element("mt", (1, 1)), "m") == m({(1, 1): 2})
    assert convert(basis_element("s", (2, 1)), "m") == m({(2, 1): 1, (1, 1, 1): 2})
    assert convert(basis_element("p", (1, 1)), "m") == m({(2,): 1, (1, 1): 2})
    assert convert(basis_element("e", (2,)), "m") == m({(1, 1): 1})
    assert convert(basis_element("h", (2,)), "m") == m({(2,): 1, (1, 1): 1})
    assert convert(m({(1, 1): 1}), "e") == SymPoly("e", {(2,): 1})
    assert convert(m({(2,): 1}), "p") == SymPoly("p", {(2,): 1})
    assert convert(m({(): 5}), "s") == SymPoly("s", {(): 5})


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("basis", BASES)
def test_conversions_round_trip(basis, d):
    for lam in enumerate_partitions(d):
        f = basis_element(basis, lam)
        for target in BASES:
            assert convert(convert(f, target), basis) == f


@given(sym_poly_strategy())
def test_conversion_through_schur_is_lossless(f):
    assert convert(convert(f, "s"), "m") == f


def test_omega_examples():
    assert omega(basis_element("e", (3,))) == convert(basis_element("h", (3,)), "e")
    assert omega(basis_element("s", (2, 1))) == basis_element("s", (2, 1))
    assert omega(basis_element("p", (2,))) == SymPoly("p", {(2,): -1})


@pytest.mark.parametrize("d", range(1, 6))
def test_omega_sends_schur_to_conjugate(d):
    for lam in enumerate_partitions(d):
        assert omega(basis_element("s", lam)) == basis_element("s", conjugate(lam))


@pytest.mark.parametrize("d", range(1, 5))
def test_omega_is_an_involution(d):
    for basis in BASES:
        for lam in enumerate_partitions(d):
            assert omega(omega(basis_element(basis, lam))) == basis_element(basis, lam)


@pytest.mark.parametrize("d", range(1, 6))
def test_omega_matrix_on_augmented_monomials(d):
    a_matrix = omega_matrix_augmented(d)
    assert a_matrix == sign_c_matrix(d)
    assert a_matrix * a_matrix == sympy.eye(a_matrix.shape[0])


@pytest.mark.slow
@pytest.mark.parametrize("d", [6, 7])
def test_omega_matrix_on_augmented_monomials_large(d):
    assert omega_matrix_augmented(d) == sign_c_matrix(d)


def test_multiply():
    assert multiply(basis_element("p", (1,)), basis_element("p", (1,))) == basis_element("p", (1, 1))
    assert basis_element("e", (1,)) * basis_element("e", (1,)) == basis_element("e", (1, 1))
    assert multiply(m({(1,): 1}), m({(1,): 1})) == m({(2,): 1, (1, 1): 2})
    assert multiply(m({(): 3}), m({(2,): 1})) == m({(2,): 3})


def test_principal_specialization_examples():
    assert principal_specialization(basis_element("p", (1, 1)), 3) == 9
    assert principal_specialization(m({(1, 1): 1}), 3) == 3
    assert principal_specialization(m({(1, 1, 1): 1}), 2) == 0
    assert principal_specialization(basis_element("h", (2,)), 3) == 6
    assert principal_specialization(m({(): 4}), 0) == 4
    with pytest.raises(PreconditionError):
        principal_specialization(m({(1,): 1}), -1)


@pytest.mark.parametrize("d", range(1, 6))
def test_principal_specialization_of_e1_power(d):
    f = basis_element("e", IntPartition((1,) * d))
    for n in range(7):
        assert principal_specialization(f, n) == n ** d
