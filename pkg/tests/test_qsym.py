import math

import pytest
from hypothesis import given, strategies as st

from pyjcsf.core import InputParseError, PreconditionError
from pyjcsf.partitions import IntPartition, enumerate_partitions
from pyjcsf.symfunc import BASES, SymPoly, basis_element, convert, principal_specialization
from pyjcsf.tableaux import enumerate_syt
from pyjcsf.qsym import (
    DescentClass, QSymPoly, descent_class_from_string, descent_class_from_composition, fundamental,
    type_of_subset, monomial_qsym_expand, monomial_to_fundamental, subsets_of_type, sym_to_monomial_qsym,
    sym_to_fundamental, specialize_ones, fundamental_Q_monomial_coefficients, qsym_monomial_coefficients,
    qsym_equal, sym_from_qsym_monomial
)


@st.composite
def descent_class_strategy(draw, max_degree=5):
    d = draw(st.integers(min_value=1, max_value=max_degree))
    return DescentClass(d, frozenset(draw(st.sets(st.integers(min_value=1, max_value=max(1, d - 1)))) if d > 1
                                     else frozenset()))


@st.composite
def qsym_strategy(draw, basis="fundamental"):
    classes = draw(st.lists(descent_class_strategy(), min_size=0, max_size=6))
    coefficients = draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=len(classes),
                                 max_size=len(classes)))
    terms = {}
    for c, a_value in zip(classes, coefficients):
        terms[c] = terms.get(c, 0) + a_value
    return QSymPoly(basis, terms)


def test_descent_class():
    c = DescentClass(5, {2, 3})
    assert c.elements == (2, 3)
    assert c.composition == (2, 1, 2)
    assert c.type == (2, 2, 1)
    assert str(c) == "5:2,3"
    assert str(DescentClass(4)) == "4:-"
    assert DescentClass.full(4).type == (1, 1, 1, 1)
    assert type_of_subset(DescentClass(4)) == (4,)
    with pytest.raises(ValueError):
        DescentClass(3, {3})
    with pytest.raises(ValueError):
        DescentClass(0)


def test_descent_class_parsing():
    assert descent_class_from_string("4:1,3") == DescentClass(4, {1, 3})
    assert descent_class_from_string("4:-") == DescentClass(4)
    assert descent_class_from_string("2:") == DescentClass(2)
    for text in ["4", "x:1", "3:3", "3:1;2"]:
        with pytest.raises(InputParseError):
            descent_class_from_string(text)
    assert descent_class_from_composition((1, 2, 1)) == DescentClass(4, {1, 3})


def test_qsympoly_json():
    f = QSymPoly("fundamental", {DescentClass(3, {1}): 2, DescentClass(3, ()): -1})
    assert f.to_json() == {"basis": "fundamental", "terms": [{"d": 3, "S": [], "num": "-1", "den": "1"},
                                                             {"d": 3, "S": [1], "num": "2", "den": "1"}]}
    assert QSymPoly.from_json(f.to_json()) == f


def test_qsympoly_keys_coerce_to_descent_classes():
    f = QSymPoly("fundamental", {(2, frozenset({1})): 2, DescentClass(2, ()): 1})
    assert f == fundamental(2, {1}).scale(2) + fundamental(2)
    assert all(isinstance(u, DescentClass) for u, _ in f.items())
    assert f.coefficient((2, {1})) == 2


def test_monomial_expansion_examples():
    assert monomial_qsym_expand(fundamental(1)) == QSymPoly("monomial", {DescentClass(1, ()): 1})
    assert monomial_qsym_expand(fundamental(2)) == QSymPoly("monomial", {DescentClass(2, ()): 1,
                                                                          DescentClass(2, {1}): 1})
    assert monomial_qsym_expand(fundamental(3, {1})) == QSymPoly("monomial", {DescentClass(3, {1}): 1,
                                                                              DescentClass(3, {1, 2}): 1})
    with pytest.raises(ValueError):
        monomial_qsym_expand(QSymPoly("monomial", {DescentClass(1, ()): 1}))


@given(qsym_strategy())
def test_fundamental_monomial_inverse(f):
    assert monomial_to_fundamental(monomial_qsym_expand(f)) == f


def test_qsym_equal_across_bases():
    f = fundamental(2)
    assert qsym_equal(f, QSymPoly("monomial", {DescentClass(2, ()): 1, DescentClass(2, {1}): 1}))
    assert not qsym_equal(f, fundamental(2, {1}))


def test_subsets_of_type():
    assert subsets_of_type((2, 1)) == [DescentClass(3, {1}), DescentClass(3, {2})]
    assert subsets_of_type((2, 2)) == [DescentClass(4, {2})]
    assert len(subsets_of_type((2, 1, 1))) == 3
    with pytest.raises(PreconditionError):
        subsets_of_type(())


def test_sym_to_fundamental_examples():
    assert sym_to_fundamental(SymPoly("m", {(1,): 1})) == fundamental(1)
    assert sym_to_fundamental(SymPoly("m", {(2,): 1})) == fundamental(2) - fundamental(2, {1})
    assert sym_to_fundamental(basis_element("s", (2, 1))) == fundamental(3, {1}) + fundamental(3, {2})
    assert sym_to_fundamental(basis_element("h", (3,))) == fundamental(3)
    assert sym_to_fundamental(basis_element("e", (3,))) == fundamental(3, {1, 2})
    with pytest.raises(PreconditionError):
        sym_to_fundamental(SymPoly("m", {(): 1}))


@pytest.mark.parametrize("d", range(1, 6))
def test_schur_fundamental_expansion_counts_tableaux(d):
    for lam in enumerate_partitions(d):
        f = sym_to_fundamental(basis_element("s", lam))
        assert all(v > 0 and v.denominator == 1 for v in f.terms.values())
        assert sum(f.terms.values()) == len(list(enumerate_syt(lam)))


def test_specialize_ones_examples():
    assert specialize_ones(fundamental(2), 3) == 6
    assert specialize_ones(fundamental(2, {1}), 3) == 3
    assert specialize_ones(QSymPoly("monomial", {DescentClass(3, {1}): 1}), 4) == 6
    for d in range(2, 6):
        assert specialize_ones(QSymPoly("fundamental", {DescentClass.full(d): 1}), 1) == 0
    with pytest.raises(PreconditionError):
        specialize_ones(fundamental(1), -1)


@pytest.mark.parametrize("d", range(1, 5))
def test_specialization_commutes_with_qsym_embedding(d):
    for basis in BASES:
        for lam in enumerate_partitions(d):
            f = basis_element(basis, lam)
            for n in range(7):
                assert specialize_ones(sym_to_fundamental(f), n) == principal_specialization(f, n)
                assert specialize_ones(sym_to_monomial_qsym(f), n) == principal_specialization(f, n)


@given(descent_class_strategy(max_degree=4), st.integers(min_value=0, max_value=5))
def test_fundamental_monomials_count_matches_specialization(c, n):
    assert sum(fundamental_Q_monomial_coefficients(c, n).values()) == math.comb(n + c.d - len(c.S) - 1, c.d)


def test_fundamental_monomial_coefficients_examples():
    assert fundamental_Q_monomial_coefficients(DescentClass(2), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert fundamental_Q_monomial_coefficients(DescentClass(2, {1}), 2) == {(1, 1): 1}
    three = fundamental_Q_monomial_coefficients(DescentClass(3, {1}), 3)
    assert three == {(1, 2, 0): 1, (1, 1, 1): 1, (1, 0, 2): 1, (0, 1, 2): 1}


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("basis", ["m", "s", "p", "xi"])
def test_symmetric_functions_have_symmetric_qsym_polynomials(basis, d):
    for lam in enumerate_partitions(d):
        f = basis_element(basis, lam)
        in_m = convert(f, "m")
        coefficients = qsym_monomial_coefficients(sym_to_fundamental(f), d)
        for exponents, a_value in coefficients.items():
            assert in_m.coefficient(IntPartition.from_parts(u for u in exponents if u)) == a_value
        for mu, a_value in in_m.items():
            padded = tuple(mu) + (0,) * (d - len(mu))
            assert coefficients.get(padded, 0) == a_value


def test_sym_from_qsym_monomial():
    f = SymPoly("m", {(2, 1): 3, (1, 1, 1): -1})
    assert sym_from_qsym_monomial(sym_to_fundamental(f)) == f
    with pytest.raises(PreconditionError):
        sym_from_qsym_monomial(fundamental(3, {1}))
    with pytest.raises(PreconditionError):
        sym_from_qsym_monomial(QSymPoly("monomial", {DescentClass(3, {1}): 1, DescentClass(3, {2}): 2}))
