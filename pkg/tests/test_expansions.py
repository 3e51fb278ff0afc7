import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pyjcsf.core import PreconditionError, ResourceCapError
from pyjcsf.partitions import IntPartition, enumerate_partitions
from pyjcsf.symfunc import SymPoly, basis_element, convert
from pyjcsf.qsym import DescentClass, QSymPoly, fundamental, sym_to_fundamental
from pyjcsf.fixtures import poset_n, poset_n_mirror
from pyjcsf.reports import ExpansionReport, first_difference
from pyjcsf.combin import Graph, Poset, enumerate_graphs, enumerate_posets, is_three_plus_one_free
from pyjcsf.expansions import (
    theorem1_expansion, verify_theorem1, cg_expansion, verify_corollary2, cg_descent_counts, chromatic_polynomial,
    chromatic_polynomial_value, polynomial_coefficients, chromatic_polynomial_binomial_form,
    verify_chromatic_polynomial, verify_acyclic_orientation_count, orientation_expansion, verify_orientations,
    random_alpha_family_expansion, verify_random_alpha_family, corollary3_expansion, verify_corollary3,
    verify_corollary3_via_theorem1, xi_transfer, verify_xi_transfer, verify_xi_orthogonality, xi_positivity_report,
    find_non_q_positive_xi, xi_offtype_support, verify_lemma1, gasharov_coefficient_check, gasharov_schur_check,
    verify_omega_matrix, verify_proposition1
)


@st.composite
def graph_strategy(draw, max_vertices=4):
    d = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(u, v) for u in range(d) for v in range(u + 1, d)]
    return Graph([str(u + 1) for u in range(d)], [a_pair for a_pair in pairs if draw(st.booleans())])


def test_theorem1_expansion_examples():
    assert theorem1_expansion(Graph.empty(1)) == fundamental(1)
    assert theorem1_expansion(Graph.complete(2)) == QSymPoly("fundamental", {DescentClass(2, {1}): 2})
    assert theorem1_expansion(Graph.empty(2)) == fundamental(2) + fundamental(2, {1})
    with pytest.raises(PreconditionError):
        theorem1_expansion(Graph.empty(0))
    with pytest.raises(ResourceCapError):
        theorem1_expansion(Graph.complete(4), cap=3)


@pytest.mark.parametrize("d", range(1, 5))
def test_theorem1_on_every_small_graph(d):
    for a_graph in enumerate_graphs(d):
        for beta in [None, tuple(range(d, 0, -1))]:
            report = verify_theorem1(a_graph, beta)
            assert report.equal, report.witness


@pytest.mark.slow
def test_theorem1_on_every_graph_with_5_vertices():
    for a_graph in enumerate_graphs(5):
        assert verify_theorem1(a_graph).equal


@given(graph_strategy(), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_theorem1_is_independent_of_beta(a_graph, rng):
    beta = list(range(1, a_graph.d + 1))
    rng.shuffle(beta)
    assert theorem1_expansion(a_graph, beta) == theorem1_expansion(a_graph)


@pytest.mark.parametrize("d", range(1, 5))
def test_corollary2_on_every_small_graph(d):
    for a_graph in enumerate_graphs(d):
        assert verify_corollary2(a_graph).equal
        assert cg_expansion(a_graph) == theorem1_expansion(a_graph)


def test_cg_descent_counts():
    assert cg_descent_counts(Graph.complete(3)) == [6, 0, 0]
    assert cg_descent_counts(Graph.empty(2)) == [1, 1]
    assert sum(cg_descent_counts(Graph.cycle(4))) == 24


def test_chromatic_polynomial_examples():
    assert polynomial_coefficients(chromatic_polynomial(Graph.complete(3))) == [0, 2, -3, 1]
    assert polynomial_coefficients(chromatic_polynomial(Graph.empty(3))) == [0, 0, 0, 1]
    assert polynomial_coefficients(chromatic_polynomial(Graph.cycle(4))) == [0, -3, 6, -4, 1]
    assert chromatic_polynomial_value(Graph.cycle(4), 3) == 18
    assert chromatic_polynomial_value(Graph.complete(3), 2) == 0
    assert chromatic_polynomial_value(Graph.path(3), 2) == 2


@pytest.mark.parametrize("d", range(1, 5))
def test_chromatic_polynomial_binomial_form(d):
    for a_graph in enumerate_graphs(d):
        assert polynomial_coefficients(chromatic_polynomial_binomial_form(a_graph)) == \
            polynomial_coefficients(chromatic_polynomial(a_graph))
        report = verify_chromatic_polynomial(a_graph)
        assert report.equal, report.witness
        assert report.checks == {"brute_force": True, "polynomials": True}


def test_acyclic_orientation_count():
    for a_graph in [Graph.complete(3), Graph.cycle(4), Graph.cycle(5), Graph.empty(3), Graph.path(4)]:
        assert verify_acyclic_orientation_count(a_graph).equal


@pytest.mark.parametrize("d", range(1, 5))
def test_orientation_expansion(d):
    for a_graph in enumerate_graphs(d):
        assert orientation_expansion(a_graph) == theorem1_expansion(a_graph)
        assert verify_orientations(a_graph).equal


@pytest.mark.parametrize("seed", range(3))
def test_random_alpha_family(seed):
    rng = random.Random(seed)
    for d in range(1, 4):
        for a_graph in enumerate_graphs(d):
            assert verify_random_alpha_family(a_graph, rng).equal
    assert random_alpha_family_expansion(Graph.cycle(4), rng) == theorem1_expansion(Graph.cycle(4))


def test_corollary3_examples():
    assert corollary3_expansion(Poset.chain(2)) == fundamental(2) + fundamental(2, {1})
    assert corollary3_expansion(Poset.antichain(2)) == QSymPoly("fundamental", {DescentClass(2, {1}): 2})
    assert verify_corollary3(poset_n()).equal
    assert verify_corollary3(poset_n_mirror()).equal
    with pytest.raises(PreconditionError):
        corollary3_expansion(Poset.antichain(0))


@pytest.mark.parametrize("d", range(1, 5))
def test_corollary3_on_every_small_poset(d):
    for a_poset in enumerate_posets(d):
        assert verify_corollary3(a_poset).equal
        report = verify_corollary3_via_theorem1(a_poset)
        assert report.equal, report.witness
        assert all(report.checks.values())


def test_corollary3_labelling_on_chains_and_n():
    for a_poset in [Poset.chain(5), poset_n(), poset_n_mirror(), Poset.antichain(4)]:
        assert verify_corollary3_via_theorem1(a_poset).equal


def test_xi_transfer_examples():
    assert xi_transfer(sym_to_fundamental(basis_element("s", (2, 1)))) == SymPoly("xi", {(2, 1): 2})
    assert xi_transfer(theorem1_expansion(Graph.complete(2))) == SymPoly("xi", {(1, 1): 2})
    assert xi_transfer(theorem1_expansion(Graph.complete(3))) == SymPoly("xi", {(1, 1, 1): 6})
    with pytest.raises(ValueError):
        xi_transfer(QSymPoly("monomial", {DescentClass(2, ()): 1}))
    with pytest.raises(PreconditionError):
        xi_transfer(fundamental(3, {1}), check_symmetric=True)


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("basis", ["m", "s", "p", "e", "h", "xi"])
def test_xi_transfer_on_basis_elements(basis, d):
    for lam in enumerate_partitions(d):
        report = verify_xi_transfer(basis_element(basis, lam))
        assert report.equal, report.witness


@pytest.mark.parametrize("d", range(1, 6))
def test_xi_orthogonality(d):
    for mu in enumerate_partitions(d):
        assert verify_xi_orthogonality(mu).equal


@pytest.mark.parametrize("d", range(1, 4))
def test_xi_transfer_on_chromatic_symmetric_functions(d):
    for a_graph in enumerate_graphs(d):
        report = xi_positivity_report(a_graph)
        assert report.equal
        assert report.checks == {"nonnegative_integer": True}


@pytest.mark.slow
def test_xi_positivity_on_graphs_with_4_vertices():
    for a_graph in enumerate_graphs(4):
        assert xi_positivity_report(a_graph).equal


def test_xi_is_not_q_positive():
    assert find_non_q_positive_xi(3) is None
    a_witness = find_non_q_positive_xi(5)
    assert sum(a_witness["partition"]) == 4
    assert Fraction(a_witness["coefficient"]) < 0


def test_xi_offtype_support():
    assert xi_offtype_support((1, 1)) == []
    assert xi_offtype_support((3,)) == []
    assert DescentClass(4, {1, 2}) in xi_offtype_support((2, 2))
    assert sym_to_fundamental(convert(basis_element("xi", (2, 2)), "m")).coefficient((4, {1, 3})) == \
        Fraction(2, 3)


def test_lemma1_examples():
    assert verify_lemma1((2,), (1, 1)).equal
    assert verify_lemma1((2, 1), (1, 1, 1)).lhs == 1
    assert verify_lemma1((3,), (2, 1)).lhs == 2
    with pytest.raises(PreconditionError):
        verify_lemma1((2,), (1,))


@pytest.mark.parametrize("d", range(1, 6))
def test_lemma1_for_all_pairs(d):
    for lam in enumerate_partitions(d):
        for nu in enumerate_partitions(d):
            report = verify_lemma1(lam, nu)
            assert report.equal, report.witness


def test_gasharov_examples():
    for a_poset in [Poset.chain(3), Poset.antichain(3), poset_n(), poset_n_mirror()]:
        assert gasharov_coefficient_check(a_poset).equal
        assert gasharov_schur_check(a_poset).equal
    with pytest.raises(PreconditionError):
        gasharov_coefficient_check(Poset.from_named_relations("xyzw", [("x", "y"), ("y", "z")]))


@pytest.mark.parametrize("d", range(1, 5))
def test_gasharov_on_every_small_poset(d):
    for a_poset in enumerate_posets(d):
        if is_three_plus_one_free(a_poset):
            assert gasharov_coefficient_check(a_poset).equal


@pytest.mark.parametrize("d", range(1, 6))
def test_omega_matrix(d):
    report = verify_omega_matrix(d)
    assert report.equal
    assert report.checks == {"involution": True, "matches_omega": True}


def test_proposition1():
    assert verify_proposition1(DescentClass(3, {1}), 3).equal
    assert verify_proposition1(DescentClass(3, {1}), 3).lhs == 4
    for d in range(1, 5):
        for S in range(2 ** (d - 1)):
            c = DescentClass(d, frozenset(k + 1 for k in range(d - 1) if S >> k & 1))
            for n in range(7):
                assert verify_proposition1(c, n).equal
    with pytest.raises(TypeError):
        verify_proposition1((3, {1}), 3)


def test_failing_report_has_a_witness():
    report = ExpansionReport.compare(fundamental(2, {1}).scale(2), fundamental(2, {1}))
    assert not report.equal
    assert report.witness == {"index": "2:1", "lhs": "2", "rhs": "1"}
    assert report.to_json() == {"equal": False, "witness": {"index": "2:1", "lhs": "2", "rhs": "1"}}


def test_first_difference_reads_labels_with_brackets_and_quotes():
    lhs = {"a]b": "1", "q'x": "2"}
    rhs = {"a]b": "1", "q'x": "3", 'z"': "4"}
    assert first_difference(lhs, rhs) == {"index": "q'x", "lhs": "2", "rhs": "3"}
    assert first_difference({"a]b": "1"}, {}) == {"index": "a]b", "lhs": "1", "rhs": "0"}
    assert first_difference(lhs, dict(lhs)) is None


def test_reports_compare_across_bases():
    both_monomials = QSymPoly("monomial", {DescentClass(2, ()): 1, DescentClass(2, {1}): 1})
    assert ExpansionReport.compare(fundamental(2), both_monomials).equal
    assert ExpansionReport.compare(SymPoly("m", {(2, 1): 1, (1, 1, 1): 2}), basis_element("s", (2, 1))).equal
    with pytest.raises(TypeError):
        ExpansionReport.compare(fundamental(1), SymPoly("m", {(1,): 1}))


def test_reports_from_values_and_checks():
    report = ExpansionReport.from_values({1: 2, 3: 0}, {1: 2})
    assert report.equal and bool(report)
    report = ExpansionReport.from_values(3, 4, label="count")
    assert report.witness == {"index": "value", "lhs": "3", "rhs": "4"}
    report = ExpansionReport.from_checks({"a": True, "b": False})
    assert not report.equal
    assert report.witness == {"checks": ["b"]}
    assert ExpansionReport.compare(fundamental(2), fundamental(2)).to_json(with_sides=True)["lhs"] == \
        fundamental(2).to_json()
