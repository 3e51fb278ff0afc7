"""
Expansions of chromatic symmetric functions in the fundamental basis, and the checks that compare them with the
expansion obtained from stable partitions.

Every ``verify_*`` function returns an :class:`~pyjcsf.reports.ExpansionReport`. A failed identity is a report
with ``equal == False``, never an exception; exceptions are reserved for inputs outside an operation's domain.

:date: October 2026

"""

import math
import logging
from fractions import Fraction

import sympy
from sympy.polys.polyfuncs import interpolate

from .core import DEFAULT_SINGLE_CAP, DEFAULT_SCHUR_DEGREE_CAP, PreconditionError, check_cap
from .partitions import IntPartition, enumerate_partitions, c_coefficient
from .symfunc import (SymPoly, PathDigraph, convert, xi_basis_element, principal_specialization,
                      omega_matrix_augmented, sign_c_matrix)
from .qsym import (DescentClass, QSymPoly, sym_to_fundamental, sym_from_qsym_monomial, specialize_ones,
                   fundamental_Q_monomial_coefficients, to_monomial)
from .combin import (Labelling, enumerate_sequencings, chromatic_symmetric_function, orientation_key,
                     orientation_poset, alpha_descent_set, peeling_labelling, cg_ascent_set, incomparability_graph,
                     poset_descent_set, corollary3_labelling, acyclic_orientations, linear_extensions,
                     proper_colorings_count, require_three_plus_one_free)
from .tableaux import count_p_tableaux, syt_descent_distribution
from .reports import ExpansionReport

logger = logging.getLogger(__name__)

N = sympy.Symbol("n")


def _require_vertices(a_graph, cap):
    if a_graph.d < 1:
        raise PreconditionError("Expansions need at least one vertex")
    check_cap(a_graph.d, cap, "Number of vertices")


def _default_beta(a_graph, beta):
    return Labelling.identity(a_graph.d) if beta is None else Labelling(beta)


def _sequencing_sum(a_graph, labelling_for, cap):
    # labelling_for(s, orientation poset) -> alpha_s; the orientation poset is built once per orientation
    posets = {}
    terms = {}
    for s in enumerate_sequencings(a_graph.d, cap=cap):
        a_key = orientation_key(a_graph, s)
        if a_key not in posets:
            posets[a_key] = orientation_poset(a_graph, a_key)
        c = alpha_descent_set(labelling_for(s, posets[a_key]), s)
        terms[c] = terms.get(c, 0) + 1
    return QSymPoly("fundamental", terms)


def theorem1_expansion(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    ``sum_s Q[D(alpha_s, s), d]`` over all ``d!`` sequencings, ``alpha_s`` being the peeling labelling of the
    poset ``s`` induces.

    :param beta: Tie-breaking labelling within a peeling stage; the identity by default.
    :returns: QSymPoly in the fundamental basis.
    """
    _require_vertices(a_graph, cap)
    beta = _default_beta(a_graph, beta)
    labellings = {}

    def labelling_for(s, a_poset):
        if a_poset not in labellings:
            labellings[a_poset] = peeling_labelling(a_poset, beta)
        return labellings[a_poset]

    return _sequencing_sum(a_graph, labelling_for, cap)


def verify_theorem1(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    return ExpansionReport.compare(sym_to_fundamental(chromatic_symmetric_function(a_graph, cap=cap)),
                                   theorem1_expansion(a_graph, beta, cap=cap), label="theorem1")


def cg_expansion(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    ``sum_S N_S Q[S, d]`` with ``N_S`` the number of sequencings whose CG ``beta``-ascent set is ``S``.
    """
    _require_vertices(a_graph, cap)
    beta = _default_beta(a_graph, beta)
    terms = {}
    for s in enumerate_sequencings(a_graph.d, cap=cap):
        c = cg_ascent_set(a_graph, beta, s, orientation_poset(a_graph, orientation_key(a_graph, s)))
        terms[c] = terms.get(c, 0) + 1
    return QSymPoly("fundamental", terms)


def verify_corollary2(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    return ExpansionReport.compare(theorem1_expansion(a_graph, beta, cap=cap), cg_expansion(a_graph, beta, cap=cap),
                                   label="corollary2")


def cg_descent_counts(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    ``N_k`` for ``k = 0..d-1``: the number of sequencings with exactly ``k`` CG ``beta``-descents.
    """
    counts = [0] * a_graph.d
    for c, a_value in cg_expansion(a_graph, beta, cap=cap).items():
        counts[c.d - 1 - len(c.S)] += int(a_value)
    return counts


def chromatic_polynomial(a_graph, cap=DEFAULT_SINGLE_CAP):
    """
    ``P_G(n) = X_G(1^n)``, interpolated exactly through ``n = 0..d+1`` and checked against the degree bound.

    :returns: sympy.Poly in ``n`` with integer coefficients.
    """
    check_cap(a_graph.d, cap, "Number of vertices")
    x_g = chromatic_symmetric_function(a_graph, cap=cap)
    points = [(n, int(principal_specialization(x_g, n))) for n in range(a_graph.d + 2)]
    a_polynomial = sympy.Poly(interpolate(points, N), N, domain="QQ")
    if a_polynomial.degree() > a_graph.d:
        raise RuntimeError(f"Chromatic polynomial of degree {a_polynomial.degree()} on {a_graph.d} vertices")
    return sympy.Poly(a_polynomial.as_expr(), N, domain="ZZ")


def chromatic_polynomial_value(a_graph, n, cap=DEFAULT_SINGLE_CAP):
    return int(principal_specialization(chromatic_symmetric_function(a_graph, cap=cap), n))


def polynomial_coefficients(a_polynomial):
    """
    Coefficients in increasing degree, as ints.
    """
    return [int(u) for u in reversed(a_polynomial.all_coeffs())]


def chromatic_polynomial_binomial_form(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    ``sum_k N_k C(n + k, d)`` with ``N_k`` from :func:`cg_descent_counts`.

    :returns: sympy.Poly in ``n``.
    """
    d = a_graph.d
    expression = sum(a_count * sympy.expand_func(sympy.binomial(N + k, d))
                     for k, a_count in enumerate(cg_descent_counts(a_graph, beta, cap=cap)))
    return sympy.Poly(sympy.expand(expression), N, domain="QQ")


def verify_chromatic_polynomial(a_graph, beta=None, n_max=6, cap=DEFAULT_SINGLE_CAP):
    """
    Compares ``X_G(1^n)`` with the binomial sum for ``n = 0..max(n_max, d + 1)``; sub-checks compare both with a
    brute force colouring count and the two interpolated polynomials with each other.
    """
    points = range(max(n_max, a_graph.d + 1) + 1)
    x_g = chromatic_symmetric_function(a_graph, cap=cap)
    d = a_graph.d
    counts = cg_descent_counts(a_graph, beta, cap=cap)
    specialised = {n: int(principal_specialization(x_g, n)) for n in points}
    binomial_sum = {n: sum(a_count * math.comb(n + k, d) for k, a_count in enumerate(counts)) for n in points}
    brute_force = {n: proper_colorings_count(a_graph, n) for n in points}
    checks = {"brute_force": specialised == brute_force,
              "polynomials": chromatic_polynomial(a_graph, cap=cap) ==
              sympy.Poly(chromatic_polynomial_binomial_form(a_graph, beta, cap=cap).as_expr(), N, domain="ZZ")}
    return ExpansionReport.from_values(specialised, binomial_sum, label="chromatic-polynomial", checks=checks)


def verify_acyclic_orientation_count(a_graph, cap=DEFAULT_SINGLE_CAP):
    """
    The number of acyclic orientations equals ``|P_G(-1)|``.
    """
    return ExpansionReport.from_values(len(acyclic_orientations(a_graph)),
                                       abs(int(chromatic_polynomial(a_graph, cap=cap).eval(-1))),
                                       label="acyclic-orientations")


def orientation_expansion(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    ``sum_o sum_e Q[D(e), d]``: over every acyclic orientation ``o`` (found by edge reversals) and every linear
    extension ``e`` of its transitive closure, descents read through the peeling labelling of that closure.
    """
    _require_vertices(a_graph, cap)
    beta = _default_beta(a_graph, beta)
    terms = {}
    for an_orientation in acyclic_orientations(a_graph):
        a_poset = orientation_poset(a_graph, an_orientation)
        alpha = peeling_labelling(a_poset, beta)
        for e in linear_extensions(a_poset):
            c = alpha_descent_set(alpha, e)
            terms[c] = terms.get(c, 0) + 1
    return QSymPoly("fundamental", terms)


def verify_orientations(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    return ExpansionReport.compare(theorem1_expansion(a_graph, beta, cap=cap),
                                   orientation_expansion(a_graph, beta, cap=cap), label="orientations",
                                   checks={"orientation_count": bool(verify_acyclic_orientation_count(a_graph,
                                                                                                      cap=cap))})


def random_alpha_family_expansion(a_graph, rng, cap=DEFAULT_SINGLE_CAP):
    """
    A sequencing sum over a randomly drawn valid labelling family: each acyclic orientation gets a uniformly chosen
    order-reversing labelling of its closure (the reverse of a random linear extension).

    :param rng: A ``random.Random`` instance.
    """
    _require_vertices(a_graph, cap)
    chosen = {}

    def labelling_for(s, a_poset):
        if a_poset not in chosen:
            e = rng.choice(linear_extensions(a_poset))
            chosen[a_poset] = Labelling.from_order(tuple(reversed(e)))
        return chosen[a_poset]

    return _sequencing_sum(a_graph, labelling_for, cap)


def verify_random_alpha_family(a_graph, rng, cap=DEFAULT_SINGLE_CAP):
    return ExpansionReport.compare(sym_to_fundamental(chromatic_symmetric_function(a_graph, cap=cap)),
                                   random_alpha_family_expansion(a_graph, rng, cap=cap), label="random-alpha")


def corollary3_expansion(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    ``sum_s Q[D(s), d]`` with ``D(s)`` the poset descent set; equals ``X_inc(P)``.
    """
    if a_poset.d < 1:
        raise PreconditionError("Expansions need at least one element")
    terms = {}
    for s in enumerate_sequencings(a_poset.d, cap=cap):
        c = poset_descent_set(a_poset, s)
        terms[c] = terms.get(c, 0) + 1
    return QSymPoly("fundamental", terms)


def verify_corollary3(a_poset, cap=DEFAULT_SINGLE_CAP):
    return ExpansionReport.compare(
        sym_to_fundamental(chromatic_symmetric_function(incomparability_graph(a_poset), cap=cap)),
        corollary3_expansion(a_poset, cap=cap), label="corollary3")


def verify_corollary3_via_theorem1(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Builds the labelling family of :func:`~pyjcsf.combin.corollary3_labelling` on ``inc(P)`` and checks that each
    labelling is order-reversing, depends only on the induced orientation and has the same descents as the
    sequencing has in ``P``; the report compares the resulting sequencing sum with :func:`corollary3_expansion`.
    """
    a_graph = incomparability_graph(a_poset)
    checks = {"order_reversing": True, "orientation_dependence": True, "descent_coincidence": True}
    by_orientation = {}
    a_witness = None
    terms = {}
    for s in enumerate_sequencings(a_poset.d, cap=cap):
        a_key = orientation_key(a_graph, s)
        oriented = orientation_poset(a_graph, a_key)
        alpha = corollary3_labelling(a_poset, s, oriented)
        descents = alpha_descent_set(alpha, s)
        failed = []
        if not alpha.is_order_reversing(oriented):
            failed.append("order_reversing")
        if by_orientation.setdefault(a_key, alpha) != alpha:
            failed.append("orientation_dependence")
        if descents != poset_descent_set(a_poset, s):
            failed.append("descent_coincidence")
        for a_check in failed:
            checks[a_check] = False
        if failed and a_witness is None:
            a_witness = {"sequencing": [a_poset.names[u] for u in s], "checks": failed, "labelling": list(alpha)}
        terms[descents] = terms.get(descents, 0) + 1
    total = QSymPoly("fundamental", terms)
    expected = corollary3_expansion(a_poset, cap=cap)
    checks["total"] = total == expected
    a_report = ExpansionReport.compare(total, expected, label="corollary3-labelling", checks=checks)
    if checks["total"] and a_witness is not None:
        a_report.witness = a_witness
    return a_report


def xi_transfer(b, check_symmetric=False):
    """
    Reads the ``xi`` expansion off a fundamental expansion: ``a_lam = sum_{type(S) = lam} b_S``.

    :param b: Fundamental expansion of a symmetric function.
    :type b: QSymPoly
    :param check_symmetric: Verify that ``b`` is symmetric first.
    :returns: SymPoly in the ``xi`` basis.
    """
    if b.basis != "fundamental":
        raise ValueError(f"Expected the fundamental basis, received {b.basis!r}")
    if check_symmetric:
        sym_from_qsym_monomial(to_monomial(b))
    terms = {}
    for c, a_value in b.items():
        terms[c.type] = terms.get(c.type, 0) + a_value
    return SymPoly("xi", terms)


def verify_xi_transfer(f):
    """
    Compares :func:`xi_transfer` of the fundamental expansion of ``f`` with the conversion of ``f`` to ``xi``
    through the ``m`` basis.
    """
    return ExpansionReport.compare(xi_transfer(sym_to_fundamental(f)), convert(f, "xi"), label="theorem5")


def verify_xi_orthogonality(mu):
    """
    The transfer of ``xi[mu]``'s own fundamental expansion is ``xi[mu]``.
    """
    return ExpansionReport.compare(xi_transfer(sym_to_fundamental(xi_basis_element(mu))),
                                   SymPoly("xi", {IntPartition(mu): 1}), label="xi-orthogonality")


def xi_positivity_report(a_graph, beta=None, cap=DEFAULT_SINGLE_CAP):
    """
    The ``xi`` expansion of ``X_G`` read off :func:`theorem1_expansion`, compared with the conversion of ``X_G``,
    with a sub-check that every coefficient is a non-negative integer.
    """
    xi = xi_transfer(theorem1_expansion(a_graph, beta, cap=cap))
    nonnegative = all(v >= 0 and v.denominator == 1 for v in xi.terms.values())
    return ExpansionReport.compare(xi, convert(chromatic_symmetric_function(a_graph, cap=cap), "xi"),
                                   label="xi-positivity", checks={"nonnegative_integer": nonnegative})


def find_non_q_positive_xi(max_size=5):
    """
    Searches the partitions of ``1..max_size`` for a ``xi[lam]`` with a negative coefficient in its fundamental
    expansion.

    :returns: ``{"partition", "index", "coefficient"}`` or None.
    """
    for d in range(1, max_size + 1):
        for lam in enumerate_partitions(d):
            for c, a_value in sym_to_fundamental(xi_basis_element(lam)).items():
                if a_value < 0:
                    logger.info(f"xi[{lam}] has coefficient {a_value} on Q[{c}]")
                    return {"partition": list(lam), "index": str(c), "coefficient": str(a_value)}
    return None


def xi_offtype_support(lam):
    """
    The descent classes outside type ``lam`` that carry a non-zero coefficient in the fundamental expansion of
    ``xi[lam]``.
    """
    lam = IntPartition(lam)
    return [c for c in sym_to_fundamental(xi_basis_element(lam)).terms if c.type != lam]


def verify_lemma1(lam, nu):
    """
    Counts the edge subsets ``F`` of ``D_lam`` whose path sizes form ``nu`` and compares the count with
    ``c_{nu,lam} r_lam! / r_nu!``.
    """
    lam, nu = IntPartition(lam), IntPartition(nu)
    if lam.size != nu.size:
        raise PreconditionError(f"Partitions {lam} and {nu} have different sizes")
    a_digraph = PathDigraph(lam)
    counted = sum(1 for u in a_digraph.edge_subsets() if a_digraph.component_partition(u) == nu)
    return ExpansionReport.from_values(Fraction(counted), Fraction(c_coefficient(nu, lam) * lam.r_factorial,
                                                                   nu.r_factorial), label="lemma1")


def _gasharov_rhs(a_poset):
    terms = {}
    for a_shape, f_p in count_p_tableaux(a_poset).items():
        for c, f_s in syt_descent_distribution(a_shape).items():
            terms[c] = terms.get(c, 0) + f_p * f_s
    return QSymPoly("fundamental", terms)


def gasharov_coefficient_check(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Compares each ``Q[S, d]`` coefficient of :func:`corollary3_expansion` with ``sum_lam f^lam_P f^lam_S``.

    :raises PreconditionError: if the poset is not (3+1)-free.
    """
    require_three_plus_one_free(a_poset)
    return ExpansionReport.compare(corollary3_expansion(a_poset, cap=cap), _gasharov_rhs(a_poset), label="gasharov")


def gasharov_schur_check(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Compares the Schur expansion of ``X_inc(P)`` with ``sum_lam f^lam_P s[lam]``.
    """
    require_three_plus_one_free(a_poset)
    check_cap(a_poset.d, DEFAULT_SCHUR_DEGREE_CAP, "Schur basis degree")
    x_inc = chromatic_symmetric_function(incomparability_graph(a_poset), cap=cap)
    return ExpansionReport.compare(convert(x_inc, "s"), SymPoly("s", count_p_tableaux(a_poset)),
                                   label="gasharov-schur")


def verify_omega_matrix(d):
    """
    Checks that ``(sign(lam) c_{lam,mu})`` squares to the identity and is the matrix of omega on the ``mt`` basis.
    """
    expected = sign_c_matrix(d)
    computed = omega_matrix_augmented(d)
    checks = {"involution": expected * expected == sympy.eye(expected.rows), "matches_omega": expected == computed}
    a_witness = None
    if not checks["matches_omega"]:
        a_partition_list = enumerate_partitions(d)
        i, j = next((i, j) for i in range(expected.rows) for j in range(expected.cols)
                    if expected[i, j] != computed[i, j])
        a_witness = {"index": f"{a_partition_list[i]};{a_partition_list[j]}", "lhs": str(expected[i, j]),
                     "rhs": str(computed[i, j])}
    return ExpansionReport.from_checks(checks, label="omega-matrix", witness=a_witness)


def verify_proposition1(c, n):
    """
    Compares ``Q[S, d](1^n)`` read from the binomial formula with the number of monomials counted directly in
    ``n`` variables.
    """
    if not isinstance(c, DescentClass):
        raise TypeError(f"Expected a DescentClass, received {type(c)}")
    formula = specialize_ones(QSymPoly("fundamental", {c: 1}), n)
    counted = sum(fundamental_Q_monomial_coefficients(c, n).values())
    return ExpansionReport.from_values(formula, counted, label="proposition1")
