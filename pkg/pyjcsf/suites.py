"""
Exhaustive verification sweeps over all labelled objects of each size, as run by ``pyjverify``.

Every identity provides the objects of a given size and a check that turns one object into a JSON-ready report.
Objects and the check are module level so that sweeps can be spread over a ``multiprocessing.Pool``; results are
collected in enumeration order whatever the number of workers.

:date: October 2026

"""

import sys
import random
import logging
import itertools
import dataclasses
import multiprocessing

import tqdm

from .core import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SCHUR_DEGREE_CAP, check_cap
from .partitions import IntPartition, enumerate_partitions
from .symfunc import SymPoly
from .qsym import DescentClass
from .combin import (Graph, Poset, Labelling, enumerate_graphs, enumerate_posets, is_three_plus_one_free,
                     is_N_free, chromatic_symmetric_function)
from .fixtures import fixture
from .reports import ExpansionReport
from . import expansions
from . import tableaux

logger = logging.getLogger(__name__)


def beta_labellings(d):
    """
    The three ``beta`` labellings every sweep uses: identity, reverse and one fixed shuffle.
    """
    shuffled = list(range(1, d + 1))
    random.Random(d).shuffle(shuffled)
    return [Labelling.identity(d), Labelling.reverse(d), Labelling(shuffled)]


def _all_pass(reports, label, checks=None):
    for a_report in reports:
        if not a_report.equal:
            return a_report
    return ExpansionReport.from_checks(dict(checks or {}), label=label)


def _check_theorem1(a_graph):
    betas = beta_labellings(a_graph.d)
    expansions_by_beta = [expansions.theorem1_expansion(a_graph, beta) for beta in betas]
    reports = [expansions.verify_theorem1(a_graph, beta) for beta in betas]
    return _all_pass(reports, "theorem1",
                     {"beta_independent": all(u == expansions_by_beta[0] for u in expansions_by_beta)})


def _check_corollary2(a_graph):
    reports = []
    for beta in beta_labellings(a_graph.d):
        reports.append(expansions.verify_corollary2(a_graph, beta))
        reports.append(expansions.verify_chromatic_polynomial(a_graph, beta))
    return _all_pass(reports, "corollary2")


def _check_corollary3(a_poset):
    return _all_pass([expansions.verify_corollary3(a_poset), expansions.verify_corollary3_via_theorem1(a_poset)],
                     "corollary3")


def _check_gasharov(a_poset):
    if not is_three_plus_one_free(a_poset):
        return None
    reports = [expansions.gasharov_coefficient_check(a_poset)]
    if a_poset.d <= DEFAULT_SCHUR_DEGREE_CAP:
        reports.append(expansions.gasharov_schur_check(a_poset))
    return _all_pass(reports, "gasharov")


def _is_total_order(a_poset):
    return len(a_poset.lt) == a_poset.d * (a_poset.d - 1) // 2


def _check_classical(a_poset):
    # On a total order the insertion must coincide with Robinson-Schensted on the ranks of the elements.
    rank = {u: len(a_poset.below(u)) for u in a_poset.elements}
    for s in itertools.permutations(a_poset.elements):
        a_result = tableaux.sww_insert(a_poset, s)
        insertion, recording = tableaux.classical_row_insert([rank[u] for u in s])
        if ([[rank[u] for u in a_row] for a_row in a_result.insertion.rows] != insertion or
                [list(u) for u in a_result.recording.rows] != recording):
            return ExpansionReport.from_checks({"classical": False}, label="sww-classical",
                                               witness={"sequencing": [a_poset.names[u] for u in s]})
    return ExpansionReport.from_checks({"classical": True}, label="sww-classical")


def _check_sww_bijection(a_poset):
    if not (is_three_plus_one_free(a_poset) and is_N_free(a_poset)):
        return None
    reports = [tableaux.sww_inverse_exists(a_poset)]
    if _is_total_order(a_poset):
        reports.append(_check_classical(a_poset))
    return _all_pass(reports, "sww-bijection")


def _check_sww_descents(a_poset):
    if not (is_three_plus_one_free(a_poset) and is_N_free(a_poset)):
        return None
    return tableaux.sww_respects_descents(a_poset)


def _check_counterexample(a_fixture_name):
    # Counterexample mode: passing means a sequencing whose descents the recording tableau does not respect exists.
    a_report = tableaux.sww_respects_descents(fixture(a_fixture_name))
    return ExpansionReport.from_checks({"counterexample_found": not a_report.equal}, label="sww-counterexample",
                                       details={"fixture": a_fixture_name, "witness": a_report.witness,
                                                "violations": a_report.details["violations"]})


def _check_theorem5(an_item):
    kind, a_value = an_item
    if kind == "graph":
        return expansions.verify_xi_transfer(chromatic_symmetric_function(a_value))
    if kind == "xi":
        return expansions.verify_xi_orthogonality(a_value)
    return expansions.verify_xi_transfer(SymPoly(kind, {a_value: 1}))


def _check_xi_positivity(an_item):
    if isinstance(an_item, Graph):
        return expansions.xi_positivity_report(an_item)
    a_control = expansions.find_non_q_positive_xi(an_item)
    return ExpansionReport.from_checks({"negative_control_found": a_control is not None},
                                       label="xi-negative-control", details={"control": a_control})


def _theorem5_objects(d):
    for lam in enumerate_partitions(d):
        yield ("m", lam)
        yield ("s", lam)
        yield ("xi", lam)
    if d <= 4:
        for a_graph in enumerate_graphs(d):
            yield ("graph", a_graph)


@dataclasses.dataclass(frozen=True)
class Identity:
    """
    An exhaustively checkable identity.

    :param objects: ``objects(size)`` yields the picklable objects of one size.
    :param check: ``check(object)`` returns an ExpansionReport, or None when the object is outside the identity's
                  domain (it is then counted as skipped).
    :param cap: Largest size a sweep may request.
    :param controls: ``controls(max_size)`` yields extra objects checked once after the sweep.
    """
    name: str
    objects: object
    check: object
    cap: int = DEFAULT_EXHAUSTIVE_CAP
    controls: object = None


IDENTITIES = {u.name: u for u in [
    Identity("theorem1", enumerate_graphs, _check_theorem1),
    Identity("corollary2", enumerate_graphs, _check_corollary2),
    Identity("corollary3", enumerate_posets, _check_corollary3),
    Identity("orientations", enumerate_graphs, expansions.verify_orientations),
    Identity("lemma1", lambda d: itertools.product(enumerate_partitions(d), repeat=2),
             lambda an_item: expansions.verify_lemma1(*an_item), cap=DEFAULT_SCHUR_DEGREE_CAP),
    Identity("theorem5", _theorem5_objects, _check_theorem5, cap=DEFAULT_SCHUR_DEGREE_CAP),
    Identity("xi-positivity", enumerate_graphs, _check_xi_positivity, controls=lambda max_size: [5]),
    Identity("gasharov", enumerate_posets, _check_gasharov),
    Identity("sww-bijection", enumerate_posets, _check_sww_bijection),
    Identity("sww-descents", enumerate_posets, _check_sww_descents,
             controls=lambda max_size: ["fixture:poset:N", "fixture:poset:Nmirror"]),
    Identity("omega-matrix", lambda d: [d], expansions.verify_omega_matrix, cap=DEFAULT_SCHUR_DEGREE_CAP),
    Identity("proposition1", lambda d: [(DescentClass(d, frozenset(S)), n)
                                        for k in range(d) for S in itertools.combinations(range(1, d), k)
                                        for n in range(9)],
             lambda an_item: expansions.verify_proposition1(*an_item), cap=DEFAULT_SCHUR_DEGREE_CAP),
]}

IDENTITY_NAMES = tuple(IDENTITIES) + ("all",)


def describe(an_object):
    """
    A JSON-ready description of a swept object.
    """
    if isinstance(an_object, (Graph, Poset)):
        return an_object.to_json()
    if isinstance(an_object, IntPartition):
        return list(an_object)
    if isinstance(an_object, DescentClass):
        return str(an_object)
    if isinstance(an_object, (tuple, list)):
        return [describe(u) for u in an_object]
    return an_object


def run_check(an_identity_name, an_object):
    """
    Runs one check; returns ``(status, description, report JSON)`` with status ``pass``, ``fail`` or ``skip``.
    """
    an_identity = IDENTITIES[an_identity_name]
    if isinstance(an_object, str) and an_object.startswith("fixture:"):
        a_report = _check_counterexample(an_object[len("fixture:"):])
    else:
        a_report = an_identity.check(an_object)
    if a_report is None:
        return "skip", describe(an_object), None
    return ("pass" if a_report.equal else "fail"), describe(an_object), a_report.to_json()


def _run_check_star(an_argument):
    return run_check(*an_argument)


@dataclasses.dataclass
class SuiteResult:
    identity: str
    sizes: dict = dataclasses.field(default_factory=dict)
    controls: list = dataclasses.field(default_factory=list)
    failure: dict = None

    @property
    def passed(self):
        return self.failure is None

    def to_json(self):
        result = {"identity": self.identity, "passed": self.passed,
                  "sizes": {str(k): v for k, v in self.sizes.items()}}
        if self.controls:
            result["controls"] = self.controls
        if self.failure is not None:
            result["failure"] = self.failure
        return result


def _results(an_identity_name, objects, jobs, progress, description):
    arguments = [(an_identity_name, u) for u in objects]
    if progress:
        wrapper = _progress_bar(len(arguments), description)
    else:
        wrapper = None
    if jobs > 1:
        with multiprocessing.Pool(jobs) as a_pool:
            for a_result in a_pool.imap(_run_check_star, arguments, chunksize=max(1, len(arguments) // (4 * jobs))):
                if wrapper is not None:
                    wrapper.update(1)
                yield a_result
    else:
        for an_argument in arguments:
            if wrapper is not None:
                wrapper.update(1)
            yield _run_check_star(an_argument)
    if wrapper is not None:
        wrapper.close()


def _progress_bar(total, description):
    return tqdm.tqdm(total=total, desc=description, file=sys.stderr, leave=False)


def run_suite(an_identity_name, max_size, jobs=1, progress=False, stop_on_failure=True, min_size=1):
    """
    Sweeps ``an_identity_name`` over every object of size ``min_size..max_size``.

    :raises ResourceCapError: if ``max_size`` exceeds the identity's cap.
    :returns: SuiteResult
    """
    an_identity = IDENTITIES[an_identity_name]
    check_cap(max_size, an_identity.cap, f"Sweep size for {an_identity_name}")
    a_suite_result = SuiteResult(an_identity_name)
    for size in range(min_size, max_size + 1):
        counts = {"checked": 0, "passed": 0, "skipped": 0}
        for status, description, a_report in _results(an_identity_name, an_identity.objects(size), jobs, progress,
                                                      f"{an_identity_name} size {size}"):
            if status == "skip":
                counts["skipped"] += 1
                continue
            counts["checked"] += 1
            if status == "pass":
                counts["passed"] += 1
            elif a_suite_result.failure is None:
                a_suite_result.failure = {"size": size, "object": description, "report": a_report}
                logger.warning(f"{an_identity_name} fails at size {size} on {description}")
        a_suite_result.sizes[size] = counts
        logger.info(f"{an_identity_name} size {size}: {counts['passed']}/{counts['checked']} passed, "
                    f"{counts['skipped']} skipped")
        if a_suite_result.failure is not None and stop_on_failure:
            return a_suite_result
    if an_identity.controls is not None:
        for an_object in an_identity.controls(max_size):
            status, description, a_report = run_check(an_identity_name, an_object)
            a_suite_result.controls.append({"object": description, "passed": status == "pass", "report": a_report})
            if status == "fail" and a_suite_result.failure is None:
                a_suite_result.failure = {"control": description, "report": a_report}
    return a_suite_result


def run_suites(an_identity_name, max_size, jobs=1, progress=False, stop_on_failure=True):
    """
    Runs one identity, or every identity for ``"all"`` (each clipped to its own cap).
    """
    names = list(IDENTITIES) if an_identity_name == "all" else [an_identity_name]
    results = []
    for a_name in names:
        size = min(max_size, IDENTITIES[a_name].cap) if an_identity_name == "all" else max_size
        results.append(run_suite(a_name, size, jobs=jobs, progress=progress, stop_on_failure=stop_on_failure))
        if not results[-1].passed and stop_on_failure:
            break
    return results
