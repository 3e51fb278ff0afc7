"""
The outcome of checking an identity: both sides, whether they agree and, if not, one index where they differ.

Differences are located with `DeepDiff <https://github.com/seperman/deepdiff>`_ over the flat
``{index label: "num/den"}`` maps of the two sides.

:date: October 2026

"""

import dataclasses

import deepdiff

from .symfunc import SymPoly, convert
from .qsym import QSymPoly, to_monomial


def _differing_labels(lhs_map, rhs_map):
    tree_diff = deepdiff.DeepDiff(lhs_map, rhs_map, view="tree")
    labels = set()
    for a_report_type in tree_diff:
        for a_level in tree_diff[a_report_type]:
            a_path = a_level.path(output_format="list")
            if a_path:
                labels.add(a_path[0])
    return labels


def first_difference(lhs_map, rhs_map, order=None):
    """
    The first (under ``order``) key where two flat maps disagree, as ``{"index", "lhs", "rhs"}``, or None.

    Missing keys count as ``"0"``.
    """
    labels = _differing_labels(lhs_map, rhs_map)
    if not labels:
        return None
    an_index = min(labels, key=order) if order is not None else min(labels)
    return {"index": an_index, "lhs": lhs_map.get(an_index, "0"), "rhs": rhs_map.get(an_index, "0")}


def _comparable(lhs, rhs):
    if isinstance(lhs, QSymPoly) and isinstance(rhs, QSymPoly) and lhs.basis != rhs.basis:
        return to_monomial(lhs), to_monomial(rhs)
    if isinstance(lhs, SymPoly) and isinstance(rhs, SymPoly) and lhs.basis != rhs.basis:
        return lhs, convert(rhs, lhs.basis)
    if type(lhs) is not type(rhs):
        raise TypeError(f"Cannot compare {type(lhs).__name__} with {type(rhs).__name__}")
    return lhs, rhs


@dataclasses.dataclass
class ExpansionReport:
    """
    ``equal`` holds exactly when ``lhs - rhs`` is zero. On inequality ``witness`` names one index where the
    coefficients differ together with both values.

    ``checks`` carries named sub-checks (all of which must hold for ``equal``) and ``details`` anything a caller
    wants to pass on, e.g. a counterexample found by a search.
    """
    lhs: object
    rhs: object
    equal: bool
    witness: dict = None
    checks: dict = dataclasses.field(default_factory=dict)
    details: dict = dataclasses.field(default_factory=dict)
    label: str = ""

    @classmethod
    def compare(cls, lhs, rhs, label="", checks=None, details=None):
        """
        Compares two SymPolys or two QSymPolys. Quasi-symmetric functions in different bases are compared in the
        monomial basis, symmetric functions in the basis of ``lhs``.
        """
        left, right = _comparable(lhs, rhs)
        order_index = {**left.label_index(), **right.label_index()}
        a_witness = first_difference(left.term_map(), right.term_map(),
                                     order=lambda u: type(left)._key_order(order_index[u]))
        return cls._build(lhs, rhs, a_witness, label, checks, details)

    @classmethod
    def from_values(cls, lhs, rhs, label="", checks=None, details=None):
        """
        Compares two scalars, or two mappings of scalars.
        """
        if isinstance(lhs, dict) and isinstance(rhs, dict):
            lhs_map = {str(k): str(v) for k, v in lhs.items() if v != 0}
            rhs_map = {str(k): str(v) for k, v in rhs.items() if v != 0}
        else:
            lhs_map, rhs_map = {"value": str(lhs)}, {"value": str(rhs)}
        return cls._build(lhs, rhs, first_difference(lhs_map, rhs_map), label, checks, details)

    @classmethod
    def from_checks(cls, checks, label="", witness=None, details=None):
        """
        A report that only aggregates named boolean sub-checks.
        """
        return cls._build(None, None, witness, label, checks, details, equal=all(checks.values()))

    @classmethod
    def _build(cls, lhs, rhs, a_witness, label, checks, details, equal=None):
        checks = dict(checks or {})
        if equal is None:
            equal = a_witness is None and all(checks.values())
        if a_witness is None and not equal:
            a_witness = {"checks": sorted(k for k, v in checks.items() if not v)}
        return cls(lhs=lhs, rhs=rhs, equal=equal, witness=a_witness, checks=checks, details=dict(details or {}),
                   label=label)

    def __bool__(self):
        return self.equal

    def to_json(self, with_sides=False):
        result = {"equal": self.equal}
        if not self.equal:
            result["witness"] = self.witness
        if self.checks:
            result["checks"] = dict(self.checks)
        if self.details:
            result["details"] = self.details
        if with_sides:
            for a_side in ("lhs", "rhs"):
                a_value = getattr(self, a_side)
                result[a_side] = a_value.to_json() if hasattr(a_value, "to_json") else str(a_value)
        return result
