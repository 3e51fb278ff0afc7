"""
Standard Young tableaux, P-tableaux and the row insertion of Sundquist, Wagner and West for (3+1)-free posets.

Tableaux are written in English notation: row 1 on top, a "lower" row has a larger index. Insertion tableaux
hold poset element indices; recording tableaux hold the steps ``1..d``.

:date: October 2026

"""

import bisect
import logging
import dataclasses
import typing

from .core import DEFAULT_SINGLE_CAP, PreconditionError, check_cap
from .partitions import IntPartition, enumerate_partitions
from .qsym import DescentClass, QSymPoly
from .combin import enumerate_sequencings, poset_descent_set, require_three_plus_one_free, find_induced_n
from .reports import ExpansionReport

logger = logging.getLogger(__name__)


def _shape_of(rows):
    return IntPartition(len(u) for u in rows)


def is_valid_syt(rows):
    """
    True if ``rows`` is a standard Young tableau: a partition shape filled with ``1..d``, increasing along rows
    and down columns.
    """
    rows = [list(u) for u in rows]
    if any(not u for u in rows) or any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
        return False
    entries = sorted(u for a_row in rows for u in a_row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for i, a_row in enumerate(rows):
        for j, u in enumerate(a_row):
            if j > 0 and a_row[j - 1] >= u:
                return False
            if i > 0 and rows[i - 1][j] >= u:
                return False
    return True


def is_valid_p_tableau(rows, a_poset):
    """
    True if every element of ``a_poset`` appears exactly once, every row is a chain increasing to the right and no
    entry is greater than the entry immediately below it.
    """
    rows = [list(u) for u in rows]
    if any(not u for u in rows) or any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
        return False
    if sorted(u for a_row in rows for u in a_row) != list(a_poset.elements):
        return False
    for i, a_row in enumerate(rows):
        for j, u in enumerate(a_row):
            if j > 0 and not a_poset.less(a_row[j - 1], u):
                return False
            if i > 0 and a_poset.less(u, rows[i - 1][j]):
                return False
    return True


class StandardYoungTableau:
    """
    A standard Young tableau, ``i`` being a descent when ``i + 1`` sits in a strictly lower row than ``i``.
    """

    def __init__(self, rows):
        rows = tuple(tuple(u) for u in rows)
        if not is_valid_syt(rows):
            raise ValueError(f"{rows} is not a standard Young tableau")
        self._rows = rows

    @property
    def rows(self):
        return self._rows

    @property
    def shape(self):
        return _shape_of(self._rows)

    @property
    def d(self):
        return sum(len(u) for u in self._rows)

    @property
    def descent_set(self):
        row_index = {u: i for i, a_row in enumerate(self._rows) for u in a_row}
        return DescentClass(self.d, frozenset(i for i in range(1, self.d) if row_index[i + 1] > row_index[i]))

    def to_json(self):
        return [list(u) for u in self._rows]

    def __eq__(self, other):
        if not isinstance(other, StandardYoungTableau):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"StandardYoungTableau({self.to_json()})"


class PTableau:
    """
    A filling of a Ferrers shape by the elements of a poset, rows being chains.
    """

    def __init__(self, rows, a_poset, validate=True):
        rows = tuple(tuple(u) for u in rows)
        if validate and not is_valid_p_tableau(rows, a_poset):
            raise ValueError(f"{rows} is not a P-tableau")
        self._rows = rows
        self._poset = a_poset

    @property
    def rows(self):
        return self._rows

    @property
    def shape(self):
        return _shape_of(self._rows)

    def to_json(self):
        return [[self._poset.names[u] for u in a_row] for a_row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, PTableau):
            return NotImplemented
        return self._rows == other._rows and self._poset == other._poset

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"PTableau({self.to_json()})"


@dataclasses.dataclass(frozen=True)
class RowAction:
    """
    What happened in one row: ``append`` (the element ends up at the end of the row, possibly a new row),
    ``bump`` (it replaces ``bumped``, which moves on to the next row) or ``skip``.
    """
    row: int
    action: str
    element: int
    bumped: int = None

    def to_json(self, names):
        result = {"row": self.row, "action": self.action, "element": names[self.element]}
        if self.bumped is not None:
            result["bumped"] = names[self.bumped]
        return result


@dataclasses.dataclass(frozen=True)
class InsertionStep:
    element: int
    actions: tuple


@dataclasses.dataclass(frozen=True)
class InsertionTrace:
    steps: tuple

    def to_json(self, names):
        return [{"element": names[a_step.element], "actions": [u.to_json(names) for u in a_step.actions]}
                for a_step in self.steps]


class InsertionResult(typing.NamedTuple):
    insertion: PTableau
    recording: StandardYoungTableau
    trace: InsertionTrace


def enumerate_syt(shape):
    """
    All standard Young tableaux of ``shape``, placing ``1, 2, ...`` row by row from the top.
    """
    shape = IntPartition(shape)
    d = shape.size
    result = []
    rows = [[] for _ in shape]

    def place(entry):
        if entry > d:
            result.append(StandardYoungTableau(rows))
            return
        for i, a_row in enumerate(rows):
            if len(a_row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(a_row)):
                a_row.append(entry)
                place(entry + 1)
                a_row.pop()

    if d:
        place(1)
    return result


def syt_descent_distribution(shape):
    """
    ``f^lam_S`` for every ``S``: the number of standard Young tableaux of ``shape`` with descent set ``S``.

    :returns: dict of DescentClass to int.
    """
    shape = IntPartition(shape)
    if not shape:
        raise PreconditionError("Descent sets need a non-empty shape")
    distribution = {}
    for a_tableau in enumerate_syt(shape):
        distribution[a_tableau.descent_set] = distribution.get(a_tableau.descent_set, 0) + 1
    return distribution


def enumerate_p_tableaux(a_poset, shape=None):
    """
    All P-tableaux of ``a_poset`` of the given shape, or of every shape of size ``|P|`` when ``shape`` is None.
    Cells are filled in reading order by backtracking.
    """
    shapes = enumerate_partitions(a_poset.d) if shape is None else (IntPartition(shape),)
    result = []
    for a_shape in shapes:
        if a_shape.size != a_poset.d:
            raise PreconditionError(f"Shape {a_shape} does not have {a_poset.d} cells")
        cells = [(i, j) for i, part in enumerate(a_shape) for j in range(part)]
        rows = [[None] * part for part in a_shape]
        used = set()

        def fill(k):
            if k == len(cells):
                result.append(PTableau(rows, a_poset, validate=False))
                return
            i, j = cells[k]
            for x in a_poset.elements:
                if x in used:
                    continue
                if j > 0 and not a_poset.less(rows[i][j - 1], x):
                    continue
                if i > 0 and a_poset.less(x, rows[i - 1][j]):
                    continue
                rows[i][j] = x
                used.add(x)
                fill(k + 1)
                used.discard(x)
            rows[i][j] = None

        fill(0)
    return result


def count_p_tableaux(a_poset):
    """
    ``f^lam_P`` for every shape ``lam`` with at least one P-tableau.
    """
    counts = {}
    for a_tableau in enumerate_p_tableaux(a_poset):
        counts[a_tableau.shape] = counts.get(a_tableau.shape, 0) + 1
    return counts


def _check_row(a_poset, a_row, incomparable, x):
    if incomparable and incomparable != list(range(incomparable[0], incomparable[-1] + 1)):
        raise RuntimeError(f"Elements incomparable to {x} do not form a consecutive block in row {a_row}")
    if incomparable:
        if not all(a_poset.less(u, x) for u in a_row[:incomparable[0]]):
            raise RuntimeError(f"{x} does not exceed everything left of its incomparable block in {a_row}")
        if not all(a_poset.less(x, u) for u in a_row[incomparable[-1] + 1:]):
            raise RuntimeError(f"{x} is not below everything right of its incomparable block in {a_row}")


def _is_chain(a_poset, a_row):
    return all(a_poset.less(a_row[k], a_row[k + 1]) for k in range(len(a_row) - 1))


def sww_insert(a_poset, s):
    """
    Inserts ``s(1), s(2), ...`` in turn. To insert ``x`` into row ``R``:

    * no element of ``R`` incomparable to ``x``: append ``x`` if it exceeds all of ``R``, otherwise bump the
      smallest element of ``R`` greater than ``x`` into the next row;
    * exactly one incomparable element: ``x`` bumps it;
    * two incomparable elements: ``x`` skips ``R`` and goes on to the next row.

    Inserting into a row that does not exist creates it. The recording tableau gets entry ``i`` in the cell created
    at step ``i``. Row chains and the block structure of incomparable elements are asserted at every step.

    :param a_poset: A (3+1)-free poset.
    :param s: A sequencing of its elements.
    :returns: InsertionResult
    :raises PreconditionError: if the poset is not (3+1)-free (with a witness) or ``s`` has the wrong length.
    """
    require_three_plus_one_free(a_poset)
    if len(s) != a_poset.d:
        raise PreconditionError(f"The sequencing has {len(s)} entries, the poset {a_poset.d} elements")
    insertion_rows = []
    recording_rows = []
    steps = []
    for step, element in enumerate(s, start=1):
        x = element
        actions = []
        row = 0
        while True:
            if row == len(insertion_rows):
                insertion_rows.append([x])
                recording_rows.append([step])
                actions.append(RowAction(row + 1, "append", x))
                break
            a_row = insertion_rows[row]
            incomparable = [k for k, u in enumerate(a_row) if not a_poset.comparable(u, x)]
            _check_row(a_poset, a_row, incomparable, x)
            if len(incomparable) == 0:
                greater = [k for k, u in enumerate(a_row) if a_poset.less(x, u)]
                if not greater:
                    a_row.append(x)
                    recording_rows[row].append(step)
                    actions.append(RowAction(row + 1, "append", x))
                    break
                position = greater[0]
            elif len(incomparable) == 1:
                position = incomparable[0]
            elif len(incomparable) == 2:
                actions.append(RowAction(row + 1, "skip", x))
                row += 1
                continue
            else:
                raise RuntimeError(f"{len(incomparable)} elements of row {a_row} are incomparable to {x}")
            bumped = a_row[position]
            a_row[position] = x
            actions.append(RowAction(row + 1, "bump", x, bumped))
            if not _is_chain(a_poset, a_row):
                raise RuntimeError(f"Row {row + 1} is no longer a chain after {x} bumped {bumped}")
            x = bumped
            row += 1
        steps.append(InsertionStep(element, tuple(actions)))
    return InsertionResult(PTableau(insertion_rows, a_poset, validate=False),
                           StandardYoungTableau(recording_rows),
                           InsertionTrace(tuple(steps)))


def classical_row_insert(word):
    """
    Robinson-Schensted row insertion of a word of distinct comparable values.

    :returns: (insertion rows, recording rows) as lists of lists.
    """
    insertion_rows = []
    recording_rows = []
    for step, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(insertion_rows):
                insertion_rows.append([x])
                recording_rows.append([step])
                break
            position = bisect.bisect_right(insertion_rows[row], x)
            if position == len(insertion_rows[row]):
                insertion_rows[row].append(x)
                recording_rows[row].append(step)
                break
            insertion_rows[row][position], x = x, insertion_rows[row][position]
            row += 1
    return insertion_rows, recording_rows


def _sww_sweep(a_poset, cap):
    check_cap(a_poset.d, cap, "Number of poset elements")
    for s in enumerate_sequencings(a_poset.d, cap=cap):
        yield s, sww_insert(a_poset, s)


def _sequencing_names(a_poset, s):
    return [a_poset.names[u] for u in s]


def sww_injectivity(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Runs the insertion on every sequencing of a (3+1)-free poset and reports whether the ``(T, T')`` pairs are
    distinct and valid. No N-freeness is required; on posets containing N this is an empirical answer.
    """
    require_three_plus_one_free(a_poset)
    seen = {}
    collision = None
    checks = {"distinct": True, "valid_insertion": True, "valid_recording": True, "shapes_agree": True}
    for s, a_result in _sww_sweep(a_poset, cap):
        checks["valid_insertion"] &= is_valid_p_tableau(a_result.insertion.rows, a_poset)
        checks["valid_recording"] &= is_valid_syt(a_result.recording.rows)
        checks["shapes_agree"] &= a_result.insertion.shape == a_result.recording.shape
        a_key = (a_result.insertion.rows, a_result.recording.rows)
        if a_key in seen and collision is None:
            checks["distinct"] = False
            collision = {"sequencings": [_sequencing_names(a_poset, seen[a_key]), _sequencing_names(a_poset, s)],
                         "insertion": a_result.insertion.to_json(), "recording": a_result.recording.to_json()}
        seen.setdefault(a_key, s)
    return ExpansionReport.from_checks(checks, label="sww-injectivity", witness=collision,
                                       details={"pairs": len(seen)})


def sww_inverse_exists(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Checks that the insertion is injective (hence, by counting, bijective onto pairs of a P-tableau and a standard
    Young tableau of the same shape) on a (3+1)-free, N-free poset.

    :raises PreconditionError: if the poset contains a 3+1 or an induced N.
    """
    require_three_plus_one_free(a_poset)
    a_witness = find_induced_n(a_poset)
    if a_witness is not None:
        raise PreconditionError(f"The poset contains an induced N on {a_witness['elements']}", witness=a_witness)
    return sww_injectivity(a_poset, cap=cap)


def sww_respects_descents(a_poset, cap=DEFAULT_SINGLE_CAP):
    """
    Compares, for every sequencing ``s``, the descent set of ``s`` in the poset with the descent set of its
    recording tableau. ``equal`` holds when they agree for every ``s``; the witness is the first ``s`` where they
    do not. ``details`` records whether the poset is N-free and how many sequencings disagree.
    """
    require_three_plus_one_free(a_poset)
    sequencing_terms = {}
    recording_terms = {}
    violations = 0
    a_witness = None
    for s, a_result in _sww_sweep(a_poset, cap):
        descents = poset_descent_set(a_poset, s)
        recorded = a_result.recording.descent_set
        sequencing_terms[descents] = sequencing_terms.get(descents, 0) + 1
        recording_terms[recorded] = recording_terms.get(recorded, 0) + 1
        if descents != recorded:
            violations += 1
            if a_witness is None:
                a_witness = {"sequencing": _sequencing_names(a_poset, s),
                             "poset_descents": list(descents.elements),
                             "recording_descents": list(recorded.elements),
                             "insertion": a_result.insertion.to_json(),
                             "recording": a_result.recording.to_json()}
    logger.debug(f"{violations} descent violations on {a_poset!r}")
    return ExpansionReport(lhs=QSymPoly("fundamental", sequencing_terms),
                           rhs=QSymPoly("fundamental", recording_terms),
                           equal=violations == 0, witness=a_witness, label="sww-descents",
                           details={"n_free": find_induced_n(a_poset) is None, "violations": violations})
