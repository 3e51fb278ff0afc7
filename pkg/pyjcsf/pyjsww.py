"""
PyJSww runs the insertion of Sundquist, Wagner and West on one sequencing of a (3+1)-free poset.

:date: October 2026

"""

import logging

from .core import BasePyJCsfFunction, PyJCommandLineArgumentParser, InputParseError, check_cap
from .fixtures import load_poset
from .combin import Sequencing, poset_descent_set
from .tableaux import sww_insert

logger = logging.getLogger(__name__)


class PyJSww(BasePyJCsfFunction):
    """
    Inserts the elements of a poset in the order of a sequencing and prints the insertion tableau, the recording
    tableau and the row by row trace.

    ::

        usage: pyjsww [-h] [--human] [-v] [--max-vertices MAX_VERTICES]
                      --sequencing SEQUENCING [source]

        positional arguments:
          source                A fixture (poset:N, poset:chain3...), a poset file, or - for stdin.

        optional arguments:
          --sequencing SEQUENCING
                                Element names in insertion order, "d,a,c,b" or ':["d","a","c","b"]'.

    ``pyjbox pyjsww poset:N --sequencing d,a,c,b`` prints::

        {"descents": [1, 2], "insertion": [["c", "b"], ["a"], ["d"]], "recording": [[1, 4], [2], [3]],
         "recording_descents": [1, 2], "shape": [2, 1, 1], "trace": [...]}

    Posets that are not (3+1)-free are refused (exit status 4) with a violating 4-element subposet.
    """

    def on_get_parser(self):
        ret_parser = PyJCommandLineArgumentParser(prog="pyjsww",
                                                  description="Runs SWW insertion on one sequencing of a poset.")
        ret_parser.add_argument("source", nargs="?", default=None,
                                help="A fixture (poset:N, poset:chain3...), a poset file, or - for stdin.")
        ret_parser.add_argument("--sequencing", required=True,
                                help='Element names in insertion order, "d,a,c,b" or \':["d","a","c","b"]\'.')
        return self.add_common_arguments(ret_parser)

    def on_validate_args(self, *args, **kwargs):
        a_sequencing = self.script_args.sequencing
        if isinstance(a_sequencing, str):
            a_sequencing = [u.strip() for u in a_sequencing.split(",") if u.strip()]
        if not isinstance(a_sequencing, list) or not all(isinstance(u, (str, int)) for u in a_sequencing):
            raise InputParseError(f"A sequencing is a comma separated or JSON list of names, received "
                                  f"{self.script_args.sequencing!r}")
        self.script_args.sequencing = [str(u) for u in a_sequencing]
        return True

    def _compute(self, a_poset):
        check_cap(a_poset.d, self.script_args.max_vertices, "Number of poset elements")
        s = Sequencing.from_names(a_poset.names, self.script_args.sequencing)
        a_result = sww_insert(a_poset, s)
        return {"insertion": a_result.insertion.to_json(),
                "recording": a_result.recording.to_json(),
                "shape": list(a_result.recording.shape),
                "descents": list(poset_descent_set(a_poset, s).elements),
                "recording_descents": list(a_result.recording.descent_set.elements),
                "trace": a_result.trace.to_json(a_poset.names)}

    def on_exec_over_params(self, before_exec_result, *args, **kwargs):
        if self.script_args.source is None:
            return None
        return self._compute(load_poset(self.script_args.source))

    def on_exec_over_stdin(self, before_exec_result, *args, **kwargs):
        return self._compute(load_poset("-"))

    def on_render_human(self, exec_result):
        def render(rows):
            width = max(len(str(u)) for a_row in rows for u in a_row)
            return [" ".join(f"{str(u):>{width}}" for u in a_row) for a_row in rows]

        lines = ["insertion:"] + ["  " + u for u in render(exec_result["insertion"])]
        lines += ["recording:"] + ["  " + u for u in render(exec_result["recording"])]
        lines.append(f"descents: {exec_result['descents']}  recording descents: {exec_result['recording_descents']}")
        for a_step in exec_result["trace"]:
            actions = ", ".join(f"{u['action']} row {u['row']}" + (f" ({u['bumped']})" if "bumped" in u else "")
                                for u in a_step["actions"])
            lines.append(f"  {a_step['element']}: {actions}")
        return "\n".join(lines)
