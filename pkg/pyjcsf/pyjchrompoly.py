"""
PyJChromPoly evaluates the chromatic polynomial of a graph, or prints its coefficients.

:date: October 2026

"""

import logging

from .core import BasePyJCsfFunction, PyJCommandLineArgumentParser, non_negative_int, check_cap
from .fixtures import load_graph
from .expansions import chromatic_polynomial, chromatic_polynomial_value, polynomial_coefficients

logger = logging.getLogger(__name__)


class PyJChromPoly(BasePyJCsfFunction):
    """
    Evaluates ``P_G(n)``, the number of proper colourings of a graph with ``n`` colours, as the principal
    specialisation of its chromatic symmetric function.

    ::

        usage: pyjchrompoly [-h] [--human] [-v] [--max-vertices MAX_VERTICES]
                            [--n N] [source]

        Evaluates the chromatic polynomial of a graph.

        positional arguments:
          source      A fixture (graph:C4, poset:N...), a graph or poset file, or - for stdin.

        optional arguments:
          --n N       Number of colours. Without it the coefficients are printed instead.

    With ``--n`` the output is a bare integer (``pyjbox pyjchrompoly graph:C4 --n 3`` prints ``18``). Without it the
    output is ``{"coefficients": [...]}``, constant term first.
    """

    def on_get_parser(self):
        ret_parser = PyJCommandLineArgumentParser(prog="pyjchrompoly",
                                                  description="Evaluates the chromatic polynomial of a graph.")
        ret_parser.add_argument("source", nargs="?", default=None,
                                help="A fixture (graph:C4, poset:N...), a graph or poset file, or - for stdin.")
        ret_parser.add_argument("--n", type=non_negative_int, default=None,
                                help="Number of colours. Without it the coefficients are printed instead.")
        return self.add_common_arguments(ret_parser)

    def _compute(self, a_graph):
        check_cap(a_graph.d, self.script_args.max_vertices, "Number of vertices")
        if self.script_args.n is None:
            return {"coefficients": polynomial_coefficients(chromatic_polynomial(a_graph,
                                                                                 cap=self.script_args.max_vertices))}
        return chromatic_polynomial_value(a_graph, self.script_args.n, cap=self.script_args.max_vertices)

    def on_exec_over_params(self, before_exec_result, *args, **kwargs):
        if self.script_args.source is None:
            return None
        return self._compute(load_graph(self.script_args.source))

    def on_exec_over_stdin(self, before_exec_result, *args, **kwargs):
        return self._compute(load_graph("-"))

    def on_render_human(self, exec_result):
        if isinstance(exec_result, int):
            return str(exec_result)
        terms = [f"{c}*n^{k}" for k, c in enumerate(exec_result["coefficients"]) if c]
        return " + ".join(reversed(terms)) or "0"
