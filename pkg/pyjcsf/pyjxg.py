"""
PyJXg computes the chromatic symmetric function of a graph in any of the supported bases.

:date: October 2026

"""

import logging

from .core import BasePyJCsfFunction, PyJCommandLineArgumentParser, check_cap
from .fixtures import load_graph
from .symfunc import SymPoly, BASES, convert
from .qsym import QSymPoly, sym_to_fundamental, sym_to_monomial_qsym
from .combin import chromatic_symmetric_function
from .expansions import theorem1_expansion, xi_transfer

logger = logging.getLogger(__name__)


class PyJXg(BasePyJCsfFunction):
    """
    Computes ``X_G``, the sum of augmented monomials over the stable partitions of a graph.

    ::

        usage: pyjxg [-h] [--human] [-v] [--max-vertices MAX_VERTICES]
                     [--basis {m,mt,p,e,h,s,xi,Q,Qt}] [source]

        Computes the chromatic symmetric function of a graph.

        positional arguments:
          source                A fixture (graph:K3, poset:N...), a graph or poset file, or - for stdin.

        optional arguments:
          --basis {m,mt,p,e,h,s,xi,Q,Qt}
                                Output basis (Q: fundamental, Qt: monomial quasi-symmetric).

    A poset source is replaced by its incomparability graph. The ``xi`` expansion is read off the fundamental
    expansion of the sequencing sum; its coefficients are non-negative integers.

    Output is a SymPoly (or QSymPoly) in JSON, e.g. ``pyjbox pyjxg graph:K2``::

        {"basis": "m", "terms": [{"den": "1", "num": "2", "partition": [1, 1]}]}
    """

    def on_get_parser(self):
        ret_parser = PyJCommandLineArgumentParser(prog="pyjxg",
                                                  description="Computes the chromatic symmetric function of a graph.")
        ret_parser.add_argument("source", nargs="?", default=None,
                                help="A fixture (graph:K3, poset:N...), a graph or poset file, or - for stdin.")
        ret_parser.add_argument("--basis", choices=BASES + ("Q", "Qt"), default="m",
                                help="Output basis (Q: fundamental, Qt: monomial quasi-symmetric).")
        return self.add_common_arguments(ret_parser)

    def _compute(self, a_graph):
        check_cap(a_graph.d, self.script_args.max_vertices, "Number of vertices")
        basis = self.script_args.basis
        logger.info(f"X_G of a graph on {a_graph.d} vertices in basis {basis}")
        if basis == "xi":
            return xi_transfer(theorem1_expansion(a_graph, cap=self.script_args.max_vertices)).to_json()
        x_g = chromatic_symmetric_function(a_graph, cap=self.script_args.max_vertices)
        if basis == "Q":
            return sym_to_fundamental(x_g).to_json()
        if basis == "Qt":
            return sym_to_monomial_qsym(x_g).to_json()
        return convert(x_g, basis).to_json()

    def on_exec_over_params(self, before_exec_result, *args, **kwargs):
        if self.script_args.source is None:
            return None
        return self._compute(load_graph(self.script_args.source))

    def on_exec_over_stdin(self, before_exec_result, *args, **kwargs):
        return self._compute(load_graph("-"))

    def on_render_human(self, exec_result):
        if exec_result["basis"] in ("fundamental", "monomial"):
            return QSymPoly.from_json(exec_result).to_human()
        return SymPoly.from_json(exec_result).to_human()
