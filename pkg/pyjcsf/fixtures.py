"""
Built-in named graphs and posets, and the loader every script uses to turn a command line source (fixture name,
file path or ``-`` for stdin) into a :class:`~pyjcsf.combin.Graph` or :class:`~pyjcsf.combin.Poset`.

:date: October 2026

"""

import sys
import logging

from .core import InputParseError
from .combin import Graph, Poset, incomparability_graph, parse_graph_text, parse_poset_text

logger = logging.getLogger(__name__)


def poset_n():
    """
    Poset N, drawn with ``a, b`` on the top row and ``c, d`` below, read left to right, top to bottom:
    ``c < a``, ``c < b``, ``d < b``.
    """
    return Poset.from_named_relations("abcd", [("c", "a"), ("c", "b"), ("d", "b")])


def poset_n_mirror():
    """
    The left-right mirror image of :func:`poset_n` under the same naming: ``c < a``, ``d < a``, ``d < b``.
    """
    return Poset.from_named_relations("abcd", [("c", "a"), ("d", "a"), ("d", "b")])


FIXTURES = {
    "poset:N": poset_n,
    "poset:Nmirror": poset_n_mirror,
    "graph:P3": lambda: Graph.path(3),
    **{f"graph:K{d}": (lambda d=d: Graph.complete(d)) for d in range(2, 6)},
    **{f"graph:C{d}": (lambda d=d: Graph.cycle(d)) for d in (4, 5)},
    **{f"graph:E{d}": (lambda d=d: Graph.empty(d)) for d in range(2, 5)},
    **{f"poset:chain{d}": (lambda d=d: Poset.chain(d)) for d in range(2, 6)},
    **{f"poset:antichain{d}": (lambda d=d: Poset.antichain(d)) for d in range(2, 5)},
}


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise InputParseError(f"Unknown fixture {name!r}, expected one of {sorted(FIXTURES)}")


def _read_source(source):
    if source is None or source == "-":
        return sys.stdin.read()
    try:
        with open(source, "rt") as fd:
            return fd.read()
    except OSError as e:
        raise InputParseError(f"Cannot read {source!r}: {e}")


def _load(source):
    if source is not None and source.startswith(("graph:", "poset:")):
        logger.debug(f"Loading fixture {source}")
        return fixture(source)
    text = _read_source(source)
    header = next((u.split("#", 1)[0].strip() for u in text.splitlines() if u.split("#", 1)[0].strip()), "")
    if header.startswith("poset"):
        return parse_poset_text(text)
    return parse_graph_text(text)


def load_graph(source):
    """
    Loads a graph. A poset source yields its incomparability graph.

    :param source: A fixture name, a file path, or ``-`` / None for stdin.
    :type source: str
    """
    loaded = _load(source)
    return incomparability_graph(loaded) if isinstance(loaded, Poset) else loaded


def load_poset(source):
    loaded = _load(source)
    if not isinstance(loaded, Poset):
        raise InputParseError(f"{source or 'stdin'} describes a graph, a poset is required")
    return loaded
