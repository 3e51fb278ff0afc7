"""
Labelled graphs and posets, sequencings and labellings, induced orientations, peeling ranks and the descent
statistics built on them.

Vertices are always handled by index ``0..d-1``; names only matter on input and output. A sequencing is a
tuple of vertex indices (position ``i`` holds ``s(i + 1)``), a labelling a tuple of labels in ``1..d`` indexed by
vertex. Descent positions are reported 1-indexed, inside a :class:`pyjcsf.qsym.DescentClass`.

The orientation a sequencing induces makes the vertex sequenced later the larger one: if ``i < j`` and ``s(i)``,
``s(j)`` are adjacent then ``s(i) < s(j)``.

:date: October 2026

"""

import math
import logging
import itertools

import networkx

from .core import (DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SINGLE_CAP, PreconditionError, InputParseError, check_cap)
from .partitions import SetPartition, restricted_growth_partitions
from .qsym import DescentClass
from .symfunc import SymPoly

logger = logging.getLogger(__name__)


class Graph:
    """
    A finite simple labelled undirected graph.

    :param names: Vertex names, in index order.
    :type names: sequence of str
    :param edges: Pairs of vertex indices.
    """

    def __init__(self, names, edges=()):
        self._names = tuple(str(u) for u in names)
        if len(set(self._names)) != len(self._names):
            raise ValueError(f"Vertex names must be unique, received {self._names}")
        d = len(self._names)
        normalised = set()
        for u, v in edges:
            if not (0 <= u < d and 0 <= v < d):
                raise ValueError(f"Edge ({u}, {v}) refers to a vertex outside 0..{d - 1}")
            if u == v:
                raise ValueError(f"Loops are not allowed, vertex {self._names[u]!r}")
            normalised.add((min(u, v), max(u, v)))
        self._edges = frozenset(normalised)
        adjacency = [set() for _ in range(d)]
        for u, v in self._edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency = tuple(frozenset(u) for u in adjacency)

    @classmethod
    def from_named_edges(cls, names, named_edges):
        index = {u: i for i, u in enumerate(names)}
        return cls(names, [(index[u], index[v]) for u, v in named_edges])

    @classmethod
    def complete(cls, d):
        return cls([str(u + 1) for u in range(d)], itertools.combinations(range(d), 2))

    @classmethod
    def empty(cls, d):
        return cls([str(u + 1) for u in range(d)])

    @classmethod
    def cycle(cls, d):
        return cls([str(u + 1) for u in range(d)], [(u, (u + 1) % d) for u in range(d)])

    @classmethod
    def path(cls, d):
        return cls([str(u + 1) for u in range(d)], [(u, u + 1) for u in range(d - 1)])

    @property
    def names(self):
        return self._names

    @property
    def d(self):
        return len(self._names)

    @property
    def vertices(self):
        return range(len(self._names))

    @property
    def edges(self):
        """
        Frozenset of index pairs ``(u, v)`` with ``u < v``.
        """
        return self._edges

    def adjacent(self, u, v):
        return v in self._adjacency[u]

    def neighbours(self, u):
        return self._adjacency[u]

    def to_networkx(self):
        a_graph = networkx.Graph()
        a_graph.add_nodes_from(self.vertices)
        a_graph.add_edges_from(self._edges)
        return a_graph

    def to_json(self):
        return {"vertices": list(self._names),
                "edges": [[self._names[u], self._names[v]] for u, v in sorted(self._edges)]}

    def to_text(self):
        lines = [f"graph {self.d}"]
        lines.extend(self._names)
        lines.extend(f"{self._names[u]} {self._names[v]}" for u, v in sorted(self._edges))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._names == other._names and self._edges == other._edges

    def __hash__(self):
        return hash((self._names, self._edges))

    def __repr__(self):
        return f"Graph({list(self._names)}, edges={sorted(self._edges)})"


class Poset:
    """
    A finite labelled poset. The strict order is stored transitively closed as a set of index pairs ``(x, y)``
    meaning ``x < y``.

    :param names: Element names, in index order.
    :param relations: Pairs of element indices ``(x, y)`` with ``x < y``; the transitive closure is taken.
    :raises PreconditionError: if the relations contain a cycle (the witness is the cycle, by name).
    """

    def __init__(self, names, relations=()):
        names = tuple(str(u) for u in names)
        if len(set(names)) != len(names):
            raise ValueError(f"Element names must be unique, received {names}")
        a_digraph = networkx.DiGraph()
        a_digraph.add_nodes_from(range(len(names)))
        a_digraph.add_edges_from(relations)
        if any(u not in range(len(names)) for u in a_digraph.nodes):
            raise ValueError(f"Relations refer to elements outside 0..{len(names) - 1}")
        if not networkx.is_directed_acyclic_graph(a_digraph):
            a_cycle = networkx.find_cycle(a_digraph)
            raise PreconditionError("The relations contain a cycle and do not define a strict order",
                                    witness=[[names[u], names[v]] for u, v in a_cycle])
        self._set_up(names, frozenset(networkx.transitive_closure_dag(a_digraph).edges))

    def _set_up(self, names, lt):
        self._names = names
        self._lt = lt
        above = [set() for _ in names]
        below = [set() for _ in names]
        for x, y in lt:
            above[x].add(y)
            below[y].add(x)
        self._above = tuple(frozenset(u) for u in above)
        self._below = tuple(frozenset(u) for u in below)

    @classmethod
    def from_closed(cls, names, lt):
        """
        Builds a poset from a relation that is already a transitively closed strict order. Nothing is checked.
        """
        a_poset = cls.__new__(cls)
        a_poset._set_up(tuple(names), frozenset(lt))
        return a_poset

    @classmethod
    def from_named_relations(cls, names, named_relations):
        index = {u: i for i, u in enumerate(names)}
        return cls(names, [(index[u], index[v]) for u, v in named_relations])

    @classmethod
    def chain(cls, d):
        return cls([str(u + 1) for u in range(d)], [(u, u + 1) for u in range(d - 1)])

    @classmethod
    def antichain(cls, d):
        return cls([str(u + 1) for u in range(d)])

    @property
    def names(self):
        return self._names

    @property
    def d(self):
        return len(self._names)

    @property
    def elements(self):
        return range(len(self._names))

    @property
    def lt(self):
        """
        The closed strict order, a frozenset of index pairs.
        """
        return self._lt

    def less(self, x, y):
        return y in self._above[x]

    def comparable(self, x, y):
        return x == y or y in self._above[x] or y in self._below[x]

    def above(self, x):
        return self._above[x]

    def below(self, x):
        return self._below[x]

    def covers(self):
        """
        The cover relations, i.e. the Hasse diagram, as index pairs.
        """
        return frozenset(networkx.transitive_reduction(self.to_networkx()).edges)

    def to_networkx(self):
        a_digraph = networkx.DiGraph()
        a_digraph.add_nodes_from(self.elements)
        a_digraph.add_edges_from(self._lt)
        return a_digraph

    def to_json(self):
        return {"elements": list(self._names),
                "relations": [[self._names[u], self._names[v]] for u, v in sorted(self.covers())]}

    def to_text(self):
        lines = [f"poset {self.d}"]
        lines.extend(self._names)
        lines.extend(f"{self._names[u]} {self._names[v]}" for u, v in sorted(self.covers()))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self._names == other._names and self._lt == other._lt

    def __hash__(self):
        return hash((self._names, self._lt))

    def __repr__(self):
        return f"Poset({list(self._names)}, lt={sorted(self._lt)})"


class Sequencing(tuple):
    """
    A bijection from positions to vertex indices; ``s[i]`` is the vertex at position ``i + 1``.
    """

    def __new__(cls, order):
        order = tuple(int(u) for u in order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"A sequencing must list every vertex index exactly once, received {order}")
        return super().__new__(cls, order)

    @classmethod
    def from_names(cls, names, sequence_of_names):
        """
        :raises InputParseError: on unknown, repeated or missing names.
        """
        index = {u: i for i, u in enumerate(names)}
        unknown = [u for u in sequence_of_names if u not in index]
        if unknown:
            raise InputParseError(f"Unknown element names {unknown}, expected some of {list(names)}")
        try:
            return cls(index[u] for u in sequence_of_names)
        except ValueError:
            raise InputParseError(f"The sequencing {list(sequence_of_names)} must name each of {list(names)} "
                                  "exactly once")

    def positions(self):
        """
        The inverse map, vertex index to 0-based position.
        """
        result = [0] * len(self)
        for i, u in enumerate(self):
            result[u] = i
        return tuple(result)

    def __repr__(self):
        return f"Sequencing({list(self)})"


class Labelling(tuple):
    """
    A bijection from vertex indices to ``1..d``; ``alpha[v]`` is the label of vertex ``v``.
    """

    def __new__(cls, labels):
        labels = tuple(int(u) for u in labels)
        if sorted(labels) != list(range(1, len(labels) + 1)):
            raise ValueError(f"A labelling must use each of 1..{len(labels)} exactly once, received {labels}")
        return super().__new__(cls, labels)

    @classmethod
    def identity(cls, d):
        return cls(range(1, d + 1))

    @classmethod
    def reverse(cls, d):
        return cls(range(d, 0, -1))

    @classmethod
    def from_order(cls, order):
        """
        The labelling that gives label ``i + 1`` to ``order[i]``.
        """
        labels = [0] * len(order)
        for i, u in enumerate(order):
            labels[u] = i + 1
        return cls(labels)

    def is_order_reversing(self, a_poset):
        return all(self[x] > self[y] for x, y in a_poset.lt)

    def __repr__(self):
        return f"Labelling({list(self)})"


def stable_partitions(a_graph):
    """
    All set partitions of the vertex indices with no edge inside a block, by restricted growth string.
    """
    if a_graph.d == 0:
        return [SetPartition([])]
    return list(restricted_growth_partitions(
        a_graph.vertices, compatible=lambda a_block, v: not any(a_graph.adjacent(u, v) for u in a_block)))


def chromatic_symmetric_function(a_graph, cap=DEFAULT_SINGLE_CAP):
    """
    ``X_G``, the sum of ``mt[type(pi)]`` over the stable partitions ``pi`` of ``G``, returned in the ``m`` basis.

    :raises ResourceCapError: if ``G`` has more than ``cap`` vertices.
    """
    check_cap(a_graph.d, cap, "Number of vertices")
    terms = {}
    for pi in stable_partitions(a_graph):
        lam = pi.type
        terms[lam] = terms.get(lam, 0) + lam.r_factorial
    return SymPoly("m", terms)


def orientation_key(a_graph, s):
    """
    The acyclic orientation induced by ``s``, as a frozenset of ``(smaller, larger)`` vertex pairs.
    """
    position = s.positions()
    return frozenset((u, v) if position[u] < position[v] else (v, u) for u, v in a_graph.edges)


def orientation_poset(a_graph, an_orientation):
    """
    The transitive closure of an acyclic orientation given as ``(smaller, larger)`` pairs.
    """
    return Poset(a_graph.names, an_orientation)


def induced_orientation_poset(a_graph, s):
    return orientation_poset(a_graph, orientation_key(a_graph, s))


def alpha_descent_set(alpha, s):
    """
    ``{i : alpha(s(i)) > alpha(s(i + 1))}``, positions 1-indexed.
    """
    if len(alpha) != len(s):
        raise PreconditionError(f"Labelling and sequencing sizes differ ({len(alpha)} and {len(s)})")
    return DescentClass(len(s), frozenset(i + 1 for i in range(len(s) - 1) if alpha[s[i]] > alpha[s[i + 1]]))


def peeling_rank(a_poset):
    """
    The stage (from 1) at which each element is removed when minimal elements are peeled off repeatedly.

    :returns: tuple indexed by element.
    """
    ranks = [0] * a_poset.d
    for stage, a_generation in enumerate(networkx.topological_generations(a_poset.to_networkx()), start=1):
        for u in a_generation:
            ranks[u] = stage
    return tuple(ranks)


def peeling_labelling(a_poset, beta):
    """
    Labels elements by their position in peeling order: highest rank first, and within a rank by decreasing
    ``beta``. The result is order-reversing on ``a_poset``.
    """
    ranks = peeling_rank(a_poset)
    return Labelling.from_order(sorted(a_poset.elements, key=lambda v: (-ranks[v], -beta[v])))


def canonical_peeling_labelling(a_graph, beta, s, a_poset=None):
    """
    The labelling ``alpha_s`` obtained from the peeling order of the poset induced by ``s`` on ``a_graph``. It
    depends on ``s`` only through the orientation ``s`` induces.

    :param a_poset: The induced poset, if the caller already has it.
    """
    return peeling_labelling(a_poset or induced_orientation_poset(a_graph, s), beta)


def cg_ascent_set(a_graph, beta, s, a_poset=None):
    """
    Positions ``i`` where the peeling rank rises from ``s(i)`` to ``s(i + 1)``, or stays level while ``beta``
    rises.
    """
    ranks = peeling_rank(a_poset or induced_orientation_poset(a_graph, s))
    ascents = set()
    for i in range(len(s) - 1):
        u, v = s[i], s[i + 1]
        if ranks[u] < ranks[v] or (ranks[u] == ranks[v] and beta[u] < beta[v]):
            ascents.add(i + 1)
    return DescentClass(len(s), frozenset(ascents))


def incomparability_graph(a_poset):
    return Graph(a_poset.names, [(x, y) for x, y in itertools.combinations(a_poset.elements, 2)
                                 if not a_poset.comparable(x, y)])


def poset_descent_set(a_poset, s):
    """
    ``{i : NOT s(i) < s(i + 1)}``; incomparable neighbours count as a descent.
    """
    return DescentClass(len(s), frozenset(i + 1 for i in range(len(s) - 1) if not a_poset.less(s[i], s[i + 1])))


def find_three_plus_one(a_poset):
    """
    Looks for an induced copy of a 3-element chain plus an isolated point.

    :returns: ``{"chain": [...], "point": ...}`` by name, or None.
    """
    for a_subset in itertools.combinations(a_poset.elements, 4):
        for point in a_subset:
            rest = [u for u in a_subset if u != point]
            if any(a_poset.comparable(point, u) for u in rest):
                continue
            a_chain = sorted(rest, key=lambda u: len(a_poset.below(u) & set(rest)))
            if a_poset.less(a_chain[0], a_chain[1]) and a_poset.less(a_chain[1], a_chain[2]):
                return {"chain": [a_poset.names[u] for u in a_chain], "point": a_poset.names[point]}
    return None


def is_three_plus_one_free(a_poset):
    return find_three_plus_one(a_poset) is None


def find_induced_n(a_poset):
    """
    Looks for four elements ``p, q, r, t`` whose induced order is exactly ``p < q``, ``r < q``, ``r < t``.

    :returns: ``{"elements": [...], "relations": [...]}`` by name, or None.
    """
    for a_subset in itertools.combinations(a_poset.elements, 4):
        induced = {(x, y) for x in a_subset for y in a_subset if a_poset.less(x, y)}
        if len(induced) != 3:
            continue
        for p, q, r, t in itertools.permutations(a_subset):
            if induced == {(p, q), (r, q), (r, t)}:
                names = a_poset.names
                return {"elements": [names[u] for u in (p, q, r, t)],
                        "relations": [[names[p], names[q]], [names[r], names[q]], [names[r], names[t]]]}
    return None


def is_N_free(a_poset):
    return find_induced_n(a_poset) is None


def require_three_plus_one_free(a_poset):
    """
    :raises PreconditionError: naming a violating 4-element subposet.
    """
    a_witness = find_three_plus_one(a_poset)
    if a_witness is not None:
        raise PreconditionError(f"The poset is not (3+1)-free: {a_witness['chain']} is a chain and "
                                f"{a_witness['point']!r} is incomparable to all of it", witness=a_witness)


def corollary3_labelling(a_poset, s, an_orientation_poset=None):
    """
    The labelling of the incomparability graph of ``a_poset`` built by repeatedly taking the maximal remaining
    elements of the poset ``s`` induces (a chain in ``a_poset``), labelling the ``a_poset``-minimal one among them
    with the next label and removing it.
    """
    oriented = an_orientation_poset or induced_orientation_poset(incomparability_graph(a_poset), s)
    remaining = set(a_poset.elements)
    order = []
    while remaining:
        maximal = [u for u in remaining if not (oriented.above(u) & remaining)]
        chosen = [u for u in maximal if not any(a_poset.less(v, u) for v in maximal)]
        if len(chosen) != 1:
            raise RuntimeError(f"Maximal elements {maximal} do not form a chain of the poset")
        order.append(chosen[0])
        remaining.discard(chosen[0])
    return Labelling.from_order(order)


def enumerate_sequencings(d, cap=DEFAULT_SINGLE_CAP):
    """
    All ``d!`` sequencings of ``0..d-1`` in lexicographic order.

    :raises ResourceCapError: if ``d`` exceeds ``cap``.
    """
    check_cap(d, cap, "Sequencing length")
    return (Sequencing(u) for u in itertools.permutations(range(d)))


def enumerate_graphs(n, cap=DEFAULT_EXHAUSTIVE_CAP):
    """
    All ``2^C(n, 2)`` labelled graphs on vertices ``"1".."n"``, ordered by the bitmask of their edge set.
    """
    check_cap(n, cap, "Exhaustive graph size")
    names = [str(u + 1) for u in range(n)]
    all_pairs = list(itertools.combinations(range(n), 2))
    return (Graph(names, [a_pair for k, a_pair in enumerate(all_pairs) if mask >> k & 1])
            for mask in range(2 ** len(all_pairs)))


def _closed_orders(n):
    # Every labelled poset on n + 1 elements restricts to one on 0..n-1; the new element n is placed above an
    # order ideal and below an order filter, all of whose pairs are already related.
    if n == 0:
        yield frozenset()
        return
    new = n - 1
    for lt in _closed_orders(n - 1):
        below = {u: {x for x, y in lt if y == u} for u in range(new)}
        above = {u: {y for x, y in lt if x == u} for u in range(new)}
        subsets = [frozenset(u) for k in range(new + 1) for u in itertools.combinations(range(new), k)]
        ideals = [u for u in subsets if all(below[x] <= u for x in u)]
        filters = [u for u in subsets if all(above[x] <= u for x in u)]
        for an_ideal in ideals:
            for a_filter in filters:
                if an_ideal & a_filter:
                    continue
                if all(y in above[x] for x in an_ideal for y in a_filter):
                    yield lt | {(x, new) for x in an_ideal} | {(new, y) for y in a_filter}


def enumerate_posets(n, cap=DEFAULT_EXHAUSTIVE_CAP):
    """
    All labelled posets on elements ``"1".."n"`` (1, 1, 3, 19, 219, 4231, 130023 of them for n = 0..6), each
    exactly once, in a fixed order.
    """
    check_cap(n, cap, "Exhaustive poset size")
    names = [str(u + 1) for u in range(n)]
    return (Poset.from_closed(names, lt) for lt in _closed_orders(n))


def acyclic_orientations(a_graph):
    """
    The acyclic orientations of ``a_graph``, found by trying every choice of direction for every edge.

    :returns: list of frozensets of ``(smaller, larger)`` pairs.
    """
    edges = sorted(a_graph.edges)
    result = []
    for directions in itertools.product((False, True), repeat=len(edges)):
        an_orientation = frozenset((v, u) if flip else (u, v) for (u, v), flip in zip(edges, directions))
        a_digraph = networkx.DiGraph()
        a_digraph.add_nodes_from(a_graph.vertices)
        a_digraph.add_edges_from(an_orientation)
        if networkx.is_directed_acyclic_graph(a_digraph):
            result.append(an_orientation)
    return result


def linear_extensions(a_poset):
    """
    All sequencings ``s`` of ``a_poset`` with ``s(i) < s(j)`` only if ``i < j``.
    """
    return [Sequencing(u) for u in networkx.all_topological_sorts(a_poset.to_networkx())]


def proper_colorings_count(a_graph, n):
    """
    Number of maps ``V -> {1..n}`` giving adjacent vertices different colours, by brute force.
    """
    edges = list(a_graph.edges)
    return sum(1 for a_colouring in itertools.product(range(n), repeat=a_graph.d)
               if all(a_colouring[u] != a_colouring[v] for u, v in edges))


def _parse_text(text, kind):
    lines = []
    for a_line in text.splitlines():
        a_line = a_line.split("#", 1)[0].replace("<", " ").strip()
        if a_line:
            lines.append(a_line.split())
    if not lines or len(lines[0]) != 2 or lines[0][0] != kind:
        raise InputParseError(f"Expected a header line '{kind} n'")
    try:
        n = int(lines[0][1])
    except ValueError:
        raise InputParseError(f"Invalid {kind} size {lines[0][1]!r}")
    if n < 0:
        raise InputParseError(f"Invalid {kind} size {n}")
    names = []
    pairs = []
    for line_number, tokens in enumerate(lines[1:], start=2):
        if len(tokens) not in (1, 2):
            raise InputParseError(f"Line {line_number}: expected one or two names, received {tokens}")
        for u in tokens:
            if u not in names:
                names.append(u)
        if len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise InputParseError(f"Line {line_number}: {tokens[0]!r} cannot be related to itself")
            pairs.append(tuple(tokens))
    if len(names) > n:
        raise InputParseError(f"The header declares {n} vertices but {len(names)} names appear")
    padding = (str(u) for u in itertools.count(1) if str(u) not in names)
    names.extend(itertools.islice(padding, n - len(names)))
    return names, pairs


def parse_graph_text(text):
    """
    Parses::

        graph 3
        # comments and blank lines are ignored
        a b
        b c

    One line per edge, one name alone declares a vertex. Names are indexed in order of first appearance and
    vertices the header declares but no line names are called ``1``, ``2``, ... (skipping names in use).
    """
    names, pairs = _parse_text(text, "graph")
    return Graph.from_named_edges(names, pairs)


def parse_poset_text(text):
    """
    Parses ``poset n`` followed by one relation ``x y`` (or ``x < y``) per line, meaning ``x < y``. The
    transitive closure is taken.
    """
    names, pairs = _parse_text(text, "poset")
    try:
        return Poset.from_named_relations(names, pairs)
    except PreconditionError as e:
        raise InputParseError(f"{e} ({e.witness})")


def count_stable_partitions_by_colourings(a_graph):
    """
    Number of stable partitions, recovered from proper colouring counts: ``P_G(n) = sum_k a_k n(n-1)...(n-k+1)``
    where ``a_k`` counts stable partitions into ``k`` blocks.
    """
    d = a_graph.d
    values = [proper_colorings_count(a_graph, n) for n in range(d + 1)]
    blocks = [0] * (d + 1)
    for n in range(d + 1):
        blocks[n] = (values[n] - sum(blocks[k] * math.perm(n, k) for k in range(n))) // math.factorial(n)
    return sum(blocks)
