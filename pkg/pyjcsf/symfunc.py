"""
The ring of symmetric functions over the rationals, restricted to finite linear combinations of basis elements.

Supported bases (the ``basis`` tag of a :class:`SymPoly`):

* ``m``  - monomial
* ``mt`` - augmented monomial, ``mt[lam] = r_lam! m[lam]``
* ``p``  - power sum
* ``e``  - elementary
* ``h``  - complete homogeneous
* ``s``  - Schur (Kostka numbers computed by tableau enumeration, degree capped)
* ``xi`` - the path digraph basis, ``xi[lam] = sum_F mt[pi(F)] / l(pi(F))!``

Every conversion goes through the ``m`` basis. The inverse change of basis matrices are computed once per degree with
``sympy`` in exact rational arithmetic and cached.

:date: October 2026

"""

import math
import logging
import functools
import itertools
from fractions import Fraction

import sympy

from .core import DEFAULT_SCHUR_DEGREE_CAP, PreconditionError, check_cap
from .lincomb import LinearCombination, to_fraction
from .partitions import (IntPartition, enumerate_partitions, coarsenings, canonical_set_partition, c_coefficient,
                         z_factor)

logger = logging.getLogger(__name__)

BASES = ("m", "mt", "p", "e", "h", "s", "xi")


class SymPoly(LinearCombination):
    """
    A basis-tagged finite linear combination of symmetric function basis elements indexed by integer partitions.

    Terms may have different degrees. Equality is structural: two SymPolys are equal when they carry the same basis
    tag and the same terms. To compare symmetric functions given in different bases, ``convert`` one of them first.

    ::

        >>> SymPoly("mt", {(1, 1): 1}).to("m")
        SymPoly(2*m[1,1])
    """

    __slots__ = ()
    BASES = BASES

    @classmethod
    def _coerce_key(cls, a_key):
        return a_key if isinstance(a_key, IntPartition) else IntPartition(a_key)

    @classmethod
    def _key_order(cls, a_key):
        return (sum(a_key), tuple(-u for u in a_key))

    @classmethod
    def _key_label(cls, a_key):
        return str(a_key) or "-"

    @classmethod
    def _key_to_json(cls, a_key):
        return {"partition": list(a_key)}

    @classmethod
    def _key_from_json(cls, an_item):
        try:
            return IntPartition(an_item["partition"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid SymPoly term {an_item!r}: {e}")

    def degree_components(self):
        """
        Splits the combination into its homogeneous components.

        :returns: dict of degree to SymPoly, in increasing degree.
        """
        components = {}
        for a_key, a_value in self.items():
            components.setdefault(a_key.size, {})[a_key] = a_value
        return {d: SymPoly(self.basis, terms) for d, terms in components.items()}

    def to(self, target_basis):
        return convert(self, target_basis)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def basis_element(basis, a_partition):
    return SymPoly(basis, {IntPartition(a_partition): 1})


class PathDigraph:
    """
    The disjoint union of directed paths, the ``i``-th path having ``parts[i]`` vertices.

    Vertices are ``(i, j)`` with ``i`` the path and ``j`` the position on it; edges run ``(i, j) -> (i, j + 1)``.
    """

    def __init__(self, parts):
        self._parts = IntPartition(parts)
        self._edges = tuple(((i, j), (i, j + 1)) for i, part in enumerate(self._parts) for j in range(part - 1))

    @property
    def parts(self):
        return self._parts

    @property
    def edges(self):
        return self._edges

    def edge_subsets(self):
        """
        All ``2^|E|`` spanning subgraphs, as frozensets of edges, by increasing size.
        """
        for k in range(len(self._edges) + 1):
            for a_subset in itertools.combinations(self._edges, k):
                yield frozenset(a_subset)

    def component_partition(self, edge_subset):
        """
        The multiset of path sizes of the spanning subgraph with edge set ``edge_subset``.
        """
        sizes = []
        for i, part in enumerate(self._parts):
            run = 1
            for j in range(part - 1):
                if ((i, j), (i, j + 1)) in edge_subset:
                    run += 1
                else:
                    sizes.append(run)
                    run = 1
            sizes.append(run)
        return IntPartition.from_parts(sizes)


def xi_basis_element(a_partition):
    """
    Expands ``xi[lam]`` in the ``m`` basis straight from its definition, by summing over every edge subset of the
    path digraph ``D_lam``.

    :param a_partition: A non-empty partition.
    :returns: SymPoly in the ``m`` basis.
    """
    a_partition = IntPartition(a_partition)
    if not a_partition:
        raise PreconditionError("xi is only defined for non-empty partitions")
    a_digraph = PathDigraph(a_partition)
    terms = {}
    for an_edge_subset in a_digraph.edge_subsets():
        nu = a_digraph.component_partition(an_edge_subset)
        terms[nu] = terms.get(nu, 0) + Fraction(nu.r_factorial, math.factorial(nu.length))
    return SymPoly("m", terms)


def xi_to_m_closed_form(mu):
    """
    ``xi[mu] = sum_lam r_mu! c_{lam,mu} / l(lam)! m[lam]``.
    """
    mu = IntPartition(mu)
    if not mu:
        raise PreconditionError("xi is only defined for non-empty partitions")
    return SymPoly("m", {lam: Fraction(mu.r_factorial * c_coefficient(lam, mu), math.factorial(lam.length))
                         for lam in enumerate_partitions(mu.size)})


def _horizontal_strips(inner, outer, size, row=0):
    # Shapes kappa with inner <= kappa <= outer, kappa / inner a horizontal strip of ``size`` cells.
    if row == len(outer):
        if size == 0:
            yield ()
        return
    upper = outer[row] if row == 0 else min(outer[row], inner[row - 1])
    for extra in range(min(size, upper - inner[row]), -1, -1):
        for rest in _horizontal_strips(inner, outer, size - extra, row + 1):
            yield (inner[row] + extra,) + rest


def enumerate_ssyt(shape, content):
    """
    Generates the semistandard Young tableaux of ``shape`` whose entry ``k`` occurs ``content[k - 1]`` times.

    Tableaux are built by adding one horizontal strip per entry value.

    :param shape: The shape, an integer partition.
    :param content: A sequence of non-negative integers (a weak composition).
    :returns: generator of tuples of rows.
    """
    shape = IntPartition(shape)
    content = tuple(content)
    if sum(content) != shape.size:
        return

    def fill(k, current, rows):
        if k == len(content):
            yield tuple(tuple(u) for u in rows)
            return
        for a_shape in _horizontal_strips(current, shape, content[k]):
            yield from fill(k + 1, a_shape,
                            [u + [k + 1] * (a_shape[i] - current[i]) for i, u in enumerate(rows)])

    yield from fill(0, (0,) * len(shape), [[] for _ in shape])


@functools.lru_cache(maxsize=None)
def _kostka_number(shape, content):
    return sum(1 for _ in enumerate_ssyt(shape, content))


def kostka_matrix(d, cap=DEFAULT_SCHUR_DEGREE_CAP):
    """
    The Kostka matrix of degree ``d``: rows indexed by shapes, columns by contents, both in reverse lexicographic
    order. It is upper unitriangular in that order.

    :returns: sympy.Matrix
    """
    check_cap(d, cap, "Schur basis degree")
    a_partition_list = enumerate_partitions(d)
    return sympy.Matrix(len(a_partition_list), len(a_partition_list),
                        lambda i, j: _kostka_number(a_partition_list[i], a_partition_list[j]))


def _p_product(a_terms, another_terms):
    result = {}
    for lam, a_value in a_terms.items():
        for mu, another_value in another_terms.items():
            nu = IntPartition.from_parts(lam + mu)
            result[nu] = result.get(nu, 0) + a_value * another_value
    return result


@functools.lru_cache(maxsize=None)
def _single_part_in_p(basis, n):
    # e_n = sum_mu sign(mu) p_mu / z_mu, h_n = sum_mu p_mu / z_mu
    return {mu: Fraction(mu.sign if basis == "e" else 1, z_factor(mu)) for mu in enumerate_partitions(n)}


def _to_p(basis, lam):
    result = {IntPartition(): Fraction(1)}
    for part in lam:
        result = _p_product(result, _single_part_in_p(basis, part))
    return result


@functools.lru_cache(maxsize=None)
def _p_to_m(lam):
    terms = {}
    if not lam:
        return {lam: Fraction(1)}
    for sigma in coarsenings(canonical_set_partition(lam)):
        mu = sigma.type
        terms[mu] = terms.get(mu, 0) + mu.r_factorial
    return {k: Fraction(v) for k, v in terms.items()}


@functools.lru_cache(maxsize=None)
def _to_m(basis, lam):
    """
    The ``m`` expansion of a single basis element, as a dict of partition to Fraction.
    """
    if not lam:
        return {lam: Fraction(1)}
    if basis == "m":
        return {lam: Fraction(1)}
    if basis == "mt":
        return {lam: Fraction(lam.r_factorial)}
    if basis == "p":
        return _p_to_m(lam)
    if basis in ("e", "h"):
        terms = {}
        for mu, a_value in _to_p(basis, lam).items():
            for nu, another_value in _p_to_m(mu).items():
                terms[nu] = terms.get(nu, 0) + a_value * another_value
        return {k: v for k, v in terms.items() if v != 0}
    if basis == "s":
        check_cap(lam.size, DEFAULT_SCHUR_DEGREE_CAP, "Schur basis degree")
        terms = {mu: Fraction(_kostka_number(lam, mu)) for mu in enumerate_partitions(lam.size)}
        return {k: v for k, v in terms.items() if v != 0}
    if basis == "xi":
        return dict(xi_basis_element(lam).items())
    raise ValueError(f"Unknown basis {basis!r}")


def _matrix_to_m(basis, d):
    a_partition_list = enumerate_partitions(d)
    return sympy.Matrix(len(a_partition_list), len(a_partition_list),
                        lambda i, j: _to_sympy(_to_m(basis, a_partition_list[i]).get(a_partition_list[j], 0)))


def _to_sympy(value):
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_python(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


@functools.lru_cache(maxsize=None)
def _from_m_rows(basis, d):
    """
    Rows of the inverse of the ``basis -> m`` matrix: maps ``mu`` to the expansion of ``m[mu]`` in ``basis``.
    """
    if basis == "s":
        check_cap(d, DEFAULT_SCHUR_DEGREE_CAP, "Schur basis degree")
    logger.debug(f"Inverting the {basis} -> m matrix at degree {d}")
    a_partition_list = enumerate_partitions(d)
    inverse = _matrix_to_m(basis, d).inv()
    rows = {}
    for i, mu in enumerate(a_partition_list):
        rows[mu] = {lam: _to_python(inverse[i, j]) for j, lam in enumerate(a_partition_list) if inverse[i, j] != 0}
    return rows


def convert(f, target_basis):
    """
    Re-expresses ``f`` in ``target_basis``.

    :param f: The symmetric function to convert.
    :type f: SymPoly
    :param target_basis: One of ``BASES``.
    :returns: SymPoly
    :raises ResourceCapError: if the Schur basis is needed above its degree cap.
    """
    if target_basis not in BASES:
        raise ValueError(f"Unknown basis {target_basis!r}, expected one of {BASES}")
    if f.basis == target_basis:
        return f
    in_m = {}
    for lam, a_value in f.items():
        for mu, another_value in _to_m(f.basis, lam).items():
            in_m[mu] = in_m.get(mu, 0) + a_value * another_value
    if target_basis == "m":
        return SymPoly("m", in_m)
    result = {}
    for mu, a_value in in_m.items():
        if not mu:
            result[mu] = result.get(mu, 0) + a_value
            continue
        for lam, another_value in _from_m_rows(target_basis, mu.size)[mu].items():
            result[lam] = result.get(lam, 0) + a_value * another_value
    return SymPoly(target_basis, result)


def transition_matrix(source_basis, target_basis, d):
    """
    The matrix whose row ``lam`` holds the ``target_basis`` coefficients of ``source_basis[lam]``, over the
    partitions of ``d`` in reverse lexicographic order.

    :returns: sympy.Matrix
    """
    a_partition_list = enumerate_partitions(d)
    rows = [convert(basis_element(source_basis, lam), target_basis) for lam in a_partition_list]
    return sympy.Matrix(len(a_partition_list), len(a_partition_list),
                        lambda i, j: _to_sympy(rows[i].coefficient(a_partition_list[j])))


def omega(f):
    """
    The involution omega, applied as ``p[lam] -> sign(lam) p[lam]``. The result is in the basis of ``f``.
    """
    in_p = convert(f, "p")
    return convert(in_p.map_terms(lambda lam, a_value: a_value * lam.sign), f.basis)


def omega_matrix_augmented(d):
    """
    The matrix of omega on the ``mt`` basis of degree ``d``: row ``lam`` holds the ``mt`` coefficients of
    ``omega(mt[lam])``.

    :returns: sympy.Matrix
    """
    a_partition_list = enumerate_partitions(d)
    rows = [omega(basis_element("mt", lam)) for lam in a_partition_list]
    return sympy.Matrix(len(a_partition_list), len(a_partition_list),
                        lambda i, j: _to_sympy(rows[i].coefficient(a_partition_list[j])))


def sign_c_matrix(d):
    """
    The matrix ``(sign(lam) c_{lam,mu})`` over the partitions of ``d``.
    """
    a_partition_list = enumerate_partitions(d)
    return sympy.Matrix(len(a_partition_list), len(a_partition_list),
                        lambda i, j: a_partition_list[i].sign * c_coefficient(a_partition_list[i],
                                                                              a_partition_list[j]))


def multiply(f, g):
    """
    The product ``f * g``, computed in the power sum basis and returned in the basis of ``f``.
    """
    return convert(SymPoly("p", _p_product(dict(convert(f, "p").items()), dict(convert(g, "p").items()))), f.basis)


def principal_specialization(f, n):
    """
    ``f(1^n)``: ``n`` variables set to one, every other variable to zero.

    For ``m[lam]`` this is ``C(n, l(lam)) l(lam)! / r_lam!``.

    :param n: Number of variables set to one.
    :type n: int
    :returns: Fraction
    """
    if n < 0:
        raise PreconditionError(f"The number of variables must be non-negative, received {n}")
    total = Fraction(0)
    for lam, a_value in convert(f, "m").items():
        total += a_value * Fraction(math.comb(n, lam.length) * math.factorial(lam.length), lam.r_factorial)
    return total
