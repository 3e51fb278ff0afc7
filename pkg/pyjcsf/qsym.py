"""
Quasi-symmetric functions in the fundamental basis ``Q[S, d]`` and the monomial basis ``Qt[S, d]``.

A basis element is indexed by a :class:`DescentClass`, a degree ``d`` together with a subset ``S`` of ``1..d-1``.
Equality of quasi-symmetric functions is decided in the monomial basis, where expansions are unique.

:date: October 2026

"""

import math
import itertools
import dataclasses

from sympy.utilities.iterables import multiset_permutations

from .core import PreconditionError, InputParseError
from .lincomb import LinearCombination
from .partitions import IntPartition
from .symfunc import SymPoly, convert

QSYM_BASES = ("fundamental", "monomial")


@dataclasses.dataclass(frozen=True)
class DescentClass:
    """
    A degree ``d >= 1`` and a subset ``S`` of ``1..d-1``.

    Renders as ``"d:s1,s2,..."``, with ``"d:-"`` for the empty subset.
    """
    d: int
    S: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(int(u) for u in self.S))
        if self.d < 1:
            raise ValueError(f"A descent class needs a positive degree, received {self.d}")
        if any(not 1 <= u <= self.d - 1 for u in self.S):
            raise ValueError(f"Descent set {sorted(self.S)} is not a subset of 1..{self.d - 1}")

    @classmethod
    def full(cls, d):
        return cls(d, frozenset(range(1, d)))

    @property
    def elements(self):
        return tuple(sorted(self.S))

    @property
    def composition(self):
        """
        The lengths of the subwords obtained by breaking ``12...d`` after each element of ``S``.
        """
        breaks = (0,) + self.elements + (self.d,)
        return tuple(breaks[i + 1] - breaks[i] for i in range(len(breaks) - 1))

    @property
    def type(self):
        return IntPartition.from_parts(self.composition)

    def sort_key(self):
        return (self.d, self.elements)

    def __str__(self):
        return f"{self.d}:{','.join(str(u) for u in self.elements) or '-'}"


def descent_class_from_string(text):
    """
    Parses ``"4:1,3"`` or ``"4:-"``.
    """
    try:
        d, elements = text.strip().split(":")
        elements = elements.strip()
        return DescentClass(int(d), frozenset() if elements in ("", "-") else
                            frozenset(int(u) for u in elements.split(",")))
    except ValueError as e:
        raise InputParseError(f"Invalid descent class {text!r}: {e}")


def descent_class_from_composition(a_composition):
    partial_sums = tuple(itertools.accumulate(a_composition))
    return DescentClass(partial_sums[-1], frozenset(partial_sums[:-1]))


class QSymPoly(LinearCombination):
    """
    A finite linear combination of ``fundamental`` or ``monomial`` quasi-symmetric basis elements.
    """

    __slots__ = ()
    BASES = QSYM_BASES

    @classmethod
    def _coerce_key(cls, a_key):
        if isinstance(a_key, DescentClass):
            return a_key
        d, S = a_key
        return DescentClass(d, frozenset(S))

    @classmethod
    def _key_order(cls, a_key):
        return a_key.sort_key()

    @classmethod
    def _key_label(cls, a_key):
        return str(a_key)

    @classmethod
    def _key_to_json(cls, a_key):
        return {"d": a_key.d, "S": list(a_key.elements)}

    @classmethod
    def _key_from_json(cls, an_item):
        try:
            return DescentClass(int(an_item["d"]), frozenset(an_item["S"]))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid QSymPoly term {an_item!r}: {e}")

    def __mul__(self, other):
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def fundamental(d, S=()):
    return QSymPoly("fundamental", {DescentClass(d, frozenset(S)): 1})


def type_of_subset(c):
    return c.type


def _supersets(c):
    complement = [u for u in range(1, c.d) if u not in c.S]
    for k in range(len(complement) + 1):
        for extra in itertools.combinations(complement, k):
            yield DescentClass(c.d, c.S | frozenset(extra)), k


def monomial_qsym_expand(f):
    """
    ``Q[S, d] = sum_{T >= S} Qt[T, d]``.

    :param f: A QSymPoly in the fundamental basis.
    :returns: QSymPoly in the monomial basis.
    """
    if f.basis != "fundamental":
        raise ValueError(f"Expected the fundamental basis, received {f.basis!r}")
    terms = {}
    for c, a_value in f.items():
        for a_superset, _ in _supersets(c):
            terms[a_superset] = terms.get(a_superset, 0) + a_value
    return QSymPoly("monomial", terms)


def monomial_to_fundamental(f):
    """
    ``Qt[T, d] = sum_{U >= T} (-1)^{|U| - |T|} Q[U, d]``; the inverse of :func:`monomial_qsym_expand`.
    """
    if f.basis != "monomial":
        raise ValueError(f"Expected the monomial basis, received {f.basis!r}")
    terms = {}
    for c, a_value in f.items():
        for a_superset, extra in _supersets(c):
            terms[a_superset] = terms.get(a_superset, 0) + (-a_value if extra % 2 else a_value)
    return QSymPoly("fundamental", terms)


def to_monomial(f):
    return f if f.basis == "monomial" else monomial_qsym_expand(f)


def to_fundamental(f):
    return f if f.basis == "fundamental" else monomial_to_fundamental(f)


def subsets_of_type(lam):
    """
    Every descent class of degree ``|lam|`` whose type is ``lam``, one per distinct rearrangement of the parts.
    """
    lam = IntPartition(lam)
    if not lam:
        raise PreconditionError("The empty partition has no descent classes")
    return sorted((descent_class_from_composition(u) for u in multiset_permutations(list(lam))),
                  key=DescentClass.sort_key)


def sym_to_monomial_qsym(f):
    """
    Views a symmetric function as quasi-symmetric: ``m[lam] = sum_{type(S) = lam} Qt[S, d]``.
    """
    terms = {}
    for lam, a_value in convert(f, "m").items():
        if not lam:
            raise PreconditionError("Constant terms have no quasi-symmetric expansion of positive degree",
                                    witness={"partition": []})
        for c in subsets_of_type(lam):
            terms[c] = terms.get(c, 0) + a_value
    return QSymPoly("monomial", terms)


def sym_to_fundamental(f):
    """
    The fundamental expansion of the symmetric function ``f``. Each homogeneous piece expands independently.

    :type f: SymPoly
    :returns: QSymPoly in the fundamental basis.
    """
    return monomial_to_fundamental(sym_to_monomial_qsym(f))


def specialize_ones(f, n):
    """
    ``f(1^n)`` evaluated termwise: ``Q[S, d](1^n) = C(n + d - |S| - 1, d)`` and ``Qt[S, d](1^n) = C(n, |S| + 1)``.
    """
    if n < 0:
        raise PreconditionError(f"The number of variables must be non-negative, received {n}")
    total = 0
    for c, a_value in f.items():
        if f.basis == "fundamental":
            total += a_value * math.comb(n + c.d - len(c.S) - 1, c.d)
        else:
            total += a_value * math.comb(n, len(c.S) + 1)
    return total


def fundamental_Q_monomial_coefficients(c, cap):
    """
    Expands ``Q[S, d]`` in the variables ``x_1..x_cap`` from its definition: one monomial per weakly increasing
    index word ``i_1 <= ... <= i_d`` that rises strictly at every position of ``S``.

    :param c: The descent class ``(d, S)``.
    :type c: DescentClass
    :param cap: Number of variables.
    :type cap: int
    :returns: dict mapping exponent vectors (tuples of length ``cap``) to coefficients.
    """
    coefficients = {}
    for a_word in itertools.combinations_with_replacement(range(cap), c.d):
        if all(a_word[j - 1] < a_word[j] for j in c.S):
            exponents = [0] * cap
            for u in a_word:
                exponents[u] += 1
            exponents = tuple(exponents)
            coefficients[exponents] = coefficients.get(exponents, 0) + 1
    return coefficients


def qsym_monomial_coefficients(f, cap):
    """
    Exponent vector to coefficient for the polynomial ``f(x_1, ..., x_cap)``, with ``f`` in the fundamental basis.
    """
    coefficients = {}
    for c, a_value in to_fundamental(f).items():
        for exponents, count in fundamental_Q_monomial_coefficients(c, cap).items():
            coefficients[exponents] = coefficients.get(exponents, 0) + a_value * count
    return {k: v for k, v in coefficients.items() if v != 0}


def qsym_equal(f, g):
    return to_monomial(f) == to_monomial(g)


def sym_from_qsym_monomial(f):
    """
    Reads a quasi-symmetric function that is known to be symmetric back as a SymPoly in the ``m`` basis.

    :raises PreconditionError: if the monomial coefficients are not constant on each type class.
    """
    in_monomial = to_monomial(f)
    terms = {}
    for c, a_value in in_monomial.items():
        lam = c.type
        if terms.setdefault(lam, a_value) != a_value:
            raise PreconditionError(f"Not symmetric: coefficients within type {lam} differ",
                                    witness={"index": str(c), "value": str(a_value)})
    for lam in terms:
        if any(in_monomial.coefficient(u) != terms[lam] for u in subsets_of_type(lam)):
            raise PreconditionError(f"Not symmetric: some class of type {lam} is missing",
                                    witness={"partition": list(lam)})
    return SymPoly("m", terms)
