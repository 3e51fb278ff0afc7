"""
Integer partitions, set partitions and the coarsening statistics (Doubilet's ``lambda(pi, sigma)!`` and
``c_{mu,nu}``) that drive the xi basis and the matrix of omega.

Every enumeration here is deterministic: integer partitions come in reverse lexicographic order, set partitions in
lexicographic order of their restricted growth strings.

:date: October 2026

"""

import math
import functools
import collections

from .core import PreconditionError, InputParseError


class IntPartition(tuple):
    """
    A weakly decreasing tuple of positive integers.

    Being a tuple, an ``IntPartition`` hashes and compares like the plain tuple of its parts, so ``(2, 1)`` can be
    used to look up a term keyed by ``IntPartition((2, 1))``.
    """

    def __new__(cls, parts=()):
        parts = tuple(int(u) for u in parts)
        if any(u < 1 for u in parts):
            raise ValueError(f"Partition parts must be positive, received {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing, received {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts):
        """
        Builds a partition out of parts given in any order.
        """
        return cls(sorted(parts, reverse=True))

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    @property
    def multiplicities(self):
        """
        Maps each part size to the number of times it occurs.
        """
        return collections.Counter(self)

    @property
    def r_factorial(self):
        """
        ``r_1! r_2! ...`` where ``r_i`` is the number of parts of size ``i``.
        """
        return math.prod(math.factorial(u) for u in self.multiplicities.values())

    @property
    def sign(self):
        """
        The sign of any permutation with this cycle type.
        """
        return -1 if (self.size - self.length) % 2 else 1

    def conjugate(self):
        if not self:
            return IntPartition()
        return IntPartition(sum(1 for u in self if u > i) for i in range(self[0]))

    def __repr__(self):
        return f"IntPartition({list(self)})"

    def __str__(self):
        return ",".join(str(u) for u in self)


class SetPartition:
    """
    A set of pairwise disjoint, non-empty blocks whose union is the ground set.

    Blocks are kept in canonical order (by their minimum element) so that two equal set partitions render
    identically.
    """

    __slots__ = ("_blocks", "_ground")

    def __init__(self, blocks, ground=None):
        blocks = [frozenset(b) for b in blocks]
        if any(not b for b in blocks):
            raise ValueError("Set partition blocks must be non-empty")
        union = frozenset().union(*blocks)
        if sum(len(b) for b in blocks) != len(union):
            raise ValueError("Set partition blocks must be pairwise disjoint")
        if ground is not None and frozenset(ground) != union:
            raise ValueError("Set partition blocks must cover the ground set exactly")
        self._blocks = tuple(sorted(blocks, key=min))
        self._ground = union

    @property
    def blocks(self):
        return self._blocks

    @property
    def ground(self):
        return self._ground

    @property
    def type(self):
        """
        The integer partition formed by the block sizes.
        """
        return IntPartition.from_parts(len(b) for b in self._blocks)

    def __len__(self):
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return frozenset(self._blocks) == frozenset(other._blocks)

    def __hash__(self):
        return hash(frozenset(self._blocks))

    def __repr__(self):
        return f"SetPartition({str(self)!r})"

    def __str__(self):
        return "|".join(" ".join(str(u) for u in sorted(b)) for b in self._blocks)


@functools.lru_cache(maxsize=None)
def _partitions_bounded(d, largest):
    if d == 0:
        return ((),)
    result = []
    for first in range(min(d, largest), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            result.append((first,) + rest)
    return tuple(result)


def enumerate_partitions(d):
    """
    All partitions of ``d`` in reverse lexicographic order. ``d = 0`` yields the empty partition.

    :param d: The integer to partition.
    :type d: int
    :returns: tuple of IntPartition
    """
    if d < 0:
        raise ValueError(f"Cannot partition a negative integer ({d})")
    return tuple(IntPartition(u) for u in _partitions_bounded(d, d))


def r_factorial(a_partition):
    return IntPartition(a_partition).r_factorial


def sign(a_partition):
    return IntPartition(a_partition).sign


def conjugate(a_partition):
    return IntPartition(a_partition).conjugate()


def z_factor(a_partition):
    """
    Size of the centraliser of a permutation of cycle type ``a_partition``: ``prod_i i^{r_i} r_i!``.
    """
    a_partition = IntPartition(a_partition)
    return math.prod(part ** count * math.factorial(count) for part, count in a_partition.multiplicities.items())


def dominates(lam, mu):
    """
    True if ``lam`` dominates ``mu`` (equal sizes, partial sums of ``lam`` never smaller).
    """
    lam, mu = IntPartition(lam), IntPartition(mu)
    if lam.size != mu.size:
        return False
    lam_sum = mu_sum = 0
    for i in range(max(len(lam), len(mu))):
        lam_sum += lam[i] if i < len(lam) else 0
        mu_sum += mu[i] if i < len(mu) else 0
        if lam_sum < mu_sum:
            return False
    return True


def restricted_growth_partitions(elements, compatible=None):
    """
    Generates the set partitions of ``elements`` by restricted growth strings, in lexicographic order.

    :param elements: The ground set, in the order its elements are assigned.
    :type elements: sequence
    :param compatible: Optional predicate ``compatible(block, element)``; an element is only added to a block the
                       predicate accepts. Pruning this way keeps e.g. stable partition enumeration cheap.
    """
    elements = tuple(elements)
    if not elements:
        return
    blocks = []

    def assign(position):
        if position == len(elements):
            yield SetPartition(blocks)
            return
        element = elements[position]
        for a_block in blocks:
            if compatible is None or compatible(a_block, element):
                a_block.append(element)
                yield from assign(position + 1)
                a_block.pop()
        blocks.append([element])
        yield from assign(position + 1)
        blocks.pop()

    yield from assign(0)


def enumerate_set_partitions(ground):
    """
    Every set partition of ``ground`` exactly once, ordered lexicographically by restricted growth string over
    the sorted ground set.

    :param ground: A finite, non-empty set of sortable elements.
    :returns: list of SetPartition
    """
    ground = sorted(ground)
    if not ground:
        raise PreconditionError("The ground set of a set partition enumeration must be non-empty")
    return list(restricted_growth_partitions(ground))


def refines(pi, sigma):
    """
    True if every block of ``pi`` lies inside a block of ``sigma``.
    """
    if pi.ground != sigma.ground:
        raise PreconditionError(f"Set partitions {pi} and {sigma} live on different ground sets")
    return all(any(a_block <= another for another in sigma.blocks) for a_block in pi.blocks)


def lambda_factorial(pi, sigma):
    """
    Doubilet's ``lambda(pi, sigma)! = prod_i i!^{k_i}`` where ``k_i`` counts the blocks of ``sigma`` made of exactly
    ``i`` blocks of ``pi``.
    """
    if not refines(pi, sigma):
        raise PreconditionError(f"{pi} does not refine {sigma}")
    result = 1
    for a_block in sigma.blocks:
        result *= math.factorial(sum(1 for b in pi.blocks if b <= a_block))
    return result


def coarsenings(pi):
    """
    Generates every set partition ``sigma >= pi``, i.e. every way of merging blocks of ``pi``.
    """
    pi_blocks = pi.blocks
    for a_grouping in restricted_growth_partitions(range(len(pi_blocks))):
        yield SetPartition(frozenset().union(*(pi_blocks[i] for i in group)) for group in a_grouping.blocks)


def canonical_set_partition(mu):
    """
    The set partition of ``{1..|mu|}`` of type ``mu`` whose blocks are filled left to right by decreasing part size,
    e.g. ``(2, 1) -> {1,2}|{3}``.
    """
    mu = IntPartition(mu)
    blocks = []
    start = 1
    for part in mu:
        blocks.append(range(start, start + part))
        start += part
    return SetPartition(blocks, ground=range(1, mu.size + 1))


def c_coefficient_from(pi, nu):
    """
    ``sum lambda(pi, sigma)!`` over coarsenings ``sigma >= pi`` of type ``nu``, for an explicit representative ``pi``.
    """
    nu = IntPartition(nu)
    if pi.type.size != nu.size:
        raise PreconditionError(f"c coefficient needs equal sizes, received {pi.type} and {nu}")
    return sum(lambda_factorial(pi, sigma) for sigma in coarsenings(pi) if sigma.type == nu)


@functools.lru_cache(maxsize=None)
def _c_coefficient(mu, nu):
    if not mu:
        return 1
    return c_coefficient_from(canonical_set_partition(mu), nu)


def c_coefficient(mu, nu):
    """
    Doubilet's ``c_{mu,nu}``, computed on the canonical set partition of type ``mu``.

    :raises PreconditionError: if ``mu`` and ``nu`` have different sizes.
    """
    mu, nu = IntPartition(mu), IntPartition(nu)
    if mu.size != nu.size:
        raise PreconditionError(f"c coefficient needs equal sizes, received {mu} and {nu}")
    return _c_coefficient(mu, nu)


def set_partition_type_count(lam):
    """
    Number of set partitions of ``{1..|lam|}`` of type ``lam``: ``d! / (prod lam_i! * r_lam!)``.
    """
    lam = IntPartition(lam)
    return math.factorial(lam.size) // (math.prod(math.factorial(u) for u in lam) * lam.r_factorial)


def parse_partition(text):
    """
    Parses ``"3,2,1"`` (spaces tolerated). Parts must be positive and weakly decreasing; an empty string is the empty
    partition.
    """
    text = text.strip()
    if not text:
        return IntPartition()
    try:
        return IntPartition(tuple(int(u) for u in text.replace(" ", "").split(",")))
    except ValueError as e:
        raise InputParseError(f"Invalid partition {text!r}: {e}")


def parse_set_partition(text):
    """
    Parses ``"1 2|3|4 5"``. Elements that look like integers become integers, everything else stays a string.
    """
    def element(token):
        return int(token) if token.lstrip("-").isdigit() else token

    try:
        return SetPartition([element(u) for u in a_block.split()] for a_block in text.split("|"))
    except ValueError as e:
        raise InputParseError(f"Invalid set partition {text!r}: {e}")
