"""
Basis-tagged finite linear combinations with exact rational coefficients.

``SymPoly`` and ``QSymPoly`` both derive from :class:`LinearCombination`. Terms are held in canonical form: keys are
coerced to the subclass' index type, coefficients to ``fractions.Fraction`` and zero coefficients are dropped
eagerly, so that equality is plain map equality.

:date: October 2026

"""

import types
from fractions import Fraction


def to_fraction(value):
    """
    Coerces ints, Fractions and exact numeric strings ("3/2") to ``Fraction``. Floats are refused.
    """
    if isinstance(value, float):
        raise TypeError("Floating point coefficients are not allowed, use ints or Fractions")
    return Fraction(value)


def fraction_to_json(value):
    return {"num": str(value.numerator), "den": str(value.denominator)}


def fraction_from_json(an_item):
    try:
        return Fraction(int(an_item["num"]), int(an_item.get("den", "1")))
    except (KeyError, ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid coefficient {an_item!r}: {e}")


class LinearCombination:
    """
    Base class for sparse exact linear combinations over a named basis.

    Subclasses set ``BASES`` and implement the key hooks ``_coerce_key``, ``_key_order``, ``_key_label``,
    ``_key_to_json`` and ``_key_from_json``.
    """

    __slots__ = ("_basis", "_terms")
    BASES = ()

    def __init__(self, basis, terms=None):
        if basis not in self.BASES:
            raise ValueError(f"Unknown basis {basis!r} for {type(self).__name__}, expected one of {self.BASES}")
        accumulated = {}
        for a_key, a_value in (terms or {}).items():
            a_key = self._coerce_key(a_key)
            accumulated[a_key] = accumulated.get(a_key, 0) + to_fraction(a_value)
        self._basis = basis
        self._terms = types.MappingProxyType({k: v for k, v in sorted(accumulated.items(),
                                                                        key=lambda x: self._key_order(x[0]))
                                              if v != 0})

    # Key hooks
    @classmethod
    def _coerce_key(cls, a_key):
        raise NotImplementedError

    @classmethod
    def _key_order(cls, a_key):
        raise NotImplementedError

    @classmethod
    def _key_label(cls, a_key):
        raise NotImplementedError

    @classmethod
    def _key_to_json(cls, a_key):
        raise NotImplementedError

    @classmethod
    def _key_from_json(cls, an_item):
        raise NotImplementedError

    @property
    def basis(self):
        return self._basis

    @property
    def terms(self):
        """
        Read-only mapping of index to ``Fraction`` coefficient, in canonical order.
        """
        return self._terms

    def coefficient(self, a_key):
        return self._terms.get(self._coerce_key(a_key), Fraction(0))

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._basis == other._basis and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((type(self).__name__, self._basis, frozenset(self._terms.items())))

    def _same_basis(self, other):
        if not isinstance(other, type(self)):
            raise TypeError(f"Cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"Cannot combine bases {self.basis!r} and {other.basis!r} directly, convert first")
        return other

    def __add__(self, other):
        other = self._same_basis(other)
        summed = dict(self._terms)
        for a_key, a_value in other.items():
            summed[a_key] = summed.get(a_key, 0) + a_value
        return type(self)(self._basis, summed)

    def __neg__(self):
        return type(self)(self._basis, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = to_fraction(factor)
        return type(self)(self._basis, {k: v * factor for k, v in self._terms.items()})

    def map_terms(self, a_function):
        """
        Returns a combination in the same basis with every coefficient passed through ``a_function(key, value)``.
        """
        return type(self)(self._basis, {k: a_function(k, v) for k, v in self._terms.items()})

    def term_map(self):
        """
        ``{label: "num/den"}``; the flat form used to diff two combinations.
        """
        return {self._key_label(k): str(v) for k, v in self._terms.items()}

    def label_index(self):
        return {self._key_label(k): k for k in self._terms}

    def to_json(self):
        terms = []
        for a_key, a_value in self._terms.items():
            an_item = self._key_to_json(a_key)
            an_item.update(fraction_to_json(a_value))
            terms.append(an_item)
        return {"basis": self._basis, "terms": terms}

    @classmethod
    def from_json(cls, json_data):
        if not isinstance(json_data, dict) or "basis" not in json_data:
            raise ValueError(f"{cls.__name__} JSON must be a mapping with a basis, received {type(json_data)}")
        terms = {}
        for an_item in json_data.get("terms", []):
            a_key = cls._key_from_json(an_item)
            terms[a_key] = terms.get(a_key, 0) + fraction_from_json(an_item)
        return cls(json_data["basis"], terms)

    def to_human(self):
        """
        One term per line: right aligned coefficient followed by the basis element.
        """
        if not self._terms:
            return "0"
        coefficients = [str(v) for v in self._terms.values()]
        width = max(len(u) for u in coefficients)
        return "\n".join(f"{c:>{width}}  {self._basis}[{self._key_label(k)}]"
                         for c, k in zip(coefficients, self._terms))

    def __repr__(self):
        body = " + ".join(f"{v}*{self._basis}[{self._key_label(k)}]" for k, v in self._terms.items())
        return f"{type(self).__name__}({body or '0'})"
