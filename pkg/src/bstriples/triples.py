"""Pythagorean triples and their rational parameter.

A triple ``(a, b, c)`` with ``a != 0`` determines the norm-one element
``alpha + beta*eps`` of the split algebra Q[eps] (eps**2 = 1) through
``alpha = c/a`` and ``beta = b/a``, and that element corresponds to the
nonzero rational ``r = alpha + beta``.  Every scalar class of triples with
``a != 0`` therefore has exactly one parameter ``r``, and every nonzero
rational is hit.

Parameters are plain :class:`fractions.Fraction` values; ``Fraction`` already
keeps them reduced with a positive denominator, so the only extra check is
``r != 0`` (see :func:`as_param`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from operator import itemgetter
from typing import Union

from .errors import NotPythagorean, OutOfRegime, ZeroLeg, ZeroTriple

Number = Union[int, Fraction]


class _Triple(tuple):
    """Shared behaviour. A triple is an immutable 3-tuple, so it compares and
    hashes like ``(a, b, c)`` whether the entries are integers or fractions."""

    __slots__ = ()

    a = property(itemgetter(0))
    b = property(itemgetter(1))
    c = property(itemgetter(2))

    def astuple(self) -> tuple:
        return tuple(self)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self) + ")"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self[0]}, {self[1]}, {self[2]})"

    def __reduce__(self):
        return (type(self), tuple(self))

    @property
    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for x in self)


class PythTriple(_Triple):
    """Integer triple with ``a**2 + b**2 == c**2``. Any signs, any scale."""

    __slots__ = ()

    def __new__(cls, a: int, b: int, c: int) -> PythTriple:
        if not (type(a) is int and type(b) is int and type(c) is int):
            for name, v in (("a", a), ("b", b), ("c", c)):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise TypeError(f"{name} must be an int, got {type(v).__name__}")
            a, b, c = int(a), int(b), int(c)
        if a * a + b * b != c * c:
            raise NotPythagorean(f"{a}^2 + {b}^2 != {c}^2")
        return tuple.__new__(cls, (a, b, c))

    @classmethod
    def _trusted(cls, a: int, b: int, c: int) -> PythTriple:
        # for callers whose output satisfies the identity by construction
        return _tuple_new(cls, (a, b, c))


_tuple_new = tuple.__new__


class RationalTriple(_Triple):
    """Rational Pythagorean triple with ``a != 0``: an element of the full group."""

    __slots__ = ()

    def __new__(cls, a, b, c) -> RationalTriple:
        vals = []
        for name, v in (("a", a), ("b", b), ("c", c)):
            if not isinstance(v, Rational):
                raise TypeError(f"{name} must be rational, got {type(v).__name__}")
            vals.append(Fraction(v))
        a, b, c = vals
        if a == 0:
            raise ZeroLeg("rational triples in the group need a != 0")
        if a * a + b * b != c * c:
            raise NotPythagorean(f"({a})^2 + ({b})^2 != ({c})^2")
        return tuple.__new__(cls, (a, b, c))

    def to_integral(self) -> PythTriple:
        if not self.is_integral:
            raise ValueError(f"{self} has non-integral entries")
        return PythTriple(int(self.a), int(self.b), int(self.c))


@dataclass(frozen=True)
class EtaleUnit:
    """Norm-one element ``alpha + beta*eps`` with ``alpha**2 - beta**2 == 1``."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha ** 2 - self.beta ** 2 != 1:
            raise ValueError(f"alpha^2 - beta^2 != 1 for ({self.alpha}, {self.beta})")

    def __mul__(self, other: EtaleUnit) -> EtaleUnit:
        return EtaleUnit(
            self.alpha * other.alpha + self.beta * other.beta,
            self.alpha * other.beta + self.beta * other.alpha,
        )


def _coprime_fraction_slow(num: int, den: int) -> Fraction:
    return Fraction(num, den)


def _coprime_fraction_fast(num: int, den: int) -> Fraction:
    f = object.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


def _pick_coprime_fraction():
    # Fraction() re-runs gcd and type dispatch; for inputs already known to be
    # reduced with den > 0 we can fill the slots directly, if this Python allows it
    try:
        f = _coprime_fraction_fast(-3, 4)
        if f == Fraction(-3, 4) and hash(f) == hash(Fraction(-3, 4)) and str(f) == "-3/4":
            return _coprime_fraction_fast
    except (AttributeError, TypeError):
        pass
    return _coprime_fraction_slow


_coprime_fraction = _pick_coprime_fraction()


def make_triple(a: int, b: int, c: int) -> PythTriple:
    return PythTriple(a, b, c)


def as_rational_triple(t) -> RationalTriple:
    if isinstance(t, RationalTriple):
        return t
    return RationalTriple(*(Fraction(x) for x in t))


def as_param(r) -> Fraction:
    """Coerce to a nonzero reduced fraction. Accepts ``Fraction``, ``int`` or a
    ``(num, den)`` pair."""
    if type(r) is Fraction:
        if r.numerator == 0:
            raise ValueError("parameter must be a nonzero rational")
        return r
    if isinstance(r, tuple):
        r = Fraction(*r)
    r = Fraction(r)
    if r == 0:
        raise ValueError("parameter must be a nonzero rational")
    return r


def parse_fraction(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return as_param(Fraction(int(num), int(den)))
    return as_param(int(text))


def format_fraction(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def from_param(r) -> PythTriple:
    """Primitive integral triple with ``c > 0`` attached to the reduced fraction m/n.

    >>> from_param(Fraction(12, 5))
    PythTriple(120, 119, 169)
    >>> from_param(Fraction(11, 3))
    PythTriple(33, 56, 65)
    """
    if type(r) is not Fraction:
        r = as_param(r)
    m, n = r.numerator, r.denominator
    if not m:
        raise ValueError("parameter must be a nonzero rational")
    if not (m & 1 and n & 1):
        return _tuple_new(PythTriple, (2 * m * n, m * m - n * n, m * m + n * n))
    return _tuple_new(PythTriple, (m * n, (m * m - n * n) // 2, (m * m + n * n) // 2))


def _require_leg(t) -> None:
    if t.a == 0:
        raise ZeroLeg(f"{t} has a = 0; the parameter is undefined")


def to_param(t) -> Fraction:
    """Parameter ``r = (c + b)/a``, falling back to ``a/(c - b)`` when ``c + b == 0``."""
    _require_leg(t)
    a, b, c = (Fraction(x) for x in t)
    if c + b != 0:
        return (c + b) / a
    return a / (c - b)


def to_etale(t) -> EtaleUnit:
    _require_leg(t)
    a = Fraction(t.a)
    return EtaleUnit(Fraction(t.c) / a, Fraction(t.b) / a)


def param_to_etale(r) -> EtaleUnit:
    r = as_param(r)
    return EtaleUnit(r / 2 + 1 / (2 * r), r / 2 - 1 / (2 * r))


def etale_to_param(u: EtaleUnit) -> Fraction:
    # alpha + beta is never 0 on norm-one elements since its product with alpha - beta is 1
    return u.alpha + u.beta


def height(t) -> int:
    return t.c - t.b


def excess(t) -> int:
    return t.a + t.b - t.c


def is_primitive(t) -> bool:
    return gcd(gcd(t.a, t.b), t.c) == 1


def increment(t) -> int:
    """``m - n`` for ``r = m/n``; only defined for positive primitive triples with r > 1."""
    if not (t.a > 0 and t.b > 0 and t.c > 0) or not is_primitive(t):
        raise OutOfRegime(f"{t}: increment needs a primitive triple with positive entries")
    r = to_param(t)
    if r <= 1:
        raise OutOfRegime(f"{t}: increment needs r > 1, got r = {r}")
    return r.numerator - r.denominator


def normalize_primitive(t, positive: str = "c") -> PythTriple:
    """Primitive integral representative of the scalar class of ``t``.

    ``positive="c"`` (default) makes the hypotenuse positive; ``positive="a"``
    makes the first leg positive instead.
    """
    entries = [Fraction(x) for x in t]
    if all(x == 0 for x in entries):
        raise ZeroTriple("(0,0,0) has no scalar class")
    lcm = 1
    for x in entries:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in entries]
    g = gcd(gcd(ints[0], ints[1]), ints[2])
    ints = [x // g for x in ints]
    key = {"c": 2, "a": 0}[positive]
    if ints[key] < 0:
        ints = [-x for x in ints]
    elif ints[key] == 0:
        raise ZeroLeg(f"cannot make entry {positive!r} positive: it is zero")
    return PythTriple(*ints)


def triple_to_json(t) -> dict:
    return {"a": str(t.a), "b": str(t.b), "c": str(t.c)}


def triple_from_json(obj: dict):
    vals = [Fraction(obj[k]) for k in ("a", "b", "c")]
    if all(v.denominator == 1 for v in vals):
        return PythTriple(*(int(v) for v in vals))
    return RationalTriple(*vals)


def oracle_enumerate(c_max: int) -> list[PythTriple]:
    """All primitive triples with ``0 < c <= c_max`` and ``a != 0``, found by an
    exhaustive integer scan over legs. Sorted by ``(c, a, b)``.

    Independent of :func:`from_param`: it never touches the parametrization.
    """
    from ._scan import scan_legs

    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    found = set()
    for a, b, c in scan_legs(c_max):
        if gcd(a, b) != 1:
            continue
        for sa in (1, -1):
            for sb in (1, -1):
                found.add(PythTriple(sa * a, sb * b, c))
                if b != 0:
                    found.add(PythTriple(sb * b, sa * a, c))
    return sorted(found, key=lambda t: (t.c, t.a, t.b))
