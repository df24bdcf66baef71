"""The product ``(a,b,c)*(f,g,h) = (af, bh+cg, bg+ch)`` on triples with a != 0.

On rational triples this is a group isomorphic to Q^x x Q^x (first leg, parameter);
integral triples form a sub-semigroup. Up to scalars it is the multiplicative
group of the parameter ``r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd

from .errors import ZeroHypotenuse, ZeroLeg
from .triples import (
    PythTriple,
    RationalTriple,
    _tuple_new,
    as_param,
    as_rational_triple,
    format_fraction,
    from_param,
    parse_fraction,
    to_param,
)

IDENTITY = PythTriple(1, 0, 1)
SIGN_GENERATOR = PythTriple(-1, 0, 1)
TWO_GENERATOR = PythTriple(4, 3, 5)


def _check(t) -> None:
    if t.a == 0:
        raise ZeroLeg(f"{t} has a = 0 and is not a group element")


def bs_product(s, t):
    """Product of two triples. Integral inputs give an integral result."""
    _check(s)
    _check(t)
    # the product of two valid triples is valid, so results skip re-validation
    if type(s) is PythTriple and type(t) is PythTriple:
        a, b, c = s
        f, g, h = t
        return _tuple_new(PythTriple, (a * f, b * h + c * g, b * g + c * h))
    a, b, c, d = _over_common_den(s)
    f, g, h, e = _over_common_den(t)
    de = d * e
    entries = (Fraction(a * f, de), Fraction(b * h + c * g, de), Fraction(b * g + c * h, de))
    return _tuple_new(RationalTriple, entries)


def _over_common_den(t) -> tuple[int, int, int, int]:
    """``(A, B, C, D)`` with ``t == (A/D, B/D, C/D)``, all integers."""
    if type(t) is PythTriple:
        return t[0], t[1], t[2], 1
    a, b, c = (Fraction(x) for x in t)
    da, db, dc = a.denominator, b.denominator, c.denominator
    d = da * db // gcd(da, db)
    d = d * dc // gcd(d, dc)
    return a.numerator * (d // da), b.numerator * (d // db), c.numerator * (d // dc), d


def identity() -> PythTriple:
    return IDENTITY


def inverse(t) -> RationalTriple:
    _check(t)
    a, b, c = as_rational_triple(t)
    return RationalTriple(1 / a, -b / (a * a), c / (a * a))


def power(t, k: int):
    """``k``-fold product, by binary exponentiation; negative ``k`` goes through :func:`inverse`."""
    _check(t)
    if k < 0:
        t, k = inverse(t), -k
    result = IDENTITY if isinstance(t, PythTriple) else as_rational_triple(IDENTITY)
    base = t
    while k:
        if k & 1:
            result = bs_product(result, base)
        k >>= 1
        if k:
            base = bs_product(base, base)
    return result


def _sign(x) -> int:
    return 1 if x > 0 else -1


def klein_component(t) -> tuple[int, int]:
    """Signs of ``(a, c)``: which of the four classes of (+-1, 0, +-1) the triple lies over."""
    _check(t)
    if t.c == 0:
        raise ZeroHypotenuse(f"{t} has c = 0")
    return (_sign(t.a), _sign(t.c))


_KLEIN_CODES = {(1, 1): "++", (1, -1): "+-", (-1, 1): "-+", (-1, -1): "--"}


@dataclass(frozen=True)
class NormalForm:
    """``klein * scalar * from_param(param)`` with ``scalar > 0`` and ``param > 0``.

    The scalar and parameter describe the representative with positive a and c;
    the Klein signs are then reattached as a product with (sa, 0, sc).
    """

    scalar: Fraction
    param: Fraction
    klein: tuple[int, int] = (1, 1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        object.__setattr__(self, "param", as_param(self.param))
        if self.scalar <= 0:
            raise ValueError("scalar must be positive")
        if self.param < 0:
            raise ValueError("param must be positive; signs live in the Klein component")
        if self.klein not in _KLEIN_CODES:
            raise ValueError(f"bad Klein component {self.klein!r}")

    def triple(self):
        base = from_param(self.param)
        sa, sc = self.klein
        entries = (sa * self.scalar * base.a, sc * self.scalar * base.b, sc * self.scalar * base.c)
        if self.scalar.denominator == 1:
            return PythTriple(*(int(x) for x in entries))
        return RationalTriple(*entries)

    def to_json(self) -> dict:
        return {
            "scalar": format_fraction(self.scalar),
            "r": format_fraction(self.param),
            "klein": _KLEIN_CODES[self.klein],
        }

    @classmethod
    def from_json(cls, obj: dict) -> NormalForm:
        code = obj["klein"].replace("−", "-")
        klein = next(k for k, v in _KLEIN_CODES.items() if v == code)
        num, _, den = obj["scalar"].partition("/")
        scalar = Fraction(int(num), int(den or 1))
        return cls(scalar, parse_fraction(obj["r"]), klein)


def normal_form(t) -> NormalForm:
    sa, sc = klein_component(t)
    # undo the Klein factor: (sa,0,sc) * (a', b', c') = (sa a', sc b', sc c')
    pos = RationalTriple(sa * Fraction(t.a), sc * Fraction(t.b), sc * Fraction(t.c))
    r = to_param(pos)
    return NormalForm(pos.a / from_param(r).a, r, (sa, sc))


def semigroup_rule(m: int, n: int, k: int, l: int) -> tuple[int, int, int]:
    """Integer core of :func:`semigroup_product` for ``m/n * k/l`` (both reduced, positive).

    Returns ``(factor, num, den)``: the product's scalar is ``factor`` times the
    two input scalars and its parameter is ``num/den``. Plain ints only, so the
    exhaustive check can compile this same function.
    """
    km = k * m
    ln = l * n
    g = gcd(km, ln)
    num = km // g
    den = ln // g
    factor = g * g
    if (m * n) % 2 == 0 and (k * l) % 2 == 0:
        factor *= 4 if (num * den) % 2 == 1 else 2
    return factor, num, den


def semigroup_product(p: NormalForm, q: NormalForm) -> NormalForm:
    """Product computed in normal-form coordinates without multiplying triples.

    For ``(h, m/n)`` and ``(g, k/l)`` the result is ``(gh*G**2, km/ln)`` with
    ``G = gcd(km, ln)``, times 4 when mn and kl are both even and km/ln reduces
    to odd/odd, times 2 when both are even otherwise. Klein signs multiply.
    """
    factor, num, den = semigroup_rule(
        p.param.numerator, p.param.denominator, q.param.numerator, q.param.denominator
    )
    klein = (p.klein[0] * q.klein[0], p.klein[1] * q.klein[1])
    return NormalForm(p.scalar * q.scalar * factor, Fraction(num, den), klein)


@lru_cache(maxsize=65536)
def _factor_items(n: int) -> tuple[tuple[int, int], ...]:
    from sympy import factorint

    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def _factor(n: int) -> dict[int, int]:
    return dict(_factor_items(n))


def prime_generator(p: int) -> PythTriple:
    """Generator triple attached to the prime ``p``: (4,3,5) for 2, else (p, (p^2-1)/2, (p^2+1)/2)."""
    if p == 2:
        return TWO_GENERATOR
    return PythTriple(p, (p * p - 1) // 2, (p * p + 1) // 2)


def generator_factorization(r) -> list[tuple[PythTriple, int]]:
    """Write the class of ``from_param(r)`` over the sign and prime generators.

    Returns ``[(generator, exponent), ...]`` with the sign generator (-1,0,1)
    first when ``r < 0``, then primes in increasing order.
    """
    r = as_param(r)
    word = []
    if r < 0:
        word.append((SIGN_GENERATOR, 1))
    exps = _factor(abs(r.numerator))
    for p, e in _factor(r.denominator).items():
        exps[p] = exps.get(p, 0) - e
    for p in sorted(exps):
        word.append((prime_generator(p), exps[p]))
    return word


def evaluate_factorization(word: list[tuple[PythTriple, int]]):
    result = IDENTITY
    for gen, e in word:
        result = bs_product(result, power(gen, e))
    return result
