"""The swap ``(a,b,c) -> (b,a,c)`` and words over (4,3,5) and (-1,0,1).

On parameters the swap is the Cayley transform ``r -> (r+1)/(r-1)``; on the
norm-one element it is ``alpha + beta*eps -> (alpha + eps)/beta``.
Every class is reachable from G = (4,3,5) and S = (-1,0,1) with products and
swaps: an odd prime p is the swap of (p+1)/(p-1), whose primes are all smaller.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Union

from .errors import DegenerateInvolution, DegenerateParameter
from .group import SIGN_GENERATOR, TWO_GENERATOR, _factor, bs_product, power
from .triples import EtaleUnit, PythTriple, RationalTriple, _coprime_fraction, _tuple_new, as_param


def swap(t):
    if type(t) is PythTriple:
        return _tuple_new(PythTriple, (t[1], t[0], t[2]))
    if isinstance(t, PythTriple):
        return PythTriple(t.b, t.a, t.c)
    return RationalTriple(t.b, t.a, t.c)


def cayley(r) -> Fraction:
    if type(r) is not Fraction:
        r = as_param(r)
    m, n = r.numerator, r.denominator
    if not m:
        raise ValueError("parameter must be a nonzero rational")
    if n == 1 and m in (1, -1):
        raise DegenerateParameter(f"r = {r} is sent outside Q^x by the Cayley transform")
    # (m+n)/(m-n); any common factor divides 2n and 2m, so it is 1 or 2
    num, den = m + n, m - n
    if not (num & 1 or den & 1):
        num >>= 1
        den >>= 1
    if den < 0:
        num, den = -num, -den
    return _coprime_fraction(num, den)


def cayley_etale(u: EtaleUnit) -> EtaleUnit:
    if u.beta == 0:
        raise DegenerateParameter(f"beta = 0 for {u}; the swap would need a = 0")
    return EtaleUnit(u.alpha / u.beta, 1 / u.beta)


# --- words ------------------------------------------------------------------


@dataclass(frozen=True)
class Gen:
    name: str  # "G" or "S"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Mul:
    left: "Word"
    right: "Word"

    def __str__(self) -> str:
        return f"mul({self.left},{self.right})"


@dataclass(frozen=True)
class Pow:
    base: "Word"
    exp: int

    def __str__(self) -> str:
        return f"pow({self.base},{self.exp})"


@dataclass(frozen=True)
class Inv:
    """Swap involution applied to a word (not the group inverse)."""

    arg: "Word"

    def __str__(self) -> str:
        return f"inv({self.arg})"


Word = Union[Gen, Mul, Pow, Inv]
G = Gen("G")
S = Gen("S")


def _product(words: list[Word]) -> Word:
    if not words:
        return Pow(G, 0)
    out = words[0]
    for w in words[1:]:
        out = Mul(out, w)
    return out


@lru_cache(maxsize=None)
def _prime_word(p: int) -> Word:
    # shared across calls so evaluation memos keyed on node identity stay hot
    if p == 2:
        return G
    return Inv(_decompose(cayley(p)))


@lru_cache(maxsize=4096)
def _prime_power_word(p: int, e: int) -> Word:
    w = _prime_word(p)
    return w if e == 1 else Pow(w, e)


def _decompose(r: Fraction) -> Word:
    factors: list[Word] = []
    if r < 0:
        factors.append(S)
    for n, sign in ((abs(r.numerator), 1), (r.denominator, -1)):
        for p, e in sorted(_factor(n).items()):
            factors.append(_prime_power_word(p, sign * e))
    return _product(factors)


def decompose(r) -> Word:
    """Deterministic word whose value lies in the scalar class of ``from_param(r)``.

    >>> str(decompose(5))
    'inv(mul(inv(G),pow(G,-1)))'
    """
    return _decompose(as_param(r))


def evaluate(w: Word, memo: dict | None = None):
    """Value of a word: G, S are (4,3,5), (-1,0,1); mul/pow use the group law; inv swaps.

    ``memo`` (optional, caller-owned) caches values of ``inv``/``pow`` nodes by identity,
    which pays off when many words share sub-words, as :func:`decompose` output does.
    """
    if isinstance(w, Gen):
        return {"G": TWO_GENERATOR, "S": SIGN_GENERATOR}[w.name]
    if isinstance(w, Mul):
        return bs_product(evaluate(w.left, memo), evaluate(w.right, memo))
    if not isinstance(w, (Pow, Inv)):
        raise TypeError(f"not a word: {w!r}")
    if memo is not None and id(w) in memo:
        return memo[id(w)][1]
    if isinstance(w, Pow):
        value = power(evaluate(w.base, memo), w.exp)
    else:
        t = evaluate(w.arg, memo)
        if t.b == 0:
            raise DegenerateInvolution(f"swap applied to {t}, whose class has b = 0")
        value = swap(t)
    if memo is not None:
        memo[id(w)] = (w, value)  # holding w pins its id
    return value


def word_depth(w: Word) -> int:
    """Nesting depth of ``inv`` nodes."""
    if isinstance(w, Gen):
        return 0
    if isinstance(w, Mul):
        return max(word_depth(w.left), word_depth(w.right))
    if isinstance(w, Pow):
        return word_depth(w.base)
    return 1 + word_depth(w.arg)


_TOKEN = re.compile(r"\s*(?:(G|S)|(inv|mul|pow)\(|(-?\d+)|(,)|(\)))")


def parse_word(text: str) -> Word:
    """Parse ``G | S | inv(w) | mul(w,w) | pow(w,k)``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.group(m.lastindex))
        pos = m.end()
    it = iter(tokens + [None])
    tok = next(it, None)

    def advance():
        nonlocal tok
        tok = next(it, None)

    def expect(x):
        if tok != x:
            raise ValueError(f"expected {x!r}, got {tok!r}")
        advance()

    def word() -> Word:
        head = tok
        advance()
        if head in ("G", "S"):
            return Gen(head)
        if head == "inv":
            w = word()
            expect(")")
            return Inv(w)
        if head == "mul":
            left = word()
            expect(",")
            right = word()
            expect(")")
            return Mul(left, right)
        if head == "pow":
            base = word()
            expect(",")
            try:
                k = int(tok)
            except (TypeError, ValueError):
                raise ValueError(f"expected an integer exponent, got {tok!r}") from None
            advance()
            expect(")")
            return Pow(base, k)
        raise ValueError(f"unexpected token {head!r}")

    w = word()
    if tok is not None:
        raise ValueError(f"trailing input starting at {tok!r}")
    return w
