"""Real quadratic rings Z[sqrt d] and the triple families they control.

Two differences are governed by units:

* ``|a - b|`` by Z[sqrt 2]: for ``m + k sqrt2 = (1 + sqrt2)(n + l sqrt2)`` the
  fractions m/n and k/l are swap images of each other and the triples have
  ``|a - b| = |n^2 - 2 l^2|``;
* ``c - 2a`` by Z[sqrt 3]: for ``m + k sqrt3 = (2 + sqrt3)(n + l sqrt3)`` the
  triple of k/l has ``c - 2a = n^2 - 3 l^2`` (halved when nl is odd) and the
  triple of m/n has ``-3`` times that.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import (
    HalfIntegralUnit,
    InvalidDifference,
    MixedDiscriminant,
    NoSolution,
    PreconditionViolated,
    SearchExceeded,
)
from .triples import PythTriple, from_param


@dataclass(frozen=True)
class QuadElem:
    """``x + y*sqrt(d)`` with integer coefficients."""

    d: int
    x: int
    y: int

    def _same(self, other: QuadElem) -> None:
        if self.d != other.d:
            raise MixedDiscriminant(f"sqrt({self.d}) vs sqrt({other.d})")

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadElem(self.d, self.x * other, self.y * other)
        self._same(other)
        return QuadElem(
            self.d,
            self.x * other.x + self.d * self.y * other.y,
            self.x * other.y + self.y * other.x,
        )

    __rmul__ = __mul__

    def __neg__(self) -> QuadElem:
        return QuadElem(self.d, -self.x, -self.y)

    def conj(self) -> QuadElem:
        return QuadElem(self.d, self.x, -self.y)

    def norm(self) -> int:
        return self.x * self.x - self.d * self.y * self.y

    def __pow__(self, k: int) -> QuadElem:
        base = self
        if k < 0:
            nrm = self.norm()
            if nrm not in (1, -1):
                raise ValueError(f"{self} is not a unit; negative powers are undefined")
            base = self.conj() * nrm
            k = -k
        result = QuadElem(self.d, 1, 0)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        sign = "-" if self.y < 0 else "+"
        return f"{self.x}{sign}{abs(self.y)}√{self.d}"


def quad_mul(u: QuadElem, v: QuadElem) -> QuadElem:
    return u * v


def quad_norm(u: QuadElem) -> int:
    return u.norm()


# --- unit sequences ---------------------------------------------------------

# kind -> (d, unit, (x0, y0))
SEQUENCES = {
    "st": (2, (1, 1), (1, 0)),
    "xieta": (3, (2, 1), (1, 0)),
    "lambdamu": (3, (2, 1), (-1, 1)),
}


@lru_cache(maxsize=None)
def _forward(kind: str, j: int) -> tuple[int, int]:
    d, (ux, uy), (x, y) = SEQUENCES[kind]
    for _ in range(j):
        x, y = ux * x + d * uy * y, uy * x + ux * y
    return x, y


def unit_seq(kind: str, j: int) -> tuple[int, int]:
    """Coefficients of the ``j``-th term of a unit sequence.

    ``st``: (1+sqrt2)^j, ``xieta``: (2+sqrt3)^j, ``lambdamu``: (sqrt3-1)(2+sqrt3)^j.
    Negative indices use the reflections ``t_j = (-1)^j t_-j``,
    ``s_j = (-1)^(j-1) s_-j``, ``xi_j = xi_-j``, ``eta_j = -eta_-j``,
    ``lambda_j = -lambda_(1-j)``, ``mu_j = mu_(1-j)``.  For ``st`` this is
    ``-(1+sqrt2)^j``, not the power itself; ratios and norms are unaffected.
    """
    if kind not in SEQUENCES:
        raise ValueError(f"unknown sequence {kind!r}; expected one of {sorted(SEQUENCES)}")
    if j >= 0:
        return _forward(kind, j)
    if kind == "st":
        s, t = _forward(kind, -j)
        odd = j % 2
        return (s if odd else -s, -t if odd else t)
    if kind == "xieta":
        xi, eta = _forward(kind, -j)
        return (xi, -eta)
    lam, mu = _forward(kind, 1 - j)
    return (-lam, mu)


def unit_elem(kind: str, j: int) -> QuadElem:
    return QuadElem(SEQUENCES[kind][0], *unit_seq(kind, j))


# --- |a - b| and Z[sqrt 2] --------------------------------------------------

UNIT2 = QuadElem(2, 1, 1)
UNIT3 = QuadElem(3, 2, 1)


@dataclass(frozen=True)
class SwapPair:
    r_first: Fraction
    r_second: Fraction
    triple: PythTriple
    diff: int


def unitinv_pair(n: int, l: int) -> SwapPair:
    """Swap-related pair from ``m + k sqrt2 = (1 + sqrt2)(n + l sqrt2)``.

    ``triple`` is ``from_param(m/n)`` and ``diff = |a - b|``. With odd ``n``
    that is ``|n^2 - 2 l^2|``. An even ``n`` (so odd ``l``) makes k/l the odd
    fraction and m/n reduce by 2; then the difference is half the norm.
    """
    if n == 0 or l == 0 or n + l == 0:
        raise PreconditionViolated(f"(n, l) = ({n}, {l}): need n, l, n + l nonzero")
    if gcd(n, l) != 1:
        raise PreconditionViolated(f"gcd({n}, {l}) != 1")
    m, k = n + 2 * l, n + l
    r_first, r_second = Fraction(m, n), Fraction(k, l)
    norm = abs(n * n - 2 * l * l)
    diff = norm if n % 2 else norm // 2
    return SwapPair(r_first, r_second, from_param(r_first), diff)


def abclose_pair(j: int) -> tuple[Fraction, Fraction, PythTriple]:
    """``(t_(j+1)/t_j, s_(j+1)/s_j, triple)`` with ``|a - b| = 1``."""
    if j < 1:
        raise PreconditionViolated("j must be >= 1")
    s0, t0 = unit_seq("st", j)
    s1, t1 = unit_seq("st", j + 1)
    rt = Fraction(t1, t0)
    return rt, Fraction(s1, s0), from_param(rt)


def _mixed(e: QuadElem) -> bool:
    return e.x * e.y <= 0


def canonical_base(e: QuadElem, unit: QuadElem = UNIT2) -> QuadElem:
    """Representative of ``+-e * unit^Z``: the last element with ``x*y <= 0``
    before multiplication by ``unit`` makes both coordinates positive.

    The ratio of the two real embeddings grows monotonically along the orbit,
    so the sign change happens exactly once.
    """
    inv = unit ** -1
    while not _mixed(e):
        e = e * inv
    while _mixed(e * unit):
        e = e * unit
    nxt = e * unit
    if nxt.x < 0 or nxt.y < 0:
        e = -e
    return e


def norm_bases(D: int, d: int = 2) -> list[QuadElem]:
    """Orbit representatives of coprime solutions of ``|x^2 - d y^2| = D`` under
    ``+-unit^Z`` (d = 2).

    Brute-force search over ``0 <= y <= D``, ``|x| <= D + 2y``; every orbit has
    its first same-signed element inside that box.
    """
    found = set()
    for y in range(D + 1):
        for x in range(-(D + 2 * y), D + 2 * y + 1):
            if abs(x * x - d * y * y) == D and gcd(x, y) == 1:
                found.add(canonical_base(QuadElem(d, x, y)))
    return sorted(found, key=lambda e: (e.y, e.x))


@dataclass(frozen=True)
class FamilyMember:
    j: int
    base: QuadElem
    n: int
    l: int
    r: Fraction          # k/l
    triple: PythTriple   # from_param(k/l)
    image_r: Fraction    # m/n, the swap image of r
    image: PythTriple    # from_param(m/n) == swap(triple)
    diff: int


def mod8_obstructed(D: int) -> bool:
    return D % 8 in (3, 5)


def family_diff_ab(D: int, count: int) -> list[FamilyMember]:
    """First ``count`` swap pairs along each orbit of norm +-D in Z[sqrt 2].

    Each member carries the triple of k/l and its swap image of m/n; both have
    ``|a - b| = D``. Pairs where k or l vanish (the b = 0 class) are skipped.
    Ordered by step ``j``, then by base.
    """
    if D <= 0 or D % 2 == 0:
        raise InvalidDifference(f"D = {D}: |a - b| of a primitive triple is odd and positive")
    if mod8_obstructed(D):
        raise NoSolution(
            f"D = {D} is {D % 8} mod 8; x^2 - 2y^2 is never 3 or 5 mod 8, so no triple has |a - b| = {D}"
        )
    bases = norm_bases(D)
    if not bases:
        raise NoSolution(f"no element of Z[sqrt 2] has norm +-{D}")
    per_base: list[list[FamilyMember]] = []
    for base in bases:
        members = []
        e, j = base, 0
        while len(members) < count:
            n, l = e.x, e.y
            if l != 0 and n + l != 0:
                p = unitinv_pair(n, l)
                members.append(
                    FamilyMember(j, base, n, l, p.r_second, from_param(p.r_second),
                                 p.r_first, p.triple, p.diff)
                )
            e, j = e * UNIT2, j + 1
        per_base.append(members)
    out = [m for step in zip(*per_base) for m in step]
    return out


# --- c - 2a and Z[sqrt 3] ---------------------------------------------------


@dataclass(frozen=True)
class CMinus2APair:
    r_k: Fraction
    r_m: Fraction
    triple_k: PythTriple
    triple_m: PythTriple
    c_minus_2a: int
    h_minus_2f: int


def unit3_pair(n: int, l: int) -> CMinus2APair:
    """Pair from ``m + k sqrt3 = (2 + sqrt3)(n + l sqrt3)``; differences from the norm."""
    if l == 0 or n == 0:
        raise PreconditionViolated(f"(n, l) = ({n}, {l}): need n and l nonzero")
    if gcd(n, l) != 1:
        raise PreconditionViolated(f"gcd({n}, {l}) != 1")
    if n % 3 == 0:
        raise PreconditionViolated(f"n = {n} is divisible by 3")
    m, k = 2 * n + 3 * l, n + 2 * l
    norm = n * n - 3 * l * l
    if (n * l) % 2:
        value, other = norm // 2, -3 * norm // 2
    else:
        value, other = norm, -3 * norm
    r_k, r_m = Fraction(k, l), Fraction(m, n)
    return CMinus2APair(r_k, r_m, from_param(r_k), from_param(r_m), value, other)


# target value of c - 2a -> sequence that produces it
CMINUS2A_KINDS = {
    1: ("xieta", 1),      # eta quotients
    -3: ("xieta", 0),     # xi quotients
    -1: ("lambdamu", 1),  # mu quotients
    3: ("lambdamu", 0),   # lambda quotients
}
CMINUS2A_NAMES = {"plus1": 1, "minus3": -3, "minus1": -1, "plus3": 3}


def cminus2a_family(kind, j: int) -> tuple[Fraction, PythTriple]:
    """The ``j``-th (from 1) defined quotient ``seq_(i+1)/seq_i``, i = 0, 1, ...,
    and its triple. ``kind`` is a target value in {1, -3, -1, 3} or its name.

    For 1 the eta sequence starts at 0, so its first quotient is eta_2/eta_1;
    the other three start at index 0.
    """
    target = CMINUS2A_NAMES.get(kind, kind)
    if target not in CMINUS2A_KINDS:
        raise ValueError(f"unknown family {kind!r}")
    if j < 1:
        raise PreconditionViolated("j must be >= 1")
    seq, coord = CMINUS2A_KINDS[target]
    seen, i = 0, 0
    while True:
        den = unit_seq(seq, i)[coord]
        num = unit_seq(seq, i + 1)[coord]
        if den != 0:
            seen += 1
            if seen == j:
                r = Fraction(num, den)
                return r, from_param(r)
        i += 1


# --- fundamental units ------------------------------------------------------


def _squarefree(d: int) -> bool:
    from sympy import factorint

    return all(e == 1 for e in factorint(d).values())


def fundamental_unit(d: int, max_y: int = 10**6) -> QuadElem:
    """Smallest unit ``x + y sqrt d`` (y >= 1) of the ring of integers, by search on y.

    Fields whose fundamental unit has half-integral coordinates are rejected.
    """
    if d < 2 or not _squarefree(d):
        raise ValueError(f"d = {d} must be a squarefree integer >= 2")
    # for d = 1 mod 4 the ring of integers holds (x + y sqrt d)/2 with x, y odd
    scale = 2 if d % 4 == 1 else 1
    target = scale * scale
    for y in range(1, max_y + 1):
        dy2 = d * y * y
        for rhs in (dy2 - target, dy2 + target):
            if rhs < 0:
                continue
            x = isqrt(rhs)
            if x * x == rhs:
                if scale == 2:
                    if x % 2:
                        raise HalfIntegralUnit(
                            f"fundamental unit of Q(sqrt {d}) is ({x}+{y}√{d})/2"
                        )
                    return QuadElem(d, x // 2, y // 2)
                return QuadElem(d, x, y)
    raise SearchExceeded(f"no unit of Q(sqrt {d}) with y <= {max_y}")
