"""Invariant suites shared by ``bstriples verify`` and the acceptance tests.

Each suite returns a :class:`SuiteResult`; a suite passes when it records no
failures. Bounds live in :class:`VerifyConfig`.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable

import numpy as np

from . import group, involution, quadratic, triples
from .errors import NoSolution
from .group import bs_product, identity, inverse, normal_form, semigroup_product
from .involution import cayley, decompose, evaluate, swap, word_depth
from .quadratic import QuadElem, family_diff_ab, unit_seq
from .triples import (
    _coprime_fraction,
    RationalTriple,
    from_param,
    normalize_primitive,
    oracle_enumerate,
    to_param,
)

MAX_FAILURES_KEPT = 20


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    failure_count: int = 0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, msg: str) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}  {self.name:<20} checked={self.checked} "
            f"failures={self.failure_count} ({self.seconds:.1f}s)"
        )


@dataclass
class VerifyConfig:
    cmax: int = 1000
    samples: int = 1000
    seed: int = 0
    semigroup_bound: int = 20
    semigroup_exhaustive_bound: int = 0
    inverse_pair_bound: int = 50
    involution_bound: int = 100
    generation_bound: int = 60
    pell_jmax: int = 60
    obstruction_bound: int = 200
    obstruction_dmax: int = 100
    family_dmax: int = 49
    family_cmax: int | None = None  # defaults to cmax


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def reduced_fractions(bound: int, signed: bool = True):
    """All reduced m/n with 1 <= |m|, n <= bound, in a fixed order."""
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            if gcd(m, n) == 1:
                # already reduced, so skip Fraction's own gcd
                yield _coprime_fraction(m, n)
                if signed:
                    yield _coprime_fraction(-m, n)


# --- oracle bijection ---------------------------------------------------------


def oracle_bijection(cmax: int, oracle=None) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        expected = set(oracle if oracle is not None else oracle_enumerate(cmax))
        lim = isqrt(2 * cmax) + 1
        image: dict = {}
        for n in range(1, lim + 1):
            for m in range(1, lim + 1):
                if gcd(m, n) != 1:
                    continue
                # c >= (m^2 + n^2)/2 for every reduced m/n
                if m * m + n * n > 2 * cmax:
                    continue
                for r in (Fraction(m, n), Fraction(-m, n)):
                    t = from_param(r)
                    res.checked += 1
                    if t.c > cmax:
                        continue
                    if t in image:
                        res.fail(f"{r} and {image[t]} both map to {t}")
                    image[t] = r
        got = set(image)
        for t in sorted(expected - got, key=lambda t: (t.c, t.a, t.b)):
            res.fail(f"oracle triple {t} not hit by any parameter")
        for t in sorted(got - expected, key=lambda t: (t.c, t.a, t.b)):
            res.fail(f"{t} from {image[t]} missing from the oracle")

    return _timed("oracle-bijection", body)


# --- group laws -------------------------------------------------------------


def random_rational_triple(rng: random.Random, size: int = 60) -> RationalTriple:
    def q():
        num = 0
        while num == 0:
            num = rng.randint(-size, size)
        return Fraction(num, rng.randint(1, size))

    t = from_param(q())
    s = q()
    return RationalTriple(s * t.a, s * t.b, s * t.c)


def group_laws(samples: int, seed: int = 0) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        rng = random.Random(seed)
        e = identity()
        for _ in range(samples):
            s, t, u = (random_rational_triple(rng) for _ in range(3))
            res.checked += 1
            st = bs_product(s, t)
            if bs_product(st, u) != bs_product(s, bs_product(t, u)):
                res.fail(f"associativity fails on {s}, {t}, {u}")
            if bs_product(e, s) != s or bs_product(s, e) != s:
                res.fail(f"identity fails on {s}")
            if bs_product(s, inverse(s)) != e:
                res.fail(f"inverse fails on {s}")
            if st != bs_product(t, s):
                res.fail(f"commutativity fails on {s}, {t}")
            if st.a != s.a * t.a:
                res.fail(f"a-entry not multiplicative on {s}, {t}")
            if to_param(normalize_primitive(st)) != to_param(s) * to_param(t):
                res.fail(f"parameter not multiplicative on {s}, {t}")
            if group.klein_component(st) != tuple(
                x * y for x, y in zip(group.klein_component(s), group.klein_component(t))
            ):
                res.fail(f"Klein component not multiplicative on {s}, {t}")

    return _timed("group-laws", body)


# --- normal-form product ----------------------------------------------------


def _semigroup_kernel():
    from numba import njit

    rule = njit(group.semigroup_rule)

    @njit
    def fp(m, n):
        if (m * n) % 2 == 0:
            return 2 * m * n, m * m - n * n, m * m + n * n
        return m * n, (m * m - n * n) // 2, (m * m + n * n) // 2

    @njit
    def kernel(ms, ns, bad_out):
        bad = 0
        count = 0
        size = len(ms)
        for i in range(size):
            m = ms[i]
            n = ns[i]
            a, b, c = fp(m, n)
            for j in range(i, size):
                k = ms[j]
                l = ns[j]
                f, g, h = fp(k, l)
                # normal form of the product, straight from the definition
                pa = a * f
                pb = b * h + c * g
                pc = b * g + c * h
                rn = pc + pb
                rd = pa
                q = gcd(rn, rd)
                rn //= q
                rd //= q
                xa, xb, xc = fp(rn, rd)
                count += 1
                ok = pa % xa == 0
                if ok:
                    sc = pa // xa
                    ok = pb == sc * xb and pc == sc * xc
                    if ok:
                        factor, num, den = rule(m, n, k, l)
                        ok = factor == sc and num == rn and den == rd
                if not ok:
                    if bad < len(bad_out):
                        bad_out[bad, 0] = m
                        bad_out[bad, 1] = n
                        bad_out[bad, 2] = k
                        bad_out[bad, 3] = l
                    bad += 1
        return count, bad

    return kernel


def semigroup_exhaustive(bound: int) -> SuiteResult:
    """Every unordered pair of positive reduced fractions with entries <= bound.

    Compiles :func:`group.semigroup_rule` itself and compares it with the
    normal form of the product triple computed from scratch in int64.
    Both sides are commutative, so unordered pairs cover all ordered pairs.
    """

    def body(res: SuiteResult) -> None:
        if 8 * bound ** 4 >= 2 ** 62:
            raise OverflowError("bound too large for int64 kernel")
        fr = list(reduced_fractions(bound, signed=False))
        ms = np.array([f.numerator for f in fr], dtype=np.int64)
        ns = np.array([f.denominator for f in fr], dtype=np.int64)
        bad_out = np.zeros((MAX_FAILURES_KEPT, 4), dtype=np.int64)
        count, bad = _semigroup_kernel()(ms, ns, bad_out)
        res.checked = int(count)
        for row in bad_out[: min(bad, MAX_FAILURES_KEPT)]:
            m, n, k, l = (int(x) for x in row)
            res.fail(f"normal-form product mismatch for {m}/{n} * {k}/{l}")
        res.failure_count = int(bad)

    return _timed(f"semigroup<= {bound}", body)


def semigroup_objects(bound: int, samples: int = 2000, seed: int = 0) -> SuiteResult:
    """Library objects end to end: all pairs with entries <= bound, plus random
    scalars and Klein signs."""

    def body(res: SuiteResult) -> None:
        fr = list(reduced_fractions(bound, signed=False))
        for i, p in enumerate(fr):
            np_ = group.NormalForm(1, p)
            tp = from_param(p)
            for q in fr[i:]:
                res.checked += 1
                got = semigroup_product(np_, group.NormalForm(1, q))
                want = normal_form(bs_product(tp, from_param(q)))
                if got != want:
                    res.fail(f"{p} * {q}: rule {got} vs product {want}")
        rng = random.Random(seed)
        for _ in range(samples):
            s, t = random_rational_triple(rng), random_rational_triple(rng)
            res.checked += 1
            got = semigroup_product(normal_form(s), normal_form(t))
            if got != normal_form(bs_product(s, t)) or got.triple() != bs_product(s, t):
                res.fail(f"signed/scaled product mismatch on {s}, {t}")

    return _timed("semigroup-objects", body)


def inverse_pairs(bound: int) -> SuiteResult:
    """``from_param(m/n) * from_param(n/m)`` is m^2 n^2 (odd mn) or 4 m^2 n^2 (even mn) times (1,0,1)."""

    def body(res: SuiteResult) -> None:
        for r in reduced_fractions(bound, signed=False):
            m, n = r.numerator, r.denominator
            res.checked += 1
            k = (m * n) ** 2 * (1 if (m * n) % 2 else 4)
            prod = bs_product(from_param(r), from_param(1 / r))
            if prod != (k, 0, k):
                res.fail(f"{r}: product {prod}, expected multiple {k}")
            nf = semigroup_product(group.NormalForm(1, r), group.NormalForm(1, 1 / r))
            if nf != group.NormalForm(k, 1):
                res.fail(f"{r}: normal form {nf}, expected scalar {k}")

    return _timed("inverse-pairs", body)


def gcd_identity(bound: int) -> SuiteResult:
    """gcd(km, ln) = gcd(k, n) * gcd(m, l) for reduced m/n, k/l."""

    def body(res: SuiteResult) -> None:
        fr = [(f.numerator, f.denominator) for f in reduced_fractions(bound, signed=False)]
        for m, n in fr:
            for k, l in fr:
                res.checked += 1
                if gcd(k * m, l * n) != gcd(k, n) * gcd(m, l):
                    res.fail(f"gcd identity fails for {m}/{n}, {k}/{l}")

    return _timed("gcd-identity", body)


# --- involution -------------------------------------------------------------


def involution_suite(bound: int) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        # ~10^6 fractions at the acceptance bound; keep the loop lean
        cay, fp, sw = cayley, from_param, swap
        checked = 0
        for r in reduced_fractions(bound):
            if r.denominator == 1 and r.numerator in (1, -1):
                continue
            checked += 1
            c = cay(r)
            if c == r:
                res.fail(f"{r} is a fixed point")
            if cay(c) != r:
                res.fail(f"cayley(cayley({r})) = {cay(c)}")
            if fp(c) != sw(fp(r)):
                res.fail(f"from_param(cayley({r})) != swap(from_param({r}))")
        res.checked += checked

    return _timed("involution", body)


def generation_suite(bound: int) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        memo: dict = {}
        for r in reduced_fractions(bound):
            res.checked += 1
            got = normalize_primitive(evaluate(decompose(r), memo))
            if got != from_param(r):
                res.fail(f"{r}: word evaluates to {got}")
        # induction depth: at most the number of primes up to p
        from sympy import primerange

        primes = list(primerange(2, bound + 1))
        for i, p in enumerate(primes):
            res.checked += 1
            if word_depth(decompose(p)) > i + 1:
                res.fail(f"decompose({p}) nests deeper than pi({p}) = {i + 1}")

    return _timed("generation", body)


# --- quadratic --------------------------------------------------------------


def pell_suite(jmax: int) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        u2, u3, base = QuadElem(2, 1, 1), QuadElem(3, 2, 1), QuadElem(3, -1, 1)
        for j in range(0, jmax + 1):
            res.checked += 1
            s, t = unit_seq("st", j)
            xi, eta = unit_seq("xieta", j)
            lam, mu = unit_seq("lambdamu", j)
            if s * s - 2 * t * t != (-1) ** j:
                res.fail(f"s^2 - 2t^2 != (-1)^{j}")
            if xi * xi - 3 * eta * eta != 1:
                res.fail(f"xi^2 - 3 eta^2 != 1 at {j}")
            if lam * lam - 3 * mu * mu != -2:
                res.fail(f"lambda^2 - 3 mu^2 != -2 at {j}")
            if s % 2 != 1 or t % 2 != j % 2:
                res.fail(f"st parity wrong at {j}")
            if (xi * eta) % 2 != 0:
                res.fail(f"xi*eta odd at {j}")
            if lam % 2 != 1 or mu % 2 != 1:
                res.fail(f"lambda, mu not both odd at {j}")
            if j >= 1:
                if QuadElem(2, s, t) != u2 ** j:
                    res.fail(f"st({j}) != (1+sqrt2)^{j}")
                if QuadElem(3, xi, eta) != u3 ** j:
                    res.fail(f"xieta({j}) != (2+sqrt3)^{j}")
                if QuadElem(3, lam, mu) != base * u3 ** j:
                    res.fail(f"lambdamu({j}) != (sqrt3-1)(2+sqrt3)^{j}")
        for j in range(1, min(jmax, 30) + 1):
            res.checked += 1
            rt, rs, t = quadratic.abclose_pair(j)
            if abs(t.a - t.b) != 1:
                res.fail(f"abclose_pair({j}) gives {t}")
            if cayley(rt) != rs or swap(from_param(rt)) != from_param(rs):
                res.fail(f"abclose_pair({j}) fractions not swap images")

    return _timed("pell", body)


def obstruction_suite(bound: int, dmax: int) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        for x in range(bound + 1):
            for y in range(bound + 1):
                res.checked += 1
                if (x * x - 2 * y * y) % 8 in (3, 5):
                    res.fail(f"x^2 - 2y^2 = {x * x - 2 * y * y} is +-3 mod 8 at ({x}, {y})")
        for D in range(1, dmax + 1, 2):
            if D % 8 not in (3, 5):
                continue
            res.checked += 1
            try:
                family_diff_ab(D, 1)
            except NoSolution:
                continue
            res.fail(f"family_diff_ab({D}) did not raise NoSolution")

    return _timed("mod8-obstruction", body)


def family_vs_oracle(dmax: int, cmax: int, oracle=None) -> SuiteResult:
    """Every primitive triple with |a - b| = D, b != 0, c <= cmax comes from the
    |a - b| family (up to negating both legs), and nothing else does."""

    def body(res: SuiteResult) -> None:
        pool = oracle if oracle is not None else oracle_enumerate(cmax)
        by_diff: dict[int, set] = {}
        for t in pool:
            if t.b != 0:
                by_diff.setdefault(abs(t.a - t.b), set()).add(t)
        for D in range(1, dmax + 1, 2):
            res.checked += 1
            want = by_diff.get(D, set())
            try:
                count = 4
                while True:
                    members = family_diff_ab(D, count)
                    nbases = len({m.base for m in members})
                    if all(m.triple.c > cmax for m in members[-nbases:]):
                        break
                    count *= 2
            except NoSolution:
                if want:
                    res.fail(f"D = {D}: NoSolution but oracle has {len(want)} triples")
                continue
            got = set()
            for mem in members:
                for t in (mem.triple, mem.image):
                    if abs(t.a - t.b) != D or mem.diff != D:
                        res.fail(f"D = {D}: {t} has |a - b| = {abs(t.a - t.b)}")
                    if t.c <= cmax:
                        got.add(t)
                        got.add(type(t)(-t.a, -t.b, t.c))
            if got != want:
                res.fail(
                    f"D = {D}: {len(want - got)} oracle triples missing, "
                    f"{len(got - want)} extra"
                )

    return _timed("family-vs-oracle", body)


def unit_pair_suite(bound: int = 100) -> SuiteResult:
    """unitinv_pair / unit3_pair reported differences against the triples."""

    def body(res: SuiteResult) -> None:
        for n in range(1, bound + 1):
            for l in range(1, bound + 1):
                if gcd(n, l) != 1:
                    continue
                if n % 2:
                    res.checked += 1
                    p = quadratic.unitinv_pair(n, l)
                    t = p.triple
                    if abs(t.a - t.b) != abs(n * n - 2 * l * l) or p.diff != abs(t.a - t.b):
                        res.fail(f"unitinv_pair({n}, {l}) difference mismatch")
                    if cayley(p.r_first) != p.r_second:
                        res.fail(f"unitinv_pair({n}, {l}) fractions not swap images")
                if n % 3:
                    res.checked += 1
                    q = quadratic.unit3_pair(n, l)
                    if q.triple_k.c - 2 * q.triple_k.a != q.c_minus_2a:
                        res.fail(f"unit3_pair({n}, {l}) c - 2a mismatch")
                    if q.triple_m.c - 2 * q.triple_m.a != q.h_minus_2f:
                        res.fail(f"unit3_pair({n}, {l}) h - 2f mismatch")

    return _timed("unit-pairs", body)


def run_all(cfg: VerifyConfig) -> list[SuiteResult]:
    oracle = oracle_enumerate(cfg.cmax)
    results = [
        oracle_bijection(cfg.cmax, oracle),
        group_laws(cfg.samples, cfg.seed),
        semigroup_objects(cfg.semigroup_bound, samples=cfg.samples, seed=cfg.seed),
        inverse_pairs(cfg.inverse_pair_bound),
        gcd_identity(min(cfg.semigroup_bound, 60)),
        involution_suite(cfg.involution_bound),
        generation_suite(cfg.generation_bound),
        pell_suite(cfg.pell_jmax),
        unit_pair_suite(),
        obstruction_suite(cfg.obstruction_bound, cfg.obstruction_dmax),
    ]
    family_cmax = cfg.family_cmax or cfg.cmax
    family_oracle = oracle if family_cmax == cfg.cmax else oracle_enumerate(family_cmax)
    results.append(family_vs_oracle(cfg.family_dmax, family_cmax, family_oracle))
    if cfg.semigroup_exhaustive_bound:
        results.append(semigroup_exhaustive(cfg.semigroup_exhaustive_bound))
    return results
