from fractions import Fraction
from math import gcd, isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bstriples import (
    EtaleUnit,
    PythTriple,
    RationalTriple,
    etale_to_param,
    excess,
    from_param,
    height,
    increment,
    make_triple,
    normalize_primitive,
    oracle_enumerate,
    param_to_etale,
    to_etale,
    to_param,
)
from bstriples.errors import NotPythagorean, OutOfRegime, ZeroLeg, ZeroTriple
from bstriples.triples import (
    _coprime_fraction,
    is_primitive,
    parse_fraction,
    triple_from_json,
    triple_to_json,
)
from conftest import params, rational_triples


# --- oracles ----------------------------------------------------------------


def test_make_triple():
    assert make_triple(3, 4, 5) == PythTriple(3, 4, 5)
    assert make_triple(0, 0, 0) == (0, 0, 0)
    with pytest.raises(NotPythagorean):
        make_triple(3, 4, 6)


def test_make_triple_rejects_non_integers():
    with pytest.raises(TypeError):
        PythTriple(3.0, 4, 5)
    with pytest.raises(TypeError):
        PythTriple(True, 0, True)


@pytest.mark.parametrize(
    "r, expected",
    [
        (Fraction(2), (4, 3, 5)),
        (Fraction(12, 5), (120, 119, 169)),
        (Fraction(11, 3), (33, 56, 65)),
        (Fraction(1), (1, 0, 1)),
        (Fraction(-2), (-4, 3, 5)),
        (Fraction(1, 2), (4, -3, 5)),
    ],
)
def test_from_param(r, expected):
    assert from_param(r) == expected


def test_from_param_zero():
    with pytest.raises(ValueError):
        from_param(0)


@pytest.mark.parametrize(
    "t, r", [((4, 3, 5), Fraction(2)), ((20, 21, 29), Fraction(5, 2))]
)
def test_to_param(t, r):
    assert to_param(PythTriple(*t)) == r


def test_to_param_matches_other_formula():
    # c + b = 0 would force a = 0, so a/(c - b) is always an equivalent reading
    for t in [PythTriple(4, 3, 5), PythTriple(-3, 4, -5), PythTriple(1, 0, -1)]:
        assert to_param(t) == Fraction(t.a, t.c - t.b)


def test_to_param_zero_leg():
    with pytest.raises(ZeroLeg):
        to_param(PythTriple(0, 3, 3))


def test_to_etale():
    assert to_etale(PythTriple(4, 3, 5)) == EtaleUnit(Fraction(5, 4), Fraction(3, 4))
    assert to_etale(PythTriple(1, 0, 1)) == EtaleUnit(1, 0)
    assert to_etale(PythTriple(-1, 0, 1)) == EtaleUnit(-1, 0)
    with pytest.raises(ZeroLeg):
        to_etale(PythTriple(0, 1, 1))


def test_param_etale_roundtrip_examples():
    assert param_to_etale(2) == EtaleUnit(Fraction(5, 4), Fraction(3, 4))
    assert param_to_etale(2) == to_etale(from_param(2))
    assert param_to_etale(1) == EtaleUnit(1, 0)
    assert etale_to_param(EtaleUnit(Fraction(5, 4), Fraction(3, 4))) == 2


def test_etale_unit_invariant():
    with pytest.raises(ValueError):
        EtaleUnit(1, 1)


def test_height():
    assert height(PythTriple(4, 3, 5)) == 2
    assert height(PythTriple(3, 4, 5)) == 1
    assert height(PythTriple(3, -4, 5)) == 9


def test_excess_and_increment():
    assert excess(PythTriple(4, 3, 5)) == 2
    assert increment(PythTriple(4, 3, 5)) == 1
    assert excess(PythTriple(3, 4, 5)) == 2
    assert increment(PythTriple(3, 4, 5)) == 2
    with pytest.raises(OutOfRegime):
        increment(PythTriple(1, 0, 1))
    with pytest.raises(OutOfRegime):
        increment(PythTriple(6, 8, 10))


def test_normalize_primitive():
    assert normalize_primitive(PythTriple(16, 0, 16)) == (1, 0, 1)
    assert normalize_primitive(PythTriple(6, 8, 10)) == (3, 4, 5)
    assert normalize_primitive(PythTriple(-3, -4, -5)) == (3, 4, 5)
    assert normalize_primitive(PythTriple(-3, -4, -5), positive="a") == (3, 4, 5)
    assert normalize_primitive(
        RationalTriple(Fraction(5, 16), Fraction(3, 4), Fraction(13, 16))
    ) == (5, 12, 13)
    with pytest.raises(ZeroTriple):
        normalize_primitive(PythTriple(0, 0, 0))


def test_oracle_small():
    expected = {
        (3, 4, 5), (4, 3, 5), (-3, 4, 5), (3, -4, 5), (-4, 3, 5), (4, -3, 5),
        (-3, -4, 5), (-4, -3, 5), (1, 0, 1), (-1, 0, 1),
    }
    assert set(oracle_enumerate(5)) == expected
    assert len(oracle_enumerate(5)) == len(expected)


def test_oracle_contains_h1_entries():
    found = set(oracle_enumerate(13))
    assert (5, 12, 13) in found and (12, 5, 13) in found


def test_oracle_rejects_bad_bound():
    with pytest.raises(ValueError):
        oracle_enumerate(0)


def test_oracle_against_naive_scan():
    cmax = 60
    naive = set()
    for c in range(1, cmax + 1):
        for a in range(-c, c + 1):
            b2 = c * c - a * a
            b = isqrt(b2)
            if a != 0 and b * b == b2 and gcd(gcd(a, b), c) == 1:
                naive.add((a, b, c))
                naive.add((a, -b, c))
    assert set(oracle_enumerate(cmax)) == naive


def test_oracle_jit_path_matches_python_path():
    from bstriples import _scan

    assert sorted(_scan._scan_py(2500)) == sorted(map(tuple, _scan.scan_legs(2500)))


def test_parse_fraction():
    assert parse_fraction("12/5") == Fraction(12, 5)
    assert parse_fraction("-6") == -6
    assert parse_fraction("4/-6") == Fraction(-2, 3)
    with pytest.raises(ValueError):
        parse_fraction("0/3")


def test_triple_json_roundtrip_examples():
    t = PythTriple(120, 119, 169)
    assert triple_to_json(t) == {"a": "120", "b": "119", "c": "169"}
    assert triple_from_json(triple_to_json(t)) == t
    q = RationalTriple(Fraction(1, 4), Fraction(-3, 16), Fraction(5, 16))
    back = triple_from_json(triple_to_json(q))
    assert back == q and isinstance(back, RationalTriple)


def test_equality_across_representations():
    assert PythTriple(3, 4, 5) == RationalTriple(3, 4, 5) == (3, 4, 5)
    assert hash(PythTriple(3, 4, 5)) == hash(RationalTriple(3, 4, 5))
    assert str(PythTriple(-4, 3, 5)) == "(-4,3,5)"
    assert repr(PythTriple(4, 3, 5)) == "PythTriple(4, 3, 5)"


def test_coprime_fraction_helper():
    f = _coprime_fraction(-7, 12)
    assert f == Fraction(-7, 12) and hash(f) == hash(Fraction(-7, 12))
    assert f + Fraction(1, 12) == Fraction(-1, 2)


# --- properties ---------------------------------------------------------------


@given(params())
def test_from_param_is_primitive_with_positive_c(r):
    t = from_param(r)
    assert t.a * t.a + t.b * t.b == t.c * t.c
    assert t.c > 0 and t.a != 0
    assert is_primitive(t)


@given(params())
def test_param_roundtrip(r):
    assert to_param(from_param(r)) == r


@given(params())
def test_etale_roundtrip(r):
    u = param_to_etale(r)
    assert u.alpha ** 2 - u.beta ** 2 == 1
    assert abs(u.alpha) > abs(u.beta)
    assert etale_to_param(u) == r
    assert u == to_etale(from_param(r))


@given(rational_triples())
def test_to_param_is_scale_invariant(t):
    assert to_param(t) == to_param(normalize_primitive(t))


@given(st.integers(2, 2000), st.integers(1, 2000))
def test_height_parametrization(m, n):
    # h = n^2 up to the factor 2 of the even branch
    if gcd(m, n) != 1:
        return
    t = from_param(Fraction(m, n))
    h = height(t)
    assert h == (2 * n * n if (m * n) % 2 == 0 else n * n)


def _largest_square_root_divisor(x):
    d = isqrt(x)
    while x % (d * d):
        d -= 1
    return d


@given(st.integers(2, 2000), st.integers(1, 2000))
def test_increment_is_m_minus_n(m, n):
    if gcd(m, n) != 1 or m <= n:
        return
    t = from_param(Fraction(m, n))
    assert increment(t) == m - n
    # excess over the largest d with d^2 | 2h recovers the same number
    d = _largest_square_root_divisor(2 * height(t))
    assert excess(t) == (m - n) * d


@given(rational_triples())
def test_json_roundtrip(t):
    assert triple_from_json(triple_to_json(t)) == t
