"""Exhaustive leg scan backing the brute-force oracle.

For each ``a`` the hypotenuse candidate only moves upward as ``b`` grows, so a
two-pointer walk tests every ``a**2 + b**2`` for squareness with integer
arithmetic alone. Legs are reported once, with ``a < b`` (or ``b == 0``); the
caller expands signs and order.
"""
from __future__ import annotations

from math import isqrt

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

# below this the JIT compile costs more than the scan itself
_JIT_THRESHOLD = 2000


def _scan_py(c_max: int) -> list[tuple[int, int, int]]:
    out = []
    cm2 = c_max * c_max
    for a in range(1, c_max + 1):
        out.append((a, 0, a))
        a2 = a * a
        b = a + 1
        while a2 + b * b <= cm2:
            s = a2 + b * b
            c = isqrt(s)
            if c * c == s:
                out.append((a, b, c))
            b += 1
    return out


def _scan_kernel(c_max):
    out = []
    cm2 = c_max * c_max
    for a in range(1, c_max + 1):
        out.append((a, 0, a))
        a2 = a * a
        b = a + 1
        c = a + 1
        while True:
            s = a2 + b * b
            if s > cm2:
                break
            while c * c < s:
                c += 1
            if c * c == s:
                out.append((a, b, c))
            b += 1
    return out


if njit is not None:
    _scan_jit = njit(cache=True)(_scan_kernel)
else:  # pragma: no cover
    _scan_jit = None


def scan_legs(c_max: int) -> list[tuple[int, int, int]]:
    if c_max < _JIT_THRESHOLD or _scan_jit is None:
        return _scan_py(c_max)
    # int64 headroom: c**2 must stay below 2**63
    if c_max > 3_000_000_000:
        raise OverflowError("c_max too large for the compiled scan")
    return [(int(a), int(b), int(c)) for a, b, c in _scan_jit(c_max)]
