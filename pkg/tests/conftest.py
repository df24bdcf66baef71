from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def nonzero_ints(bound=10**6):
    return st.integers(-bound, bound).filter(bool)


@st.composite
def params(draw, bound=10**6):
    """Nonzero reduced fractions."""
    return Fraction(draw(nonzero_ints(bound)), draw(st.integers(1, bound)))


@st.composite
def rational_triples(draw, bound=200):
    """Random group elements: scaled, signed, swapped images of from_param."""
    from bstriples import RationalTriple, from_param

    t = from_param(draw(params(bound)))
    a, b, c = t
    if draw(st.booleans()) and b != 0:
        a, b = b, a
    scale = Fraction(draw(nonzero_ints(50)), draw(st.integers(1, 50)))
    return RationalTriple(scale * a, scale * b, scale * c)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
