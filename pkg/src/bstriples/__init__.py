"""Exact arithmetic for the product group on Pythagorean triples (a,b,c)*(f,g,h) = (af, bh+cg, bg+ch)."""
from .errors import DomainError
from .group import (
    NormalForm,
    bs_product,
    generator_factorization,
    identity,
    inverse,
    klein_component,
    normal_form,
    power,
    semigroup_product,
)
from .involution import cayley, cayley_etale, decompose, evaluate, parse_word, swap
from .quadratic import (
    QuadElem,
    abclose_pair,
    cminus2a_family,
    family_diff_ab,
    fundamental_unit,
    unit3_pair,
    unit_seq,
    unitinv_pair,
)
from .triples import (
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

__version__ = "0.1.0"
