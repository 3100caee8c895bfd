"""Equivariant KR-theory of compact Lie groups with involution.

The main entry points are :func:`parse_group` for group specs,
:func:`parse_element` for element strings, ``*`` on :class:`KRGElement`
for products in normal form and :func:`present_ring` for generators and
relations.
"""
from .charalg import RepType, classify_type, decompose, exterior_power, irrep_character, poly_in_fundamentals
from .coeff import CoeffElement, coeff_mul, complexify, realify
from .errors import KRError
from .expr import parse_element
from .finoracle import builtin, real_quat_tables
from .krgring import KRGElement, complexify_krg, forget_to_kr, kr_mul, present_ring, restrict_to_torus
from .rootdata import build_group, parse_group
from .verify import verify_suite

__all__ = [
    "RepType", "classify_type", "decompose", "exterior_power", "irrep_character",
    "poly_in_fundamentals", "CoeffElement", "coeff_mul", "complexify", "realify", "KRError",
    "parse_element", "builtin", "real_quat_tables", "KRGElement", "complexify_krg",
    "forget_to_kr", "kr_mul", "present_ring", "restrict_to_torus", "build_group",
    "parse_group", "verify_suite",
]
