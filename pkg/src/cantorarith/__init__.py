"""Exact arithmetic and automata for the additive reals with digit predicates."""

from .expansions import (
    PeriodicReal,
    PowerOfBase,
    Rational,
    evaluate,
    expand,
    format_rational,
    other_expansion,
    parse_periodic,
    parse_power,
    parse_rational,
    power_of,
)
from .digits import digit_predicate, fact11_v_from_u
from .omega_order import enumerate_Dr, in_Dr, omega_min_interval, prec, tau
from .base_change import case2_f, common_base, minimal_root, support, theta
from .cantor import (
    CantorParams,
    CompInterval,
    contains,
    decompose,
    derive_params,
    digit_via_Z,
    dprime,
    h_digit,
    interval_at,
    is_length,
    mu,
    parse_params,
    right_endpoints,
)
from .errors import DomainError, NonWeakError, ResourceLimit

__all__ = [
    "PeriodicReal",
    "PowerOfBase",
    "Rational",
    "CantorParams",
    "CompInterval",
    "DomainError",
    "NonWeakError",
    "ResourceLimit",
    "case2_f",
    "common_base",
    "contains",
    "decompose",
    "derive_params",
    "digit_predicate",
    "digit_via_Z",
    "dprime",
    "enumerate_Dr",
    "evaluate",
    "expand",
    "fact11_v_from_u",
    "format_rational",
    "h_digit",
    "in_Dr",
    "interval_at",
    "is_length",
    "minimal_root",
    "mu",
    "omega_min_interval",
    "other_expansion",
    "parse_params",
    "parse_periodic",
    "parse_power",
    "parse_rational",
    "power_of",
    "prec",
    "right_endpoints",
    "support",
    "tau",
    "theta",
]
