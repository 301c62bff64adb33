"""Exact combinatorics of the Dyck pattern poset."""

from .asymptotics import (
    alpha,
    complement_shape,
    conjecture_report,
    dyck_lattice_chain_count,
    leading_runs,
    syt_count,
)
from .paths import (
    EMPTY,
    DyckParseError,
    DyckWord,
    factorize,
    generate_all,
    parse,
    render,
    statistics,
)
from .patterns import avoiders, contains, count_avoiders_brute, count_occurrences
from .poset import (
    covered_count,
    covered_set,
    covering_count,
    covering_set,
    interval,
    mobius,
    saturated_chain_count,
)
from .sequences import (
    Family,
    PatternFamily,
    ballot,
    catalan,
    crosscheck,
    d_formula,
    narayana,
)

__version__ = "0.1.0"
