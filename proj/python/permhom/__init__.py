"""Exhaustive homomesy checks for maps on permutations.

Rationals come back from the extension as "p/q" strings; this layer turns
them into fractions.Fraction.
"""
from fractions import Fraction

from . import _core
from ._core import (
    GuardExceeded,
    Permutation,
    coxeter_elements,
    compose,
    cycle_from_toggle_order,
    decompose,
    evaluate,
    foata_strehl_toggle,
    inverse,
    list_statistics,
    long_cycle,
    n_cycles,
    orbit,
    pair_swap,
    parity_rotate,
    parity_rotate_inverse,
    reflection_trace_cycle_sum,
    rotate,
    simple_transposition,
    symmetric_group,
    togglable_set,
)

__all__ = [
    "GuardExceeded", "Permutation", "check_homomesy", "compose", "coxeter_elements", "cycle_from_toggle_order",
    "decompose", "evaluate", "expected_average", "foata_strehl_toggle", "global_average", "inverse",
    "list_statistics", "long_cycle", "n_cycles", "orbit", "pair_swap", "parity_rotate", "parity_rotate_inverse",
    "reflection_trace_cycle_sum", "rotate", "simple_transposition", "survey", "symmetric_group", "togglable_set",
    "verify",
]


def _verdict(raw):
    out = {"homomesic": raw["homomesic"], "orbit_count": raw["orbit_count"]}
    if raw["homomesic"]:
        out["constant"] = Fraction(raw["constant"])
    else:
        out["witnesses"] = tuple(dict(w, average=Fraction(w["average"])) for w in raw["witnesses"])
    return out


def check_homomesy(n, generator, stat, workers=1):
    return _verdict(_core.check_homomesy(n, generator, stat, workers))


def survey(n, generator, stats=(), workers=1):
    """Verdicts for several statistics in one pass; all of them when stats is empty."""
    return {k: _verdict(v) for k, v in _core.survey(n, generator, list(stats), workers).items()}


def global_average(n, stat):
    return Fraction(_core.global_average(n, stat))


def expected_average(family, stat, n):
    return Fraction(_core.expected_average(family, stat, n))


def verify(n_min, n_max, generators, workers=1, format="json-lines"):
    """Returns (exit code, report text)."""
    if isinstance(generators, str):
        generators = [generators]
    return _core.verify(n_min, n_max, list(generators), workers, format)
