"""Partial sums of (-1)^{s_w(n)} for subword-counting sequences.

Thin wrappers around the compiled ``_subword`` module. Words are strings
over ``0`` and ``1``; the base word ``u`` defaults to ``0...01``.
"""

import json

from ._subword import (
    ArityError,
    CapacityError,
    DomainError,
    OverflowError,
    ParseError,
    bracket,
    check_long_prefix,
    check_one_run,
    check_simple_family,
    check_two_runs,
    count_factor,
    count_subword,
    det_two_minus_m,
    detect_modulus_two,
    find_certificate,
    matrices,
    orbit,
    partial_sum,
    partial_sum_direct,
    spectral_radius,
    step,
    step_inverse,
    subword_parity,
)


def analyze(w, u=None):
    """Classification report for ``w`` as a dict (same fields as the CLI's JSON)."""
    from ._subword import analyze_json

    return json.loads(analyze_json(w, u))


def S(w, N):
    """sum_{n <= N} (-1)^{s_w(n)}."""
    return partial_sum(w, N)[0]


__all__ = [
    "ArityError",
    "CapacityError",
    "DomainError",
    "OverflowError",
    "ParseError",
    "S",
    "analyze",
    "bracket",
    "check_long_prefix",
    "check_one_run",
    "check_simple_family",
    "check_two_runs",
    "count_factor",
    "count_subword",
    "det_two_minus_m",
    "detect_modulus_two",
    "find_certificate",
    "matrices",
    "orbit",
    "partial_sum",
    "partial_sum_direct",
    "spectral_radius",
    "step",
    "step_inverse",
    "subword_parity",
]
