"""Exact rational scalars.

The scalar type is the standard library Fraction, aliased as Q.  Fractions
are always kept in lowest terms with a positive denominator, and str() on a
Fraction already produces the canonical wire format: "p/q", or just "p" when
the denominator is one.  The helpers below add strict parsing so malformed
coefficient strings in input files fail loudly instead of being coerced.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError

Q = Fraction

ZERO = Q(0)
ONE = Q(1)

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text: str) -> Q:
    """Parse "p/q" or "p" (lowest terms not required on input)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise InputError(f"not a rational coefficient: {text!r}")
    return Q(text.strip())


def format_rational(value: Q) -> str:
    """Canonical string form: "p/q" in lowest terms, "p" when integral."""
    return str(value)
