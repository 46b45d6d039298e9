"""Exact rational scalars: parsing, formatting, and binomial coefficients.

The universal scalar is ``fractions.Fraction``, re-exported as ``Rational``.
It already guarantees a positive denominator, canonical (reduced) form after
every operation, and 0/1 for zero, so no wrapper type is needed.  What this
module adds is the text grammar used by the CLI and file ingestion:

    value := '-'? digits ('.' digits)? | '-'? digits '/' digits

Decimals are converted exactly via powers of ten, never through binary
floating point.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

from .errors import ScalarParseError, ZeroDenominatorError

_INTEGER_RE = re.compile(r"-?\d+\Z")
_DECIMAL_RE = re.compile(r"(-?)(\d+)\.(\d+)\Z")
_FRACTION_RE = re.compile(r"(-?\d+)/(\d+)\Z")


def parse_scalar(text: str) -> Rational:
    """Parse an integer, fraction, or terminating decimal into a Rational.

    Raises ScalarParseError for malformed text and ZeroDenominatorError for
    a fraction with denominator 0.
    """
    token = text.strip()
    if _INTEGER_RE.match(token):
        return Rational(int(token))
    m = _DECIMAL_RE.match(token)
    if m:
        sign, whole, frac = m.groups()
        value = Rational(int(whole + frac), 10 ** len(frac))
        return -value if sign else value
    m = _FRACTION_RE.match(token)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ZeroDenominatorError(f"zero denominator in {token!r}")
        return Rational(num, den)
    raise ScalarParseError(f"malformed scalar {token!r}")


def _pow10_scale(den: int) -> int | None:
    """Smallest f with den | 10**f, or None if den has other prime factors."""
    f = 0
    while den % 2 == 0:
        den //= 2
        f += 1
    g = 0
    while den % 5 == 0:
        den //= 5
        g += 1
    return max(f, g) if den == 1 else None


def format_scalar(value: Rational, prefer_decimal: bool = False) -> str:
    """Render a Rational in the canonical grammar.

    Canonical form is "p" for integers and "p/q" otherwise.  With
    prefer_decimal, values whose denominator divides a power of ten render
    as exact decimals (e.g. 9/2500 -> "0.0036").
    """
    if value.denominator == 1:
        return str(value.numerator)
    if prefer_decimal:
        f = _pow10_scale(value.denominator)
        if f is not None:
            scaled = value.numerator * 10 ** f // value.denominator
            digits = str(abs(scaled)).rjust(f + 1, "0")
            sign = "-" if scaled < 0 else ""
            return f"{sign}{digits[:-f]}.{digits[-f:]}"
    return f"{value.numerator}/{value.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k) computed exactly; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, k)
