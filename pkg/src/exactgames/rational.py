"""Exact rational arithmetic shared by every module.

All payoffs, probabilities and derived values in this package are rationals;
no floating point ever enters a computation.  ``gmpy2.mpq`` is used when
available (it is several times faster than ``fractions.Fraction`` in the
elimination-heavy solver loops) with ``Fraction`` as a drop-in fallback.
Both types normalise to lowest terms with a positive denominator.
"""

from __future__ import annotations

import re

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

__all__ = ["Rational", "rat", "parse_rational", "format_rational", "decimal_string"]

_FRACTION_RE = re.compile(r"^([+-]?\d+)\s*(?:/\s*([+-]?\d+))?$")

ZERO = Rational(0)
ONE = Rational(1)


def rat(value, den=None):
    """Coerce ``value`` (int, string ``"p/q"``, Fraction, mpq) to a Rational."""
    if den is not None:
        return Rational(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    return Rational(value)


def parse_rational(text: str) -> Rational:
    """Parse ``"p"`` or ``"p/q"`` strictly.

    Rejects empty strings, non-integer parts, negative or zero denominators.
    Raises ``ValueError`` with a reason suitable for file-format messages.
    """
    match = _FRACTION_RE.match(text.strip())
    if not match:
        raise ValueError(f"invalid rational {text!r} (expected 'p' or 'p/q')")
    num = int(match.group(1))
    den_text = match.group(2)
    if den_text is None:
        return Rational(num)
    den = int(den_text)
    if den == 0:
        raise ValueError(f"invalid rational {text!r} (zero denominator)")
    if den < 0:
        raise ValueError(f"invalid rational {text!r} (denominator must be positive)")
    return Rational(num, den)


def format_rational(q) -> str:
    """Render exactly: ``"p"`` for integers, ``"p/q"`` otherwise."""
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def decimal_string(q, places: int = 4) -> str:
    """Fixed-point decimal rendering, rounded half-up (away from zero on ties)."""
    q = Rational(q)
    num, den = int(q.numerator), int(q.denominator)
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled = num * 10**places
    units = (2 * scaled + den) // (2 * den)
    digits = str(units).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
