"""Parsing and formatting of exact numbers for the JSON wire formats.

All exact values are serialized as decimal strings ("p" or "p/q") so that
consumers limited to 64-bit JSON numbers never truncate them.  Parsers
accept plain JSON integers as well.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError


def parse_int(value: int | str) -> int:
    if isinstance(value, bool):
        raise InputError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError as exc:
            raise InputError(f"not a decimal integer: {value!r}") from exc
    raise InputError(f"expected an integer or decimal string, got {value!r}")


def parse_rational(value: int | str) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"expected a rational or 'p/q' string, got {value!r}")


def format_int(value: int) -> str:
    return str(int(value))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
