# -*- coding: utf-8 -*-
"""
Exact rational parsing and formatting.

Accepted text forms: integers ("3"), fractions ("7/2") and decimals ("3.5"),
the latter converted exactly. Output is lowest-terms "num/den" or a bare integer.
"""

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from .errors import InvalidRational, NegativeWeight

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse a JSON/CLI value into an exact Fraction

    Args:
        value: int, Fraction or string in integer, "num/den" or decimal form

    Returns:
        Fraction in lowest terms
    """
    if isinstance(value, bool):
        raise InvalidRational(f"Not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or 'e' in text.lower():
            raise InvalidRational(f"Not a rational number: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InvalidRational(f"Not a rational number: {value!r}") from None
    raise InvalidRational(f"Not a rational number: {value!r}")


def parse_nonnegative(value: RationalLike, what: str = "value") -> Fraction:
    number = parse_rational(value)
    if number < 0:
        raise NegativeWeight(f"{what} must be nonnegative, got {format_rational(number)}")
    return number


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_json_value(value: Fraction) -> Union[int, str]:
    """Integers serialize as JSON numbers, everything else as "num/den" strings"""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return format_rational(value)


def denominator_lcm(values: Iterable[Fraction]) -> int:
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


def is_integral(value: Fraction) -> bool:
    return Fraction(value).denominator == 1
