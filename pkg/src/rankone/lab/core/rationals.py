"""Точная рациональная арифметика: разбор, сериализация, оценки корней."""
import math
import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

_RATIO = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(value: Any) -> Fraction:
    """Разбирает рациональное число без потери точности.

    Принимаются `Fraction`, целые, строки вида "p/q" и десятичные строки
    с конечной записью ("0.125", "-3", "1e-3"). Float переводится через
    свою кратчайшую десятичную запись.

    Raises:
        ValueError: Значение не является конечным рациональным числом
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("логическое значение не является рациональным числом")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"значение {value} не является конечным числом")
        value = repr(value)
    if isinstance(value, str):
        match = _RATIO.match(value)
        if match:
            numerator, denominator = int(match.group(1)), int(match.group(2))
            if denominator == 0:
                raise ValueError(f"нулевой знаменатель в '{value}'")
            return Fraction(numerator, denominator)
        try:
            decimal = Decimal(value.strip())
        except InvalidOperation:
            raise ValueError(f"'{value}' не является рациональным числом") from None
        if not decimal.is_finite():
            raise ValueError(f"'{value}' не является конечным числом")
        return Fraction(decimal)
    raise ValueError(f"неподдерживаемый тип рационального числа: {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Сериализует число в виде "p/q" (знаменатель всегда указан)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def bit_size(value: Fraction) -> int:
    """Наибольшая битовая длина числителя и знаменателя."""
    return max(abs(value.numerator).bit_length(), value.denominator.bit_length())


def sqrt_upper(square: Fraction, precision_bits: int = 32) -> Fraction:
    """Рациональная верхняя оценка квадратного корня.

    Для полных квадратов результат точный, иначе превышение не больше
    2^-precision_bits относительно масштаба знаменателя.
    """
    if square < 0:
        raise ValueError("корень из отрицательного числа")
    if square == 0:
        return Fraction(0)
    product = square.numerator * square.denominator
    root = math.isqrt(product)
    if root * root == product:
        return Fraction(root, square.denominator)
    scale = 1 << precision_bits
    scaled = math.isqrt(product * scale * scale) + 1
    return Fraction(scaled, square.denominator * scale)


def round_half_even(value: Fraction) -> int:
    """Ближайшее целое, половины округляются к четному."""
    return round(value)


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]
