from fractions import Fraction
from typing import Optional, Union

from pydantic import Field, model_validator

from .base import LabModel
from ...core.rationals import Rational

Number = Union[int, Fraction]


class CorrelationInterval(LabModel):
    """Гарантированная оценка матричного элемента: значение лежит в [lo, hi].

    Attributes:
        lo: Нижняя граница
        hi: Верхняя граница

    Notes:
        Арифметика интервальная: сумма, разность и произведение содержат
        все значения, совместимые с операндами.
    """
    lo: Rational = Field(..., description="Нижняя граница.")
    hi: Rational = Field(..., description="Верхняя граница.")

    @model_validator(mode="after")
    def validate_order(self):
        if self.lo > self.hi:
            raise ValueError("нижняя граница интервала больше верхней")
        return self

    @classmethod
    def bounds(cls, lo: Number, hi: Number) -> "CorrelationInterval":
        """Быстрый конструктор для уже проверенных границ."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("нижняя граница интервала больше верхней")
        return cls.model_construct(lo=lo, hi=hi)

    @classmethod
    def exact(cls, value: Number) -> "CorrelationInterval":
        value = Fraction(value)
        return cls.model_construct(lo=value, hi=value)

    @classmethod
    def around(cls, value: Number, radius: Number) -> "CorrelationInterval":
        value, radius = Fraction(value), Fraction(radius)
        if radius < 0:
            raise ValueError("радиус интервала отрицателен")
        return cls.model_construct(lo=value - radius, hi=value + radius)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def radius(self) -> Fraction:
        return (self.hi - self.lo) / 2

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def magnitude(self) -> Fraction:
        """max |x| по интервалу."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def mignitude(self) -> Fraction:
        """min |x| по интервалу (0, если интервал содержит ноль)."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def contains_interval(self, other: "CorrelationInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "CorrelationInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "CorrelationInterval") -> Optional["CorrelationInterval"]:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return CorrelationInterval.model_construct(lo=lo, hi=hi)

    def hull(self, other: "CorrelationInterval") -> "CorrelationInterval":
        return CorrelationInterval.model_construct(lo=min(self.lo, other.lo), hi=max(self.hi, other.hi))

    def clamp(self, lo: Number, hi: Number) -> "CorrelationInterval":
        """Пересечение с априорным диапазоном [lo, hi]; пустое пересечение - ошибка."""
        clamped = self.intersect(CorrelationInterval.bounds(lo, hi))
        if clamped is None:
            raise ValueError("интервал не пересекается с априорным диапазоном")
        return clamped

    def scale(self, factor: Number) -> "CorrelationInterval":
        factor = Fraction(factor)
        a, b = self.lo * factor, self.hi * factor
        return CorrelationInterval.model_construct(lo=min(a, b), hi=max(a, b))

    def power(self, exponent: int) -> "CorrelationInterval":
        if exponent < 0:
            raise ValueError("отрицательная степень интервала")
        if exponent == 0:
            return CorrelationInterval.exact(1)
        a, b = self.lo ** exponent, self.hi ** exponent
        if exponent % 2 == 1:
            return CorrelationInterval.model_construct(lo=a, hi=b)
        if self.lo <= 0 <= self.hi:
            return CorrelationInterval.model_construct(lo=Fraction(0), hi=max(a, b))
        return CorrelationInterval.model_construct(lo=min(a, b), hi=max(a, b))

    def __add__(self, other: Union["CorrelationInterval", Number]) -> "CorrelationInterval":
        if isinstance(other, CorrelationInterval):
            return CorrelationInterval.model_construct(lo=self.lo + other.lo, hi=self.hi + other.hi)
        other = Fraction(other)
        return CorrelationInterval.model_construct(lo=self.lo + other, hi=self.hi + other)

    __radd__ = __add__

    def __neg__(self) -> "CorrelationInterval":
        return CorrelationInterval.model_construct(lo=-self.hi, hi=-self.lo)

    def __sub__(self, other: Union["CorrelationInterval", Number]) -> "CorrelationInterval":
        if isinstance(other, CorrelationInterval):
            return self + (-other)
        return self + (-Fraction(other))

    def __rsub__(self, other: Number) -> "CorrelationInterval":
        return (-self) + other

    def __mul__(self, other: Union["CorrelationInterval", Number]) -> "CorrelationInterval":
        if not isinstance(other, CorrelationInterval):
            return self.scale(other)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return CorrelationInterval.model_construct(lo=min(products), hi=max(products))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"CorrelationInterval([{self.lo}, {self.hi}])"
