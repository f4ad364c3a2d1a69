"""Ядра точной геометрии колонны.

Профиль функции на этапе J - упорядоченный кортеж непересекающихся
сегментов (a, b, c): значение c на высотах [a, b), ноль вне сегментов.
"""
from bisect import bisect_right
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Sequence

Segment = tuple[Fraction, Fraction, Fraction]
Profile = tuple[Segment, ...]

ZERO = Fraction(0)


def sweep_profile(parts: Iterable[tuple[Fraction, Fraction, Fraction]]) -> Profile:
    """Сводит пересекающиеся слагаемые (lo, hi, coef) к профилю."""
    events: dict[Fraction, Fraction] = defaultdict(Fraction)
    for lo, hi, coef in parts:
        if coef == 0 or lo >= hi:
            continue
        events[lo] += coef
        events[hi] -= coef

    segments: list[Segment] = []
    running = ZERO
    points = sorted(events)
    for left, right in zip(points, points[1:]):
        running += events[left]
        if running != 0:
            segments.append((left, right, running))
    return merge_segments(segments)


def merge_segments(segments: Iterable[Segment]) -> Profile:
    """Склеивает соседние сегменты с равными значениями."""
    merged: list[Segment] = []
    for a, b, c in segments:
        if merged and merged[-1][1] == a and merged[-1][2] == c:
            merged[-1] = (merged[-1][0], b, c)
        else:
            merged.append((a, b, c))
    return tuple(merged)


def replicate(segments: Sequence[Segment], offsets: Sequence[Fraction]) -> Profile:
    """Копирует профиль колонны в каждую копию следующего этапа.

    Смещения возрастают, а копии не пересекаются, поэтому результат упорядочен.
    """
    return merge_segments(
        (a + offset, b + offset, c)
        for offset in offsets
        for a, b, c in segments
    )


def replicate_intervals(
        intervals: Sequence[tuple[Fraction, Fraction]],
        offsets: Sequence[Fraction],
) -> tuple[tuple[Fraction, Fraction], ...]:
    """Копирует полуинтервалы без склейки соседних копий."""
    return tuple(
        (a + offset, b + offset)
        for offset in offsets
        for a, b in intervals
    )


def shifted_overlap(f: Profile, g: Profile, t: Fraction) -> Fraction:
    """sum c_f * c_g * |[a_f - t, b_f - t) ∩ [a_g, b_g)| двумя указателями."""
    total = ZERO
    i = j = 0
    while i < len(f) and j < len(g):
        fa, fb, fc = f[i]
        fa, fb = fa - t, fb - t
        ga, gb, gc = g[j]
        lo, hi = max(fa, ga), min(fb, gb)
        if lo < hi:
            total += fc * gc * (hi - lo)
        if fb <= gb:
            i += 1
        else:
            j += 1
    return total


def periodic_overlap(f: Profile, g: Profile, t: Fraction, period: Fraction) -> Fraction:
    """Тот же интеграл для поворота колонны высоты period."""
    tau = t - period * (t // period)
    value = shifted_overlap(f, g, tau)
    if tau:
        value += shifted_overlap(f, g, tau - period)
    return value


def strip_mass(profile: Profile, lo: Fraction, hi: Fraction) -> Fraction:
    """sum |c| * |[a, b) ∩ [lo, hi)|."""
    total = ZERO
    if lo >= hi:
        return total
    for a, b, c in profile:
        if b <= lo:
            continue
        if a >= hi:
            break
        total += abs(c) * (min(b, hi) - max(a, lo))
    return total


def top_strip_mass(profile: Profile, height: Fraction, depth: Fraction) -> Fraction:
    """Масса |f| в верхней полосе [height - depth, height), обход с конца."""
    total = ZERO
    lo = height - depth
    for a, b, c in reversed(profile):
        if b <= lo:
            break
        total += abs(c) * (b - max(a, lo))
    return total


def sup_norm(profile: Profile) -> Fraction:
    return max((abs(c) for _, _, c in profile), default=ZERO)


def square_length(profile: Profile) -> Fraction:
    """sum c^2 * (b - a); норма в квадрате равна w * square_length."""
    return sum((c * c * (b - a) for a, b, c in profile), ZERO)


def abs_length(profile: Profile) -> Fraction:
    return sum((abs(c) * (b - a) for a, b, c in profile), ZERO)


def evaluate(profile: Profile, y: Fraction) -> Fraction:
    """Значение профиля в высоте y (бинарный поиск)."""
    lo, hi = 0, len(profile)
    while lo < hi:
        mid = (lo + hi) // 2
        if profile[mid][1] <= y:
            lo = mid + 1
        else:
            hi = mid
    if lo < len(profile) and profile[lo][0] <= y:
        return profile[lo][2]
    return ZERO


CellKey = tuple


class CellLayout:
    """Разбиение колонны этапа J на ячейки с адресами.

    Ячейка - копия начальной колонны или прокладка. Адрес - кортеж номеров
    копий более поздних переходов, за которым следует ("c",) для копии
    начальной колонны или ("s", j, i) для прокладки i перехода j. Потоки
    с общей схемой разрезания имеют одинаковые адреса, различаются только
    высоты прокладок.
    """

    def __init__(self, keys: Sequence[CellKey], lengths: Sequence[Fraction]) -> None:
        self.keys = tuple(keys)
        self.lengths = tuple(lengths)
        starts = []
        height = ZERO
        for length in self.lengths:
            starts.append(height)
            height += length
        self.starts = tuple(starts)
        self.height = height

    @classmethod
    def initial(cls, height: Fraction) -> "CellLayout":
        return cls([("c",)], [height])

    def stacked(self, j: int, spacers: Sequence[Fraction]) -> "CellLayout":
        """Разбиение следующего этапа: копии с прокладками s_j(i), пустые прокладки опускаются."""
        keys: list[CellKey] = []
        lengths: list[Fraction] = []
        for i, spacer in enumerate(spacers):
            for key, length in zip(self.keys, self.lengths):
                keys.append((i,) + key)
                lengths.append(length)
            if spacer:
                keys.append(("s", j, i))
                lengths.append(spacer)
        return CellLayout(keys, lengths)

    def split(self, lo: Fraction, hi: Fraction) -> list[tuple[CellKey, Fraction, Fraction]]:
        """Части [lo, hi) в локальных высотах ячеек: (адрес, a, b)."""
        parts = []
        lo, hi = max(lo, ZERO), min(hi, self.height)
        if lo >= hi:
            return parts
        index = max(bisect_right(self.starts, lo) - 1, 0)
        while index < len(self.starts) and self.starts[index] < hi:
            start = self.starts[index]
            a = max(lo, start) - start
            b = min(hi, start + self.lengths[index]) - start
            if a < b:
                parts.append((self.keys[index], a, b))
            index += 1
        return parts
