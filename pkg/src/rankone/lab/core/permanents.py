"""Перманенты рациональных матриц."""
from fractions import Fraction
from math import prod
from typing import Sequence

Matrix = Sequence[Sequence[Fraction]]


def ryser_permanent(matrix: Matrix) -> Fraction:
    """Перманент по формуле Райзера с обходом подмножеств столбцов кодом Грея.

    perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)

    row_sums = [Fraction(0)] * n
    total = Fraction(0)
    gray = 0
    for k in range(1, 2 ** n):
        following = k ^ (k >> 1)
        column = (gray ^ following).bit_length() - 1
        sign = 1 if following & (1 << column) else -1
        gray = following
        for i in range(n):
            row_sums[i] += sign * matrix[i][column]
        size = bin(gray).count("1")
        term = prod(row_sums, start=Fraction(1))
        total += term if (n - size) % 2 == 0 else -term
    return total
