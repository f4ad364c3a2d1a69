"""Тесты вычисления перманентов."""
from fractions import Fraction as Q
from itertools import permutations
from math import prod

from hypothesis import given, settings, strategies as st

from src.rankone.lab.core.permanents import ryser_permanent


def permutation_permanent(matrix) -> Q:
    """Перманент прямым суммированием по n! перестановкам."""
    n = len(matrix)
    return sum(
        (prod((matrix[i][sigma[i]] for i in range(n)), start=Q(1)) for sigma in permutations(range(n))),
        Q(0),
    )


def square_matrices(max_size: int = 5):
    entries = st.fractions(min_value=-4, max_value=4, max_denominator=6)
    return st.integers(min_value=1, max_value=max_size).flatmap(
        lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)
    )


class TestPermanents:
    """Тесты формулы Райзера."""

    def test_empty_matrix(self):
        """Тест: перманент пустой матрицы равен 1."""
        assert ryser_permanent([]) == 1

    def test_two_by_two(self):
        """Тест: перманент 2x2 равен ad + bc."""
        a, b, c, d = Q(1, 2), Q(1, 3), Q(1, 5), Q(1, 7)
        assert ryser_permanent([[a, b], [c, d]]) == a * d + b * c

    def test_all_ones(self):
        """Тест: перманент матрицы из единиц равен n!."""
        ones = [[Q(1)] * 4 for _ in range(4)]
        assert ryser_permanent(ones) == 24

    def test_identity(self):
        """Тест: перманент единичной матрицы равен 1."""
        identity = [[Q(int(i == j)) for j in range(3)] for i in range(3)]
        assert ryser_permanent(identity) == 1

    @settings(max_examples=60)
    @given(square_matrices())
    def test_matches_permutation_sum(self, matrix):
        """Тест совпадения с прямым суммированием по перестановкам."""
        assert ryser_permanent(matrix) == permutation_permanent(matrix)
