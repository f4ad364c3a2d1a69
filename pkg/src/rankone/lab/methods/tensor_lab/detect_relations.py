from fractions import Fraction
from itertools import product
from typing import Sequence

from ...core import LabManager
from ...core.rationals import parse_rational
from ...schemas.tensor_lab import RelationVector


def validate_alphas(alphas: Sequence) -> tuple[Fraction, ...]:
    """Разбирает alphas и проверяет строгое возрастание положительных чисел."""
    parsed = tuple(parse_rational(a) for a in alphas)
    if not parsed or parsed[0] <= 0 or any(a >= b for a, b in zip(parsed, parsed[1:])):
        raise ValueError("alphas должны строго возрастать и быть положительными")
    return parsed


class DetectRelationsMixin(LabManager):
    """Реализует операцию detect_relations"""

    def detect_relations(
        self: "DetectRelationsMixin",
        alphas: Sequence[Fraction | int | str],
    ) -> list[RelationVector]:
        """Все соотношения sum_{i<n} d_i * alpha_i = alpha_n с d_i из {-1, 0, 1}.

        Notes:
            Перебор 3^{n-1} векторов знаков в лексикографическом порядке,
            сравнение в точной арифметике.

        Example:
            relations = lab.detect_relations([1, 2, 3])
            assert [r.d for r in relations] == [(1, 1)]
        """
        alphas = validate_alphas(alphas)
        *head, last = alphas
        relations = [
            RelationVector(d=d)
            for d in product((-1, 0, 1), repeat=len(head))
            if sum((x * a for x, a in zip(d, head)), Fraction(0)) == last
        ]
        self.logger.debug(f"Для alphas={[str(a) for a in alphas]} найдено соотношений: {len(relations)}")
        return relations
