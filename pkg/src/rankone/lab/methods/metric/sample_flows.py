from fractions import Fraction
from typing import Optional

import numpy as np

from ...common.enumerations import SpacerKind
from ...core import LabManager
from ...schemas.flow_builder import FlowParams, SpacerRule

SAMPLED_KINDS = (SpacerKind.CONSTANT, SpacerKind.STAIRCASE)


class SampleFlowsMixin(LabManager):
    """Реализует случайный выбор потоков общей схемы разрезания"""

    def oracle_rng(
        self: "SampleFlowsMixin",
        seed: Optional[int] = None,
    ) -> np.random.Generator:
        """Генератор случайных чисел с зерном oracle_seed из LabConfig."""
        return np.random.default_rng(self._config.oracle_seed if seed is None else seed)

    def sample_partners(
        self: "SampleFlowsMixin",
        params: FlowParams,
        count: int,
        rng: np.random.Generator,
        max_value: int = 3,
    ) -> tuple[FlowParams, ...]:
        """Потоки с той же схемой разрезания и случайными правилами прокладок.

        Notes:
            Семейство выбирается из constant и staircase, параметр - целое
            число 0..max_value, флаг offset_h - с вероятностью 1/2.
        """
        partners = []
        for _ in range(count):
            rule = SpacerRule(
                kind=SAMPLED_KINDS[int(rng.integers(len(SAMPLED_KINDS)))],
                value=Fraction(int(rng.integers(0, max_value + 1))),
                offset_h=bool(rng.integers(2)),
            )
            partners.append(params.model_copy(update={"spacer": rule}))
        self.logger.debug(f"Выбрано {count} случайных потоков для расписания {list(params.n_schedule)}")
        return tuple(partners)

    def sample_triples(
        self: "SampleFlowsMixin",
        size: int,
        count: int,
        rng: np.random.Generator,
    ) -> tuple[tuple[int, int, int], ...]:
        """count упорядоченных троек различных номеров из range(size).

        Raises:
            ValueError: size < 3
        """
        if size < 3:
            raise ValueError(f"для троек нужно хотя бы 3 потока, получено {size}")
        return tuple(
            tuple(int(i) for i in rng.choice(size, size=3, replace=False))
            for _ in range(count)
        )
