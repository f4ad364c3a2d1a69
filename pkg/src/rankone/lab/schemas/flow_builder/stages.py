from fractions import Fraction

from pydantic import Field

from ..entities.base import LabModel
from ...core.rationals import Rational


class TowerStage(LabModel):
    """Этап конструкции: колонна высоты h над основанием ширины w.

    Attributes:
        j: Номер этапа
        h: Высота колонны h_j
        w: Ширина основания w_j
        mu: Мера, накопленная к этапу j
        spacer_mass: Мера прокладок, добавленных при построении этапа j
    """
    j: int = Field(
        ..., ge=1, description="Номер этапа."
    )
    h: Rational = Field(
        ..., description="Высота колонны."
    )
    w: Rational = Field(
        ..., description="Ширина основания."
    )
    mu: Rational = Field(
        ..., description="Накопленная мера."
    )
    spacer_mass: Rational = Field(
        Fraction(0), description="Мера прокладок этапа."
    )


class StageTransition(LabModel):
    """Переход j -> j + 1: r копий колонны j, копия i поднята на offsets[i-1]
    и накрыта прокладкой spacers[i-1].

    Attributes:
        j: Номер исходного этапа
        r: Число копий
        h: Высота исходной колонны
        spacers: Высоты прокладок s_j(1..r)
        offsets: Высоты оснований копий в колонне j + 1
    """
    j: int = Field(
        ..., ge=1, description="Номер исходного этапа."
    )
    r: int = Field(
        ..., ge=1, description="Число копий."
    )
    h: Rational = Field(
        ..., description="Высота исходной колонны."
    )
    spacers: tuple[Rational, ...] = Field(
        ..., description="Высоты прокладок."
    )
    offsets: tuple[Rational, ...] = Field(
        ..., description="Высоты оснований копий."
    )

    def locate(self, y: Fraction) -> tuple[str, int, Fraction]:
        """Классифицирует высоту y колонны j + 1.

        Returns:
            ("copy", i, y') - точка копии i на высоте y' колонны j,
            ("spacer", i, y') - точка прокладки i на высоте y' внутри нее
        """
        lo, hi = 0, self.r - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.offsets[mid] <= y:
                lo = mid
            else:
                hi = mid - 1
        local = y - self.offsets[lo]
        if local < self.h:
            return "copy", lo + 1, local
        return "spacer", lo + 1, local - self.h


class AdmissibilityRow(LabModel):
    """Строка проверки режима r_j > h_j^j.

    Attributes:
        j: Номер этапа
        r: Число копий r_j
        h: Реализованная высота h_j
        bound: Величина h_j^j
        admissible: Выполнено ли r_j > h_j^j
    """
    j: int = Field(..., description="Номер этапа.")
    r: int = Field(..., description="Число копий.")
    h: Rational = Field(..., description="Высота колонны.")
    bound: Rational = Field(..., description="Величина h_j^j.")
    admissible: bool = Field(..., description="Выполнено ли r_j > h_j^j.")
