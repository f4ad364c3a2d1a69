from enum import Enum


class MeasureMode(str, Enum):
    """Режим нормировки меры.

    Attributes:
        PROBABILITY: Конечная мера, корреляции дополнительно нормируются на mu_J
        SIGMA_FINITE: Бесконечная мера, корреляции сообщаются как есть
    """
    PROBABILITY = "probability"
    SIGMA_FINITE = "sigma_finite"


class SpacerKind(str, Enum):
    """Семейства правил прокладок s_j(i).

    Attributes:
        CONSTANT: s_j(i) = value
        STAIRCASE: s_j(i) = (i - 1) * value
        CUSTOM: s_j(i) = table[j - 1][i - 1]
    """
    CONSTANT = "constant"
    STAIRCASE = "staircase"
    CUSTOM = "custom"


class RigidityTime(str, Enum):
    """Выбор последовательности времен жесткости R_j.

    Attributes:
        RETURN: R_j = h_j + s_j(1), подъем первой копии на вторую
        CUTS: R_j = r_j, число разрезов
    """
    RETURN = "return"
    CUTS = "cuts"
