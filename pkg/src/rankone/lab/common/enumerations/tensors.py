from enum import Enum


class FactorSymbol(str, Enum):
    """Символ сомножителя в предсказанном слабом пределе.

    Attributes:
        I: Тождественный оператор
        T_U: Сдвиг T_u
        T_MINUS_U: Сдвиг T_{-u}
    """
    I = "I"
    T_U = "T_u"
    T_MINUS_U = "T_-u"


class UMode(str, Enum):
    """Источник сдвига u при сравнении Q_j с пределом.

    Attributes:
        ESTIMATE: u оценивается по кластеру дефектов
        FIXED: u берется из конфигурации
    """
    ESTIMATE = "estimate"
    FIXED = "fixed"
