class LabError(Exception):
    """Базовое исключение лаборатории."""
    def __init__(self, code: int, message: str, details: list | None = None):
        self.code = code
        self.message = message
        self.details = details or []
        super().__init__(f"Lab Error {code}: {message}")


class ConfigurationError(LabError):
    """Ошибка 100: Некорректная конфигурация эксперимента."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(100, message, details)


class NonAdmissibleSchedule(LabError):
    """Ошибка 110: Расписание нарушает условие r_j > h_j^j."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(110, message, details)


class NegativeSpacer(LabError):
    """Ошибка 111: Отрицательная высота прокладки."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(111, message, details)


class StageOverflow(LabError):
    """Ошибка 112: Размеры рациональных чисел превысили бюджет битов."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(112, message, details)


class UnknownStage(LabError):
    """Ошибка 113: Этап конструкции не построен или вне расписания."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(113, message, details)


class UnrefinableStage(LabError):
    """Ошибка 120: Функция не может быть измельчена до указанного этапа."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(120, message, details)


class ShiftTooLarge(LabError):
    """Ошибка 121: Сдвиг по времени не меньше высоты башни."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(121, message, details)


class NotMeanZero(LabError):
    """Ошибка 130: В вероятностном режиме требуются функции с нулевым средним."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(130, message, details)


class NoStableCluster(LabError):
    """Ошибка 131: Дефекты не образуют устойчивого кластера."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(131, message, details)


class ArityMismatch(LabError):
    """Ошибка 140: Несогласованные размерности тензоров или матриц."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(140, message, details)


class DivergentTail(LabError):
    """Ошибка 141: Хвост экспоненциального ряда не укладывается в бюджет."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(141, message, details)


class IllConditioned(LabError):
    """Ошибка 150: Матрица Грама вырождена после отсечения ранга."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(150, message, details)


class IncompatibleFlows(LabError):
    """Ошибка 160: Потоки пары не имеют общей схемы измельчения."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(160, message, details)


class IoFailure(LabError):
    """Ошибка 170: Не удалось записать отчет."""
    def __init__(self, message: str, details: list | None = None):
        super().__init__(170, message, details)
