"""
Лаборатория потоков ранга один: корреляции Купмана с гарантированными оценками.

Notes:
    - Точная рациональная геометрия башен разрезания и надстройки
    - Интервальные оценки матричных элементов <T_t f, g> с учетом вышедшей массы
    - Лакунарная жесткость, затухание на средних временах и специальные слабые пределы
    - Тензорные произведения, операторы Q_j и предсказание их слабых пределов
    - Матрицы Грама степеней произведения операторов и невязки циклических подпространств
    - Метрика на потоках с отождествлением точек по адресам ячеек
    - Отчеты JSON/CSV, воспроизводимые побайтно при любом числе потоков

Examples:
    from fractions import Fraction

    from rankone import Laboratory
    from rankone.lab.schemas import FlowSpec, StepFunction

    with Laboratory() as lab:
        params = lab.build_params(FlowSpec(n_schedule=[1, 2, 3]))
        f = StepFunction.indicator(1, 0, Fraction(1, 2))
        print(lab.correlate(params, f, f, Fraction(1, 4), 3))
"""
from .infrastructure import logging
from .infrastructure.logging import rankone_logger as logger
from .lab import LabConfig, Laboratory


__version__ = "0.3.0"

__all__ = ["Laboratory", "LabConfig", "logging", "logger"]
