"""Описывает модели раздела циклических векторов."""
__all__ = [
    "ProductOperatorSpec",
    "GramMatrix",
    "ResidualReport",
]

from .gram import GramMatrix, ResidualReport
from .operators import ProductOperatorSpec
