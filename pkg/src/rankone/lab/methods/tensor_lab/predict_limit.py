from fractions import Fraction
from itertools import product
from math import prod

from ...common.enumerations import FactorSymbol
from ...core import LabManager
from ...schemas.tensor_lab import LimitPrediction, LimitTerm, QjSpec

SYMBOL_ORDER = (FactorSymbol.I, FactorSymbol.T_U, FactorSymbol.T_MINUS_U)


class PredictLimitMixin(LabManager):
    """Реализует операцию predict_limit"""

    def predict_limit(
        self: "PredictLimitMixin",
        spec: QjSpec,
        u_symbol: str = "u",
    ) -> LimitPrediction:
        """Символьный слабый предел Q_j перечислением слагаемых.

        Notes:
            • Слагаемое сомножителя выживает, только если beta_k = 0 (I) или
              beta_k = +-sum(alphas) (T_u, T_{-u}); остальные сдвиги лежат в
              средней зоне и слабо стремятся к нулю.
            • Все выжившие шаблоны сообщаются, коэффициенты b_n и c_n берутся из них.

        Example:
            prediction = lab.predict_limit(QjSpec(alphas=(1, 2), n_j=1))
            assert prediction.c_n == Fraction(1, 16)
        """
        expansion = self.expand_qj(spec)
        total = expansion.alpha_sum
        n = spec.arity

        surviving = []
        exclusions_hold = True
        for factor in expansion.factors:
            weights = {symbol: Fraction(0) for symbol in SYMBOL_ORDER}
            for term in factor.terms:
                if term.beta == 0:
                    weights[FactorSymbol.I] += term.coefficient
                elif term.beta == total:
                    weights[FactorSymbol.T_U] += term.coefficient
                elif term.beta == -total:
                    weights[FactorSymbol.T_MINUS_U] += term.coefficient
            if factor.k < n and (weights[FactorSymbol.T_U] or weights[FactorSymbol.T_MINUS_U]):
                exclusions_hold = False
            surviving.append([(s, weights[s]) for s in SYMBOL_ORDER if weights[s]])

        terms = []
        for choice in product(*surviving):
            coefficient = prod((weight for _, weight in choice), start=Fraction(1))
            terms.append(LimitTerm(coefficient=coefficient, pattern=tuple(s for s, _ in choice)))

        identity = (FactorSymbol.I,) * n
        lifted = (FactorSymbol.I,) * (n - 1) + (FactorSymbol.T_U,)
        by_pattern = {term.pattern: term.coefficient for term in terms}

        if not exclusions_hold:
            self.logger.warning(f"Для alphas={[str(a) for a in spec.alphas]} нарушены исключения k < n")

        return LimitPrediction(
            u_symbol=u_symbol,
            terms=tuple(terms),
            b_n=by_pattern.get(identity, Fraction(0)),
            c_n=by_pattern.get(lifted, Fraction(0)),
            exclusions_hold=exclusions_hold,
        )
