from fractions import Fraction

from ...core import ArityMismatch, LabManager
from ...schemas.correlator import CorrelationInterval
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import ElementaryTensor, QjSpec


class EvaluateQjMixin(LabManager):
    """Реализует операцию evaluate_qj"""

    def evaluate_qj(
        self: "EvaluateQjMixin",
        params: FlowParams,
        spec: QjSpec,
        F: ElementaryTensor,
        G: ElementaryTensor,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка <Q_j F, G>.

        Notes:
            Q_j - тензорное произведение операторов, поэтому матричный элемент
            равен произведению по k сумм sum_terms coef * <T_{shift + t_k - sigma_k} f_k, g_k>.

        Raises:
            ArityMismatch: Арность F или G отличается от числа alphas
            ShiftTooLarge: Сдвиг beta_k * n_j не помещается в колонну этапа J
        """
        if not (spec.arity == F.arity == G.arity):
            raise ArityMismatch(
                f"Арность Q_j {spec.arity}, F {F.arity}, G {G.arity}",
                [{"Q_j": spec.arity, "F": F.arity, "G": G.arity}],
            )

        expansion = self.expand_qj(spec)
        result = CorrelationInterval.exact(1)
        for factor, left, right in zip(expansion.factors, F.factors, G.factors):
            factor_sum = CorrelationInterval.exact(0)
            for term in factor.terms:
                enclosure = self.correlate(
                    params,
                    left.function,
                    right.function,
                    term.shift + left.shift - right.shift,
                    stage,
                )
                factor_sum = factor_sum + enclosure.scale(term.coefficient)
            result = result * factor_sum

        self.logger.debug(f"<Q_j F, G> на этапе {stage}: [{result.lo}, {result.hi}]")
        return result

    def predicted_limit_value(
        self: "EvaluateQjMixin",
        params: FlowParams,
        spec: QjSpec,
        F: ElementaryTensor,
        G: ElementaryTensor,
        u: Fraction,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка матричного элемента предсказанного предела при подстановке u."""
        prediction = self.predict_limit(spec)
        shifts = {"I": Fraction(0), "T_u": Fraction(u), "T_-u": -Fraction(u)}
        total = CorrelationInterval.exact(0)
        for term in prediction.terms:
            pattern = [shifts[symbol.value] for symbol in term.pattern]
            total = total + self.tensor_correlate(params, pattern, F, G, stage).scale(term.coefficient)
        return total
