from fractions import Fraction
from math import factorial

from ...core import DivergentTail, LabManager
from ...core.rationals import parse_rational, sqrt_upper
from ...schemas.correlator import CorrelationInterval, StepFunction
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import SymPowerSpec


def exp_tail_bound(x: Fraction, truncation: int) -> Fraction:
    """x^{N+1} / (N+1)! / (1 - x / (N+2)), верхняя граница sum_{n>N} x^n / n! при x < N + 2."""
    first = x ** (truncation + 1) / factorial(truncation + 1)
    return first / (1 - x / (truncation + 2))


class ExpCorrelateMixin(LabManager):
    """Реализует операцию exp_correlate"""

    def exp_correlate(
        self: "ExpCorrelateMixin",
        params: FlowParams,
        spec: SymPowerSpec,
        f: StepFunction,
        g: StepFunction,
        t: Fraction | int | str,
        stage: int,
    ) -> CorrelationInterval:
        """Оценка <exp(T_t) exp(f), exp(g)> для экспоненциальных векторов.

        Notes:
            • exp(f) = ⊕_n f^{⊙n} / sqrt(n!), поэтому слагаемое n равно
              sym_power_correlate(n, M_n) / n!, где все элементы M_n равны <T_t f, g>.
            • Слагаемое n = 0 равно 1.
            • Хвост sum_{n>N} x^n / n! с рациональным x >= ||f|| * ||g||
              добавляется как симметричный радиус.

        Raises:
            DivergentTail: x >= N + 2 или граница хвоста больше spec.tail_budget
        """
        t = parse_rational(t)
        truncation = spec.truncation
        x = sqrt_upper(self.norm_sq(params, f) * self.norm_sq(params, g))

        if x >= truncation + 2:
            raise DivergentTail(
                f"||f|| * ||g|| <= {x} не меньше N + 2 = {truncation + 2}",
                [{"x": str(x), "truncation": truncation}],
            )
        tail = exp_tail_bound(x, truncation)
        if tail > spec.tail_budget:
            raise DivergentTail(
                f"Хвост ряда {float(tail):.3e} превышает бюджет {spec.tail_budget}",
                [{"tail": str(tail), "budget": str(spec.tail_budget), "truncation": truncation}],
            )

        base = self.correlate(params, f, g, t, stage)
        if x:
            base = base.clamp(-x, x)

        total = CorrelationInterval.exact(1)
        for n in range(1, truncation + 1):
            term = self.sym_power_correlate(n, [[base] * n for _ in range(n)])
            total = total + term.scale(Fraction(1, factorial(n)))

        self.logger.debug(f"exp-корреляция t={t}, N={truncation}: хвост {tail}")
        return total + CorrelationInterval.around(0, tail)
