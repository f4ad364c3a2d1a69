from fractions import Fraction
from itertools import product
from math import prod

from ...common.enumerations import RigidityTime
from ...core import LabManager
from ...core.rationals import parse_rational
from ...schemas.flow_builder import FlowParams
from ...schemas.tensor_lab import ExpansionTerm, FactorExpansion, QjExpansion, QjSpec

WEIGHTS = {-1: Fraction(1, 4), 0: Fraction(1, 2), 1: Fraction(1, 4)}


class ExpandQjMixin(LabManager):
    """Реализует операцию expand_qj"""

    def expand_qj(
        self: "ExpandQjMixin",
        spec: QjSpec,
    ) -> QjExpansion:
        """Раскрывает каждый сомножитель Q_j в сумму 3^{n-1} сдвигов.

        Notes:
            • Сомножитель k: T_{alpha_k n_j} prod_{m<n} (T_{alpha_m n_j} + 2I + T_{-alpha_m n_j}) / 4.
            • delta перебираются лексикографически по {-1, 0, 1}^{n-1}, одинаковые
              сдвиги не объединяются; сумма весов каждого сомножителя равна 1.

        Example:
            expansion = lab.expand_qj(QjSpec(alphas=(1, 2, 3), n_j=5))
        """
        inner = spec.alphas[:-1]
        factors = []
        for k, alpha in enumerate(spec.alphas, start=1):
            terms = []
            for delta in product((-1, 0, 1), repeat=len(inner)):
                beta = alpha + sum((d * a for d, a in zip(delta, inner)), Fraction(0))
                terms.append(
                    ExpansionTerm(
                        delta=delta,
                        beta=beta,
                        shift=beta * spec.n_j,
                        coefficient=prod((WEIGHTS[d] for d in delta), start=Fraction(1)),
                    )
                )
            factors.append(FactorExpansion(k=k, alpha=alpha, terms=tuple(terms)))

        return QjExpansion(n_j=spec.n_j, alpha_sum=spec.alpha_sum, factors=tuple(factors))

    def qj_spec(
        self: "ExpandQjMixin",
        params: FlowParams,
        alphas: tuple,
        j: int,
        kind: RigidityTime = RigidityTime.RETURN,
    ) -> QjSpec:
        """QjSpec с n_j из лакунарного расписания для sum(alphas) на этапе j."""
        alphas = tuple(parse_rational(a) for a in alphas)
        n_j = self.lacunary_indices(sum(alphas, Fraction(0)), params, [j], kind).index(j)
        return QjSpec(alphas=alphas, n_j=n_j, j=j)
