"""Группы проверок подкоманд.

Каждая группа - функция `(lab, context) -> list[ReportRecord]`. Внутри группы
проверки выполняются последовательно, поэтому порядок записей определяется
только конфигурацией.
"""
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Iterable, Sequence

from pydantic import Field

from .config import ExperimentConfig
from ..common.enumerations import Subcommand, UMode
from ..core import ConfigurationError, NoStableCluster
from ..schemas.correlator import CorrelationInterval, StepFunction
from ..schemas.cyclic_probe import ProductOperatorSpec
from ..schemas.entities import LabModel
from ..schemas.flow_builder import FlowParams, SpacerRule
from ..schemas.limits import MiddleDecaySpec, SpecialLimitSpec
from ..schemas.metric import FlowPair, MetricBasis, MetricEstimate
from ..schemas.reporter import ReportRecord
from ..schemas.tensor_lab import ElementaryTensor, SymPowerSpec

if TYPE_CHECKING:
    from .. import Laboratory


class ExperimentContext(LabModel):
    """Общие входные данные групп проверок.

    Attributes:
        config: Конфигурация эксперимента
        params: Параметры потока
        f: Пробная функция f
        g: Пробная функция g
    """
    config: ExperimentConfig = Field(..., description="Конфигурация эксперимента.")
    params: FlowParams = Field(..., description="Параметры потока.")
    f: StepFunction = Field(..., description="Пробная функция f.")
    g: StepFunction = Field(..., description="Пробная функция g.")

    def clip(self, stages: Iterable[int]) -> list[int]:
        """Этапы j, для которых построен хотя бы этап j + 1.

        Raises:
            ConfigurationError: Ни один этап не помещается в расписание
        """
        clipped = [j for j in stages if j < self.params.last_stage]
        if not clipped:
            raise ConfigurationError(
                f"Ни один из этапов {list(stages)} не меньше последнего этапа {self.params.last_stage}",
                [{"last_stage": self.params.last_stage}],
            )
        return clipped

    def stage_or_last(self, stage: int | None) -> int:
        return self.params.last_stage if stage is None else min(stage, self.params.last_stage)


def strictly_decreasing(values: Sequence[Fraction]) -> bool:
    """Строгое убывание по последним трем значениям."""
    tail = list(values)[-3:]
    return all(b < a for a, b in zip(tail, tail[1:]))


def non_increasing(values: Sequence[Fraction]) -> bool:
    """Невозрастание по последним трем значениям."""
    tail = list(values)[-3:]
    return all(b <= a for a, b in zip(tail, tail[1:]))


def non_increasing_within(intervals: Sequence[CorrelationInterval]) -> bool:
    """Невозрастание модулей по последним трем интервалам с учетом их радиусов."""
    tail = list(intervals)[-3:]
    return all(
        abs(b.mid) <= abs(a.mid) + a.radius + b.radius
        for a, b in zip(tail, tail[1:])
    )


def _normalized(lab: "Laboratory", params: FlowParams, interval: CorrelationInterval, stage: int) -> dict:
    """Поля normalized_lo и normalized_hi для вероятностной меры, иначе пусто."""
    normalized = lab.normalize(params, interval, stage)
    if normalized is None:
        return {}
    return {"normalized_lo": normalized.lo, "normalized_hi": normalized.hi}


def _trend_record(check_id: str, stages: Sequence[int], values: Sequence, holds: bool, required: bool) -> ReportRecord:
    return ReportRecord(
        check_id=check_id,
        parameters={"stages": ",".join(str(j) for j in stages[-3:])},
        value=str(holds).lower(),
        derived={f"j{j}": value for j, value in zip(stages[-3:], list(values)[-3:])},
        passed=holds or not required,
    )


def check_build(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Таблица этапов и условие r_j > h_j^j."""
    params = context.params
    records = [
        ReportRecord(
            check_id="build.stage",
            stage=stage.j,
            value=stage.h,
            derived={"h": stage.h, "w": stage.w, "mu": stage.mu, "spacer_mass": stage.spacer_mass},
        )
        for stage in lab.tower_stages(params)
    ]
    records.extend(
        ReportRecord(
            check_id="build.admissibility",
            stage=row.j,
            parameters={"r": row.r},
            value=str(row.admissible).lower(),
            derived={"h": row.h, "bound": row.bound},
            passed=row.admissible or not params.strict_admissibility,
        )
        for row in lab.admissibility_table(params)
    )
    return records


def check_rigidity(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Дефекты жесткости, их тренд, лакунарные расписания и оценки u."""
    section, thresholds = context.config.limits, context.config.thresholds
    stages = context.clip(section.stages)

    rows = lab.check_rigidity(context.params, context.f, stages, section.kind)
    records = [
        ReportRecord.interval(
            "rigidity.defect",
            row.ratio,
            stage=row.j,
            parameters={"t": row.t, "eval_stage": row.eval_stage, "kind": section.kind.value},
            derived={
                "defect_lo": row.defect.lo,
                "defect_hi": row.defect.hi,
                **_normalized(lab, context.params, row.defect, row.eval_stage),
            },
            passed=row.ratio.hi <= thresholds.rigidity_ratio_max,
        )
        for row in rows
    ]
    ratios = [row.ratio.mid for row in rows]
    records.append(
        _trend_record("rigidity.trend", stages, ratios, strictly_decreasing(ratios), thresholds.require_trends)
    )

    for alpha in section.alpha_list:
        schedule = lab.lacunary_indices(alpha, context.params, stages, section.kind)
        records.extend(
            ReportRecord(
                check_id="rigidity.lacunary",
                stage=entry.j,
                parameters={"alpha": alpha},
                value=entry.n,
                derived={"rigidity_time": entry.rigidity_time, "defect": entry.defect},
                passed=abs(entry.defect) <= alpha / 2 or entry.n == 1,
            )
            for entry in schedule.entries
        )
        try:
            estimate = lab.estimate_u(
                schedule, context.params, context.f, context.g, section.cluster_tol
            )
        except NoStableCluster as error:
            records.append(
                ReportRecord(
                    check_id="rigidity.u_estimate",
                    parameters={"alpha": alpha},
                    derived={"reason": error.message},
                    passed=False,
                )
            )
            continue
        records.append(
            ReportRecord(
                check_id="rigidity.u_estimate",
                parameters={"alpha": alpha},
                value=estimate.u_hat,
                derived={
                    "tolerance": estimate.cluster_tolerance,
                    "members": ",".join(str(j) for j in estimate.members),
                },
            )
        )
        records.extend(
            ReportRecord.interval(
                "rigidity.u_evidence",
                row.deviation,
                stage=row.j,
                parameters={"alpha": alpha, "n": row.n},
                derived={"defect": row.defect},
            )
            for row in estimate.evidence
        )
    return records


def check_middle(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Затухание корреляций на средних временах."""
    section, thresholds = context.config.limits, context.config.thresholds
    stages = context.clip(section.stages)
    spec = MiddleDecaySpec(
        epsilon=section.epsilon,
        samples_per_stage=section.samples_per_stage,
        stages=tuple(stages),
        kind=section.kind,
    )
    rows = lab.check_middle_decay(context.params, context.f, context.g, spec)
    records = [
        ReportRecord(
            check_id="middle.max",
            stage=row.j,
            parameters={"epsilon": section.epsilon, "samples": section.samples_per_stage},
            lo=row.max_mignitude,
            hi=row.max_magnitude,
            value=row.max_magnitude,
            derived={
                "argmax": row.argmax,
                "rigidity_time": row.rigidity_time,
                "eval_stage": row.eval_stage,
                **_normalized(
                    lab, context.params, CorrelationInterval.bounds(row.max_mignitude, row.max_magnitude), row.eval_stage
                ),
            },
            passed=thresholds.middle_max is None or row.max_magnitude <= thresholds.middle_max,
        )
        for row in rows
    ]
    maxima = [row.max_magnitude for row in rows]
    records.append(
        _trend_record("middle.trend", stages, maxima, strictly_decreasing(maxima), thresholds.require_trends)
    )
    return records


def check_special(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Отклонения от P(T_beta) на общем расписании и перебор индексов."""
    section, thresholds = context.config.limits, context.config.thresholds
    stages = context.clip(section.stages)
    spec = SpecialLimitSpec(
        beta=section.beta,
        alphas=section.alpha_list,
        stages=tuple(stages),
        f=context.f,
        g=context.g,
        kind=section.kind,
    )
    rows = lab.check_special_limit(spec, context.params)
    records = [
        ReportRecord.interval(
            "special.deviation",
            row.target,
            stage=row.j,
            parameters={"beta": section.beta, "n": row.n, "eval_stage": row.eval_stage},
            value=row.max_deviation,
            derived={
                **{f"alpha={alpha}": deviation.magnitude for alpha, deviation in zip(section.alpha_list, row.deviations)},
                **_normalized(lab, context.params, row.target, row.eval_stage),
            },
            passed=thresholds.special_max is None or row.max_deviation <= thresholds.special_max,
        )
        for row in rows
    ]
    deviations = [row.max_deviation for row in rows]
    records.append(
        _trend_record("special.trend", stages, deviations, non_increasing(deviations), thresholds.require_trends)
    )

    search = lab.search_special_schedule(spec, context.params, stages[-1], section.grid_radius)
    records.append(
        ReportRecord(
            check_id="special.search",
            stage=search.j,
            parameters={"radius": section.grid_radius},
            value=search.best,
            derived={"center": search.center, **{f"n={n}": bound for n, bound in search.table}},
        )
    )
    return records


def check_theorem(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Разложение, предел и оценки <Q_j F, G> для тензорных произведений."""
    section, thresholds = context.config.tensor, context.config.thresholds
    kind = context.config.limits.kind
    alphas = section.resolved_alphas
    stages = context.clip(section.stages)
    params, f, g = context.params, context.f, context.g

    first = lab.qj_spec(params, alphas, stages[0], kind)
    expansion = lab.expand_qj(first)
    sums = [sum((term.coefficient for term in factor.terms), Fraction(0)) for factor in expansion.factors]
    records = [
        ReportRecord(
            check_id="theorem.expand",
            stage=first.j,
            parameters={"n": first.arity, "n_j": first.n_j},
            value=sum(len(factor.terms) for factor in expansion.factors),
            derived={f"factor{factor.k}.terms": len(factor.terms) for factor in expansion.factors},
            passed=all(total == 1 for total in sums),
        )
    ]

    prediction = lab.predict_limit(first)
    records.append(
        ReportRecord(
            check_id="theorem.predict",
            parameters={"alphas": ",".join(str(a) for a in alphas)},
            value=prediction.c_n,
            derived={"b_n": prediction.b_n, "terms": len(prediction.terms)},
            passed=prediction.exclusions_hold,
        )
    )
    relations = lab.detect_relations(alphas)
    records.append(
        ReportRecord(
            check_id="theorem.relations",
            parameters={"alphas": ",".join(str(a) for a in alphas)},
            value=len(relations),
            derived={f"d{i}": ",".join(str(d) for d in relation.d) for i, relation in enumerate(relations, start=1)},
            passed=bool(relations) == (prediction.b_n > 0),
        )
    )

    if section.u_mode == UMode.FIXED:
        u = section.u_fixed
    else:
        schedule = lab.lacunary_indices(first.alpha_sum, params, stages, kind)
        try:
            u = lab.estimate_u(schedule, params, f, g, context.config.limits.cluster_tol).u_hat
        except NoStableCluster as error:
            records.append(
                ReportRecord(check_id="theorem.u_estimate", derived={"reason": error.message}, passed=False)
            )
            return records
    records.append(
        ReportRecord(check_id="theorem.u_estimate", parameters={"mode": section.u_mode.value}, value=u)
    )

    F = ElementaryTensor.power(f, len(alphas))
    G = ElementaryTensor.power(g, len(alphas))
    deviations = []
    for j in stages:
        spec = lab.qj_spec(params, alphas, j, kind)
        stage = lab.evaluation_stage(params, j)
        value = lab.evaluate_qj(params, spec, F, G, stage)
        limit = lab.predicted_limit_value(params, spec, F, G, u, stage)
        deviation = value - limit
        deviations.append(deviation)
        records.append(
            ReportRecord.interval(
                "theorem.evaluate",
                deviation,
                stage=j,
                parameters={"n_j": spec.n_j, "eval_stage": stage},
                derived={"qj_lo": value.lo, "qj_hi": value.hi, "limit_lo": limit.lo, "limit_hi": limit.hi},
            )
        )
    records.append(
        _trend_record(
            "theorem.trend",
            stages,
            [abs(d.mid) for d in deviations],
            non_increasing_within(deviations),
            thresholds.require_trends,
        )
    )
    return records


def check_cyclic(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Невязки циклических подпространств, неотрицательность Грама и численный ранг."""
    section, thresholds = context.config.cyclic, context.config.thresholds
    alphas = context.config.tensor.resolved_alphas
    spec = ProductOperatorSpec(alphas=alphas, stage=context.stage_or_last(section.stage))
    F = ElementaryTensor.power(context.f, spec.arity)

    targets = [("target", i, ElementaryTensor.power(context.f, len(shifts), shifts)) for i, shifts in enumerate(section.targets, start=1)]
    targets.append(("in_span", 0, ElementaryTensor.power(context.f, spec.arity, spec.shifts(1))))

    records = []
    for label, index, target in targets:
        reports = [
            lab.cyclic_residual(context.params, spec, F, target, K)
            for K in section.K_list
            if label == "target" or K >= 1
        ]
        for report in reports:
            records.append(
                ReportRecord(
                    check_id=f"cyclic.{'residual' if label == 'target' else 'in_span'}",
                    stage=spec.stage,
                    parameters={"target": index, "K": report.K},
                    value=report.residual_sq,
                    derived={
                        "relative": report.relative,
                        "slack": report.slack,
                        "rank": report.rank,
                        "cut": report.cut,
                    },
                    passed=(
                        label == "target"
                        or report.residual_sq <= thresholds.in_span_tolerance * float(report.target_norm_sq.mid) + report.slack
                    ),
                )
            )
        if label == "target":
            monotone = all(
                b.residual_sq <= a.residual_sq + thresholds.residual_tolerance * float(a.target_norm_sq.mid) + a.slack + b.slack
                for a, b in zip(reports, reports[1:])
            )
            records.append(
                ReportRecord(
                    check_id="cyclic.monotone",
                    stage=spec.stage,
                    parameters={"target": index, "K": ",".join(str(K) for K in section.K_list)},
                    value=str(monotone).lower(),
                    passed=monotone,
                )
            )

    gram = lab.krylov_gram(context.params, spec, F, section.K_list[-1])
    records.append(
        ReportRecord(
            check_id="cyclic.psd",
            stage=spec.stage,
            parameters={"K": gram.K, "tol_psd": section.tol_psd},
            value=gram.psd_slack,
            passed=lab.check_gram_psd(gram, section.tol_psd),
        )
    )
    records.append(
        ReportRecord(
            check_id="cyclic.dimension",
            stage=spec.stage,
            parameters={"K": gram.K, "tol_rank": section.tol_rank},
            value=lab.cyclic_dimension_estimate(gram, section.tol_rank),
            derived={"size": gram.size},
        )
    )
    return records


def check_exp(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Корреляции экспоненты, вложенность усечений и профиль симметрических произведений."""
    section = context.config.sym
    stage = context.stage_or_last(section.stage)
    outer_spec = SymPowerSpec(truncation=section.truncation_N, tail_budget=section.tail_budget)
    inner_spec = outer_spec.model_copy(update={"truncation": section.truncation_N + 2})

    records = []
    for t in section.times:
        outer = lab.exp_correlate(context.params, outer_spec, context.f, context.g, t, stage)
        inner = lab.exp_correlate(context.params, inner_spec, context.f, context.g, t, stage)
        records.append(
            ReportRecord.interval(
                "exp.correlate",
                outer,
                stage=stage,
                parameters={"t": t, "N": outer_spec.truncation},
            )
        )
        records.append(
            ReportRecord.interval(
                "exp.nesting",
                inner,
                stage=stage,
                parameters={"t": t, "N": inner_spec.truncation},
                passed=outer.contains_interval(inner),
            )
        )

    profile_spec = SymPowerSpec(multi_index=section.multi_index)
    rows = lab.sym_product_profile(
        context.params,
        profile_spec,
        context.config.tensor.resolved_alphas,
        context.f,
        section.powers,
        stage,
    )
    records.extend(
        ReportRecord.interval(
            "exp.sym_profile",
            row.enclosure,
            stage=stage,
            parameters={"power": row.power, "multi_index": ",".join(str(m) for m in section.multi_index)},
        )
        for row in rows
    )
    return records


def check_metric(lab: "Laboratory", context: ExperimentContext) -> list[ReportRecord]:
    """Расстояния до потоков-партнеров, симметрия, rho(0) и неравенство треугольника."""
    section = context.config.metric
    params = context.params
    stage = context.stage_or_last(section.stage)
    basis = lab.default_metric_basis(params, section.basis_count)
    partners = [params.model_copy(update={"spacer": rule}) for rule in section.partners]

    records = []
    for index, (rule, partner) in enumerate(zip(section.partners, partners), start=1):
        pair = FlowPair(first=params, second=partner)
        forward = lab.metric_d(pair, section.grid_step, basis, stage)
        backward = lab.metric_d(pair.swapped(), section.grid_step, basis, stage)
        origin = lab.rho(pair, 0, basis, stage)
        parameters = {"partner": index, **_rule_parameters(rule)}
        records.append(
            ReportRecord(
                check_id="metric.d",
                stage=stage,
                parameters=parameters,
                lo=forward.lower,
                hi=forward.upper,
                value=forward.estimate,
                derived={"argmax": forward.argmax, "lipschitz": forward.lipschitz, "tail": basis.tail_bound},
            )
        )
        records.append(
            ReportRecord(
                check_id="metric.symmetry",
                stage=stage,
                parameters=parameters,
                value=backward.estimate,
                passed=(forward.lower, forward.estimate, forward.upper) == (backward.lower, backward.estimate, backward.upper),
            )
        )
        records.append(
            ReportRecord.interval(
                "metric.rho_zero",
                origin,
                stage=stage,
                parameters=parameters,
                passed=origin.lo == origin.hi == 0,
            )
        )

    records.extend(_triangle_records(lab, context, partners, basis, stage))
    return records


def _rule_parameters(rule: SpacerRule) -> dict:
    return {"kind": rule.kind.value, "value": rule.value, "offset_h": str(rule.offset_h).lower()}


def _triangle_records(
        lab: "Laboratory",
        context: ExperimentContext,
        partners: Sequence[FlowParams],
        basis: MetricBasis,
        stage: int,
) -> list[ReportRecord]:
    """Неравенство треугольника на случайных тройках потоков.

    Набор потоков: исследуемый поток (номер 0), партнеры из конфигурации и
    random_flows случайных потоков. Генератор с зерном oracle_seed выбирает
    сначала случайные потоки, затем тройки, поэтому записи воспроизводимы.
    """
    section = context.config.metric
    rng = lab.oracle_rng()
    extra = lab.sample_partners(context.params, section.random_flows, rng)
    pool = [context.params, *partners, *extra]
    if section.triangle_triples == 0 or len(pool) < 3:
        return []

    first_random = 1 + len(partners)
    records = [
        ReportRecord(
            check_id="metric.flow",
            stage=stage,
            parameters={"flow": index, **_rule_parameters(flow.spacer)},
        )
        for index, flow in enumerate(extra, start=first_random)
    ]

    estimates: dict[tuple[int, int], MetricEstimate] = {}

    def estimate(i: int, k: int) -> MetricEstimate:
        if (i, k) not in estimates:
            estimates[i, k] = lab.metric_d(
                FlowPair(first=pool[i], second=pool[k]), section.grid_step, basis, stage
            )
        return estimates[i, k]

    failures = 0
    for number, (a, b, c) in enumerate(lab.sample_triples(len(pool), section.triangle_triples, rng), start=1):
        audit = lab.triangle_verdict(estimate(a, b), estimate(b, c), estimate(a, c))
        failures += not audit.holds
        records.append(
            ReportRecord(
                check_id="metric.triangle",
                stage=stage,
                parameters={"triple": number, "flows": f"{a},{b},{c}"},
                value=str(audit.holds).lower(),
                derived={
                    "ab_lo": audit.ab.lower,
                    "ab_hi": audit.ab.upper,
                    "bc_lo": audit.bc.lower,
                    "bc_hi": audit.bc.upper,
                    "ac_lo": audit.ac.lower,
                    "ac_hi": audit.ac.upper,
                    "slack": audit.slack,
                },
                passed=audit.holds,
            )
        )
    records.append(
        ReportRecord(
            check_id="metric.triangle_summary",
            stage=stage,
            parameters={"triples": section.triangle_triples, "flows": len(pool), "seed": lab.config.oracle_seed},
            value=failures,
            passed=failures == 0,
        )
    )
    return records


CheckGroup = Callable[["Laboratory", ExperimentContext], list[ReportRecord]]

CHECK_GROUPS: dict[str, CheckGroup] = {
    "build": check_build,
    "rigidity": check_rigidity,
    "middle": check_middle,
    "special": check_special,
    "theorem": check_theorem,
    "cyclic": check_cyclic,
    "exp": check_exp,
    "metric": check_metric,
}

SUBCOMMAND_GROUPS: dict[Subcommand, tuple[str, ...]] = {
    Subcommand.BUILD: ("build",),
    Subcommand.RIGIDITY: ("rigidity",),
    Subcommand.MIDDLE: ("middle",),
    Subcommand.SPECIAL: ("special",),
    Subcommand.THEOREM: ("theorem", "cyclic"),
    Subcommand.EXP: ("exp",),
    Subcommand.METRIC: ("metric",),
    Subcommand.ALL: tuple(CHECK_GROUPS),
}
