"""Тесты групп проверок: нормированные корреляции и тройки неравенства треугольника."""
from fractions import Fraction as Q

import pytest

from src.rankone.lab import LabConfig, Laboratory
from src.rankone.lab.reporter import parse_experiment
from src.rankone.lab.reporter.checks import (
    ExperimentContext,
    check_metric,
    check_middle,
    check_rigidity,
    check_special,
)
from src.rankone.lab.schemas.reporter.records import format_value


def _context(lab, config) -> ExperimentContext:
    f, g = config.probes.functions()
    return ExperimentContext(config=config, params=lab.build_params(config.flow), f=f, g=g)


def _pool(lab, config):
    """Набор потоков в порядке номеров записей metric.triangle."""
    params = lab.build_params(config.flow)
    partners = [params.model_copy(update={"spacer": rule}) for rule in config.metric.partners]
    extra = lab.sample_partners(params, config.metric.random_flows, lab.oracle_rng())
    return [params, *partners, *extra]


class TestNormalizedCorrelations:
    """Тесты полей normalized_lo и normalized_hi."""

    @pytest.fixture
    def context(self, lab, experiment_data):
        return _context(lab, parse_experiment(experiment_data))

    def _mu(self, lab, context, record) -> Q:
        eval_stage = Q(record.parameters.get("eval_stage") or record.derived["eval_stage"])
        return lab.tower_stages(context.params)[int(eval_stage) - 1].mu

    def test_rigidity(self, lab, context):
        """Тест: нормированный дефект равен дефекту, деленному на mu_J."""
        records = [r for r in check_rigidity(lab, context) if r.check_id == "rigidity.defect"]
        assert records
        for record in records:
            mu = self._mu(lab, context, record)
            assert record.derived["normalized_lo"] == format_value(Q(record.derived["defect_lo"]) / mu)
            assert record.derived["normalized_hi"] == format_value(Q(record.derived["defect_hi"]) / mu)

    def test_middle(self, lab, context):
        """Тест нормировки границ наибольшей корреляции на средних временах."""
        records = [r for r in check_middle(lab, context) if r.check_id == "middle.max"]
        assert len(records) == 2
        for record in records:
            mu = self._mu(lab, context, record)
            assert record.derived["normalized_lo"] == format_value(record.lo / mu)
            assert record.derived["normalized_hi"] == format_value(record.hi / mu)
            assert Q(record.derived["normalized_lo"]) <= Q(record.derived["normalized_hi"])

    def test_special(self, lab, context):
        """Тест нормировки оценки <P(T_beta) f, g>."""
        records = [r for r in check_special(lab, context) if r.check_id == "special.deviation"]
        assert records
        for record in records:
            mu = self._mu(lab, context, record)
            assert record.derived["normalized_lo"] == format_value(record.lo / mu)
            assert record.derived["normalized_hi"] == format_value(record.hi / mu)

    def test_first_stage_hand_value(self, lab, context):
        """Тест: на этапе измельчения 3 мера равна 7/3."""
        [record] = [
            r for r in check_rigidity(lab, context)
            if r.check_id == "rigidity.defect" and r.stage == 1
        ]
        assert record.parameters["eval_stage"] == "3/1"
        assert Q(record.derived["normalized_hi"]) == Q(record.derived["defect_hi"]) * Q(3, 7)

    def test_sigma_finite_has_no_normalization(self, lab, experiment_data):
        """Тест отсутствия нормировки для сигма-конечной меры."""
        experiment_data["flow"]["mode"] = "sigma_finite"
        context = _context(lab, parse_experiment(experiment_data))
        for record in check_rigidity(lab, context):
            assert "normalized_lo" not in record.derived
            assert "normalized_hi" not in record.derived


class TestTriangleTriples:
    """Тесты проверки неравенства треугольника на случайных тройках."""

    def test_twenty_triples(self, lab, experiment_data):
        """Тест: по умолчанию проверяются 20 троек, все выполнены."""
        config = parse_experiment(experiment_data)
        records = check_metric(lab, _context(lab, config))

        triangles = [r for r in records if r.check_id == "metric.triangle"]
        assert len(triangles) == 20
        assert [r.parameters["triple"] for r in triangles] == [format_value(i) for i in range(1, 21)]
        assert all(r.passed and r.value == "true" for r in triangles)
        for record in triangles:
            flows = [int(i) for i in record.parameters["flows"].split(",")]
            assert len(set(flows)) == 3
            assert all(0 <= i < 7 for i in flows)

        summary = records[-1]
        assert summary.check_id == "metric.triangle_summary"
        assert summary.value == "0/1"
        assert summary.passed
        assert summary.parameters["triples"] == "20/1"
        assert summary.parameters["flows"] == "7/1"

    def test_random_flows_are_reported(self, lab, experiment_data):
        """Тест записей metric.flow для случайных потоков набора."""
        config = parse_experiment(experiment_data)
        records = check_metric(lab, _context(lab, config))
        flows = [r for r in records if r.check_id == "metric.flow"]
        assert [r.parameters["flow"] for r in flows] == ["3/1", "4/1", "5/1", "6/1"]

        pool = _pool(lab, config)
        for record in flows:
            rule = pool[int(Q(record.parameters["flow"]))].spacer
            assert record.parameters["kind"] == rule.kind.value
            assert record.parameters["value"] == format_value(rule.value)
            assert record.parameters["offset_h"] == str(rule.offset_h).lower()

    def test_derived_fields_match_verdict(self, lab, experiment_data):
        """Тест: в записи те границы, по которым вынесен вердикт."""
        config = parse_experiment(experiment_data)
        records = check_metric(lab, _context(lab, config))
        record = next(r for r in records if r.check_id == "metric.triangle")
        a, b, c = (int(i) for i in record.parameters["flows"].split(","))

        pool = _pool(lab, config)
        basis = lab.default_metric_basis(pool[0], config.metric.basis_count)
        audit = lab.audit_triangle(pool[a], pool[b], pool[c], config.metric.grid_step, basis, 3)

        assert record.derived["ab_lo"] == format_value(audit.ab.lower)
        assert record.derived["bc_lo"] == format_value(audit.bc.lower)
        assert record.derived["ac_hi"] == format_value(audit.ac.upper)
        assert record.derived["ab_hi"] == format_value(audit.ab.upper)
        assert record.derived["bc_hi"] == format_value(audit.bc.upper)
        assert record.derived["ac_lo"] == format_value(audit.ac.lower)
        assert record.derived["slack"] == format_value(audit.slack)
        assert Q(record.derived["ac_hi"]) <= (
            Q(record.derived["ab_lo"]) + Q(record.derived["bc_lo"]) + Q(record.derived["slack"])
        )

    def test_same_seed_same_records(self, experiment_data):
        """Тест воспроизводимости троек при одинаковом oracle_seed."""
        config = parse_experiment(experiment_data)
        dumps = []
        for _ in range(2):
            with Laboratory(name="seeded", config=LabConfig(oracle_seed=7)) as laboratory:
                dumps.append([r.model_dump() for r in check_metric(laboratory, _context(laboratory, config))])
        assert dumps[0] == dumps[1]
        assert dumps[0][-1]["parameters"]["seed"] == "7/1"

    def test_triple_count_from_config(self, lab, experiment_data):
        """Тест числа троек из раздела [metric]."""
        experiment_data["metric"].update({"triangle_triples": 3, "random_flows": 1})
        records = check_metric(lab, _context(lab, parse_experiment(experiment_data)))
        assert sum(r.check_id == "metric.triangle" for r in records) == 3
        assert sum(r.check_id == "metric.flow" for r in records) == 1
        assert records[-1].parameters["flows"] == "4/1"

    def test_disabled(self, lab, experiment_data):
        """Тест отключения проверки треугольника."""
        experiment_data["metric"]["triangle_triples"] = 0
        records = check_metric(lab, _context(lab, parse_experiment(experiment_data)))
        assert not any(r.check_id.startswith("metric.triangle") for r in records)
        assert not any(r.check_id == "metric.flow" for r in records)
