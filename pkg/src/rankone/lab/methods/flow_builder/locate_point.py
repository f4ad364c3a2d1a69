from fractions import Fraction
from typing import Optional

from ...core import LabManager, UnknownStage
from ...schemas.flow_builder import FlowParams, FlowPointResult, PointLocation


class PointTraversalMixin(LabManager):
    """Реализует точный обход точек колонн: спуск, подъем и перенос потоком"""

    def locate_point(
        self: "PointTraversalMixin",
        params: FlowParams,
        point: PointLocation,
        stage: int,
    ) -> Optional[PointLocation]:
        """Переводит точку колонны одного этапа в координаты колонны другого этапа.

        Notes:
            • Подъем всегда определен: горизонтальная координата выбирает копию.
            • Спуск возвращает None, если точка лежит в прокладке, добавленной
              после этапа `stage`.

        Raises:
            UnknownStage: Этап вне расписания или точка вне своей колонны
        """
        tower = self._tower(params)
        self._check_point(params, point)
        y, x, current = point.y, point.x, point.stage

        while current < stage:
            transition = tower.transition(current)
            width = tower.stage(current + 1).w
            copy = min(int(x // width), transition.r - 1)
            x -= copy * width
            y += transition.offsets[copy]
            current += 1

        while current > stage:
            transition = tower.transition(current - 1)
            kind, index, local = transition.locate(y)
            if kind == "spacer":
                return None
            x += (index - 1) * tower.stage(current).w
            y = local
            current -= 1

        return PointLocation(stage=current, y=y, x=x)

    def flow_point(
        self: "PointTraversalMixin",
        params: FlowParams,
        point: PointLocation,
        t: Fraction,
    ) -> FlowPointResult:
        """Образ точки под действием T_t.

        Notes:
            • Точка поднимается по этапам, пока y + t не окажется внутри колонны.
            • Для вырожденного периодического потока перенос - поворот по модулю h1.

        Returns:
            Образ в колонне наименьшего подходящего этапа или признак `escaped`.
        """
        tower = self._tower(params)
        self._check_point(params, point)
        t = Fraction(t)

        if params.is_periodic:
            period = params.h1
            y = (point.y + t) % period
            return FlowPointResult(point=PointLocation(stage=point.stage, y=y, x=point.x))

        current = point
        while True:
            height = tower.stage(current.stage).h
            if 0 <= current.y + t < height:
                return FlowPointResult(
                    point=PointLocation(stage=current.stage, y=current.y + t, x=current.x)
                )
            if current.stage >= params.last_stage:
                return FlowPointResult(point=None, escaped=True)
            current = self.locate_point(params, current, current.stage + 1)

    def _check_point(self, params: FlowParams, point: PointLocation) -> None:
        stage = self._tower(params).stage(point.stage)
        if not (0 <= point.y < stage.h and 0 <= point.x < stage.w):
            raise UnknownStage(
                f"Точка ({point.y}, {point.x}) вне колонны этапа {point.stage}",
                [{"stage": point.stage}],
            )
