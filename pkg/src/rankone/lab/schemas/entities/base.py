from pydantic import BaseModel, ConfigDict


class LabModel(BaseModel):
    """Базовая неизменяемая схема лаборатории.

    Экземпляры хешируемы и безопасны для одновременного чтения из потоков.
    """
    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        arbitrary_types_allowed=True,
    )
