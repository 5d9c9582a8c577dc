from dataclasses import dataclass, field
from typing import Any


@dataclass
class TaskContext:
    """One unit of work of a parallel sweep."""

    index: int = field()
    item: Any = field()
    result: Any = field(default=None)
    error: BaseException | None = field(default=None)
    cancelled: bool = field(default=False)
