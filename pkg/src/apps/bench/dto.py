from dataclasses import dataclass
from typing import Callable, Optional

from src.apps.enums import BoundKind, RowStatus


@dataclass(frozen=True)
class BenchRow:
    op: str
    family: str
    params: str
    k: int
    ell: int
    quantity: str
    bound: str
    kind: BoundKind
    formula: Optional[int]
    measured: Optional[int]
    formula_low: Optional[int] = None
    dsc: Optional[int] = None
    nsc: Optional[int] = None
    operand_sizes: str = ''
    status: RowStatus = RowStatus.OK
    notes: tuple[str, ...] = ()

    @property
    def sort_key(self) -> tuple:
        return self.op, self.k, self.ell, self.family, self.params, self.quantity


@dataclass(frozen=True)
class BenchPoint:
    op: str
    family: str
    params: str
    k: int
    ell: int
    run: Callable[[], list[BenchRow]]
