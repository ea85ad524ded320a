from dataclasses import dataclass, field
from typing import Mapping, Optional

from src.apps.automata.dto import Automaton
from src.apps.bitmaps.dto import BlockLanguage
from src.apps.enums import BoundKind, OperationName
from src.apps.synthesis.dto import ComplexityReport


@dataclass(frozen=True)
class OpOutcome:
    """Measured result of one operation next to the bound it is checked against.

    `formula` is the headline dsc bound; `formulas` keeps every instantiated bound by name.
    """

    op: OperationName
    operands: tuple[ComplexityReport, ...]
    result: ComplexityReport
    formula: Optional[int]
    kind: BoundKind
    route_agreement: bool
    formulas: Mapping[str, int] = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    language: Optional[BlockLanguage] = None
    dfa: Optional[Automaton] = None
    nfa: Optional[Automaton] = None

    def __post_init__(self):
        self._validate_operands()

    def _validate_operands(self):
        if len(self.operands) != self.op.arity:
            raise ValueError(f'{self.op} takes {self.op.arity} operand(s), got {len(self.operands)}')

    @property
    def exact(self) -> bool:
        return self.kind == BoundKind.EXACT
