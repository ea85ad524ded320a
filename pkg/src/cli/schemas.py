from typing import Optional, Self

from pydantic import BaseModel, Field, model_validator

from src.apps.automata.dto import Automaton, GeneralDFA, GeneralNFA, RankedDFA, RankedNFA, WidthProfile
from src.apps.automata.errors import MultipleFinalsError, NotRankedError
from src.apps.automata.utils import raw_targets
from src.apps.bitmaps.bits import Bitmap
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.enums import AutomatonKind, BoundKind, OperationName
from src.apps.operations.dto import OpOutcome
from src.apps.synthesis.dto import ComplexityReport

_KINDS = {
    RankedDFA: AutomatonKind.DFA,
    RankedNFA: AutomatonKind.NFA,
    GeneralDFA: AutomatonKind.GENERAL_DFA,
    GeneralNFA: AutomatonKind.GENERAL_NFA,
}


class LanguageFileSchema(BaseModel):
    k: int = Field(ge=1)
    ell: int = Field(ge=1)
    bitmap: str = Field(pattern=r'^[01]*$')

    @classmethod
    def from_dto(cls, lang: BlockLanguage) -> Self:
        return cls(k=lang.k, ell=lang.ell, bitmap=lang.bits.to_string())

    def to_dto(self) -> BlockLanguage:
        return BlockLanguage(alphabet=Alphabet(k=self.k), ell=self.ell, bits=Bitmap.from_string(self.bitmap))


class StateSchema(BaseModel):
    id: int = Field(ge=0)
    rank: Optional[int] = Field(default=None, ge=0)
    final: bool = False


class AutomatonFileSchema(BaseModel):
    k: int = Field(ge=1)
    ell: Optional[int] = Field(default=None, ge=1)
    kind: Optional[AutomatonKind] = None
    states: list[StateSchema] = Field(min_length=1)
    initial: int
    dead: Optional[int] = None
    transitions: list[tuple[int, int, int]] = Field(default_factory=list)

    @model_validator(mode='after')
    def _validate_references(self) -> Self:
        size = len(self.states)
        if sorted(state.id for state in self.states) != list(range(size)):
            raise ValueError(f'State ids must be 0..{size - 1}')
        if not 0 <= self.initial < size or (self.dead is not None and not 0 <= self.dead < size):
            raise ValueError('initial and dead must name existing states')
        for source, symbol, target in self.transitions:
            if not (0 <= source < size and 0 <= target < size and 0 <= symbol < self.k):
                raise ValueError(f'Transition {(source, symbol, target)} is out of range')
        return self

    @classmethod
    def from_dto(cls, automaton: Automaton) -> Self:
        ranked = isinstance(automaton, (RankedDFA, RankedNFA))
        finals = {automaton.final} if ranked else automaton.finals
        return cls(
            k=automaton.alphabet.k,
            ell=automaton.ell if ranked else None,
            kind=_KINDS[type(automaton)],
            states=[
                StateSchema(id=state, rank=automaton.ranks[state] if ranked else None, final=state in finals)
                for state in range(automaton.size)
            ],
            initial=automaton.initial,
            dead=automaton.dead if isinstance(automaton, RankedDFA) else None,
            transitions=[
                (state, symbol, target)
                for state in range(automaton.size)
                for symbol in range(automaton.alphabet.k)
                for target in raw_targets(automaton, state, symbol)
            ],
        )

    def to_dto(self) -> Automaton:
        alphabet = Alphabet(k=self.k)
        cells: list[list[set[int]]] = [[set() for _ in range(self.k)] for _ in self.states]
        for source, symbol, target in self.transitions:
            cells[source][symbol].add(target)
        finals = frozenset(state.id for state in self.states if state.final)
        kind = self.kind or self._inferred_kind(cells)

        match kind:
            case AutomatonKind.GENERAL_DFA:
                return GeneralDFA(
                    alphabet=alphabet,
                    initial=self.initial,
                    finals=finals,
                    delta=tuple(tuple(_only_target(cell, required=True) for cell in row) for row in cells),
                )
            case AutomatonKind.GENERAL_NFA:
                return GeneralNFA(
                    alphabet=alphabet,
                    initial=self.initial,
                    finals=finals,
                    delta=tuple(tuple(frozenset(cell) for cell in row) for row in cells),
                )

        if self.ell is None:
            raise NotRankedError('A ranked automaton file needs ell')
        if len(finals) != 1:
            raise MultipleFinalsError(f'A ranked automaton has exactly one final state, the file flags {len(finals)}')
        ranks = tuple(state.rank for state in sorted(self.states, key=lambda state: state.id))
        if kind == AutomatonKind.DFA:
            return RankedDFA(
                alphabet=alphabet,
                ell=self.ell,
                ranks=ranks,
                initial=self.initial,
                final=next(iter(finals)),
                dead=self.dead,
                delta=tuple(tuple(_only_target(cell) for cell in row) for row in cells),
            )
        if None in ranks:
            raise NotRankedError('Every state of a ranked NFA needs a rank')
        return RankedNFA(
            alphabet=alphabet,
            ell=self.ell,
            ranks=ranks,
            initial=self.initial,
            final=next(iter(finals)),
            delta=tuple(tuple(frozenset(cell) for cell in row) for row in cells),
        )

    def _inferred_kind(self, cells: list[list[set[int]]]) -> AutomatonKind:
        sizes = {len(cell) for row in cells for cell in row}
        if self.ell is None:
            return AutomatonKind.GENERAL_DFA if sizes == {1} else AutomatonKind.GENERAL_NFA
        return AutomatonKind.DFA if sizes <= {0, 1} else AutomatonKind.NFA


def _only_target(cell: set[int], required: bool = False) -> Optional[int]:
    if len(cell) > 1:
        raise ValueError(f'A deterministic automaton has one target per symbol, found {sorted(cell)}')
    if not cell:
        if required:
            raise ValueError('A general DFA must be complete')
        return None
    return next(iter(cell))


def _widths(profile: Optional[WidthProfile]) -> Optional[list[int]]:
    return None if profile is None else list(profile.widths)


class ComplexityReportSchema(BaseModel):
    dsc: int
    nsc: Optional[int]
    dsc_without_dead: int
    words: Optional[int]
    dfa_widths: Optional[list[int]]
    nfa_widths: Optional[list[int]]
    has_dead: Optional[bool]
    nsc_exact: bool
    formula_values: dict[str, int] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_dto(cls, dto: ComplexityReport) -> Self:
        return cls(
            dsc=dto.dsc,
            nsc=dto.nsc,
            dsc_without_dead=dto.dsc_without_dead,
            words=dto.words,
            dfa_widths=_widths(dto.dfa_widths),
            nfa_widths=_widths(dto.nfa_widths),
            has_dead=None if dto.dfa_widths is None else dto.dfa_widths.has_dead,
            nsc_exact=dto.nsc_exact,
            formula_values=dict(dto.formula_values),
            notes=list(dto.notes),
        )


class OpOutcomeSchema(BaseModel):
    op: OperationName
    operands: list[ComplexityReportSchema]
    result: ComplexityReportSchema
    formula: Optional[int]
    exact: bool
    kind: BoundKind
    route_agreement: bool
    formulas: dict[str, int] = Field(default_factory=dict)
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_dto(cls, dto: OpOutcome) -> Self:
        return cls(
            op=dto.op,
            operands=[ComplexityReportSchema.from_dto(report) for report in dto.operands],
            result=ComplexityReportSchema.from_dto(dto.result),
            formula=dto.formula,
            exact=dto.exact,
            kind=dto.kind,
            route_agreement=dto.route_agreement,
            formulas=dict(dto.formulas),
            notes=list(dto.notes),
        )
