from dataclasses import dataclass, field
from typing import Mapping, Optional

from src.apps.automata.dto import RankedDFA, RankedNFA, WidthProfile
from src.apps.bitmaps.bits import Bitmap


@dataclass(frozen=True)
class Cover:
    rank: int
    targets: tuple[Bitmap, ...]
    members: tuple[Bitmap, ...]
    rho: tuple[tuple[int, ...], ...]
    exact: bool = True

    def __post_init__(self):
        self._validate_rho()

    def _validate_rho(self):
        if len(self.rho) != len(self.targets):
            raise ValueError('Every target needs a covering subset')
        for target, covering in zip(self.targets, self.rho):
            union = Bitmap.zeros(target.length)
            for position in covering:
                member = self.members[position]
                if not member.is_subset_of(target):
                    raise ValueError(f'Cover member {member} is not below {target}')
                union = union | member
            if union != target:
                raise ValueError(f'Cover members do not add up to {target}')

    def covering(self, target: Bitmap) -> tuple[Bitmap, ...]:
        return tuple(self.members[position] for position in self.rho[self.targets.index(target)])


@dataclass(frozen=True)
class ComplexityReport:
    dsc: int
    nsc: Optional[int]
    dfa_widths: Optional[WidthProfile]
    nfa_widths: Optional[WidthProfile]
    formula_values: Mapping[str, int] = field(default_factory=dict)
    words: Optional[int] = None
    nsc_exact: bool = True
    notes: tuple[str, ...] = ()

    @property
    def dsc_without_dead(self) -> int:
        if self.dfa_widths is None:
            return self.dsc
        return self.dsc - int(self.dfa_widths.has_dead)


@dataclass(frozen=True)
class SynthesizedNFA:
    nfa: RankedNFA
    covers: tuple[Cover, ...]
    exact: bool = True


@dataclass(frozen=True)
class LanguageAnalysis:
    report: ComplexityReport
    dfa: Optional[RankedDFA]
    nfa: Optional[RankedNFA]
