from typing import Optional

from loguru import logger

from src.apps.automata.validators import validate
from src.apps.bitmaps.dto import BlockLanguage
from src.apps.bitmaps.errors import EmptyLanguageError
from src.apps.synthesis.builders import min_dfa_from_bitmap, synthesize_nfa
from src.apps.synthesis.dto import ComplexityReport, LanguageAnalysis
from src.apps.synthesis.errors import ComplexityInvariantError
from src.apps.witnesses.bounds import bound_params

PER_RANK_COVER_NOTE = 'nsc from per-rank minimal covers'
INEXACT_NSC_NOTE = 'nsc is an upper bound: cover budget exhausted'
EMPTY_LANGUAGE_NOTE = 'empty language: dsc counts Omega only'


class ComplexityService:
    def __init__(self, cover_budget: Optional[int] = None):
        self._cover_budget = cover_budget

    @property
    def cover_budget(self) -> Optional[int]:
        return self._cover_budget

    def measure(self, lang: BlockLanguage, with_nsc: bool = True, allow_empty: bool = False) -> ComplexityReport:
        return self.analyze(lang, with_nsc=with_nsc, allow_empty=allow_empty).report

    def analyze(self, lang: BlockLanguage, with_nsc: bool = True, allow_empty: bool = False) -> LanguageAnalysis:
        if lang.is_empty:
            if not allow_empty:
                raise EmptyLanguageError(f'The block language over k={lang.k}, ell={lang.ell} has no words')
            report = ComplexityReport(
                dsc=1,
                nsc=None,
                dfa_widths=None,
                nfa_widths=None,
                formula_values=self._formula_values(lang),
                words=0,
                notes=(EMPTY_LANGUAGE_NOTE,),
            )
            return LanguageAnalysis(report=report, dfa=None, nfa=None)

        dfa = min_dfa_from_bitmap(lang)
        dfa_widths = validate(dfa)
        notes = []
        nfa, nsc, nfa_widths, nsc_exact = None, None, None, True
        if with_nsc:
            synthesized = synthesize_nfa(lang, budget=self._cover_budget, allow_greedy=True)
            nfa = synthesized.nfa
            nfa_widths = validate(nfa)
            nsc, nsc_exact = nfa.size, synthesized.exact
            notes.append(PER_RANK_COVER_NOTE)
            if not nsc_exact:
                notes.append(INEXACT_NSC_NOTE)
            if nsc > dfa_widths.states - int(dfa_widths.has_dead):
                logger.error('nsc {} exceeds the live DFA states of {}', nsc, dfa_widths)
                raise ComplexityInvariantError(f'nsc {nsc} exceeds dsc {dfa.size} without Omega')

        report = ComplexityReport(
            dsc=dfa.size,
            nsc=nsc,
            dfa_widths=dfa_widths,
            nfa_widths=nfa_widths,
            formula_values=self._formula_values(lang),
            words=lang.word_count,
            nsc_exact=nsc_exact,
            notes=tuple(notes),
        )
        return LanguageAnalysis(report=report, dfa=dfa, nfa=nfa)

    @staticmethod
    def _formula_values(lang: BlockLanguage) -> dict[str, int]:
        if lang.k < 2:
            return {}
        params = bound_params(lang.k, lang.ell)
        return {'max_dsc': params.max_dsc, 'r': params.r, 'r_kl': params.r_kl, 't': params.t}
