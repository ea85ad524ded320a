from typing import Callable, Optional

from src.apps.automata.language import enumerate_language
from src.apps.automata.validators import validate
from src.apps.bench.dto import BenchPoint, BenchRow
from src.apps.bench.sampling import point_rng, random_language, random_member
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.bitmaps.operations import bit_and, bit_not_block, reversal_bitmap, toggle_word
from src.apps.bitmaps.words import from_words, index_to_word
from src.apps.enums import BoundKind, FamilyName, OperationName, RowStatus
from src.apps.operations.dto import OpOutcome
from src.apps.operations.errors import RouteDisagreementError
from src.apps.operations.services import OperationService
from src.apps.synthesis.builders import min_dfa_from_bitmap
from src.apps.synthesis.services import ComplexityService
from src.apps.witnesses import bounds
from src.apps.witnesses.families import simple_family, witness_E, witness_E_closed_form, witness_ko, witness_parity
from src.core.consts import RANDOM_PAIRS_PER_POINT, REVERSAL_GROWTH_MIN_ELL

ASYMPTOTIC_NOTE = 'finite-scale growth inequality stands in for the asymptotic bound'
BINARY = Alphabet(k=2)
MAX_RANDOM_ELL = 5
MAX_CONCAT_PART = 4


def judge(kind: BoundKind, measured: Optional[int], formula: Optional[int], low: Optional[int] = None) -> RowStatus:
    if measured is None or formula is None:
        return RowStatus.OK
    match kind:
        case BoundKind.EXACT:
            ok = measured == formula
        case BoundKind.UPPER:
            ok = measured <= formula
        case BoundKind.LOWER:
            ok = measured >= formula
        case BoundKind.WINDOW:
            ok = (low is None or low <= measured) and measured <= formula
        case _:
            ok = True
    return RowStatus.OK if ok else RowStatus.VIOLATION


class SuiteBuilder:
    """Turns suites into independent parameter points; every point builds its own services."""

    def __init__(self, lmax: int, seed: int, density: float, cover_budget: Optional[int] = None):
        self._lmax = lmax
        self._seed = seed
        self._density = density
        self._cover_budget = cover_budget

    def _operations(self, strict_nsc: bool) -> OperationService:
        return OperationService(ComplexityService(self._cover_budget), strict_nsc=strict_nsc)

    def _point(self, op: str, family: str, params: str, k: int, ell: int, run: Callable[..., list[BenchRow]]):
        def rows() -> list[BenchRow]:
            return run(
                lambda quantity, bound, kind, formula, measured, **extra: self._row(
                    op, family, params, k, ell, quantity, bound, kind, formula, measured, **extra
                )
            )

        return BenchPoint(op=op, family=family, params=params, k=k, ell=ell, run=rows)

    @staticmethod
    def _row(op, family, params, k, ell, quantity, bound, kind, formula, measured, **extra) -> BenchRow:
        notes = tuple(extra.pop('notes', ()))
        status = judge(kind, measured, formula, extra.get('formula_low'))
        return BenchRow(
            op=op,
            family=family,
            params=params,
            k=k,
            ell=ell,
            quantity=quantity,
            bound=bound,
            kind=kind,
            formula=formula,
            measured=measured,
            status=status,
            notes=notes,
            **extra,
        )

    @staticmethod
    def _sizes(outcome: OpOutcome) -> str:
        return ','.join(f'{report.dsc}/{report.nsc}' for report in outcome.operands)

    def _outcome_rows(
        self,
        row,
        outcome: OpOutcome,
        dsc_bound: str,
        dsc_kind: BoundKind,
        nsc_bound: str = '',
        nsc_kind: Optional[BoundKind] = None,
        dsc_formula: Optional[int] = None,
    ) -> list[BenchRow]:
        result = outcome.result
        common = dict(dsc=result.dsc, nsc=result.nsc, operand_sizes=self._sizes(outcome))
        formulas = outcome.formulas
        window = dsc_kind == BoundKind.WINDOW
        rows = [
            row(
                'dsc',
                dsc_bound,
                dsc_kind,
                dsc_formula if dsc_formula is not None else formulas.get('dsc_high', formulas.get('dsc')),
                result.dsc,
                formula_low=formulas.get('dsc_low') if window else None,
                notes=outcome.notes,
                **common,
            )
        ]
        if nsc_kind is not None and result.nsc is not None:
            nsc_window = 'nsc_high' in formulas
            rows.append(
                row(
                    'nsc',
                    nsc_bound,
                    nsc_kind,
                    formulas.get('nsc_high', formulas.get('nsc')),
                    result.nsc,
                    formula_low=formulas.get('nsc_low') if nsc_window and nsc_kind == BoundKind.WINDOW else None,
                    **common,
                )
            )
        return rows

    def table2(self) -> list[BenchPoint]:
        points = []
        for ell in range(2, self._lmax + 1):
            points.extend(self._witness_points(ell))
            if ell <= MAX_RANDOM_ELL:
                points.extend(self._random_points(ell))
        for d in range(2, self._lmax // 2 + 1):
            points.append(self._ko_point(2, d))
        if self._lmax >= 4:
            points.append(self._ko_point(3, 2))
        return points

    def _witness_points(self, ell: int) -> list[BenchPoint]:
        points = []
        strict = self._operations(strict_nsc=True)
        a_ell = 'a' * ell

        if ell % 2 == 0:
            d = ell // 2

            def intersect_parity(row):
                outcome = strict.run_op(OperationName.INTERSECT, [witness_parity(2, d, 0), witness_parity(2, d, 1)])
                return self._outcome_rows(
                    row, outcome, 'sum m_i n_i + 1', BoundKind.EXACT, 'sum m_i n_i', BoundKind.EXACT
                )

            points.append(self._point('intersect', 'parity', f'd={d}', 2, ell, intersect_parity))

        def union_subalphabet(row):
            lhs = simple_family(FamilyName.SUBALPHABET, 3, ell, letters='ac')
            rhs = simple_family(FamilyName.SUBALPHABET, 3, ell, letters='bc')
            outcome = self._operations(strict_nsc=False).run_op(OperationName.UNION, [lhs, rhs])
            rows = self._outcome_rows(
                row, outcome, 'sum (m_i n_i + m_i + n_i) + 3', BoundKind.EXACT, 'm + n - 2', BoundKind.UPPER
            )
            rows.append(row('dsc (3 ell)', '3 ell', BoundKind.EXACT, 3 * ell, outcome.result.dsc))
            return rows

        points.append(self._point('union', 'subalphabet', 'ac|bc', 3, ell, union_subalphabet))

        def union_singletons(row):
            lhs = simple_family(FamilyName.SINGLETON, 2, ell, word=a_ell)
            rhs = simple_family(FamilyName.SINGLETON, 2, ell, word='b' * ell)
            outcome = strict.run_op(OperationName.UNION, [lhs, rhs])
            return self._outcome_rows(
                row, outcome, 'sum (m_i n_i + m_i + n_i) + 3', BoundKind.UPPER, 'm + n - 2', BoundKind.EXACT
            )

        points.append(self._point('union', 'singleton', 'a|b', 2, ell, union_singletons))

        for head in range(1, min(ell, MAX_CONCAT_PART + 1)):
            tail = ell - head
            if tail > MAX_CONCAT_PART:
                continue

            def concat_singletons(row, head=head, tail=tail):
                lhs = simple_family(FamilyName.SINGLETON, 2, head, word='a' * head)
                rhs = simple_family(FamilyName.SINGLETON, 2, tail, word='a' * tail)
                outcome = strict.run_op(OperationName.CONCAT, [lhs, rhs])
                return self._outcome_rows(row, outcome, 'm + n - 2', BoundKind.EXACT, 'm + n - 1', BoundKind.EXACT)

            points.append(self._point('concat', 'singleton', f'l1={head},l2={tail}', 2, ell, concat_singletons))

        def remove_from_full(row):
            outcome = strict.run_op(OperationName.REMOVE_WORD, [BlockLanguage.full(BINARY, ell)], word=a_ell)
            return self._outcome_rows(
                row,
                outcome,
                'm + ell - 1 (tight)',
                BoundKind.EXACT,
                'm +- (ell - 1)',
                BoundKind.WINDOW,
            )

        points.append(self._point('remove-word', 'full', f'w={a_ell}', 2, ell, remove_from_full))

        def complement_singleton(row):
            outcome = strict.run_op(OperationName.COMPLEMENT, [simple_family(FamilyName.SINGLETON, 2, ell)])
            return self._outcome_rows(row, outcome, 'm + ell - 1 (tight)', BoundKind.EXACT)

        points.append(self._point('complement', 'singleton', f'w={a_ell}', 2, ell, complement_singleton))

        def reverse_singleton(row):
            operand = simple_family(FamilyName.SINGLETON, 2, ell)
            outcome = strict.run_op(OperationName.REVERSE, [operand])
            return self._outcome_rows(
                row, outcome, 'dsc(L), L = reverse(L)', BoundKind.EXACT, dsc_formula=outcome.operands[0].dsc
            )

        points.append(self._point('reverse', 'singleton', f'w={a_ell}', 2, ell, reverse_singleton))

        for op in (OperationName.STAR, OperationName.PLUS):
            dsc_text, nsc_text = ('n - 1', 'm - 1') if op == OperationName.STAR else ('n', 'm')
            for family in (FamilyName.SINGLETON, FamilyName.FULL):
                kind = BoundKind.EXACT if family == FamilyName.SINGLETON else BoundKind.UPPER

                def closure(row, op=op, family=family, kind=kind, dsc_text=dsc_text, nsc_text=nsc_text):
                    outcome = strict.run_op(op, [simple_family(family, 2, ell)])
                    return self._outcome_rows(row, outcome, dsc_text, kind, nsc_text, BoundKind.EXACT)

                points.append(self._point(str(op), str(family), f'ell={ell}', 2, ell, closure))

        return points

    def _random_points(self, ell: int) -> list[BenchPoint]:
        points = []
        for sample in range(RANDOM_PAIRS_PER_POINT):
            points.extend(self._random_sample(ell, sample))
        return points

    def _random_sample(self, ell: int, sample: int) -> list[BenchPoint]:
        points = []
        params = f'seed={self._seed},sample={sample}'
        lenient = self._operations(strict_nsc=False)

        def rng_for(*coordinates: int):
            return point_rng(self._seed, ell, sample, *coordinates)

        for op_index, op in enumerate((OperationName.INTERSECT, OperationName.UNION)):

            def boolean(row, op=op, op_index=op_index):
                rng = rng_for(op_index)
                lhs = random_language(BINARY, ell, rng, self._density)
                rhs = random_language(BINARY, ell, rng, self._density)
                if op == OperationName.INTERSECT and bit_and(lhs, rhs).is_empty:
                    shared = index_to_word(BINARY, ell, random_member(lhs, rng, present=True))
                    rhs = toggle_word(rhs, shared)
                if op == OperationName.INTERSECT:
                    bound, nsc_bound = 'sum m_i n_i + 1', 'sum m_i n_i'
                else:
                    bound, nsc_bound = 'sum (m_i n_i + m_i + n_i) + 3', 'm + n - 2'
                outcome = lenient.run_op(op, [lhs, rhs])
                return self._outcome_rows(row, outcome, bound, BoundKind.UPPER, nsc_bound, BoundKind.REPORTED)

            points.append(self._point(str(op), 'random', params, 2, ell, boolean))

        def toggle(row):
            rng = rng_for(2)
            lang = random_language(BINARY, ell, rng, self._density)
            removing = lang.word_count > 1 or lang.word_count == lang.size
            word = index_to_word(BINARY, ell, random_member(lang, rng, present=removing))
            op = OperationName.REMOVE_WORD if removing else OperationName.ADD_WORD
            outcome = lenient.run_op(op, [lang], word=word)
            return self._outcome_rows(
                row, outcome, 'm +- (ell - 1)', BoundKind.WINDOW, 'm +- (ell - 1)', BoundKind.REPORTED
            )

        points.append(self._point('toggle-word', 'random', params, 2, ell, toggle))

        def complement(row):
            lang = random_language(BINARY, ell, rng_for(3), self._density)
            if lang.word_count == lang.size:
                lang = from_words(BINARY, ell, [index_to_word(BINARY, ell, 0)])
            outcome = lenient.run_op(OperationName.COMPLEMENT, [lang])
            return self._outcome_rows(row, outcome, 'm +- (ell - 1)', BoundKind.WINDOW)

        points.append(self._point('complement', 'random', params, 2, ell, complement))

        strict = self._operations(strict_nsc=True)
        for head in range(max(1, ell - MAX_CONCAT_PART), min(ell, MAX_CONCAT_PART + 1)):

            def concat(row, head=head):
                rng = rng_for(4, head)
                lhs = random_language(BINARY, head, rng, self._density)
                rhs = random_language(BINARY, ell - head, rng, self._density)
                outcome = strict.run_op(OperationName.CONCAT, [lhs, rhs])
                return self._outcome_rows(row, outcome, 'm + n - 2', BoundKind.EXACT, 'm + n - 1', BoundKind.EXACT)

            points.append(self._point('concat', 'random', f'{params},l1={head}', 2, ell, concat))
        return points

    def _ko_point(self, k: int, d: int) -> BenchPoint:
        def ko(row):
            lang, nfa = witness_ko(k, d)
            states = bounds.ko_states(k, d)
            rows = [row('nfa-states', '(k - 1) d^2 + 2d', BoundKind.EXACT, states, nfa.size)]
            if enumerate_language(nfa) != lang:
                raise RouteDisagreementError(f'The prohibited-symbol NFA for k={k}, d={d} misses its language')
            complement = min_dfa_from_bitmap(bit_not_block(lang))
            width = validate(complement).width(d)
            rows.append(
                row(
                    'rank-d width',
                    'k^d',
                    BoundKind.EXACT,
                    k**d,
                    width,
                    dsc=complement.size,
                    notes=(ASYMPTOTIC_NOTE,),
                )
            )
            return rows

        return self._point('complement', 'ko', f'd={d}', k, 2 * d, ko)

    def reversal_growth(self) -> list[BenchPoint]:
        points = []
        operations = self._operations(strict_nsc=False)
        for ell in range(REVERSAL_GROWTH_MIN_ELL, max(self._lmax, REVERSAL_GROWTH_MIN_ELL) + 1):

            def growth(row, ell=ell):
                lang = witness_E(ell)
                forward = min_dfa_from_bitmap(lang)
                backward = min_dfa_from_bitmap(reversal_bitmap(lang))
                if backward != operations.reverse_via_automaton(lang):
                    raise RouteDisagreementError(f'Reversal routes disagree on E_{ell}')
                return [
                    row(
                        'dsc',
                        '2^(ell - r_kl)',
                        BoundKind.LOWER,
                        bounds.reversal_lower_bound(ell),
                        forward.size,
                        dsc=forward.size,
                        notes=(ASYMPTOTIC_NOTE,),
                    ),
                    row(
                        'dsc reversed',
                        '2^6 ell^2 + 2^3 (ell^2 + ell)',
                        BoundKind.UPPER,
                        bounds.reversal_growth_bound(ell),
                        backward.size,
                        dsc=backward.size,
                        notes=(ASYMPTOTIC_NOTE,),
                    ),
                    row(
                        'rank width reversed',
                        '2^(r_kl + 1)',
                        BoundKind.UPPER,
                        bounds.reversal_width_bound(ell),
                        validate(backward).max_width,
                    ),
                ]

            points.append(self._point('reverse', 'E', f'ell={ell}', 2, ell, growth))
        return points

    def maximality(self) -> list[BenchPoint]:
        points = []
        for ell in range(2, self._lmax + 1):

            def maximal(row, ell=ell):
                params = bounds.bound_params(2, ell)
                lang = witness_E(ell)
                notes = [f'r={params.r}', f'x={params.x}', f'r_kl={params.r_kl}']
                if lang != witness_E_closed_form(ell):
                    raise RouteDisagreementError(f'Predicate and closed form of E_{ell} differ')
                dfa = min_dfa_from_bitmap(lang)
                profile = validate(dfa)
                return [
                    row('dsc', 'max_dsc(2, ell)', BoundKind.EXACT, params.max_dsc, dfa.size, dsc=dfa.size, notes=notes),
                    row('rank-r_kl width', 't', BoundKind.EXACT, params.t, profile.width(params.r_kl), dsc=dfa.size),
                ]

            points.append(self._point('maximality', 'E', f'ell={ell}', 2, ell, maximal))
        return points
