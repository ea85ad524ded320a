import csv
import io
from functools import lru_cache
from typing import Optional, Sequence

from jinja2 import Environment, FileSystemLoader

from src.apps.automata.dto import Automaton, GeneralDFA, GeneralNFA, RankedDFA, WidthProfile
from src.apps.automata.utils import raw_targets
from src.apps.bench.dto import BenchRow
from src.apps.synthesis.dto import ComplexityReport
from src.core.config import TEMPLATES_DIR

DEAD_LABEL = 'Ω'
CSV_COLUMNS = (
    'op',
    'bound',
    'k',
    'family',
    'params',
    'ell',
    'quantity',
    'kind',
    'formula_low',
    'formula',
    'measured',
    'dsc',
    'nsc',
    'operand_sizes',
    'status',
    'notes',
)


@lru_cache
def get_environment() -> Environment:
    return Environment(loader=FileSystemLoader(TEMPLATES_DIR), trim_blocks=True, lstrip_blocks=True)


def _blank(value: Optional[int]) -> str:
    return '' if value is None else str(value)


def render_dot(automaton: Automaton, draw_dead: bool = False) -> str:
    """Graphviz source; ranked automata get one cluster per rank, from rank ell down to rank 0."""
    alphabet = automaton.alphabet
    dead = automaton.dead if isinstance(automaton, RankedDFA) else None
    if isinstance(automaton, (GeneralDFA, GeneralNFA)):
        finals = automaton.finals
    else:
        finals = frozenset((automaton.final,))

    def state(number: int) -> dict:
        label = DEAD_LABEL if number == dead else f'q{number}'
        return {'name': f'q{number}', 'label': label, 'final': number in finals}

    shown = [number for number in range(automaton.size) if number != dead or draw_dead]
    ranks, loose = [], []
    if isinstance(automaton, (GeneralDFA, GeneralNFA)):
        loose = [state(number) for number in shown]
    else:
        for rank in range(automaton.ell, -1, -1):
            members = [state(number) for number in shown if automaton.ranks[number] == rank]
            ranks.append({'rank': rank, 'states': members})
        loose = [state(number) for number in shown if automaton.ranks[number] is None]

    labels: dict[tuple[int, int], list[str]] = {}
    for source in shown:
        for symbol in range(alphabet.k):
            for target in raw_targets(automaton, source, symbol):
                if target == dead and not draw_dead:
                    continue
                labels.setdefault((source, target), []).append(alphabet.glyphs[symbol])
    edges = [
        {'source': f'q{source}', 'target': f'q{target}', 'label': ','.join(glyphs)}
        for (source, target), glyphs in labels.items()
    ]

    template = get_environment().get_template('automaton.dot.j2')
    return template.render(ranks=ranks, loose=loose, initial=f'q{automaton.initial}', edges=edges)


def _widths_text(profile: Optional[WidthProfile]) -> str:
    if profile is None:
        return '-'
    text = ','.join(str(width) for width in profile.widths)
    return f'{text} + Omega' if profile.has_dead else text


def render_report_md(report: ComplexityReport) -> str:
    template = get_environment().get_template('report.md.j2')
    return template.render(
        report=report,
        dfa_widths=_widths_text(report.dfa_widths),
        nfa_widths=_widths_text(report.nfa_widths),
    )


def render_table_md(rows: Sequence[BenchRow]) -> str:
    view = [
        {
            'op': row.op,
            'bound': row.bound,
            'k': row.k,
            'family': row.family,
            'params': row.params,
            'ell': row.ell,
            'quantity': row.quantity,
            'kind': row.kind,
            'formula_text': _formula_text(row),
            'measured_text': _blank(row.measured),
            'operand_sizes': row.operand_sizes,
            'status': row.status,
            'notes': '; '.join(row.notes),
        }
        for row in rows
    ]
    return get_environment().get_template('table.md.j2').render(rows=view)


def _formula_text(row: BenchRow) -> str:
    if row.formula_low is not None:
        return f'[{row.formula_low}, {row.formula}]'
    return _blank(row.formula)


def render_table_csv(rows: Sequence[BenchRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.op,
                row.bound,
                row.k,
                row.family,
                row.params,
                row.ell,
                row.quantity,
                row.kind,
                _blank(row.formula_low),
                _blank(row.formula),
                _blank(row.measured),
                _blank(row.dsc),
                _blank(row.nsc),
                row.operand_sizes,
                row.status,
                '; '.join(row.notes),
            ]
        )
    return buffer.getvalue()
