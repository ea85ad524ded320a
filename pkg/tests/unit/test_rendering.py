import pytest

from src.apps.automata.errors import MultipleFinalsError
from src.apps.bench.services import BenchService
from src.apps.bitmaps.dto import Alphabet, BlockLanguage
from src.apps.enums import BenchSuite, FamilyName
from src.apps.synthesis.builders import min_dfa_from_bitmap, min_nfa_from_bitmap
from src.apps.synthesis.services import ComplexityService
from src.apps.witnesses.families import simple_family
from src.cli.schemas import AutomatonFileSchema, ComplexityReportSchema, LanguageFileSchema
from src.infrastructure.rendering.renderer import (
    CSV_COLUMNS,
    DEAD_LABEL,
    render_dot,
    render_report_md,
    render_table_csv,
    render_table_md,
)


class TestDot:
    def test_ranks_are_clustered(self):
        text = render_dot(min_dfa_from_bitmap(simple_family(FamilyName.SINGLETON, 2, 3, word='aba')))
        for rank in range(4):
            assert f'subgraph cluster_rank{rank}' in text
        assert 'shape=doublecircle' in text
        assert 'start -> q' in text

    def test_dead_state_is_drawn_on_request(self):
        dfa = min_dfa_from_bitmap(simple_family(FamilyName.SINGLETON, 2, 3, word='aba'))
        assert DEAD_LABEL not in render_dot(dfa)
        assert DEAD_LABEL in render_dot(dfa, draw_dead=True)

    def test_parallel_edges_share_a_label(self):
        text = render_dot(min_dfa_from_bitmap(BlockLanguage.full(Alphabet(k=2), 2)))
        assert '[label="a,b"]' in text
        assert '[label="a"]' not in text


class TestSchemas:
    def test_language_file(self, example_language: BlockLanguage):
        schema = LanguageFileSchema.from_dto(example_language)
        assert schema.bitmap == '1011011100011110'
        assert LanguageFileSchema.model_validate_json(schema.model_dump_json()).to_dto() == example_language

    def test_ranked_automata_survive_a_file(self, e5: BlockLanguage):
        for automaton in (min_dfa_from_bitmap(e5), min_nfa_from_bitmap(e5)):
            schema = AutomatonFileSchema.from_dto(automaton)
            assert AutomatonFileSchema.model_validate_json(schema.model_dump_json()).to_dto() == automaton

    def test_ranked_automaton_has_one_final(self):
        schema = AutomatonFileSchema(
            k=2,
            ell=1,
            states=[{'id': 0, 'rank': 1}, {'id': 1, 'rank': 0, 'final': True}, {'id': 2, 'rank': 0, 'final': True}],
            initial=0,
            transitions=[(0, 0, 1), (0, 1, 2)],
        )
        with pytest.raises(MultipleFinalsError):
            schema.to_dto()

    def test_references_are_checked(self):
        with pytest.raises(ValueError):
            AutomatonFileSchema(k=2, ell=1, states=[{'id': 0, 'rank': 1}], initial=0, transitions=[(0, 0, 4)])

    def test_report_schema(self, example_language: BlockLanguage, complexity_service: ComplexityService):
        schema = ComplexityReportSchema.from_dto(complexity_service.measure(example_language))
        assert schema.dsc == 12
        assert schema.dfa_widths == [1, 2, 4, 3, 1]
        assert schema.words == 10


class TestMarkdownAndCsv:
    def test_report(self, e5: BlockLanguage, complexity_service: ComplexityService):
        text = render_report_md(complexity_service.measure(e5))
        assert '| dsc | 20 |' in text
        assert '| max_dsc | 20 |' in text
        assert '| DFA widths | 1,2,4,8,3,1 + Omega |' in text

    def test_table(self):
        rows = BenchService().run_suite_sync(BenchSuite.MAXIMALITY, 3)
        csv_text = render_table_csv(rows)
        assert csv_text.splitlines()[0] == ','.join(CSV_COLUMNS)
        assert len(csv_text.splitlines()) == len(rows) + 1

        md_text = render_table_md(rows)
        assert md_text.startswith('| Operation | Bound |')
        assert len(md_text.strip().splitlines()) == len(rows) + 2
