import enum


class OperationName(enum.StrEnum):
    UNION = 'union'
    INTERSECT = 'intersect'
    CONCAT = 'concat'
    REVERSE = 'reverse'
    COMPLEMENT = 'complement'
    STAR = 'star'
    PLUS = 'plus'
    ADD_WORD = 'add-word'
    REMOVE_WORD = 'remove-word'

    @property
    def arity(self) -> int:
        if self in (OperationName.UNION, OperationName.INTERSECT, OperationName.CONCAT):
            return 2
        return 1

    @property
    def needs_word(self) -> bool:
        return self in (OperationName.ADD_WORD, OperationName.REMOVE_WORD)


class FamilyName(enum.StrEnum):
    E = 'E'
    PARITY = 'parity'
    KO = 'ko'
    FULL = 'full'
    SINGLETON = 'singleton'
    SUBALPHABET = 'subalphabet'
    WORDS = 'words'


class BoundKind(enum.StrEnum):
    EXACT = 'exact'
    UPPER = 'upper'
    WINDOW = 'window'
    LOWER = 'lower'
    REPORTED = 'reported'


class EmitKind(enum.StrEnum):
    DFA = 'dfa'
    NFA = 'nfa'
    LANG = 'lang'


class AutomatonKind(enum.StrEnum):
    DFA = 'dfa'
    NFA = 'nfa'
    GENERAL_DFA = 'general-dfa'
    GENERAL_NFA = 'general-nfa'


class ReportFormat(enum.StrEnum):
    JSON = 'json'
    MD = 'md'


class TableFormat(enum.StrEnum):
    CSV = 'csv'
    MD = 'md'


class BenchSuite(enum.StrEnum):
    TABLE2 = 'table2'
    REVERSAL_GROWTH = 'reversal-growth'
    MAXIMALITY = 'maximality'
    ALL = 'all'


class RowStatus(enum.StrEnum):
    OK = 'ok'
    VIOLATION = 'violation'
    BUDGET = 'budget'
    EMPTY = 'empty'
