class CoverBudgetExceededError(Exception):
    def __init__(self, message: str, greedy_cover=None):
        super().__init__(message)
        self.greedy_cover = greedy_cover


class ComplexityInvariantError(Exception):
    pass
