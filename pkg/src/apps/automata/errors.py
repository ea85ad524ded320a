class NotRankedError(Exception):
    pass


class NotTrimError(Exception):
    pass


class MultipleFinalsError(Exception):
    pass
