class UnknownSuiteError(Exception):
    pass
