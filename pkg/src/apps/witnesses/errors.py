class InvalidFamilyParamsError(Exception):
    pass
