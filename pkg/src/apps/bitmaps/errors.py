class InvalidWordError(Exception):
    pass


class IndexOutOfRangeError(Exception):
    pass


class BitmapOverflowError(Exception):
    pass


class LengthMismatchError(Exception):
    pass


class ShuffleArityMismatchError(Exception):
    pass


class EmptyLanguageError(Exception):
    pass
