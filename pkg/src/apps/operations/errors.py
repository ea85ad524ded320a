class NoChangeError(Exception):
    pass


class RouteDisagreementError(Exception):
    pass


class BoundViolationError(Exception):
    pass
