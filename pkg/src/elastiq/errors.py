"""Exception types shared across the package."""


class ElastiqError(Exception):
    """Base class for all package errors."""


class ConfigError(ElastiqError):
    """Invalid scenario configuration; carries the offending field path."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class GridTooSmall(ElastiqError):
    pass


class LengthMismatch(ElastiqError):
    pass


class WrongOrder(ElastiqError):
    pass


class NonPositiveJacobian(ElastiqError):
    def __init__(self, node):
        super().__init__(f"Jacobian is not positive at node {node}")
        self.node = node


class NotOnInterface(ElastiqError):
    pass


class IndefiniteTensor(ElastiqError):
    def __init__(self, node):
        super().__init__(f"material tensor is not positive definite at node {node}")
        self.node = node


class NonPositiveScaling(ElastiqError):
    pass


class SingularInterfaceMatrix(ElastiqError):
    pass


class GhostRowMissing(ElastiqError):
    pass


class NonFiniteState(ElastiqError):
    def __init__(self, step):
        super().__init__(f"non-finite values detected at step {step}")
        self.step = step


class CapExceeded(ElastiqError):
    pass


class NoRootFound(ElastiqError):
    def __init__(self, interval, scan):
        super().__init__(f"no determinant root in {interval}")
        self.interval = interval
        self.scan = scan


class DegenerateNullspace(ElastiqError):
    pass
