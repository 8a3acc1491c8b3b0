"""
Errors raised by the matrix toolkit and the exit codes the commands map them to.
"""

EXIT_OK = 0
EXIT_PARSE_ERROR = 2
EXIT_ORDER_LIMIT = 3
EXIT_SINGULAR = 4
EXIT_CHECK_FAILED = 5


class MatrixError(ValueError):
    """
    Base class for every domain error of the toolkit.
    """

    exit_code = 1


class SingularMatrixError(MatrixError):
    exit_code = EXIT_SINGULAR


class DimensionMismatchError(MatrixError):
    pass


class IndexOutOfRangeError(MatrixError):
    pass


class OrderLimitExceeded(MatrixError):
    """
    Raised when a matrix is too large for an exhaustive minor or permutation search.
    """

    exit_code = EXIT_ORDER_LIMIT

    def __init__(self, order, limit, what="minor enumeration"):
        self.order = order
        self.limit = limit
        super().__init__(
            f"order {order} exceeds the limit {limit} for {what}; "
            f"raise it with --max-order or ASSRKIT_MAX_ORDER"
        )


class PreconditionError(MatrixError):
    pass


class IndeterminateSignatureError(MatrixError):
    pass


class MatrixParseError(MatrixError):
    exit_code = EXIT_PARSE_ERROR
