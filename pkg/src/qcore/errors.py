class DimensionMismatchError(ValueError):
    """Raised when two states/operators live on Hilbert spaces of different dimension."""

    def __init__(self, expected: int, actual: int, what: str = "dimension") -> None:
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


def check_dims(expected: int, actual: int, what: str = "dimension") -> None:
    if expected != actual:
        raise DimensionMismatchError(expected, actual, what)
