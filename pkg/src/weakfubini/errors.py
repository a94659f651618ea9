"""Exception types raised across the package."""


class InvalidPermutation(ValueError):
    pass


class DuplicateValue(InvalidPermutation):
    pass


class IndexOutOfRange(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class NotComparable(ValueError):
    """Raised when an interval is requested for v, w with v not below w."""


class InvalidTuple(ValueError):
    pass


class NotUnitIntervalPF(ValueError):
    pass


class NotUnitFubini(ValueError):
    pass


class ConsecutiveIndices(ValueError):
    pass


class InvalidInterval(ValueError):
    pass


class CapExceeded(RuntimeError):
    """An enumeration was asked for a size above its configured cap."""

    def __init__(self, what, n, cap):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap
