# (C) 2026 kdyck contributors
"""Exceptions raised by the kdyck package.

Every domain error derives from KDyckError and carries a readable ``cause``.
The CLI maps KDyckError to exit code 1.
"""


class KDyckError(Exception):
    def __init__(self, cause: str = "Unknown"):
        super().__init__(cause)
        self.cause = cause


class EmptyPathError(KDyckError):
    def __init__(self) -> None:
        super().__init__("A path needs at least one step.")


class PrefixNegativeError(KDyckError):
    def __init__(self, index: int):
        super().__init__(f"Path goes below the axis after step {index}.")
        self.index = index


class NonzeroTotalError(KDyckError):
    def __init__(self, total: int):
        super().__init__(f"Path ends at level {total} instead of 0.")
        self.total = total


class PathSyntaxError(KDyckError):
    def __init__(self, position: int, token: str):
        super().__init__(
            f'Unexpected token "{token}" at position {position}. '
            'Expected "S<d>" with d >= 1 or "W".'
        )
        self.position = position
        self.token = token


class InvalidCompositionError(KDyckError):
    """Raised for malformed composition literals or non-positive parts."""


class InvalidPartitionError(KDyckError):
    """Raised for malformed partition literals or non-positive parts."""


class BadRedRanksError(KDyckError):
    def __init__(self, index: int, cause: str = ""):
        super().__init__(cause or f"Red rank at position {index} is out of range.")
        self.index = index


class SizeGuardError(KDyckError):
    def __init__(self, size: int, cap: int, what: str = "n+|k|"):
        super().__init__(f"{what}={size} exceeds the configured cap {cap}.")
        self.size = size
        self.cap = cap


class NoActiveEntryError(KDyckError):
    def __init__(self, index: int):
        super().__init__(f"No active entry left for down step {index}.")
        self.index = index


class ReconstructionStuckError(KDyckError):
    def __init__(self, level: int):
        super().__init__(f"No unused step starts at level {level}.")
        self.level = level


class IndexOutOfRangeError(KDyckError):
    def __init__(self, index: int, length: int):
        super().__init__(f"Step index {index} is outside 1..{length}.")
        self.index = index
        self.length = length


class BounceStuckError(KDyckError):
    def __init__(self, position: tuple[int, int]):
        super().__init__(f"Bounce path cannot move from {position}.")
        self.position = position


class ZeroAreaError(KDyckError):
    def __init__(self) -> None:
        super().__init__("Path has area 0, there is no cell to remove.")


class NotTwoUpsError(KDyckError):
    def __init__(self, ups: int):
        super().__init__(f"Expected a path with two up steps, got {ups}.")
        self.ups = ups


class InvalidSweepImageError(KDyckError):
    """Raised when a sweep image fails path validation (a library bug)."""


class CoefficientOverflowError(KDyckError):
    def __init__(self, coefficient: int):
        super().__init__(f"Coefficient {coefficient} does not fit in 64 bits.")
        self.coefficient = coefficient
