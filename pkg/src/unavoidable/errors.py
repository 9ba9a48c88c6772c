"""Exception hierarchy shared by every module."""

from __future__ import annotations


class UnavoidableError(Exception):
    """Base class for all errors raised by the library."""


class InvalidVertex(UnavoidableError, ValueError):
    pass


class SelfLoop(UnavoidableError, ValueError):
    pass


class DuplicatePair(UnavoidableError, ValueError):
    pass


class OverlappingSets(UnavoidableError, ValueError):
    pass


class SizeMismatch(UnavoidableError, ValueError):
    pass


class TooSmall(UnavoidableError, ValueError):
    pass


class TooLarge(UnavoidableError, ValueError):
    pass


class FormatError(UnavoidableError, ValueError):
    """Malformed UPC text or witness JSON; carries a 1-based location."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{loc}{message}")


class BudgetExhausted(UnavoidableError):
    """Raised by a search when its node budget runs out and on_exhaust=ERROR."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


class PreconditionFailed(UnavoidableError):
    """An operation's hypothesis does not hold for the given input.

    ``detail`` is a free-form dict naming the failed inequality and the
    quantities involved.
    """

    def __init__(self, message: str, **detail):
        self.detail = detail
        super().__init__(message)


class ResampleExhausted(UnavoidableError):
    def __init__(self, message: str, attempts: int, best: dict):
        self.attempts = attempts
        self.best = best
        super().__init__(message)


class RetriesExhausted(UnavoidableError):
    def __init__(self, message: str, stats: dict):
        self.stats = stats
        super().__init__(message)


class StageFailed(UnavoidableError):
    def __init__(self, stage: str, message: str = "", **detail):
        self.stage = stage
        self.detail = detail
        super().__init__(f"stage {stage!r} failed" + (f": {message}" if message else ""))


class DichotomyGap(UnavoidableError):
    """A dense pair with no induced biclique between its sides.

    Impossible once the sides are large compared with the threshold; at small
    sizes it is a genuine outcome and the exact counts are attached.
    """

    def __init__(self, red_pairs: int, size_a: int, size_b: int, threshold):
        self.red_pairs = red_pairs
        self.size_a = size_a
        self.size_b = size_b
        self.threshold = threshold
        super().__init__(
            f"dense pair ({red_pairs}/{size_a * size_b} > {threshold}) "
            "without an induced biclique"
        )


class InvalidWitness(UnavoidableError):
    pass


class MarginTooSmall(UnavoidableError):
    def __init__(self, blowup, message: str = "no local pattern inside blowup"):
        self.blowup = blowup
        super().__init__(message)


class RepairExhausted(UnavoidableError):
    def __init__(self, rounds: int, deficient: int):
        self.rounds = rounds
        self.deficient = deficient
        super().__init__(f"repair did not converge within {rounds} flips (vertex {deficient} deficient)")
