"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SqColorError(Exception):
    """Base class for all errors raised by sqcolor."""


# graph construction
class GraphError(SqColorError, ValueError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EmptySet(GraphError):
    pass


class KMaxTooLarge(GraphError):
    pass


class TooLarge(SqColorError, ValueError):
    """An input exceeds a desk-scale guardrail."""


# embeddings
class EmbeddingError(SqColorError, ValueError):
    pass


class InvalidRotation(EmbeddingError):
    pass


class NotConnected(EmbeddingError):
    pass


class NotPlanarEmbedding(EmbeddingError):
    pass


class DegreeCapExceeded(EmbeddingError):
    pass


# coloring
class ColoringError(SqColorError):
    pass


class OrderMismatch(ColoringError, ValueError):
    pass


class GreedyStuck(ColoringError):
    """Greedy extension found no free color at ``vertex``."""

    def __init__(self, vertex: int, partial: dict[int, int]):
        super().__init__(f"greedy extension stuck at vertex {vertex}")
        self.vertex = vertex
        self.partial = partial


class SearchBudgetExceeded(SqColorError):
    def __init__(self, message: str, stats):
        super().__init__(message)
        self.stats = stats


# configurations
class InvalidConfiguration(SqColorError, ValueError):
    pass


class ScriptMissing(SqColorError):
    pass


class PreconditionError(SqColorError, ValueError):
    pass


class StrategyFailure(SqColorError):
    """A strategy step found an empty choice set."""

    def __init__(self, step: str, detail: str, partial: dict[int, int]):
        super().__init__(f"{step}: {detail}")
        self.step = step
        self.detail = detail
        self.partial = partial


# discharging
class EulerMismatch(SqColorError):
    pass


class HypothesisViolated(SqColorError, ValueError):
    def __init__(self, which: str, detail: str = ""):
        super().__init__(f"{which}: {detail}" if detail else which)
        self.which = which


class OutOfRange(SqColorError, ValueError):
    pass


class TheoremContradiction(SqColorError):
    """An audit found every predicate satisfied and every charge nonnegative."""

    def __init__(self, report):
        super().__init__("audit passed every check; this contradicts the discharging argument")
        self.report = report


# files
class ParseError(SqColorError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
