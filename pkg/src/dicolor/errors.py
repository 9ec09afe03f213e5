"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: invalid input is 3, an exceeded
enumeration budget is 2, and a failed certification or exhausted search
is 1.
"""

from __future__ import annotations


class DicolorError(Exception):
    """Base class for all toolkit errors."""


class InputError(DicolorError, ValueError):
    """A caller violated a documented precondition or data invariant."""


class GraphFormatError(InputError):
    """A graph file could not be parsed; carries line/position context."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


class BudgetExceededError(DicolorError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what: str, needed, limit):
        super().__init__(f"{what}: needs {needed}, budget is {limit}")
        self.what = what
        self.needed = needed
        self.limit = limit


class TriesExhaustedError(DicolorError):
    """Rejection sampling failed within the allowed number of tries.

    ``best`` carries the most promising failed attempt for diagnosis.
    """

    def __init__(self, tries: int, best=None):
        super().__init__(f"no orientation certified within {tries} tries")
        self.tries = tries
        self.best = best


class ClassificationGapError(DicolorError):
    """The sparse-split dichotomy failed for some layer vertex.

    This can only happen when the split's hypothesis is false, in which
    case ``witness`` is a principal vertex set whose average degree meets
    the density threshold.
    """

    def __init__(self, witness: int, position: int, vertex: int):
        super().__init__(
            f"vertex {vertex} (layer position {position}) fits neither sparse layer; "
            f"witness set mask {witness:#x}"
        )
        self.witness = witness
        self.position = position
        self.vertex = vertex


class HypothesesNotMetError(DicolorError):
    """A strict-mode certificate was requested outside its valid regime."""

    def __init__(self, failed: list[str], report=None):
        super().__init__("hypotheses not met: " + "; ".join(failed))
        self.failed = tuple(failed)
        self.report = report
