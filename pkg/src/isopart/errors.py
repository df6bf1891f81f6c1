"""Exceptions shared across the package."""

from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .graph import Graph
    from .verify import Coloring


class SearchAborted(RuntimeError):
    """A search ran out of budget; no number is claimed."""


class HypothesisError(ValueError):
    """The input graph does not satisfy a construction's hypotheses.

    ``hypothesis`` is a short machine-readable name such as ``"connected"``,
    ``"max-degree"``, ``"claw-free"`` or ``"excluded-graph"``.
    """

    def __init__(self, hypothesis: str, message: str):
        super().__init__(message)
        self.hypothesis = hypothesis


class ProofGapReport(RuntimeError):
    """A proof-derived construction produced a colouring that does not verify.

    Carries the graph, the clique size (if any) and the offending colouring so
    the failure can be replayed.
    """

    def __init__(
        self,
        message: str,
        graph: "Graph",
        k: Optional[int] = None,
        coloring: Optional["Coloring"] = None,
    ):
        super().__init__(message)
        self.graph = graph
        self.k = k
        self.coloring = coloring
