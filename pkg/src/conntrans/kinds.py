"""Transversal kinds and the membership predicate shared by every solver."""
from __future__ import annotations

import enum
from typing import Iterable

from .graph import Graph, bipartite_mask, edgeless_mask, forest_mask


class TransversalKind(enum.Enum):
    VC = "vc"
    FVS = "fvs"
    OCT = "oct"

    def residual_ok(self, adj: tuple[int, ...], rest: int) -> bool:
        """Whether the graph induced on the surviving vertices ``rest`` is allowed."""
        if self is TransversalKind.VC:
            return edgeless_mask(adj, rest)
        if self is TransversalKind.FVS:
            return forest_mask(adj, rest)
        return bipartite_mask(adj, rest)

    def holds(self, G: Graph, S_mask: int) -> bool:
        return self.residual_ok(G.adj, G.full & ~S_mask)

    @classmethod
    def parse(cls, text: str | "TransversalKind") -> "TransversalKind":
        if isinstance(text, cls):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown transversal kind {text!r}; expected vc, fvs or oct") from None


def satisfies(G: Graph, kind: TransversalKind, S: Iterable[int]) -> bool:
    """True iff ``G - S`` is edgeless / a forest / bipartite, per ``kind``."""
    return kind.holds(G, G.check_subset(S))
