"""Brute-force power domination number, used as an oracle.

Subsets are enumerated by increasing size and, within a size, in
lexicographic order, so the witness is the lexicographically least
minimum power dominating set.  Nothing is pruned unless asked for.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from .monitor import monitor
from .triangulation import Triangulation


class Exceeded(RuntimeError):
    """No power dominating set of size at most ``k_max`` exists."""

    def __init__(self, k_max: int):
        super().__init__(f"power domination number exceeds k_max={k_max}")
        self.k_max = k_max


@dataclass(frozen=True)
class ExactResult:
    gamma_p: int
    witness: Tuple[int, ...]
    subsets_examined: int

    def to_dict(self) -> dict:
        return {"gamma_p": self.gamma_p, "witness": list(self.witness), "subsets_examined": self.subsets_examined}


def _dominated_free(g: Triangulation) -> List[int]:
    """Vertices not strictly needed: drop ``v`` when ``N[v] <= N[u]`` for some ``u < v``."""
    keep = []
    for v in range(g.n):
        nv = g.closed_neighborhood(v)
        if any(nv <= g.closed_neighborhood(u) for u in range(v)):
            continue
        keep.append(v)
    return keep


def gamma_p_exact(g: Triangulation, k_max: Optional[int] = None, prune_dominated: bool = False) -> ExactResult:
    """Smallest power dominating set of ``g`` by exhaustive search.

    Args:
        g: the graph.
        k_max: largest size to try; defaults to ``ceil(n/3)``, which is an
            upper bound for every connected graph.
        prune_dominated: restrict candidates to vertices whose closed
            neighborhood is not contained in that of a lower-id vertex.

    Raises:
        Exceeded: no power dominating set of size ``<= k_max`` exists.
    """
    n = g.n
    if k_max is None:
        k_max = max(1, math.ceil(n / 3))
    pool = _dominated_free(g) if prune_dominated else list(range(n))
    examined = 0
    for k in range(1, k_max + 1):
        for subset in combinations(pool, k):
            examined += 1
            if monitor(g, subset).is_complete():
                return ExactResult(k, subset, examined)
    raise Exceeded(k_max)


def is_optimal(g: Triangulation, seeds: Iterable[int], k_max: Optional[int] = None) -> bool:
    seeds = set(seeds)
    if not monitor(g, seeds).is_complete():
        raise ValueError("seed set is not power dominating")
    return len(seeds) == gamma_p_exact(g, k_max=k_max).gamma_p
