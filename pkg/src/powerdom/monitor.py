"""Power-domination monitoring: closed-neighborhood seeding plus propagation.

Starting from ``N[S]``, a monitored vertex with exactly one non-monitored
neighbor forces that neighbor.  The closure is computed with per-vertex
counters of non-monitored neighbors, so a full closure costs ``O(m)``.

Propagators are processed first-in first-out; vertices that become
propagators at the same moment are queued by increasing id.  The fixpoint
does not depend on this order, only the trace does.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, FrozenSet, Iterable, List, Set, Tuple, Union

from .triangulation import Triangulation

TraceEntry = Union[Tuple[str, Tuple[int, ...]], Tuple[str, int, int]]


@dataclass
class MonitorState:
    """Seed set, monitored set and replayable trace for one graph.

    ``missing[v]`` is the number of neighbors of ``v`` outside ``monitored``.
    Trace entries are ``("DOM", vertices)`` for a domination step and
    ``("PROP", v, u)`` when ``v`` forces ``u``.
    """

    graph: Triangulation
    seeds: Set[int] = field(default_factory=set)
    monitored: Set[int] = field(default_factory=set)
    missing: List[int] = field(default_factory=list)
    trace: List[TraceEntry] = field(default_factory=list)

    @classmethod
    def empty(cls, g: Triangulation) -> "MonitorState":
        return cls(g, set(), set(), [g.degree(v) for v in range(g.n)], [])

    def copy(self) -> "MonitorState":
        return MonitorState(self.graph, set(self.seeds), set(self.monitored), list(self.missing), list(self.trace))

    @property
    def unmonitored(self) -> FrozenSet[int]:
        return frozenset(range(self.graph.n)) - self.monitored

    def is_complete(self) -> bool:
        return len(self.monitored) == self.graph.n

    def add_seeds(self, vertices: Iterable[int], record: bool = True) -> List[int]:
        """Add seeds, close under propagation and return newly monitored vertices."""
        g = self.graph
        dominated: List[int] = []
        for s in vertices:
            self.seeds.add(s)
            for v in (s, *g.rotation[s]):
                if v not in self.monitored:
                    dominated.append(v)
        dominated = sorted(set(dominated))
        if record and dominated:
            self.trace.append(("DOM", tuple(dominated)))
        queue: Deque[int] = deque()
        touched = self._mark(dominated)
        queue.extend(sorted(v for v in touched if v in self.monitored and self.missing[v] == 1))
        new = list(dominated)
        while queue:
            v = queue.popleft()
            if self.missing[v] != 1:
                continue
            u = next(w for w in g.rotation[v] if w not in self.monitored)
            if record:
                self.trace.append(("PROP", v, u))
            new.append(u)
            touched = self._mark([u])
            queue.extend(sorted(w for w in touched if self.missing[w] == 1))
        return new

    def add_seed(self, v: int, record: bool = True) -> List[int]:
        return self.add_seeds([v], record=record)

    def _mark(self, vertices: Iterable[int]) -> Set[int]:
        """Mark vertices monitored; return monitored vertices whose counter changed."""
        g = self.graph
        touched: Set[int] = set()
        for v in vertices:
            if v in self.monitored:
                continue
            self.monitored.add(v)
            touched.add(v)
            for w in g.rotation[v]:
                self.missing[w] -= 1
                if w in self.monitored:
                    touched.add(w)
        return {w for w in touched if w in self.monitored}


def monitor(g: Triangulation, seeds: Iterable[int]) -> MonitorState:
    """Return the monitoring closure ``M(S)`` of ``seeds`` in ``g``."""
    state = MonitorState.empty(g)
    seeds = sorted(set(seeds))
    for s in seeds:
        if not 0 <= s < g.n:
            raise ValueError(f"unknown vertex {s}")
    if seeds:
        state.add_seeds(seeds)
    return state


def monitored_set(g: Triangulation, seeds: Iterable[int]) -> FrozenSet[int]:
    return frozenset(monitor(g, seeds).monitored)


def is_power_dominating(g: Triangulation, seeds: Iterable[int]) -> bool:
    return monitor(g, seeds).is_complete()


def marginal_gain(g: Triangulation, state: MonitorState, v: int) -> int:
    """``|M(S + v)| - |M(S)|`` computed on a scratch copy; ``state`` is untouched."""
    if all(w in state.monitored for w in g.rotation[v]) and v in state.monitored:
        return 0
    scratch = MonitorState(g, set(state.seeds), set(state.monitored), list(state.missing), [])
    return len(scratch.add_seed(v, record=False))


def replay(g: Triangulation, trace: Iterable[TraceEntry]) -> Set[int]:
    """Rebuild the monitored set from a trace, checking every propagation step."""
    monitored: Set[int] = set()
    for entry in trace:
        if entry[0] == "DOM":
            monitored.update(entry[1])  # type: ignore[arg-type]
        else:
            _, v, u = entry
            outside = [w for w in g.rotation[v] if w not in monitored]  # type: ignore[index]
            if v not in monitored or outside != [u]:
                raise ValueError(f"invalid propagation {v} -> {u}")
            monitored.add(u)  # type: ignore[arg-type]
    return monitored


def format_trace(trace: Iterable[TraceEntry]) -> str:
    lines = []
    for entry in trace:
        if entry[0] == "DOM":
            lines.append(" ".join(["DOM", *map(str, entry[1])]))  # type: ignore[arg-type]
        else:
            lines.append(f"PROP {entry[1]} -> {entry[2]}")
    return "\n".join(lines) + ("\n" if lines else "")
