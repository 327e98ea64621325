"""Corpus-level verification: cross-validation against the exact solver and
the property suite.  Results are plain dataclasses that serialize to JSON.
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from .exact import gamma_p_exact
from .generators import DEFAULT_NAMED, FamilySpec, build, named_corpus, random_corpus
from .monitor import is_power_dominating, monitor
from .properties import STRUCTURAL_CHECKS, fixpoint_violations
from .solver import algorithm1, algorithm2, check_property_star, power_dominate
from .triangulation import Triangulation, parse, serialize

log = logging.getLogger(__name__)


@dataclass
class VerificationRecord:
    instance: str
    n: int
    size: int
    bound: float
    valid: bool
    gamma_p: Optional[int] = None
    checks: Dict[str, bool] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def bound_ok(self) -> bool:
        return self.n < 6 or 4 * self.size <= self.n - 2

    @property
    def optimal_gap(self) -> Optional[int]:
        return None if self.gamma_p is None else self.size - self.gamma_p

    @property
    def ok(self) -> bool:
        gap_ok = self.gamma_p is None or self.size >= self.gamma_p
        return self.valid and self.bound_ok and gap_ok and all(self.checks.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["bound_ok"] = self.bound_ok
        d["optimal_gap"] = self.optimal_gap
        d["ok"] = self.ok
        d["seconds"] = round(self.seconds, 6)
        return d


def desk_corpus(max_n: int, count: int, seed: int) -> List[FamilySpec]:
    """Named graphs up to ``max_n`` vertices plus ``count`` random ones."""
    specs = [s for s in named_corpus(DEFAULT_NAMED) if build(s).n <= max_n]
    specs += random_corpus(count, 6, max_n, seed)
    return specs


def cross_validate_one(spec: FamilySpec, exact: bool = True) -> VerificationRecord:
    g = build(spec)
    t0 = time.perf_counter()
    report = power_dominate(g)
    checks = {"no_diagnostics": not report.diagnostics}
    gamma = None
    if exact:
        res = gamma_p_exact(g)
        gamma = res.gamma_p
        checks["exact_witness_valid"] = is_power_dominating(g, res.witness)
    return VerificationRecord(
        spec.label,
        g.n,
        len(report.S),
        (g.n - 2) / 4,
        is_power_dominating(g, report.S),
        gamma,
        checks,
        time.perf_counter() - t0,
    )


def _run(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cross_validate(max_n: int = 14, count: int = 200, seed: int = 0, jobs: int = 1) -> List[VerificationRecord]:
    """Constructive versus exact on the desk-scale corpus, in instance order."""
    return _run(cross_validate_one, desk_corpus(max_n, count, seed), jobs)


def property_record(spec: FamilySpec, star_max_n: int = 14) -> VerificationRecord:
    """Run every structural and stage-2 law on one instance."""
    g = build(spec)
    t0 = time.perf_counter()
    checks: Dict[str, bool] = {}
    for name, fn in STRUCTURAL_CHECKS.items():
        checks[name] = not fn(g)
    report = power_dominate(g)
    if g.n >= 6:
        sel = algorithm1(g)
        algorithm2(g, sel.state)
        checks["fixpoint"] = not fixpoint_violations(g, sel.state)
        checks["stage1_accounting"] = sel.accounting_ok()
        if g.n <= star_max_n:
            checks["property_star"] = bool(check_property_star(g, sel.state.seeds, max_n=star_max_n))
    checks["no_diagnostics"] = not report.diagnostics
    checks["round_trip"] = parse(serialize(g)) == g
    return VerificationRecord(
        spec.label, g.n, len(report.S), (g.n - 2) / 4, is_power_dominating(g, report.S), None, checks,
        time.perf_counter() - t0,
    )


def property_suite(specs: Sequence[FamilySpec], star_max_n: int = 14, jobs: int = 1) -> List[VerificationRecord]:
    if not specs:
        log.warning("empty corpus: nothing to check")
        return []
    from functools import partial

    return _run(partial(property_record, star_max_n=star_max_n), list(specs), jobs)


def closure_order_independent(g: Triangulation, seeds, orders: int, seed: int) -> bool:
    """Compare the queue-based closure with randomly ordered propagation runs."""
    reference = monitor(g, seeds).monitored
    rng = random.Random(seed)
    for _ in range(orders):
        m = set()
        for s in seeds:
            m.add(s)
            m.update(g.rotation[s])
        changed = True
        while changed:
            changed = False
            verts = list(m)
            rng.shuffle(verts)
            for v in verts:
                outside = [w for w in g.rotation[v] if w not in m]
                if len(outside) == 1:
                    m.add(outside[0])
                    changed = True
        if m != reference:
            return False
    return True
