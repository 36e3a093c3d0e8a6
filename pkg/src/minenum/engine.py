"""Supergraph traversal drivers.

Both drivers walk an implicit digraph whose nodes are minimal Pi-sets,
starting from a seed. The arcs out of ``X`` are
``comp((X - {x}) | Y)`` for every ``x`` in ``X`` and every ``Y`` produced by
the property's restricted solver. A FIFO queue holds nodes awaiting
expansion and an archive of canonical keys prevents duplicates.

* :class:`PolyDelayTraversal` needs an exact restricted solver. A node is
  output when it leaves the queue, so consecutive outputs are separated by
  one expansion. Nodes larger than ``|S| + k - 1`` (or ``|S| + k`` with
  ``cap_inclusive``) are discarded.
* :class:`IncrementalTraversal` accepts an approximate restricted
  enumerator. Every new node is output when discovered; only nodes of size at
  most ``(c + 1) k`` are queued for expansion.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .model import ElementSet
from .properties import PropertyInstance, comp, is_minimal_pi_set, is_pi_set


class EngineError(ValueError):
    pass


@dataclass
class Counters:
    membership: int = 0
    comp: int = 0
    solver: int = 0

    @property
    def work(self) -> int:
        return self.membership + self.comp + self.solver


@dataclass(frozen=True)
class SolutionRecord:
    solution: ElementSet
    size: int
    within_budget: bool
    parent: ElementSet | None = None


@dataclass
class TraversalState:
    budget_k: int
    seed_size: int
    # largest set that is queued for expansion (None: no limit)
    expansion_cap: int | None
    # largest set that is admitted at all (None: every new set is output)
    admit_cap: int | None = None
    queue: deque = field(default_factory=deque)
    # canonical key -> parent key
    archive: dict = field(default_factory=dict)
    counters: Counters = field(default_factory=Counters)

    def admit(self, s: ElementSet, parent: ElementSet | None) -> bool:
        """Archive ``s``; returns whether it was new and within the admit cap."""
        if s in self.archive:
            return False
        if self.admit_cap is not None and len(s) > self.admit_cap:
            return False
        self.archive[s] = parent
        if self.expansion_cap is None or len(s) <= self.expansion_cap:
            self.queue.append(s)
        return True


@dataclass
class Summary:
    emitted: int = 0
    within_budget: int = 0
    max_size: int = 0
    expansions: int = 0
    membership_calls: int = 0
    comp_calls: int = 0
    solver_calls: int = 0
    max_gap_work: int = 0
    tail_work: int = 0
    size_bound: int | None = None
    factor: Fraction | None = None
    truncated: bool = False

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["factor"] = None if self.factor is None else str(self.factor)
        return out


def instrument(p: PropertyInstance, counters: Counters) -> PropertyInstance:
    inner = p.membership

    def counted(x: ElementSet) -> bool:
        counters.membership += 1
        return inner(x)

    return p.with_membership(counted)


def validate_seed(p: PropertyInstance, seed: ElementSet) -> None:
    if seed.kind != p.kind:
        raise EngineError(f"seed is a {seed.kind} set, property {p.name} expects {p.kind}")
    if not is_pi_set(p, seed):
        raise EngineError(f"seed {list(seed.elements)} is not a {p.name} set")
    if not is_minimal_pi_set(p, seed):
        raise EngineError(f"seed {list(seed.elements)} is not minimal")


def iter_neighbors(
    p: PropertyInstance, k: int, x_set: ElementSet, counters: Counters, check: bool = False
) -> Iterator[ElementSet]:
    """Out-arcs of ``x_set``: x ascending, then the solver's own order."""
    if p.restricted_solver is None:
        raise EngineError(f"property {p.name} has no restricted solver")
    for x in x_set:
        counters.solver += 1
        base = x_set.without(x)
        produced = set()
        for y in p.restricted_solver(p, k, x_set, x):
            counters.comp += 1
            target = comp(p, base.union(y))
            if check:
                if not set(y).issubset(target.elements):
                    raise EngineError(f"comp dropped part of {y} at {x_set}, {x}")
                if target in produced:
                    raise EngineError(f"two restricted sets gave {target} at {x_set}, {x}")
                produced.add(target)
            yield target


def expand_node(
    p: PropertyInstance,
    k: int,
    x_set: ElementSet,
    state: TraversalState,
    emit: Callable[[SolutionRecord], None] | None = None,
) -> int:
    """One expansion step; returns the number of newly admitted sets."""
    if x_set not in state.archive:
        raise EngineError(f"{x_set} has not been archived")
    count = 0
    for target in iter_neighbors(p, k, x_set, state.counters):
        if state.admit(target, x_set):
            count += 1
            if emit is not None:
                emit(_record(target, k, x_set))
    return count


def _record(s: ElementSet, k: int, parent: ElementSet | None) -> SolutionRecord:
    return SolutionRecord(s, len(s), len(s) <= k, parent)


class _Traversal:
    """Shared bookkeeping: instrumentation, summary and inter-output work."""

    def __init__(self, p: PropertyInstance, k: int, seed: ElementSet, check: bool = False):
        if k < 0:
            raise EngineError("budget k must be non-negative")
        self.counters = Counters()
        self.p = instrument(p, self.counters)
        self.k = k
        self.seed = seed
        self.check = check
        self.summary = Summary()
        self._last_work = 0
        validate_seed(p, seed)

    def _out(self, s: ElementSet, parent: ElementSet | None) -> SolutionRecord:
        if self.check and not is_minimal_pi_set(self.p, s):
            raise EngineError(f"emitted {s} is not a minimal {self.p.name} set")
        summary = self.summary
        work = self.counters.work
        if summary.emitted:
            summary.max_gap_work = max(summary.max_gap_work, work - self._last_work)
        self._last_work = work
        summary.emitted += 1
        summary.within_budget += len(s) <= self.k
        summary.max_size = max(summary.max_size, len(s))
        return _record(s, self.k, parent)

    def _finish(self) -> None:
        s = self.summary
        s.membership_calls = self.counters.membership
        s.comp_calls = self.counters.comp
        s.solver_calls = self.counters.solver
        s.tail_work = self.counters.work - self._last_work

    def _empty_set_rule(self) -> SolutionRecord | None:
        # if the empty set qualifies it is the only minimal Pi-set
        empty = ElementSet((), self.p.kind)
        if self.p.membership(empty):
            return self._out(empty, None)
        return None

    def run(self, emit: Callable[[SolutionRecord], None], max_solutions: int | None = None) -> Summary:
        for record in self:
            emit(record)
            if max_solutions is not None and self.summary.emitted >= max_solutions:
                self.summary.truncated = True
                break
        self._finish()
        return self.summary

    def __iter__(self) -> Iterator[SolutionRecord]:
        raise NotImplementedError


class PolyDelayTraversal(_Traversal):
    def __init__(self, p, k, seed, cap_inclusive: bool = False, check: bool = False):
        super().__init__(p, k, seed, check)
        bound = len(seed) + k if cap_inclusive else len(seed) + k - 1
        # the seed itself is always output
        bound = max(bound, len(seed))
        self.state = TraversalState(k, len(seed), bound, bound, counters=self.counters)
        self.summary.size_bound = bound

    def neighbors(self, x_set: ElementSet) -> Iterator[ElementSet]:
        return iter_neighbors(self.p, self.k, x_set, self.counters, self.check)

    def __iter__(self) -> Iterator[SolutionRecord]:
        record = self._empty_set_rule()
        if record is not None:
            yield record
            self._finish()
            return
        state = self.state
        state.archive[self.seed] = None
        state.queue.append(self.seed)
        while state.queue:
            x_set = state.queue.popleft()
            yield self._out(x_set, state.archive[x_set])
            self.summary.expansions += 1
            for target in self.neighbors(x_set):
                state.admit(target, x_set)
        self._finish()


class IncrementalTraversal(_Traversal):
    def __init__(self, p, k, seed, seed_factor=None, check: bool = False):
        super().__init__(p, k, seed, check)
        c = Fraction(seed_factor if seed_factor is not None else p.seed_factor)
        if k > 0:
            c = max(c, Fraction(math.ceil(Fraction(len(seed), k))))
        self.c = c
        self.state = TraversalState(k, len(seed), math.floor((c + 1) * k), None, counters=self.counters)
        self.summary.factor = c + p.solver_factor + 1
        self.summary.size_bound = math.floor(self.summary.factor * k)

    def __iter__(self) -> Iterator[SolutionRecord]:
        record = self._empty_set_rule()
        if record is not None:
            yield record
            self._finish()
            return
        state = self.state
        state.archive[self.seed] = None
        state.queue.append(self.seed)
        yield self._out(self.seed, None)
        while state.queue:
            x_set = state.queue.popleft()
            self.summary.expansions += 1
            for target in iter_neighbors(self.p, self.k, x_set, self.counters, self.check):
                if state.admit(target, x_set):
                    yield self._out(target, x_set)
        self._finish()


def enumerate_poly_delay(
    p: PropertyInstance,
    k: int,
    seed: ElementSet,
    emit: Callable[[SolutionRecord], None],
    *,
    cap_inclusive: bool = False,
    max_solutions: int | None = None,
    check: bool = False,
) -> Summary:
    traversal = PolyDelayTraversal(p, k, seed, cap_inclusive=cap_inclusive, check=check)
    summary = traversal.run(emit, max_solutions)
    summary.factor = p.seed_factor + 1
    return summary


def enumerate_incremental(
    p: PropertyInstance,
    k: int,
    seed: ElementSet,
    emit: Callable[[SolutionRecord], None],
    *,
    seed_factor=None,
    max_solutions: int | None = None,
    check: bool = False,
) -> Summary:
    traversal = IncrementalTraversal(p, k, seed, seed_factor=seed_factor, check=check)
    return traversal.run(emit, max_solutions)


__all__ = [
    "Counters",
    "EngineError",
    "IncrementalTraversal",
    "PolyDelayTraversal",
    "SolutionRecord",
    "Summary",
    "TraversalState",
    "enumerate_incremental",
    "enumerate_poly_delay",
    "expand_node",
]
