"""Seed selection and driver dispatch for any registered property."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .eds import EdsTraversal
from .engine import (
    EngineError,
    IncrementalTraversal,
    PolyDelayTraversal,
    SolutionRecord,
    Summary,
)
from .model import ElementSet
from .properties import EDS_DRIVER, INCREMENTAL, PropertyInstance, minimalize
from .seeds import SeedResult


@dataclass
class RunOutcome:
    summary: Summary | None
    seed: ElementSet | None
    seed_result: SeedResult | None = None
    seed_factor: Fraction | None = None

    @property
    def infeasible(self) -> bool:
        return self.summary is None


def choose_seed(
    p: PropertyInstance, k: int, seed: ElementSet | None = None, force: bool = False
) -> tuple[ElementSet | None, SeedResult | None, Fraction]:
    """Returns (seed, seed_result, factor c); seed is None when infeasible."""
    empty = ElementSet((), p.kind)
    if p.membership(empty):
        return empty, None, p.seed_factor
    if seed is not None:
        c = p.seed_factor
        if k > 0:
            c = max(c, Fraction(math.ceil(Fraction(len(seed), k))))
        return seed, None, c
    if p.seed_strategy is None:
        raise EngineError(f"property {p.name} has no seed strategy; supply a seed")
    result = p.seed_strategy(k)
    if result.feasible:
        return result.seed, result, p.seed_factor
    if force and k > 0 and result.raw is not None:
        forced = minimalize(p.membership, result.raw)
        return forced, result, Fraction(math.ceil(Fraction(len(forced), k)))
    return None, result, p.seed_factor


def open_traversal(
    p: PropertyInstance,
    k: int,
    seed: ElementSet,
    seed_factor: Fraction | None = None,
    *,
    cap_inclusive: bool = False,
    check: bool = False,
):
    if p.driver == EDS_DRIVER:
        return EdsTraversal(p.ground, k, seed, check=check)
    if p.driver == INCREMENTAL:
        return IncrementalTraversal(p, k, seed, seed_factor=seed_factor, check=check)
    return PolyDelayTraversal(p, k, seed, cap_inclusive=cap_inclusive, check=check)


def run_enumeration(
    p: PropertyInstance,
    k: int,
    emit: Callable[[SolutionRecord], None],
    *,
    seed: ElementSet | None = None,
    force: bool = False,
    cap_inclusive: bool = False,
    max_solutions: int | None = None,
    check: bool = False,
) -> RunOutcome:
    if k < 0:
        raise EngineError("budget k must be non-negative")
    chosen, result, c = choose_seed(p, k, seed, force)
    if chosen is None:
        return RunOutcome(None, None, result, c)
    traversal = open_traversal(p, k, chosen, c, cap_inclusive=cap_inclusive, check=check)
    summary = traversal.run(emit, max_solutions)
    if p.driver not in (EDS_DRIVER, INCREMENTAL):
        summary.factor = c + 1
    return RunOutcome(summary, chosen, result, c)


def collect(p: PropertyInstance, k: int, **kwargs) -> tuple[list[ElementSet], RunOutcome]:
    """Run and return the emitted sets in order."""
    out: list[ElementSet] = []
    outcome = run_enumeration(p, k, lambda r: out.append(r.solution), **kwargs)
    return out, outcome
