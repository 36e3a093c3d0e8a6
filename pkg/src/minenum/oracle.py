"""Exhaustive ground truth and run auditing for small instances."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .model import ElementSet
from .properties import PropertyInstance, is_minimal_pi_set

MAX_ORACLE_UNIVERSE = 20
MAX_RESTRICTED_SUBSETS = 5_000_000


class OracleTooLarge(ValueError):
    pass


def _minimal_by_cardinality(
    p: PropertyInstance,
    pool: Sequence[int],
    base: tuple[int, ...],
    size_cap: int | None,
) -> list[ElementSet]:
    """Subsets of ``pool`` in cardinality-then-lex order, kept when
    ``base | subset`` is a Pi-set and no kept subset is contained in it."""
    kept: list[ElementSet] = []
    kept_masks: list[int] = []
    bit = {e: 1 << i for i, e in enumerate(pool)}
    top = len(pool) if size_cap is None else min(size_cap, len(pool))
    for size in range(top + 1):
        for combo in combinations(pool, size):
            mask = 0
            for e in combo:
                mask |= bit[e]
            if any(m & mask == m for m in kept_masks):
                continue
            if p.membership(p.element_set(base + combo)):
                kept.append(p.element_set(combo))
                kept_masks.append(mask)
    return kept


def brute_minimal_sets(p: PropertyInstance, size_cap: int | None = None) -> list[ElementSet]:
    """All minimal Pi-sets (of size at most ``size_cap``), by exhaustion."""
    if p.universe > MAX_ORACLE_UNIVERSE:
        raise OracleTooLarge(f"ground set of size {p.universe} exceeds {MAX_ORACLE_UNIVERSE}")
    return _minimal_by_cardinality(p, range(p.universe), (), size_cap)


def brute_restricted_family(
    p: PropertyInstance, k: int, x_set: ElementSet, x: int
) -> list[ElementSet]:
    """All minimal Y avoiding ``x``, ``|Y| <= k``, with ``(X - {x}) | Y`` a Pi-set."""
    pool = [e for e in range(p.universe) if e != x]
    total = sum(math.comb(len(pool), i) for i in range(min(k, len(pool)) + 1))
    if total > MAX_RESTRICTED_SUBSETS:
        raise OracleTooLarge(f"{total} subsets to test")
    base = x_set.without(x).elements
    return sorted(_minimal_by_cardinality(p, pool, base, k))


def size_bound(factor: Fraction | float | int, k: int) -> int:
    return math.ceil(Fraction(factor) * k)


@dataclass
class AuditReport:
    complete: bool
    all_minimal: bool
    no_duplicates: bool
    factor_ok: bool
    observed_factor: float
    missing: list[ElementSet] = field(default_factory=list)
    offenders: list[ElementSet] = field(default_factory=list)
    duplicates: list[ElementSet] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.complete and self.all_minimal and self.no_duplicates and self.factor_ok


def audit_run(
    p: PropertyInstance,
    k: int,
    factor_claim,
    emitted: Iterable[ElementSet],
    truth: list[ElementSet] | None = None,
) -> AuditReport:
    """Check an enumeration run against the exhaustive oracle.

    ``truth`` may carry a precomputed :func:`brute_minimal_sets` result (any
    size cap of at least ``k``) to avoid recomputing it per budget.
    """
    emitted = list(emitted)
    if truth is None:
        truth = brute_minimal_sets(p, size_cap=k)
    target = {s for s in truth if len(s) <= k}
    seen: set[ElementSet] = set()
    duplicates = []
    for s in emitted:
        if s in seen:
            duplicates.append(s)
        seen.add(s)
    missing = sorted(target - seen)
    bound = size_bound(factor_claim, k)
    offenders = [s for s in emitted if not is_minimal_pi_set(p, s) or len(s) > bound]
    non_minimal = [s for s in emitted if not is_minimal_pi_set(p, s)]
    largest = max((len(s) for s in emitted), default=0)
    observed = largest / k if k else (0.0 if largest == 0 else math.inf)
    return AuditReport(
        complete=not missing,
        all_minimal=not non_minimal,
        no_duplicates=not duplicates,
        factor_ok=largest <= bound,
        observed_factor=observed,
        missing=missing,
        offenders=offenders,
        duplicates=duplicates,
    )
