"""Splitting criteria for uniform vector bundles on P^m.

The classifier is sound only: each rule forces a uniform bundle with the
given splitting type to split, but no rule ever certifies that a bundle
does *not* split.  The tangent bundle of ``P^m``, of type ``(2, 1, ..., 1)``
and unsplit, is the standard reason ``Inconclusive`` must exist.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError

LOW_RANK = "R1"       # r <= m - 1: every uniform bundle of that rank splits
REPEATED_TOP = "R2"   # top value repeated k times, 1 <= k <= m-2, rest distinct
REPEATED_BOTTOM = "R3"  # the dual statement for the bottom value


@dataclass(frozen=True)
class SplittingType:
    m: int
    entries: tuple

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"base dimension must be at least 1, got {self.m}")
        if not self.entries:
            raise DomainError("a splitting type needs at least one entry")
        object.__setattr__(self, "entries", tuple(sorted((int(a) for a in self.entries), reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.entries)


class Outcome(enum.Enum):
    SPLITS = "Splits"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Classification:
    outcome: Outcome
    rule: str | None
    matched: tuple = ()

    def to_json(self) -> dict:
        return {"outcome": self.outcome.value, "rule": self.rule, "matched": list(self.matched)}


def _repeated_end(values: Sequence[int], m: int) -> bool:
    """``values`` starts with k copies of one number followed by distinct ones."""
    k = Counter(values)[values[0]]
    rest = values[k:]
    return 1 <= k <= m - 2 and len(set(rest)) == len(rest)


def classify(t: SplittingType) -> Classification:
    matched = []
    if t.rank <= t.m - 1:
        matched.append(LOW_RANK)
    if _repeated_end(t.entries, t.m):
        matched.append(REPEATED_TOP)
    if _repeated_end(t.entries[::-1], t.m):
        matched.append(REPEATED_BOTTOM)
    if matched:
        return Classification(Outcome.SPLITS, matched[0], tuple(matched))
    return Classification(Outcome.INCONCLUSIVE, None, ())


def dual_type(t: SplittingType) -> SplittingType:
    return SplittingType(t.m, tuple(-a for a in t.entries))


def top_multiplicity(t: SplittingType) -> int:
    return Counter(t.entries)[t.entries[0]]
