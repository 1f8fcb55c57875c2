"""Scoring vectors and the four rules for scoring tied groups.

A vote ``G_1 > ... > G_r`` is scored against a non-increasing vector of
naturals.  The candidates of group ``G_i`` share the positions
``k_i+1 .. k_i+|G_i|`` where ``k_i`` counts the candidates ranked strictly
above them, and an extension picks which of those positions' values the
group receives:

* min        - the lowest value, at position ``k_i + |G_i|``
* max        - the highest value, at position ``k_i + 1``
* round down - the value at position ``m - r + i``
* average    - the mean of the group's positional values

All scores are exact rationals; winner sets use exact comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import Candidate, Profile, WeakOrder

ScoreTable = dict[int, Fraction]


@dataclass(frozen=True)
class ScoringVector:
    """Non-increasing vector of natural numbers, one entry per candidate."""

    alphas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        if any(a < 0 for a in self.alphas):
            raise ValueError("scoring values must be non-negative")
        if any(a < b for a, b in zip(self.alphas, self.alphas[1:])):
            raise ValueError("scoring vector must be non-increasing")

    @property
    def m(self) -> int:
        return len(self.alphas)

    @staticmethod
    def plurality(m: int) -> "ScoringVector":
        return ScoringVector((1,) + (0,) * (m - 1))

    @staticmethod
    def veto(m: int) -> "ScoringVector":
        return ScoringVector((1,) * (m - 1) + (0,))

    @staticmethod
    def borda(m: int) -> "ScoringVector":
        return ScoringVector(tuple(range(m - 1, -1, -1)))

    @staticmethod
    def triviality(m: int) -> "ScoringVector":
        return ScoringVector((0,) * m)


class Extension(Enum):
    MIN = "min"
    MAX = "max"
    ROUND_DOWN = "round-down"
    AVERAGE = "average"


def group_offsets(order: WeakOrder) -> tuple[int, ...]:
    """Prefix sizes: the number of candidates strictly above each group."""
    offsets = []
    total = 0
    for g in order.groups:
        offsets.append(total)
        total += len(g)
    return tuple(offsets)


def score_vote(order: WeakOrder, vector: ScoringVector, ext: Extension) -> ScoreTable:
    """Score one vote; on a total order every extension is plain positional."""
    m = order.size
    if vector.m != m:
        raise ValueError(f"vector has {vector.m} entries for {m} candidates")
    a = vector.alphas
    r = len(order.groups)
    table: ScoreTable = {}
    offset = 0
    for i, g in enumerate(order.groups):
        size = len(g)
        if ext is Extension.MIN:
            value: Fraction | int = a[offset + size - 1]
        elif ext is Extension.MAX:
            value = a[offset]
        elif ext is Extension.ROUND_DOWN:
            value = a[m - r + i]
        else:
            value = Fraction(sum(a[offset : offset + size]), size)
        for c in g:
            table[c] = value
        offset += size
    return table


def score_profile(profile: Profile, vector: ScoringVector, ext: Extension) -> ScoreTable:
    """Weighted sum of the per-voter score tables."""
    totals: ScoreTable = {c.id: Fraction(0) for c in profile.candidates}
    for voter in profile.voters:
        for c, s in score_vote(voter.order, vector, ext).items():
            totals[c] += voter.weight * s
    return totals


def winners_of(table: ScoreTable) -> set[int]:
    if not table:
        return set()
    best = max(table.values())
    return {c for c, s in table.items() if s == best}


def scoring_winners(profile: Profile, vector: ScoringVector, ext: Extension) -> set[int]:
    """Argmax set of the profile score table; non-empty whenever m >= 1."""
    return winners_of(score_profile(profile, vector, ext))


def score_table_to_json_dict(
    table: ScoreTable, candidates: Sequence[Candidate]
) -> dict[str, str]:
    """JSON form: candidate name to exact "p/q" string, in id order."""
    return {c.name: str(Fraction(table[c.id])) for c in candidates}
