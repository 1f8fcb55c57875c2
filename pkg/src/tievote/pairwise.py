"""Weighted majority graphs, Copeland scoring, and majority-relation tests.

A voter tied between two candidates contributes to neither direction of
their pairwise comparison.  Majority is strict: margin 0 is a pairwise tie
even when caused entirely by indifference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Candidate, Profile
from .scoring import ScoreTable, winners_of


@dataclass(frozen=True)
class MajorityGraph:
    """Antisymmetric margin matrix: (weight for a over b) - (weight for b over a)."""

    margins: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.margins)

    def margin(self, a: int, b: int) -> int:
        return self.margins[a][b]

    def to_json_dict(self, candidates: Sequence[Candidate]) -> dict:
        edges = []
        for a in range(self.m):
            for b in range(self.m):
                if self.margins[a][b] > 0:
                    edges.append(
                        {
                            "from": candidates[a].name,
                            "to": candidates[b].name,
                            "margin": self.margins[a][b],
                        }
                    )
        return {"candidates": [c.name for c in candidates], "edges": edges}


@dataclass(frozen=True)
class CopelandRule:
    """One point per pairwise win plus ``alpha`` points per pairwise tie."""

    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if not 0 <= self.alpha <= 1:
            raise ValueError("alpha must lie in [0, 1]")


def margins_from_rank_maps(
    rank_maps: Sequence[dict[int, int]], weights: Sequence[int], m: int
) -> list[list[int]]:
    """Margin matrix from per-voter rank maps; shared with the solvers."""
    margins = [[0] * m for _ in range(m)]
    for ranks, w in zip(rank_maps, weights):
        for a in range(m):
            ra = ranks[a]
            for b in range(a + 1, m):
                rb = ranks[b]
                if ra < rb:
                    margins[a][b] += w
                    margins[b][a] -= w
                elif rb < ra:
                    margins[a][b] -= w
                    margins[b][a] += w
    return margins


def weighted_majority_graph(profile: Profile) -> MajorityGraph:
    rank_maps = [v.order.ranks() for v in profile.voters]
    weights = [v.weight for v in profile.voters]
    margins = margins_from_rank_maps(rank_maps, weights, profile.m)
    return MajorityGraph(tuple(tuple(row) for row in margins))


def copeland_scores(profile: Profile, rule: CopelandRule) -> ScoreTable:
    """wins + alpha * ties against the other candidates, per candidate."""
    graph = weighted_majority_graph(profile)
    table: ScoreTable = {}
    for c in range(profile.m):
        wins = sum(1 for d in range(profile.m) if d != c and graph.margin(c, d) > 0)
        ties = sum(1 for d in range(profile.m) if d != c and graph.margin(c, d) == 0)
        table[c] = wins + rule.alpha * ties
    return table


def copeland_winners(profile: Profile, rule: CopelandRule) -> set[int]:
    return winners_of(copeland_scores(profile, rule))


def weak_condorcet_winners(profile: Profile) -> set[int]:
    """Candidates that beat or tie every other candidate; may be empty."""
    graph = weighted_majority_graph(profile)
    return {
        c
        for c in range(profile.m)
        if all(graph.margin(c, d) >= 0 for d in range(profile.m) if d != c)
    }


def is_majority_transitive(profile: Profile) -> bool:
    """True iff the strict-majority relation (margin > 0) is transitive."""
    graph = weighted_majority_graph(profile)
    m = profile.m
    beats = [[graph.margin(a, b) > 0 for b in range(m)] for a in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b or not beats[a][b]:
                continue
            for c in range(m):
                if c != a and c != b and beats[b][c] and not beats[a][c]:
                    return False
    return True
