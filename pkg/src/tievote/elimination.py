"""Elimination veto for votes with ties.

Each round scores the remaining candidates with the veto vector of the
current size, using the min rule on the votes restricted to the remaining
candidates, and eliminates the unique lowest scorer.  Under min, a vote
vetoes exactly the remaining members of its lowest remaining group; a vote
whose remaining candidates are all tied vetoes every one of them, which
leaves the relative scores untouched.  The survivor is the unique winner.
"""

from __future__ import annotations

from typing import Sequence

from .core import Profile

# Among tied lowest scorers the lexicographically smallest candidate name is
# eliminated.  The rule fixes only "lexicographic"; the direction is a
# convention.
ELIMINATE_SMALLEST_NAME = True

EliminationOrder = tuple[int, ...]


def run_elimination(
    rank_maps: Sequence[dict[int, int]],
    weights: Sequence[int],
    names: Sequence[str],
    candidate_ids: Sequence[int],
) -> tuple[int, EliminationOrder]:
    """Elimination rounds over pre-extracted rank maps; returns (winner, order)."""
    remaining = list(candidate_ids)
    if not remaining:
        raise ValueError("cannot run an election without candidates")
    eliminated: list[int] = []
    while len(remaining) > 1:
        veto_weight = {c: 0 for c in remaining}
        for ranks, w in zip(rank_maps, weights):
            bottom = max(ranks[c] for c in remaining)
            for c in remaining:
                if ranks[c] == bottom:
                    veto_weight[c] += w
        heaviest = max(veto_weight.values())
        tied_low = [c for c in remaining if veto_weight[c] == heaviest]
        if ELIMINATE_SMALLEST_NAME:
            loser = min(tied_low, key=lambda c: names[c])
        else:
            loser = max(tied_low, key=lambda c: names[c])
        eliminated.append(loser)
        remaining.remove(loser)
    winner = remaining[0]
    return winner, tuple(eliminated + [winner])


def elimination_veto_winner(profile: Profile) -> tuple[int, EliminationOrder]:
    """Unique winner plus the full elimination order (survivor last)."""
    if profile.m == 0:
        raise ValueError("cannot run an election without candidates")
    rank_maps = [v.order.ranks() for v in profile.voters]
    weights = [v.weight for v in profile.voters]
    return run_elimination(rank_maps, weights, profile.names, range(profile.m))


def elimination_order_to_json(order: EliminationOrder, names: Sequence[str]) -> list[str]:
    return [names[c] for c in order]
