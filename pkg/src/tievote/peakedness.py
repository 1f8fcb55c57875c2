"""Four single-peakedness models for votes with ties.

All checks run against a societal axis: a left-to-right total order of the
candidates.  Writing a vote's group index (0 = most preferred) along the
axis gives a sequence, and each model is a shape constraint on it:

* single-peaked           - strictly falls to a unique minimum, then
                            strictly rises; ties can only pair candidates
                            on opposite sides of the peak
* single-plateaued        - same, but the minimum may be a contiguous block
                            of top-ranked candidates
* possibly single-peaked  - weakly falls to a contiguous top block, then
                            weakly rises; equivalently, the vote extends to
                            a single-peaked total order on the same axis
* outside options         - single-peaked on a contiguous axis segment,
                            with every candidate outside the segment
                            mutually tied strictly below it

An axis and its reversal validate exactly the same votes, so axes are
canonicalized to put the smaller end id first.  Axis search and vote
enumeration are exhaustive and capped at desk scale; the polynomial-time
recognition algorithms for these models are deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from .core import Profile, WeakOrder
from .errors import CapacityError

DEFAULT_ENUMERATION_CAP = 9


@dataclass(frozen=True)
class Axis:
    """Left-to-right societal order of candidate ids."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if len(set(self.order)) != len(self.order):
            raise ValueError("axis must not repeat candidates")

    @property
    def m(self) -> int:
        return len(self.order)

    def positions(self) -> dict[int, int]:
        return {c: i for i, c in enumerate(self.order)}

    def reversed_axis(self) -> "Axis":
        return Axis(self.order[::-1])

    def canonical(self) -> "Axis":
        """Quotient reversal: the smaller end id comes first."""
        if self.m > 1 and self.order[0] > self.order[-1]:
            return self.reversed_axis()
        return self


class SPModel(Enum):
    SINGLE_PEAKED = "single-peaked"
    SINGLE_PLATEAUED = "single-plateaued"
    OUTSIDE_OPTIONS = "outside-options"
    POSSIBLY_SINGLE_PEAKED = "possibly-single-peaked"


@dataclass(frozen=True)
class PeakDecomposition:
    """Witness segments O1 | X | Y | Z | O2, contiguous on the axis.

    Y holds the top candidates, X and Z the strictly/weakly monotone flanks,
    O1 and O2 the mutually tied outside candidates (empty except for the
    outside-options model).  The all-tied vote under outside options is
    witnessed by an all-outside split with empty Y.
    """

    o1: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    o2: tuple[int, ...]

    @property
    def segments(self) -> tuple[tuple[int, ...], ...]:
        return (self.o1, self.x, self.y, self.z, self.o2)


def split_at(axis: Axis, p: int) -> tuple[int, int]:
    """Counts of candidates strictly left and strictly right of ``p``."""
    pos = axis.positions()
    if p not in pos:
        raise ValueError(f"candidate {p} is not on the axis")
    return pos[p], axis.m - pos[p] - 1


def _axis_rank_sequence(order: WeakOrder, axis: Axis) -> list[int]:
    if order.candidate_ids != frozenset(axis.order):
        raise ValueError("vote and axis must cover the same candidates")
    ranks = order.ranks()
    return [ranks[c] for c in axis.order]


def _strict_valley(seq: Sequence[int]) -> int | None:
    """Index of the unique minimum of a strictly-down-then-strictly-up run."""
    i = 0
    while i + 1 < len(seq) and seq[i + 1] < seq[i]:
        i += 1
    for j in range(i + 1, len(seq)):
        if seq[j] <= seq[j - 1]:
            return None
    return i


def _top_block(seq: Sequence[int]) -> tuple[int, int] | None:
    """Bounds of the rank-0 block, or None if it is not contiguous."""
    zeros = [i for i, v in enumerate(seq) if v == 0]
    lo, hi = zeros[0], zeros[-1]
    if hi - lo + 1 != len(zeros):
        return None
    return lo, hi


def _validate_single_peaked(
    order: WeakOrder, axis: Axis, seq: Sequence[int]
) -> PeakDecomposition | None:
    peak = _strict_valley(seq)
    if peak is None:
        return None
    ax = axis.order
    return PeakDecomposition((), ax[:peak], (ax[peak],), ax[peak + 1 :], ())


def _validate_plateaued(
    order: WeakOrder, axis: Axis, seq: Sequence[int], strict: bool
) -> PeakDecomposition | None:
    block = _top_block(seq)
    if block is None:
        return None
    lo, hi = block
    for j in range(lo):
        if strict and seq[j + 1] >= seq[j]:
            return None
        if not strict and seq[j + 1] > seq[j]:
            return None
    for j in range(hi + 1, len(seq)):
        if strict and seq[j] <= seq[j - 1]:
            return None
        if not strict and seq[j] < seq[j - 1]:
            return None
    ax = axis.order
    return PeakDecomposition((), ax[:lo], ax[lo : hi + 1], ax[hi + 1 :], ())


def _validate_outside_options(
    order: WeakOrder, axis: Axis, seq: Sequence[int]
) -> PeakDecomposition | None:
    if len(order.groups) == 1:
        # All-tied degenerate vote: every candidate is an outside option.
        return PeakDecomposition(axis.order, (), (), (), ())
    inner = _validate_single_peaked(order, axis, seq)
    if inner is not None:
        return inner
    # Outside candidates are mutually tied and strictly below everything
    # else, so they are exactly the bottom group, split into an axis prefix
    # and suffix around a contiguous single-peaked middle.
    bottom = len(order.groups) - 1
    m = axis.m
    lo = 0
    while lo < m and seq[lo] == bottom:
        lo += 1
    hi = m
    while hi > lo and seq[hi - 1] == bottom:
        hi -= 1
    if any(seq[i] == bottom for i in range(lo, hi)):
        return None
    mid = seq[lo:hi]
    peak = _strict_valley(mid)
    if peak is None:
        return None
    ax = axis.order
    return PeakDecomposition(
        ax[:lo],
        ax[lo : lo + peak],
        (ax[lo + peak],),
        ax[lo + peak + 1 : hi],
        ax[hi:],
    )


def validate_vote(
    order: WeakOrder, axis: Axis, model: SPModel
) -> PeakDecomposition | None:
    """Witness decomposition iff the vote satisfies the model on this axis."""
    seq = _axis_rank_sequence(order, axis)
    if model is SPModel.SINGLE_PEAKED:
        return _validate_single_peaked(order, axis, seq)
    if model is SPModel.SINGLE_PLATEAUED:
        return _validate_plateaued(order, axis, seq, strict=True)
    if model is SPModel.POSSIBLY_SINGLE_PEAKED:
        return _validate_plateaued(order, axis, seq, strict=False)
    return _validate_outside_options(order, axis, seq)


def validate_profile(profile: Profile, axis: Axis, model: SPModel) -> bool:
    return all(validate_vote(v.order, axis, model) is not None for v in profile.voters)


def check_model_implication(
    profile: Profile, axis: Axis, frm: SPModel, to: SPModel
) -> bool:
    """True iff validating under ``frm`` implies validating under ``to`` here."""
    return (not validate_profile(profile, axis, frm)) or validate_profile(
        profile, axis, to
    )


def find_axis(
    profile: Profile, model: SPModel, cap: int = DEFAULT_ENUMERATION_CAP
) -> Axis | None:
    """First canonical axis validating the profile, searching exhaustively."""
    m = profile.m
    if m > cap:
        raise CapacityError(
            f"axis search enumerates m!/2 orders; m={m} exceeds the desk-scale "
            f"cap of {cap}"
        )
    for perm in permutations(range(m)):
        if m > 1 and perm[0] > perm[-1]:
            continue
        axis = Axis(perm)
        if validate_profile(profile, axis, model):
            return axis
    return None


# ------------------------------------------------------------------
# Constructive enumeration of model-consistent votes.
# ------------------------------------------------------------------


def _descents(left: tuple[int, ...], right: tuple[int, ...]) -> Iterator[tuple]:
    """Strict descents over both flanks, nearest candidate first.

    Each step takes the next-nearest candidate from one flank, or ties the
    two next-nearest candidates across flanks.
    """
    if not left and not right:
        yield ()
        return
    if left:
        for tail in _descents(left[1:], right):
            yield ((left[0],),) + tail
    if right:
        for tail in _descents(left, right[1:]):
            yield ((right[0],),) + tail
    if left and right:
        pair = (left[0], right[0]) if left[0] < right[0] else (right[0], left[0])
        for tail in _descents(left[1:], right[1:]):
            yield (pair,) + tail


def _single_peaked_votes(ax: tuple[int, ...]) -> list[WeakOrder]:
    votes = []
    for k in range(len(ax)):
        left = ax[:k][::-1]
        right = ax[k + 1 :]
        for tail in _descents(left, right):
            votes.append(WeakOrder(((ax[k],),) + tail))
    return votes


def _plateaued_votes(ax: tuple[int, ...]) -> list[WeakOrder]:
    votes = []
    for i in range(len(ax)):
        for j in range(i, len(ax)):
            left = ax[:i][::-1]
            right = ax[j + 1 :]
            for tail in _descents(left, right):
                votes.append(WeakOrder((ax[i : j + 1],) + tail))
    return votes


def _possibly_votes(ax: tuple[int, ...]) -> list[WeakOrder]:
    m = len(ax)
    out: list[WeakOrder] = []

    def grow(lo: int, hi: int, groups: list[tuple[int, ...]]):
        if lo == 0 and hi == m - 1:
            out.append(WeakOrder(groups))
            return
        for take_left in range(lo + 1):
            for take_right in range(m - 1 - hi + 1):
                if take_left + take_right == 0:
                    continue
                group = ax[lo - take_left : lo] + ax[hi + 1 : hi + 1 + take_right]
                grow(lo - take_left, hi + take_right, groups + [group])

    for i in range(m):
        for j in range(i, m):
            grow(i, j, [ax[i : j + 1]])
    return out


def _outside_options_votes(ax: tuple[int, ...]) -> list[WeakOrder]:
    m = len(ax)
    votes = set(_single_peaked_votes(ax))
    for o1 in range(m + 1):
        for o2 in range(m - o1 + 1):
            if o1 + o2 == 0:
                continue
            outside = ax[:o1] + ax[m - o2 :]
            inner = ax[o1 : m - o2]
            if not inner:
                votes.add(WeakOrder((outside,)))
                continue
            for v in _single_peaked_votes(inner):
                votes.add(WeakOrder(v.groups + (outside,)))
    return list(votes)


@lru_cache(maxsize=None)
def _consistent_votes(ax: tuple[int, ...], model: SPModel) -> tuple[WeakOrder, ...]:
    if model is SPModel.SINGLE_PEAKED:
        votes = _single_peaked_votes(ax)
    elif model is SPModel.SINGLE_PLATEAUED:
        votes = _plateaued_votes(ax)
    elif model is SPModel.POSSIBLY_SINGLE_PEAKED:
        votes = _possibly_votes(ax)
    else:
        votes = _outside_options_votes(ax)
    return tuple(sorted(votes, key=lambda v: v.groups))


def enumerate_consistent_votes(
    axis: Axis,
    model: SPModel,
    p_first: int | None = None,
    total_only: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> tuple[WeakOrder, ...]:
    """All votes satisfying the model on this axis, duplicate-free and sorted.

    ``p_first`` keeps only votes ranking that candidate uniquely first;
    ``total_only`` keeps only tie-free votes.  Both filters may be combined.
    """
    if axis.m > cap:
        raise CapacityError(
            f"vote enumeration is exponential in m; m={axis.m} exceeds the "
            f"desk-scale cap of {cap}"
        )
    votes = _consistent_votes(axis.order, model)
    if p_first is not None:
        votes = tuple(v for v in votes if v.top_group == (p_first,))
    if total_only:
        votes = tuple(v for v in votes if v.is_total)
    return votes


def axis_to_json(axis: Axis, names: Sequence[str]) -> list[str]:
    return [names[c] for c in axis.order]
