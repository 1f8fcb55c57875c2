"""Constructive weighted coalitional manipulation (CWCM) for peaked models.

An instance fixes the candidates, the nonmanipulators' votes, the
manipulators' weights, a preferred candidate p, a societal axis, a
single-peakedness model the manipulators must respect, and a rule.  The
question is whether the manipulators can cast model-consistent votes that
make p a winner (unique winner for elimination veto, otherwise any winner).

Three polynomial-time solvers cover single-peaked and single-plateaued
instances:

* scoring rules   - when the vector and axis split admit it, evaluating at
                    most two uniform manipulator votes decides the instance
* elimination veto - try each elimination order obtainable by repeatedly
                    removing an axis endpoint, with every manipulator
                    voting its reverse
* Copeland(alpha) - double each nonmanipulator into its two axis-order tie
                    breakings, then try every uniform p-first total order

An exhaustive oracle cross-checks all of them, and a Partition reduction
produces five-candidate scoring instances whose answer matches the
equal-sum-split question on the given items.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Iterator, Sequence

from .core import Candidate, Profile, WeakOrder, WeightedVoter
from .elimination import elimination_veto_winner, run_elimination
from .errors import CapacityError, NotApplicableError
from .pairwise import CopelandRule, copeland_winners, margins_from_rank_maps
from .peakedness import (
    Axis,
    SPModel,
    enumerate_consistent_votes,
    split_at,
    validate_vote,
)
from .scoring import Extension, ScoringVector, score_profile, score_vote, scoring_winners

SOLVER_POLYTIME = "polytime"
SOLVER_ORACLE = "oracle"

SOLVER_MODELS = (SPModel.SINGLE_PEAKED, SPModel.SINGLE_PLATEAUED)

DEFAULT_ORACLE_BUDGET = 5_000_000


@dataclass(frozen=True)
class ScoringRule:
    vector: ScoringVector
    extension: Extension


@dataclass(frozen=True)
class EliminationVetoRule:
    """Elimination veto with the min rule, unique winner, lexicographic ties."""


Rule = ScoringRule | CopelandRule | EliminationVetoRule


@dataclass(frozen=True)
class CwcmInstance:
    candidates: tuple[Candidate, ...]
    nonmanipulators: tuple[WeightedVoter, ...]
    manipulator_weights: tuple[int, ...]
    preferred: int
    axis: Axis
    model: SPModel
    rule: Rule

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "nonmanipulators", tuple(self.nonmanipulators))
        object.__setattr__(
            self, "manipulator_weights", tuple(self.manipulator_weights)
        )
        base = self.base_profile()  # checks ids, names, and vote completeness
        if set(self.axis.order) != set(range(base.m)):
            raise ValueError("axis must order exactly the candidate set")
        if self.preferred not in self.axis.order:
            raise ValueError("preferred candidate must be on the axis")
        if any(w < 1 for w in self.manipulator_weights):
            raise ValueError("manipulator weights must be >= 1")
        for i, v in enumerate(self.nonmanipulators):
            if validate_vote(v.order, self.axis, self.model) is None:
                raise ValueError(
                    f"nonmanipulator {i} is not {self.model.value} for this axis"
                )

    @property
    def m(self) -> int:
        return len(self.candidates)

    def base_profile(self) -> Profile:
        return Profile(self.candidates, self.nonmanipulators)

    def profile_with(self, votes: Sequence[WeakOrder]) -> Profile:
        if len(votes) != len(self.manipulator_weights):
            raise ValueError("need one vote per manipulator")
        extra = tuple(
            WeightedVoter(v, w) for v, w in zip(votes, self.manipulator_weights)
        )
        return Profile(self.candidates, self.nonmanipulators + extra)


@dataclass(frozen=True)
class ManipulationResult:
    decision: bool
    witness: tuple[WeakOrder, ...] | None
    solver: str


def p_wins(instance: CwcmInstance, manipulator_votes: Sequence[WeakOrder]) -> bool:
    """Evaluate the instance's rule on nonmanipulators plus the given votes."""
    profile = instance.profile_with(manipulator_votes)
    rule = instance.rule
    if isinstance(rule, ScoringRule):
        return instance.preferred in scoring_winners(profile, rule.vector, rule.extension)
    if isinstance(rule, CopelandRule):
        return instance.preferred in copeland_winners(profile, rule)
    winner, _ = elimination_veto_winner(profile)
    return winner == instance.preferred


def verify_manipulation_result(instance: CwcmInstance, result: ManipulationResult) -> bool:
    """Witness soundness: votes are model-consistent and p actually wins."""
    if not result.decision:
        return result.witness is None
    if result.witness is None:
        return False
    if len(result.witness) != len(instance.manipulator_weights):
        return False
    for v in result.witness:
        if validate_vote(v, instance.axis, instance.model) is None:
            return False
    return p_wins(instance, result.witness)


# ------------------------------------------------------------------
# Ranking p uniquely first without shrinking any score lead.
# ------------------------------------------------------------------


def normalize_p_first(vote: WeakOrder, axis: Axis, model: SPModel, p: int) -> WeakOrder:
    """Rewrite a model-consistent vote so p is uniquely first.

    The rewrite keeps every group below p's group verbatim and rearranges
    p's group and the candidates above it into a strict chain: first the
    rest of p's flank, then the candidates that were above p, then the far
    flank of p's group, each segment ordered by distance from p.  For every
    scoring vector and extension this never decreases score(p) - score(c).
    """
    if validate_vote(vote, axis, model) is None:
        raise ValueError(f"vote is not {model.value} with respect to the axis")
    if vote.top_group == (p,):
        return vote
    ranks = vote.ranks()
    p_rank = ranks[p]
    group_p = set(vote.groups[p_rank])
    above = {c for c, r in ranks.items() if r < p_rank}
    below_groups = vote.groups[p_rank + 1 :]
    pos = axis.positions()
    if above:
        left_edge = min(pos[c] for c in above)
        right_edge = max(pos[c] for c in above)
        if pos[p] < left_edge:
            near = {c for c in group_p if pos[c] < left_edge}
            far = group_p - near
        else:
            near = {c for c in group_p if pos[c] > right_edge}
            far = group_p - near
    else:
        near, far = group_p, set()

    def by_distance(cands):
        return sorted(cands, key=lambda c: (abs(pos[c] - pos[p]), pos[c]))

    chain = by_distance(near - {p}) + by_distance(above) + by_distance(far)
    result = WeakOrder([(p,)] + [(c,) for c in chain] + list(below_groups))
    if validate_vote(result, axis, model) is None:  # pragma: no cover
        raise AssertionError("p-first rewrite left the model; this is a bug")
    return result


# ------------------------------------------------------------------
# Scoring rules.
# ------------------------------------------------------------------


def check_score_gap_condition(vector: ScoringVector, m1: int, m2: int) -> bool:
    """Gap-product test: do two uniform strategies decide this axis split?

    For every pair of positions i <= m1+1 and j <= m2+1 (both > 1) the
    product of the leads of the top value over positions i and j must not
    exceed the product of the drops to the next positions.
    """
    a = vector.alphas
    if m1 + m2 + 1 != len(a):
        raise ValueError("axis split must cover all candidates but one")
    for i in range(2, m1 + 2):
        for j in range(2, m2 + 2):
            lead = (a[0] - a[i - 1]) * (a[0] - a[j - 1])
            drop = (a[i - 1] - a[i]) * (a[j - 1] - a[j])
            if lead > drop:
                return False
    return True


def _flanks(axis: Axis, p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Candidates left and right of p, each ordered nearest first."""
    i = axis.positions()[p]
    return axis.order[:i][::-1], axis.order[i + 1 :]


def _chain(*parts: Sequence[int]) -> WeakOrder:
    return WeakOrder([(c,) for part in parts for c in part])


def _require(instance: CwcmInstance, rule_type, name: str):
    if not isinstance(instance.rule, rule_type):
        raise ValueError(f"this solver handles only {name} instances")
    if instance.model not in SOLVER_MODELS:
        raise NotApplicableError(
            f"polynomial-time solving is only available for "
            f"{' and '.join(m.value for m in SOLVER_MODELS)} instances"
        )


def solve_cwcm_scoring_sp(instance: CwcmInstance) -> ManipulationResult:
    """Decide a scoring-rule instance by trying the uniform strategies.

    Applicable when p is an axis endpoint (the p-first vote is forced), when
    every non-top position scores alike, when the top value reappears by the
    vector's middle, when the gap-product test passes for the axis split, or
    when the vector is flat strictly between its first and last entries with
    a top value at most twice the second.  Outside these cases a
    NotApplicableError points the caller at the oracle.
    """
    _require(instance, ScoringRule, "scoring-rule")
    vector: ScoringVector = instance.rule.vector
    ext: Extension = instance.rule.extension
    if vector.m != instance.m:
        raise ValueError("scoring vector length must match the candidate count")
    p = instance.preferred
    weights = instance.manipulator_weights
    if not weights:
        ok = p in scoring_winners(instance.base_profile(), vector, ext)
        return ManipulationResult(ok, () if ok else None, SOLVER_POLYTIME)

    lefts, rights = _flanks(instance.axis, p)
    m1, m2 = len(lefts), len(rights)
    if m1 == 0 or m2 == 0:
        strategies = [_chain((p,), lefts or rights)]
    else:
        a = vector.alphas
        m = vector.m
        floor_mid = (m - 1) // 2 + 1  # 0-based index of the 1-based floor((m-1)/2)+2
        base = a[m - 1]
        flat_tail = (
            a[0] - base <= 2 * (a[1] - base)
            and a[0] > a[1]
            and a[1] > base
            and a[1] == a[m - 2]
        )
        applicable = (
            a[1] == base
            or a[0] == a[floor_mid]
            or check_score_gap_condition(vector, m1, m2)
            or flat_tail
        )
        if not applicable:
            raise NotApplicableError(
                "scoring vector and axis split admit no uniform-strategy "
                "shortcut; use the oracle solver"
            )
        strategies = [_chain((p,), rights, lefts), _chain((p,), lefts, rights)]

    for vote in strategies:
        uniform = [vote] * len(weights)
        if p in scoring_winners(instance.profile_with(uniform), vector, ext):
            return ManipulationResult(True, tuple(uniform), SOLVER_POLYTIME)
    return ManipulationResult(False, None, SOLVER_POLYTIME)


# ------------------------------------------------------------------
# Elimination veto.
# ------------------------------------------------------------------


def _edge_elimination_orders(axis: Axis, p: int) -> Iterator[tuple[int, ...]]:
    """Orders removing an axis endpoint each round and keeping p to the end."""
    ax = axis.order

    def walk(lo: int, hi: int, removed: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if lo == hi:
            yield removed + (ax[lo],)
            return
        if ax[lo] != p:
            yield from walk(lo + 1, hi, removed + (ax[lo],))
        if ax[hi] != p:
            yield from walk(lo, hi - 1, removed + (ax[hi],))

    yield from walk(0, len(ax) - 1, ())


def solve_cwcm_elimination_veto(instance: CwcmInstance) -> ManipulationResult:
    """Try every reachable elimination order, manipulators voting its reverse.

    Only axis endpoints can be vetoed out of a peaked electorate, so at most
    2^(m-1) elimination orders end at p, and the reverse of each is a
    single-peaked total order every manipulator can cast.
    """
    _require(instance, EliminationVetoRule, "elimination-veto")
    p = instance.preferred
    weights = instance.manipulator_weights
    if instance.m == 1:
        uniform = (WeakOrder(((p,),)),) * len(weights)
        return ManipulationResult(True, uniform, SOLVER_POLYTIME)
    if not weights:
        winner, _ = elimination_veto_winner(instance.base_profile())
        ok = winner == p
        return ManipulationResult(ok, () if ok else None, SOLVER_POLYTIME)
    for order in _edge_elimination_orders(instance.axis, p):
        vote = _chain(tuple(reversed(order)))
        uniform = [vote] * len(weights)
        winner, _ = elimination_veto_winner(instance.profile_with(uniform))
        if winner == p:
            return ManipulationResult(True, tuple(uniform), SOLVER_POLYTIME)
    return ManipulationResult(False, None, SOLVER_POLYTIME)


# ------------------------------------------------------------------
# Copeland(alpha).
# ------------------------------------------------------------------


def break_ties_along_axis(order: WeakOrder, axis: Axis, increasing: bool) -> WeakOrder:
    """Total order refining ``order`` by axis position inside each group."""
    pos = axis.positions()
    singles = []
    for g in order.groups:
        for c in sorted(g, key=lambda c: pos[c], reverse=not increasing):
            singles.append((c,))
    return WeakOrder(singles)


def double_break_ties(profile: Profile, axis: Axis) -> Profile:
    """Replace each voter by its two axis-order tie breakings, same weight.

    Every pairwise margin of the result is exactly twice the original's.
    """
    voters = []
    for v in profile.voters:
        voters.append(WeightedVoter(break_ties_along_axis(v.order, axis, True), v.weight))
        voters.append(WeightedVoter(break_ties_along_axis(v.order, axis, False), v.weight))
    return Profile(profile.candidates, tuple(voters))


def solve_cwcm_copeland_sp(instance: CwcmInstance) -> ManipulationResult:
    """Copeland manipulation via doubling plus uniform p-first total orders.

    Doubling the electorate into tie-broken total orders and the manipulator
    weights leaves the winners unchanged; a uniform single-peaked total
    order with p uniquely first then suffices whenever any manipulation
    does.  Accepts alpha = 1 as well: peaked electorates always have weak
    Condorcet winners, so p wins there exactly when ranking p first
    everywhere lifts all its margins to non-negative.
    """
    _require(instance, CopelandRule, "Copeland")
    p = instance.preferred
    weights = instance.manipulator_weights
    if not weights:
        ok = p in copeland_winners(instance.base_profile(), instance.rule)
        return ManipulationResult(ok, () if ok else None, SOLVER_POLYTIME)
    doubled = double_break_ties(instance.base_profile(), instance.axis)
    doubled_weights = [2 * w for w in weights]
    for vote in enumerate_consistent_votes(
        instance.axis, SPModel.SINGLE_PEAKED, p_first=p, total_only=True
    ):
        trial = doubled.with_voters(
            WeightedVoter(vote, w) for w in doubled_weights
        )
        if p in copeland_winners(trial, instance.rule):
            uniform = (vote,) * len(weights)
            return ManipulationResult(True, uniform, SOLVER_POLYTIME)
    return ManipulationResult(False, None, SOLVER_POLYTIME)


# ------------------------------------------------------------------
# Exhaustive oracle.
# ------------------------------------------------------------------


def _weight_classes(weights: Sequence[int]) -> list[tuple[int, int]]:
    # Heaviest class first: deterministic order that also prunes earlier.
    return [(w, weights.count(w)) for w in sorted(set(weights), reverse=True)]


def _multiset_search(classes, num_votes, push, pop, prune, accept):
    chosen: list[tuple[int, ...] | None] = [None] * len(classes)

    def rec(ci: int) -> bool:
        if ci == len(classes):
            return accept()
        _, cnt = classes[ci]
        for combo in combinations_with_replacement(range(num_votes), cnt):
            chosen[ci] = combo
            push(ci, combo)
            ok = not prune(ci) and rec(ci + 1)
            pop(ci, combo)
            if ok:
                return True
        chosen[ci] = None
        return False

    return chosen if rec(0) else None


def _witness_from_chosen(
    weights: Sequence[int],
    classes: Sequence[tuple[int, int]],
    chosen: Sequence[tuple[int, ...]],
    votes: Sequence[WeakOrder],
) -> tuple[WeakOrder, ...]:
    iters = {w: iter(combo) for (w, _), combo in zip(classes, chosen)}
    return tuple(votes[next(iters[w])] for w in weights)


def solve_cwcm_oracle(
    instance: CwcmInstance,
    budget: int = DEFAULT_ORACLE_BUDGET,
    p_first_only: bool | None = None,
) -> ManipulationResult:
    """Exhaustively assign every manipulator a model-consistent vote.

    For scoring rules the search space defaults to votes ranking p uniquely
    first, which never loses a winnable instance; for Copeland and
    elimination veto all consistent votes are tried.  Equal-weight
    manipulators are interchangeable, so assignments are enumerated as
    multisets per weight class.  The first witness in the fixed enumeration
    order is returned.
    """
    p = instance.preferred
    if p_first_only is None:
        p_first_only = isinstance(instance.rule, ScoringRule)
    weights = instance.manipulator_weights
    if not weights:
        ok = p_wins(instance, ())
        return ManipulationResult(ok, () if ok else None, SOLVER_ORACLE)
    votes = enumerate_consistent_votes(
        instance.axis, instance.model, p_first=p if p_first_only else None
    )
    classes = _weight_classes(weights)
    estimate = 1
    for _, cnt in classes:
        estimate *= comb(len(votes) + cnt - 1, cnt)
        if estimate > budget:
            raise CapacityError(
                f"oracle would enumerate more than {budget} assignments"
            )
    rule = instance.rule
    if isinstance(rule, ScoringRule):
        chosen = _oracle_scoring(instance, votes, classes)
    elif isinstance(rule, CopelandRule):
        chosen = _oracle_copeland(instance, votes, classes)
    else:
        chosen = _oracle_elimination(instance, votes, classes)
    if chosen is None:
        return ManipulationResult(False, None, SOLVER_ORACLE)
    witness = _witness_from_chosen(weights, classes, chosen, votes)
    return ManipulationResult(True, witness, SOLVER_ORACLE)


def _oracle_scoring(instance, votes, classes):
    rule: ScoringRule = instance.rule
    p = instance.preferred
    others = [c for c in range(instance.m) if c != p]
    base = score_profile(instance.base_profile(), rule.vector, rule.extension)
    tables = [score_vote(v, rule.vector, rule.extension) for v in votes]
    # Clear denominators once so the inner loops stay on integers.
    den = 1
    for t in [base] + tables:
        den = lcm(den, *(Fraction(s).denominator for s in t.values()))
    base_p = int(base[p] * den)
    base_o = [int(base[c] * den) for c in others]
    unit_p = [int(t[p] * den) for t in tables]
    unit_o = [[int(t[c] * den) for c in others] for t in tables]
    total_weight = sum(w * cnt for w, cnt in classes)
    # Weight (including the current class) still unassigned below each level.
    remaining = []
    acc = total_weight
    for w, cnt in classes:
        remaining.append(acc)
        acc -= w * cnt

    totals = [0] * len(others)
    p_total = [0]

    def push(ci, combo):
        w = classes[ci][0]
        for vi in combo:
            p_total[0] += w * unit_p[vi]
            row = unit_o[vi]
            for k in range(len(others)):
                totals[k] += w * row[k]

    def pop(ci, combo):
        w = classes[ci][0]
        for vi in combo:
            p_total[0] -= w * unit_p[vi]
            row = unit_o[vi]
            for k in range(len(others)):
                totals[k] -= w * row[k]

    # Rival scores only grow as votes are assigned, and p's final score is at
    # most base plus its best per-unit value, so capping each rival against
    # that upper bound is a sound prune (round down can pay p less than the
    # top value, hence the bound rather than an exact cap).
    best_p_unit = max(unit_p)
    caps = [base_p + best_p_unit * total_weight - b for b in base_o]
    floors = [min(u[k] for u in unit_o) for k in range(len(others))]

    def prune(ci):
        rest = remaining[ci + 1] if ci + 1 < len(classes) else 0
        for k in range(len(others)):
            if totals[k] + floors[k] * rest > caps[k]:
                return True
        return False

    def accept():
        final_p = base_p + p_total[0]
        return all(totals[k] + base_o[k] <= final_p for k in range(len(others)))

    return _multiset_search(classes, len(votes), push, pop, prune, accept)


def _oracle_copeland(instance, votes, classes):
    rule: CopelandRule = instance.rule
    p = instance.preferred
    m = instance.m
    base = instance.base_profile()
    margins = margins_from_rank_maps(
        [v.order.ranks() for v in base.voters], [v.weight for v in base.voters], m
    )
    contribs = [margins_from_rank_maps([v.ranks()], [1], m) for v in votes]
    num, den = rule.alpha.numerator, rule.alpha.denominator

    def push(ci, combo):
        w = classes[ci][0]
        for vi in combo:
            cm = contribs[vi]
            for a in range(m):
                row, crow = margins[a], cm[a]
                for b in range(m):
                    row[b] += w * crow[b]

    def pop(ci, combo):
        w = classes[ci][0]
        for vi in combo:
            cm = contribs[vi]
            for a in range(m):
                row, crow = margins[a], cm[a]
                for b in range(m):
                    row[b] -= w * crow[b]

    def score_times_den(c):
        wins = ties = 0
        row = margins[c]
        for d in range(m):
            if d == c:
                continue
            if row[d] > 0:
                wins += 1
            elif row[d] == 0:
                ties += 1
        return wins * den + ties * num

    def accept():
        sp = score_times_den(p)
        return all(score_times_den(c) <= sp for c in range(m) if c != p)

    return _multiset_search(classes, len(votes), push, pop, lambda ci: False, accept)


def _oracle_elimination(instance, votes, classes):
    p = instance.preferred
    base = instance.base_profile()
    rank_maps = [v.order.ranks() for v in base.voters]
    weight_list = [v.weight for v in base.voters]
    vote_ranks = [v.ranks() for v in votes]
    names = base.names
    ids = range(instance.m)

    def push(ci, combo):
        w = classes[ci][0]
        for vi in combo:
            rank_maps.append(vote_ranks[vi])
            weight_list.append(w)

    def pop(ci, combo):
        for _ in combo:
            rank_maps.pop()
            weight_list.pop()

    def accept():
        winner, _ = run_elimination(rank_maps, weight_list, names, ids)
        return winner == p

    return _multiset_search(classes, len(votes), push, pop, lambda ci: False, accept)


def solve_cwcm(instance: CwcmInstance, solver: str = "auto") -> ManipulationResult:
    """Dispatch to the matching polynomial-time solver or the oracle.

    ``auto`` falls back to the oracle when the polynomial-time solver
    declares itself not applicable; ``polytime`` surfaces that error.
    """
    if solver == "oracle":
        return solve_cwcm_oracle(instance)
    if solver not in ("auto", "polytime"):
        raise ValueError(f"unknown solver {solver!r}")
    try:
        if isinstance(instance.rule, ScoringRule):
            return solve_cwcm_scoring_sp(instance)
        if isinstance(instance.rule, CopelandRule):
            return solve_cwcm_copeland_sp(instance)
        return solve_cwcm_elimination_veto(instance)
    except NotApplicableError:
        if solver == "auto":
            return solve_cwcm_oracle(instance)
        raise


# ------------------------------------------------------------------
# Partition and its reduction to five-candidate scoring manipulation.
# ------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionInstance:
    """Positive integers to split into two equal-sum halves."""

    items: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items or any(k < 1 for k in self.items):
            raise ValueError("items must be positive integers")

    @property
    def half_sum(self) -> Fraction:
        return Fraction(sum(self.items), 2)


def solve_partition(inst: PartitionInstance) -> bool:
    """Pseudo-polynomial subset-sum check; an odd total is immediately no."""
    total = sum(inst.items)
    if total % 2:
        return False
    reachable = 1
    for k in inst.items:
        reachable |= reachable << k
    return bool((reachable >> (total // 2)) & 1)


PARTITION_CANDIDATE_NAMES = ("a1", "p", "b1", "b2", "b3")


def reduce_partition_to_cwcm(inst: PartitionInstance, ext: Extension) -> CwcmInstance:
    """Five-candidate scoring instance equivalent to the Partition question.

    The axis is a1 < p < b1 < b2 < b3, the vector is (4,3,2,0,0), and the
    manipulator weights are four times the items.  Two nonmanipulators pin
    the scores so p can win exactly when half the manipulator weight votes
    each of the two optimal orders; min needs slightly heavier
    nonmanipulators than the other rules.  An odd item total makes those
    weights fractional under min, so everything is doubled, which cannot
    change the decision.
    """
    K = inst.half_sum
    if ext is Extension.MIN:
        big, small = 24 * K, 9 * K
    else:
        big, small = 20 * K, 8 * K
    manipulators = [4 * k for k in inst.items]
    if big.denominator != 1 or small.denominator != 1:
        big, small = 2 * big, 2 * small
        manipulators = [2 * w for w in manipulators]
    candidates = tuple(
        Candidate(i, n) for i, n in enumerate(PARTITION_CANDIDATE_NAMES)
    )
    down = WeakOrder([(0,), (1,), (2,), (3,), (4,)])  # a1 > p > b1 > b2 > b3
    up = WeakOrder([(2,), (3,), (4,), (1,), (0,)])  # b1 > b2 > b3 > p > a1
    return CwcmInstance(
        candidates=candidates,
        nonmanipulators=(
            WeightedVoter(down, int(big)),
            WeightedVoter(up, int(small)),
        ),
        manipulator_weights=tuple(manipulators),
        preferred=1,
        axis=Axis((0, 1, 2, 3, 4)),
        model=SPModel.SINGLE_PEAKED,
        rule=ScoringRule(ScoringVector((4, 3, 2, 0, 0)), ext),
    )


# ------------------------------------------------------------------
# Random instances for solver-versus-oracle sweeps.
# ------------------------------------------------------------------

SWEEP_FAMILIES = ("scoring", "copeland", "elimination")


def random_instance(
    rng: random.Random,
    family: str = "scoring",
    m_choices: Sequence[int] = (3, 4),
    models: Sequence[SPModel] = SOLVER_MODELS,
    max_nonmanipulators: int = 3,
    max_manipulators: int = 3,
    max_weight: int = 2,
    vector_pool: Sequence[ScoringVector] | None = None,
    alphas: Sequence[Fraction] = (Fraction(0), Fraction(1, 2), Fraction(1)),
) -> CwcmInstance:
    """One random model-consistent instance for the given rule family."""
    if family not in SWEEP_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    m = rng.choice(list(m_choices))
    candidates = tuple(Candidate(i, chr(ord("a") + i)) for i in range(m))
    ids = list(range(m))
    rng.shuffle(ids)
    axis = Axis(tuple(ids))
    p = rng.randrange(m)
    model = rng.choice(list(models))
    pool = enumerate_consistent_votes(axis, model)
    nonmanipulators = tuple(
        WeightedVoter(rng.choice(pool), rng.randint(1, max_weight))
        for _ in range(rng.randint(0, max_nonmanipulators))
    )
    manipulator_weights = tuple(
        rng.randint(1, max_weight) for _ in range(rng.randint(0, max_manipulators))
    )
    rule: Rule
    if family == "scoring":
        if vector_pool:
            vector = rng.choice(list(vector_pool))
        else:
            vector = rng.choice(
                [ScoringVector.borda(m), ScoringVector.veto(m), ScoringVector.plurality(m)]
            )
        rule = ScoringRule(vector, rng.choice(list(Extension)))
    elif family == "copeland":
        rule = CopelandRule(rng.choice(list(alphas)))
    else:
        rule = EliminationVetoRule()
    return CwcmInstance(
        candidates=candidates,
        nonmanipulators=nonmanipulators,
        manipulator_weights=manipulator_weights,
        preferred=p,
        axis=axis,
        model=model,
        rule=rule,
    )


# ------------------------------------------------------------------
# JSON forms.
# ------------------------------------------------------------------

_MODEL_BY_NAME = {m.value: m for m in SPModel}
_EXT_BY_NAME = {e.value: e for e in Extension}


def rule_to_json_dict(rule: Rule) -> dict:
    if isinstance(rule, ScoringRule):
        return {
            "kind": "scoring",
            "vector": list(rule.vector.alphas),
            "extension": rule.extension.value,
        }
    if isinstance(rule, CopelandRule):
        return {"kind": "copeland", "alpha": str(rule.alpha)}
    return {"kind": "elimination-veto"}


def rule_from_json_dict(data: dict) -> Rule:
    kind = data.get("kind")
    if kind == "scoring":
        return ScoringRule(
            ScoringVector(tuple(data["vector"])), _EXT_BY_NAME[data["extension"]]
        )
    if kind == "copeland":
        return CopelandRule(Fraction(data["alpha"]))
    if kind == "elimination-veto":
        return EliminationVetoRule()
    raise ValueError(f"unknown rule kind {kind!r}")


def _groups_to_names(order: WeakOrder, names: Sequence[str]) -> list[list[str]]:
    return [[names[c] for c in g] for g in order.groups]


def _groups_from_names(groups: list[list[str]], id_by_name: dict[str, int]) -> WeakOrder:
    return WeakOrder([[id_by_name[n] for n in g] for g in groups])


def instance_to_json_dict(instance: CwcmInstance) -> dict:
    names = [c.name for c in instance.candidates]
    return {
        "candidates": names,
        "axis": [names[c] for c in instance.axis.order],
        "model": instance.model.value,
        "rule": rule_to_json_dict(instance.rule),
        "nonmanipulators": [
            {"weight": v.weight, "groups": _groups_to_names(v.order, names)}
            for v in instance.nonmanipulators
        ],
        "manipulator_weights": list(instance.manipulator_weights),
        "preferred": names[instance.preferred],
    }


def instance_from_json_dict(data: dict) -> CwcmInstance:
    names = list(data["candidates"])
    by_name = {n: i for i, n in enumerate(names)}
    return CwcmInstance(
        candidates=tuple(Candidate(i, n) for i, n in enumerate(names)),
        nonmanipulators=tuple(
            WeightedVoter(_groups_from_names(v["groups"], by_name), v["weight"])
            for v in data["nonmanipulators"]
        ),
        manipulator_weights=tuple(data["manipulator_weights"]),
        preferred=by_name[data["preferred"]],
        axis=Axis(tuple(by_name[n] for n in data["axis"])),
        model=_MODEL_BY_NAME[data["model"]],
        rule=rule_from_json_dict(data["rule"]),
    )


def result_to_json_dict(result: ManipulationResult, candidates: Sequence[Candidate]) -> dict:
    names = [c.name for c in candidates]
    witness = None
    if result.witness is not None:
        witness = [_groups_to_names(v, names) for v in result.witness]
    return {"decision": result.decision, "witness": witness, "solver": result.solver}
