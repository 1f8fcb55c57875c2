"""Ballot, voter, and profile data model for elections with tied votes.

Votes are weak orders: ordered partitions of the candidate set into
indifference groups, most preferred group first.  All values here are
immutable and hashable, and every operation is a pure function, so they can
be shared freely across threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ValidationError


@dataclass(frozen=True)
class Candidate:
    """A candidate with a dense integer id and a display name."""

    id: int
    name: str


class OrderClass(Enum):
    TOTAL = "total"
    TOP_ORDER = "top-order"
    BOTTOM_ORDER = "bottom-order"
    WEAK = "weak"


class WeakOrder:
    """A ranking with ties, stored as sorted id tuples per indifference group.

    ``groups[0]`` holds the most preferred candidates.  The canonical storage
    makes equal orders compare and hash equal regardless of how the groups
    were listed.
    """

    __slots__ = ("groups",)

    def __init__(self, groups: Iterable[Iterable[int]]):
        canon = tuple(tuple(sorted(g)) for g in groups)
        if not canon or any(not g for g in canon):
            raise ValueError("every indifference group must be non-empty")
        seen: set[int] = set()
        for g in canon:
            for c in g:
                if c in seen:
                    raise ValueError(f"candidate {c} appears in two groups")
                seen.add(c)
        object.__setattr__(self, "groups", canon)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("WeakOrder is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, WeakOrder) and self.groups == other.groups

    def __hash__(self) -> int:
        return hash(self.groups)

    def __repr__(self) -> str:
        return "WeakOrder(%s)" % " > ".join(
            "~".join(str(c) for c in g) for g in self.groups
        )

    @property
    def size(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def candidate_ids(self) -> frozenset[int]:
        return frozenset(c for g in self.groups for c in g)

    def ranks(self) -> dict[int, int]:
        """Map each candidate to its group index (0 = most preferred)."""
        return {c: i for i, g in enumerate(self.groups) for c in g}

    @property
    def top_group(self) -> tuple[int, ...]:
        return self.groups[0]

    def prefers(self, a: int, b: int) -> bool:
        r = self.ranks()
        return r[a] < r[b]

    def tied(self, a: int, b: int) -> bool:
        r = self.ranks()
        return r[a] == r[b]

    @property
    def is_total(self) -> bool:
        return all(len(g) == 1 for g in self.groups)

    def restrict(self, keep: Iterable[int]) -> "WeakOrder":
        """Delete all candidates outside ``keep``; emptied groups are dropped."""
        keep_set = set(keep)
        groups = [tuple(c for c in g if c in keep_set) for g in self.groups]
        return WeakOrder([g for g in groups if g])


def classify_order(order: WeakOrder) -> OrderClass:
    """Most specific class of an order; a tie-free order is always TOTAL.

    An all-tied single-group order satisfies the top-order and bottom-order
    conditions simultaneously; it is reported as TOP_ORDER.
    """
    sizes = [len(g) for g in order.groups]
    if all(s == 1 for s in sizes):
        return OrderClass.TOTAL
    if all(s == 1 for s in sizes[:-1]):
        return OrderClass.TOP_ORDER
    if all(s == 1 for s in sizes[1:]):
        return OrderClass.BOTTOM_ORDER
    return OrderClass.WEAK


@dataclass(frozen=True)
class WeightedVoter:
    """A weak order cast with a positive integer weight."""

    order: WeakOrder
    weight: int

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("voter weight must be >= 1")


@dataclass(frozen=True)
class Profile:
    """A candidate set plus weighted voters; the election input everywhere."""

    candidates: tuple[Candidate, ...]
    voters: tuple[WeightedVoter, ...]

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "voters", tuple(self.voters))
        ids = [c.id for c in self.candidates]
        if ids != list(range(len(ids))):
            raise ValueError("candidate ids must be dense: 0..m-1 in order")
        names = [c.name for c in self.candidates]
        if len(set(names)) != len(names) or any(not n for n in names):
            raise ValueError("candidate names must be distinct and non-empty")
        universe = frozenset(ids)
        for i, v in enumerate(self.voters):
            if v.order.candidate_ids != universe:
                raise ValueError(f"voter {i} does not rank exactly the candidate set")

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.candidates)

    @property
    def total_weight(self) -> int:
        return sum(v.weight for v in self.voters)

    def id_of(self, name: str) -> int:
        for c in self.candidates:
            if c.name == name:
                return c.id
        raise KeyError(name)

    def with_voters(self, extra: Iterable[WeightedVoter]) -> "Profile":
        return Profile(self.candidates, self.voters + tuple(extra))

    @staticmethod
    def from_named_votes(
        names: Sequence[str], votes: Iterable[tuple[int, str]]
    ) -> "Profile":
        """Build a profile from vote strings like ``"a~b > c"``.

        ``votes`` is an iterable of (weight, vote text) pairs.
        """
        candidates = tuple(Candidate(i, n) for i, n in enumerate(names))
        by_name = {n: i for i, n in enumerate(names)}
        voters = tuple(
            WeightedVoter(order_from_string(text, by_name), w) for w, text in votes
        )
        return Profile(candidates, voters)


def order_from_string(text: str, id_by_name: Mapping[str, int]) -> WeakOrder:
    """Parse ``"a~b > c"`` style vote text into a WeakOrder."""
    groups = []
    for part in text.split(">"):
        members = [tok.strip() for tok in part.split("~")]
        try:
            groups.append([id_by_name[tok] for tok in members])
        except KeyError as exc:
            raise ValueError(f"unknown candidate {exc.args[0]!r} in {text!r}") from None
    return WeakOrder(groups)


# ------------------------------------------------------------------
# Serialization: native JSON and PrefLib-style text with tied groups.
# ------------------------------------------------------------------

FORMAT_JSON = "native-json"
FORMAT_PREFLIB = "preflib-toi"

_ALT_COUNT_RE = re.compile(r"#\s*NUMBER\s+ALTERNATIVES\s*:\s*(\d+)", re.IGNORECASE)
_ALT_NAME_RE = re.compile(r"#\s*ALTERNATIVE\s+NAME\s+(\d+)\s*:\s*(.*)", re.IGNORECASE)


def profile_to_json_dict(profile: Profile) -> dict:
    return {
        "candidates": list(profile.names),
        "voters": [
            {"weight": v.weight, "groups": [list(g) for g in v.order.groups]}
            for v in profile.voters
        ],
    }


def profile_from_json_dict(data: dict) -> Profile:
    try:
        names = data["candidates"]
        voters = [
            WeightedVoter(WeakOrder(entry["groups"]), entry["weight"])
            for entry in data["voters"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad profile JSON: {exc}") from exc
    candidates = tuple(Candidate(i, n) for i, n in enumerate(names))
    return Profile(candidates, tuple(voters))


def _parse_preflib(text: str) -> Profile:
    m: int | None = None
    declared_names: dict[int, str] = {}
    ballots: list[tuple[int, WeakOrder]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            cm = _ALT_COUNT_RE.match(line)
            if cm:
                m = int(cm.group(1))
                continue
            nm = _ALT_NAME_RE.match(line)
            if nm:
                declared_names[int(nm.group(1))] = nm.group(2).strip()
            continue
        if m is None:
            raise ParseError("ballot line before NUMBER ALTERNATIVES header", lineno)
        if ":" not in line:
            raise ParseError("expected 'weight: ranking'", lineno)
        weight_text, _, body = line.partition(":")
        try:
            weight = int(weight_text)
        except ValueError:
            raise ParseError(f"bad multiplicity {weight_text!r}", lineno) from None
        if weight < 1:
            raise ParseError(f"multiplicity must be >= 1, got {weight}", lineno)
        groups = _parse_preflib_ranking(body, lineno)
        for g in groups:
            for c in g:
                if not (1 <= c <= m):
                    raise ValidationError(
                        f"line {lineno}: candidate {c} not among the {m} declared"
                    )
        order = WeakOrder([[c - 1 for c in g] for g in groups])
        if order.size != m:
            raise ValidationError(
                f"line {lineno}: incomplete ballot; all {m} candidates must appear"
            )
        ballots.append((weight, order))
    if m is None:
        raise ParseError("missing NUMBER ALTERNATIVES header")
    names = [declared_names.get(i, f"c{i}") for i in range(1, m + 1)]
    if len(set(names)) != m:
        raise ValidationError("duplicate candidate names in header")
    candidates = tuple(Candidate(i, n) for i, n in enumerate(names))
    voters = tuple(WeightedVoter(order, w) for w, order in ballots)
    return Profile(candidates, voters)


def _parse_preflib_ranking(body: str, lineno: int) -> list[list[int]]:
    groups: list[list[int]] = []
    i, n = 0, len(body)
    while i < n:
        ch = body[i]
        if ch in " \t,":
            i += 1
            continue
        if ch == "{":
            j = body.find("}", i)
            if j < 0:
                raise ParseError("unclosed '{' in ranking", lineno)
            inner = body[i + 1 : j]
            try:
                group = [int(tok) for tok in inner.split(",") if tok.strip()]
            except ValueError:
                raise ParseError(f"bad tied group {{{inner}}}", lineno) from None
            if not group:
                raise ParseError("empty tied group", lineno)
            groups.append(group)
            i = j + 1
        else:
            j = i
            while j < n and body[j] not in ",{":
                j += 1
            tok = body[i:j].strip()
            try:
                groups.append([int(tok)])
            except ValueError:
                raise ParseError(f"bad candidate number {tok!r}", lineno) from None
            i = j
    if not groups:
        raise ParseError("empty ranking", lineno)
    return groups


def _serialize_preflib(profile: Profile) -> str:
    lines = [f"# NUMBER ALTERNATIVES: {profile.m}"]
    for c in profile.candidates:
        lines.append(f"# ALTERNATIVE NAME {c.id + 1}: {c.name}")
    for v in profile.voters:
        parts = []
        for g in v.order.groups:
            nums = ",".join(str(c + 1) for c in g)
            parts.append(nums if len(g) == 1 else "{" + nums + "}")
        lines.append(f"{v.weight}: " + ",".join(parts))
    return "\n".join(lines) + "\n"


def parse_profile(text: str | bytes, format: str = FORMAT_JSON) -> Profile:
    """Parse a profile from ``native-json`` or ``preflib-toi`` text."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == FORMAT_JSON:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc), exc.lineno) from exc
        return profile_from_json_dict(data)
    if format == FORMAT_PREFLIB:
        return _parse_preflib(text)
    raise ValueError(f"unknown profile format {format!r}")


def serialize_profile(profile: Profile, format: str = FORMAT_JSON) -> str:
    """Deterministic text for a profile; inverse of parse_profile on JSON."""
    if format == FORMAT_JSON:
        return json.dumps(profile_to_json_dict(profile))
    if format == FORMAT_PREFLIB:
        return _serialize_preflib(profile)
    raise ValueError(f"unknown profile format {format!r}")
