"""Finite ground sets, their subsets, and families of subsets.

A subset of the n-point ground set is an n-bit mask.  A family of subsets (a
point of the cube 2^P(X)) is a 2^n-bit word whose bit m says whether the
subset with mask m belongs to the family.  Meet, join and order of the cube
are then single word operations (AND, OR, submask test), and exhaustive
enumeration of all families is a counter loop.  Encodings are canonical, so
word equality is extensional equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_POINTS = 5          # individual values stay small
MAX_SWEEP_POINTS = 4    # 2^(2^n) families must be enumerable


@dataclass(frozen=True)
class GroundSet:
    """The set {0, .., n-1} of points."""

    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_POINTS:
            raise ValueError(f"ground set size must be 1..{MAX_POINTS}, got {self.n}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_subsets(self) -> int:
        return 1 << self.n

    def subset_masks(self) -> range:
        return range(1 << self.n)

    def require_sweepable(self) -> None:
        if self.n > MAX_SWEEP_POINTS:
            raise ValueError(
                f"exhaustive sweep needs n <= {MAX_SWEEP_POINTS}, got {self.n}"
            )

    def pointset(self, points: Iterable[int]) -> "PointSet":
        return PointSet.from_points(self, points)


@dataclass(frozen=True)
class PointSet:
    """A subset of a ground set, encoded as an n-bit mask."""

    universe: GroundSet
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= self.universe.full_mask:
            raise ValueError(f"mask {self.mask} out of range for n={self.universe.n}")

    @classmethod
    def from_points(cls, universe: GroundSet, points: Iterable[int]) -> "PointSet":
        mask = 0
        for p in points:
            if not 0 <= p < universe.n:
                raise ValueError(f"point {p} out of range for n={universe.n}")
            mask |= 1 << p
        return cls(universe, mask)

    def points(self) -> list[int]:
        return [p for p in range(self.universe.n) if (self.mask >> p) & 1]

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, p: int) -> bool:
        return 0 <= p < self.universe.n and bool((self.mask >> p) & 1)

    def __and__(self, other: "PointSet") -> "PointSet":
        _same_universe(self, other)
        return PointSet(self.universe, self.mask & other.mask)

    def __or__(self, other: "PointSet") -> "PointSet":
        _same_universe(self, other)
        return PointSet(self.universe, self.mask | other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.universe, self.universe.full_mask ^ self.mask)

    def __le__(self, other: "PointSet") -> bool:
        _same_universe(self, other)
        return self.mask & other.mask == self.mask

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.universe.full_mask

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self.points())) + "}"


class Family:
    """A set of subsets of the ground set: one point of the cube 2^P(X)."""

    __slots__ = ("universe", "word")

    def __init__(self, universe: GroundSet, word: int):
        if not 0 <= word < (1 << universe.num_subsets):
            raise ValueError(f"family word out of range for n={universe.n}")
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("Family values are immutable")

    @classmethod
    def from_masks(cls, universe: GroundSet, masks: Iterable[int]) -> "Family":
        word = 0
        for m in masks:
            if not 0 <= m <= universe.full_mask:
                raise ValueError(f"subset mask {m} out of range for n={universe.n}")
            word |= 1 << m
        return cls(universe, word)

    @classmethod
    def from_pointsets(cls, universe: GroundSet, sets: Iterable[PointSet]) -> "Family":
        return cls.from_masks(universe, (s.mask for s in sets))

    # -- membership ----------------------------------------------------------

    def contains_mask(self, mask: int) -> bool:
        return bool((self.word >> mask) & 1)

    def __contains__(self, s: PointSet) -> bool:
        _same_universe(self, s)
        return self.contains_mask(s.mask)

    def member_masks(self) -> list[int]:
        return [m for m in self.universe.subset_masks() if (self.word >> m) & 1]

    def members(self) -> list[PointSet]:
        return [PointSet(self.universe, m) for m in self.member_masks()]

    def __len__(self) -> int:
        return bin(self.word).count("1")

    # -- the cube's lattice structure -----------------------------------------

    def meet(self, other: "Family") -> "Family":
        _same_universe(self, other)
        return Family(self.universe, self.word & other.word)

    def join(self, other: "Family") -> "Family":
        _same_universe(self, other)
        return Family(self.universe, self.word | other.word)

    def leq(self, other: "Family") -> bool:
        _same_universe(self, other)
        return self.word | other.word == other.word

    __and__ = meet
    __or__ = join
    __le__ = leq

    def __lt__(self, other: "Family") -> bool:
        return self.word != other.word and self.leq(other)

    def with_mask(self, mask: int) -> "Family":
        return Family(self.universe, self.word | (1 << mask))

    def without_mask(self, mask: int) -> "Family":
        return Family(self.universe, self.word & ~(1 << mask))

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.universe == other.universe and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.universe.n, self.word))

    def __repr__(self) -> str:
        return f"Family(n={self.universe.n}, {{{', '.join(map(repr, self.members()))}}})"

    # -- JSON -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.universe.n,
            "sets": [list(s.points()) for s in self.members()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Family":
        if not isinstance(data, dict) or set(data) != {"n", "sets"}:
            raise ValueError("family JSON needs exactly the keys 'n' and 'sets'")
        universe = GroundSet(int(data["n"]))
        word = 0
        for entry in data["sets"]:
            if not isinstance(entry, list):
                raise ValueError(f"each set must be a list of points, got {entry!r}")
            if entry != sorted(set(entry)):
                raise ValueError(f"points must be sorted and duplicate-free: {entry}")
            mask = 0
            for p in entry:
                if not isinstance(p, int) or not 0 <= p < universe.n:
                    raise ValueError(f"point {p!r} out of range for n={universe.n}")
                mask |= 1 << p
            if (word >> mask) & 1:
                raise ValueError(f"duplicate set {entry} in family JSON")
            word |= 1 << mask
        return cls(universe, word)


def family_meet(a: Family, b: Family) -> Family:
    return a.meet(b)


def family_join(a: Family, b: Family) -> Family:
    return a.join(b)


def family_leq(a: Family, b: Family) -> bool:
    return a.leq(b)


def enumerate_families(universe: GroundSet) -> Iterator[Family]:
    """All 2^(2^n) families in increasing word order (n <= 4 only)."""
    universe.require_sweepable()
    for word in range(1 << universe.num_subsets):
        yield Family(universe, word)


def _same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise ValueError(f"universe mismatch: n={a.universe.n} vs n={b.universe.n}")
