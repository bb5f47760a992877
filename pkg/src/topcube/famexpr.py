"""Symbolic families of subsets of the naturals with decidable membership.

A family expression denotes a (possibly uncountable) collection of subsets of
the naturals, each subset an eventually periodic UPSet.  The grammar is
closed and every variant admits an exact membership test:

  Explicit(members)        the listed sets
  DownPow(s)               all subsets of s
  NearDown(s)              all sets whose part outside s is finite
  TopGen(subbase)          the topology generated: arbitrary unions of finite
                           intersections of subbase sets, with the empty set
                           and the whole space adjoined
  LatGen(gens)             closure of gens under binary intersection/union
  LatGenSing(gens)         LatGen of gens together with every singleton {k}
  UnionFam(a, b)           set union of two families
  ChainInitials(enum, xs)  the initial segments C_m = first m+1 members of an
                           infinite set, together with the listed extras

Membership for the generated variants rests on a normal form: in the
distributive lattice of sets, anything built from generators by binary
intersections and unions is a union of "meets", where a meet is the
intersection of a nonempty subcollection of generators.  A candidate is
therefore a member iff it equals the union of the meets lying below it
(LatGen additionally requires at least one such meet; LatGenSing allows a
finite remainder, covered by singletons).  Generator lists are capped so the
meet pool stays enumerable.
"""

from __future__ import annotations

from itertools import combinations

from .report import FAIL, PASS, Report, Stopwatch
from .upsets import UPSet

GENERATOR_CAP = 16

_EMPTY = UPSet.empty()
_NATS = UPSet.naturals()


def _union(sets) -> UPSet:
    out = _EMPTY
    for s in sets:
        out = out | s
    return out


def _meets_of(gens: tuple[UPSet, ...]) -> frozenset[UPSet]:
    """All intersections of nonempty subcollections of the generators."""
    pool: set[UPSet] = set()
    for r in range(1, len(gens) + 1):
        for combo in combinations(gens, r):
            m = combo[0]
            for g in combo[1:]:
                m = m & g
            pool.add(m)
    return frozenset(pool)


def _nudges(s: UPSet) -> list[UPSet]:
    """Sets just off s: the first outside point alone and adjoined to s."""
    outside = ~s
    if outside.is_empty:
        return []
    first = UPSet.singleton(outside.first_members(1)[0])
    return [first, s | first]


def _check_gens(gens, *, nonempty: bool) -> tuple[UPSet, ...]:
    gens = tuple(gens)
    if nonempty and not gens:
        raise ValueError("generator list must be nonempty")
    if len(gens) > GENERATOR_CAP:
        raise ValueError(f"generator list capped at {GENERATOR_CAP}")
    if len(set(gens)) != len(gens):
        raise ValueError("generator list must be duplicate-free")
    return gens


class FamExpr:
    """Base class; subclasses implement the membership semantics."""

    def contains(self, a: UPSet) -> bool:
        raise NotImplementedError

    def union_below(self, w: UPSet) -> UPSet:
        """The union of all members that are subsets of w.

        Always a finite union of UPSets, hence itself an UPSet.  Any family
        closed under arbitrary unions must contain it, which is what the
        topology probe exploits.
        """
        raise NotImplementedError

    def probe_sets(self, cap: int = 8):
        """Structurally suggested coordinates, used to tell expressions apart."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_json()})"

    def __or__(self, other: "FamExpr") -> "FamExpr":
        return UnionFam(self, other)


class Explicit(FamExpr):
    def __init__(self, members):
        self.members = tuple(dict.fromkeys(members))

    def contains(self, a: UPSet) -> bool:
        return a in self.members

    def union_below(self, w: UPSet) -> UPSet:
        return _union(m for m in self.members if m <= w)

    def probe_sets(self, cap: int = 8):
        return list(self.members)

    def to_json(self) -> dict:
        return {"kind": "Explicit", "members": [m.to_json() for m in self.members]}


class DownPow(FamExpr):
    """All subsets of a fixed set."""

    def __init__(self, bound: UPSet):
        self.bound = bound

    def contains(self, a: UPSet) -> bool:
        return a <= self.bound

    def union_below(self, w: UPSet) -> UPSet:
        return self.bound & w

    def probe_sets(self, cap: int = 8):
        return [_EMPTY, self.bound, _NATS, *_nudges(self.bound)]

    def to_json(self) -> dict:
        return {"kind": "DownPow", "bound": self.bound.to_json()}


class NearDown(FamExpr):
    """All sets contained in a fixed set up to finitely many exceptions."""

    def __init__(self, core: UPSet):
        self.core = core

    def contains(self, a: UPSet) -> bool:
        return (a - self.core).is_finite

    def union_below(self, w: UPSet) -> UPSet:
        # every singleton drawn from w is a member, so the union is w itself
        return w

    def probe_sets(self, cap: int = 8):
        return [_EMPTY, self.core, _NATS, *_nudges(self.core)]

    def to_json(self) -> dict:
        return {"kind": "NearDown", "core": self.core.to_json()}


class TopGen(FamExpr):
    """The topology generated by a finite subbase (empty set and space adjoined)."""

    def __init__(self, subbase):
        self.subbase = _check_gens(subbase, nonempty=True)
        self._meets = _meets_of(self.subbase) | {_EMPTY, _NATS}

    def contains(self, a: UPSet) -> bool:
        return _union(m for m in self._meets if m <= a) == a

    def union_below(self, w: UPSet) -> UPSet:
        return _union(m for m in self._meets if m <= w)

    def probe_sets(self, cap: int = 8):
        return [_EMPTY, _NATS, *self.subbase]

    def to_json(self) -> dict:
        return {"kind": "TopGen", "subbase": [g.to_json() for g in self.subbase]}


class LatGen(FamExpr):
    """Closure of the generators under binary intersections and unions."""

    def __init__(self, gens):
        self.gens = _check_gens(gens, nonempty=True)
        self._meets = _meets_of(self.gens)

    def contains(self, a: UPSet) -> bool:
        below = [m for m in self._meets if m <= a]
        return bool(below) and _union(below) == a

    def union_below(self, w: UPSet) -> UPSet:
        return _union(m for m in self._meets if m <= w)

    def probe_sets(self, cap: int = 8):
        return list(self.gens)

    def to_json(self) -> dict:
        return {"kind": "LatGen", "gens": [g.to_json() for g in self.gens]}


class LatGenSing(FamExpr):
    """LatGen of the generators together with every singleton.

    With the singletons available, a nonempty set is a member exactly when
    the part not covered by generator meets below it is finite.  The empty
    set is not a member: members are unions of nonempty building blocks.
    """

    def __init__(self, gens):
        self.gens = _check_gens(gens, nonempty=False)
        self._meets = _meets_of(self.gens)

    def contains(self, a: UPSet) -> bool:
        if a.is_empty:
            return False
        covered = _union(m for m in self._meets if m <= a)
        return (a - covered).is_finite

    def union_below(self, w: UPSet) -> UPSet:
        return w

    def probe_sets(self, cap: int = 8):
        return list(self.gens)

    def to_json(self) -> dict:
        return {"kind": "LatGenSing", "gens": [g.to_json() for g in self.gens]}


class UnionFam(FamExpr):
    def __init__(self, a: FamExpr, b: FamExpr):
        self.a = a
        self.b = b

    def contains(self, a: UPSet) -> bool:
        return self.a.contains(a) or self.b.contains(a)

    def union_below(self, w: UPSet) -> UPSet:
        return self.a.union_below(w) | self.b.union_below(w)

    def probe_sets(self, cap: int = 8):
        return [*self.a.probe_sets(cap), *self.b.probe_sets(cap)]

    def to_json(self) -> dict:
        return {"kind": "UnionFam", "a": self.a.to_json(), "b": self.b.to_json()}


class ChainInitials(FamExpr):
    """The initial segments of an infinite set, plus listed extras.

    C_m is the set of the first m+1 members of `enum` in increasing order.
    """

    def __init__(self, enum: UPSet, extras=()):
        if enum.is_finite:
            raise ValueError("enumerated set must be infinite")
        self.enum = enum
        self.extras = tuple(dict.fromkeys(extras))

    def initial_segment(self, m: int) -> UPSet:
        return UPSet.from_ints(self.enum.first_members(m + 1))

    def contains(self, a: UPSet) -> bool:
        if a in self.extras:
            return True
        if not a.is_finite or a.is_empty:
            return False
        return a == self.initial_segment(a.size() - 1)

    def union_below(self, w: UPSet) -> UPSet:
        out = _union(x for x in self.extras if x <= w)
        if self.enum <= w:
            return out | self.enum
        # the segments below w are exactly those before the first member
        # of enum that w misses
        j = 0
        for i in self.enum.iter_members():
            if i not in w:
                break
            j += 1
        if j > 0:
            out = out | self.initial_segment(j - 1)
        return out

    def probe_sets(self, cap: int = 8):
        return [self.enum, *self.extras,
                *(self.initial_segment(m) for m in range(cap))]

    def to_json(self) -> dict:
        return {
            "kind": "ChainInitials",
            "enum": self.enum.to_json(),
            "extras": [x.to_json() for x in self.extras],
        }


_KINDS = {
    "Explicit": lambda d: Explicit([UPSet.from_json(m) for m in d["members"]]),
    "DownPow": lambda d: DownPow(UPSet.from_json(d["bound"])),
    "NearDown": lambda d: NearDown(UPSet.from_json(d["core"])),
    "TopGen": lambda d: TopGen([UPSet.from_json(g) for g in d["subbase"]]),
    "LatGen": lambda d: LatGen([UPSet.from_json(g) for g in d["gens"]]),
    "LatGenSing": lambda d: LatGenSing([UPSet.from_json(g) for g in d["gens"]]),
    "UnionFam": lambda d: UnionFam(expr_from_json(d["a"]), expr_from_json(d["b"])),
    "ChainInitials": lambda d: ChainInitials(
        UPSet.from_json(d["enum"]), [UPSet.from_json(x) for x in d["extras"]]
    ),
}


def expr_from_json(data: dict) -> FamExpr:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("family expression JSON needs a 'kind' tag")
    kind = data["kind"]
    if kind not in _KINDS:
        raise ValueError(f"unknown family expression kind {kind!r}")
    return _KINDS[kind](data)


def fam_member(e: FamExpr, a: UPSet) -> bool:
    return e.contains(a)


def fam_distinct(e1: FamExpr, e2: FamExpr, extra=(), cap: int = 8) -> UPSet | None:
    """A coordinate separating the two families, if the probe pool finds one.

    Extensional equality of arbitrary expressions is not decided here; the
    pool combines the caller's coordinates with both expressions' structural
    probes, which separates every pair arising in the shipped constructions.
    """
    pool = list(extra) + e1.probe_sets(cap) + e2.probe_sets(cap)
    for w in dict.fromkeys(pool):
        if e1.contains(w) != e2.contains(w):
            return w
    return None


def fam_is_topology_sym(e: FamExpr, probes, check: str = "topology-probe") -> Report:
    """Refutation search for the topology axioms on a symbolic family.

    Checks that the empty set and the space belong to e; that the listed
    probe pairs (when both components are members) have their intersection
    and union in e; that the running union of member components stays in e;
    and, for every probe component w, that the union of all members below w
    is again a member.  The last test is what catches families closed under
    finite unions that miss an infinite one: the union of members below the
    missing set reconstructs it exactly.  A pass means no refutation was
    found, not a proof.
    """
    timer = Stopwatch()
    params = {"expr": e.to_json(), "probe_pairs": len(list(probes))}
    probes = list(probes)

    def fail(kind: str, sets: list[UPSet]) -> Report:
        witness = {"kind": kind, "sets": [s.to_json() for s in sets],
                   "readable": [s.describe() for s in sets]}
        return timer.report(check, params, FAIL, witness)

    if not e.contains(_EMPTY):
        return fail("missing-empty-set", [_EMPTY])
    if not e.contains(_NATS):
        return fail("missing-whole-space", [_NATS])

    acc = _EMPTY
    for a, b in probes:
        in_a, in_b = e.contains(a), e.contains(b)
        if in_a and in_b:
            if not e.contains(a & b):
                return fail("intersection-escapes", [a, b, a & b])
            if not e.contains(a | b):
                return fail("union-escapes", [a, b, a | b])
        for w, inside in ((a, in_a), (b, in_b)):
            if inside:
                acc = acc | w
                if not e.contains(acc):
                    return fail("accumulated-union-escapes", [acc])
        for w in (a, b):
            u = e.union_below(w)
            if not e.contains(u):
                return fail("union-of-members-escapes", [u])

    return timer.report(check, params, PASS)
