"""Certificates carving out finite sets of families inside the cube.

Conditions of the form "this subset is a member" / "is not a member" are the
subbasic data of the cube of families; finite conjunctions of disjunctions
of such conditions cut out clopen pieces.  This module builds certificates
whose solution sets are, provably, small named collections (the trivial
topology plus the one-step topologies; a pairwise-disjoint batch of
topologies plus the trivial one), verifies them by full sweep, checks the
two evaluation routes for order intervals against each other, and provides
sampled limit-point and convergence probes for symbolic families.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cube import Family, GroundSet
from .famexpr import FamExpr, fam_distinct
from .lattice import FiniteSublattice, OmegaChain, lat_generate
from .report import FAIL, INCONCLUSIVE, PASS, Report, Stopwatch
from .topology import Topology

MAX_PATTERN_COORDS = 10


@dataclass(frozen=True)
class SubbasicCond:
    """Membership (present=True) or absence of one subset mask."""

    mask: int
    present: bool

    def holds(self, word: int) -> bool:
        return bool((word >> self.mask) & 1) == self.present

    def __repr__(self) -> str:
        sign = "+" if self.present else "-"
        return f"[{self.mask}]{sign}"


class BasicOpen:
    """A finite conjunction of subbasic conditions, no mask used both ways."""

    def __init__(self, conds):
        self.conds = frozenset(conds)
        masks = {}
        for c in self.conds:
            if masks.setdefault(c.mask, c.present) != c.present:
                raise ValueError(f"mask {c.mask} constrained both present and absent")

    def holds(self, word: int) -> bool:
        return all(c.holds(word) for c in self.conds)

    def __len__(self) -> int:
        return len(self.conds)

    def __repr__(self) -> str:
        return f"BasicOpen({sorted(self.conds, key=lambda c: (c.mask, c.present))})"


def basic_contains(b: BasicOpen, f: Family) -> bool:
    """Membership of a family in a basic open piece of the cube."""
    if any(c.mask >= f.universe.num_subsets for c in b.conds):
        raise ValueError("condition coordinate outside the family's universe")
    return b.holds(f.word)


class Certificate:
    """A conjunction of clauses, each a disjunction of subbasic conditions."""

    def __init__(self, universe: GroundSet, clauses):
        self.universe = universe
        self.clauses = tuple(tuple(cl) for cl in clauses)
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause is unsatisfiable by fiat; reject it")

    @property
    def conjunct_count(self) -> int:
        return len(self.clauses)

    def holds(self, word: int) -> bool:
        return all(any(c.holds(word) for c in cl) for cl in self.clauses)

    def solve(self) -> list[int]:
        """Every family word in the full cube satisfying the certificate."""
        self.universe.require_sweepable()
        return [w for w in range(1 << self.universe.num_subsets) if self.holds(w)]

    def report_payload(self, solutions: list[int]) -> dict:
        payload = {
            "conjuncts": self.conjunct_count,
            "sweep_size": 1 << self.universe.num_subsets,
            "solutions": len(solutions),
        }
        if len(solutions) <= 32:
            payload["members"] = [
                sorted(Family(self.universe, w).member_masks()) for w in sorted(solutions)
            ]
        return payload


def _proper_nonempty(universe: GroundSet) -> list[int]:
    return [m for m in range(1, universe.full_mask)]


def atom_closure_expression(universe: GroundSet, opens) -> Certificate:
    """The certificate cutting out the trivial topology plus one-step ones.

    Clauses: both bounds must be members; every unchosen proper subset must
    be absent; no two chosen subsets may be members together.
    """
    chosen = sorted({m if isinstance(m, int) else m.mask for m in opens})
    full = universe.full_mask
    if any(not 0 < m < full for m in chosen):
        raise ValueError("chosen opens must be proper and nonempty")
    if len(chosen) < 2:
        raise ValueError("need at least two chosen opens")
    clauses = [
        (SubbasicCond(0, True),),
        (SubbasicCond(full, True),),
    ]
    clauses += [
        (SubbasicCond(d, False),)
        for d in _proper_nonempty(universe)
        if d not in chosen
    ]
    clauses += [
        (SubbasicCond(b, False), SubbasicCond(c, False))
        for b, c in combinations(chosen, 2)
    ]
    return Certificate(universe, clauses)


def atom_closure_certificate(universe: GroundSet, opens) -> Report:
    """Sweep the atom-closure certificate and compare with the predicted set."""
    timer = Stopwatch()
    cert = atom_closure_expression(universe, opens)
    chosen = sorted({m if isinstance(m, int) else m.mask for m in opens})
    solutions = cert.solve()

    full = universe.full_mask
    trivial = (1 << 0) | (1 << full)
    expected = {trivial} | {trivial | (1 << m) for m in chosen}
    params = {"n": universe.n, "chosen": chosen}
    payload = cert.report_payload(solutions)
    if set(solutions) == expected:
        return timer.report(
            check="atom-closure",
            params=params,
            verdict=PASS,
            notes=[str(payload)],
        )
    diff = sorted(set(solutions) ^ expected)
    return timer.report(
        check="atom-closure",
        params=params,
        verdict=FAIL,
        witness={"symmetric_difference_words": diff, **payload},
    )


def _proper_opens_of(universe: GroundSet, tops) -> list[list[int]]:
    full = universe.full_mask
    proper = []
    for t in tops:
        fam = t.family if isinstance(t, Topology) else t
        opens = [m for m in fam.member_masks() if 0 < m < full]
        if not opens:
            raise ValueError("the trivial topology cannot appear in the batch")
        proper.append(opens)
    for (i, pi), (j, pj) in combinations(enumerate(proper), 2):
        if set(pi) & set(pj):
            raise ValueError(f"topologies {i} and {j} share a proper open")
    return proper


def disjoint_closure_expression(universe: GroundSet, tops) -> Certificate:
    """The certificate cutting out a pairwise-disjoint batch plus trivial.

    Within one topology, any proper open being a member forces all of its
    proper opens; across two topologies, proper opens exclude each other;
    anything open in none of them is forbidden outright.
    """
    proper = _proper_opens_of(universe, list(tops))
    full = universe.full_mask
    covered = set().union(*proper) if proper else set()
    clauses = [
        (SubbasicCond(0, True),),
        (SubbasicCond(full, True),),
    ]
    clauses += [
        (SubbasicCond(d, False),)
        for d in _proper_nonempty(universe)
        if d not in covered
    ]
    for pi, pj in combinations(proper, 2):
        clauses += [
            (SubbasicCond(a, False), SubbasicCond(b, False)) for a in pi for b in pj
        ]
    for pi in proper:
        clauses += [
            (SubbasicCond(a, True), SubbasicCond(b, False))
            for a in pi
            for b in pi
            if a != b
        ]
    return Certificate(universe, clauses)


def disjoint_closure_certificate(universe: GroundSet, tops) -> Report:
    """Sweep the disjoint-batch certificate and compare with the predicted set."""
    timer = Stopwatch()
    tops = list(tops)
    cert = disjoint_closure_expression(universe, tops)
    proper = _proper_opens_of(universe, tops)
    solutions = cert.solve()

    full = universe.full_mask
    trivial = (1 << 0) | (1 << full)
    expected = {trivial}
    for pi in proper:
        w = trivial
        for m in pi:
            w |= 1 << m
        expected.add(w)
    params = {"n": universe.n, "topologies": len(tops)}
    payload = cert.report_payload(solutions)
    if set(solutions) == expected:
        return timer.report(
            check="disjoint-closure",
            params=params,
            verdict=PASS,
            notes=[str(payload)],
        )
    diff = sorted(set(solutions) ^ expected)
    return timer.report(
        check="disjoint-closure",
        params=params,
        verdict=FAIL,
        witness={"symmetric_difference_words": diff, **payload},
    )


def _upset_by_order(universe: GroundSet, gen_words) -> set[int]:
    return {
        f
        for f in range(1 << universe.num_subsets)
        if all((f & g) == g for g in gen_words)
    }


def _downset_by_order(universe: GroundSet, gen_words) -> set[int]:
    return {
        f
        for f in range(1 << universe.num_subsets)
        if all((f & g) == f for g in gen_words)
    }


def _upset_by_conditions(universe: GroundSet, gen_words) -> set[int]:
    out = set(range(1 << universe.num_subsets))
    for g in gen_words:
        for mask in universe.subset_masks():
            if (g >> mask) & 1:
                cond = SubbasicCond(mask, True)
                out = {f for f in out if cond.holds(f)}
    return out


def _downset_by_conditions(universe: GroundSet, gen_words) -> set[int]:
    out = set(range(1 << universe.num_subsets))
    for g in gen_words:
        for mask in universe.subset_masks():
            if not (g >> mask) & 1:
                cond = SubbasicCond(mask, False)
                out = {f for f in out if cond.holds(f)}
    return out


def _interval_mismatch(universe: GroundSet, members: list[int], x: int):
    """The first disagreement between the order and condition routes at x.

    The members above x must be exactly the members containing every set
    that x contains, and the members below x exactly those omitting every
    set that x omits.  Both sides are computed by scans through
    independent code paths.
    """
    nm = universe.num_subsets
    inside = [a for a in range(nm) if (x >> a) & 1]
    outside = [a for a in range(nm) if not (x >> a) & 1]
    sides = (
        ("up", [f for f in members if (f & x) == x],
         [f for f in members if all((f >> a) & 1 for a in inside)]),
        ("down", [f for f in members if (f & x) == f],
         [f for f in members if all(not (f >> a) & 1 for a in outside)]),
    )
    for side, by_order, by_cond in sides:
        if by_order != by_cond:
            return {
                "element": x,
                "side": side,
                "difference_words": sorted(set(by_order) ^ set(by_cond))[:8],
            }
    return None


def interval_identity_check(p: FiniteSublattice, x) -> Report:
    """One sublattice element: order route versus condition route."""
    timer = Stopwatch()
    word = x.word if isinstance(x, Family) else int(x)
    if word not in p.words:
        raise ValueError("the probed element must belong to the sublattice")
    members = sorted(p.words)
    params = {"n": p.universe.n, "sublattice": len(members), "element": word}
    problem = _interval_mismatch(p.universe, members, word)
    if problem:
        return timer.report(
            check="interval-identity", params=params, verdict=FAIL, witness=problem
        )
    return timer.report(
        check="interval-identity",
        params=params,
        verdict=PASS,
        notes=["order and condition routes agree on both sides"],
    )


def interval_identity_all(universe: GroundSet, gens) -> Report:
    """One generated sublattice: both routes compared at every element."""
    timer = Stopwatch()
    words = sorted({g.word if isinstance(g, Family) else int(g) for g in gens})
    fams = [Family(universe, w) for w in words]
    members = sorted(lat_generate(universe, fams).words)
    params = {"n": universe.n, "gens": words, "sublattice": len(members)}
    for x in members:
        problem = _interval_mismatch(universe, members, x)
        if problem:
            return timer.report(
                check="interval-identity", params=params, verdict=FAIL, witness=problem
            )
    return timer.report(
        check="interval-identity",
        params=params,
        verdict=PASS,
        notes=[f"{len(members)} elements, both sides agree"],
    )


def interval_identity_sweep(universe: GroundSet, max_gens: int = 3, stride: int = 50) -> Report:
    """Every generated sublattice of bounded generator count, every element.

    Two tiers.  First, for every cube element both routes are compared over
    the whole cube; equality there is preserved by restriction to any member
    collection, which settles the identity for every sublattice and element
    at once.  Second, sublattices are materialized and put through the
    literal per-element check: exhaustively for the smaller generator
    counts, and at the given stride through the top layer when the cube is
    large enough to need it.
    """
    timer = Stopwatch()
    universe.require_sweepable()
    size = 1 << universe.num_subsets
    params = {"n": universe.n, "max_gens": max_gens}

    for x in range(size):
        if (
            _upset_by_order(universe, [x]) != _upset_by_conditions(universe, [x])
            or _downset_by_order(universe, [x]) != _downset_by_conditions(universe, [x])
        ):
            return timer.report(
                check="interval-identity",
                params=params,
                verdict=FAIL,
                witness={"element": x, "scope": "whole cube"},
            )

    materialized = 0
    for r in range(1, max_gens + 1):
        thin = r == max_gens and size > 64
        for i, combo in enumerate(combinations(range(size), r)):
            if thin and i % stride:
                continue
            report = interval_identity_all(universe, combo)
            if not report.passed:
                return report
            materialized += 1
    return timer.report(
        check="interval-identity",
        params=params,
        verdict=PASS,
        notes=[
            f"routes agree on all {size} cube elements, hence on every sublattice",
            f"{materialized} generated sublattices re-checked literally",
        ],
    )


def _pattern_agrees(e: FamExpr, reference: dict, subset) -> bool:
    return all(e.contains(w) == reference[w] for w in subset)


def is_limit_point_sampled(x: FamExpr, candidates, coords, depth: int = 8) -> Report:
    """Does every basic neighbourhood of x meet the candidate pool elsewhere?

    The neighbourhoods tried are the sign patterns of x on each subset of
    the coordinates.  A neighbourhood whose in-pool candidates all coincide
    with x (no separating coordinate found in the shared probe pool) is a
    refutation relative to the pool; a neighbourhood missed by the whole
    pool leaves the question open.
    """
    timer = Stopwatch()
    coords = list(coords)
    if len(coords) > MAX_PATTERN_COORDS:
        raise ValueError(f"at most {MAX_PATTERN_COORDS} pattern coordinates")
    candidates = list(candidates)
    params = {"coords": len(coords), "candidates": len(candidates)}

    reference = {w: x.contains(w) for w in coords}
    distinct = [fam_distinct(x, c, extra=coords, cap=depth + 1) is not None for c in candidates]

    open_question = False
    for r in range(len(coords) + 1):
        for subset in combinations(coords, r):
            inside = [
                i for i, c in enumerate(candidates) if _pattern_agrees(c, reference, subset)
            ]
            if not inside:
                open_question = True
                continue
            if not any(distinct[i] for i in inside):
                return timer.report(
                    check="limit-point",
                    params=params,
                    verdict=FAIL,
                    witness={
                        "pattern": [w.describe() for w in subset],
                        "pool_members_inside": len(inside),
                    },
                )
    if open_question:
        return timer.report(
            check="limit-point",
            params=params,
            verdict=INCONCLUSIVE,
            witness={"reason": "some neighbourhood misses the whole candidate pool"},
        )
    return timer.report(
        check="limit-point",
        params=params,
        verdict=PASS,
        notes=[f"all {2 ** len(coords)} sign patterns met the pool away from the base point"],
    )


def sequence_convergence_check(
    stage, limit: FamExpr, coords, depth: int = 32, assume_increasing: bool = False
) -> Report:
    """Coordinatewise convergence of a family sequence to a declared limit.

    For each coordinate the membership bits of the stages are sampled up to
    the depth.  A final run agreeing with the limit on every coordinate is a
    pass (evidence, not proof).  When the sequence is declared increasing,
    membership bits can never fall back, so a coordinate locked at a value
    different from the limit's is a genuine refutation; bits observed to
    decrease then raise instead.
    """
    timer = Stopwatch()
    coords = list(coords)
    params = {"coords": len(coords), "depth": depth, "increasing": assume_increasing}
    unsettled = []
    for w in coords:
        bits = [stage(i).contains(w) for i in range(depth)]
        want = limit.contains(w)
        if assume_increasing:
            if any(b and not b2 for b, b2 in zip(bits, bits[1:])):
                raise ValueError(f"membership of {w.describe()} dropped; not increasing")
            if bits[-1] and not want:
                return timer.report(
                    check="convergence",
                    params=params,
                    verdict=FAIL,
                    witness={"coordinate": w.describe(), "locked": True, "limit_has": want},
                )
            if not bits[-1] and want:
                unsettled.append(w.describe())
            continue
        if bits[-1] != want:
            unsettled.append(w.describe())
    if unsettled:
        return timer.report(
            check="convergence",
            params=params,
            verdict=INCONCLUSIVE,
            witness={"coordinates_not_settled": unsettled},
        )
    return timer.report(
        check="convergence",
        params=params,
        verdict=PASS,
        notes=[f"{len(coords)} coordinates settled to the limit values within depth {depth}"],
    )


def limit_vs_union_check(limit: FamExpr, union: FamExpr, coords) -> Report:
    """Where a declared limit and the plain union of stages disagree.

    The pool is the given coordinates plus both expressions' structural
    probes.  Agreement everywhere is a pass; any disagreement is reported
    coordinate by coordinate, which is how a limit picking up a set that no
    finite stage reaches gets surfaced.
    """
    timer = Stopwatch()
    pool = list(dict.fromkeys(list(coords) + limit.probe_sets() + union.probe_sets()))
    params = {"coords": len(pool)}
    differing = [w for w in pool if limit.contains(w) != union.contains(w)]
    if differing:
        return timer.report(
            check="limit-vs-union",
            params=params,
            verdict=FAIL,
            witness={
                "differing": [w.describe() for w in differing],
                "in_limit_only": [
                    w.describe() for w in differing if limit.contains(w)
                ],
            },
            notes=[
                "informational: the declared limit and the stage union are "
                "different points of the cube"
            ],
        )
    return timer.report(
        check="limit-vs-union",
        params=params,
        verdict=PASS,
        notes=["limit and union agree on the whole probe pool"],
    )


def ordinal_homeo_check(chain, coords=(), depth: int = 16, union: FamExpr = None) -> Report:
    """Sampled evidence that stages plus their top form one convergent ladder.

    A finite list of families has no limit position: it only needs to be
    totally ordered, and the check passes vacuously.  For an increasing
    symbolic chain the declared union is the element sitting above all the
    stages, and the check wants, on the probe pool: strictly increasing
    stages (each step gains a coordinate), and every coordinate's
    membership locking to the top's value within the depth.  Entry
    witnesses double as isolation certificates: the coordinate gained at
    step i is absent from all earlier stages and present in all later ones.

    When the exact stage union is supplied as ``union``, coordinates where
    the declared top disagrees with it are definite refutations -- the top
    is then not the union of its predecessors -- instead of staying
    undecided at the depth bound.
    """
    timer = Stopwatch()
    if isinstance(chain, (list, tuple)):
        words = [f.word for f in chain]
        if any((w & v) not in (w, v) for w, v in combinations(words, 2)):
            raise ValueError("finite input is not totally ordered")
        return timer.report(
            check="ordinal-ladder",
            params={"length": len(words)},
            verdict=PASS,
            notes=["finite chain has no limit position; nothing to compare"],
        )
    if not chain.increasing:
        raise ValueError("the ladder check needs an increasing chain")
    stage, top = chain.rule, chain.union
    coords = list(
        dict.fromkeys(list(coords) + top.probe_sets(max(depth, 1)))
    )
    params = {"coords": len(coords), "depth": depth}

    if union is not None:
        differing = [w for w in coords if top.contains(w) != union.contains(w)]
        if differing:
            return timer.report(
                check="ordinal-ladder",
                params=params,
                verdict=FAIL,
                witness={
                    "limit_not_union_of_predecessors": [
                        w.describe() for w in differing
                    ]
                },
            )

    entry = []
    for i in range(depth - 1):
        cur, nxt = stage(i), stage(i + 1)
        gained = [w for w in coords if nxt.contains(w) and not cur.contains(w)]
        lost = [w for w in coords if cur.contains(w) and not nxt.contains(w)]
        if lost:
            raise ValueError(f"stage {i + 1} lost {lost[0].describe()}; not increasing")
        if not gained:
            return timer.report(
                check="ordinal-ladder",
                params=params,
                verdict=INCONCLUSIVE,
                witness={"step": i, "reason": "no gained coordinate found in pool"},
            )
        entry.append(gained[0])

    locked_wrong = [
        w.describe()
        for w in coords
        if stage(depth - 1).contains(w) and not top.contains(w)
    ]
    if locked_wrong:
        return timer.report(
            check="ordinal-ladder",
            params=params,
            verdict=FAIL,
            witness={"coordinates_locked_off_top": locked_wrong},
        )
    unsettled = [
        w.describe()
        for w in coords
        if top.contains(w) and not stage(depth - 1).contains(w)
    ]
    if unsettled:
        return timer.report(
            check="ordinal-ladder",
            params=params,
            verdict=INCONCLUSIVE,
            witness={"coordinates_not_reached_within_depth": unsettled},
        )
    return timer.report(
        check="ordinal-ladder",
        params=params,
        verdict=PASS,
        notes=[
            f"{len(entry)} strict steps with entry witnesses",
            "every pooled coordinate settles to the top's value",
        ],
    )
