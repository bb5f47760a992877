"""Slow, obviously-correct reference implementations.

Everything here works with frozensets of frozensets and naive loops, never
with the bit-word encodings the engines use, so agreement between the two is
meaningful.  The topology count is done twice over: once by filtering all
families through the axioms, once by counting reflexive transitive relations
(finite topologies and preorders are the same data, via "y is in every open
set containing x").
"""

from __future__ import annotations

from itertools import chain, combinations, product


def powerset(points):
    pts = list(points)
    return [frozenset(c) for r in range(len(pts) + 1) for c in combinations(pts, r)]


def all_families(n: int):
    """Every set of subsets of {0..n-1}; 2^(2^n) of them, keep n tiny."""
    subsets = powerset(range(n))
    for picks in product([False, True], repeat=len(subsets)):
        yield frozenset(s for s, keep in zip(subsets, picks) if keep)


def family_is_topology(n: int, fam) -> bool:
    space = frozenset(range(n))
    if frozenset() not in fam or space not in fam:
        return False
    for a in fam:
        for b in fam:
            if (a & b) not in fam or (a | b) not in fam:
                return False
    return True


def count_topologies_by_filter(n: int) -> int:
    return sum(1 for fam in all_families(n) if family_is_topology(n, fam))


def count_preorders(n: int) -> int:
    """Reflexive transitive relations on n points, counted directly."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    count = 0
    for picks in product([False, True], repeat=len(pairs)):
        rel = {(i, i) for i in range(n)} | {p for p, keep in zip(pairs, picks) if keep}
        if all(
            ((a, d) in rel)
            for (a, b) in rel
            for (c, d) in rel
            if b == c
        ):
            count += 1
    return count


def close_family_set(families) -> frozenset:
    """Close a set of families under pairwise intersection and union."""
    pool = set(families)
    changed = True
    while changed:
        changed = False
        for f in list(pool):
            for g in list(pool):
                for h in (f & g, f | g):
                    if h not in pool:
                        pool.add(h)
                        changed = True
    return frozenset(pool)


def comparable(f, g) -> bool:
    return f <= g or g <= f


def comparable_with_all(n: int, collection):
    """All families over {0..n-1} comparable with each member, by brute force."""
    coll = list(collection)
    return frozenset(
        fam for fam in all_families(n) if all(comparable(fam, c) for c in coll)
    )


def generated_topology(n: int, subbase) -> frozenset:
    """Arbitrary unions of finite intersections, bounds adjoined; naive."""
    space = frozenset(range(n))
    meets = {space, frozenset()}
    base = list(subbase)
    for r in range(1, len(base) + 1):
        for combo in combinations(base, r):
            m = space
            for s in combo:
                m = m & s
            meets.add(m)
    meets = list(meets)
    opens = set()
    for picks in product([False, True], repeat=len(meets)):
        u = frozenset(chain.from_iterable(m for m, keep in zip(meets, picks) if keep))
        opens.add(u)
    opens.add(space)
    return frozenset(opens)
