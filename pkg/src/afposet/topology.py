"""Finite T0 spaces as posets.

A finite T0 topology is the same thing as a partial order: open sets are
the down-sets of the specialization order, and the minimal open sets
O_x = {y : y <= x} form a basis.  This module builds posets from coverings
(by the indistinguishability quotient), from bases of open sets, or from
explicit order pairs, and enumerates closed sets and covering relations.
"""

from dataclasses import dataclass, field

from .errors import (
    DomainError,
    NotT0Error,
    UncoveredPointError,
    UnknownPointError,
)


@dataclass(frozen=True)
class GroundSpace:
    """A finite sample space together with a covering by subsets."""

    points: tuple
    cover: tuple  # tuple of frozensets

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise DomainError("duplicate point identifiers in ground space")
        pts = set(self.points)
        for c in self.cover:
            if not c:
                raise DomainError("empty cover set")
            if not c <= pts:
                stray = sorted(c - pts)[0]
                raise UnknownPointError(stray)

    @staticmethod
    def make(points, cover):
        return GroundSpace(tuple(points), tuple(frozenset(c) for c in cover))


@dataclass(frozen=True)
class Poset:
    """A finite partial order; immutable after construction.

    `relation` holds every pair (x, y) with x <= y, reflexively and
    transitively closed.  Construction validates antisymmetry, which for a
    preorder is exactly the T0 condition.
    """

    points: tuple
    relation: frozenset = field()

    def __post_init__(self):
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise DomainError("duplicate point identifiers")
        if not self.points:
            raise DomainError("empty point set")
        for (a, b) in self.relation:
            if a not in pts or b not in pts:
                raise UnknownPointError(a if a not in pts else b)
        for x in self.points:
            if (x, x) not in self.relation:
                raise DomainError(f"relation is not reflexive at {x!r}")
        rel = self.relation
        for (a, b) in rel:
            if a != b and (b, a) in rel:
                raise DomainError(f"relation is not antisymmetric on {a!r}, {b!r}")
            for (c, d) in rel:
                if b == c and (a, d) not in rel:
                    raise DomainError(
                        f"relation is not transitive: {a!r} <= {b!r} <= {d!r}")

    @staticmethod
    def from_pairs(points, pairs):
        """Build from generating pairs; reflexive-transitive closure applied."""
        points = tuple(points)
        rel = {(x, x) for x in points}
        rel.update((a, b) for (a, b) in pairs)
        changed = True
        while changed:
            changed = False
            for (a, b) in list(rel):
                for (c, d) in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        return Poset(points, frozenset(rel))

    def leq(self, x, y):
        return (x, y) in self.relation

    def down_set(self, x):
        if x not in set(self.points):
            raise UnknownPointError(x)
        return frozenset(y for y in self.points if (y, x) in self.relation)

    def up_set(self, x):
        if x not in set(self.points):
            raise UnknownPointError(x)
        return frozenset(y for y in self.points if (x, y) in self.relation)

    def closure_of(self, x):
        """Smallest closed set containing x (closed sets are up-sets)."""
        return self.up_set(x)


def minimal_open_set(p, x):
    """O_x = {y : y <= x}, the smallest open set containing x."""
    return p.down_set(x)


def order_from_basis(points, basis_open_sets):
    """Specialization order of the topology with the given basis.

    x <= y iff every basis set containing y contains x.  Rejects non-T0
    input: two points lying in exactly the same basis sets.
    """
    points = tuple(points)
    if not points:
        raise DomainError("empty point set")
    basis = [frozenset(b) for b in basis_open_sets]
    pts = set(points)
    for b in basis:
        if not b <= pts:
            raise UnknownPointError(sorted(b - pts)[0])
    membership = {x: frozenset(i for i, b in enumerate(basis) if x in b)
                  for x in points}
    for x in points:
        if not membership[x]:
            raise UncoveredPointError(x)
    seen = {}
    for x in points:
        if membership[x] in seen:
            raise NotT0Error(seen[membership[x]], x)
        seen[membership[x]] = x
    rel = frozenset(
        (x, y) for x in points for y in points
        if membership[y] <= membership[x]
    )
    return Poset(points, rel)


def quotient_by_covering(space):
    """Quotient a covered space by indistinguishability and order the classes.

    Two points are identified when every cover set contains either both or
    neither.  Classes are labeled by their lexicographically least member
    and ordered by the specialization order of the quotient topology.
    """
    membership = {
        x: frozenset(i for i, c in enumerate(space.cover) if x in c)
        for x in space.points
    }
    for x in space.points:
        if not membership[x]:
            raise UncoveredPointError(x)
    classes = {}  # signature -> sorted members
    for x in space.points:
        classes.setdefault(membership[x], []).append(x)
    labels = {sig: min(members) for sig, members in classes.items()}
    # keep first-appearance order of classes
    class_points = []
    seen = set()
    for x in space.points:
        sig = membership[x]
        if sig not in seen:
            seen.add(sig)
            class_points.append(labels[sig])
    sig_of = {labels[sig]: sig for sig in classes}
    rel = frozenset(
        (a, b) for a in class_points for b in class_points
        if sig_of[b] <= sig_of[a]
    )
    return Poset(tuple(class_points), rel)


def closed_sets(p):
    """All nonempty closed (up-closed) subsets, canonically ordered.

    Order: decreasing cardinality, ties broken lexicographically by the
    sorted point identifiers; the full space comes first automatically.
    The empty set is excluded.
    """
    n = len(p.points)
    if n > 20:
        raise DomainError(f"closed-set enumeration over {n} points is too large")
    ups = {x: p.up_set(x) for x in p.points}
    out = []
    for mask in range(1, 1 << n):
        s = frozenset(p.points[i] for i in range(n) if mask >> i & 1)
        if all(ups[x] <= s for x in s):
            out.append(s)
    out.sort(key=lambda s: (-len(s), sorted(s)))
    return out


@dataclass(frozen=True)
class HasseDiagram:
    """Covering relations of a poset, with a level per point.

    level(x) is the longest-chain height of x, so x < y implies
    level(x) < level(y).
    """

    levels: dict
    links: tuple  # pairs (x, y), x covered by y

    @property
    def n_levels(self):
        return max(self.levels.values()) + 1


def hasse(p):
    covers = []
    for x in p.points:
        for y in p.points:
            if x != y and p.leq(x, y):
                if not any(p.leq(x, z) and p.leq(z, y) and z not in (x, y)
                           for z in p.points):
                    covers.append((x, y))
    levels = {}

    def height(x):
        if x not in levels:
            below = [y for y in p.points if y != x and p.leq(y, x)]
            levels[x] = 1 + max((height(y) for y in below), default=-1)
        return levels[x]

    for x in p.points:
        height(x)
    covers.sort()
    return HasseDiagram(levels, tuple(covers))
