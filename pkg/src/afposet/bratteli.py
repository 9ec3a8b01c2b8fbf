"""Bratteli diagram of the AF algebra attached to a finite poset.

The n-th level partitions the point set by membership in the first n
closed sets; each partition atom becomes a matrix-algebra factor whose
dimension follows the edge recursion, and an atom at one level is linked
to an atom at the next when the earlier atom meets the later atom's
envelope (smallest lattice-closure member containing it).  Every link has
multiplicity 1.  Since the poset is finite, the levels eventually repeat;
the constant incidence matrix of that stable part drives the K-theory.
"""

from dataclasses import dataclass

from .errors import DomainError, NotStableError
from .topology import closed_sets


def lattice_closure(family):
    """Smallest collection containing `family` closed under pairwise
    union and intersection, in the same canonical order as closed_sets."""
    result = set()
    for s in family:
        _close_in(result, frozenset(s))
    return sorted(result, key=lambda s: (-len(s), sorted(s)))


def _close_in(result, s):
    """Add `s` to an already-closed set collection and re-close it."""
    if s in result:
        return
    worklist = [s]
    result.add(s)
    while worklist:
        a = worklist.pop()
        for b in list(result):
            for c in (a | b, a & b):
                if c and c not in result:
                    result.add(c)
                    worklist.append(c)


def partition_atoms(points, family):
    """Atoms of the Boolean algebra generated by `family` on `points`:
    classes of equal membership pattern, ordered by least member."""
    family = [frozenset(s) for s in family]
    sig = {x: tuple(x in s for s in family) for x in points}
    atoms = {}
    for x in points:
        atoms.setdefault(sig[x], set()).add(x)
    return sorted((frozenset(a) for a in atoms.values()),
                  key=lambda a: min(sorted(a)))


def envelope(atom, closure_family):
    """Smallest member of an intersection-closed family containing `atom`."""
    atom = frozenset(atom)
    hits = [s for s in closure_family if atom <= s]
    if not hits:
        raise DomainError(f"no family member contains the atom {sorted(atom)}")
    smallest = hits[0]
    for s in hits[1:]:
        smallest = smallest & s
    return smallest


@dataclass(frozen=True)
class LevelPartition:
    level: int            # 1-based: uses the first `level` closed sets
    atoms: tuple          # partition of the point set, canonical atom order
    envelopes: tuple      # one per atom, member of `family`
    family: tuple         # the lattice closure of the first `level` closed sets


@dataclass(frozen=True)
class BratteliDiagram:
    """Leveled multiplicity-1 diagram.

    levels[n] is a list of (dimension, atom) pairs; edges[n] is the matrix
    from level n to level n+1 with edges[n][k][j] = 1 iff node j at level n
    is linked to node k at level n+1.  Level 0 is the single root of
    dimension 1.
    """

    poset: object
    levels: tuple         # tuple of tuples of (int, frozenset)
    edges: tuple          # tuple of matrices (tuples of row tuples)
    partitions: tuple     # LevelPartition per level
    stable_level: object  # int or None

    @property
    def depth(self):
        return len(self.levels)

    def dims(self, n):
        return tuple(d for d, _ in self.levels[n])

    def atoms(self, n):
        return tuple(a for _, a in self.levels[n])


def build_diagram(p, depth=None):
    """Construct the diagram of the poset `p` down to `depth` levels.

    Level n uses the first n+1 closed sets in canonical order, so level 0
    is always the single root atom P with dimension 1.  The default depth
    leaves at least two levels past stabilization for the constancy check.
    """
    closed = closed_sets(p)
    if depth is None:
        depth = len(closed) + 2
    if depth < 1:
        raise DomainError("depth must be at least 1")

    levels = []
    edge_mats = []
    partitions = []
    family_set = set()
    prev_atoms = None
    prev_dims = None
    for n in range(depth):
        prefix = closed[: min(n + 1, len(closed))]
        if n < len(closed):
            _close_in(family_set, closed[n])
        family = sorted(family_set, key=lambda s: (-len(s), sorted(s)))
        atoms = partition_atoms(p.points, prefix)
        envs = [envelope(a, family) for a in atoms]
        partitions.append(LevelPartition(n + 1, tuple(atoms), tuple(envs),
                                         tuple(family)))
        if n == 0:
            dims = [1] * len(atoms)
        else:
            mat = tuple(
                tuple(1 if (prev_atoms[j] & envs[k]) else 0
                      for j in range(len(prev_atoms)))
                for k in range(len(atoms))
            )
            edge_mats.append(mat)
            dims = [sum(mat[k][j] * prev_dims[j] for j in range(len(prev_atoms)))
                    for k in range(len(atoms))]
        levels.append(tuple(zip(dims, atoms)))
        prev_atoms, prev_dims = atoms, dims

    stable = _detect_stable(p, levels, edge_mats)
    return BratteliDiagram(p, tuple(levels), tuple(edge_mats),
                           tuple(partitions), stable)


def _detect_stable(p, levels, edge_mats):
    """First level whose partition separates all points and from which the
    atom list and the multiplicity matrix stay constant to the end."""
    npts = len(p.points)
    for n in range(len(levels)):
        atoms = tuple(a for _, a in levels[n])
        if len(atoms) != npts:
            continue
        if n + 1 >= len(levels):
            return None  # separation reached but constancy not visible
        ok = True
        for m in range(n, len(levels) - 1):
            if tuple(a for _, a in levels[m + 1]) != atoms:
                ok = False
                break
            if edge_mats[m] != edge_mats[n]:
                ok = False
                break
        if ok:
            return n
    return None


def stable_incidence(d):
    """The constant incidence matrix T of the stable part.

    Rows are indexed by level-(n+1) nodes and columns by level-n nodes, in
    the canonical atom order (atoms sorted by least point identifier).
    """
    if d.stable_level is None:
        raise NotStableError(
            "diagram shows no stable regime at the requested depth")
    if d.depth < d.stable_level + 2:
        raise NotStableError(
            f"diagram depth {d.depth} is too shallow; need at least "
            f"{d.stable_level + 2} levels")
    return d.edges[d.stable_level]


def stable_node_labels(d):
    """Point labels of the stable nodes, in matrix index order."""
    if d.stable_level is None:
        raise NotStableError(
            "diagram shows no stable regime at the requested depth")
    return tuple(min(sorted(a)) for a in d.atoms(d.stable_level))


def level_dump(d):
    """Plain-text dump: one line per level, `d1 d2 ... | row ; row ; ...`."""
    lines = []
    for n in range(d.depth):
        dims = " ".join(str(x) for x in d.dims(n))
        if n < len(d.edges):
            rows = " ; ".join(" ".join(str(v) for v in row)
                              for row in d.edges[n])
            lines.append(f"{dims} | {rows}")
        else:
            lines.append(dims)
    return "\n".join(lines) + "\n"
