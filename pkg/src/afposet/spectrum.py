"""Ideals and primitive ideals of an AF algebra from its Bratteli diagram.

An ideal is a node subset that is forward-closed along edges and
backward-complete (a node all of whose successors are selected is itself
selected); it is primitive when the unselected nodes share a common
descendant.  On the stable part these conditions only involve the constant
incidence matrix, and the eventual selection pattern determines the ideal,
so ideals are represented by their stable node subsets.

Note on the zero ideal: {0} is always a closed two-sided ideal of the
algebra; what varies is whether it is *primitive*, which is decided here
by the common-descendant criterion on the full stable node set.
"""

from dataclasses import dataclass

from .bratteli import stable_incidence, stable_node_labels
from .topology import Poset


@dataclass(frozen=True)
class IdealSubdiagram:
    """An ideal, canonically represented by its stable node labels."""

    selected: frozenset

    def name(self):
        return "0" if not self.selected else "{" + ",".join(sorted(self.selected)) + "}"


@dataclass(frozen=True)
class PrimSpectrum:
    ideals: tuple   # primitive IdealSubdiagrams, zero ideal included if primitive
    poset: Poset    # ordered by inclusion of selected sets


def _successors(t):
    """successors per column index of the stable incidence matrix."""
    k = len(t)
    return [frozenset(j for j in range(k) if t[j][i]) for i in range(k)]


def ideal_subdiagrams(d, include_improper=True):
    """All node subsets of the stable part satisfying the ideal conditions.

    Includes the zero ideal (empty selection); the improper ideal (all
    nodes) is included unless `include_improper` is false.  Ordered by
    decreasing size, then lexicographically by node labels.
    """
    t = stable_incidence(d)
    labels = stable_node_labels(d)
    succ = _successors(t)
    k = len(t)
    out = []
    for mask in range(1 << k):
        s = frozenset(i for i in range(k) if mask >> i & 1)
        if any(not (succ[i] <= s) for i in s):
            continue  # forward closure (i) fails
        if any(i not in s and succ[i] <= s for i in range(k)):
            continue  # backward completeness (ii) fails
        if len(s) == k and not include_improper:
            continue
        out.append(IdealSubdiagram(frozenset(labels[i] for i in s)))
    out.sort(key=lambda ideal: (-len(ideal.selected), sorted(ideal.selected)))
    return out


def _reachable(t):
    """reach[i] = nodes reachable from i along >= 1 edges, saturated."""
    k = len(t)
    succ = _successors(t)
    reach = [set(succ[i]) for i in range(k)]
    changed = True
    while changed:
        changed = False
        for i in range(k):
            grown = set(reach[i])
            for j in list(reach[i]):
                grown |= reach[j]
            if grown != reach[i]:
                reach[i] = grown
                changed = True
    return [frozenset(r) for r in reach]


def is_primitive(ideal, d):
    """Common-descendant criterion on the complement of the ideal.

    The improper ideal is never primitive.  Since ideals are forward-closed
    their complements are backward-closed, so reachability from a
    complement node stays in the complement.
    """
    t = stable_incidence(d)
    labels = stable_node_labels(d)
    index = {lab: i for i, lab in enumerate(labels)}
    comp = [index[lab] for lab in labels if lab not in ideal.selected]
    if not comp:
        return False
    reach = _reachable(t)
    common = frozenset(comp)
    for i in comp:
        common &= reach[i]
    return bool(common)


def zero_ideal_primitive(d):
    """True iff some stable node is reachable from every stable node."""
    return is_primitive(IdealSubdiagram(frozenset()), d)


def prim_poset(d):
    """The primitive spectrum, ordered by inclusion of ideals."""
    prims = [i for i in ideal_subdiagrams(d, include_improper=False)
             if is_primitive(i, d)]
    prims.sort(key=lambda ideal: (len(ideal.selected), sorted(ideal.selected)))
    names = [i.name() for i in prims]
    rel = frozenset(
        (a.name(), b.name())
        for a in prims for b in prims
        if a.selected <= b.selected
    )
    return PrimSpectrum(tuple(prims), Poset(tuple(names), rel))


def order_isomorphic(p, q):
    """Exact order-isomorphism test by signature refinement + backtracking."""
    if len(p.points) != len(q.points):
        return False

    def signatures(r):
        sig = {}
        for x in r.points:
            down = sum(1 for y in r.points if r.leq(y, x))
            up = sum(1 for y in r.points if r.leq(x, y))
            sig[x] = (down, up)
        # refine by multiset of neighbor signatures until stable
        for _ in range(len(r.points)):
            new = {}
            for x in r.points:
                below = tuple(sorted(sig[y] for y in r.points
                                     if y != x and r.leq(y, x)))
                above = tuple(sorted(sig[y] for y in r.points
                                     if y != x and r.leq(x, y)))
                new[x] = (sig[x], below, above)
            if len(set(new.values())) == len(set(sig.values())):
                sig = new
                break
            sig = new
        return sig

    sp, sq = signatures(p), signatures(q)
    if sorted(sp.values()) != sorted(sq.values()):
        return False

    # backtracking over signature-compatible assignments
    pts_p = sorted(p.points, key=lambda x: (sp[x], x))
    candidates = {x: [y for y in q.points if sq[y] == sp[x]] for x in pts_p}

    def extend(i, mapping, used):
        if i == len(pts_p):
            return True
        x = pts_p[i]
        for y in candidates[x]:
            if y in used:
                continue
            ok = all(
                p.leq(x, z) == q.leq(y, mapping[z]) and
                p.leq(z, x) == q.leq(mapping[z], y)
                for z in mapping
            )
            if ok:
                mapping[x] = y
                if extend(i + 1, mapping, used | {y}):
                    return True
                del mapping[x]
        return False

    return extend(0, {}, set())


def roundtrip_check(p, diagram_builder=None):
    """True iff the spectrum of the poset's diagram is isomorphic to it."""
    from .bratteli import build_diagram
    builder = diagram_builder or build_diagram
    spec = prim_poset(builder(p))
    return order_isomorphic(spec.poset, p)


def ideal_report(d):
    """One line per ideal: selected stable nodes and the primitivity flag."""
    lines = []
    for ideal in ideal_subdiagrams(d):
        prim = is_primitive(ideal, d)
        lines.append(f"{ideal.name()} primitive={'yes' if prim else 'no'}")
    return "\n".join(lines) + "\n"
