"""Shared fixtures: the four reference posets, their reference stable
incidence matrices, and the node-order permutations relating our canonical
atom order (sorted point labels) to the reference row order."""

import random

import pytest

from afposet import Poset, order_from_basis

# -- reference posets ------------------------------------------------------

VEE = Poset.from_pairs(["x1", "x2", "x3"], [("x1", "x2"), ("x1", "x3")])

# x3 above x1; x4 above x1 and x2
PIN = Poset.from_pairs(
    ["x1", "x2", "x3", "x4"],
    [("x1", "x3"), ("x1", "x4"), ("x2", "x4")],
)

CIRCLE_BASIS = [
    {"x1"},
    {"x2"},
    {"x1", "x2", "x3"},
    {"x1", "x2", "x4"},
]
CIRCLE = order_from_basis(["x1", "x2", "x3", "x4"], CIRCLE_BASIS)

SPHERE_BASIS = [
    {"x1"},
    {"x2"},
    {"x1", "x2", "x3"},
    {"x1", "x2", "x4"},
    {"x1", "x2", "x3", "x4", "x5"},
    {"x1", "x2", "x3", "x4", "x6"},
]
SPHERE = order_from_basis(["x1", "x2", "x3", "x4", "x5", "x6"], SPHERE_BASIS)

# -- reference stable incidence matrices and inverses ----------------------
# Row order of the reference matrices differs from our canonical atom order
# (sorted point labels); *_ORDER lists the point behind each reference row.

VEE_T = ((1, 0, 0),
         (1, 1, 1),
         (0, 0, 1))
VEE_T_INV = ((1, 0, 0),
             (-1, 1, -1),
             (0, 0, 1))
VEE_ORDER = ("x2", "x1", "x3")

PIN_T = ((1, 0, 0, 0),
         (1, 1, 0, 1),
         (0, 0, 1, 1),
         (0, 0, 0, 1))
PIN_T_INV = ((1, 0, 0, 0),
             (-1, 1, 0, -1),
             (0, 0, 1, -1),
             (0, 0, 0, 1))
PIN_ORDER = ("x3", "x1", "x2", "x4")

CIRCLE_T = ((1, 0, 0, 0),
            (1, 1, 0, 1),
            (1, 0, 1, 1),
            (0, 0, 0, 1))
CIRCLE_T_INV = ((1, 0, 0, 0),
                (-1, 1, 0, -1),
                (-1, 0, 1, -1),
                (0, 0, 0, 1))
CIRCLE_ORDER = ("x3", "x1", "x2", "x4")

SPHERE_T = ((1, 0, 0, 0, 0, 0),
            (1, 1, 0, 0, 0, 1),
            (1, 1, 1, 0, 1, 1),
            (1, 1, 0, 1, 1, 1),
            (1, 0, 0, 0, 1, 1),
            (0, 0, 0, 0, 0, 1))
SPHERE_T_INV = ((1, 0, 0, 0, 0, 0),
                (-1, 1, 0, 0, 0, -1),
                (1, -1, 1, 0, -1, 1),
                (1, -1, 0, 1, -1, 1),
                (-1, 0, 0, 0, 1, -1),
                (0, 0, 0, 0, 0, 1))
SPHERE_ORDER = ("x5", "x3", "x1", "x2", "x4", "x6")

PENROSE_T = ((1, 1),
             (1, 0))
PENROSE_T_INV = ((0, 1),
                 (1, -1))

FIXTURES = {
    "vee": (VEE, VEE_T, VEE_T_INV, VEE_ORDER),
    "pin": (PIN, PIN_T, PIN_T_INV, PIN_ORDER),
    "circle": (CIRCLE, CIRCLE_T, CIRCLE_T_INV, CIRCLE_ORDER),
    "sphere": (SPHERE, SPHERE_T, SPHERE_T_INV, SPHERE_ORDER),
}


def permute_to_reference(mat, labels, reference_order):
    """Reindex `mat` (rows/cols over `labels`) into the reference order."""
    idx = [labels.index(x) for x in reference_order]
    k = len(idx)
    return tuple(tuple(mat[idx[a]][idx[b]] for b in range(k))
                 for a in range(k))


def random_poset(rng, max_points=7):
    """Random poset on up to `max_points` points, by transitive closure of
    random pairs over a shuffled label order (guarantees acyclicity)."""
    n = rng.randint(1, max_points)
    pts = [f"p{i}" for i in range(n)]
    order = pts[:]
    rng.shuffle(order)
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.35:
                pairs.append((order[i], order[j]))
    return Poset.from_pairs(pts, pairs)


@pytest.fixture
def rng():
    return random.Random(20260823)
