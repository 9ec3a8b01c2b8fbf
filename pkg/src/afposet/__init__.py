"""afposet: finite T0 spaces, Bratteli diagrams, primitive spectra and
ordered K-theory of the associated AF algebras, in exact arithmetic."""

from .bratteli import (
    BratteliDiagram,
    LevelPartition,
    build_diagram,
    envelope,
    lattice_closure,
    partition_atoms,
    stable_incidence,
)
from .ktheory import (
    ConeDescription,
    IncidenceMatrix,
    K0Result,
    MembershipVerdict,
    cone_membership,
    fibonacci_inverse_power,
    incidence_from_diagram,
    integer_inverse,
    k0_group,
    perron_cone,
    unipotent_cone,
)
from .spectrum import (
    IdealSubdiagram,
    PrimSpectrum,
    ideal_subdiagrams,
    is_primitive,
    order_isomorphic,
    prim_poset,
    roundtrip_check,
    zero_ideal_primitive,
)
from .topology import (
    GroundSpace,
    HasseDiagram,
    Poset,
    closed_sets,
    hasse,
    minimal_open_set,
    order_from_basis,
    quotient_by_covering,
)

__all__ = [
    "BratteliDiagram", "ConeDescription", "GroundSpace", "HasseDiagram",
    "IdealSubdiagram", "IncidenceMatrix", "K0Result", "LevelPartition",
    "MembershipVerdict", "Poset", "PrimSpectrum", "build_diagram",
    "closed_sets", "cone_membership", "envelope", "fibonacci_inverse_power",
    "hasse", "ideal_subdiagrams", "incidence_from_diagram", "integer_inverse",
    "is_primitive", "k0_group", "lattice_closure", "minimal_open_set",
    "order_from_basis", "order_isomorphic", "partition_atoms", "perron_cone",
    "prim_poset", "quotient_by_covering", "roundtrip_check",
    "stable_incidence", "unipotent_cone", "zero_ideal_primitive",
]

__version__ = "0.1.0"
