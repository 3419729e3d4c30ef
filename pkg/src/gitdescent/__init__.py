"""Descent criteria for ample line bundles on triple flag varieties.

Given a simple type and a triple of dominant regular weights, decide whether
the associated line bundle descends to the GIT quotient of the triple flag
product by the diagonal group action: a root-lattice necessary condition, two
Gamma-lattice sufficient conditions, an exhaustive conservative pair scan,
and a representation-theoretic semistability probe, over exact integer
lattice arithmetic.
"""

from .descent import (
    DescentVerdict,
    StabilizerStructure,
    all_pairs_in_gamma,
    generic_pair_lattice,
    necessary_condition,
    pairing_character,
    stabilizer_structure,
    sufficient_gamma_triple,
    sufficient_scaled_gamma,
    verdict,
)
from .gamma import gamma_lattice, root_lattice, scaled_weight_lattice, weight_lattice
from .lattice import (
    INFINITE,
    IntegerLattice,
    QuotientStructure,
    contains,
    index_in,
    intersect,
    lattice_from_generators,
    lattice_sum,
    quotient_structure,
)
from .reps import (
    CharacterTable,
    ProbeResult,
    kostant_partition,
    semistable_probe,
    tensor_decomposition,
    tensor_multiplicity,
    triple_invariant_dim,
    weight_multiplicities,
    weyl_dimension,
)
from .rootsys import (
    RootCoords,
    RootSystem,
    Weight,
    build_root_system,
    parse_type,
    rho,
    root_to_weight_coords,
    weight_to_root_coords,
)
from .weyl import (
    WeylElement,
    apply,
    apply_to_root,
    enumerate_weyl_group,
    identity,
    inversion_set,
    longest_element,
    simple_reflection,
    weyl_order,
)

__version__ = "0.1.0"
