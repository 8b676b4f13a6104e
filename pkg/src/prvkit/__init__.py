"""prvkit - exact checks of the PRV statement, its refinement and their transfer analogues."""

from .main import main

from .utils.logging import (
    configure_logging, cout, debug, info, warning, error, fmt,
    COLOR_STDOUT, COLOR_STDERR, ExitException, UsageError, ViolationError
)
from .utils.types import WeightVec, CoweightVec, Labels, Word
from .utils.config import PrvkitConfig, get_config, read_config

from .lie.rootdata import RootDatum, build_root_datum, dual_datum, pairing
from .lie.weylgrp import (
    WeylElement, Subgroup, enumerate_elements, dominant_representative, stabilizer,
    double_cosets, longest_element
)
from .lie.repcalc import weight_multiplicity, tensor_multiplicity, invariant_dim, character_product_oracle
from .prv.prvcore import prv_instance, prv_verify, refined_count, dimension_identity, prv_pairs
from .loop.laurent import LaurentPoly, LaurentMatrix
from .loop.looplattice import (
    torus_point, chevalley_distance, convolution_membership, stabilizer_intersection_dim,
    verify_matrix_identities
)
from .transfer.maps import TransferMap, torus_in_group, sl2_via_root, parse_preset
from .transfer.invariants import (
    transfer, h_invariants, check_implication, search_failures, saturation_check, root_lattice_check
)


def runner():
    main()
