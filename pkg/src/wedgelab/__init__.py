"""Self-interactions of irreducible polynomials under the wedge operator f |> g."""

from .blocks import (
    Block,
    BlockGraph,
    block_centre,
    block_map,
    block_of,
    build_block_graph,
    count_blocks_formula,
    partition_blocks,
    partition_clusters,
)
from .dynamics import (
    TwoSetType,
    classify_2set,
    is_left_invariant,
    is_right_invariant,
    iterate,
    phi_poly,
    type1_family,
)
from .errors import InvariantViolation
from .field import FieldCtx, field_create, field_from_order, parse_field, rationals
from .harness import ArtinRow, DistReport, admissible_primes, cmd_artin, cmd_csv, cmd_dot, cmd_table3, parse_csv
from .polyring import (
    IrrPoly,
    Poly,
    discriminant,
    enumerate_irreducibles,
    format_poly,
    is_irreducible,
    parse_poly,
    resultant,
    shift,
    sigma_apply,
)
from .quadratic import (
    CycleRecord,
    SkewState,
    construct_periodic_sets,
    counting_formulas,
    d_t,
    e_t,
    minimal_orders,
    pair_to_state,
    skew_closed_form,
    skew_step,
    state_to_pair,
)
from .search import OrbitInfo, PolyGraph, PolySet, build_graph, enumerate_stable_2sets, is_stable, orbit, self_image
from .wedge import WedgeResult, wedge, wedge_oracle

__version__ = "0.1.0"
