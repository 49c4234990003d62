"""Flag-transitive 2-(36,6,λ) designs on the secants of a conic in PG(2,8).

The pieces, bottom up: GF(8) arithmetic (``field``), the plane and the
conic (``geometry``), materialized permutation groups (``perm``), the group
PΓL(2,8) on the 36 secants with its distinguished subgroups (``ree``),
design checks (``design``), canonical forms and automorphism groups
(``iso``), and the completeness search (``search``).
"""

from .design import Design, DesignParams, orbit_design, tactical_decomposition, verify_2design, verify_flag_transitive
from .geometry import build_conic, default_conic, default_plane
from .iso import are_isomorphic, automorphism_group, canonical_form
from .perm import Permutation, PermGroup, close
from .ree import build_ree, default_model, example_designs, centralizer_orbits
from .search import admissible_params, completeness_search, exhaustive_search, gprime_completeness_search, outer_divisibility_filter

__version__ = "0.1.0"
