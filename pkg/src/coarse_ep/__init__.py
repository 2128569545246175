"""Certified induced and distance-d cycle packing, with hitting sets as the alternative outcome."""

__version__ = "0.1.0"

from .certificates import (  # noqa: E402
    DistHitting,
    HittingSet,
    InducedPacking,
    TreeDecomposition,
    TwoCycles,
    Verdict,
)
from .distpack import dist_pack_two  # noqa: E402
from .eardecomp import build_maximal, validate  # noqa: E402
from .errors import (  # noqa: E402
    CapExceeded,
    CoarseEPError,
    InternalError,
    InternalTheoremViolation,
    InvalidInput,
    NotPlanarEvidence,
)
from .graph import Graph, build_graph  # noqa: E402
from .oracle import verify_certificate  # noqa: E402
from .packing import f_bound, induced_pack_or_hit, induced_pack_or_hit_with_oracle, s_k  # noqa: E402
from .planar import planar_pack  # noqa: E402
from .treedecomp import forest_td, hitting_to_fvs, k1t_td, validate_td  # noqa: E402

__all__ = [
    "CapExceeded", "CoarseEPError", "DistHitting", "Graph", "HittingSet", "InducedPacking",
    "InternalError", "InternalTheoremViolation", "InvalidInput", "NotPlanarEvidence",
    "TreeDecomposition", "TwoCycles", "Verdict", "build_graph", "build_maximal", "dist_pack_two",
    "f_bound", "forest_td", "hitting_to_fvs", "induced_pack_or_hit", "induced_pack_or_hit_with_oracle",
    "k1t_td", "planar_pack", "s_k", "validate", "validate_td", "verify_certificate",
]
