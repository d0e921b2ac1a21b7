"""K-theory of graph algebras and symbolic computation in Leavitt path algebras."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Edge,
    Graph,
    GraphError,
    cuntz_splice,
    incidence_matrix,
    is_regular,
    parse_graph,
    rose,
    serialize_graph,
    source_removal,
    transpose_graph,
)
from .invariants import (  # noqa: E402
    KK_extension,
    bowen_franks,
    bowen_franks_dual,
    comp_is_iso,
    comp_kernel,
    k_theory,
    kk_extension,
    kk_with_coefficients,
)
from .classify import (  # noqa: E402
    is_homotopy_equivalence,
    k0_of_generator_map,
    kp_classify,
    lift_report,
    spi_check,
)
