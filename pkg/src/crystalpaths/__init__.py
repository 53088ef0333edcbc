"""Crystal paths for the cyclic rank-n setting.

Row and column crystals, tensor products of them ("paths"), the energy
statistic and its line-diagram twin, charge, configuration sums, and the
q-series limits those sums converge to.  The harness module machine-checks
every identity the package claims, at desk scale.
"""

from .combinatorics import (
    as_partition,
    charge,
    charge_word,
    conjugate,
    enumerate_ssyt,
    kostka_foulkes,
    kostka_number,
    partitions_of,
)
from .crystal import (
    ANTISYM,
    SYM,
    ClassicalWeight,
    CrystalElement,
    Path,
    crystal_elements,
    element_from_word,
    path_from_words,
)
from .energy import (
    energy,
    energy_elines,
    energy_lines,
    energy_parts,
    energy_table,
    ground_state_energy,
    ground_state_path,
    local_energy,
    local_energy_iso,
)
from .fermionic import (
    BoxAuditError,
    CartanDatum,
    ff_kostka,
    ff_kostka_dual,
    ff_restricted_branch_dual,
    ff_restricted_rect,
    ff_restricted_rect_dual,
    ff_unrestricted_antisym,
    ff_unrestricted_sym,
    general_string_series,
    rsos_spinon_series,
    spinon_branching_series,
    string_series_single,
    string_series_tensor,
    twisted_branching_series,
)
from .harness import (
    SUITES,
    StabilizationError,
    VerificationReport,
    run_suite,
    stabilized_limit,
)
from .paths import (
    CLASSICAL,
    RESTRICTED,
    UNRESTRICTED,
    HwEntry,
    decompose,
    enumerate_paths,
    hw_set,
    hw_set_via_chains,
    iter_paths,
    onedsum,
    onedsum_table,
)
from .qalgebra import LaurentPoly, QSeries, qbinomial, qint, qpochhammer

__version__ = "0.1.0"

__all__ = [
    "ANTISYM",
    "BoxAuditError",
    "CLASSICAL",
    "CartanDatum",
    "ClassicalWeight",
    "CrystalElement",
    "HwEntry",
    "LaurentPoly",
    "Path",
    "QSeries",
    "RESTRICTED",
    "SUITES",
    "SYM",
    "StabilizationError",
    "UNRESTRICTED",
    "VerificationReport",
    "as_partition",
    "charge",
    "charge_word",
    "conjugate",
    "crystal_elements",
    "decompose",
    "element_from_word",
    "energy",
    "energy_elines",
    "energy_lines",
    "energy_parts",
    "energy_table",
    "enumerate_paths",
    "enumerate_ssyt",
    "ff_kostka",
    "ff_kostka_dual",
    "ff_restricted_branch_dual",
    "ff_restricted_rect",
    "ff_restricted_rect_dual",
    "ff_unrestricted_antisym",
    "ff_unrestricted_sym",
    "general_string_series",
    "ground_state_energy",
    "ground_state_path",
    "hw_set",
    "hw_set_via_chains",
    "iter_paths",
    "kostka_foulkes",
    "kostka_number",
    "local_energy",
    "local_energy_iso",
    "onedsum",
    "onedsum_table",
    "partitions_of",
    "path_from_words",
    "qbinomial",
    "qint",
    "qpochhammer",
    "rsos_spinon_series",
    "run_suite",
    "spinon_branching_series",
    "stabilized_limit",
    "string_series_single",
    "string_series_tensor",
    "twisted_branching_series",
]
