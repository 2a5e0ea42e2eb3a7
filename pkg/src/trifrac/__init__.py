"""trifrac: exact-arithmetic decomposition of a/n into three unit fractions.

The library side finds and verifies certificates a/n = 1/x + 1/y + 1/z
through a divisibility route, a perfect-square route, trivial splits,
and direct Vieta solving; the scan side reproduces published range
sweeps (capture percentages, recalcitrant cases, Mordell exceptional
cases) with resumable checkpoints; the report side regression-tests the
shipped result tables and exports rows as csv/json/markdown.
"""

from .decompose import (
    BoundInterval,
    Certificate,
    Instance,
    Route,
    Triple,
    Verdict,
    delta_positive_bounds,
    explore_t_param,
    formula_one_at,
    formula_two_at,
    q_poly,
    trivial_decompose,
    verify_decomposition,
    vieta_solve,
)
from .exactmath import isqrt, perfect_square_root, unit_fraction_sum
from .report import (
    FixtureTable,
    RegressionResult,
    TableRow,
    emit,
    load_fixture,
    parse_rows_csv,
    regress_fixture,
    render_row,
)
from .scan import (
    CoverageReport,
    MordellReport,
    ScanConfig,
    coverage_scan,
    formula_one_scan,
    formula_two_hits,
    formula_two_scan,
    load_checkpoint,
    mordell_is_exception,
    mordell_scan,
    square_scan_fixed_x,
)

__version__ = "0.1.0"
