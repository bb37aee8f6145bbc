"""Tournament and Meeussen sequences: the tree bijection between them,
exact level counts by several independent methods, Monte Carlo
estimation, and growth-constant analysis, all over exact arithmetic."""

from .sequences import (
    BudgetExceededError,
    InvalidSequenceError,
    RepresentationProfile,
    ValidationReport,
    Violation,
    candidates,
    enumerate_tree,
    format_terms,
    parse_terms,
    representation_profile,
    tournament_children,
    validate_meeussen,
    validate_tournament,
)
from .bijection import (
    BijectionState,
    NotMeeussenError,
    check_kbonacci,
    check_lemma_tm,
    phi,
    phi_inverse,
)
from .counting import (
    CountTable,
    LevelProfile,
    Polynomial,
    PUBLISHED_COUNTS,
    bfile_lines,
    bound_check,
    build_count_table,
    count_dfs,
    count_fast,
    count_via_polynomial,
    count_via_profile,
    level_polynomial,
    level_profile,
    power_sum_polynomial,
)
from .analysis import (
    Estimate,
    GrowthPoint,
    alpha,
    continuous_expectation,
    estimate_count,
    exact_path_expectation,
    growth_csv_lines,
    growth_rate_diagnostic,
    growth_series,
    lg_exact,
    lower_bound,
    peak,
    sample_path,
)

__version__ = "0.1.0"
