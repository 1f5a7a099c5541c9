"""Descent-preserving maps between cyclic signed permutations and signed
permutations, exact statistic tables, and exhaustive claim checkers."""

from .classic import phi_classic
from .colored import (ColoredPermutation, color_of, colored_descent_set,
                      colored_phi, colored_psi, colored_stats,
                      is_cyclic_colored)
from .cycles import (CycleNotation, SignedCycle, from_cycles, is_cyclic,
                     to_canonical_cycles)
from .domains import (BudgetError, DomainSpec, cardinality, iterate, make_rng,
                      rank, sample, sample_stat_batch, unrank)
from .lab import (DistributionTable, MomentReport, NormalityReport,
                  RefinedTable, exact_distribution, exact_moments,
                  ks_against_normal, normality_diagnostics,
                  refined_descent_table, theoretical_moments)
from .permutations import SignedPermutation
from .statistics import DescentSet, StatRecord, descent_set, stats, truncated_descent_set
from .transfer import (TransferTrace, capital_phi, capital_psi_D,
                       capital_psi_Dbar, p_flag, phi_plus, preimage_quadruple,
                       psi_plus)
from .verify import CLAIMS, ClaimResult

__all__ = [
    "BudgetError", "CLAIMS", "ClaimResult", "ColoredPermutation",
    "CycleNotation", "DescentSet", "DistributionTable", "DomainSpec",
    "MomentReport", "NormalityReport", "RefinedTable", "SignedCycle",
    "SignedPermutation", "StatRecord", "TransferTrace", "capital_phi",
    "capital_psi_D", "capital_psi_Dbar", "cardinality", "color_of",
    "colored_descent_set", "colored_phi", "colored_psi", "colored_stats",
    "descent_set", "exact_distribution", "exact_moments", "from_cycles",
    "is_cyclic", "is_cyclic_colored", "iterate", "ks_against_normal",
    "make_rng", "normality_diagnostics", "p_flag", "phi_classic", "phi_plus",
    "preimage_quadruple", "psi_plus", "rank", "refined_descent_table",
    "sample", "sample_stat_batch", "stats", "theoretical_moments",
    "to_canonical_cycles", "truncated_descent_set", "unrank",
]
