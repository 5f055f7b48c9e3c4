"""Exact threshold calculus, braid densities, REWIRE and desk-scale oracles for
Dirac thresholds of powers of Hamilton cycles in randomly augmented graphs."""

from .calculus import (Classification, DiracProfile, classify, critical_params, ell_argmin,
                       f_eval, lambda_profile, pell_integer_lambdas, profile, scan_inequalities)
from .cliques import clique_count
from .density import max_density
from .errors import DomainError, HampowerError, InternalError, ResourceError
from .exact import Surd, fmt_rational, parse_rational
from .far import segment_far_minimum, zero_statement_slope
from .graphs import (BraidSpec, Graph, blow_up, braid, decompose_power_path, power_cycle,
                     power_path)
from .lab import GadgetSpec, clique_experiment, gnp, posa_gadget, zero_statement_experiment
from .oracles import conjecture_deficit, exhaustive_density, find_power_hamilton, min_partition_edges
from .rewire import LabeledPowerPath, bound_check, shift, v0_runs
from .tables import emit_table

__version__ = "0.1.0"
