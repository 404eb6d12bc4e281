"""Edge-balanced index sets of complete bipartite graphs with both parts odd."""
from .construct import SPlan, construct_max, s1_index, s_index, s_plan
from .descent import (DescentTrace, SwapChoice, descend_once, descend_to, find_swap,
                      format_trace, parse_trace)
from .errors import (AssertionBreach, BudgetExceeded, DescentStuck, InvalidInstance,
                     LabelingError, NoMixedPart, SwapError, TargetUnreachable)
from .formula import EbiParams, IndexSet, compute_params, ebi_set
from .graph import (Counts, Instance, Labeling, VertexSummary, counts, format_labeling,
                    new_labeling, parse_labeling, swap_pair, vertex_summaries)
from .oracle import (EnumerationJob, OracleReport, Verification, merge_reports,
                     parse_report, rank, run_oracle, run_partitioned, unrank,
                     verify_instance)

__version__ = "0.1.0"
