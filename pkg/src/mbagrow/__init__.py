"""Growing scale-free small-world networks by local preferential attachment.

A new node is built by an existing creator chosen proportionally to degree
and links to the creator and ``m - 1`` of the creator's neighbors. The
package grows such graphs (and a classic BA baseline), measures their
degree, clustering and path-length statistics, and carries the closed-form
mean-field predictions plus an exact small-graph enumerator to test against.
"""

from .analytic import (
    predicted_apl_line,
    predicted_ck,
    predicted_degree,
    predicted_ei_bound,
    predicted_global_clustering,
    predicted_pk,
)
from .ensemble import EnsembleStats, run_ensemble
from .errors import (
    EdgeListParseError,
    InvalidArgumentError,
    InvalidConfigError,
    InvalidStateError,
    MbagrowError,
    ResourceLimitError,
)
from .graph import Graph, birth_time, new_seed_graph, read_edge_list, write_edge_list
from .growth import GrowthConfig, Model, grow, grow_snapshots, grow_with_traces
from .metrics import (
    average_path_length,
    clustering_spectrum,
    degree_distribution,
    global_clustering,
    local_clustering,
    neighbor_edge_count,
)
from .rng import RandomSource, derive_seed

__version__ = "0.1.0"
