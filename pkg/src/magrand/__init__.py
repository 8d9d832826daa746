"""Incompressible MultiAspect Graphs: encode, certify, and measure."""

from .automorphism import RigidityResult, is_rigid
from .codec import (
    characteristic_string,
    deserialize,
    mag_from_characteristic,
    pair_from_index,
    pair_index,
    serialize,
)
from .compression import compress, decompress
from .core import (
    CompositeEdge,
    Mag,
    MagBuilder,
    MagSignature,
    composite_vertex_from_index,
    composite_vertex_index,
    degree,
    has_edge,
)
from .genlab import GeneratorSpec, generate
from .randomness import (
    DeficiencyCertificate,
    RandomnessThreshold,
    deficiency_certificate,
    passes_log_randomness_test,
)
from .reporting import AnalysisConfig, AnalysisReport, analyze, batch_summary
from .temporal import (
    NoncontiguityQuery,
    WitnessResult,
    check_size_hypothesis,
    find_noncontiguous_witness,
    is_noncontiguous_edge,
    snapshot_loss,
    witness_sweep,
)
from .topology import (
    common_neighbor_count,
    composite_diameter,
    connectivity_lower_bound,
    degree_concentration,
    topology_report,
)

__version__ = "0.1.0"
