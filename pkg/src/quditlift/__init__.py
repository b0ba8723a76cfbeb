"""Transpile qubit circuits onto qudit registers, emulate them exactly,
and decode the measured outcomes back to bit strings."""

from .circuits import (
    CNOT,
    CZ,
    MCX,
    CtrlEmbedded,
    Generic1Q,
    Local1D,
    Named1Q,
    QubitCircuit,
    QuditCircuit,
    Rot1Q,
    qubit_unitary,
    qudit_unitary,
    validate_qubit_circuit,
    validate_qudit_circuit,
)
from .cost import (
    ErrorModel,
    FidelityEstimate,
    TranspileReport,
    compare,
    count_gates,
    estimate_fidelity,
)
from .errors import (
    CircuitError,
    IncompatibleRegisterError,
    InsufficientAncillasError,
    InsufficientFreeLevelsError,
    InsufficientQuditsError,
    MappingError,
    NoFeasibleMappingError,
    NotInImageError,
    QuditLiftError,
    SchemaError,
    SupportViolationError,
    TooLargeError,
    TranspileError,
)
from .mapping import (
    LevelBudget,
    Mapping,
    decode_basis,
    encode_basis,
    enumerate_mappings,
    image_membership,
    iter_mappings,
    trivial_mapping,
)
from .postprocess import (
    ConsistencyReport,
    decode_counts,
    pullback_distribution,
    total_variation_distance,
    verify_consistency,
)
from .simulator import (
    Counts,
    QuantumState,
    apply_gate,
    basis_state,
    evolve,
    exact_distribution,
    init_state,
    run,
    sample,
)
from .transpiler import (
    BaselineCircuit,
    baseline_qubit_lowering,
    lower_cnot,
    lower_cz,
    lower_mcx,
    lower_single_qubit_gate,
    report_for_mapping,
    required_ancillas,
    select_mapping,
    transpile,
)

__version__ = "0.1.0"
