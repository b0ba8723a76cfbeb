"""Exception types shared across the package."""

from __future__ import annotations


class QuditLiftError(Exception):
    """Base class for every error raised by this package."""


class CircuitError(QuditLiftError):
    """A circuit or gate violates a structural invariant.

    ``gate_index`` pins the first offending gate when the error was found
    while scanning a circuit; it is ``None`` for standalone gate checks.
    """

    def __init__(self, message: str, gate_index: int | None = None):
        self.message = message
        self.gate_index = gate_index
        if gate_index is not None:
            message = f"gate {gate_index}: {message}"
        super().__init__(message)


class IndexOutOfRangeError(CircuitError):
    """A qubit/qudit index falls outside the register."""


class DuplicateIndexError(CircuitError):
    """A gate touches the same wire twice."""


class NonUnitaryMatrixError(CircuitError):
    """A supplied gate matrix is not unitary within tolerance."""


class DimensionMismatchError(CircuitError):
    """A matrix does not match the dimension of the wire it acts on."""


class TooLargeError(QuditLiftError):
    """A dense construction would exceed the configured size guard."""


class SchemaError(QuditLiftError):
    """An input document does not match the expected JSON schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


class MappingError(QuditLiftError):
    """A qubit-to-qudit assignment is malformed or does not fit the register."""


class NotInImageError(MappingError):
    """A register basis state uses a level outside the encoded subspace."""


class InsufficientQuditsError(MappingError):
    """Fewer qudits than qubits; no one-to-one placement exists."""


class IncompatibleRegisterError(MappingError):
    """The register's total dimension cannot hold the qubit state space."""


class TranspileError(QuditLiftError):
    """Lowering a qubit gate to native qudit gates failed."""

    def __init__(self, message: str, gate_index: int | None = None):
        self.message = message
        self.gate_index = gate_index
        if gate_index is not None:
            message = f"gate {gate_index}: {message}"
        super().__init__(message)


class InsufficientFreeLevelsError(TranspileError):
    """A carrier qudit lacks the spare levels the lowering needs."""


class NotSupportedError(TranspileError):
    """The gate cannot be lowered by this transpiler."""


class InsufficientAncillasError(QuditLiftError):
    """The qubit baseline needs more clean ancillas than were provided."""


class NoFeasibleMappingError(QuditLiftError):
    """Every enumerated candidate mapping failed to transpile."""


class SupportViolationError(QuditLiftError):
    """Measured outcomes fall outside the image of the mapping.

    ``violations`` maps each offending outcome key to its observed count.
    """

    def __init__(self, violations: dict[str, int]):
        self.violations = dict(violations)
        keys = ", ".join(f"{k} (x{v})" for k, v in sorted(violations.items()))
        super().__init__(f"outcomes outside the encoded subspace: {keys}")
