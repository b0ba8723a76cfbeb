"""JSON interchange for circuits, mappings, error models, and counts.

Every parser reports failures as SchemaError carrying a JSONPath-ish
location. Semantic checks (unitarity, index ranges) stay with the
validators; this layer cares about shape and types only, except where a
value has nowhere sane to go (unknown kinds, negative counts).
"""

from __future__ import annotations

import json
from typing import Any

from .circuits import (
    CNOT,
    CZ,
    MCX,
    CtrlEmbedded,
    Generic1Q,
    Local1D,
    Matrix,
    Named1Q,
    QubitCircuit,
    QubitGate,
    QuditCircuit,
    QuditGate,
    Rot1Q,
    validate_qubit_circuit,
    validate_qudit_circuit,
)
from .cost import ErrorModel, TranspileReport
from .errors import SchemaError
from .gates import NAMED_GATES, ROTATION_GATES
from .mapping import Mapping
from .registers import parse_digit_key
from .simulator import Counts


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as err:
        raise SchemaError("$", f"not valid JSON: {err}") from None


def save_json_file(path: str, obj: Any) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(obj))


# ---------------------------------------------------------------------------
# Low-level shape checks


def _as_dict(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def _as_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected an array, got {type(value).__name__}")
    return value


def _as_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, f"expected an integer, got {value!r}")
    return value


def _as_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(path, f"expected a number, got {value!r}")
    return float(value)


def _as_str(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a string, got {type(value).__name__}")
    return value


def _get(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise SchemaError(f"{path}.{key}", "missing required field")
    return doc[key]


# ---------------------------------------------------------------------------
# Complex matrices as [re, im] pairs


def _pair_to_complex(value: Any, path: str) -> complex:
    pair = _as_list(value, path)
    if len(pair) != 2:
        raise SchemaError(path, f"complex entry needs [re, im], got {value!r}")
    return complex(_as_number(pair[0], f"{path}[0]"), _as_number(pair[1], f"{path}[1]"))


def matrix_from_json(value: Any, path: str) -> Matrix:
    rows = _as_list(value, path)
    if not rows:
        raise SchemaError(path, "matrix is empty")
    out = []
    for r, row in enumerate(rows):
        entries = _as_list(row, f"{path}[{r}]")
        if len(entries) != len(rows):
            raise SchemaError(f"{path}[{r}]", f"matrix must be square, row has {len(entries)} of {len(rows)} entries")
        out.append(
            tuple(_pair_to_complex(e, f"{path}[{r}][{c}]") for c, e in enumerate(entries))
        )
    return tuple(out)


def matrix_to_json(matrix: Matrix) -> list:
    return [[[z.real, z.imag] for z in row] for row in matrix]


# ---------------------------------------------------------------------------
# Circuits


def _qubit_indices(doc: dict, path: str, count: int | None = None) -> list[int]:
    wires = [_as_int(q, f"{path}.qubits[{i}]") for i, q in enumerate(_as_list(_get(doc, "qubits", path), f"{path}.qubits"))]
    if count is not None and len(wires) != count:
        raise SchemaError(f"{path}.qubits", f"expected {count} indices, got {len(wires)}")
    return wires


def _qubit_gate_from_json(doc: Any, path: str) -> QubitGate:
    doc = _as_dict(doc, path)
    kind = _as_str(_get(doc, "kind", path), f"{path}.kind")
    if kind in NAMED_GATES:
        (q,) = _qubit_indices(doc, path, 1)
        return Named1Q(kind, q)
    if kind in ROTATION_GATES:
        (q,) = _qubit_indices(doc, path, 1)
        angle = _as_number(_get(doc, "angle", path), f"{path}.angle")
        return Rot1Q(kind, q, angle)
    if kind == "u1":
        (q,) = _qubit_indices(doc, path, 1)
        return Generic1Q(q, matrix_from_json(_get(doc, "matrix", path), f"{path}.matrix"))
    if kind == "cnot":
        c, t = _qubit_indices(doc, path, 2)
        return CNOT(c, t)
    if kind == "cz":
        c, t = _qubit_indices(doc, path, 2)
        return CZ(c, t)
    if kind == "mcx":
        wires = _qubit_indices(doc, path)
        if len(wires) < 2:
            raise SchemaError(f"{path}.qubits", "mcx needs at least one control and a target")
        return MCX(tuple(wires[:-1]), wires[-1])
    raise SchemaError(f"{path}.kind", f"unknown qubit gate kind {kind!r}")


def _qubit_gate_to_json(gate: QubitGate) -> dict:
    if isinstance(gate, Named1Q):
        return {"kind": gate.name, "qubits": [gate.qubit]}
    if isinstance(gate, Rot1Q):
        return {"kind": gate.name, "qubits": [gate.qubit], "angle": gate.angle}
    if isinstance(gate, Generic1Q):
        return {"kind": "u1", "qubits": [gate.qubit], "matrix": matrix_to_json(gate.matrix)}
    if isinstance(gate, CNOT):
        return {"kind": "cnot", "qubits": [gate.control, gate.target]}
    if isinstance(gate, CZ):
        return {"kind": "cz", "qubits": [gate.control, gate.target]}
    if isinstance(gate, MCX):
        return {"kind": "mcx", "qubits": [*gate.controls, gate.target]}
    raise TypeError(f"unknown qubit gate {gate!r}")


def _qudit_gate_from_json(doc: Any, path: str) -> QuditGate:
    doc = _as_dict(doc, path)
    kind = _as_str(_get(doc, "kind", path), f"{path}.kind")
    if kind == "local":
        qudit = _as_int(_get(doc, "qudit", path), f"{path}.qudit")
        return Local1D(qudit, matrix_from_json(_get(doc, "matrix", path), f"{path}.matrix"))
    if kind == "ctrl":
        control = _as_int(_get(doc, "control", path), f"{path}.control")
        target = _as_int(_get(doc, "target", path), f"{path}.target")
        levels = tuple(
            _as_int(v, f"{path}.levels[{i}]")
            for i, v in enumerate(_as_list(_get(doc, "levels", path), f"{path}.levels"))
        )
        return CtrlEmbedded(
            control, target, levels,
            matrix_from_json(_get(doc, "matrix", path), f"{path}.matrix"),
        )
    raise SchemaError(f"{path}.kind", f"unknown qudit gate kind {kind!r}")


def _qudit_gate_to_json(gate: QuditGate) -> dict:
    if isinstance(gate, Local1D):
        return {"kind": "local", "qudit": gate.qudit, "matrix": matrix_to_json(gate.matrix)}
    if isinstance(gate, CtrlEmbedded):
        return {
            "kind": "ctrl",
            "control": gate.control,
            "target": gate.target,
            "levels": list(gate.levels),
            "matrix": matrix_to_json(gate.matrix),
        }
    raise TypeError(f"unknown qudit gate {gate!r}")


def circuit_from_json(doc: Any) -> QubitCircuit | QuditCircuit:
    """Parse and fully validate a circuit document of either kind."""
    doc = _as_dict(doc, "$")
    kind = _as_str(_get(doc, "kind", "$"), "$.kind")
    gates_doc = _as_list(_get(doc, "gates", "$"), "$.gates")
    if kind == "qubit":
        n = _as_int(_get(doc, "n", "$"), "$.n")
        gates = tuple(
            _qubit_gate_from_json(g, f"$.gates[{i}]") for i, g in enumerate(gates_doc)
        )
        circuit = QubitCircuit(n, gates)
        validate_qubit_circuit(circuit)
        return circuit
    if kind == "qudit":
        dims = tuple(
            _as_int(d, f"$.dims[{i}]")
            for i, d in enumerate(_as_list(_get(doc, "dims", "$"), "$.dims"))
        )
        gates = tuple(
            _qudit_gate_from_json(g, f"$.gates[{i}]") for i, g in enumerate(gates_doc)
        )
        circuit = QuditCircuit(dims, gates)
        validate_qudit_circuit(circuit)
        return circuit
    raise SchemaError("$.kind", f"expected 'qubit' or 'qudit', got {kind!r}")


def circuit_to_json(circuit: QubitCircuit | QuditCircuit) -> dict:
    if isinstance(circuit, QubitCircuit):
        return {
            "kind": "qubit",
            "n": circuit.n,
            "gates": [_qubit_gate_to_json(g) for g in circuit.gates],
        }
    return {
        "kind": "qudit",
        "dims": list(circuit.dims),
        "gates": [_qudit_gate_to_json(g) for g in circuit.gates],
    }


# ---------------------------------------------------------------------------
# Mappings, error models, reports, counts


def mapping_from_json(doc: Any, dims: tuple[int, ...]) -> Mapping:
    doc = _as_dict(doc, "$")
    groups_doc = _as_list(_get(doc, "mapping_opt", "$"), "$.mapping_opt")
    groups = tuple(
        tuple(
            _as_int(q, f"$.mapping_opt[{j}][{k}]")
            for k, q in enumerate(_as_list(group, f"$.mapping_opt[{j}]"))
        )
        for j, group in enumerate(groups_doc)
    )
    return Mapping(groups, tuple(dims))


def mapping_to_json(mapping: Mapping) -> dict:
    return {"mapping_opt": [list(g) for g in mapping.groups]}


def error_model_from_json(doc: Any) -> ErrorModel:
    doc = _as_dict(doc, "$")
    e1 = _as_number(_get(doc, "e1", "$"), "$.e1")
    e2 = _as_number(_get(doc, "e2", "$"), "$.e2")
    overrides_doc = _as_dict(doc.get("overrides", {}), "$.overrides")
    overrides = {
        _as_str(k, "$.overrides"): _as_number(v, f"$.overrides.{k}")
        for k, v in overrides_doc.items()
    }
    try:
        return ErrorModel(e1, e2, overrides)
    except ValueError as err:
        raise SchemaError("$", str(err)) from None


def report_to_json(report: TranspileReport) -> dict:
    return {
        "mapping_opt": [list(g) for g in report.mapping.groups],
        "two_qudit_gates": report.two_qudit_gates,
        "single_qudit_gates": report.single_qudit_gates,
        "baseline_two_qubit_gates": report.baseline_two_qubit_gates,
        "fidelity_opt": report.fidelity_opt,
        "fidelity_trivial": report.fidelity_trivial,
    }


def counts_to_json(counts: Counts) -> dict:
    return {
        "shots": counts.shots,
        "seed": counts.seed,
        "generator": counts.generator,
        "counts": dict(sorted(counts.counts.items())),
    }


def counts_from_json(doc: Any, dims: tuple[int, ...]) -> Counts:
    doc = _as_dict(doc, "$")
    shots = _as_int(_get(doc, "shots", "$"), "$.shots")
    seed = _as_int(_get(doc, "seed", "$"), "$.seed")
    generator = _as_str(_get(doc, "generator", "$"), "$.generator")
    table_doc = _as_dict(_get(doc, "counts", "$"), "$.counts")
    table: dict[str, int] = {}
    total = 0
    for key, value in table_doc.items():
        tally = _as_int(value, f"$.counts.{key}")
        if tally < 0:
            raise SchemaError(f"$.counts.{key}", f"negative count {tally}")
        try:
            parse_digit_key(key, tuple(dims))
        except ValueError as err:
            raise SchemaError(f"$.counts.{key}", str(err)) from None
        table[key] = tally
        total += tally
    if total != shots:
        raise SchemaError("$.counts", f"counts sum to {total}, shots say {shots}")
    return Counts(tuple(dims), table, shots, seed, generator)


def decoded_counts_to_json(qudit_counts: Counts, qubit_counts: Counts) -> dict:
    return {
        "shots": qudit_counts.shots,
        "seed": qudit_counts.seed,
        "generator": qudit_counts.generator,
        "qudit_res": dict(sorted(qudit_counts.counts.items())),
        "qubit_res": dict(sorted(qubit_counts.counts.items())),
    }
