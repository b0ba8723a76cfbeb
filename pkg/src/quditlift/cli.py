"""Command-line pipeline: transpile, simulate, compare.

Exit codes: 0 success, 2 malformed input or usage, 3 infeasible
(register too small, no lowerable mapping), 4 measured outcomes off the
mapping's image.
"""

from __future__ import annotations

import argparse
import sys

from .circuits import QubitCircuit, QuditCircuit
from .cost import ErrorModel
from .errors import (
    CircuitError,
    IncompatibleRegisterError,
    MappingError,
    NoFeasibleMappingError,
    QuditLiftError,
    SchemaError,
    SupportViolationError,
    TooLargeError,
    TranspileError,
)
from .postprocess import decode_counts
from .serialization import (
    circuit_from_json,
    circuit_to_json,
    counts_to_json,
    decoded_counts_to_json,
    dumps_canonical,
    error_model_from_json,
    load_json_file,
    mapping_from_json,
    report_to_json,
    save_json_file,
)
from .simulator import run, sample
from .transpiler import report_for_mapping, select_mapping

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_SUPPORT = 4


def parse_dims(text: str) -> tuple[int, ...]:
    """Comma list ("4,4,4,4") or count-times-dimension shorthand ("4x4")."""
    text = text.strip()
    if "x" in text:
        count_s, _, dim_s = text.partition("x")
        try:
            count, dim = int(count_s), int(dim_s)
        except ValueError:
            raise ValueError(f"bad dims shorthand {text!r}") from None
        if count < 1 or dim < 2:
            raise ValueError(f"bad dims shorthand {text!r}")
        return (dim,) * count
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad dims list {text!r}") from None
    if not dims or any(d < 2 for d in dims):
        raise ValueError(f"bad dims list {text!r}")
    return dims


def _load_error_model(path: str | None) -> ErrorModel:
    if path is None:
        return ErrorModel()
    return error_model_from_json(load_json_file(path))


def _load_qubit_circuit(path: str) -> QubitCircuit:
    circuit = circuit_from_json(load_json_file(path))
    if not isinstance(circuit, QubitCircuit):
        raise SchemaError("$.kind", "expected a qubit-kind circuit")
    return circuit


def _cmd_transpile(args: argparse.Namespace) -> int:
    circuit = _load_qubit_circuit(args.circuit)
    dims = parse_dims(args.dims)
    model = _load_error_model(args.error_model)
    if args.mapping is not None:
        mapping = mapping_from_json(load_json_file(args.mapping), dims)
        lowered, report = report_for_mapping(circuit, mapping, model)
    else:
        _, lowered, report = select_mapping(circuit, dims, model, args.search_limit)
    save_json_file(args.out_circuit, circuit_to_json(lowered))
    save_json_file(args.out_report, report_to_json(report))
    if args.plot is not None:
        from .figures import render_report_figure

        render_report_figure(report, args.plot)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    circuit = circuit_from_json(load_json_file(args.circuit))
    if args.mapping is not None and not isinstance(circuit, QuditCircuit):
        raise SchemaError("$.kind", "--mapping needs a qudit-kind circuit")
    state = run(circuit)
    counts = sample(state, args.shots, args.seed)
    decoded = None
    if args.mapping is not None:
        mapping = mapping_from_json(load_json_file(args.mapping), circuit.dims)
        decoded = decode_counts(counts, mapping)
        save_json_file(args.out, decoded_counts_to_json(counts, decoded))
    else:
        save_json_file(args.out, counts_to_json(counts))
    if args.plot is not None:
        from .figures import render_counts_figure

        render_counts_figure(counts, args.plot, decoded)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    circuit = _load_qubit_circuit(args.circuit)
    dims = parse_dims(args.dims)
    model = _load_error_model(args.error_model)
    mapping, _, report = select_mapping(circuit, dims, model)
    if args.json:
        sys.stdout.write(dumps_canonical(report_to_json(report)))
    else:
        groups = ", ".join(
            f"qudit {j}: {list(g)}" for j, g in enumerate(mapping.groups)
        )
        trivial = (
            "n/a" if report.fidelity_trivial is None
            else f"{report.fidelity_trivial:.6f}"
        )
        print(f"mapping                    {groups}")
        print(f"two-qudit gates            {report.two_qudit_gates}")
        print(f"single-qudit gates         {report.single_qudit_gates}")
        print(f"baseline two-qubit gates   {report.baseline_two_qubit_gates}")
        print(f"fidelity, chosen mapping   {report.fidelity_opt:.6f}")
        print(f"fidelity, qubit-per-qudit  {trivial}")
    if args.plot is not None:
        from .figures import render_report_figure

        render_report_figure(report, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditlift",
        description="Transpile qubit circuits onto qudit registers, emulate them, and decode the outcomes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transpile", help="lower a qubit circuit onto a qudit register")
    p_tr.add_argument("--circuit", required=True, help="qubit circuit JSON")
    p_tr.add_argument("--dims", required=True, help="register dimensions, e.g. 4,4,4,4 or 4x4")
    p_tr.add_argument("--mapping", help="mapping JSON; omit to search for the best one")
    p_tr.add_argument("--error-model", help="error model JSON")
    p_tr.add_argument("--search-limit", type=int, default=10_000, help="mapping candidates to try")
    p_tr.add_argument("--out-circuit", required=True, help="where to write the qudit circuit JSON")
    p_tr.add_argument("--out-report", required=True, help="where to write the report JSON")
    p_tr.add_argument("--plot", help="also render the report as a PNG figure")
    p_tr.set_defaults(fn=_cmd_transpile)

    p_sim = sub.add_parser("simulate", help="run a circuit and sample measurement outcomes")
    p_sim.add_argument("--circuit", required=True, help="circuit JSON, qubit or qudit kind")
    p_sim.add_argument("--shots", required=True, type=int, help="number of samples")
    p_sim.add_argument("--seed", required=True, type=int, help="sampling seed")
    p_sim.add_argument("--mapping", help="mapping JSON; adds decoded qubit outcomes")
    p_sim.add_argument("--out", required=True, help="where to write the counts JSON")
    p_sim.add_argument("--plot", help="also render the counts as a PNG figure")
    p_sim.set_defaults(fn=_cmd_simulate)

    p_cmp = sub.add_parser("compare", help="mapping search summary versus the qubit baseline")
    p_cmp.add_argument("--circuit", required=True, help="qubit circuit JSON")
    p_cmp.add_argument("--dims", required=True, help="register dimensions")
    p_cmp.add_argument("--error-model", help="error model JSON")
    p_cmp.add_argument("--json", action="store_true", help="print the report as JSON")
    p_cmp.add_argument("--plot", help="also render the report as a PNG figure")
    p_cmp.set_defaults(fn=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if err.code else EXIT_OK
    try:
        return args.fn(args)
    except SupportViolationError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SUPPORT
    except (
        IncompatibleRegisterError,
        NoFeasibleMappingError,
        TranspileError,
        TooLargeError,
    ) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SchemaError, CircuitError, MappingError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except QuditLiftError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
