"""Command line front end: isqrt, resources, verify and export.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
All output is deterministic for fixed flags; the elapsed-time line printed
by `verify` is suppressed with --no-timing.
"""
from __future__ import annotations

import argparse
import math
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import __version__
from .analysis import (
    analyze,
    count_ops,
    expected_t_count_adder,
    expected_t_count_ctrl_adder,
    expected_t_count_isqrt,
)
from .arithmetic import (
    build_adder,
    build_ctrl_add_sub,
    build_ctrl_adder,
    build_subtractor,
)
from .circuit import Circuit
from .errors import CapacityError, CircuitError
from .export import report_rows_to_csv, report_rows_to_json, to_qasm
from .lowering import flatten
from .sim import perm_run
from .sqrt import build_isqrt_circuit, build_isqrt_pipeline, isqrt, min_width

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

#: Exhaustive verification is limited to this many enumerated cases.
MAX_EXHAUSTIVE_CASES = 1 << 20
SAMPLED_CASES = 100
_SAMPLE_SEED = 0


@dataclass(frozen=True)
class CircuitFamily:
    """One selectable circuit generator with its layout facts.

    verify_build, when set, is the circuit actually swept by `verify`
    (the square root is verified through its readout pipeline).
    """

    build: Callable[[int], Circuit]
    min_n: int
    even_only: bool
    width_of: Callable[[int], int]
    expected_t_count: Callable[[int], int]
    verify_build: Callable[[int], Circuit] | None = None

    def verify_circuit(self, n: int) -> Circuit:
        return (self.verify_build or self.build)(n)


FAMILIES: dict[str, CircuitFamily] = {
    "adder": CircuitFamily(
        build_adder, 1, False, lambda n: 2 * n, expected_t_count_adder
    ),
    "subtractor": CircuitFamily(
        build_subtractor, 1, False, lambda n: 2 * n, expected_t_count_adder
    ),
    "ctrl-add-sub": CircuitFamily(
        build_ctrl_add_sub, 1, False, lambda n: 2 * n + 1, expected_t_count_adder
    ),
    "ctrl-add": CircuitFamily(
        build_ctrl_adder, 2, False, lambda n: 2 * n + 1, expected_t_count_ctrl_adder
    ),
    "isqrt": CircuitFamily(
        build_isqrt_circuit,
        4,
        True,
        lambda n: 2 * n + 1,
        expected_t_count_isqrt,
        verify_build=build_isqrt_pipeline,
    ),
}


def _parse_n_range(spec: str, family: CircuitFamily) -> list[int]:
    """Expand "4" or "6..16" into the list of widths to process."""
    if ".." in spec:
        lo_text, hi_text = spec.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(spec)
    step = 2 if family.even_only else 1
    values = list(range(lo, hi + 1, step))
    for n in values:
        _check_family_n(family, n)
    if not values:
        raise CircuitError(f"empty width range '{spec}'")
    return values


def _check_family_n(family: CircuitFamily, n: int) -> None:
    if family.even_only and n % 2:
        raise CircuitError(f"n must be even, got {n}")
    if n < family.min_n:
        raise CircuitError(f"n must be >= {family.min_n}, got {n}")


# ---------------------------------------------------------------- isqrt


def cmd_isqrt(args: argparse.Namespace) -> int:
    value = args.value
    n = args.n
    if n is None:
        n = min_width(value)
        print(f"n = {n} (auto-selected: smallest even n >= 4 "
              f"with value <= 2^(n-1) - 1)")
    result = isqrt(value, n)
    print(f"a = {value}, root = {result.root}, remainder = {result.remainder}")
    if args.resources:
        report = analyze(build_isqrt_circuit(n))
        print(f"qubits = {report.width}")
        print(f"t_count = {report.t_count}")
        print(f"t_depth = {report.t_depth} (scheduled upper bound)")
        print(f"total_depth = {report.total_depth}")
    return EXIT_OK


# ------------------------------------------------------------ resources


def _resource_row(name: str, n: int) -> dict:
    family = FAMILIES[name]
    report = analyze(family.build(n))
    histogram = {
        kind.value: count
        for kind, count in sorted(report.histogram.items(), key=lambda kv: kv[0].value)
    }
    return {
        "n": n,
        "width": report.width,
        "width_expected": family.width_of(n),
        "t_count": report.t_count,
        "t_count_expected": family.expected_t_count(n),
        "t_depth": report.t_depth,
        "total_depth": report.total_depth,
        "histogram": histogram,
    }


def _rows_to_table(name: str, rows: list[dict]) -> str:
    headers = [
        "n", "qubits", "qubits(E)", "t_count", "t_count(E)",
        "t_depth", "total_depth", "match",
    ]
    lines = [f"circuit = {name} (t_depth is a scheduled upper bound)"]
    table = [headers]
    for r in rows:
        match = (
            r["width"] == r["width_expected"]
            and r["t_count"] == r["t_count_expected"]
        )
        table.append([
            str(r["n"]), str(r["width"]), str(r["width_expected"]),
            str(r["t_count"]), str(r["t_count_expected"]),
            str(r["t_depth"]), str(r["total_depth"]),
            "yes" if match else "NO",
        ])
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    for row in table:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_resources(args: argparse.Namespace) -> int:
    family = FAMILIES[args.circuit]
    values = _parse_n_range(args.n, family)
    rows = [_resource_row(args.circuit, n) for n in values]
    if args.format == "table":
        text = _rows_to_table(args.circuit, rows)
    elif args.format == "json":
        text = report_rows_to_json(rows)
    else:
        for row in rows:
            del row["histogram"], row["width_expected"]
        text = report_rows_to_csv(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        print(text, end="")
    return EXIT_OK


# --------------------------------------------------------------- verify


def _case_count(name: str, n: int) -> int:
    if name in ("adder", "subtractor"):
        return 1 << (2 * n)
    if name in ("ctrl-add-sub", "ctrl-add"):
        return 1 << (2 * n + 1)
    return (1 << (n - 1)) - 1  # isqrt inputs a = 1 .. 2^(n-1) - 1


def _oracle_case(name: str, n: int, k: int) -> tuple[int, int]:
    """Input basis state and oracle-computed output state for case k."""
    mask = (1 << n) - 1
    if name in ("adder", "subtractor"):
        a, b = k & mask, k >> n
        out = (a - b) & mask if name == "subtractor" else (a + b) & mask
        return a | b << n, out | b << n
    if name in ("ctrl-add-sub", "ctrl-add"):
        z, a, b = k & 1, (k >> 1) & mask, k >> (n + 1)
        if name == "ctrl-add-sub":
            out = (a - b) & mask if z else (a + b) & mask
        else:
            out = (a + b) & mask if z else a
        return k, z | out << 1 | b << (n + 1)
    a = k + 1
    root = math.isqrt(a)
    return a | 1 << n, (a - root * root) | root << n


def cmd_verify(args: argparse.Namespace) -> int:
    family = FAMILIES[args.circuit]
    _check_family_n(family, args.n)
    mode = "sampled" if args.sampled else "exhaustive"
    total = _case_count(args.circuit, args.n)
    if mode == "exhaustive":
        if total > MAX_EXHAUSTIVE_CASES:
            raise CapacityError(
                f"{total} cases exceed the exhaustive limit "
                f"({MAX_EXHAUSTIVE_CASES}); use --sampled"
            )
        indices: Iterable[int] = range(total)
    else:
        rng = random.Random(_SAMPLE_SEED)
        indices = [rng.randrange(total) for _ in range(SAMPLED_CASES)]
    flat = flatten(family.verify_circuit(args.n))
    started = time.perf_counter()
    checked = passed = 0
    first_failure: tuple[int, int, int] | None = None
    for k in indices:
        state_in, state_expected = _oracle_case(args.circuit, args.n, k)
        got = perm_run(flat, state_in)
        checked += 1
        if got == state_expected:
            passed += 1
        elif first_failure is None:
            first_failure = (state_in, state_expected, got)
    elapsed = time.perf_counter() - started
    print(f"verify {args.circuit} n={args.n} mode={mode}")
    print(f"checked {checked} cases, {passed} passed")
    if not args.no_timing:
        print(f"elapsed {elapsed:.3f}s")
    if first_failure is not None:
        state_in, expected, got = first_failure
        print(
            f"FAIL: input={state_in} expected={expected} got={got}",
            file=sys.stderr,
        )
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# --------------------------------------------------------------- export


def cmd_export(args: argparse.Namespace) -> int:
    family = FAMILIES[args.circuit]
    _check_family_n(family, args.n)
    circuit = family.build(args.n)
    text = to_qasm(circuit)
    gate_total = sum(count_ops(circuit).values())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output} ({gate_total} gates)")
    else:
        print(text, end="")
    return EXIT_OK


# ----------------------------------------------------------------- main


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsqrt",
        description="Build, simulate, verify and cost the non-restoring "
        "quantum integer square root circuit and its arithmetic blocks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("isqrt", help="compute a root/remainder by simulation")
    p.add_argument("--value", type=int, required=True, help="input value a")
    p.add_argument("--n", type=int, help="register width (even, >= 4)")
    p.add_argument("--resources", action="store_true",
                   help="also print the circuit's resource metrics")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_isqrt)

    p = sub.add_parser("resources", help="resource table over a width range")
    p.add_argument("--circuit", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", required=True, metavar="N[..M]",
                   help="width or inclusive range, e.g. 4 or 6..16")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("verify", help="sweep a circuit against the integer oracle")
    p.add_argument("--circuit", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--sampled", action="store_true",
                      help=f"check {SAMPLED_CASES} random cases instead")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="emit a circuit as OpenQASM 2.0")
    p.add_argument("--circuit", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CircuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
