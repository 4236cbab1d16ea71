"""Command-line front end: ``ffelim {det,solve,adjugate}``.

Input is UTF-8 text: a line with ``n``, then ``n`` rows of ``n`` integers,
then optionally ``rhs: v1 ... vn``. Exit codes: 0 success, 1 singular
matrix, 2 input error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .backsolve import back_substitute
from .elimination import EliminationResult, forward_eliminate
from .errors import ExactDivisionViolation, InputError, ParseError, ShapeMismatch, SingularMatrix
from .matrix import DenseMatrix, augment, augment_identity
from .ring import ZZ

EXIT_OK = 0
EXIT_SINGULAR = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

COMMANDS = ("det", "solve", "adjugate")

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class JobSpec:
    command: str
    input_path: str | None = None
    format: str = "text"
    trace: bool = False
    ring: str = "int"


def _parse_ints(line: str, lineno: int, offset: int = 0) -> list[int]:
    out = []
    for m in _TOKEN.finditer(line, offset):
        try:
            out.append(ZZ.parse(m.group()))
        except ValueError:
            raise ParseError(f"not an integer: {m.group()!r}", lineno, m.start() + 1) from None
    return out


def parse_input(data: bytes | str) -> tuple[DenseMatrix, list[int] | None]:
    """Parse the matrix file format into a matrix and an optional right-hand side."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8 ({exc.reason})", 1) from None
    lines = data.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)

    header = lines[0].strip()
    if not re.fullmatch(r"[0-9]+", header) or int(header) < 1:
        raise ParseError(f"expected matrix order n >= 1, got {header!r}", 1)
    n = int(header)

    rows = []
    for r in range(n):
        lineno = r + 2
        if lineno > len(lines):
            raise ParseError(f"expected {n} matrix rows, found {r}", lineno)
        row = _parse_ints(lines[lineno - 1], lineno)
        if len(row) != n:
            raise ParseError(f"row {r + 1} has {len(row)} entries, expected {n}", lineno)
        rows.append(row)

    rhs = None
    extra = lines[n + 1 :]
    if extra:
        lineno = n + 2
        line = extra[0]
        m = re.match(r"\s*rhs:", line)
        if not m:
            raise ParseError("expected 'rhs:' line or end of input", lineno)
        rhs = _parse_ints(line, lineno, m.end())
        if len(rhs) != n:
            raise ShapeMismatch(f"line {lineno}: rhs has {len(rhs)} entries, expected {n}")
        for k, rest in enumerate(extra[1:], start=lineno + 1):
            if rest.strip():
                raise ParseError("unexpected content after rhs", k)
    return DenseMatrix(ZZ, tuple(tuple(r) for r in rows)), rhs


def _fmt_rows(rows) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def _dump_forward(elim: EliminationResult, err: TextIO) -> None:
    assert elim.trace is not None
    for step in elim.trace.steps:
        if step.k == 0:
            err.write("B_1:\n")
        else:
            swap = f" (rows {step.k} and {step.swapped_from} swapped)" if step.swapped_from else ""
            err.write(f"step {step.k}{swap}, B_{step.k + 1}:\n")
        err.write(_fmt_rows(step.matrix.entries) + "\n")
    err.write(f"leading minors: {' '.join(str(x) for x in elim.leading_minors)}\n")
    err.write(f"sign: {elim.sign:+d}\n")


def _emit(payload: dict, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, separators=(",", ":")) + "\n")
        return
    for key, value in payload.items():
        if key == "adjugate":
            out.write("adjugate =\n" + _fmt_rows(value) + "\n")
        elif isinstance(value, list):
            out.write(f"{key} = {' '.join(value)}\n")
        else:
            out.write(f"{key} = {value}\n")


def _execute(job: JobSpec, A: DenseMatrix, rhs: list[int] | None, err: TextIO) -> dict:
    n = A.rows
    if job.command == "adjugate":
        system = augment_identity(A)
    elif job.command == "solve":
        if rhs is None:
            raise InputError("solve requires an 'rhs:' line")
        system = augment(A, rhs)
    else:
        system = augment(A, rhs if rhs is not None else [0] * n)

    elim = forward_eliminate(system, trace=job.trace)
    if job.trace:
        _dump_forward(elim, err)
    if job.command == "det":
        return {"det": str(elim.determinant)}

    dv = back_substitute(elim, trace=job.trace)
    if job.trace:
        assert dv.trace is not None
        for st in dv.trace:
            err.write(f"back column {st.column} row {st.row}: {st.numerator} -> {st.value}\n")
    delta = dv.delta
    if job.command == "solve":
        cramer = dv.columns[0]
        return {
            "det": str(delta),
            "cramer": [str(d) for d in cramer],
            "x": [str(ZZ.reduce_fraction(d, delta)) for d in cramer],
        }
    adj = [[str(dv.columns[j][k]) for j in range(n)] for k in range(n)]
    return {"det": str(delta), "adjugate": adj}


def run(job: JobSpec, stdin: TextIO | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        if job.command not in COMMANDS:
            raise InputError(f"unknown command {job.command!r}")
        if job.ring != "int":
            raise InputError(f"unsupported ring {job.ring!r}")
        if job.input_path is None:
            raw = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read()
        else:
            with open(job.input_path, "rb") as fh:
                raw = fh.read()
        A, rhs = parse_input(raw)
        payload = _execute(job, A, rhs, err)
    except SingularMatrix:
        err.write("error: singular matrix (det = 0)\n")
        return EXIT_SINGULAR
    except (InputError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ExactDivisionViolation as exc:
        err.write(f"error: internal invariant violation: {exc}\n")
        return EXIT_INTERNAL
    _emit(payload, job.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffelim",
        description="Fraction-free determinant, exact solve and adjugate over the integers.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", metavar="PATH", help="matrix file (default: standard input)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--trace", action="store_true", help="dump every elimination step to stderr")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    job = JobSpec(command=args.command, input_path=args.input, format=args.format, trace=args.trace)
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
