"""OOCX v1: a line-oriented text format for code files.

    OOCX 1
    dims d1 d2 ... dn        (last entry is the time length T)
    weight w
    lambda_a x
    lambda_c y
    count M
    word: (i1,...,t) (i1,...,t) ...

UTF-8, LF line endings, tuples and words in lexicographic order.  Output is
byte-deterministic for a given code; parse errors carry 1-based line numbers.
"""

from __future__ import annotations

import os

from .ooc import Code, CodeShape, Codeword, CodeError


class OocxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def format_oocx(code: Code) -> str:
    out = ["OOCX 1"]
    out.append("dims " + " ".join(str(d) for d in code.shape.dims))
    out.append(f"weight {code.w}")
    out.append(f"lambda_a {code.lambda_a}")
    out.append(f"lambda_c {code.lambda_c}")
    out.append(f"count {len(code.words)}")
    for cw in sorted(code.words, key=lambda c: c.pulses):
        tuples = " ".join("(" + ",".join(str(c) for c in p) + ")" for p in cw.pulses)
        out.append(f"word: {tuples}")
    return "\n".join(out) + "\n"


def write_oocx(code: Code, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_oocx(code))


def _int_field(lines: list[str], idx: int, label: str, minimum: int = 0) -> int:
    lineno = idx + 1
    if idx >= len(lines):
        raise OocxError(f"missing '{label}' line", lineno)
    parts = lines[idx].split()
    if len(parts) != 2 or parts[0] != label:
        raise OocxError(f"expected '{label} <int>', got {lines[idx]!r}", lineno)
    try:
        value = int(parts[1])
    except ValueError:
        raise OocxError(f"{label} is not an integer: {parts[1]!r}", lineno) from None
    if value < minimum:
        raise OocxError(f"{label} must be >= {minimum}, got {value}", lineno)
    return value


def parse_oocx(text: str) -> Code:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != "OOCX 1":
        raise OocxError(f"bad header: expected 'OOCX 1', got {lines[0]!r}" if lines else "empty file", 1)
    if len(lines) < 2 or not lines[1].startswith("dims "):
        raise OocxError("expected 'dims d1 d2 ... dn'", 2)
    try:
        dims = [int(tok) for tok in lines[1].split()[1:]]
    except ValueError:
        raise OocxError(f"non-integer dimension in {lines[1]!r}", 2) from None
    if not dims or any(d < 1 for d in dims):
        raise OocxError(f"dimensions must be positive, got {dims}", 2)
    shape = CodeShape(tuple(dims[:-1]), dims[-1])

    w = _int_field(lines, 2, "weight")
    lambda_a = _int_field(lines, 3, "lambda_a")
    lambda_c = _int_field(lines, 4, "lambda_c")
    count = _int_field(lines, 5, "count")

    if len(lines) != 6 + count:
        raise OocxError(
            f"expected {count} word lines, found {len(lines) - 6}", min(len(lines), 6 + count) + 1
        )

    words = []
    prev_pulses = None
    for wi in range(count):
        lineno = 7 + wi
        line = lines[6 + wi]
        if not line.startswith("word:"):
            raise OocxError(f"expected 'word: ...', got {line!r}", lineno)
        tokens = line[len("word:"):].split()
        if len(tokens) != w:
            raise OocxError(f"word has {len(tokens)} pulses, weight is {w}", lineno)
        pulses = []
        for tok in tokens:
            if not (tok.startswith("(") and tok.endswith(")")):
                raise OocxError(f"malformed pulse tuple {tok!r}", lineno)
            try:
                coords = tuple(int(c) for c in tok[1:-1].split(","))
            except ValueError:
                raise OocxError(f"malformed pulse tuple {tok!r}", lineno) from None
            if len(coords) != len(dims):
                raise OocxError(
                    f"pulse {tok} has {len(coords)} coordinates, expected {len(dims)}", lineno
                )
            for c, d in zip(coords, dims):
                if not 0 <= c < d:
                    raise OocxError(f"coordinate {c} out of range [0, {d}) in {tok}", lineno)
            pulses.append(coords)
        for a, b in zip(pulses, pulses[1:]):
            if a == b:
                raise OocxError(f"duplicate pulse {a} in word", lineno)
            if a > b:
                raise OocxError("pulses are not in lexicographic order", lineno)
        if prev_pulses is not None and pulses < prev_pulses:
            raise OocxError("words are not in lexicographic order", lineno)
        prev_pulses = pulses
        try:
            words.append(Codeword(shape, tuple(pulses)))
        except CodeError as exc:
            raise OocxError(str(exc), lineno) from None
    return Code(shape, w, lambda_a, lambda_c, tuple(words))


def read_oocx(path: str | os.PathLike) -> Code:
    with open(path, encoding="utf-8") as fh:
        return parse_oocx(fh.read())
