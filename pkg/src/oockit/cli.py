"""Command-line front end: construct, verify, bound, reshape, fold, report.

Exit codes: 0 success, 1 validation/domain failure, 2 usage error.
All reports are printed as text by default; --json switches to a stable
JSON schema (sorted keys, exact rationals as numerator/denominator pairs).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from math import prod

from .bounds import (
    BoundError,
    johnson_amops,
    johnson_ideal,
    johnson_nd,
    johnson_nonbinary,
)
from .conics import ConicError
from .constructions import (
    ConstructionError,
    construct_conic_line_code,
    construct_spread_line_code,
)
from .field import DEFAULT_TABLE_LIMIT, FieldError
from .geometry import GeometryError
from .ooc import Code, CodeError, CorrelationReport, validate_code
from .oocx import OocxError, read_oocx, write_oocx
from .transforms import TransformError, fold_time, reshape

_DOMAIN_ERRORS = (
    BoundError,
    CodeError,
    ConicError,
    ConstructionError,
    FieldError,
    GeometryError,
    OocxError,
    TransformError,
)


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(tok) for tok in text.lower().split("x"))
    except ValueError:
        raise CodeError(f"bad dimension list {text!r}: expected like 5x5x5") from None
    if not dims or any(d < 1 for d in dims):
        raise CodeError(f"dimensions must be positive, got {text!r}")
    return dims


def _parse_indices(text: str) -> tuple[int, ...]:
    try:
        idx = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise CodeError(f"bad index list {text!r}: expected like 1 or 1,2") from None
    return idx


def _frac(fr: Fraction) -> dict:
    return {"numerator": fr.numerator, "denominator": fr.denominator}


def _bound_payload(kind, lam, sections, result) -> dict:
    return {
        "kind": kind,
        "lambda": lam,
        "sections": list(sections) if sections else None,
        "branch": result.branch,
        "J": result.J,
        "f": _frac(result.f_exact),
        "branches": [
            {"branch": b.branch, "J": b.J, "f": _frac(b.f_exact)} for b in result.branches
        ],
    }


def _applicable_bounds(code: Code, report: CorrelationReport) -> list[dict]:
    entries = []
    lam_nd = max(code.lambda_a, code.lambda_c)
    entries.append(_bound_payload("nd", lam_nd, None, johnson_nd(code.shape, code.w, lam_nd)))
    if report.max_offpeak_auto == 0 and code.w > code.lambda_c:
        entries.append(
            _bound_payload("ideal", code.lambda_c, None, johnson_ideal(code.shape, code.w, code.lambda_c))
        )
        for J, flags in sorted(report.amops_flags.items()):
            if flags.amops:
                dims = tuple(code.shape.space_dims[j - 1] for j in J)
                entries.append(
                    _bound_payload(
                        "amops", code.lambda_c, J, johnson_amops(code.shape, code.w, code.lambda_c, dims)
                    )
                )
    return entries


def _code_payload(code: Code, report: CorrelationReport) -> dict:
    bounds = _applicable_bounds(code, report)
    min_bound = min((b["J"] for b in bounds), default=None)
    size = code.size
    payload = {
        "shape": {
            "space_dims": list(code.shape.space_dims),
            "T": code.shape.T,
            "N": code.shape.N,
        },
        "w": code.w,
        "size": size,
        "declared": {"lambda_a": code.lambda_a, "lambda_c": code.lambda_c},
        "measured": {"lambda_a": report.max_offpeak_auto, "lambda_c": report.max_cross},
        "ideal": report.is_ideal,
        "amops": {
            ",".join(str(j) for j in J): {"amops": fl.amops, "sps": fl.sps}
            for J, fl in sorted(report.amops_flags.items())
        },
        "witnesses": {
            "auto": list(report.auto_witness) if report.auto_witness else None,
            "cross": list(report.cross_witness) if report.cross_witness else None,
        },
        "bounds": bounds,
        "min_bound": min_bound,
        "j_optimal": min_bound is not None and size == min_bound,
        "ratio": _frac(Fraction(size, min_bound)) if min_bound else None,
        "passes": report.passes,
    }
    return payload


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
        return
    for line in _text_lines(payload):
        print(line)


def _text_lines(payload: dict) -> list[str]:
    lines = []
    shape = payload.get("shape")
    if shape:
        dims = "x".join(str(d) for d in (*shape["space_dims"], shape["T"]))
        lines.append(f"shape {dims} (N = {shape['N']})")
        lines.append(f"weight {payload['w']}, size {payload['size']}")
        d = payload["declared"]
        m = payload["measured"]
        lines.append(
            f"declared (lambda_a, lambda_c) = ({d['lambda_a']}, {d['lambda_c']}); "
            f"measured = ({m['lambda_a']}, {m['lambda_c']})"
        )
        lines.append(f"ideal: {payload['ideal']}")
        for key, fl in payload["amops"].items():
            lines.append(f"sections ({key}): amops={fl['amops']} sps={fl['sps']}")
        for b in payload["bounds"]:
            sections = f" sections={b['sections']}" if b["sections"] else ""
            lines.append(
                f"bound {b['kind']}{sections} (lambda={b['lambda']}, {b['branch']}): "
                f"J = {b['J']}, f = {b['f']['numerator']}/{b['f']['denominator']}"
            )
        if payload["min_bound"] is not None:
            ratio = payload["ratio"]
            lines.append(
                f"min bound {payload['min_bound']}; J-optimal: {payload['j_optimal']}; "
                f"ratio {ratio['numerator']}/{ratio['denominator']}"
            )
        verdict = "PASS" if payload["passes"] else "FAIL"
        lines.append(f"verdict: {verdict}")
        if not payload["passes"] and payload["witnesses"]["cross"]:
            i, j, t = payload["witnesses"]["cross"]
            lines.append(f"cross witness: words ({i}, {j}) at shift {t}")
        if not payload["passes"] and payload["witnesses"]["auto"]:
            wi, t = payload["witnesses"]["auto"]
            lines.append(f"auto witness: word {wi} at shift {t}")
    return lines


def _cmd_construct(args) -> int:
    limit = args.max_field_size or DEFAULT_TABLE_LIMIT
    if args.kind == "spread-lines":
        code = construct_spread_line_code(args.q, args.k, args.d, table_limit=limit)
    else:
        max_q = args.max_q if args.max_q else 13
        code = construct_conic_line_code(args.q, max_q=max_q, table_limit=limit)
    report = validate_code(code)
    if not report.passes:
        raise ConstructionError("constructed code failed revalidation")
    if args.out:
        write_oocx(code, args.out)
    _emit(_code_payload(code, report), args.json)
    return 0


def _cmd_verify(args) -> int:
    code = read_oocx(args.file)
    if args.lambda_a is not None or args.lambda_c is not None:
        code = replace(
            code,
            lambda_a=code.lambda_a if args.lambda_a is None else args.lambda_a,
            lambda_c=code.lambda_c if args.lambda_c is None else args.lambda_c,
        )
    report = validate_code(code)
    _emit(_code_payload(code, report), args.json)
    return 0 if report.passes else 1


def _cmd_bound(args) -> int:
    from .ooc import CodeShape

    dims = _parse_dims(args.dims)
    shape = CodeShape(dims[:-1], dims[-1])
    w = args.w
    lam = args.lam
    entries = []
    if args.nonbinary is not None:
        entries.append(
            _bound_payload(
                "nonbinary", lam, None, johnson_nonbinary(prod(dims), w, lam, args.nonbinary)
            )
        )
    if args.amops is not None:
        sections = _parse_indices(args.amops)
        for j in sections:
            if not 1 <= j <= len(shape.space_dims):
                raise BoundError(f"section index {j} out of range for {len(shape.space_dims)} spatial dims")
        sdims = tuple(shape.space_dims[j - 1] for j in sections)
        entries.append(
            _bound_payload("amops", lam, sections, johnson_amops(shape, w, lam, sdims))
        )
    if args.ideal:
        entries.append(_bound_payload("ideal", lam, None, johnson_ideal(shape, w, lam)))
    if not entries:
        entries.append(_bound_payload("nd", lam, None, johnson_nd(shape, w, lam)))
        if w <= shape.N // shape.T:
            entries.append(_bound_payload("ideal", lam, None, johnson_ideal(shape, w, lam)))
    payload = {
        "query": {"dims": list(dims), "w": w, "lambda": lam},
        "bounds": entries,
        "min_bound": min(b["J"] for b in entries),
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for b in entries:
            sections = f" sections={b['sections']}" if b["sections"] else ""
            print(
                f"bound {b['kind']}{sections} ({b['branch']}): J = {b['J']}, "
                f"f = {b['f']['numerator']}/{b['f']['denominator']}"
            )
        print(f"min bound: {payload['min_bound']}")
    return 0


def _cmd_reshape(args) -> int:
    code = read_oocx(args.file)
    dims = _parse_dims(args.dims)
    if dims[-1] != code.shape.T:
        raise TransformError(
            f"reshape keeps the time length: file has T = {code.shape.T}, got {dims[-1]}"
        )
    out = reshape(code, dims[:-1])
    write_oocx(out, args.out)
    if not args.json:
        print(f"reshaped {len(out.words)} words to {args.dims} -> {args.out}")
    else:
        print(json.dumps({"out": args.out, "dims": list(dims), "size": out.size}, sort_keys=True))
    return 0


def _cmd_fold(args) -> int:
    code = read_oocx(args.file)
    folded = fold_time(code, args.t1)  # revalidates internally
    write_oocx(folded, args.out)
    report = validate_code(folded)
    payload = _code_payload(folded, report)
    payload["fold"] = {"t1": args.t1, "t2": folded.shape.T, "source_size": code.size}
    _emit(payload, args.json)
    return 0


def _cmd_report(args) -> int:
    code = read_oocx(args.file)
    report = validate_code(code)
    _emit(_code_payload(code, report), args.json)
    return 0 if report.passes else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oockit",
        description="optical orthogonal codes from projective geometry: "
        "construct, verify, transform, and bound",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code family")
    csub = c.add_subparsers(dest="kind", required=True)
    for kind in ("spread-lines", "conic-lines"):
        pk = csub.add_parser(kind)
        pk.add_argument("--q", type=int, required=True, help="field order (prime power)")
        if kind == "spread-lines":
            pk.add_argument("--k", type=int, required=True, help="projective dimension")
            pk.add_argument("--d", type=int, required=True, help="spread flat dimension")
        else:
            pk.add_argument("--max-q", type=int, default=None, help="override the q <= 13 guard")
        pk.add_argument("--out", help="write the code to this OOCX file")
        pk.add_argument("--max-field-size", type=int, default=None, help="field table limit")
        _add_common(pk)
        pk.set_defaults(func=_cmd_construct, kind=kind)

    v = sub.add_parser("verify", help="brute-force check a code file")
    v.add_argument("file")
    v.add_argument("--lambda-a", type=int, default=None, help="override the declared lambda_a")
    v.add_argument("--lambda-c", type=int, default=None, help="override the declared lambda_c")
    _add_common(v)
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bound", help="evaluate Johnson-type bounds")
    b.add_argument("--dims", required=True, help="shape like 5x5x5 (last entry is T)")
    b.add_argument("--w", type=int, required=True)
    b.add_argument("--lambda", type=int, required=True, dest="lam")
    b.add_argument("--amops", default=None, help="spatial dim indices like 1 or 1,2")
    b.add_argument("--ideal", action="store_true", help="ideal-code bound")
    b.add_argument("--nonbinary", type=int, default=None, help="alphabet parameter m")
    _add_common(b)
    b.set_defaults(func=_cmd_bound)

    r = sub.add_parser("reshape", help="refactor spatial dimensions")
    r.add_argument("file")
    r.add_argument("--dims", required=True, help="new shape (time length unchanged)")
    r.add_argument("--out", required=True)
    _add_common(r)
    r.set_defaults(func=_cmd_reshape)

    f = sub.add_parser("fold", help="fold time length T = t1*t2 into the first spatial dim")
    f.add_argument("file")
    f.add_argument("--t1", type=int, required=True)
    f.add_argument("--out", required=True)
    _add_common(f)
    f.set_defaults(func=_cmd_fold)

    rep = sub.add_parser("report", help="full validation + bounds report for a code file")
    rep.add_argument("file")
    _add_common(rep)
    rep.set_defaults(func=_cmd_report)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())
