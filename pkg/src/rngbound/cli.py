"""Command-line interface.

    rngbound code-info  --code PATH [--cwe]
    rngbound analyze    --code PATH (--bias F | --source PATH) [--max-brute N]
    rngbound sweep      --code PATH --grid A:B:STEP [--max-brute N]
    rngbound sum-chain  --source PATH --n N
    rngbound spectrum   --source PATH

All commands take --format table|json|csv and --out PATH. Identical inputs
produce byte-identical output: JSON is rendered with sorted keys and fixed
17-significant-digit floats (so parsing and re-rendering is a fixed point),
CSV uses the same float format, and tables use shortest round-trip floats.
Exit codes: 0 success, 2 usage/input error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import analysis, codes, pmf, transforms
from .errors import CapacityError


# --- rendering helpers ------------------------------------------------------


def _g17(x: float) -> str:
    if math.isinf(x):
        return '"inf"'  # strict JSON has no infinity literal
    if math.isnan(x):
        return '"nan"'
    return format(float(x), ".17g")


def render_json(obj, indent: int = 0) -> str:
    """Canonical JSON: sorted keys, fixed float format, 2-space indent."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _g17(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + render_json(x, indent + 1) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(key))}: {render_json(obj[key], indent + 1)}"
            for key in sorted(obj)
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    raise TypeError(f"cannot render {type(obj)!r}")


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return "inf" if math.isinf(x) else format(x, ".17g")
    return str(x)


def render_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines += [",".join(_csv_cell(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _table_cell(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return "inf" if math.isinf(x) else repr(x)
    return str(x)


def render_table(header: list[str], rows: list[list], title: str = "") -> str:
    cells = [[_table_cell(x) for x in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    out = [title] if title else []
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in cells:
        out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


# --- input loading ----------------------------------------------------------


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_source(args, code: codes.LinearCode) -> analysis.SourceModel:
    if args.bias is not None:
        if code.p != 2:
            raise ValueError(
                f"--bias only defines a binary symbol; this code is over F_{code.p}, "
                "use a --source pmf file"
            )
        return analysis.SourceModel.from_bias(args.bias, code.n)
    records = pmf.parse_pmf_records(_read(args.source))
    for m in records:
        if m.k != 1:
            raise ValueError(f"source symbols must have k=1, got k={m.k}")
    if len(records) == 1:
        return analysis.SourceModel.iid_from(records[0], code.n)
    if len(records) != code.n:
        raise ValueError(f"source file has {len(records)} records; expected 1 or n={code.n}")
    return analysis.SourceModel(records[0].p, tuple(records))


def _load_single_pmf(path: str) -> pmf.Pmf:
    return pmf.parse_pmf(_read(path))


# --- commands ---------------------------------------------------------------


def _report_rows(report: analysis.BoundReport):
    rows = [["exact_delta", report.exact_delta, None, None],
            ["exact_delta_bruteforce", report.exact_delta_bruteforce, None, None]]
    rows += [[e.name, e.value, e.applicable, e.tightness] for e in report.entries]
    return rows


def _report_json(report: analysis.BoundReport) -> dict:
    return {
        "schema": "rngbound.analyze.v1",
        "code": {"p": report.p, "n": report.n, "k": report.k, "d": report.d},
        "source": {"iid": report.iid, "lambda_star": report.source_lambda_star},
        "exact_delta": report.exact_delta,
        "exact_delta_bruteforce": report.exact_delta_bruteforce,
        "bounds": [
            {
                "name": e.name,
                "value": e.value,
                "applicable": e.applicable,
                "tightness": e.tightness,
            }
            for e in report.entries
        ],
    }


def cmd_analyze(args) -> str:
    code = codes.parse_code(_read(args.code))
    src = _load_source(args, code)
    report = analysis.analyze(code, src, max_brute=args.max_brute)
    if args.format == "json":
        return render_json(_report_json(report)) + "\n"
    header = ["quantity", "value", "applicable", "tightness"]
    rows = _report_rows(report)
    if args.format == "csv":
        return render_csv(header, rows)
    title = (
        f"code: p={report.p} n={report.n} k={report.k} d={report.d}   "
        f"source: {'i.i.d.' if report.iid else 'independent, non-identical'}"
    )
    return render_table(header, rows, title)


def cmd_code_info(args) -> str:
    code = codes.parse_code(_read(args.code))
    A = codes.weight_distribution(code)
    d = codes.minimum_distance(code)
    cwe = codes.complete_weight_enumerator(code)
    if args.format == "json":
        doc = {
            "schema": "rngbound.code_info.v1",
            "p": code.p,
            "n": code.n,
            "k": code.k,
            "d": d,
            "weight_distribution": [int(a) for a in A],
            "cwe_size": len(cwe),
            "cwe": {";".join(map(str, t)): c for t, c in cwe.items()} if args.cwe else None,
        }
        return render_json(doc) + "\n"
    rows = [["p", code.p], ["n", code.n], ["k", code.k], ["d", d]]
    rows += [[f"A_{l}", int(a)] for l, a in enumerate(A) if a]
    rows.append(["cwe_size", len(cwe)])
    if args.cwe:
        rows += [["W(" + ";".join(map(str, t)) + ")", c] for t, c in cwe.items()]
    if args.format == "csv":
        return render_csv(["quantity", "value"], rows)
    return render_table(["quantity", "value"], rows)


def _parse_grid(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"--grid expects A:B:STEP, got '{spec}'")
    try:
        a, b, step = (float(x) for x in parts)
    except ValueError:
        raise ValueError(f"--grid expects numbers A:B:STEP, got '{spec}'") from None
    if step <= 0:
        raise ValueError(f"grid step must be positive, got {step}")
    if not (0.0 <= a <= b <= 1.0):
        raise ValueError(f"grid must satisfy 0 <= A <= B <= 1, got {spec}")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    grid = [a + i * step for i in range(count)]
    if not grid:
        raise ValueError("empty grid")
    return grid


_SWEEP_HEADER = ["parameter", "exact_delta", "codeword_sum", "cwe",
                 "weight_distribution", "min_distance"]


def cmd_sweep(args) -> str:
    code = codes.parse_code(_read(args.code))
    grid = _parse_grid(args.grid)
    rows = []
    if code.p == 2:
        # grid values are per-bit biases of an i.i.d. source
        for eps in grid:
            src = analysis.SourceModel.from_bias(eps, code.n)
            report = analysis.analyze(code, src, max_brute=args.max_brute)
            by_name = {e.name: e.value for e in report.entries}
            rows.append([eps, report.exact_delta] + [by_name[n] for n in _SWEEP_HEADER[2:]])
    else:
        # without a full symbol distribution only the lambda*-driven bounds exist
        for x in grid:
            rows.append([
                x,
                None,
                None,
                None,
                analysis.bound_weight_distribution(code, x),
                analysis.bound_min_distance(code, x),
            ])
    if args.format == "json":
        doc = {
            "schema": "rngbound.sweep.v1",
            "code": {"p": code.p, "n": code.n, "k": code.k},
            "parameter": "bias" if code.p == 2 else "lambda_star",
            "rows": [dict(zip(_SWEEP_HEADER, row)) for row in rows],
        }
        return render_json(doc) + "\n"
    if args.format == "table":
        return render_table(_SWEEP_HEADER, rows)
    return render_csv(_SWEEP_HEADER, rows)


def cmd_sum_chain(args) -> str:
    m = _load_single_pmf(args.source)
    if m.k != 1:
        raise ValueError(f"sum-chain needs a k=1 pmf, got k={m.k}")
    if args.n < 1:
        raise ValueError(f"--n must be >= 1, got {args.n}")
    rows = []
    for n in range(1, args.n + 1):
        rows.append([
            n,
            pmf.l1_from_uniform(analysis.sum_chain(m, n)),
            analysis.bound_sum_chain(m, n),
        ])
    header = ["n", "exact_delta", "bound"]
    if args.format == "json":
        doc = {
            "schema": "rngbound.sum_chain.v1",
            "p": m.p,
            "n_max": args.n,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        return render_json(doc) + "\n"
    if args.format == "table":
        return render_table(header, rows, f"sum chain over F_{m.p}")
    return render_csv(header, rows)


def cmd_spectrum(args) -> str:
    m = _load_single_pmf(args.source)
    s = transforms.spectrum_of(m)
    star = transforms.lambda_star(s) if s.size > 1 else 0.0
    rows = [
        [b, float(v.real), float(v.imag), float(abs(v))]
        for b, v in enumerate(s.values)
    ]
    if args.format == "json":
        doc = {
            "schema": "rngbound.spectrum.v1",
            "p": m.p,
            "k": m.k,
            "lambda_star": star,
            "entries": [
                {"index": b, "re": re, "im": im, "modulus": mod}
                for b, re, im, mod in rows
            ],
        }
        return render_json(doc) + "\n"
    header = ["index", "re", "im", "modulus"]
    if args.format == "table":
        body = render_table(header, rows, f"spectrum: p={m.p} k={m.k}")
        return body + f"lambda_star  {repr(star)}\n"
    return render_csv(header, rows) + f"lambda_star,{_csv_cell(star)}\n"


# --- argument parsing / dispatch --------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rngbound",
        description="Exact distance from uniform and spectral bounds for "
        "linear-code entropy conditioners over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p_info = sub.add_parser("code-info", help="print code parameters and weight data")
    p_info.add_argument("--code", required=True, help=".code file path")
    p_info.add_argument("--cwe", action="store_true", help="include the full CWE")
    add_common(p_info)

    p_an = sub.add_parser("analyze", help="exact distance and all applicable bounds")
    p_an.add_argument("--code", required=True)
    group = p_an.add_mutually_exclusive_group(required=True)
    group.add_argument("--bias", type=float, help="i.i.d. binary source bias")
    group.add_argument("--source", help=".pmf file: one record (i.i.d.) or n records")
    p_an.add_argument("--max-brute", type=int, default=analysis.BRUTE_CAP,
                      help="cap on p^n for the exhaustive cross-check")
    add_common(p_an)

    p_sw = sub.add_parser("sweep", help="bound curves over a parameter grid")
    p_sw.add_argument("--code", required=True)
    p_sw.add_argument("--grid", required=True, help="A:B:STEP over bias (p=2) or lambda*")
    p_sw.add_argument("--max-brute", type=int, default=analysis.BRUTE_CAP)
    add_common(p_sw)

    p_sc = sub.add_parser("sum-chain", help="distance decay of n-fold sums")
    p_sc.add_argument("--source", required=True, help="k=1 .pmf file")
    p_sc.add_argument("--n", type=int, required=True, help="largest chain length")
    add_common(p_sc)

    p_sp = sub.add_parser("spectrum", help="print a pmf's spectrum and lambda*")
    p_sp.add_argument("--source", required=True, help=".pmf file")
    add_common(p_sp)

    return parser


_DISPATCH = {
    "code-info": cmd_code_info,
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "sum-chain": cmd_sum_chain,
    "spectrum": cmd_spectrum,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = _DISPATCH[args.command](args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
