"""Command-line front end.

Subcommands:
  eval         evaluate an approximant against its target on a point list
  error-table  tabulate optimal L1 errors over a lam list
  plot-data    emit two-column CSV for a named curve
  verify       run the certification suite and report pass/fail
  measure      load a measure file; report admissibility, errors, values

Exit codes: 0 success, 1 at least one verification failure, 2 usage error.
CSV output is locale-independent, comma-separated, with '#'-prefixed
metadata lines, and prints 17 significant digits so doubles round-trip.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import extremal, measures, quadrature, verify
from .extremal import Kind, Parity
from . import special_fns as sf

_FMT = "%.17g"


def _num(x: float) -> str:
    return _FMT % float(x)


def _parse_kind(s: str) -> Kind:
    try:
        return Kind(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown kind {s!r} (best|minorant|majorant)")


def _parse_parity(s: str) -> Parity:
    try:
        return Parity(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown parity {s!r} (truncated|odd)")


def _parse_float_list(s: str) -> List[float]:
    s = s.strip()
    if not s:
        return []
    return [float(tok) for tok in s.split(",") if tok.strip() != ""]


def _parse_range(s: str) -> List[float]:
    parts = s.split(":")
    if len(parts) != 3:
        raise ValueError("range spec must be lo:hi:count")
    lo, hi, cnt = float(parts[0]), float(parts[1]), int(parts[2])
    if cnt < 1:
        raise ValueError("range count must be >= 1")
    return list(np.linspace(lo, hi, cnt))


def _emit_csv(out, header: Sequence[str], rows, meta: Sequence[str] = ()):
    for line in meta:
        out.write(f"# {line}\n")
    out.write(",".join(header) + "\n")
    for row in rows:
        out.write(",".join(_num(v) for v in row) + "\n")


def _emit_json(out, header, rows):
    payload = [dict(zip(header, map(float, row))) for row in rows]
    json.dump(payload, out, indent=1)
    out.write("\n")


def read_plot_csv(stream) -> Tuple[List[str], np.ndarray]:
    """Read back CSV produced by this tool: (metadata lines, value array)."""
    meta: List[str] = []
    rows: List[List[float]] = []
    header: Optional[List[str]] = None
    for line in stream:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            meta.append(line[1:].strip())
            continue
        if header is None:
            header = line.split(",")
            continue
        rows.append([float(tok) for tok in line.split(",")])
    data = np.array(rows) if rows else np.empty((0, len(header or [])))
    return meta, data


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_eval(args, out) -> int:
    if args.x is not None:
        xs = _parse_float_list(args.x)
    elif args.range is not None:
        xs = _parse_range(args.range)
    else:
        xs = []
    a = extremal.Approximant(args.kind, args.parity, args.lam, args.delta)
    rows = []
    for x in xs:
        g = a.target(x)
        approx = a.evaluate(x)
        rows.append((x, g, approx, approx - g))
    header = ("x", "g", "approx", "residual")
    meta = (
        f"kind={args.kind.value} parity={args.parity.value} lam={_num(args.lam)} "
        f"delta={_num(args.delta)}",
        "residual = approx - g",
    )
    if args.format == "json":
        _emit_json(out, header, rows)
    else:
        _emit_csv(out, header, rows, meta)
    return 0


def _cmd_error_table(args, out) -> int:
    lams = _parse_float_list(args.lam)
    seen = []
    for l in lams:
        if l in seen:
            print(f"warning: duplicate lam {l} dropped", file=sys.stderr)
        else:
            seen.append(l)
    kinds = [_parse_kind(k) for k in args.kinds.split(",")] if args.kinds else list(Kind)
    header = ["lam"] + [k.value for k in kinds]
    rows = []
    for l in seen:
        row = [l]
        for k in kinds:
            row.append(extremal.error_truncated(k, l).value)
        rows.append(row)
    if args.format == "json":
        _emit_json(out, header, rows)
    else:
        _emit_csv(out, header, rows, (f"kinds={','.join(k.value for k in kinds)}",))
    return 0


def _cmd_plot_data(args, out) -> int:
    n = args.points
    if n < 1:
        print("error: --points must be >= 1", file=sys.stderr)
        return 2
    curve = args.curve
    meta = [f"curve={curve} lam={_num(args.lam)} kind={args.kind.value} parity={args.parity.value}"]
    if curve == "h-profile":
        lams = np.geomspace(args.lam_min, args.lam_max, n)
        rows = [(l, quadrature.H_lambda(l)) for l in lams]
        header = ("lam", "H")
        meta = [f"curve=h-profile over [{_num(args.lam_min)}, {_num(args.lam_max)}], log-spaced"]
        _emit_csv(out, header, rows, meta)
        return 0
    xs = np.linspace(args.xmin, args.xmax, n)
    a = extremal.Approximant(args.kind, args.parity, args.lam, args.delta)
    if curve == "g":
        ys = [a.target(x) for x in xs]
    elif curve == "approximant":
        ys = [a.evaluate(x) for x in xs]
    elif curve == "residual":
        ys = [a.evaluate(x) - a.target(x) for x in xs]
    elif curve == "sign-product":
        ys = [math.sin(math.pi * x) * (a.target(x) - a.evaluate(x)) for x in xs]
    else:
        print(f"error: unknown curve {curve!r}", file=sys.stderr)
        return 2
    _emit_csv(out, ("x", "y"), zip(xs, ys), meta)
    return 0


def _cmd_verify(args, out) -> int:
    cfg = verify.CheckConfig(profile=args.profile)
    if args.id:
        wanted = []
        for tok in args.id:
            wanted.extend(t for t in tok.split(",") if t)
        unknown = [t for t in wanted if t not in verify.registered_checks()]
        if unknown:
            print(f"error: unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
            return 2
        reports = [verify.run_check(cid, cfg) for cid in wanted]
    else:
        reports = verify.run_all(args.profile, cfg)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{status} {r.id}: max_violation={r.max_violation:.3e} "
            f"tolerance={r.tolerance:.3e}",
            file=out,
        )
    payload = [r.to_dict() for r in reports]
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1)
    else:
        json.dump(payload, out, indent=1)
        out.write("\n")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_measure(args, out) -> int:
    try:
        m = measures.load_measure(args.file)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: cannot load measure file: {exc}", file=sys.stderr)
        return 2
    parity = args.parity
    did = False
    if args.check:
        status, value = measures.check_admissible(m, args.check)
        label = {True: "yes", None: "indeterminate"}.get(status, "no")
        print(f"admissible[{args.check}]: {label} value={_num(value)}", file=out)
        did = True
    if args.error:
        kind = _parse_kind(args.error)
        try:
            print(f"error[{kind.value}]: {_num(measures.integrated_error(kind, m))}", file=out)
        except measures.AdmissibilityError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        did = True
    if args.eval_g is not None or args.eval is not None:
        t = measures.IntegratedTarget(m, parity)
        xs = _parse_float_list(args.eval_g if args.eval_g is not None else args.eval)
        rows = []
        for x in xs:
            g = measures.eval_g(t, x)
            if args.eval is not None:
                kind = _parse_kind(args.kind)
                v = measures.eval_integrated(kind, t, x)
                rows.append((x, g, v, v - g))
            else:
                rows.append((x, g))
        header = ("x", "g", "approx", "residual") if args.eval is not None else ("x", "g")
        _emit_csv(out, header, rows, (f"parity={parity.value}",))
        did = True
    if not did:
        status, value = measures.check_admissible(m, measures.NU1)
        label = {True: "yes", None: "indeterminate"}.get(status, "no")
        print(f"atoms={len(m.atoms)} density={'yes' if m.density is not None else 'no'}", file=out)
        print(f"admissible[nu1]: {label} value={_num(value)}", file=out)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="extgauss",
        description="Extremal bandlimited approximations to truncated and odd Gaussians.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate an approximant against its target")
    pe.add_argument("--kind", type=_parse_kind, default=Kind.BEST)
    pe.add_argument("--parity", type=_parse_parity, default=Parity.TRUNCATED)
    pe.add_argument("--lam", type=float, required=True)
    pe.add_argument("--delta", type=float, default=1.0)
    pe.add_argument("--x", help="comma-separated evaluation points")
    pe.add_argument("--range", help="lo:hi:count range spec")
    pe.add_argument("--format", choices=("csv", "json"), default="csv")

    pt = sub.add_parser("error-table", help="tabulate optimal L1 errors")
    pt.add_argument("--lam", required=True, help="comma-separated lam list")
    pt.add_argument("--kinds", help="comma-separated subset of best,minorant,majorant")
    pt.add_argument("--format", choices=("csv", "json"), default="csv")

    pp = sub.add_parser("plot-data", help="emit two-column CSV for a curve")
    pp.add_argument(
        "--curve",
        required=True,
        choices=("g", "approximant", "residual", "sign-product", "h-profile"),
    )
    pp.add_argument("--kind", type=_parse_kind, default=Kind.BEST)
    pp.add_argument("--parity", type=_parse_parity, default=Parity.TRUNCATED)
    pp.add_argument("--lam", type=float, default=1.0)
    pp.add_argument("--delta", type=float, default=1.0)
    pp.add_argument("--xmin", type=float, default=-4.0)
    pp.add_argument("--xmax", type=float, default=4.0)
    pp.add_argument("--points", type=int, default=801)
    pp.add_argument("--lam-min", type=float, default=1e-4)
    pp.add_argument("--lam-max", type=float, default=1e4)

    pv = sub.add_parser("verify", help="run the certification suite")
    pv.add_argument("--profile", choices=("fast", "full"), default="fast")
    pv.add_argument("--id", action="append", help="restrict to these check ids")
    pv.add_argument("--json", help="write the JSON report to this path")

    pm = sub.add_parser("measure", help="operate on a measure file")
    pm.add_argument("file", help="measure JSON file")
    pm.add_argument("--parity", type=_parse_parity, default=Parity.TRUNCATED)
    pm.add_argument("--check", choices=(measures.NU1, measures.NU2))
    pm.add_argument("--error", help="integrated error for this kind")
    pm.add_argument("--eval-g", dest="eval_g", help="evaluate the target at these points")
    pm.add_argument("--eval", help="evaluate target and approximant at these points")
    pm.add_argument("--kind", default="best", help="kind for --eval")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "eval": _cmd_eval,
        "error-table": _cmd_error_table,
        "plot-data": _cmd_plot_data,
        "verify": _cmd_verify,
        "measure": _cmd_measure,
    }
    try:
        return handlers[args.command](args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
