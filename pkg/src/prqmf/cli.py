"""Command-line front end.

Subcommands: design a bank to JSON, verify a stored bank, export magnitude
responses as CSV, print MSE metrics, and run a signal through the bank.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 I/O / format / degenerate-design error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import analysis, poly
from .bank import design_bank
from .prototype import BandEdges, DesignSpec, WindowSpec
from .qmf_core import DegeneratePassband, SingularSystem
from .refine import SingularRefinement

FORMAT_VERSION = 1
VERIFY_TOL = 1e-9
PROCESS_TOL = 1e-8
DB_FLOOR = -160.0

WINDOW_ALIASES = {
    "rect": "rectangular",
    "hamming": "hamming",
    "gauss": "gaussian",
    "kaiser": "kaiser",
}


class BankFileError(Exception):
    """Bank file is unreadable, malformed, or has the wrong version."""


def bank_to_dict(bank: analysis.FilterBank) -> dict:
    spec = bank.spec
    return {
        "format_version": FORMAT_VERSION,
        "n": spec.n if spec else (len(bank.h0) - 1) // 2,
        "m": spec.m if spec else 0,
        "edges": {"wp": spec.edges.wp, "ws": spec.edges.ws} if spec else None,
        "window": {"kind": spec.window.kind, "param": spec.window.param} if spec else None,
        "h0": bank.h0.tolist(),
        "h1": bank.h1.tolist(),
        "f0": bank.f0.tolist(),
        "f1": bank.f1.tolist(),
        "delay": bank.delay,
        "scale": bank.scale,
        "zero_freqs": list(bank.zero_freqs),
    }


def save_bank(bank: analysis.FilterBank, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(bank_to_dict(bank), fh, indent=2)
        fh.write("\n")


def load_bank(path: str) -> analysis.FilterBank:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        if doc["format_version"] != FORMAT_VERSION:
            raise BankFileError(f"unsupported format_version {doc['format_version']!r}")
        spec = None
        if doc.get("edges") and doc.get("window"):
            spec = DesignSpec(
                n=int(doc["n"]),
                edges=BandEdges(doc["edges"]["wp"], doc["edges"]["ws"]),
                window=WindowSpec(doc["window"]["kind"], doc["window"]["param"]),
                m=int(doc["m"]),
            )
        return analysis.FilterBank(
            h0=np.asarray(doc["h0"], dtype=float),
            h1=np.asarray(doc["h1"], dtype=float),
            f0=np.asarray(doc["f0"], dtype=float),
            f1=np.asarray(doc["f1"], dtype=float),
            delay=int(doc["delay"]),
            scale=float(doc["scale"]),
            spec=spec,
            zero_freqs=tuple(doc.get("zero_freqs", ())),
        )
    except BankFileError:
        raise
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BankFileError(f"cannot load bank file {path}: {exc}") from exc


def _mag_db(mag: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.maximum(20.0 * np.log10(np.maximum(mag, 0.0)), DB_FLOOR)


def _read_signal(path: str) -> np.ndarray:
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if lines:
        try:
            float(lines[0])
        except ValueError:
            lines = lines[1:]  # header row
    return np.array([float(ln) for ln in lines])


def cmd_design(args) -> int:
    try:
        delta = args.delta * math.pi
        if args.wp is not None or args.ws is not None:
            if args.wp is None or args.ws is None:
                print("error: --wp and --ws must be given together", file=sys.stderr)
                return 2
            edges = BandEdges(args.wp, args.ws)
        else:
            edges = BandEdges.symmetric(delta)
        zeros = None
        if args.zeros is not None:
            zeros = tuple(float(tok) for tok in args.zeros.split(","))
        spec = DesignSpec(
            n=args.n,
            edges=edges,
            window=WindowSpec(WINDOW_ALIASES[args.window], args.window_param),
            m=args.refine,
            zero_freqs=zeros,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        bank = design_bank(spec)
    except (SingularSystem, DegeneratePassband, SingularRefinement) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    try:
        save_bank(bank, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    low = analysis.mse(bank.h0, "lowpass", spec.grid_size)
    high = analysis.mse(bank.h1, "highpass", spec.grid_size)
    print(
        f"delay={bank.delay} scale={bank.scale!r} max_spurious={bank.max_spurious:.3e} "
        f"lowpass_db={low.db:.4f} highpass_db={high.db:.4f}"
    )
    return 0 if bank.max_spurious <= VERIFY_TOL else 1


def cmd_verify(args) -> int:
    try:
        bank = load_bank(args.path)
        report = analysis.verify_pr(bank.h0, bank.h1, VERIFY_TOL)
    except BankFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except analysis.NoDelayFound as exc:
        print(f"NoDelayFound: {exc}", file=sys.stderr)
        return 1
    print(
        f"delay={report.delay} scale={report.scale!r} max_spurious={report.max_spurious:.3e}"
    )
    return 0 if report.passed else 1


def cmd_response(args) -> int:
    try:
        bank = load_bank(args.path)
        w = np.linspace(0.0, math.pi, args.grid)
        mag_h0 = np.abs(poly.evaluate(bank.h0, w))
        mag_h1 = np.abs(poly.evaluate(bank.h1, w))
        db_h0 = _mag_db(mag_h0)
        db_h1 = _mag_db(mag_h1)
        with open(args.out, "w") as fh:
            fh.write("omega,mag_h0,mag_h1,mag_h0_db,mag_h1_db\n")
            for row in zip(w, mag_h0, mag_h1, db_h0, db_h1):
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
    except (BankFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"wrote {args.grid} rows to {args.out}")
    return 0


def cmd_metrics(args) -> int:
    try:
        bank = load_bank(args.path)
    except BankFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    low = analysis.mse(bank.h0, "lowpass", args.grid)
    high = analysis.mse(bank.h1, "highpass", args.grid)
    print(f"lowpass mse={low.mse!r} db={low.db}")
    print(f"highpass mse={high.mse!r} db={high.db}")
    return 0


def cmd_process(args) -> int:
    try:
        bank = load_bank(args.path)
        x = _read_signal(args.infile)
    except BankFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: cannot read signal: {exc}", file=sys.stderr)
        return 3
    if x.size == 0:
        print("error: empty signal", file=sys.stderr)
        return 2
    report = analysis.process_bank(bank, x)
    try:
        with open(args.out, "w") as fh:
            for v in report.y:
                fh.write(repr(float(v)) + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(
        f"max_rel_error={report.max_rel_error!r} delay={report.delay} scale={report.scale!r}"
    )
    return 0 if report.max_rel_error <= PROCESS_TOL else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prqmf", description="Perfect-reconstruction QMF filter pair design"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="design a bank and write it as JSON")
    p.add_argument("--n", type=int, required=True, help="half-order; H0 gets 2n+1 taps")
    p.add_argument("--delta", type=float, default=0.1, help="band half-width as fraction of pi")
    p.add_argument("--wp", type=float, help="explicit passband edge (radians)")
    p.add_argument("--ws", type=float, help="explicit stopband edge (radians)")
    p.add_argument("--window", choices=sorted(WINDOW_ALIASES), default="rect")
    p.add_argument("--window-param", type=float, default=None)
    p.add_argument("--refine", type=int, default=1, metavar="M", help="refinement order (0 = off)")
    p.add_argument("--zeros", help="comma-separated zero frequencies in radians")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("verify", help="re-certify a stored bank")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("response", help="export magnitude responses as CSV")
    p.add_argument("path")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_response)

    p = sub.add_parser("metrics", help="print MSE metrics against ideal responses")
    p.add_argument("path")
    p.add_argument("--grid", type=int, default=1024)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("process", help="run a CSV signal through the bank")
    p.add_argument("path")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_process)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
