"""Command-line front end.

    wmonogamy analyze  --n 3 --theta pi
    wmonogamy sweep    --n 3 4 5 6 --theta-steps 201 --quantities pairwise_negativity
    wmonogamy verify   --max-n 6 --output report.json
    wmonogamy classify --n 6 --r 3

Exit status: 0 on success, 1 when a verification check fails, 2 on usage
errors (bad arguments, out-of-range values, unwritable output).
"""

from __future__ import annotations

import argparse
import io
import json
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import oracle
from .symstate import enumerate_slocc_configs
from .tangle import tangle_report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

QUANTITIES = (
    "pairwise_concurrence",
    "pairwise_negativity",
    "one_vs_rest_negativity",
    "concurrence_tangle",
    "negativity_tangle",
)

_ANGLE_RE = re.compile(r"^\s*(?P<sign>-)?(?P<coef>\d+(?:\.\d*)?|\.\d+)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$")


class UsageError(Exception):
    pass


def parse_angle(text: str) -> float:
    """Radians from either a plain number or a token such as ``pi``, ``pi/2``, ``3pi/2``."""
    m = _ANGLE_RE.match(text.lower())
    if m:
        value = float(m.group("coef") or 1.0) * math.pi
        if m.group("den"):
            value /= float(m.group("den"))
        return -value if m.group("sign") else value
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None


@dataclass(frozen=True)
class SweepSpec:
    n_list: Sequence[int]
    theta_start: float
    theta_end: float
    theta_steps: int
    quantities: Sequence[str] = QUANTITIES

    def __post_init__(self):
        if not self.n_list:
            raise ValueError("n_list must not be empty")
        if min(self.n_list) < 3:
            raise ValueError(f"every n must be >= 3, got {list(self.n_list)}")
        if self.theta_steps < 2:
            raise ValueError(f"theta_steps must be >= 2, got {self.theta_steps}")
        if not self.theta_start < self.theta_end:
            raise ValueError("theta_start must be smaller than theta_end")
        if self.theta_start < 0.0 or self.theta_end > 2.0 * math.pi + 1e-12:
            raise ValueError("theta range must lie within [0, 2pi]")
        bad = [q for q in self.quantities if q not in QUANTITIES]
        if bad or not self.quantities:
            raise ValueError(f"unknown quantities {bad}; choose from {', '.join(QUANTITIES)}")

    def thetas(self) -> np.ndarray:
        return np.linspace(self.theta_start, self.theta_end, self.theta_steps)


def row_values(n: int, theta: float) -> dict:
    rep = tangle_report(n, theta)
    return {
        "pairwise_concurrence": rep.concurrence_set.pairwise,
        "pairwise_negativity": rep.negativity_set.pairwise,
        "one_vs_rest_negativity": rep.negativity_set.one_vs_rest,
        "concurrence_tangle": rep.concurrence_tangle,
        "negativity_tangle": rep.negativity_tangle,
    }


def _fmt(x: float) -> str:
    # +0.0 folds negative zero into zero
    return format(float(x) + 0.0, ".12g")


def sweep_csv(spec: SweepSpec, jobs: int = 1) -> str:
    """CSV text for a sweep; rows ordered by n, then theta, whatever ``jobs`` is."""
    points = [(n, float(t)) for n in spec.n_list for t in spec.thetas()]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda p: row_values(*p), points))
    else:
        rows = [row_values(n, t) for n, t in points]
    out = io.StringIO(newline="")
    out.write(",".join(["n", "theta", *spec.quantities]) + "\n")
    for (n, t), vals in zip(points, rows):
        out.write(",".join([str(n), _fmt(t), *(_fmt(vals[q]) for q in spec.quantities)]) + "\n")
    return out.getvalue()


def analyze_dict(n: int, theta: float) -> dict:
    rep = tangle_report(n, theta)
    d = {
        "n_qubits": rep.n_qubits,
        "theta": rep.theta,
        "pairwise_concurrence": rep.concurrence_set.pairwise,
        "one_vs_rest_concurrence": rep.concurrence_set.one_vs_rest,
        "pairwise_negativity": rep.negativity_set.pairwise,
        "one_vs_rest_negativity": rep.negativity_set.one_vs_rest,
        "concurrence_tangle": rep.concurrence_tangle,
        "negativity_tangle": rep.negativity_tangle,
    }
    full = rep.to_dict()
    for key in ("concurrence_set", "negativity_set", "closed_form_residuals"):
        d[key] = full[key]
    return d


@contextmanager
def _output(path: Optional[str]):
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None
    with fh:
        yield fh


def cmd_analyze(args) -> int:
    if args.n < 3:
        raise UsageError(f"--n must be >= 3, got {args.n}")
    if not 0.0 < args.theta <= 2.0 * math.pi:
        raise UsageError(f"--theta must lie in (0, 2pi], got {args.theta}")
    text = json.dumps(analyze_dict(args.n, args.theta), indent=2) + "\n"
    with _output(args.output) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        spec = SweepSpec(args.n, args.theta_start, args.theta_end, args.theta_steps, tuple(args.quantities))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = sweep_csv(spec, jobs=args.jobs)
    with _output(args.output) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 3 <= args.max_n <= 14:
        raise UsageError(f"--max-n must lie in [3, 14], got {args.max_n}")
    outcomes = oracle.run_suite(args.max_n)
    with _output(args.output) as fh:
        fh.write(oracle.suite_to_json(outcomes, max_n=args.max_n))
    failed = [c for o in outcomes for c in o.failures()]
    if failed:
        for c in failed:
            print(f"FAIL {c.anchor}: {c.name} (deviation {c.deviation:.3e} > {c.tolerance:.1e})", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.n < 1 or not 1 <= args.r <= args.n:
        raise UsageError(f"need 1 <= r <= n, got n={args.n}, r={args.r}")
    configs = enumerate_slocc_configs(args.n, args.r)
    with _output(args.output) as fh:
        for cfg in configs:
            fh.write(f"{cfg}\n")
        fh.write(f"count = {len(configs)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wmonogamy", description="Monogamy of symmetric W-class states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="all measures and tangles of one W-class state, as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=parse_angle, required=True, help="radians, or pi, pi/2, 3pi/2, ...")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="measures over an (n, theta) grid, as CSV")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--theta-start", type=parse_angle, default=0.0)
    p.add_argument("--theta-end", type=parse_angle, default=2.0 * math.pi)
    p.add_argument("--theta-steps", type=int, default=201)
    p.add_argument("--quantities", nargs="+", choices=QUANTITIES, default=list(QUANTITIES))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the brute-force verification suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="list SLOCC degeneracy classes D_{n1,...,nr}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog} {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
