"""End-to-end acceptance checks, one test per criterion.

Each test records a single ``criterion N: PASS|FAIL`` line that the
terminal summary prints after the run. Run on its own with::

    pytest tests/test_acceptance.py -v
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES, THETA_GRID
from wmonogamy import oracle
from wmonogamy.cli import QUANTITIES, row_values
from wmonogamy.densmat import PureStateVector, closed_form_rho1, closed_form_rho2, partial_trace
from wmonogamy.symstate import dicke_state, dnk_state, to_full_vector, wclass_state
from wmonogamy.tangle import (
    closed_form_pairwise_concurrence,
    concurrence_2q,
    concurrence_tangle,
    negativity_tangle,
    wstate_negativity_tangle_closed,
)

# Frozen after an independent evaluation: (4/9)(sqrt5 - 1) and (3/2)(sqrt2 - 1).
PI_W3 = 0.5493635455554621
PI_W4 = 0.6213203435596428


def record(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_monogamy_equality():
    start = time.perf_counter()
    worst = 0.0
    for n in range(3, 11):
        worst = max(worst, oracle.verify_monogamy(n, THETA_GRID).max_deviation)
    elapsed = time.perf_counter() - start
    record(1, worst <= 1e-10 and elapsed < 5.0, f"max gap {worst:.2e} (tol 1e-10), {elapsed:.2f} s (< 5 s)")


def test_criterion_02_pairwise_concurrence():
    worst, argmax_ok = 0.0, True
    for n in range(3, 11):
        values = []
        for theta in THETA_GRID:
            c = concurrence_2q(partial_trace(to_full_vector(wclass_state(n, theta)), [1, 2]))
            worst = max(worst, abs(c - closed_form_pairwise_concurrence(n, theta)))
            values.append(c)
        best = int(np.argmax(values))
        argmax_ok &= math.isclose(THETA_GRID[best], math.pi, abs_tol=1e-12) and abs(values[best] - 2 / n) <= 1e-10
    record(2, worst <= 1e-10 and argmax_ok, f"max deviation {worst:.2e} (tol 1e-10), max 2/N at pi: {argmax_ok}")


def test_criterion_03_table_marginals():
    worst = 0.0
    for n in (3, 4, 5, 6):
        for theta in (math.pi / 3, math.pi / 2, math.pi):
            psi = to_full_vector(wclass_state(n, theta))
            worst = max(worst, np.abs(partial_trace(psi, [1, 2]) - closed_form_rho2(n, theta)).max())
            worst = max(worst, np.abs(partial_trace(psi, [1]) - closed_form_rho1(n, theta)).max())
    record(3, worst <= 1e-12, f"max entrywise deviation {worst:.2e} (tol 1e-12)")


def test_criterion_04_negativity_identity():
    start = time.perf_counter()
    worst = 0.0
    for n in range(3, 7):
        worst = max(worst, oracle.verify_negativity_identity(n, THETA_GRID).max_deviation)
    elapsed = time.perf_counter() - start
    record(4, worst <= 1e-9 and elapsed < 30.0, f"max deviation {worst:.2e} (tol 1e-9), {elapsed:.2f} s (< 30 s)")


def test_criterion_05_wstate_negativity_tangle():
    ns = list(range(3, 13))
    numeric = [negativity_tangle(wclass_state(n, math.pi)) for n in ns]
    worst = max(abs(v - wstate_negativity_tangle_closed(n)) for n, v in zip(ns, numeric))
    frozen = abs(numeric[0] - PI_W3) <= 1e-9 and abs(numeric[1] - PI_W4) <= 1e-9
    argmax = ns[int(np.argmax(numeric))]
    decreasing = all(b < a for a, b in zip(numeric[1:], numeric[2:]))
    ok = worst <= 1e-9 and frozen and argmax == 4 and decreasing
    record(
        5,
        ok,
        f"max deviation {worst:.2e} (tol 1e-9), Pi(3)={numeric[0]:.10f}, Pi(4)={numeric[1]:.10f}, "
        f"argmax n={argmax}, decreasing from 4: {decreasing}",
    )


def test_criterion_06_residual_separation():
    lowest, worst_ct = math.inf, 0.0
    for n in range(3, 13):
        state = wclass_state(n, math.pi)
        lowest = min(lowest, negativity_tangle(state))
        worst_ct = max(worst_ct, abs(concurrence_tangle(state)))
    record(6, lowest > 0.1 and worst_ct <= 1e-10, f"min negativity tangle {lowest:.4f} (> 0.1), max |concurrence tangle| {worst_ct:.2e}")


def test_criterion_07_ckw_random_states():
    rng = np.random.default_rng(20261017)
    lowest = math.inf
    for n in (3, 4, 5):
        for _ in range(1000):
            v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
            psi = PureStateVector.from_amplitudes(v, normalize=True)
            lowest = min(lowest, concurrence_tangle(psi))
    record(7, lowest >= -1e-9, f"min concurrence tangle over 3000 states {lowest:.3e} (>= -1e-9)")


def test_criterion_08_dicke_degeneration():
    mismatches = 0
    for n in range(2, 11):
        for k in range(1, n // 2 + 1):
            if not np.array_equal(dnk_state(n, k, 0.0, 1.0).dicke_coeffs, dicke_state(n, k).dicke_coeffs):
                mismatches += 1
    record(8, mismatches == 0, f"{mismatches} inexact (n, k) pairs for n <= 10")


def test_criterion_09_theta_symmetry():
    worst = 0.0
    for n in range(3, 9):
        for theta in THETA_GRID[:-1]:
            a, b = row_values(n, theta), row_values(n, 2 * math.pi - theta)
            worst = max(worst, max(abs(a[q] - b[q]) for q in QUANTITIES))
    record(9, worst <= 1e-10, f"max |q(theta) - q(2pi - theta)| {worst:.2e} (tol 1e-10)")


SWEEP_PANELS = {
    "pairwise": ["pairwise_negativity"],
    "one_vs_rest": ["one_vs_rest_negativity"],
    "tangle": ["negativity_tangle"],
}


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "wmonogamy", *args], capture_output=True)


def test_criterion_10_cli_golden_files(tmp_path):
    identical, codes = True, []
    for name, quantities in SWEEP_PANELS.items():
        outputs = []
        for run in (1, 2):
            path = tmp_path / f"{name}-{run}.csv"
            proc = _cli("sweep", "--n", "3", "4", "5", "6", "--theta-start", "0", "--theta-end", "2pi",
                        "--theta-steps", "201", "--quantities", *quantities, "--output", str(path))
            codes.append(proc.returncode)
            outputs.append(path.read_bytes())
        identical &= outputs[0] == outputs[1] and len(outputs[0]) > 0
    reports = []
    for run in (1, 2):
        path = tmp_path / f"verify-{run}.json"
        proc = _cli("verify", "--max-n", "6", "--output", str(path))
        codes.append(proc.returncode)
        reports.append(path.read_bytes())
    identical &= reports[0] == reports[1]
    ok = identical and all(c == 0 for c in codes)
    record(10, ok, f"byte-identical reruns: {identical}, exit codes {sorted(set(codes))}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
