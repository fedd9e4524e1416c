"""Reduced density matrices and the two entanglement measures."""

import math

import numpy as np

from wmonogamy import (
    closed_form_rho2,
    concurrence_2q,
    negativity_2q,
    partial_trace,
    partial_transpose,
    to_full_vector,
    wclass_state,
)

np.set_printoptions(precision=4, suppress=True)

n, theta = 4, math.pi / 2
psi = to_full_vector(wclass_state(n, theta))

# Trace out everything except qubits 1 and 2; compare with the closed form.
rho12 = partial_trace(psi, [1, 2])
print("rho_12 (real part):\n", rho12.real)
print("max deviation from closed form:", np.abs(rho12 - closed_form_rho2(n, theta)).max())

# A negative eigenvalue of the partial transpose signals entanglement.
print("partial-transpose spectrum:", np.linalg.eigvalsh(partial_transpose(rho12)))

# Concurrence and negativity of the pair, scanned in theta.
print(f"{'theta':>8} {'concurrence':>12} {'negativity':>12}")
for theta in np.linspace(0, 2 * math.pi, 9)[1:]:
    rho = partial_trace(to_full_vector(wclass_state(n, theta)), [1, 2])
    print(f"{theta:8.4f} {concurrence_2q(rho):12.6f} {negativity_2q(rho):12.6f}")

# Negativity never exceeds concurrence for two qubits; both peak at theta = pi.
