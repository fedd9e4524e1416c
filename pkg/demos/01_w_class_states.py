"""Building symmetric states: Majorana spinors, Dicke states and the W class."""

import math

import numpy as np

from wmonogamy import (
    canonicalize_ab,
    dicke_state,
    dnk_state,
    majorana_state,
    make_spinor,
    to_full_vector,
    wclass_state,
)

np.set_printoptions(precision=4, suppress=True)

# A symmetric state is stored as N+1 Dicke-basis coefficients.
w3 = dicke_state(3, 1)
print("W state, Dicke coefficients:", w3.dicke_coeffs)
print("W state, full vector:       ", to_full_vector(w3).amps.real)

# Two |0> spinors and one |1> spinor symmetrize to the same W state.
up, down = make_spinor(0.0, 0.0), make_spinor(0.0, math.pi)
print("Majorana {0,0,1} == W:", np.allclose(majorana_state([up, up, down]).dicke_coeffs, w3.dicke_coeffs))

# The one-parameter family interpolates between |000> (theta=0) and W (theta=pi).
for theta in (0.0, math.pi / 3, math.pi / 2, math.pi):
    print(f"theta={theta:.4f}", wclass_state(3, theta).dicke_coeffs.real)

# dnk_state with d0=0, d1=1 degenerates to a pure Dicke state, bit for bit.
print("D_{4,2} with d=(0,1) is Dicke(4,2):", np.array_equal(dnk_state(4, 2, 0.0, 1.0).dicke_coeffs, dicke_state(4, 2).dicke_coeffs))

# Any a|0..0> + b|W> with a complex b reduces to a single angle.
a, b = 0.6, 0.8j
theta = canonicalize_ab(a, b)
print(f"a={a}, b={b} -> theta={theta:.6f}, cos(theta/2)={math.cos(theta / 2):.6f}")
