#!/usr/bin/env python3
"""Build the three copying machines for one pair of states and compare them.

The pair has overlap z = 1/2. For each machine we show the per-state
error sizes, the absolute and relative errors against their floors, and
a certificate that the construction is realizable by a unitary: the two
outputs keep the inner product of the two inputs, and an explicit unitary
mapping inputs to outputs can be completed.
"""

import numpy as np

from clonebound import (
    TwoStateSet,
    ae_lower_bound,
    basis_state,
    build_asymmetric,
    build_symmetric,
    build_wootters_zurek,
    closed_form_re_s,
    closed_form_re_wz,
    materialize_unitary,
    re_lower_bound,
    relative_error,
    tensor,
    unitarity_residual,
)

print(__doc__)

z = 0.5
pair = TwoStateSet.at_overlap(z)
print(f"pair: phi = e1, psi = {z} e1 + {np.sqrt(1-z*z):.5f} e2   "
      f"(z = {pair.z}, angle = {np.degrees(pair.delta):.2f} deg)")
print(f"floors at this overlap: AE >= {float(ae_lower_bound(z)):.5f}, "
      f"RE >= {float(re_lower_bound(z)):.5f}")
print()

machines = [
    ("symmetric (equal errors)", build_symmetric(pair)),
    ("fully asymmetric (phi favored)", build_asymmetric(pair)),
    ("basis copier with machine flags", build_wootters_zurek(pair)),
]

for name, r in machines:
    print(name)
    print(f"  error sizes      x(phi) = {r.a_phi.x:.6f}, x(psi) = {r.a_psi.x:.6f}")
    print(f"  absolute error   {r.ae:.6f}")
    print(f"  relative error   {relative_error(r):.6f}")
    print(f"  realizability    |<V_phi|V_psi> - <phi|psi>| = "
          f"{unitarity_residual(r):.2e}")
    u = materialize_unitary(r)
    blank = basis_state(r.dims.d2, 0)
    worst = 0.0
    for s, out in ((pair.phi, r.a_phi.v), (pair.psi, r.a_psi.v)):
        vec = tensor(s, blank)
        if r.dims.danc > 1:
            vec = tensor(vec, basis_state(r.dims.danc, 0))
        worst = max(worst, float(np.max(np.abs(u @ vec - out))))
    print(f"  materialized unitary reproduces both outputs to {worst:.2e}")
    print()

print("Notes:")
print(f"  the asymmetric machine attains both floors exactly;")
print(f"  the symmetric machine is held to its own floor "
      f"{closed_form_re_s(z):.6f} > {float(re_lower_bound(z)):.6f};")
print(f"  the basis copier is quoted with the convention that divides its")
print(f"  absolute error by sqrt(1 - z^4), giving {closed_form_re_wz(z):.6f},")
print(f"  while dividing by the angle between its own flagged ideals gives")
print(f"  the smaller {relative_error(machines[2][1]):.6f} shown above.")
