#!/usr/bin/env python3
"""Walk through the two error floors and the older bound they strengthen.

Everything about copying a known pair of states is controlled by one
number: the overlap z = |<phi|psi>|. This script samples the three
closed-form curves, prints the landmark points, and shows where each
curve peaks.
"""

import numpy as np

from clonebound import (
    RE_BOUND_ARGMAX,
    ae_lower_bound,
    hb_bound,
    re_lower_bound,
    sample_curve,
)

print(__doc__)

# The three curves on a 201-point grid.
curve_re = sample_curve("relative-error floor", re_lower_bound, 0.0, 1.0, 201)
curve_ae = sample_curve("absolute-error floor", ae_lower_bound, 0.0, 1.0, 201)
curve_hb = sample_curve("older absolute-error floor", hb_bound, 0.0, 1.0, 201)

print("landmarks:")
print(f"  absolute-error floor peaks at z = {curve_ae.argmax_z():.3f} "
      f"(analytic 1/sqrt(3) = {1/np.sqrt(3):.5f}), value sqrt(2/27) = "
      f"{np.sqrt(2/27):.5f}")
print(f"  older floor peaks at z = {curve_hb.argmax_z():.3f}, "
      f"value sqrt(5)-2 = {np.sqrt(5)-2:.5f}")
print(f"  at z = 1/2 the stronger floor gives sqrt(3)(sqrt(5)-1)/8 = "
      f"{float(ae_lower_bound(0.5)):.5f}")
print(f"  at z = 4/5 the stronger floor is "
      f"{float(ae_lower_bound(0.8)/hb_bound(0.8)):.3f}x the older one")
print(f"  relative-error floor peaks at z = {RE_BOUND_ARGMAX:.5f} "
      f"(z^2 solves u^2 + u - 1 = 0) and still equals "
      f"{float(re_lower_bound(1.0)):.5f} at z = 1")
print()

# A coarse table; the dominance column never goes negative.
print("  z     RE floor   AE floor   older AE   AE - older")
for z in np.linspace(0.1, 0.9, 9):
    print(f"  {z:.2f}  {float(re_lower_bound(z)):9.5f}  "
          f"{float(ae_lower_bound(z)):9.5f}  {float(hb_bound(z)):9.5f}  "
          f"{float(ae_lower_bound(z) - hb_bound(z)):+10.5f}")

print()
print("The same curves are emitted as CSV by:  clonebound bounds --out curves/")
