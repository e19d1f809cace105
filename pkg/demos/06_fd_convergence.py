"""Finite-difference cross-validation of the exact derivatives.

Residuals of the reduced system evaluated with plain central differences
shrink as O(step^2); one Richardson level pushes that to O(step^4).  The
exact-derivative mode sits at rounding error, orders of magnitude below.
"""

import numpy as np

from cl13 import (
    build_pure_gauge,
    convergence_slope,
    fixed_idempotent,
    random_family,
    reduce_to_two_yang_mills,
    sample_points,
    two_yang_mills_residuals,
)
from cl13.fields import EXACT, fd_mode

t = fixed_idempotent("t2")
reduced = reduce_to_two_yang_mills(build_pure_gauge(random_family(42), t, 1.0))
points = sample_points(9, 5)

print("== central differences, no extrapolation ==")
steps = (1e-2, 5e-3, 2.5e-3)
slope, residuals = convergence_slope(reduced, points, steps)
for h, r in zip(steps, residuals):
    print(f"step {h:.2e}: max residual {r:.3e}")
print(f"log-log slope: {slope:.3f} (order-2 scheme)")

print("\n== one Richardson level ==")
for h in steps:
    rec = two_yang_mills_residuals(reduced, points, fd_mode(h, richardson=True))
    print(f"step {h:.2e}: max residual {rec.max_residual:.3e}")

print("\n== exact derivatives ==")
rec = two_yang_mills_residuals(reduced, points, EXACT)
print(f"max residual {rec.max_residual:.3e}")
ratios = [residuals[i] / residuals[i + 1] for i in range(len(residuals) - 1)]
print("\nstep-halving residual ratios (expect ~4):", np.round(ratios, 3))
