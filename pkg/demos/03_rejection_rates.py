"""
How often does signing restart?
===============================

Each attempt can fail two ways: the response z leaves the box of radius
gamma - beta, or the low bits of w - c*s2 do.  The first has a closed form;
both are measured here on the real signing code.
"""

import numpy as np

from latsig.bench import run_bench, z_accept_closed_form

result = run_bench(500)
print(f"z-bound acceptance   {result.z_accept:.3f}  (closed form {z_accept_closed_form():.3f})")
print(f"low-bound acceptance {result.low_accept:.3f}")
print(f"combined acceptance  {result.combined_accept:.3f}")
print(f"mean attempts        {result.mean_attempts:.2f}")

counts = np.bincount(result.attempts)
for k, n in enumerate(counts):
    if n:
        print(f"{k:3d} attempts | {'#' * int(60 * n / counts.max())}")
