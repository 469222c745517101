"""
High and low bits
=================

Every residue splits as high * alpha + low.  A perturbation smaller than
beta cannot change the high part as long as the perturbed low part stays
at least beta away from the edge; this is why the verifier recomputes the
same challenge as the signer.
"""

import numpy as np

from latsig.params import default_paramset
from latsig.ring import Q
from latsig.rounding import decompose, decompose_array

p = default_paramset()
print(f"alpha = {p.alpha}, gamma = {p.gamma}, beta = {p.beta}, high values in [0, {p.high_range})")

for r in (0, p.gamma, p.gamma + 1, 3 * p.alpha + 12345, Q - 1):
    print(f"decompose({r}) = {decompose(r)}")

###############################################################################
# Random sweep of the no-carry property.

rng = np.random.default_rng(0)
r = rng.integers(0, Q, 200_000)
e = rng.integers(-p.beta, p.beta + 1, r.shape)
h_r, _ = decompose_array(r, Q, p.alpha)
h_s, l_s = decompose_array((r - e) % Q, Q, p.alpha)
safe = np.abs(l_s) < p.gamma - p.beta
print(f"{safe.mean():.4%} of pairs are in the safe zone;",
      f"high bits changed in {np.count_nonzero(h_r[safe] != h_s[safe])} of them")
print(f"outside the safe zone they changed in {np.count_nonzero(h_r[~safe] != h_s[~safe])}"
      f" of {np.count_nonzero(~safe)}")
