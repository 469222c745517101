"""
Multiplication in the ring
==========================

q - 1 is divisible by 512, so Z_q has a primitive 512-th root of unity and
X^256 + 1 splits completely.  The NTT evaluates a polynomial at all 256 roots
and multiplication becomes pointwise.  The schoolbook product stays around as
an exact cross-check.  In numpy the O(n^2) convolution runs in C, so the
timings below are close; the NTT pays off because keys and masks are
transformed once and reused across a whole matrix-vector product.
"""

import time

import numpy as np

from latsig.ring import ZETA, Q, intt, monomial, ntt, poly_mul, schoolbook_mul

print(f"zeta = {ZETA}, zeta^256 mod q = {pow(ZETA, 256, Q)} (= q - 1)")

rng = np.random.default_rng(1)
a, b = rng.integers(0, Q, (2, 256))
assert np.array_equal(poly_mul(a, b), schoolbook_mul(a, b))
assert np.array_equal(intt(ntt(a)), a)
print("X^255 * X =", poly_mul(monomial(255), monomial(1))[0], "= -1 mod q")

batch = rng.integers(0, Q, (1000, 256))
t0 = time.perf_counter()
poly_mul(batch, batch[::-1])
t1 = time.perf_counter()
for x, y in zip(batch[:100], batch[::-1][:100]):
    schoolbook_mul(x, y)
t2 = time.perf_counter()
print(f"NTT product:       {(t1 - t0) / 1000 * 1e6:7.1f} us per pair (batched)")
print(f"schoolbook product: {(t2 - t1) / 100 * 1e6:7.1f} us per pair")
