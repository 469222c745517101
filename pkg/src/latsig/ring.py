"""Arithmetic in Z_q[X]/(X^256 + 1).

Polynomials are int64 numpy arrays whose last axis has length 256 and whose
entries are canonical residues in [0, q).  Leading axes are batch axes, so a
vector of polynomials has shape ``(m, 256)`` and a matrix ``(k, l, 256)``.
Every public function returns canonical arrays.

Products of two residues are below 2**46, so int64 never overflows; the
schoolbook convolution sums at most 256 such products (< 2**54).

Nothing here is constant time.
"""

from __future__ import annotations

import numpy as np

from .params import N, Q

HALF_Q = (Q - 1) // 2


def _primitive_root(q: int) -> int:
    order = q - 1
    factors = []
    m, p = order, 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        factors.append(m)
    g = 2
    while any(pow(g, order // f, q) == 1 for f in factors):
        g += 1
    return g


def _bitrev(x: int, bits: int) -> int:
    return int(format(x, f"0{bits}b")[::-1], 2)


# primitive 512-th root of unity; exists because 512 | q - 1
ZETA = pow(_primitive_root(Q), (Q - 1) // (2 * N), Q)
assert pow(ZETA, N, Q) == Q - 1

_ZETAS = np.array([pow(ZETA, _bitrev(i, 8), Q) for i in range(N)], dtype=np.int64)
_N_INV = pow(N, -1, Q)


def zero(*shape: int) -> np.ndarray:
    return np.zeros(shape + (N,), dtype=np.int64)


def monomial(i: int, coeff: int = 1) -> np.ndarray:
    """``coeff * X^i`` reduced into the ring."""
    p = zero()
    p[i % N] = (coeff if (i // N) % 2 == 0 else -coeff) % Q
    return p


def constant(c: int) -> np.ndarray:
    return monomial(0, c)


def from_signed(a) -> np.ndarray:
    """Canonicalise an array of (possibly negative) integers."""
    return np.mod(np.asarray(a, dtype=np.int64), Q)


def poly_add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.mod(a + b, Q)


def poly_sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.mod(a - b, Q)


def poly_neg(a: np.ndarray) -> np.ndarray:
    return np.mod(-a, Q)


def ntt(a: np.ndarray) -> np.ndarray:
    """Forward negacyclic NTT (Cooley-Tukey, output in bit-reversed order)."""
    a = np.array(a, dtype=np.int64, copy=True)
    batch = a.shape[:-1]
    k = 0
    length = N // 2
    while length >= 1:
        blocks = N // (2 * length)
        v = a.reshape(batch + (blocks, 2, length))
        zetas = _ZETAS[k + 1:k + 1 + blocks, None]
        t = (zetas * v[..., 1, :]) % Q
        v[..., 1, :] = v[..., 0, :] - t
        v[..., 0, :] += t
        v %= Q
        k += blocks
        length //= 2
    return a


def intt(a: np.ndarray) -> np.ndarray:
    """Inverse of :func:`ntt` (Gentleman-Sande, scaled by 1/256)."""
    a = np.array(a, dtype=np.int64, copy=True)
    batch = a.shape[:-1]
    k = N
    length = 1
    while length < N:
        blocks = N // (2 * length)
        v = a.reshape(batch + (blocks, 2, length))
        zetas = (Q - _ZETAS[k - blocks:k][::-1, None]) % Q
        diff = (v[..., 0, :] - v[..., 1, :]) % Q
        v[..., 0, :] += v[..., 1, :]
        v[..., 0, :] %= Q
        v[..., 1, :] = (zetas * diff) % Q
        k -= blocks
        length *= 2
    return (a * _N_INV) % Q


def ntt_mul(a_hat: np.ndarray, b_hat: np.ndarray) -> np.ndarray:
    """Pointwise product of two NTT-domain arrays."""
    return (a_hat * b_hat) % Q


def poly_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Negacyclic product; broadcasts over batch axes."""
    return intt(ntt_mul(ntt(a), ntt(b)))


def schoolbook_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Quadratic-time negacyclic product of two single polynomials.

    Kept as an exact oracle for :func:`poly_mul`.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != (N,) or b.shape != (N,):
        raise ValueError("schoolbook_mul takes two single polynomials")
    full = np.convolve(a, b)
    out = full[:N].copy()
    out[:N - 1] -= full[N:]
    return np.mod(out, Q)


def matvec_mul(A: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``A @ v`` for A of shape (k, l, 256) and v of shape (l, 256)."""
    A = np.asarray(A)
    v = np.asarray(v)
    if A.ndim != 3 or v.ndim != 2 or A.shape[1] != v.shape[0] or A.shape[2] != N or v.shape[1] != N:
        raise ValueError(f"dimension mismatch: A{A.shape} times v{v.shape}")
    return intt(matvec_ntt(ntt(A), ntt(v)))


def matvec_ntt(A_hat: np.ndarray, v_hat: np.ndarray) -> np.ndarray:
    # l <= 255 products below 2**46 each: the sum stays inside int64
    return np.sum(A_hat * v_hat[None, :, :], axis=1) % Q


def to_centered(x):
    """Representative of ``x`` in (-q/2, q/2]; works on ints and arrays."""
    if isinstance(x, np.ndarray):
        return np.where(x > HALF_Q, x - Q, x)
    x = int(x) % Q
    return x - Q if x > HALF_Q else x


def inf_norm(a) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return int(np.max(np.abs(to_centered(a))))
