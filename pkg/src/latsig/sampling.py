"""Deterministic expansion of seeds into scheme values.

All randomness comes from SHAKE-256 with a one-byte domain tag prefixed to
the input.  Multi-byte integers inside XOF inputs are little-endian and
nonces take two bytes.  Uniform values are drawn by rejection from
fixed-width chunks of the output bit stream (little-endian bit order), so no
sampler carries modulo bias.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .params import ParamSet, default_paramset
from .ring import N, Q

SEED_BYTES = 32
CHASH_BYTES = 32

TAG_A = 0x00
TAG_S = 0x01
TAG_MASK = 0x02
TAG_CHALLENGE = 0x03
TAG_BALL = 0x04
TAG_KEY = 0x05
TAG_PK_DIGEST = 0x06
TAG_MESSAGE = 0x07


def xof(domain_tag: int, data: bytes, outlen: int) -> bytes:
    if outlen < 1:
        raise ValueError("outlen must be >= 1")
    return hashlib.shake_256(bytes([domain_tag]) + bytes(data)).digest(outlen)


def _nonce(i: int) -> bytes:
    if not 0 <= i < 1 << 16:
        raise ValueError(f"nonce {i} does not fit in two bytes")
    return i.to_bytes(2, "little")


def _check_seed(seed: bytes, name: str = "seed") -> bytes:
    seed = bytes(seed)
    if len(seed) != SEED_BYTES:
        raise ValueError(f"{name} must be {SEED_BYTES} bytes, got {len(seed)}")
    return seed


def _chunks(buf: bytes, width: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
    usable = len(bits) - len(bits) % width
    weights = np.int64(1) << np.arange(width, dtype=np.int64)
    return bits[:usable].reshape(-1, width).astype(np.int64) @ weights


def _rejection_sample(tag: int, data: bytes, width: int, limit: int, count: int = N) -> np.ndarray:
    """First ``count`` chunks of xof(tag, data) that are below ``limit``.

    The stream is squeezed longer until enough chunks survive; SHAKE output
    is prefix-stable, so the result does not depend on the initial length.
    """
    accept = limit / (1 << width)
    nbytes = -(-int(count * width / accept * 1.1 + 2 * width) // 8)
    while True:
        vals = _chunks(xof(tag, data, nbytes), width)
        vals = vals[vals < limit]
        if len(vals) >= count:
            return vals[:count]
        nbytes *= 2


def expand_a(rho: bytes, params: ParamSet | None = None) -> np.ndarray:
    """Uniform k x l matrix over R_q; entry (i, j) depends only on (rho, i, j)."""
    p = params or default_paramset()
    rho = _check_seed(rho, "rho")
    A = np.empty((p.k, p.l, N), dtype=np.int64)
    for i in range(p.k):
        for j in range(p.l):
            A[i, j] = _rejection_sample(TAG_A, rho + _nonce(i) + _nonce(j), p.bits_t, p.q)
    return A


def expand_s(sigma: bytes, nonce: int, params: ParamSet | None = None) -> np.ndarray:
    """Polynomial with coefficients uniform in [-eta, eta], stored mod q."""
    p = params or default_paramset()
    sigma = _check_seed(sigma, "sigma")
    vals = _rejection_sample(TAG_S, sigma + _nonce(nonce), p.bits_s, 2 * p.eta + 1)
    return (vals - p.eta) % Q


def expand_mask(K: bytes, mu: bytes, attempt: int, j: int, params: ParamSet | None = None) -> np.ndarray:
    """Masking polynomial with coefficients uniform in [-gamma, gamma], stored mod q.

    Each signing attempt draws from its own stream, so restarts never reuse
    a mask.
    """
    p = params or default_paramset()
    K = _check_seed(K, "K")
    if not 0 <= j < p.l:
        raise ValueError(f"mask index {j} outside [0, {p.l})")
    data = K + bytes(mu) + _nonce(attempt) + _nonce(j)
    width = (2 * p.gamma).bit_length()
    vals = _rejection_sample(TAG_MASK, data, width, 2 * p.gamma + 1)
    return (vals - p.gamma) % Q


def expand_mask_vec(K: bytes, mu: bytes, attempt: int, params: ParamSet | None = None) -> np.ndarray:
    p = params or default_paramset()
    return np.stack([expand_mask(K, mu, attempt, j, p) for j in range(p.l)])


def hash_challenge(w1_bytes: bytes, M: bytes) -> bytes:
    """32-byte Fiat-Shamir digest of the packed high bits and the message."""
    return xof(TAG_CHALLENGE, bytes(w1_bytes) + bytes(M), CHASH_BYTES)


@dataclass(frozen=True)
class Challenge:
    """Sparse ternary polynomial: ``signs[i]`` sits at ``positions[i]``."""

    positions: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.positions)

    def coeffs(self) -> np.ndarray:
        """Dense signed coefficient vector."""
        c = np.zeros(N, dtype=np.int64)
        c[list(self.positions)] = self.signs
        return c

    def poly(self) -> np.ndarray:
        return self.coeffs() % Q


def sample_in_ball(ch: bytes, params: ParamSet | None = None) -> Challenge:
    """Expand a digest into a challenge with exactly tau entries in {-1, +1}.

    The first 8 stream bytes supply the sign bits; later bytes drive an
    inside-out Fisher-Yates placement of the tau nonzero positions.
    """
    p = params or default_paramset()
    ch = bytes(ch)
    if len(ch) != CHASH_BYTES:
        raise ValueError(f"challenge digest must be {CHASH_BYTES} bytes")
    tau = p.tau
    nbytes = 8 + 2 * tau
    stream = xof(TAG_BALL, ch, nbytes)
    signs = int.from_bytes(stream[:8], "little")
    pos = 8
    c = [0] * N
    for i in range(N - tau, N):
        while True:
            if pos >= len(stream):
                nbytes *= 2
                stream = xof(TAG_BALL, ch, nbytes)
            b = stream[pos]
            pos += 1
            if b <= i:
                break
        c[i] = c[b]
        c[b] = 1 - 2 * (signs & 1)
        signs >>= 1
    positions = tuple(i for i in range(N) if c[i])
    return Challenge(positions, tuple(c[i] for i in positions))
