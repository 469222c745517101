"""Key generation, signing with restarts, and verification.

The signer draws a mask y, commits to the high bits of w = A*y, derives the
challenge c from them, and answers with z = y + c*s1.  The attempt is thrown
away if z is too large or if the low bits of w - c*s2 are too large; the
second check guarantees that the verifier, which only sees
A*z - c*t = w - c*s2, recovers the same high bits.

Signing is derandomized by default: the mask for attempt ``i`` is expanded
from the secret seed K, the message representative and ``i``.
"""

from __future__ import annotations

import functools
import hmac
import os
from dataclasses import dataclass, field

import numpy as np

from . import codec
from .keys import PublicKey, SecretKey, Signature
from .params import ParamSet, default_paramset
from .ring import N, Q, intt, matvec_ntt, ntt, inf_norm
from .rounding import decompose_array
from .sampling import (
    CHASH_BYTES, SEED_BYTES, TAG_KEY, TAG_MESSAGE, TAG_PK_DIGEST, Challenge,
    expand_a, expand_mask_vec, expand_s, hash_challenge, sample_in_ball, xof,
)

DEFAULT_MAX_ATTEMPTS = 512


class AttemptsExhausted(RuntimeError):
    """Signing hit the attempt cap; points at broken parameters or code."""


@functools.lru_cache(maxsize=32)
def _a_hat(rho: bytes, params: ParamSet) -> np.ndarray:
    A_hat = ntt(expand_a(rho, params))
    A_hat.setflags(write=False)
    return A_hat


def keypair_from_secrets(rho: bytes, K: bytes, s1, s2,
                         params: ParamSet | None = None) -> tuple[PublicKey, SecretKey]:
    """Assemble a key pair around given secrets: t = A*s1 + s2."""
    p = params or default_paramset()
    s1 = np.mod(np.asarray(s1, dtype=np.int64), Q)
    s2 = np.mod(np.asarray(s2, dtype=np.int64), Q)
    if s1.shape != (p.l, N) or s2.shape != (p.k, N):
        raise ValueError("secret vectors have the wrong shape")
    A_hat = _a_hat(bytes(rho), p)
    t = (intt(matvec_ntt(A_hat, ntt(s1))) + s2) % Q
    return PublicKey(bytes(rho), t), SecretKey(bytes(rho), bytes(K), t, s1, s2)


def keygen(seed: bytes, params: ParamSet | None = None) -> tuple[PublicKey, SecretKey]:
    p = params or default_paramset()
    seed = bytes(seed)
    if len(seed) != SEED_BYTES:
        raise ValueError(f"seed must be {SEED_BYTES} bytes")
    expanded = xof(TAG_KEY, seed, 3 * SEED_BYTES)
    rho, sigma, K = expanded[:32], expanded[32:64], expanded[64:]
    s1 = np.stack([expand_s(sigma, i, p) for i in range(p.l)])
    s2 = np.stack([expand_s(sigma, p.l + i, p) for i in range(p.k)])
    return keypair_from_secrets(rho, K, s1, s2, p)


def message_representative(pk: PublicKey, M: bytes, params: ParamSet | None = None) -> bytes:
    """64-byte digest binding the message to the public key.

    This is what enters the challenge hash, so a signature is tied to the
    exact key it was made under.
    """
    tr = xof(TAG_PK_DIGEST, codec.encode_pk(pk, params), 32)
    return xof(TAG_MESSAGE, tr + bytes(M), 64)


@dataclass
class Attempt:
    attempt: int
    y: np.ndarray
    w: np.ndarray
    c_hash: bytes
    challenge: Challenge
    z: np.ndarray
    z_ok: bool
    low_ok: bool

    @property
    def reason(self) -> str:
        if not self.z_ok:
            return "z-bound"
        if not self.low_ok:
            return "low-bound"
        return "none"

    @property
    def accepted(self) -> bool:
        return self.z_ok and self.low_ok


@dataclass
class SignTranscript:
    attempts: list[Attempt] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.attempts)


class _Signer:
    """Per-(key, message) precomputation shared by all attempts."""

    def __init__(self, sk: SecretKey, M: bytes, params: ParamSet, salt: bytes | None = None):
        self.p = params
        self.A_hat = _a_hat(sk.rho, params)
        self.s_hat = ntt(np.concatenate([sk.s1, sk.s2]))
        self.mu = message_representative(sk.public_key(), M, params)
        self.mask_key = sk.K if salt is None else xof(TAG_KEY, sk.K + bytes(salt), SEED_BYTES)

    def attempt(self, i: int) -> Attempt:
        p = self.p
        bound = p.z_bound
        y = expand_mask_vec(self.mask_key, self.mu, i, p)
        w = intt(matvec_ntt(self.A_hat, ntt(y)))
        high, _ = decompose_array(w, p.q, p.alpha)
        c_hash = hash_challenge(codec.encode_w1(high, p), self.mu)
        c = sample_in_ball(c_hash, p)
        c_hat = ntt(c.poly())
        cs = intt(c_hat * self.s_hat % Q)
        z = (y + cs[:p.l]) % Q
        cs2 = cs[p.l:]
        _, low = decompose_array((w - cs2) % Q, p.q, p.alpha)
        return Attempt(
            attempt=i, y=y, w=w, c_hash=c_hash, challenge=c, z=z,
            z_ok=inf_norm(z) <= bound,
            low_ok=int(np.max(np.abs(low))) <= bound,
        )


def sign_attempt(sk: SecretKey, M: bytes, attempt: int, params: ParamSet | None = None,
                 salt: bytes | None = None) -> Attempt:
    """Run a single loop iteration; :func:`sign` returns the first accepted one."""
    if attempt < 0:
        raise ValueError("attempt must be >= 0")
    return _Signer(sk, M, params or default_paramset(), salt).attempt(attempt)


def sign_with_transcript(sk: SecretKey, M: bytes, params: ParamSet | None = None, *,
                         randomized: bool = False,
                         max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> tuple[Signature, SignTranscript]:
    p = params or default_paramset()
    signer = _Signer(sk, M, p, os.urandom(32) if randomized else None)
    transcript = SignTranscript()
    for i in range(max_attempts):
        att = signer.attempt(i)
        transcript.attempts.append(att)
        if att.accepted:
            return Signature(att.z, att.c_hash), transcript
    raise AttemptsExhausted(f"no valid signature after {max_attempts} attempts")


def sign(sk: SecretKey, M: bytes, params: ParamSet | None = None, *,
         randomized: bool = False, max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> Signature:
    return sign_with_transcript(sk, M, params, randomized=randomized,
                                max_attempts=max_attempts)[0]


def verify(pk: PublicKey, M: bytes, sig: Signature, params: ParamSet | None = None) -> bool:
    """True iff ``sig`` is a valid signature on ``M`` under ``pk``.

    Never raises on malformed input; anything unexpected is a rejection.
    """
    p = params or default_paramset()
    try:
        z = np.asarray(sig.z)
        t = np.asarray(pk.t)
        if (z.shape != (p.l, N) or t.shape != (p.k, N) or len(sig.c_hash) != CHASH_BYTES
                or len(pk.rho) != SEED_BYTES):
            return False
        if not (np.issubdtype(z.dtype, np.integer) and np.issubdtype(t.dtype, np.integer)):
            return False
        z = z.astype(np.int64)
        t = t.astype(np.int64)
        if z.min() < 0 or z.max() >= Q or t.min() < 0 or t.max() >= Q:
            return False
        if inf_norm(z) > p.z_bound:
            return False
        A_hat = _a_hat(bytes(pk.rho), p)
        c_hat = ntt(sample_in_ball(sig.c_hash, p).poly())
        u = (intt(matvec_ntt(A_hat, ntt(z))) - intt(c_hat * ntt(t) % Q)) % Q
        high, _ = decompose_array(u, p.q, p.alpha)
        mu = message_representative(PublicKey(pk.rho, t), M, p)
        expected = hash_challenge(codec.encode_w1(high, p), mu)
        return hmac.compare_digest(expected, bytes(sig.c_hash))
    except (ValueError, TypeError):
        return False


def verify_bytes(pk_bytes: bytes, M: bytes, sig_bytes: bytes,
                 params: ParamSet | None = None) -> bool:
    """Decode then verify; any decoding failure is a rejection."""
    try:
        pk = codec.decode_pk(pk_bytes, params)
        sig = codec.decode_sig(sig_bytes, params)
    except codec.DecodeError:
        return False
    return verify(pk, M, sig, params)
