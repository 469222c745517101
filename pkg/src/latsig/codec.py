"""Byte encodings for keys, signatures and the hashed high bits.

Every object starts with a two-byte header: ``0xB0 | kind`` followed by the
parameter-set id.  Coefficients are bit-packed little-endian; signed values
are shifted by their bound so they pack as non-negative integers.

Decoding is strict: wrong header, wrong length, nonzero padding bits or an
out-of-range coefficient all raise :class:`DecodeError`.
"""

from __future__ import annotations

import numpy as np

from .keys import PublicKey, SecretKey, Signature
from .params import ParamSet, default_paramset
from .ring import N, Q, to_centered
from .sampling import CHASH_BYTES, SEED_BYTES

MAGIC = 0xB0
KIND_PK = 1
KIND_SK = 2
KIND_SIG = 3


class DecodeError(ValueError):
    pass


def packed_len(count: int, width: int) -> int:
    return -(-count * width // 8)


def pack_bits(values, width: int, offset: int = 0) -> bytes:
    """Pack ``value - offset`` for each value into ``width`` bits, LSB first."""
    v = np.asarray(values, dtype=np.int64).ravel() - offset
    if v.size and (v.min() < 0 or v.max() >= 1 << width):
        raise ValueError(f"value outside [offset, offset + 2**{width})")
    bits = ((v[:, None] >> np.arange(width, dtype=np.int64)) & 1).astype(np.uint8)
    return np.packbits(bits.ravel(), bitorder="little").tobytes()


def unpack_bits(data: bytes, width: int, offset: int = 0, count: int | None = None,
                maximum: int | None = None) -> np.ndarray:
    """Inverse of :func:`pack_bits`.

    ``maximum`` bounds the stored (pre-offset) value; anything larger is a
    decode error, as is a length mismatch or a set padding bit.
    """
    data = bytes(data)
    if count is None:
        count = len(data) * 8 // width
    if len(data) != packed_len(count, width):
        raise DecodeError(f"expected {packed_len(count, width)} bytes, got {len(data)}")
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")
    if bits[count * width:].any():
        raise DecodeError("nonzero padding bits")
    weights = np.int64(1) << np.arange(width, dtype=np.int64)
    stored = bits[:count * width].reshape(count, width).astype(np.int64) @ weights
    if maximum is not None and stored.size and stored.max() > maximum:
        raise DecodeError(f"packed value exceeds {maximum}")
    return stored + offset


def _header(kind: int, p: ParamSet) -> bytes:
    return bytes([MAGIC | kind, p.param_id])


def _split(data: bytes, kind: int, p: ParamSet, sizes: list[int]) -> list[bytes]:
    data = bytes(data)
    expected = 2 + sum(sizes)
    if len(data) != expected:
        raise DecodeError(f"expected {expected} bytes, got {len(data)}")
    if data[:2] != _header(kind, p):
        raise DecodeError("bad header")
    parts, pos = [], 2
    for size in sizes:
        parts.append(data[pos:pos + size])
        pos += size
    return parts


def pk_size(p: ParamSet | None = None) -> int:
    p = p or default_paramset()
    return 2 + SEED_BYTES + packed_len(p.k * N, p.bits_t)


def sk_size(p: ParamSet | None = None) -> int:
    p = p or default_paramset()
    return (2 + 2 * SEED_BYTES + packed_len(p.k * N, p.bits_t)
            + packed_len(p.l * N, p.bits_s) + packed_len(p.k * N, p.bits_s))


def sig_size(p: ParamSet | None = None) -> int:
    p = p or default_paramset()
    return 2 + CHASH_BYTES + packed_len(p.l * N, p.bits_z)


def encode_pk(pk: PublicKey, params: ParamSet | None = None) -> bytes:
    p = params or default_paramset()
    return _header(KIND_PK, p) + pk.rho + pack_bits(pk.t, p.bits_t)


def decode_pk(data: bytes, params: ParamSet | None = None) -> PublicKey:
    p = params or default_paramset()
    rho, t = _split(data, KIND_PK, p, [SEED_BYTES, packed_len(p.k * N, p.bits_t)])
    t = unpack_bits(t, p.bits_t, 0, p.k * N, maximum=Q - 1)
    return PublicKey(rho, t.reshape(p.k, N))


def _pack_small(s, p: ParamSet) -> bytes:
    return pack_bits(to_centered(np.asarray(s)), p.bits_s, -p.eta)


def _unpack_small(data: bytes, rows: int, p: ParamSet) -> np.ndarray:
    s = unpack_bits(data, p.bits_s, -p.eta, rows * N, maximum=2 * p.eta)
    return (s % Q).reshape(rows, N)


def encode_sk(sk: SecretKey, params: ParamSet | None = None) -> bytes:
    p = params or default_paramset()
    return (_header(KIND_SK, p) + sk.rho + sk.K + pack_bits(sk.t, p.bits_t)
            + _pack_small(sk.s1, p) + _pack_small(sk.s2, p))


def decode_sk(data: bytes, params: ParamSet | None = None) -> SecretKey:
    p = params or default_paramset()
    rho, K, t, s1, s2 = _split(data, KIND_SK, p, [
        SEED_BYTES, SEED_BYTES, packed_len(p.k * N, p.bits_t),
        packed_len(p.l * N, p.bits_s), packed_len(p.k * N, p.bits_s)])
    t = unpack_bits(t, p.bits_t, 0, p.k * N, maximum=Q - 1).reshape(p.k, N)
    return SecretKey(rho, K, t, _unpack_small(s1, p.l, p), _unpack_small(s2, p.k, p))


def encode_sig(sig: Signature, params: ParamSet | None = None) -> bytes:
    p = params or default_paramset()
    z = to_centered(np.asarray(sig.z))
    return _header(KIND_SIG, p) + sig.c_hash + pack_bits(z, p.bits_z, -p.z_bound)


def decode_sig(data: bytes, params: ParamSet | None = None) -> Signature:
    p = params or default_paramset()
    c_hash, z = _split(data, KIND_SIG, p, [CHASH_BYTES, packed_len(p.l * N, p.bits_z)])
    z = unpack_bits(z, p.bits_z, -p.z_bound, p.l * N, maximum=2 * p.z_bound)
    return Signature((z % Q).reshape(p.l, N), c_hash)


def encode_w1(h, params: ParamSet | None = None) -> bytes:
    """Pack a (k, 256) array of high-bits values, 3 bits each under defaults."""
    p = params or default_paramset()
    return pack_bits(h, p.bits_w1)


def decode_w1(data: bytes, params: ParamSet | None = None) -> np.ndarray:
    p = params or default_paramset()
    h = unpack_bits(data, p.bits_w1, 0, p.k * N, maximum=p.high_range - 1)
    return h.reshape(p.k, N)
