"""Key and signature containers.

Polynomial fields hold canonical residues (see :mod:`latsig.ring`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _same(a, b) -> bool:
    return a.shape == b.shape and bool(np.array_equal(a, b))


@dataclass(frozen=True, eq=False)
class PublicKey:
    rho: bytes
    t: np.ndarray  # (k, 256)

    def __eq__(self, other):
        if not isinstance(other, PublicKey):
            return NotImplemented
        return self.rho == other.rho and _same(self.t, other.t)


@dataclass(frozen=True, eq=False)
class SecretKey:
    rho: bytes
    K: bytes
    t: np.ndarray   # (k, 256)
    s1: np.ndarray  # (l, 256), coefficients in [-eta, eta]
    s2: np.ndarray  # (k, 256), coefficients in [-eta, eta]

    def public_key(self) -> PublicKey:
        return PublicKey(self.rho, self.t)

    def __eq__(self, other):
        if not isinstance(other, SecretKey):
            return NotImplemented
        return (self.rho == other.rho and self.K == other.K and _same(self.t, other.t)
                and _same(self.s1, other.s1) and _same(self.s2, other.s2))

    def __repr__(self):
        return f"SecretKey(rho={self.rho.hex()[:16]}..., <secret>)"


@dataclass(frozen=True, eq=False)
class Signature:
    z: np.ndarray  # (l, 256)
    c_hash: bytes

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self.c_hash == other.c_hash and _same(self.z, other.z)
