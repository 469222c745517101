"""High/low-bits decomposition.

``r = high * alpha + low (mod q)`` with ``low`` the centred residue of r
modulo alpha = 2*gamma, taken in (-gamma, gamma].  The residues just below q
would otherwise get high = (q - 1)/alpha; they are folded onto high = 0 with
low shifted down by one, so high always fits in [0, (q - 1)/alpha).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .params import ParamSet, default_paramset


class Decomposition(NamedTuple):
    high: int
    low: int


def decompose_array(r, q: int, alpha: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised decomposition of canonical residues; returns (high, low)."""
    r = np.asarray(r, dtype=np.int64)
    gamma = alpha // 2
    low = r % alpha
    low = np.where(low > gamma, low - alpha, low)
    wrap = (r - low) == q - 1
    high = np.where(wrap, 0, (r - low) // alpha)
    low = np.where(wrap, low - 1, low)
    return high, low


def decompose(r: int, params: ParamSet | None = None, *, q: int | None = None,
              alpha: int | None = None) -> Decomposition:
    """Split one residue into its high and low parts.

    ``q`` and ``alpha`` default to the parameter set's values and may be
    overridden to work with a toy modulus.
    """
    p = params or default_paramset()
    q = p.q if q is None else q
    alpha = p.alpha if alpha is None else alpha
    if not 0 <= r < q:
        raise ValueError(f"{r} is not a canonical residue mod {q}")
    gamma = alpha // 2
    low = r % alpha
    if low > gamma:
        low -= alpha
    if r - low == q - 1:
        return Decomposition(0, low - 1)
    return Decomposition((r - low) // alpha, low)


def high_bits(v, params: ParamSet | None = None) -> np.ndarray:
    p = params or default_paramset()
    return decompose_array(v, p.q, p.alpha)[0]


def low_bits(v, params: ParamSet | None = None) -> np.ndarray:
    """Low parts as canonical residues (use ``signed_low_bits`` for norms)."""
    p = params or default_paramset()
    return decompose_array(v, p.q, p.alpha)[1] % p.q


def signed_low_bits(v, params: ParamSet | None = None) -> np.ndarray:
    p = params or default_paramset()
    return decompose_array(v, p.q, p.alpha)[1]
