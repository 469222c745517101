"""Scheme constants.

Every other module reads its sizes and bounds from a :class:`ParamSet`.
Only :func:`default_paramset` is a supported configuration; other sets can
be built with :func:`make_paramset` and checked with :func:`validate`.
"""

from __future__ import annotations

from dataclasses import dataclass

Q = 8380417  # 2**23 - 2**13 + 1
N = 256
TAU = 60

_CORE_KEYS = ("q", "n", "k", "l", "eta", "gamma", "tau")


class ParamError(ValueError):
    """A parameter set violates one of its invariants."""


@dataclass(frozen=True)
class ParamSet:
    q: int
    n: int
    k: int
    l: int
    eta: int
    gamma: int
    tau: int
    beta: int
    alpha: int
    bits_t: int
    bits_z: int
    bits_s: int
    bits_w1: int

    @property
    def z_bound(self) -> int:
        """Largest accepted signature coefficient magnitude, gamma - beta."""
        return self.gamma - self.beta

    @property
    def high_range(self) -> int:
        """Number of distinct high-bits values, (q - 1) / alpha."""
        return (self.q - 1) // self.alpha

    @property
    def param_id(self) -> int:
        # 1 for the canonical set, 0 for anything else
        return 1 if self == _DEFAULT else 0


def derive_beta(eta: int, tau: int) -> int:
    """Largest possible coefficient of c*s for c of weight tau and |s| <= eta."""
    return tau * eta


def make_paramset(q=Q, n=N, k=4, l=3, eta=6, gamma=(Q - 1) // 16, tau=TAU) -> ParamSet:
    """Build a ParamSet from its core constants, deriving everything else.

    The result is not validated; pass it through :func:`validate`.
    """
    beta = derive_beta(eta, tau)
    alpha = 2 * gamma
    return ParamSet(
        q=q, n=n, k=k, l=l, eta=eta, gamma=gamma, tau=tau,
        beta=beta,
        alpha=alpha,
        bits_t=(q - 1).bit_length(),
        bits_z=max(2 * (gamma - beta), 1).bit_length(),
        bits_s=max(2 * eta, 1).bit_length(),
        bits_w1=max((q - 1) // alpha - 1, 1).bit_length() if alpha > 0 else 1,
    )


_DEFAULT = make_paramset()


def default_paramset() -> ParamSet:
    return _DEFAULT


def validate(p: ParamSet) -> ParamSet:
    """Return ``p`` unchanged if every invariant holds, else raise ParamError.

    Checks run in a fixed order and the first failure is reported.
    """
    checks = [
        (p.q == Q, f"q must be {Q}"),
        (p.n == N, f"n must be {N}"),
        (p.tau == TAU, f"tau must be {TAU}"),
        (p.l >= 1, "l must be >= 1"),
        (p.k >= p.l, "k must be >= l"),
        (p.eta >= 1, "eta must be >= 1"),
        (p.gamma >= 1, "gamma must be >= 1"),
        (p.alpha == 2 * p.gamma, "alpha must equal 2*gamma"),
        ((p.q - 1) % p.alpha == 0, "alpha does not divide q-1"),
        (p.beta < p.gamma, "beta must be < gamma"),
        (p.beta == derive_beta(p.eta, p.tau), "beta must equal tau*eta"),
        (p.q <= 2 ** p.bits_t, "bits_t too small for q"),
        (2 * (p.gamma - p.beta) + 1 <= 2 ** p.bits_z, "bits_z too small for z"),
        (2 * p.eta + 1 <= 2 ** p.bits_s, "bits_s too small for eta"),
        ((p.q - 1) // p.alpha <= 2 ** p.bits_w1, "bits_w1 too small for high bits"),
    ]
    for ok, message in checks:
        if not ok:
            raise ParamError(message)
    return p


def parse_params(text: str) -> ParamSet:
    """Read a ``key=value`` config; keys are exactly q, n, k, l, eta, gamma, tau.

    Blank lines and ``#`` comments are ignored. Derived constants are always
    recomputed, so supplying one (e.g. ``beta``) is an error.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ParamError(f"line {lineno}: expected key=value")
        if key not in _CORE_KEYS:
            raise ParamError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ParamError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = int(value.strip(), 0)
        except ValueError:
            raise ParamError(f"line {lineno}: {key} is not an integer") from None
    missing = [k for k in _CORE_KEYS if k not in values]
    if missing:
        raise ParamError(f"missing keys: {', '.join(missing)}")
    return validate(make_paramset(**values))


def format_params(p: ParamSet) -> str:
    return "".join(f"{key}={getattr(p, key)}\n" for key in _CORE_KEYS)

