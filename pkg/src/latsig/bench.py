"""Rejection-loop statistics measured on the real signing path."""

from __future__ import annotations

import csv
import hashlib
import time
from dataclasses import dataclass

import numpy as np

from .params import ParamSet, default_paramset
from .scheme import keygen, sign_with_transcript


@dataclass
class BenchResult:
    trials: int
    attempts: np.ndarray  # attempts needed by each signature
    z_accept: float       # fraction of attempts passing the z bound
    low_accept: float     # fraction of attempts passing the low-bits bound
    combined_accept: float
    elapsed: float

    @property
    def mean_attempts(self) -> float:
        return float(self.attempts.mean())

    def percentile(self, q: float) -> float:
        return float(np.percentile(self.attempts, q))

    @property
    def sigs_per_sec(self) -> float:
        return self.trials / self.elapsed if self.elapsed > 0 else float("inf")

    def rows(self) -> list[tuple[str, float]]:
        return [
            ("trials", self.trials),
            ("total_attempts", int(self.attempts.sum())),
            ("z_accept", self.z_accept),
            ("low_accept", self.low_accept),
            ("combined_accept", self.combined_accept),
            ("mean_attempts", self.mean_attempts),
            ("p50_attempts", self.percentile(50)),
            ("p90_attempts", self.percentile(90)),
            ("p99_attempts", self.percentile(99)),
            ("max_attempts", int(self.attempts.max())),
            ("sigs_per_sec", self.sigs_per_sec),
        ]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["metric", "value"])
            writer.writerows(self.rows())


def run_bench(trials: int, seed: bytes = bytes(32), params: ParamSet | None = None,
              trials_per_key: int = 100) -> BenchResult:
    """Sign ``trials`` messages and tally both rejection conditions.

    Every attempt is checked against both bounds, so the per-condition rates
    are unconditional.  A fresh key pair is drawn every ``trials_per_key``
    signatures.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    p = params or default_paramset()
    counts = np.empty(trials, dtype=np.int64)
    z_ok = low_ok = total = 0
    sk = None
    start = time.perf_counter()
    for i in range(trials):
        if i % trials_per_key == 0:
            key_seed = hashlib.shake_256(b"bench-key" + seed + i.to_bytes(4, "little")).digest(32)
            _, sk = keygen(key_seed, p)
        msg = b"bench message " + i.to_bytes(4, "little")
        _, transcript = sign_with_transcript(sk, msg, p)
        counts[i] = transcript.count
        total += transcript.count
        z_ok += sum(a.z_ok for a in transcript.attempts)
        low_ok += sum(a.low_ok for a in transcript.attempts)
    elapsed = time.perf_counter() - start
    return BenchResult(
        trials=trials,
        attempts=counts,
        z_accept=z_ok / total,
        low_accept=low_ok / total,
        combined_accept=trials / total,
        elapsed=elapsed,
    )


def z_accept_closed_form(params: ParamSet | None = None) -> float:
    """Probability that y + c*s1 stays inside the z bound, all l*n coefficients."""
    p = params or default_paramset()
    ratio = (2 * p.z_bound + 1) / (2 * p.gamma + 1)
    return ratio ** (p.l * p.n)
