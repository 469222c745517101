"""Exit criteria for the build; each test logs one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py``; the lines appear in the
"acceptance criteria" section of the summary.
"""

import hashlib
import subprocess
import sys

import numpy as np
import pytest

from latsig import codec
from latsig.bench import run_bench, z_accept_closed_form
from latsig.params import default_paramset
from latsig.ring import N, Q, inf_norm, monomial, poly_mul, schoolbook_mul
from latsig.rounding import decompose_array
from latsig.sampling import expand_s, sample_in_ball, xof
from latsig.scheme import keygen, sign, sign_with_transcript, verify, verify_bytes
from oracles import simulate_attempts

P = default_paramset()
KAT_MASTER = "00112233445566778899aabbccddeeff00112233445566778899aabbccddeeff"
KAT_100_SHA3 = "2508254bdd4576e8abb39c20ac80c23df542e6069d0ddebf44c991497940f469"


@pytest.fixture
def report(acceptance_log):
    def _report(number, title, ok, detail):
        acceptance_log.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
        print(acceptance_log[-1])
        assert ok, detail
    return _report


def test_c1_roundtrip(report):
    rng = np.random.default_rng(1)
    failures = 0
    for _ in range(1000):
        pk, sk = keygen(rng.bytes(32))
        msg = rng.bytes(int(rng.integers(0, 200)))
        failures += not verify(pk, msg, sign(sk, msg))
    report(1, "sign/verify roundtrip", failures == 0, f"{1000 - failures}/1000 accepted")


def test_c2_tamper(report):
    rng = np.random.default_rng(2)
    survived = 0
    for _ in range(200):
        pk, sk = keygen(rng.bytes(32))
        msg = rng.bytes(int(rng.integers(1, 100)))
        pkb, sigb = codec.encode_pk(pk), codec.encode_sig(sign(sk, msg))
        blob = bytearray(msg + sigb + pkb)
        bit = int(rng.integers(len(blob) * 8))
        blob[bit // 8] ^= 1 << (bit % 8)
        m2 = bytes(blob[:len(msg)])
        s2 = bytes(blob[len(msg):len(msg) + len(sigb)])
        p2 = bytes(blob[len(msg) + len(sigb):])
        survived += verify_bytes(p2, m2, s2)
    report(2, "single-bit tamper rejected", survived == 0, f"{200 - survived}/200 rejected")


def test_c3_decompose_exhaustive(report):
    r = np.arange(Q, dtype=np.int64)
    high, low = decompose_array(r, Q, P.alpha)
    recon = bool(np.array_equal((high * P.alpha + low) % Q, r))
    hi_ok = bool(high.min() >= 0 and high.max() < 8)
    lo_ok = bool(low.min() >= -P.gamma and low.max() <= P.gamma)
    report(3, "exhaustive decompose", recon and hi_ok and lo_ok,
           f"{Q} residues, reconstruction={recon}, high in [0,8)={hi_ok}, |low|<=gamma={lo_ok}")


def test_c4_carry_stability(report):
    rng = np.random.default_rng(4)
    r = rng.integers(0, Q, 1_000_000)
    e = rng.integers(-P.beta, P.beta + 1, r.shape)
    h_r, _ = decompose_array(r, Q, P.alpha)
    h_s, l_s = decompose_array((r - e) % Q, Q, P.alpha)
    cond = np.abs(l_s) < P.gamma - P.beta
    bad = int(np.count_nonzero(h_r[cond] != h_s[cond]))
    report(4, "carry stability", bad == 0,
           f"{int(cond.sum())} pairs met the low-bits condition, {bad} high-bits changes")


def test_c5_ntt_vs_schoolbook(report):
    rng = np.random.default_rng(5)
    a = rng.integers(0, Q, (100, N))
    b = rng.integers(0, Q, (100, N))
    prod = poly_mul(a, b)
    bad = sum(not np.array_equal(prod[i], schoolbook_mul(a[i], b[i])) for i in range(100))
    eye = np.eye(N, dtype=np.int64)
    for i in range(N):
        got = poly_mul(monomial(i), eye)
        for j in range(N):
            bad += not np.array_equal(got[j], schoolbook_mul(monomial(i), monomial(j)))
    report(5, "NTT equals schoolbook", bad == 0, f"100 random + {N * N} monomial pairs, {bad} mismatches")


def test_c6_challenge(report):
    bad_shape = 0
    worst = 0
    sigma = bytes(range(32))
    for i in range(10_000):
        c = sample_in_ball(xof(0x10, i.to_bytes(4, "little"), 32))
        dense = c.coeffs()
        bad_shape += not (np.count_nonzero(dense) == 60 and set(dense[dense != 0]) <= {-1, 1})
        worst = max(worst, inf_norm(poly_mul(c.poly(), expand_s(sigma, i % 65536))))
    ok = bad_shape == 0 and worst <= 360
    report(6, "challenge contract", ok,
           f"{10_000 - bad_shape}/10000 challenges well formed, max |c*s| = {worst} <= 360")


def test_c7_rejection_rates(report):
    result = run_bench(10_000)
    closed = z_accept_closed_form()
    z_oracle, low_oracle = simulate_attempts(3000, np.random.default_rng(7))
    combined_oracle = float(np.mean(z_oracle & low_oracle))
    z_ok = abs(result.z_accept - closed) <= 0.03
    comb_ok = abs(result.combined_accept - combined_oracle) <= 0.05
    mean_ok = abs(result.mean_attempts - 3.4) <= 0.5
    report(7, "rejection rates", z_ok and comb_ok and mean_ok,
           f"z accept {result.z_accept:.4f} vs closed form {closed:.4f}; "
           f"combined {result.combined_accept:.4f} vs Monte-Carlo {combined_oracle:.4f}; "
           f"mean attempts {result.mean_attempts:.3f} vs 3.4")


def test_c8_codec(report):
    rng = np.random.default_rng(8)
    roundtrip_bad = 0
    size_bad = 0
    silent = 0
    samples = {"pk": [], "sk": [], "sig": []}
    for i in range(1000):
        pk, sk = keygen(rng.bytes(32))
        sig = sign(sk, i.to_bytes(4, "little"))
        for kind, obj, enc, dec, size in (
            ("pk", pk, codec.encode_pk, codec.decode_pk, 2978),
            ("sk", sk, codec.encode_sk, codec.decode_sk, 3906),
            ("sig", sig, codec.encode_sig, codec.decode_sig, 1954),
        ):
            data = enc(obj)
            size_bad += len(data) != size
            roundtrip_bad += dec(data) != obj
            samples[kind].append((obj, data, dec))
    for kind, items in samples.items():
        for obj, data, dec in items:
            bit = int(rng.integers(len(data) * 8))
            flipped = bytearray(data)
            flipped[bit // 8] ^= 1 << (bit % 8)
            try:
                back = dec(bytes(flipped))
            except codec.DecodeError:
                continue
            silent += back == obj
    ok = roundtrip_bad == 0 and size_bad == 0 and silent == 0
    report(8, "codec strictness and sizes", ok,
           f"3000 objects, {roundtrip_bad} roundtrip failures, {size_bad} size errors, "
           f"{silent} silent corruptions out of 3000 bit flips")


_KAT_SCRIPT = (
    "import hashlib, sys\n"
    "from latsig.kat import kat_generate, kat_write\n"
    "seed = bytes.fromhex(sys.argv[1])\n"
    "print(hashlib.sha3_256(kat_write(kat_generate(seed, 100), seed).encode()).hexdigest())\n"
)


def test_c9_kat_determinism(report):
    digests = [
        subprocess.run([sys.executable, "-c", _KAT_SCRIPT, KAT_MASTER], capture_output=True,
                       text=True, check=True).stdout.strip()
        for _ in range(2)
    ]
    ok = digests[0] == digests[1] == KAT_100_SHA3
    report(9, "KAT regeneration", ok,
           f"two runs -> {digests[0][:16]}.. / {digests[1][:16]}.., frozen {KAT_100_SHA3[:16]}..")
