import numpy as np
import pytest

from latsig import codec
from latsig.params import default_paramset
from latsig.ring import Q, inf_norm, matvec_mul, poly_mul, schoolbook_mul, zero
from latsig.rounding import high_bits, signed_low_bits
from latsig.sampling import expand_a, expand_mask_vec
from latsig.scheme import (AttemptsExhausted, keygen, keypair_from_secrets, message_representative,
                           sign, sign_attempt, sign_with_transcript, verify, verify_bytes)
from latsig.keys import PublicKey, Signature

P = default_paramset()


def test_keygen_deterministic():
    a = keygen(bytes(32))
    b = keygen(bytes(32))
    assert a == b
    assert codec.encode_sk(a[1]) == codec.encode_sk(b[1])
    assert keygen(bytes(31) + b"\x01")[0] != a[0]


def test_keygen_defining_equation(keypair):
    pk, sk = keypair
    A = expand_a(sk.rho)
    assert inf_norm(sk.s1) <= P.eta and inf_norm(sk.s2) <= P.eta
    for i in range(P.k):
        row = sk.s2[i].copy()
        for j in range(P.l):
            row = (row + schoolbook_mul(A[i, j], sk.s1[j])) % Q
        assert np.array_equal(row, pk.t[i])


def test_keygen_zero_secrets():
    pk, sk = keypair_from_secrets(bytes(32), bytes(32), zero(3), zero(4))
    assert not pk.t.any()


def test_keygen_rejects_bad_seed():
    with pytest.raises(ValueError):
        keygen(b"short")


def test_roundtrip(keypair):
    pk, sk = keypair
    for i in range(30):
        msg = bytes([i]) * i
        sig = sign(sk, msg)
        assert inf_norm(sig.z) <= P.z_bound == 523416
        assert verify(pk, msg, sig)


def test_deterministic_signing(keypair):
    _, sk = keypair
    assert sign(sk, b"m") == sign(sk, b"m")


def test_randomized_signing(keypair):
    pk, sk = keypair
    a = sign(sk, b"m", randomized=True)
    b = sign(sk, b"m", randomized=True)
    assert a != b
    assert verify(pk, b"m", a) and verify(pk, b"m", b)


def test_sign_is_first_accepted_attempt(keypair):
    _, sk = keypair
    sig, transcript = sign_with_transcript(sk, b"transcript")
    for att in transcript.attempts[:-1]:
        assert att.reason in ("z-bound", "low-bound")
        assert not sign_attempt(sk, b"transcript", att.attempt).accepted
    last = transcript.attempts[-1]
    assert last.reason == "none"
    assert sig == Signature(last.z, last.c_hash)


def test_attempt_cap(keypair):
    _, sk = keypair
    msg = next(bytes([i]) for i in range(256)
               if sign_with_transcript(sk, bytes([i]))[1].count > 1)
    with pytest.raises(AttemptsExhausted):
        sign(sk, msg, max_attempts=1)


def test_accepted_attempt_invariants(keypair):
    pk, sk = keypair
    A = expand_a(pk.rho)
    seen = 0
    for i in range(40):
        att = sign_attempt(sk, b"inv", i)
        c = att.challenge.poly()
        cs2 = poly_mul(c, sk.s2)
        assert np.array_equal(att.w, matvec_mul(A, att.y))
        assert np.array_equal(att.z, (att.y + poly_mul(c, sk.s1)) % Q)
        if not att.accepted:
            continue
        seen += 1
        lhs = (matvec_mul(A, att.z) - poly_mul(c, pk.t)) % Q
        rhs = (att.w - cs2) % Q
        assert np.array_equal(lhs, rhs)
        assert np.array_equal(high_bits(att.w), high_bits(rhs))
        assert np.abs(signed_low_bits(rhs)).max() <= P.z_bound
        assert inf_norm(cs2) <= P.beta
    assert seen > 3


def test_attempt_negative():
    with pytest.raises(ValueError):
        sign_attempt(None, b"", -1)


def test_zero_secret_z_equals_y():
    pk, sk = keypair_from_secrets(bytes(range(32)), bytes(32), zero(3), zero(4))
    mu = message_representative(pk, b"zero")
    for i in range(20):
        att = sign_attempt(sk, b"zero", i)
        y = expand_mask_vec(sk.K, mu, i)
        assert np.array_equal(att.z, y)
        if inf_norm(y) <= P.z_bound:
            assert att.z_ok


def test_z_bound_rejection_rate(keypair):
    _, sk = keypair
    from latsig.scheme import _Signer
    signer = _Signer(sk, b"rate", P)
    n = 3000
    rejected = sum(not signer.attempt(i).z_ok for i in range(n))
    assert abs(rejected / n - (1 - 0.59)) < 0.035


def test_verify_rejects_message_flip(keypair):
    pk, sk = keypair
    sig = sign(sk, b"hello")
    assert not verify(pk, b"hellp", sig)
    assert not verify(pk, b"hello!", sig)


def test_verify_rejects_z_bump(keypair, rng):
    pk, sk = keypair
    sig = sign(sk, b"bump")
    for _ in range(1000):
        z = sig.z.copy()
        i, j = rng.integers(3), rng.integers(256)
        z[i, j] = (z[i, j] + 1) % Q
        assert not verify(pk, b"bump", Signature(z, sig.c_hash))


def test_verify_rejects_other_key(keypair):
    pk, sk = keypair
    other_pk, _ = keygen(bytes(32))
    assert not verify(other_pk, b"k", sign(sk, b"k"))


def test_verify_rejects_t_nudge(keypair):
    # the challenge hash binds the public key, so even a +1 in t is caught
    pk, sk = keypair
    sig = sign(sk, b"t")
    t = pk.t.copy()
    t[0, 0] = (t[0, 0] + 1) % Q
    assert not verify(PublicKey(pk.rho, t), b"t", sig)


def test_verify_total_on_garbage(keypair):
    pk, sk = keypair
    sig = sign(sk, b"g")
    bad = [
        Signature(sig.z[:2], sig.c_hash),
        Signature(sig.z, sig.c_hash[:31]),
        Signature(sig.z + Q, sig.c_hash),
        Signature(sig.z.astype(float), sig.c_hash),
        Signature(np.full((3, 256), P.z_bound + 1), sig.c_hash),
        Signature("nonsense", sig.c_hash),
    ]
    for s in bad:
        assert verify(pk, b"g", s) is False
    assert verify(PublicKey(pk.rho[:5], pk.t), b"g", sig) is False
    assert verify(PublicKey(pk.rho, pk.t[:3]), b"g", sig) is False


def test_verify_bytes(keypair):
    pk, sk = keypair
    sig = sign(sk, b"b")
    pkb, sigb = codec.encode_pk(pk), codec.encode_sig(sig)
    assert verify_bytes(pkb, b"b", sigb)
    assert not verify_bytes(pkb, b"b", sigb[:-1])
    assert not verify_bytes(pkb[:-1], b"b", sigb)
    assert not verify_bytes(b"", b"b", b"")


def test_signature_size_constant(keypair):
    _, sk = keypair
    for msg in (b"", b"x" * 10_000):
        assert len(codec.encode_sig(sign(sk, msg))) == 1954
