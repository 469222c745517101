"""
Signing and verifying a message
===============================

Generate a key pair from a fixed seed, sign a message, check the signature,
and see what the encoded objects look like on disk.
"""

import hashlib

from latsig import codec, keygen, sign_with_transcript, verify

seed = bytes(32)
pk, sk = keygen(seed)

message = b"the quick brown fox"
sig, transcript = sign_with_transcript(sk, message)

print(f"signing took {transcript.count} attempt(s)")
for att in transcript.attempts:
    outcome = "accepted" if att.accepted else f"rejected by {att.reason}"
    print(f"  attempt {att.attempt}: {outcome}")

print("verify(original)  ->", verify(pk, message, sig))
print("verify(tampered)  ->", verify(pk, message + b"!", sig))

###############################################################################
# Encoded sizes are fixed by the packing widths: 23 bits per public
# coefficient, 4 bits per secret coefficient, 20 bits per signature
# coefficient.

pk_bytes = codec.encode_pk(pk)
sk_bytes = codec.encode_sk(sk)
sig_bytes = codec.encode_sig(sig)
print(f"public key {len(pk_bytes)} B, secret key {len(sk_bytes)} B, signature {len(sig_bytes)} B")
print("pk fingerprint", hashlib.sha3_256(pk_bytes).hexdigest()[:8])
