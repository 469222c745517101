"""Module-lattice Fiat-Shamir-with-aborts signatures over Z_q[X]/(X^256 + 1).

Public keys carry t = A*s1 + s2 in full (no compression); signatures are the
response z together with the 32-byte challenge digest.
"""

from .codec import DecodeError, decode_pk, decode_sig, decode_sk, encode_pk, encode_sig, encode_sk
from .keys import PublicKey, SecretKey, Signature
from .params import ParamError, ParamSet, default_paramset, validate
from .scheme import AttemptsExhausted, keygen, sign, sign_with_transcript, verify, verify_bytes

__version__ = "0.1.0"

__all__ = [
    "AttemptsExhausted", "DecodeError", "ParamError", "ParamSet", "PublicKey", "SecretKey",
    "Signature", "decode_pk", "decode_sig", "decode_sk", "default_paramset", "encode_pk",
    "encode_sig", "encode_sk", "keygen", "sign", "sign_with_transcript", "validate", "verify",
    "verify_bytes",
]
