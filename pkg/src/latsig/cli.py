"""Command-line front end.

Exit codes: 0 success/accept, 1 reject/mismatch, 2 I/O failure,
3 malformed input.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys

from . import codec
from .bench import run_bench, z_accept_closed_form
from .kat import KatFormatError, kat_check, kat_generate, kat_write
from .scheme import keygen, sign_with_transcript, verify

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_IO = 2
EXIT_MALFORMED = 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _seed(text: str | None) -> bytes:
    if text is None:
        return os.urandom(32)
    try:
        seed = bytes.fromhex(text)
    except ValueError:
        raise _Fail(EXIT_MALFORMED, "seed is not hex") from None
    if len(seed) != 32:
        raise _Fail(EXIT_MALFORMED, "seed must be 64 hex digits")
    return seed


def _read(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def cmd_keygen(args) -> int:
    seed = _seed(args.seed)
    pk, sk = keygen(seed)
    pk_bytes, sk_bytes = codec.encode_pk(pk), codec.encode_sk(sk)
    _write(args.pk, pk_bytes)
    _write(args.sk, sk_bytes)
    print(f"public key: {len(pk_bytes)} bytes -> {args.pk}")
    print(f"secret key: {len(sk_bytes)} bytes -> {args.sk}")
    print(f"fingerprint: {hashlib.sha3_256(pk_bytes).hexdigest()[:8]}")
    return EXIT_OK


def cmd_sign(args) -> int:
    sk_bytes = _read(args.sk)
    msg = _read(args.msg)
    try:
        sk = codec.decode_sk(sk_bytes)
    except codec.DecodeError as exc:
        raise _Fail(EXIT_MALFORMED, f"malformed secret key: {exc}") from None
    sig, transcript = sign_with_transcript(sk, msg, randomized=args.randomized)
    sig_bytes = codec.encode_sig(sig)
    _write(args.out, sig_bytes)
    print(f"signature: {len(sig_bytes)} bytes -> {args.out}")
    print(f"attempts: {transcript.count}")
    return EXIT_OK


def cmd_verify(args) -> int:
    pk_bytes = _read(args.pk)
    msg = _read(args.msg)
    sig_bytes = _read(args.sig)
    try:
        pk = codec.decode_pk(pk_bytes)
        sig = codec.decode_sig(sig_bytes)
    except codec.DecodeError as exc:
        print("REJECT")
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    if verify(pk, msg, sig):
        print("ACCEPT")
        return EXIT_OK
    print("REJECT")
    return EXIT_REJECT


def cmd_kat_gen(args) -> int:
    seed = _seed(args.seed)
    records = kat_generate(seed, args.count)
    _write(args.out, kat_write(records, seed).encode())
    print(f"wrote {len(records)} records -> {args.out}")
    return EXIT_OK


def cmd_kat_check(args) -> int:
    text = _read(args.path)
    try:
        report = kat_check(text.decode("ascii"))
    except (KatFormatError, UnicodeDecodeError) as exc:
        raise _Fail(EXIT_MALFORMED, f"malformed KAT file: {exc}") from None
    print(report)
    return EXIT_OK if report else EXIT_REJECT


def cmd_bench(args) -> int:
    if args.trials < 1:
        raise _Fail(EXIT_MALFORMED, "--trials must be >= 1")
    result = run_bench(args.trials, _seed(args.seed) if args.seed else bytes(32))
    print(f"trials:            {result.trials}")
    print(f"z-bound accept:    {result.z_accept:.4f} (closed form {z_accept_closed_form():.4f})")
    print(f"low-bound accept:  {result.low_accept:.4f}")
    print(f"combined accept:   {result.combined_accept:.4f}")
    if result.trials == 1:
        print(f"attempts:          {int(result.attempts[0])}")
    else:
        print(f"mean attempts:     {result.mean_attempts:.3f}")
        print(f"attempts p50/p90/p99/max: {result.percentile(50):g}/{result.percentile(90):g}/"
              f"{result.percentile(99):g}/{int(result.attempts.max())}")
    print(f"signatures/second: {result.sigs_per_sec:.1f}")
    if args.csv:
        try:
            result.write_csv(args.csv)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot write {args.csv}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latsig", description="Module-lattice signature tool")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--seed", help="32-byte seed as hex (random if omitted)")
    p.add_argument("--pk", required=True, help="output public key (.bgpk)")
    p.add_argument("--sk", required=True, help="output secret key (.bgsk)")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("sign", help="sign a message file")
    p.add_argument("--sk", required=True)
    p.add_argument("--msg", required=True, help="message file, '-' for stdin")
    p.add_argument("--out", "--sig", dest="out", required=True, help="output signature (.bgsig)")
    p.add_argument("--randomized", action="store_true", help="mix a fresh salt into the mask seed")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("verify", help="verify a signature")
    p.add_argument("--pk", required=True)
    p.add_argument("--msg", required=True, help="message file, '-' for stdin")
    p.add_argument("--sig", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kat-gen", help="write known-answer vectors")
    p.add_argument("--seed", help="master seed as hex (random if omitted)")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--out", required=True, help="output file (.bgkat)")
    p.set_defaults(func=cmd_kat_gen)

    p = sub.add_parser("kat-check", help="regenerate and compare known-answer vectors")
    p.add_argument("path")
    p.set_defaults(func=cmd_kat_check)

    p = sub.add_parser("bench", help="measure rejection rates and signing speed")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", help="bench seed as hex")
    p.add_argument("--csv", help="also write metrics as CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which collides with the I/O code
        return EXIT_MALFORMED if exc.code == 2 else exc.code
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
