"""Known-answer test files (``.bgkat``).

A KAT file is plain text: ``name=value`` lines grouped into blocks separated
by blank lines.  The first block carries the master seed; every following
block is one record.  Byte values are lowercase hex, ``count`` and
``attempts`` are decimal.  A record is fully determined by the master seed
and its index, which is what :func:`kat_check` relies on.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import codec
from .params import ParamSet, default_paramset
from .scheme import sign_with_transcript, keygen

FIELDS = ("count", "seed", "message", "pk_hash", "sk_hash", "signature", "attempts")


class KatFormatError(ValueError):
    pass


@dataclass(frozen=True)
class KatRecord:
    count: int
    seed: bytes
    message: bytes
    pk_hash: bytes
    sk_hash: bytes
    signature: bytes
    attempts: int


@dataclass(frozen=True)
class KatReport:
    ok: bool
    record: int | None = None
    field: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "KAT OK"
        return f"KAT mismatch in record {self.record}, field {self.field}: {self.detail}"


def record_seed(master_seed: bytes, count: int) -> bytes:
    return hashlib.shake_256(b"kat-seed" + master_seed + count.to_bytes(4, "little")).digest(32)


def record_message(seed: bytes, count: int) -> bytes:
    return hashlib.shake_256(b"kat-msg" + seed).digest(1 + 33 * (count % 10))


def make_record(count: int, seed: bytes, message: bytes, params: ParamSet | None = None) -> KatRecord:
    p = params or default_paramset()
    pk, sk = keygen(seed, p)
    sig, transcript = sign_with_transcript(sk, message, p)
    return KatRecord(
        count=count,
        seed=seed,
        message=message,
        pk_hash=hashlib.sha3_256(codec.encode_pk(pk, p)).digest(),
        sk_hash=hashlib.sha3_256(codec.encode_sk(sk, p)).digest(),
        signature=codec.encode_sig(sig, p),
        attempts=transcript.count,
    )


def kat_generate(master_seed: bytes, count: int, params: ParamSet | None = None) -> list[KatRecord]:
    records = []
    for i in range(count):
        seed = record_seed(master_seed, i)
        records.append(make_record(i, seed, record_message(seed, i), params))
    return records


def _fmt(value) -> str:
    return str(value) if isinstance(value, int) else value.hex()


def kat_write(records, master_seed: bytes) -> str:
    blocks = [f"master_seed={master_seed.hex()}\n"]
    for rec in records:
        blocks.append("".join(f"{name}={_fmt(getattr(rec, name))}\n" for name in FIELDS))
    return "\n".join(blocks)


def kat_parse(text: str) -> tuple[bytes, list[dict[str, str]]]:
    blocks, current = [], {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if current:
                blocks.append(current)
                current = {}
            continue
        name, sep, value = line.partition("=")
        if not sep:
            raise KatFormatError(f"line {lineno}: expected name=value")
        current[name.strip()] = value.strip()
    if current:
        blocks.append(current)
    if not blocks or set(blocks[0]) != {"master_seed"}:
        raise KatFormatError("first block must hold only master_seed")
    try:
        master = bytes.fromhex(blocks[0]["master_seed"])
    except ValueError:
        raise KatFormatError("master_seed is not hex") from None
    for i, block in enumerate(blocks[1:]):
        if tuple(block) != FIELDS:
            raise KatFormatError(f"record {i}: fields must be {', '.join(FIELDS)} in order")
    return master, blocks[1:]


def kat_check(text: str, params: ParamSet | None = None) -> KatReport:
    """Regenerate every record and compare it field by field with the text.

    Reports the first mismatch.  Malformed text raises KatFormatError.
    """
    master, blocks = kat_parse(text)
    if not blocks:
        return KatReport(False, None, None, "no records")
    for i, block in enumerate(blocks):
        seed = record_seed(master, i)
        expected = make_record(i, seed, record_message(seed, i), params)
        for name in FIELDS:
            want = _fmt(getattr(expected, name))
            if block[name].lower() != want:
                return KatReport(False, i, name, f"expected {want[:32]}..., found {block[name][:32]}...")
    return KatReport(True)
