"""Authentication of noisy data from a stored (digest, syndrome) pair.

Enrollment hashes a canonical serialization of the data word and stores it
next to the word's syndrome under the chosen code; the word itself is
never stored.  Verification subtracts the syndrome of the presented word
from the stored one, syndrome-decodes the difference, adds the decoded
pattern back onto the presented word and accepts only when the digest of
the result matches the stored digest.  The hash comparison is the final
gate: a decoder miscorrection can never produce a false accept.

The difference is decoded as stored-minus-presented, so the recovered
pattern v satisfies original = presented + v.  Over a binary base the
orientation is invisible; over odd characteristics it matters and is
pinned by tests.

Template files are line-oriented text:

    sfh1
    code=<construction spec string>
    hash=<algorithm id>
    digest=<hex>
    syndrome=<hex of the canonical syndrome serialization>
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from . import codespec
from .concat import CompositeSyndrome, ConcatCode
from .errors import (
    DecodeFailure,
    ShapeMismatchError,
    TemplateFormatError,
    UnsupportedHashError,
)
from .expand import ExpandedCode, ExpandedSyndrome
from .gf import MUL_COUNTER
from .rs import RsCode, Syndrome

_HASHES = {
    "sha-256": hashlib.sha256,
    "sha-384": hashlib.sha384,
    "sha-512": hashlib.sha512,
    "sha3-256": hashlib.sha3_256,
}

_MAGIC = "sfh"
_VERSION = 1


def hash_digest(alg: str, payload: bytes) -> bytes:
    try:
        return _HASHES[alg](payload).digest()
    except KeyError:
        raise UnsupportedHashError(f"unknown hash algorithm {alg!r}") from None


def _symbol_width(order: int) -> int:
    return ((order - 1).bit_length() + 7) // 8 if order > 1 else 1


def data_alphabet(code):
    """The field the enrolled data ranges over."""
    if isinstance(code, RsCode):
        return code.field
    if isinstance(code, ExpandedCode):
        return code.rs.field.prime
    if isinstance(code, ConcatCode):
        return code.inner.field.prime if hasattr(code.inner, "field") else code.inner.prime
    raise ShapeMismatchError(f"not an enrollable code: {code!r}")


def data_shape(code) -> tuple[int, ...]:
    if isinstance(code, RsCode):
        return (code.n,)
    if isinstance(code, (ExpandedCode, ConcatCode)):
        return code.shape
    raise ShapeMismatchError(f"not an enrollable code: {code!r}")


def _check_data(code, data) -> None:
    shape = data_shape(code)
    order = data_alphabet(code).order
    if len(shape) == 1:
        ok = len(data) == shape[0] and all(
            isinstance(v, int) and 0 <= v < order for v in data
        )
    else:
        rows, cols = shape
        ok = len(data) == rows and all(
            len(row) == cols and all(isinstance(v, int) and 0 <= v < order for v in row)
            for row in data
        )
    if not ok:
        raise ShapeMismatchError(
            f"data does not match shape {shape} over an alphabet of {order}"
        )


def canonical_bytes(code, data) -> bytes:
    """Deterministic serialization hashed at enrollment: the field spec,
    the shape, then every symbol row-major as minimal big-endian bytes."""
    _check_data(code, data)
    alpha = data_alphabet(code)
    shape = data_shape(code)
    spec = alpha.canonical_spec() if hasattr(alpha, "canonical_spec") else alpha.spec_string()
    head = f"{spec}|{'x'.join(str(d) for d in shape)}|".encode("ascii")
    width = _symbol_width(alpha.order)
    if len(shape) == 1:
        body = b"".join(v.to_bytes(width, "big") for v in data)
    else:
        body = b"".join(v.to_bytes(width, "big") for row in data for v in row)
    return head + body


# ---------------------------------------------------------------------------
# syndrome plumbing per construction
# ---------------------------------------------------------------------------


def scheme_syndrome(code, data):
    _check_data(code, data)
    return code.syndrome(data)


def syndrome_diff(code, stored, presented):
    return code.syndrome_sub(stored, presented)


def scheme_decode(code, diff):
    if isinstance(code, RsCode):
        return code.decode_syndrome(diff)
    return code.decode(diff)


def apply_pattern(code, data, pattern):
    """data + pattern, componentwise in the data alphabet."""
    alpha = data_alphabet(code)
    add = alpha.add
    if len(data_shape(code)) == 1:
        return [add(a, b) for a, b in zip(data, pattern)]
    return [[add(a, b) for a, b in zip(dr, pr)] for dr, pr in zip(data, pattern)]


def syndrome_to_bytes(code, synd) -> bytes:
    if isinstance(code, RsCode):
        w = _symbol_width(code.field.order)
        return b"".join(v.to_bytes(w, "big") for v in synd.values)
    if isinstance(code, ExpandedCode):
        field = code.rs.field
        we = _symbol_width(field.order)
        wp = _symbol_width(field.p)
        out = [v.to_bytes(we, "big") for v in synd.rs_values]
        if synd.parities is not None:
            out.extend(v.to_bytes(wp, "big") for v in synd.parities)
        if synd.residuals is not None:
            for tile in synd.residuals:
                out.extend(v.to_bytes(wp, "big") for v in tile)
        return b"".join(out)
    if isinstance(code, ConcatCode):
        wp = _symbol_width(code.p)
        wo = _symbol_width(code.outer.field.order)
        out = []
        for rem in synd.inner:
            out.extend(v.to_bytes(wp, "big") for v in rem)
        out.extend(v.to_bytes(wo, "big") for v in synd.outer)
        return b"".join(out)
    raise ShapeMismatchError(f"not an enrollable code: {code!r}")


def syndrome_from_bytes(code, raw: bytes):
    def take(buf, count, width):
        need = count * width
        if len(buf) < need:
            raise TemplateFormatError("syndrome too short for this code")
        vals = tuple(
            int.from_bytes(buf[i * width : (i + 1) * width], "big") for i in range(count)
        )
        return vals, buf[need:]

    if isinstance(code, RsCode):
        vals, rest = take(raw, code.redundancy, _symbol_width(code.field.order))
        if rest:
            raise TemplateFormatError("syndrome longer than the code redundancy")
        return Syndrome(vals)
    if isinstance(code, ExpandedCode):
        field = code.rs.field
        we = _symbol_width(field.order)
        wp = _symbol_width(field.p)
        rs_vals, raw = take(raw, code.rs.redundancy, we)
        parities = residuals = None
        if code.kind == "row-vector-parity":
            parities, raw = take(raw, code.rs.n, wp)
        elif code.kind == "companion-array":
            m = field.m
            tiles = []
            for _ in range(code.rs.n):
                tile, raw = take(raw, m * (m - 1), wp)
                tiles.append(tile)
            residuals = tuple(tiles)
        if raw:
            raise TemplateFormatError("syndrome longer than the code redundancy")
        return ExpandedSyndrome(rs_vals, parities, residuals)
    if isinstance(code, ConcatCode):
        wp = _symbol_width(code.p)
        wo = _symbol_width(code.outer.field.order)
        rems = []
        for _ in range(code.N):
            rem, raw = take(raw, code.inner.redundancy, wp)
            rems.append(rem)
        outer, raw = take(raw, code.outer.redundancy, wo)
        if raw:
            raise TemplateFormatError("syndrome longer than the code redundancy")
        return CompositeSyndrome(tuple(rems), outer)
    raise ShapeMismatchError(f"not an enrollable code: {code!r}")


# ---------------------------------------------------------------------------
# templates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Template:
    """The stored representation of an enrolled word: never the word
    itself, only its digest and its syndrome."""

    code_spec: str
    hash_alg: str
    digest: bytes
    syndrome: bytes
    version: int = _VERSION

    def to_text(self) -> str:
        return (
            f"{_MAGIC}{self.version}\n"
            f"code={self.code_spec}\n"
            f"hash={self.hash_alg}\n"
            f"digest={self.digest.hex()}\n"
            f"syndrome={self.syndrome.hex()}\n"
        )

    @classmethod
    def from_text(cls, text: str) -> "Template":
        lines = text.split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        if len(lines) != 5 or not lines[0].startswith(_MAGIC):
            raise TemplateFormatError("expected 5 lines starting with the sfh magic")
        try:
            version = int(lines[0][len(_MAGIC):])
        except ValueError:
            raise TemplateFormatError(f"bad magic line {lines[0]!r}") from None
        if version != _VERSION:
            raise TemplateFormatError(f"unsupported template version {version}")
        fields = {}
        for line, key in zip(lines[1:], ("code", "hash", "digest", "syndrome")):
            if not line.startswith(key + "="):
                raise TemplateFormatError(f"expected {key}=..., got {line!r}")
            fields[key] = line[len(key) + 1:]
        try:
            digest = bytes.fromhex(fields["digest"])
            syndrome = bytes.fromhex(fields["syndrome"])
        except ValueError:
            raise TemplateFormatError("digest/syndrome must be hex") from None
        if fields["hash"] not in _HASHES:
            raise UnsupportedHashError(f"unknown hash algorithm {fields['hash']!r}")
        if len(digest) != _HASHES[fields["hash"]]().digest_size:
            raise TemplateFormatError("digest length does not match the hash")
        return cls(fields["code"], fields["hash"], digest, syndrome, version)


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    recovered: object | None
    reason: str | None
    decode_mults: int


def enroll(data, code, hash_alg: str = "sha-256") -> Template:
    """Build the stored template for a data word under a construction."""
    if hash_alg not in _HASHES:
        raise UnsupportedHashError(f"unknown hash algorithm {hash_alg!r}")
    digest = hash_digest(hash_alg, canonical_bytes(code, data))
    synd = scheme_syndrome(code, data)
    return Template(
        code_spec=codespec.format_spec(code),
        hash_alg=hash_alg,
        digest=digest,
        syndrome=syndrome_to_bytes(code, synd),
    )


def verify(data, template: Template, code=None) -> VerifyResult:
    """Authenticate a presented word against a template.

    Accepts only when the decoded difference leads back to a word whose
    digest matches the template; otherwise reports DecodeFailure or
    HashMismatch.
    """
    if code is None:
        code = codespec.parse_spec(template.code_spec)
    stored = syndrome_from_bytes(code, template.syndrome)
    presented = scheme_syndrome(code, data)
    diff = syndrome_diff(code, stored, presented)
    before = MUL_COUNTER.count
    try:
        pattern = scheme_decode(code, diff)
    except DecodeFailure:
        return VerifyResult(False, None, "DecodeFailure", MUL_COUNTER.count - before)
    mults = MUL_COUNTER.count - before
    candidate = apply_pattern(code, data, pattern)
    if hash_digest(template.hash_alg, canonical_bytes(code, candidate)) == template.digest:
        return VerifyResult(True, candidate, None, mults)
    return VerifyResult(False, None, "HashMismatch", mults)
