import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synfuzz.channel import Rng, gen_burst_1d, gen_burst_2d
from synfuzz.codespec import parse_spec
from synfuzz.concat import ConcatCode, FlatLayout
from synfuzz.errors import (
    ShapeMismatchError,
    TemplateFormatError,
    UnsupportedHashError,
)
from synfuzz.expand import ExpandedCode
from synfuzz.fuzzy import (
    Template,
    canonical_bytes,
    enroll,
    hash_digest,
    syndrome_from_bytes,
    syndrome_to_bytes,
    verify,
)
from synfuzz.gf import build_ext_field
from synfuzz.rs import BchCode, RsCode

SHA256_EMPTY = "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"


@pytest.fixture(scope="module")
def c1():
    return ExpandedCode.row_vector(RsCode(build_ext_field(2, 4), 15, 7))


def test_sha256_empty_vector():
    assert hash_digest("sha-256", b"").hex() == SHA256_EMPTY


def test_unsupported_hash():
    with pytest.raises(UnsupportedHashError):
        hash_digest("crc32", b"")
    with pytest.raises(UnsupportedHashError):
        enroll([0] * 21, ExpandedCode.row_vector(RsCode(build_ext_field(2, 3), 7, 3)),
               hash_alg="md5-ish")


def test_enroll_zero_word(c1):
    t = enroll([0] * 60, c1)
    assert set(t.syndrome) == {0}
    assert t.digest == hash_digest("sha-256", canonical_bytes(c1, [0] * 60))


def test_enroll_is_deterministic(c1):
    rng = random.Random(1)
    x = [rng.randrange(2) for _ in range(60)]
    assert enroll(x, c1).to_text() == enroll(x, c1).to_text()


def test_enroll_shape_check(c1):
    with pytest.raises(ShapeMismatchError):
        enroll([0] * 59, c1)
    with pytest.raises(ShapeMismatchError):
        enroll([0] * 59 + [2], c1)


def test_template_round_trip(c1):
    rng = random.Random(2)
    x = [rng.randrange(2) for _ in range(60)]
    t = enroll(x, c1)
    text = t.to_text()
    again = Template.from_text(text)
    assert again == t
    assert again.to_text() == text


def test_template_rejects_garbage():
    with pytest.raises(TemplateFormatError):
        Template.from_text("sfh1\ncode=x\n")
    with pytest.raises(TemplateFormatError):
        Template.from_text("nope\ncode=a\nhash=sha-256\ndigest=00\nsyndrome=00\n")
    t = "sfh1\ncode=cI(rs(7,3;gf(2^3)))\nhash=sha-256\ndigest=zz\nsyndrome=00\n"
    with pytest.raises(TemplateFormatError):
        Template.from_text(t)


def test_syndrome_bytes_round_trip_all_constructions():
    rng = Rng(3)
    rs15 = RsCode(build_ext_field(2, 4), 15, 7)
    codes = [
        RsCode(build_ext_field(2, 3), 7, 3),
        ExpandedCode.row_vector(rs15),
        ExpandedCode.row_vector_parity(rs15),
        ExpandedCode.square_array(rs15, 3, 5),
        ExpandedCode.companion_array(RsCode(build_ext_field(2, 4), 15, 5), 3, 5),
        ConcatCode(BchCode(2, 3, 1), RsCode(build_ext_field(2, 4), 15, 11), FlatLayout()),
    ]
    for code in codes:
        shape = code.shape if not isinstance(code, RsCode) else (code.n,)
        order = 8 if isinstance(code, RsCode) else 2
        if len(shape) == 1:
            data = [rng.below(order) for _ in range(shape[0])]
        else:
            data = [[rng.below(order) for _ in range(shape[1])] for _ in range(shape[0])]
        synd = code.syndrome(data)
        raw = syndrome_to_bytes(code, synd)
        assert syndrome_from_bytes(code, raw) == synd
        with pytest.raises(TemplateFormatError):
            syndrome_from_bytes(code, raw + b"\x00")
        with pytest.raises(TemplateFormatError):
            syndrome_from_bytes(code, raw[:-1])


def test_syndrome_length_equals_redundancy_in_symbols():
    rs15 = RsCode(build_ext_field(2, 4), 15, 5)
    comp = ExpandedCode.companion_array(rs15, 3, 5)
    t = enroll(comp.zero_word(), comp)
    # base symbols are one byte each here; ext symbols one byte as well
    expected = rs15.redundancy + 15 * 4 * 3  # ext values + residual entries
    assert len(t.syndrome) == expected
    assert comp.syndrome_symbol_count() == comp.base_length - comp.base_dimension


def test_verify_identical_word_accepts(c1):
    rng = random.Random(4)
    x = [rng.randrange(2) for _ in range(60)]
    t = enroll(x, c1)
    res = verify(x, t)
    assert res.accepted and res.recovered == x and res.reason is None


def test_verify_within_capability_accepts(c1):
    rng = Rng(5)
    random_words = random.Random(6)
    cap = c1.capability(1, "1d")
    for _ in range(200):
        x = [random_words.randrange(2) for _ in range(60)]
        t = enroll(x, c1)
        length = 1 + rng.below(cap)
        pat = gen_burst_1d(rng, c1.rs.field.prime, 60, length, rng.below(60 - length + 1))
        y = pat.apply_to(x)
        res = verify(y, t)
        assert res.accepted and res.recovered == x


def test_verify_far_word_rejects_and_never_lies(c1):
    rng = random.Random(7)
    for _ in range(200):
        x = [rng.randrange(2) for _ in range(60)]
        t = enroll(x, c1)
        y = [rng.randrange(2) for _ in range(60)]  # unrelated word
        res = verify(y, t)
        if res.accepted:
            assert res.recovered == x  # only a hash collision could break this
        else:
            assert res.reason in ("DecodeFailure", "HashMismatch")
            assert res.recovered is None


def test_verify_against_template_from_text(c1):
    rng = random.Random(8)
    x = [rng.randrange(2) for _ in range(60)]
    t = Template.from_text(enroll(x, c1).to_text())
    code = parse_spec(t.code_spec)
    assert verify(x, t, code=code).accepted


def test_plain_rs_enrollment_over_f9():
    """Odd characteristic pins the sign convention: recovered = presented + v."""
    code = RsCode(build_ext_field(3, 2), 8, 4)
    rng = random.Random(9)
    for _ in range(100):
        x = [rng.randrange(9) for _ in range(8)]
        t = enroll(x, code)
        err = [0] * 8
        for pos in rng.sample(range(8), rng.randint(1, 2)):
            err[pos] = rng.randrange(1, 9)
        y = [code.field.add(a, b) for a, b in zip(x, err)]
        res = verify(y, t)
        assert res.accepted and res.recovered == x


def test_two_dimensional_enrollment():
    code = ExpandedCode.square_array(RsCode(build_ext_field(2, 4), 15, 7), 3, 5)
    rng = Rng(10)
    words = random.Random(11)
    side = code.capability(1, "square")
    for _ in range(60):
        x = [[words.randrange(2) for _ in range(10)] for _ in range(6)]
        t = enroll(x, code)
        pos = (rng.below(6 - side + 1), rng.below(10 - side + 1))
        pat = gen_burst_2d(rng, code.rs.field.prime, (6, 10), side, side, pos)
        res = verify(pat.apply_to(x), t)
        assert res.accepted and res.recovered == x


def test_companion_enrollment_recovers_off_algebra_noise():
    """Companion-layout noise usually leaves the matrix algebra; the stored
    residual part of the syndrome must bring back the exact original."""
    code = ExpandedCode.companion_array(RsCode(build_ext_field(2, 4), 15, 5), 3, 5)
    rng = Rng(12)
    words = random.Random(13)
    side = code.capability(1, "square")
    for _ in range(60):
        x = [[words.randrange(2) for _ in range(20)] for _ in range(12)]
        t = enroll(x, code)
        pos = (rng.below(12 - side + 1), rng.below(20 - side + 1))
        pat = gen_burst_2d(rng, code.rs.field.prime, (12, 20), side, side, pos)
        res = verify(pat.apply_to(x), t)
        assert res.accepted and res.recovered == x


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=21, max_size=21))
def test_canonical_bytes_start_with_field_and_shape(bits):
    code = ExpandedCode.row_vector(RsCode(build_ext_field(2, 3), 7, 3))
    raw = canonical_bytes(code, bits)
    assert raw.startswith(b"gf(2)|21|")
    assert len(raw) == len(b"gf(2)|21|") + 21
