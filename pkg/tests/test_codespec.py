import pytest

from synfuzz.codespec import format_spec, parse_field, parse_spec
from synfuzz.concat import ConcatCode, FlatLayout, IvLayout, ViLayout, VLayout
from synfuzz.errors import ReducibleModulusError, SpecParseError
from synfuzz.expand import ExpandedCode
from synfuzz.rs import BchCode, RsCode


def test_parse_field_forms():
    assert parse_field("gf(2)").order == 2
    assert parse_field("gf(2^3)").order == 8
    f = parse_field("gf(2^8;modulus=1,0,1,1,1,0,0,0,1)")
    assert f.order == 256 and f.modulus_is_default


def test_parse_field_errors():
    with pytest.raises(SpecParseError):
        parse_field("gf2^3")
    with pytest.raises(SpecParseError):
        parse_field("gf(2^3;mod=1,1,0,1)")
    with pytest.raises(ReducibleModulusError):
        parse_field("gf(2^3;modulus=1,0,0,1)")


def test_parse_rs():
    code = parse_spec("rs(7,3;gf(2^3))")
    assert isinstance(code, RsCode)
    assert (code.n, code.k) == (7, 3)
    shortened = parse_spec("rs(30,12;gf(2^7))")
    assert shortened.is_shortened


def test_parse_bch():
    code = parse_spec("bch(15,2;gf(2))")
    assert isinstance(code, BchCode)
    assert (code.n, code.k, code.t) == (15, 7, 2)
    tiny = parse_spec("bch(4,1;gf(5))")
    assert (tiny.n, tiny.k) == (4, 2)
    with pytest.raises(SpecParseError):
        parse_spec("bch(14,2;gf(2))")
    with pytest.raises(SpecParseError):
        parse_spec("bch(15,2;gf(2^4))")


def test_parse_expansions():
    c1 = parse_spec("cI(rs(7,3;gf(2^3)))")
    assert isinstance(c1, ExpandedCode) and c1.kind == "row-vector"
    c1p = parse_spec("cI+parity(rs(7,3;gf(2^3)))")
    assert c1p.kind == "row-vector-parity"
    c2 = parse_spec("cII(rs(15,7;gf(2^4));3,5)")
    assert c2.kind == "square-array" and c2.shape == (6, 10)
    c3 = parse_spec("cIII(rs(15,5;gf(2^4));3,5)")
    assert c3.kind == "companion-array" and c3.shape == (12, 20)


def test_parse_concat_layouts():
    flat = parse_spec("concat(inner=bch(15,2;gf(2)), outer=rs(127,109;gf(2^7)), layout=flat)")
    assert isinstance(flat, ConcatCode) and flat.layout == FlatLayout()
    iv = parse_spec("concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)), layout=iv(7,5))")
    assert iv.layout == IvLayout(7, 5)
    v = parse_spec("concat(inner=bch(15,2;gf(2)), outer=rs(16,8;gf(2^7)), layout=v(4,5))")
    assert v.layout == VLayout(4, 5)
    vi = parse_spec("concat(inner=bch(4,1;gf(5)), outer=rs(8,4;gf(5^2)), layout=vi)")
    assert vi.layout == ViLayout()


def test_parse_errors():
    with pytest.raises(SpecParseError):
        parse_spec("huh(1,2)")
    with pytest.raises(SpecParseError):
        parse_spec("rs(7,3)")
    with pytest.raises(SpecParseError):
        parse_spec("concat(inner=bch(15,2;gf(2)), layout=flat)")
    with pytest.raises(SpecParseError):
        parse_spec("concat(inner=bch(15,2;gf(2)), outer=rs(16,8;gf(2^7)), layout=diag)")


def test_format_parse_round_trip():
    specs = [
        "rs(7,3;gf(2^3))",
        "rs(30,12;gf(2^7))",
        "bch(15,2;gf(2))",
        "cI(rs(15,7;gf(2^4)))",
        "cI+parity(rs(15,7;gf(2^4)))",
        "cII(rs(15,7;gf(2^4));3,5)",
        "cIII(rs(15,5;gf(2^4));3,5)",
        "concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)), layout=iv(7,5))",
        "concat(inner=bch(4,1;gf(5)), outer=rs(8,4;gf(5^2)), layout=vi)",
    ]
    for spec in specs:
        code = parse_spec(spec)
        assert format_spec(code) == spec
        # parsing the formatted form gives an equivalent code
        again = parse_spec(format_spec(code))
        assert format_spec(again) == spec
