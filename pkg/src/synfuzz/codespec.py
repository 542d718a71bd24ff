"""Parsing and formatting of code specification strings.

Grammar (whitespace around separators is ignored):

    gf(p) | gf(p^m) | gf(p^m;modulus=c0,c1,...,cm)
    rs(n,k;GF)                      n below p^m - 1 shortens the code
    bch(n,design_t;gf(p))           n must be p^m - 1 for some m
    cI(RS) | cI+parity(RS) | cII(RS;n1,n2) | cIII(RS;n1,n2)
    concat(inner=BCH, outer=RS, layout=flat|iv(a,b)|v(a,b)|vi)
"""

from __future__ import annotations

from .concat import ConcatCode, FlatLayout, IvLayout, ViLayout, VLayout
from .errors import SpecParseError, SynfuzzError
from .expand import ExpandedCode
from .gf import ExtField, build_ext_field
from .rs import BchCode, RsCode


def _strip_call(text: str, name: str) -> str | None:
    """Return the argument string of name(...), or None if it is not one."""
    text = text.strip()
    if not text.startswith(name + "(") or not text.endswith(")"):
        return None
    inner = text[len(name) + 1 : -1]
    depth = 0
    for ch in inner:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return None
    return inner if depth == 0 else None


def _split_top(text: str, sep: str) -> list[str]:
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecParseError(f"bad {what}: {text!r}") from None


def parse_field(text: str) -> ExtField:
    args = _strip_call(text, "gf")
    if args is None:
        raise SpecParseError(f"expected gf(...), got {text!r}")
    parts = _split_top(args, ";")
    head = parts[0].strip()
    if "^" in head:
        p_txt, m_txt = head.split("^", 1)
        p, m = _int(p_txt, "prime"), _int(m_txt, "degree")
    else:
        p, m = _int(head, "prime"), 1
    modulus = None
    if len(parts) == 2:
        clause = parts[1].strip()
        if not clause.startswith("modulus="):
            raise SpecParseError(f"expected modulus=..., got {clause!r}")
        modulus = [_int(c, "modulus coefficient") for c in clause[8:].split(",")]
    elif len(parts) > 2:
        raise SpecParseError(f"too many clauses in {text!r}")
    try:
        return build_ext_field(p, m, modulus=modulus)
    except SynfuzzError:
        raise
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc


def _parse_rs(text: str) -> RsCode:
    args = _strip_call(text, "rs")
    if args is None:
        raise SpecParseError(f"expected rs(...), got {text!r}")
    parts = _split_top(args, ";")
    if len(parts) != 2:
        raise SpecParseError(f"rs takes n,k;gf(...): {text!r}")
    nk = _split_top(parts[0], ",")
    if len(nk) != 2:
        raise SpecParseError(f"rs takes two lengths: {text!r}")
    n, k = _int(nk[0], "length"), _int(nk[1], "dimension")
    field = parse_field(parts[1])
    try:
        return RsCode(field, n, k)
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc


def _parse_bch(text: str) -> BchCode:
    args = _strip_call(text, "bch")
    if args is None:
        raise SpecParseError(f"expected bch(...), got {text!r}")
    parts = _split_top(args, ";")
    if len(parts) != 2:
        raise SpecParseError(f"bch takes n,t;gf(p): {text!r}")
    nt = _split_top(parts[0], ",")
    if len(nt) != 2:
        raise SpecParseError(f"bch takes length and capability: {text!r}")
    n, design_t = _int(nt[0], "length"), _int(nt[1], "capability")
    base = parse_field(parts[1])
    if base.m != 1:
        raise SpecParseError("bch base field must be a prime gf(p)")
    p = base.p
    m, size = 1, p
    while size - 1 < n:
        m += 1
        size *= p
    if size - 1 != n:
        raise SpecParseError(f"bch length {n} is not {p}^m - 1 for any m")
    return BchCode(p, m, design_t)


def _parse_layout(text: str):
    text = text.strip()
    if text == "flat":
        return FlatLayout()
    if text == "vi":
        return ViLayout()
    for name, cls in (("iv", IvLayout), ("v", VLayout)):
        args = _strip_call(text, name)
        if args is not None:
            ab = _split_top(args, ",")
            if len(ab) != 2:
                raise SpecParseError(f"layout {name} takes (a,b): {text!r}")
            return cls(_int(ab[0], "a"), _int(ab[1], "b"))
    raise SpecParseError(f"unknown layout {text!r}")


def parse_spec(text: str):
    """Parse a construction string into a code object."""
    text = text.strip()
    args = _strip_call(text, "rs")
    if args is not None:
        return _parse_rs(text)
    args = _strip_call(text, "bch")
    if args is not None:
        return _parse_bch(text)
    for name, maker in (
        ("cI+parity", ExpandedCode.row_vector_parity),
        ("cI", ExpandedCode.row_vector),
    ):
        args = _strip_call(text, name)
        if args is not None:
            return maker(_parse_rs(args))
    for name, maker in (
        ("cII", ExpandedCode.square_array),
        ("cIII", ExpandedCode.companion_array),
    ):
        args = _strip_call(text, name)
        if args is not None:
            parts = _split_top(args, ";")
            if len(parts) != 2:
                raise SpecParseError(f"{name} takes rs(...);n1,n2: {text!r}")
            dims = _split_top(parts[1], ",")
            if len(dims) != 2:
                raise SpecParseError(f"{name} array shape takes n1,n2: {text!r}")
            try:
                return maker(_parse_rs(parts[0]), _int(dims[0], "n1"), _int(dims[1], "n2"))
            except SynfuzzError:
                raise
    args = _strip_call(text, "concat")
    if args is not None:
        inner = outer = layout = None
        for part in _split_top(args, ","):
            # layout values may themselves contain commas: rejoin key=value
            if part.startswith("inner="):
                inner = _parse_bch(part[6:])
            elif part.startswith("outer="):
                outer = _parse_rs(part[6:])
            elif part.startswith("layout="):
                layout = _parse_layout(part[7:])
            elif part:
                raise SpecParseError(f"unknown concat clause {part!r}")
        if inner is None or outer is None or layout is None:
            raise SpecParseError("concat needs inner=, outer= and layout=")
        try:
            return ConcatCode(inner, outer, layout)
        except SynfuzzError:
            raise
    raise SpecParseError(f"unrecognized code spec {text!r}")


def format_spec(code) -> str:
    """The specification string of a code object (parse round-trips)."""
    return code.spec_string()
