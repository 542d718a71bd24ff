"""Concatenated codes with identical inner codes and interleaved layouts.

An outer Reed-Solomon code over F_{p^k} feeds N inner codewords of a
[n, k] code over F_p (the outer field's degree matches the inner
dimension, so outer symbols re-encode directly).  Three array layouts are
provided on top of the flat blockwise word:

* ``iv``  - block interleaving on divisors b | N, a | n: every contiguous
  N/b x b window holds each inner code at most once, so whole windows can
  burn without exceeding any inner budget.
* ``v``   - no interleaving: each inner codeword fills one contiguous
  n/b x b tile, and a burst covering few tiles costs few outer symbols.
* ``vi``  - diagonal interleaving on an n x N array: thin 1 x n or n x 1
  bursts touch each inner code at most once, and a full diagonal wipes
  exactly one inner codeword.

The composite syndrome stores each block's remainder mod the inner
generator (n-k base symbols) plus the outer syndrome of the blocks'
systematic parts; its symbol count equals the concatenated redundancy
N*n - K*k and it vanishes exactly on codewords.  Decoding runs the inner
decoders first, corrects the surviving outer-symbol estimates with the
outer decoder, then rebuilds the exact base-field pattern from the stored
remainders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DecodeFailure,
    IndexOutOfRangeError,
    LengthMismatchError,
    QueryUnsupportedError,
    ShapeMismatchError,
    TooManyErasuresError,
)
from .gf import PrimeField
from .rs import RsCode, Syndrome


class TrivialCode:
    """The identity code: n = k, no redundancy, no correction."""

    def __init__(self, p: int, n: int):
        self.prime = PrimeField(p)
        self.p = p
        self.n = n
        self.k = n
        self.t = 0
        self.redundancy = 0
        self.generator = (1,)

    def encode(self, message) -> list[int]:
        if len(message) != self.k:
            raise LengthMismatchError(f"expected {self.k} symbols")
        return list(message)

    def remainder(self, word) -> tuple[int, ...]:
        if len(word) != self.n:
            raise LengthMismatchError(f"expected {self.n} symbols")
        return ()

    def decode_remainder(self, remainder, erasures=()) -> list[int]:
        return [0] * self.n

    @property
    def systematic_slice(self) -> slice:
        return slice(0, self.n)

    def spec_string(self) -> str:
        return f"id({self.n};gf({self.p}))"


@dataclass(frozen=True)
class FlatLayout:
    name = "flat"

    def spec_string(self) -> str:
        return "flat"


@dataclass(frozen=True)
class IvLayout:
    a: int
    b: int
    name = "iv"

    def spec_string(self) -> str:
        return f"iv({self.a},{self.b})"


@dataclass(frozen=True)
class VLayout:
    a: int
    b: int
    name = "v"

    def spec_string(self) -> str:
        return f"v({self.a},{self.b})"


@dataclass(frozen=True)
class ViLayout:
    name = "vi"

    def spec_string(self) -> str:
        return "vi"


def iv_cell(N: int, n: int, a: int, b: int, i: int, p: int) -> tuple[int, int]:
    """Cell of inner code i (1..N), position p (1..n) in the iv array.

    Codes advance along rows in runs of b; positions advance b-wide column
    groups within a row band and jump bands every n/a positions."""
    r, j = divmod(i - 1, b)
    w, cb = divmod(p - 1, n // a)
    return w * (N // b) + r, cb * b + j


def v_cell(N: int, n: int, a: int, b: int, i: int, p: int) -> tuple[int, int]:
    """Cell of inner code i, position p in the v array: code i owns the
    contiguous (n/b) x b tile at block position ((i-1) div a, (i-1) mod a)."""
    w, g = divmod(i - 1, a)
    r, j = divmod(p - 1, b)
    return w * (n // b) + r, g * b + j


def vi_cell(N: int, n: int, i: int, p: int) -> tuple[int, int]:
    """Cell of inner code i, position p in the diagonal array."""
    return p - 1, (i - 1 + p - 1) % N


@dataclass(frozen=True)
class CompositeSyndrome:
    """Per-block inner remainders plus the outer syndrome of the
    systematic parts."""

    inner: tuple[tuple[int, ...], ...]
    outer: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.outer) and not any(any(s) for s in self.inner)


@dataclass(frozen=True)
class DecodeInfo:
    """Diagnostics from a two-step decode."""

    inner_failed: tuple[int, ...]
    outer_corrected: tuple[int, ...]

    @property
    def outer_error_count(self) -> int:
        return len(set(self.inner_failed) | set(self.outer_corrected))


class ConcatCode:
    """Inner/outer concatenated code with one of the four layouts."""

    def __init__(self, inner, outer: RsCode, layout=FlatLayout()):
        if inner.p != outer.field.p:
            raise ShapeMismatchError("inner and outer base primes differ")
        if outer.field.m != inner.k:
            raise ShapeMismatchError(
                f"outer extension degree {outer.field.m} must equal inner dimension {inner.k}"
            )
        self.inner = inner
        self.outer = outer
        self.layout = layout
        self.p = inner.p
        N, n = outer.n, inner.n
        self.N, self.n_in = N, n
        self.base_length = N * n
        self.base_dimension = outer.k * inner.k
        if isinstance(layout, IvLayout):
            if N % layout.b or n % layout.a:
                raise ShapeMismatchError("iv layout needs b | N and a | n")
            self.shape = (N * layout.a // layout.b, n * layout.b // layout.a)
        elif isinstance(layout, VLayout):
            if N % layout.a or n % layout.b:
                raise ShapeMismatchError("v layout needs a | N and b | n")
            self.shape = (N * n // (layout.a * layout.b), layout.a * layout.b)
        elif isinstance(layout, ViLayout):
            if N < n:
                raise ShapeMismatchError("vi layout needs N >= n")
            self.shape = (n, N)
        elif isinstance(layout, FlatLayout):
            self.shape = (N * n,)
        else:
            raise ShapeMismatchError(f"unknown layout {layout!r}")
        self._index_map = self._build_index_map()

    # ------------------------------------------------------------------
    # layout plumbing
    # ------------------------------------------------------------------

    def layout_index(self, i: int, p: int) -> tuple[int, int]:
        """Array cell of inner code i (1-based), position p (1-based)."""
        if isinstance(self.layout, FlatLayout):
            raise ValueError("flat layout has no two-dimensional indexing")
        if not (1 <= i <= self.N and 1 <= p <= self.n_in):
            raise IndexOutOfRangeError(f"(i={i}, p={p}) outside 1..{self.N} x 1..{self.n_in}")
        lay = self.layout
        if isinstance(lay, IvLayout):
            return iv_cell(self.N, self.n_in, lay.a, lay.b, i, p)
        if isinstance(lay, VLayout):
            return v_cell(self.N, self.n_in, lay.a, lay.b, i, p)
        return vi_cell(self.N, self.n_in, i, p)

    def _build_index_map(self):
        """Flat cell offset for each (block, position), or None for flat."""
        if isinstance(self.layout, FlatLayout):
            return None
        cols = self.shape[1]
        out = []
        for i in range(1, self.N + 1):
            row = []
            for p in range(1, self.n_in + 1):
                r, c = self.layout_index(i, p)
                row.append(r * cols + c)
            out.append(row)
        return out

    def zero_word(self):
        if len(self.shape) == 1:
            return [0] * self.base_length
        return [[0] * self.shape[1] for _ in range(self.shape[0])]

    def _check_shape(self, word) -> None:
        if len(self.shape) == 1:
            if len(word) != self.base_length or isinstance(word[0], list):
                raise ShapeMismatchError(f"expected a vector of length {self.base_length}")
        else:
            rows, cols = self.shape
            if len(word) != rows or any(len(r) != cols for r in word):
                raise ShapeMismatchError(f"expected a {rows}x{cols} array")

    def _blocks(self, word) -> list[list[int]]:
        self._check_shape(word)
        n = self.n_in
        if self._index_map is None:
            return [word[i * n : (i + 1) * n] for i in range(self.N)]
        flat = [v for row in word for v in row]
        return [[flat[off] for off in self._index_map[i]] for i in range(self.N)]

    def _place_blocks(self, blocks):
        n = self.n_in
        if self._index_map is None:
            out = []
            for blk in blocks:
                out.extend(blk)
            return out
        rows, cols = self.shape
        flat = [0] * (rows * cols)
        for i, blk in enumerate(blocks):
            offs = self._index_map[i]
            for pos in range(n):
                flat[offs[pos]] = blk[pos]
        return [flat[r * cols : (r + 1) * cols] for r in range(rows)]

    # ------------------------------------------------------------------
    # encode / syndrome / decode
    # ------------------------------------------------------------------

    def encode(self, message) -> list:
        """Outer-encode, expand each outer symbol, inner-encode, lay out."""
        outer_word = self.outer.encode(message)
        ext = self.outer.field
        blocks = [
            self.inner.encode(ext.to_base_vector(sym)) for sym in outer_word
        ]
        return self._place_blocks(blocks)

    def _systematic_value(self, block) -> int:
        return self.outer.field.from_base_vector(block[self.inner.systematic_slice])

    def syndrome(self, word) -> CompositeSyndrome:
        blocks = self._blocks(word)
        inner_rems = tuple(self.inner.remainder(blk) for blk in blocks)
        msg = [self._systematic_value(blk) for blk in blocks]
        outer_synd = self.outer.syndrome(msg)
        return CompositeSyndrome(inner_rems, outer_synd.values)

    def syndrome_sub(self, a: CompositeSyndrome, b: CompositeSyndrome) -> CompositeSyndrome:
        p = self.p
        ext = self.outer.field
        inner = tuple(
            tuple((x - y) % p for x, y in zip(ra, rb)) for ra, rb in zip(a.inner, b.inner)
        )
        outer = tuple(ext.sub(x, y) for x, y in zip(a.outer, b.outer))
        return CompositeSyndrome(inner, outer)

    def decode(self, synd: CompositeSyndrome, erasure_mode: bool = False,
               with_info: bool = False):
        """Two-step decode of a composite syndrome.

        Inner blocks are decoded from their remainders first; blocks whose
        inner decode fails are flagged (outer erasures in erasure mode,
        plain outer errors otherwise).  The outer decoder then fixes the
        block-message estimates, and each block's exact pattern is rebuilt
        from its corrected message and stored remainder.  The result must
        reproduce the input syndrome or DecodeFailure is raised.
        """
        if len(synd.inner) != self.N or len(synd.outer) != self.outer.redundancy:
            raise ShapeMismatchError("composite syndrome has the wrong shape")
        ext = self.outer.field
        est = [0] * self.N
        flagged = []
        for i, rem in enumerate(synd.inner):
            if not any(rem):
                continue
            try:
                blk_err = self.inner.decode_remainder(rem)
            except DecodeFailure:
                flagged.append(i)
                continue
            est[i] = self._systematic_value(blk_err)
        est_synd = self.outer.syndrome(est)
        resid = self.outer.syndrome_sub(Syndrome(synd.outer), est_synd)
        try:
            delta = self.outer.decode_syndrome(
                resid, erasures=flagged if erasure_mode else ()
            )
        except TooManyErasuresError as exc:
            raise DecodeFailure(str(exc)) from exc
        msg_err = [ext.add(e, d) for e, d in zip(est, delta)]

        blocks = []
        r = self.inner.redundancy
        for i in range(self.N):
            rem = synd.inner[i]
            me = msg_err[i]
            if me == 0 and not any(rem):
                blocks.append([0] * self.n_in)
                continue
            blk = self.inner.encode(ext.to_base_vector(me))
            for j in range(r):
                if rem[j]:
                    blk[j] = (blk[j] + rem[j]) % self.p
            blocks.append(blk)
        pattern = self._place_blocks(blocks)
        if self.syndrome(pattern) != synd:
            raise DecodeFailure("reconstructed pattern does not reproduce the syndrome")
        if not with_info:
            return pattern
        info = DecodeInfo(
            inner_failed=tuple(flagged),
            outer_corrected=tuple(i for i, d in enumerate(delta) if d),
        )
        return pattern, info

    # ------------------------------------------------------------------
    # capability bounds
    # ------------------------------------------------------------------

    @property
    def outer_t(self) -> int:
        return self.outer.t

    def capability(self, query: str):
        """Guaranteed figures per layout; QueryUnsupportedError otherwise.

        * flat: ``"single_burst"`` - longest guaranteed 1D burst,
          n*(s-1) + 2t.
        * iv: ``"bursts"`` - (count, (rows, cols)) of window bursts;
          ``"random_errors"`` - extra scattered errors besides.
        * v: ``"burst_rectangles"`` - maximal guaranteed rectangles over
          factor pairs s1*s2 <= s; ``"off_burst_tile_errors"`` - per-tile
          budget away from the burst.
        * vi: ``"thin_bursts"`` - (count, ((1, n), (n, 1)));
          ``"diagonal_bursts"`` - diagonals absorbable as outer errors.
        """
        lay = self.layout
        s = self.outer_t
        t = self.inner.t
        n, N = self.n_in, self.N
        if isinstance(lay, FlatLayout):
            if query == "single_burst":
                return n * (s - 1) + 2 * t
        elif isinstance(lay, IvLayout):
            if query == "bursts":
                return t, (N // lay.b, lay.b)
            if query == "random_errors":
                return s
        elif isinstance(lay, VLayout):
            if query == "burst_rectangles":
                return self._v_rectangles()
            if query == "off_burst_tile_errors":
                return t
        elif isinstance(lay, ViLayout):
            if query == "thin_bursts":
                return t, ((1, n), (n, 1))
            if query == "diagonal_bursts":
                return s
        raise QueryUnsupportedError(f"query {query!r} does not apply to {lay.spec_string()}")

    def _v_rectangles(self):
        """Maximal guaranteed burst rectangles ((rows, cols) per maximal
        factor pair (s1, s2) with s1*s2 <= s)."""
        s = self.outer_t
        lay = self.layout
        tile_r = self.n_in // lay.b
        pairs = [(s1, s // s1) for s1 in range(1, s + 1)]
        maximal = []
        for s1, s2 in pairs:
            if any(o1 >= s1 and o2 >= s2 and (o1, o2) != (s1, s2) for o1, o2 in pairs):
                continue
            maximal.append((s1, s2))
        return tuple(
        ((s1 - 1) * tile_r + 1, (s2 - 1) * lay.b + 1) for s1, s2 in maximal
        )

    def syndrome_symbol_count(self) -> int:
        """Base symbols in the serialized composite syndrome: exactly the
        concatenated redundancy N*n - K*k."""
        return self.N * self.inner.redundancy + self.outer.redundancy * self.inner.k

    @property
    def rate(self) -> float:
        return self.base_dimension / self.base_length

    def spec_string(self) -> str:
        return (
            f"concat(inner={self.inner.spec_string()}, "
            f"outer={self.outer.spec_string()}, layout={self.layout.spec_string()})"
        )

    def __repr__(self):
        return f"ConcatCode({self.spec_string()})"

    def __eq__(self, other):
        return (
            isinstance(other, ConcatCode)
            and self.layout == other.layout
            and self.outer == other.outer
            and type(self.inner) is type(other.inner)
            and self.inner.spec_string() == other.inner.spec_string()
        )

    def __hash__(self):
        return hash((self.layout, self.outer, self.inner.spec_string()))
