"""Base-field views of a Reed-Solomon code for burst error correction.

Four layouts are provided:

* ``row-vector``      - each extension symbol becomes its m-digit
  coefficient vector; the word becomes one long base-field vector.
* ``row-vector-parity`` - as above plus one parity digit per block chosen
  so every (m+1)-digit block sums to zero.
* ``square-array``    - m must be a perfect square; each symbol becomes a
  sqrt(m) x sqrt(m) digit tile, written row-wise, and the word fills an
  n1 x n2 grid of tiles.
* ``companion-array`` - each symbol becomes its m x m companion-matrix
  image, so bursts hitting a tile still touch only one symbol.

The template syndrome of a base word is the RS syndrome of the word's
blockwise contraction, extended with whatever the contraction discards:
per-block parity sums for the parity layout, and per-tile off-algebra
residuals for the companion layout (a corrupted tile usually leaves
F_p[P]; the residual keeps the decoder exact).  Together these parts form
a full parity check of the expanded code: the syndrome is zero exactly on
valid expansions, and its symbol count equals the code's redundancy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DecodeFailure,
    ShapeMismatchError,
    ShapeUnsupportedError,
    TooManyErasuresError,
)
from .rs import RsCode, Syndrome

KIND_ROW = "row-vector"
KIND_ROW_PARITY = "row-vector-parity"
KIND_SQUARE = "square-array"
KIND_COMPANION = "companion-array"


@dataclass(frozen=True)
class ExpandedSyndrome:
    """Composite syndrome of a base-field word.

    ``rs_values`` are the extension-field power sums of the contracted
    word; ``parities`` (parity layout) holds the n per-block digit sums;
    ``residuals`` (companion layout) holds, per tile, the m*(m-1) entries
    of columns 1..m-1 left over after removing the algebra part read off
    column 0.
    """

    rs_values: tuple[int, ...]
    parities: tuple[int, ...] | None = None
    residuals: tuple[tuple[int, ...], ...] | None = None

    @property
    def is_zero(self) -> bool:
        if any(self.rs_values):
            return False
        if self.parities is not None and any(self.parities):
            return False
        if self.residuals is not None and any(any(t) for t in self.residuals):
            return False
        return True


class ExpandedCode:
    """A base-field expansion of an RS code with its layout bookkeeping."""

    def __init__(self, rs: RsCode, kind: str, n1: int | None = None, n2: int | None = None):
        self.rs = rs
        self.kind = kind
        field = rs.field
        m = field.m
        n = rs.n
        if kind in (KIND_ROW, KIND_ROW_PARITY):
            if n1 is not None or n2 is not None:
                raise ShapeUnsupportedError("row layouts take no array shape")
            self.block = m if kind == KIND_ROW else m + 1
            self.shape = (n * self.block,)
        elif kind == KIND_SQUARE:
            sm = math.isqrt(m)
            if sm * sm != m:
                raise ShapeUnsupportedError(f"m={m} is not a perfect square")
            if n1 is None or n2 is None or n1 * n2 != n:
                raise ShapeMismatchError(f"need n1*n2 = {n}")
            self.sm = sm
            self.n1, self.n2 = n1, n2
            self.shape = (n1 * sm, n2 * sm)
        elif kind == KIND_COMPANION:
            if n1 is None or n2 is None or n1 * n2 != n:
                raise ShapeMismatchError(f"need n1*n2 = {n}")
            self.n1, self.n2 = n1, n2
            self.shape = (n1 * m, n2 * m)
        else:
            raise ShapeUnsupportedError(f"unknown expansion kind {kind!r}")
        self.base_length = self.shape[0] if len(self.shape) == 1 else self.shape[0] * self.shape[1]
        self.base_dimension = m * rs.k
        if kind == KIND_COMPANION:
            self._zero_residual = (0,) * (m * (m - 1))

    @classmethod
    def row_vector(cls, rs: RsCode) -> "ExpandedCode":
        return cls(rs, KIND_ROW)

    @classmethod
    def row_vector_parity(cls, rs: RsCode) -> "ExpandedCode":
        return cls(rs, KIND_ROW_PARITY)

    @classmethod
    def square_array(cls, rs: RsCode, n1: int, n2: int) -> "ExpandedCode":
        return cls(rs, KIND_SQUARE, n1, n2)

    @classmethod
    def companion_array(cls, rs: RsCode, n1: int, n2: int) -> "ExpandedCode":
        return cls(rs, KIND_COMPANION, n1, n2)

    @property
    def is_array(self) -> bool:
        return len(self.shape) == 2

    @property
    def rate(self) -> float:
        return self.base_dimension / self.base_length

    def zero_word(self):
        if self.is_array:
            rows, cols = self.shape
            return [[0] * cols for _ in range(rows)]
        return [0] * self.shape[0]

    def _check_shape(self, base) -> None:
        if self.is_array:
            rows, cols = self.shape
            if len(base) != rows or any(len(row) != cols for row in base):
                raise ShapeMismatchError(f"expected a {rows}x{cols} array")
        else:
            if len(base) != self.shape[0]:
                raise ShapeMismatchError(f"expected a vector of length {self.shape[0]}")

    def tile_origin(self, i: int) -> tuple[int, int]:
        """Top-left cell of the tile holding extension symbol i (0-based)."""
        side = self.sm if self.kind == KIND_SQUARE else self.rs.field.m
        return (i // self.n2) * side, (i % self.n2) * side

    # ------------------------------------------------------------------
    # expansion and contraction
    # ------------------------------------------------------------------

    def expand(self, word) -> list:
        """Lay an extension-field word out over the base field."""
        field = self.rs.field
        m = field.m
        if len(word) != self.rs.n:
            raise ShapeMismatchError(f"expected {self.rs.n} extension symbols")
        if self.kind in (KIND_ROW, KIND_ROW_PARITY):
            out = [0] * self.shape[0]
            blk = self.block
            for i, sym in enumerate(word):
                digits = field.to_base_vector(sym)
                out[i * blk : i * blk + m] = digits
                if blk > m:
                    out[i * blk + m] = field.prime.neg(sum(digits) % field.p)
            return out
        grid = self.zero_word()
        if self.kind == KIND_SQUARE:
            sm = self.sm
            for i, sym in enumerate(word):
                if sym:
                    r0, c0 = self.tile_origin(i)
                    digits = field.to_base_vector(sym)
                    for u in range(m):
                        grid[r0 + u // sm][c0 + u % sm] = digits[u]
            return grid
        for i, sym in enumerate(word):
            if sym:
                r0, c0 = self.tile_origin(i)
                image = field._companion_image(sym)
                for u in range(m):
                    grid[r0 + u][c0 : c0 + m] = image[u]
        return grid

    def contract(self, base) -> list[int]:
        """Invert expand(); companion tiles must lie in F_p[P]."""
        return self._gather(base, strict=True)

    def project(self, base) -> list[int]:
        """Blockwise contraction tolerant of corrupted companion tiles:
        each tile is sent to the algebra element read off its first column."""
        return self._gather(base, strict=False)

    def _gather(self, base, strict: bool) -> list[int]:
        self._check_shape(base)
        field = self.rs.field
        m = field.m
        n = self.rs.n
        if self.kind in (KIND_ROW, KIND_ROW_PARITY):
            blk = self.block
            return [
                field.from_base_vector(base[i * blk : i * blk + m]) for i in range(n)
            ]
        out = [0] * n
        if self.kind == KIND_SQUARE:
            sm = self.sm
            for i in range(n):
                r0, c0 = self.tile_origin(i)
                digits = [base[r0 + u // sm][c0 + u % sm] for u in range(m)]
                out[i] = field.from_base_vector(digits)
            return out
        for i in range(n):
            r0, c0 = self.tile_origin(i)
            tile = [base[r0 + u][c0 : c0 + m] for u in range(m)]
            if strict:
                out[i] = field.from_companion_matrix(tile)
            else:
                out[i] = field.from_base_vector([row[0] for row in tile])
        return out

    # ------------------------------------------------------------------
    # syndrome and decoding
    # ------------------------------------------------------------------

    def syndrome(self, base) -> ExpandedSyndrome:
        """Template syndrome of a base word; linear in the word."""
        self._check_shape(base)
        field = self.rs.field
        m = field.m
        n = self.rs.n
        p = field.p
        parities = None
        residuals = None
        if self.kind in (KIND_ROW, KIND_ROW_PARITY):
            blk = self.block
            word = [
                field.from_base_vector(base[i * blk : i * blk + m]) for i in range(n)
            ]
            if self.kind == KIND_ROW_PARITY:
                parities = tuple(
                    sum(base[i * blk : (i + 1) * blk]) % p for i in range(n)
                )
        elif self.kind == KIND_SQUARE:
            word = self._gather(base, strict=False)
        else:
            word = [0] * n
            res = []
            for i in range(n):
                r0, c0 = self.tile_origin(i)
                tile = [base[r0 + u][c0 : c0 + m] for u in range(m)]
                elem = field.from_base_vector([row[0] for row in tile])
                word[i] = elem
                image = field._companion_image(elem)
                res.append(
                    tuple(
                        (tile[u][v] - image[u][v]) % p
                        for u in range(m)
                        for v in range(1, m)
                    )
                )
            residuals = tuple(res)
        rs_vals = self.rs.syndrome(word).values
        return ExpandedSyndrome(rs_vals, parities, residuals)

    def syndrome_sub(self, a: ExpandedSyndrome, b: ExpandedSyndrome) -> ExpandedSyndrome:
        field = self.rs.field
        p = field.p
        rs_vals = tuple(field.sub(x, y) for x, y in zip(a.rs_values, b.rs_values))
        parities = None
        if a.parities is not None:
            parities = tuple((x - y) % p for x, y in zip(a.parities, b.parities))
        residuals = None
        if a.residuals is not None:
            residuals = tuple(
                tuple((x - y) % p for x, y in zip(ta, tb))
                for ta, tb in zip(a.residuals, b.residuals)
            )
        return ExpandedSyndrome(rs_vals, parities, residuals)

    def decode(self, synd: ExpandedSyndrome, parity_erasures: bool = False) -> list:
        """Base-field error pattern reproducing the syndrome.

        The extension-level pattern comes from the RS decoder; the parts
        the contraction discards (parity digits, companion residuals) are
        filled back in from the stored syndrome components, so the
        reconstruction is exact whenever the RS step is.  With
        ``parity_erasures`` the parity layout flags parity-inconsistent
        blocks as erasures before decoding.
        """
        erasures = ()
        if parity_erasures and self.kind == KIND_ROW_PARITY and synd.parities:
            erasures = tuple(i for i, s in enumerate(synd.parities) if s)
        try:
            evec = self.rs.decode_syndrome(Syndrome(synd.rs_values), erasures=erasures)
        except TooManyErasuresError as exc:
            raise DecodeFailure(str(exc)) from exc
        field = self.rs.field
        m = field.m
        p = field.p
        if self.kind == KIND_ROW:
            return self.expand(evec)
        if self.kind == KIND_ROW_PARITY:
            out = [0] * self.shape[0]
            blk = self.block
            for i, sym in enumerate(evec):
                digits = field.to_base_vector(sym)
                out[i * blk : i * blk + m] = digits
                out[i * blk + m] = (synd.parities[i] - sum(digits)) % p
            return out
        if self.kind == KIND_SQUARE:
            return self.expand(evec)
        grid = self.zero_word()
        for i, sym in enumerate(evec):
            res = synd.residuals[i]
            if not sym and not any(res):
                continue
            r0, c0 = self.tile_origin(i)
            image = field._companion_image(sym)
            for u in range(m):
                row = grid[r0 + u]
                row[c0] = image[u][0]
                for v in range(1, m):
                    row[c0 + v] = (image[u][v] + res[u * (m - 1) + (v - 1)]) % p
        return grid

    # ------------------------------------------------------------------
    # burst capability
    # ------------------------------------------------------------------

    def capability(self, bursts: int = 1, shape: str = "1d") -> int:
        """Guaranteed-correctable burst size: maximum length of each of
        ``bursts`` disjoint 1D bursts, or the side of each square burst.
        Returns 0 when no positive bound is guaranteed."""
        if bursts < 1:
            raise ValueError("burst count must be >= 1")
        m = self.rs.field.m
        r = self.rs.redundancy
        per = r // (2 * bursts)
        if shape == "1d":
            tile = self.sm if self.kind == KIND_SQUARE else m
            bound = tile * (per - 1) + 1
            return max(bound, 0)
        if shape == "square":
            if self.kind in (KIND_ROW, KIND_ROW_PARITY):
                raise ShapeUnsupportedError("square bursts need an array layout")
            tile = self.sm if self.kind == KIND_SQUARE else m
            bound = tile * (math.isqrt(per) - 1) + 1
            return max(bound, 0)
        raise ShapeUnsupportedError(f"unknown burst shape {shape!r}")

    def syndrome_symbol_count(self) -> int:
        """Number of base-field symbols in the serialized syndrome; equals
        the expanded code's redundancy."""
        m = self.rs.field.m
        r = self.rs.redundancy
        n = self.rs.n
        count = r * m
        if self.kind == KIND_ROW_PARITY:
            count += n
        elif self.kind == KIND_COMPANION:
            count += n * m * (m - 1)
        return count

    def spec_string(self) -> str:
        inner = self.rs.spec_string()
        if self.kind == KIND_ROW:
            return f"cI({inner})"
        if self.kind == KIND_ROW_PARITY:
            return f"cI+parity({inner})"
        tag = "cII" if self.kind == KIND_SQUARE else "cIII"
        return f"{tag}({inner};{self.n1},{self.n2})"

    def __eq__(self, other):
        return (
            isinstance(other, ExpandedCode)
            and self.kind == other.kind
            and self.rs == other.rs
            and self.shape == other.shape
        )

    def __hash__(self):
        return hash((self.kind, self.rs, self.shape))

    def __repr__(self):
        return f"ExpandedCode({self.spec_string()})"
