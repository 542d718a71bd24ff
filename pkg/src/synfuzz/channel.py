"""Seeded error-pattern generation: bursts, rectangles, and mixed noise.

A 1D burst of length L has nonzero first and last entries; the interior is
uniform over the whole field, zeros included.  A 2D rectangular burst has
at least one nonzero entry in each of its first and last rows and columns.
Randomness comes from an explicit SplitMix64 stream, so identical seeds
and parameters reproduce identical patterns on any platform;
``Rng.split`` derives independent streams for per-trial use.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError, PlacementFailedError

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class Rng:
    """SplitMix64 pseudo-random stream with explicit state."""

    def __init__(self, seed: int):
        self._seed = seed & _MASK
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free by rejection."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def split(self, key: int) -> "Rng":
        """An independent stream derived from this one's seed and a key."""
        return Rng(_mix64(self._seed ^ ((key + 1) * _GOLDEN)))

    def element(self, field) -> int:
        return self.below(field.order)

    def nonzero(self, field) -> int:
        return 1 + self.below(field.order - 1)


@dataclass(frozen=True)
class ErrorPattern:
    """A dense error word or array plus a record of how it was built."""

    field: object
    shape: tuple[int, ...]
    cells: tuple
    bursts: tuple = ()
    random_errors: int = 0

    @property
    def is_2d(self) -> bool:
        return len(self.shape) == 2

    def support(self):
        """Yield (position, value) for nonzero cells; 2D positions are (r, c)."""
        if self.is_2d:
            for r, row in enumerate(self.cells):
                for c, v in enumerate(row):
                    if v:
                        yield (r, c), v
        else:
            for i, v in enumerate(self.cells):
                if v:
                    yield i, v

    @property
    def weight(self) -> int:
        return sum(1 for _ in self.support())

    def dense(self):
        if self.is_2d:
            return [list(row) for row in self.cells]
        return list(self.cells)

    def apply_to(self, data):
        """data + pattern, componentwise in the field."""
        add = self.field.add
        if self.is_2d:
            return [
                [add(a, b) for a, b in zip(drow, prow)]
                for drow, prow in zip(data, self.cells)
            ]
        return [add(a, b) for a, b in zip(data, self.cells)]

    def descriptor(self) -> str:
        """One-line text form for simulation logs."""
        parts = []
        for offset, dims in self.bursts:
            off = "x".join(str(v) for v in offset) if isinstance(offset, tuple) else str(offset)
            dim = "x".join(str(v) for v in dims) if isinstance(dims, tuple) else str(dims)
            parts.append(f"burst@{off}:{dim}")
        if self.random_errors:
            parts.append(f"random:{self.random_errors}")
        return ";".join(parts) if parts else "clean"


def _freeze(shape, cells):
    if len(shape) == 2:
        return tuple(tuple(row) for row in cells)
    return tuple(cells)


def gen_burst_1d(rng: Rng, field, shape_len: int, burst_len: int, position: int) -> ErrorPattern:
    """A burst of burst_len symbols starting at position; endpoints nonzero."""
    if burst_len < 1 or position < 0 or position + burst_len > shape_len:
        raise OutOfRangeError(
            f"burst of {burst_len} at {position} does not fit in {shape_len}"
        )
    cells = [0] * shape_len
    _fill_burst_1d(rng, field, cells, position, burst_len)
    return ErrorPattern(field, (shape_len,), _freeze((shape_len,), cells),
                        bursts=((position, burst_len),))


def _fill_burst_1d(rng, field, cells, position, burst_len):
    if burst_len == 1:
        cells[position] = rng.nonzero(field)
        return
    cells[position] = rng.nonzero(field)
    cells[position + burst_len - 1] = rng.nonzero(field)
    for i in range(position + 1, position + burst_len - 1):
        cells[i] = rng.element(field)


def gen_burst_2d(rng: Rng, field, shape: tuple[int, int], rows: int, cols: int,
                 position: tuple[int, int]) -> ErrorPattern:
    """A rows x cols rectangular burst; every border row/column holds a nonzero."""
    big_r, big_c = shape
    r0, c0 = position
    if rows < 1 or cols < 1 or r0 < 0 or c0 < 0 or r0 + rows > big_r or c0 + cols > big_c:
        raise OutOfRangeError(f"{rows}x{cols} burst at {position} does not fit in {shape}")
    cells = [[0] * big_c for _ in range(big_r)]
    _fill_burst_2d(rng, field, cells, r0, c0, rows, cols)
    return ErrorPattern(field, shape, _freeze(shape, cells),
                        bursts=(((r0, c0), (rows, cols)),))


def _fill_burst_2d(rng, field, cells, r0, c0, rows, cols):
    for r in range(r0, r0 + rows):
        for c in range(c0, c0 + cols):
            cells[r][c] = rng.element(field)
    for r in (r0, r0 + rows - 1):
        if not any(cells[r][c0 : c0 + cols]):
            cells[r][c0 + rng.below(cols)] = rng.nonzero(field)
    for c in (c0, c0 + cols - 1):
        if not any(cells[r][c] for r in range(r0, r0 + rows)):
            cells[r0 + rng.below(rows)][c] = rng.nonzero(field)


def _overlaps_1d(a, b):
    (s1, l1), (s2, l2) = a, b
    return s1 < s2 + l2 and s2 < s1 + l1


def _overlaps_2d(a, b):
    (r1, c1), (h1, w1) = a
    (r2, c2), (h2, w2) = b
    return r1 < r2 + h2 and r2 < r1 + h1 and c1 < c2 + w2 and c2 < c1 + w1


def gen_mixed(rng: Rng, field, shape, bursts, random_errors: int = 0,
              max_attempts: int = 200) -> ErrorPattern:
    """Disjoint bursts of the given dimensions plus scattered single errors.

    ``bursts`` is a list of lengths (1D shapes) or (rows, cols) pairs (2D
    shapes).  Bursts are placed uniformly at random, pairwise disjoint;
    random errors land on single cells off every burst.  Raises
    PlacementFailedError when a disjoint placement cannot be found.
    """
    two_d = len(shape) == 2
    placed = []
    for dims in bursts:
        for attempt in range(max_attempts):
            if two_d:
                h, w = dims
                if h > shape[0] or w > shape[1]:
                    raise OutOfRangeError(f"burst {dims} does not fit in {shape}")
                pos = (rng.below(shape[0] - h + 1), rng.below(shape[1] - w + 1))
                cand = (pos, (h, w))
                if all(not _overlaps_2d(cand, other) for other in placed):
                    placed.append(cand)
                    break
            else:
                length = dims
                if length > shape[0]:
                    raise OutOfRangeError(f"burst {dims} does not fit in {shape}")
                pos = rng.below(shape[0] - length + 1)
                cand = (pos, length)
                if all(not _overlaps_1d(cand, other) for other in placed):
                    placed.append(cand)
                    break
        else:
            raise PlacementFailedError(f"could not place burst {dims} disjointly")

    if two_d:
        cells = [[0] * shape[1] for _ in range(shape[0])]
        for (r0, c0), (h, w) in placed:
            _fill_burst_2d(rng, field, cells, r0, c0, h, w)
        in_burst = set()
        for (r0, c0), (h, w) in placed:
            in_burst.update((r, c) for r in range(r0, r0 + h) for c in range(c0, c0 + w))
        free = shape[0] * shape[1] - len(in_burst)
        if random_errors > free:
            raise PlacementFailedError("more random errors than free cells")
        chosen = set()
        while len(chosen) < random_errors:
            cell = (rng.below(shape[0]), rng.below(shape[1]))
            if cell not in in_burst and cell not in chosen:
                chosen.add(cell)
                cells[cell[0]][cell[1]] = rng.nonzero(field)
    else:
        cells = [0] * shape[0]
        for pos, length in placed:
            _fill_burst_1d(rng, field, cells, pos, length)
        in_burst = set()
        for pos, length in placed:
            in_burst.update(range(pos, pos + length))
        free = shape[0] - len(in_burst)
        if random_errors > free:
            raise PlacementFailedError("more random errors than free cells")
        chosen = set()
        while len(chosen) < random_errors:
            cell = rng.below(shape[0])
            if cell not in in_burst and cell not in chosen:
                chosen.add(cell)
                cells[cell] = rng.nonzero(field)

    return ErrorPattern(field, tuple(shape), _freeze(shape, cells),
                        bursts=tuple(placed), random_errors=random_errors)
