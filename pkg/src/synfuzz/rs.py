"""Reed-Solomon and BCH codes in cyclic form, decoded from syndromes.

Both code families share one decoder: a Peterson-style key-equation solve
(largest nonsingular syndrome matrix fixes the locator degree), root search
over all positions, and error magnitudes from a linear solve on the
syndrome equations.  Erasures are folded in through an erasure-locator
polynomial.  The decoder always re-checks that the returned error pattern
reproduces every input syndrome component; anything inconsistent raises
DecodeFailure rather than returning a silently wrong vector.

Words are lists of ints, index i holding the coefficient of x^i.
Systematic encoding puts the message in the high-order positions and the
parity symbols in positions 0..n-k-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlphabetMismatchError,
    CapacityTooLargeError,
    DecodeFailure,
    LengthMismatchError,
    NonPrimitiveAlphaError,
    TooManyErasuresError,
)
from .gf import MUL_COUNTER, ExtField


@dataclass(frozen=True)
class Syndrome:
    """Power-sum syndromes S_j = word(alpha^(fcr+j-1)), j = 1..count."""

    values: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)

    def __len__(self):
        return len(self.values)


def _poly_mul(field: ExtField, f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = field.add(out[i + j], field.mul(a, b))
    return out


def _solve_linear(field: ExtField, rows, rhs):
    """Solve a square system by Gaussian elimination.

    Returns (solution, mults) or (None, mults) when the matrix is singular.
    """
    exp, log = field._exp, field._log
    q1 = field.order - 1
    sub = field.sub
    w = len(rows)
    aug = [list(rows[i]) + [rhs[i]] for i in range(w)]
    nm = 0
    for col in range(w):
        piv = None
        for r in range(col, w):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None, nm
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        pl = q1 - log[prow[col]]
        for j in range(col, w + 1):
            v = prow[j]
            if v:
                prow[j] = exp[log[v] + pl]
                nm += 1
        for r in range(col + 1, w):
            arow = aug[r]
            f = arow[col]
            if f:
                lf = log[f]
                for j in range(col, w + 1):
                    v = prow[j]
                    if v:
                        arow[j] = sub(arow[j], exp[log[v] + lf])
                        nm += 1
    sol = [0] * w
    for i in range(w - 1, -1, -1):
        acc = aug[i][w]
        row = aug[i]
        for j in range(i + 1, w):
            c, v = row[j], sol[j]
            if c and v:
                acc = sub(acc, exp[log[c] + log[v]])
                nm += 1
        sol[i] = acc
    return sol, nm


def _chien_roots(field: ExtField, psi, n):
    """Positions i in [0, n) with psi(alpha^-i) = 0, plus the mult count."""
    exp, log = field._exp, field._log
    q1 = field.order - 1
    la = field._log_alpha
    es = []
    steps = []
    for j, c in enumerate(psi):
        if c:
            es.append(log[c])
            steps.append((q1 - (la * j) % q1) % q1)
    nt = len(es)
    roots = []
    append = roots.append
    if field.p == 2:
        for i in range(n):
            acc = 0
            for t in range(nt):
                e = es[t]
                acc ^= exp[e]
                e += steps[t]
                if e >= q1:
                    e -= q1
                es[t] = e
            if acc == 0:
                append(i)
    else:
        add = field.add
        for i in range(n):
            acc = 0
            for t in range(nt):
                e = es[t]
                acc = add(acc, exp[e])
                e += steps[t]
                if e >= q1:
                    e -= q1
                es[t] = e
            if acc == 0:
                append(i)
    return roots, n * nt


def _gpz_decode(field: ExtField, synd, n, fcr, erasures=(), base_limit=None):
    """Errors-and-erasures decode of a syndrome vector.

    Returns the unique error vector v with
    2*weight(v off erasures) + |erasures| <= len(synd) that reproduces the
    syndromes, or raises DecodeFailure.  With base_limit set, magnitudes
    must lie in the base subfield (values below base_limit).
    """
    synd = list(synd)
    r = len(synd)
    positions_known = sorted(set(int(e) for e in erasures))
    if positions_known and not (0 <= positions_known[0] and positions_known[-1] < n):
        raise ValueError("erasure position outside the word")
    f = len(positions_known)
    if f > r:
        raise TooManyErasuresError(f"{f} erasures exceed redundancy {r}")
    if not any(synd) and not positions_known:
        return [0] * n

    exp, log = field._exp, field._log
    q1 = field.order - 1
    la = field._log_alpha
    add = field.add
    neg = field.neg
    nm = 0
    try:
        # erasure locator gamma(x) = prod (1 - alpha^pos * x)
        gamma = [1]
        for pos in positions_known:
            x_val = exp[(la * pos) % q1]
            nxt = gamma + [0]
            for idx, c in enumerate(gamma):
                if c:
                    nxt[idx + 1] = field.sub(nxt[idx + 1], field.mul(x_val, c))
            gamma = nxt
        if f:
            xi = _poly_mul(field, synd, gamma)[:r]
        else:
            xi = synd

        # Peterson sweep: largest nu with a nonsingular syndrome matrix
        lam = [1]
        numax = (r - f) // 2
        for nu in range(numax, 0, -1):
            rows = [[xi[f + a + b] for b in range(nu)] for a in range(nu)]
            rhs = [neg(xi[f + nu + a]) for a in range(nu)]
            sol, c = _solve_linear(field, rows, rhs)
            nm += c
            if sol is not None:
                lam = [1] + [sol[nu - 1 - j] for j in range(nu)]
                break
        while len(lam) > 1 and lam[-1] == 0:
            lam.pop()

        psi = _poly_mul(field, lam, gamma) if f else lam
        degw = len(psi) - 1
        if degw == 0:
            if any(synd):
                raise DecodeFailure("nonzero syndrome with empty locator")
            return [0] * n

        roots, c = _chien_roots(field, psi, n)
        nm += c
        if len(roots) != degw:
            raise DecodeFailure(
                f"locator of degree {degw} has {len(roots)} roots in range"
            )

        w = degw
        rows = [
            [exp[(la * pos * (fcr + a)) % q1] for pos in roots] for a in range(w)
        ]
        sol, c = _solve_linear(field, rows, synd[:w])
        nm += c
        if sol is None:
            raise DecodeFailure("singular magnitude system")
        if base_limit is not None and any(v >= base_limit for v in sol):
            raise DecodeFailure("magnitude outside the base field")

        error = [0] * n
        support = []
        for pos, val in zip(roots, sol):
            if val:
                error[pos] = val
                support.append((pos, log[val]))

        for j in range(r):
            acc = 0
            e = fcr + j
            for pos, lv in support:
                acc = add(acc, exp[lv + (la * pos * e) % q1])
            nm += len(support)
            if acc != synd[j]:
                raise DecodeFailure("candidate pattern does not match the syndrome")
        return error
    finally:
        MUL_COUNTER.add(nm)


def _sparse_syndrome(field: ExtField, word, count, fcr):
    """Power sums of a word, skipping zero symbols."""
    exp, log = field._exp, field._log
    q1 = field.order - 1
    la = field._log_alpha
    add = field.add
    out = [0] * count
    nm = 0
    for i, c in enumerate(word):
        if c:
            lc = log[c]
            step = (la * i) % q1
            e = (la * fcr % q1) * i % q1
            for j in range(count):
                out[j] = add(out[j], exp[lc + e])
                e += step
                if e >= q1:
                    e -= q1
            nm += count
    MUL_COUNTER.add(nm)
    return out


class RsCode:
    """A Reed-Solomon code over F_{p^m} in cyclic form.

    Full length is p^m - 1; passing a smaller n gives the shortened code
    (the dropped high-order information positions are pinned to zero).
    Minimum distance is n - k + 1 either way.
    """

    def __init__(self, field: ExtField, n: int, k: int, fcr: int = 1):
        if not field.alpha_is_primitive:
            raise NonPrimitiveAlphaError("cyclic RS codes need a primitive x")
        full = field.order - 1
        if not 0 < k < n <= full:
            raise ValueError(f"need 0 < k < n <= {full}, got n={n} k={k}")
        self.field = field
        self.n = n
        self.k = k
        self.fcr = fcr
        self.redundancy = n - k
        self.t = (n - k) // 2
        self.is_shortened = n < full
        g = [1]
        for j in range(self.redundancy):
            root = field.alpha_pow(fcr + j)
            g = _poly_mul(field, g, [field.neg(root), 1])
        self.generator = tuple(g)

    @property
    def distance(self) -> int:
        return self.n - self.k + 1

    def _check_word(self, word, length, limit):
        if len(word) != length:
            raise LengthMismatchError(f"expected {length} symbols, got {len(word)}")
        for c in word:
            if not (0 <= c < limit):
                raise AlphabetMismatchError(f"symbol {c} outside alphabet of {limit}")

    def encode(self, message) -> list[int]:
        """Systematic cyclic encoding: message high, parity low."""
        self._check_word(message, self.k, self.field.order)
        field = self.field
        exp, log = field._exp, field._log
        sub = field.sub
        r = self.redundancy
        g = self.generator
        work = [0] * r + list(message)
        nm = 0
        for i in range(self.n - 1, r - 1, -1):
            c = work[i]
            if c:
                lc = log[c]
                base = i - r
                for j in range(r):
                    gj = g[j]
                    if gj:
                        work[base + j] = sub(work[base + j], exp[lc + log[gj]])
                        nm += 1
        MUL_COUNTER.add(nm)
        return [field.neg(v) for v in work[:r]] + list(message)

    def syndrome(self, word) -> Syndrome:
        self._check_word(word, self.n, self.field.order)
        return Syndrome(tuple(_sparse_syndrome(self.field, word, self.redundancy, self.fcr)))

    def syndrome_add(self, a: Syndrome, b: Syndrome) -> Syndrome:
        add = self.field.add
        return Syndrome(tuple(add(x, y) for x, y in zip(a.values, b.values)))

    def syndrome_sub(self, a: Syndrome, b: Syndrome) -> Syndrome:
        sub = self.field.sub
        return Syndrome(tuple(sub(x, y) for x, y in zip(a.values, b.values)))

    def decode_syndrome(self, synd, erasures=()) -> list[int]:
        """Error vector consistent with the syndrome, or DecodeFailure."""
        values = synd.values if isinstance(synd, Syndrome) else tuple(synd)
        if len(values) != self.redundancy:
            raise LengthMismatchError(
                f"expected {self.redundancy} syndrome values, got {len(values)}"
            )
        return _gpz_decode(self.field, values, self.n, self.fcr, erasures)

    def spec_string(self) -> str:
        return f"rs({self.n},{self.k};{self.field.spec_string()})"

    def __eq__(self, other):
        return (
            isinstance(other, RsCode)
            and (self.field, self.n, self.k, self.fcr)
            == (other.field, other.n, other.k, other.fcr)
        )

    def __hash__(self):
        return hash((self.field, self.n, self.k, self.fcr))

    def __repr__(self):
        return f"RsCode({self.spec_string()})"


def _cyclotomic_coset(j: int, p: int, n: int) -> list[int]:
    out = [j % n]
    cur = (j * p) % n
    while cur != out[0]:
        out.append(cur)
        cur = (cur * p) % n
    return out


class BchCode:
    """Narrow-sense primitive BCH code of length p^m - 1 over F_p.

    The generator polynomial is the product of the minimal polynomials of
    alpha^1 .. alpha^(2*design_t), one per cyclotomic coset; its degree
    fixes the dimension.  Decoding reuses the shared syndrome decoder with
    2*design_t syndromes and base-field magnitudes.
    """

    def __init__(self, p: int, m: int, design_t: int, modulus=None, fcr: int = 1):
        ext = ExtField(p, m, modulus=modulus, require_primitive=True)
        n = ext.order - 1
        if design_t < 1 or 2 * design_t >= n:
            raise CapacityTooLargeError(f"need 1 <= 2t < {n}, got t={design_t}")
        self.field = ext
        self.p = p
        self.n = n
        self.design_t = design_t
        self.t = design_t
        self.fcr = fcr
        self.syndrome_count = 2 * design_t
        g = [1]
        used = set()
        for j in range(fcr, fcr + 2 * design_t):
            jj = j % n
            if jj in used:
                continue
            coset = _cyclotomic_coset(jj, p, n)
            used.update(coset)
            minpoly = [1]
            for l in coset:
                root = ext.alpha_pow(l)
                minpoly = _poly_mul(ext, minpoly, [ext.neg(root), 1])
            if any(c >= p for c in minpoly):  # pragma: no cover - coset closure
                raise ValueError("minimal polynomial left the base field")
            g = _poly_mul(ext, g, minpoly)
        self.generator = tuple(g)
        self.k = n - (len(g) - 1)
        self.redundancy = n - self.k

    def _check_word(self, word, length):
        if len(word) != length:
            raise LengthMismatchError(f"expected {length} symbols, got {len(word)}")
        for c in word:
            if not (0 <= c < self.p):
                raise AlphabetMismatchError(f"symbol {c} outside gf({self.p})")

    def encode(self, message) -> list[int]:
        """Systematic cyclic encoding over the base field."""
        self._check_word(message, self.k)
        field = self.field
        r = self.redundancy
        g = self.generator
        work = [0] * r + list(message)
        for i in range(self.n - 1, r - 1, -1):
            c = work[i]
            if c:
                base = i - r
                for j in range(r):
                    gj = g[j]
                    if gj:
                        work[base + j] = field.sub(work[base + j], field.mul(c, gj))
        return [field.neg(v) for v in work[:r]] + list(message)

    def remainder(self, word) -> tuple[int, ...]:
        """word(x) mod g(x): the compact n-k symbol form of the syndrome."""
        self._check_word(word, self.n)
        field = self.field
        r = self.redundancy
        g = self.generator
        work = list(word)
        for i in range(self.n - 1, r - 1, -1):
            c = work[i]
            if c:
                base = i - r
                for j in range(r):
                    gj = g[j]
                    if gj:
                        work[base + j] = field.sub(work[base + j], field.mul(c, gj))
        return tuple(work[:r])

    def syndrome(self, word) -> Syndrome:
        self._check_word(word, self.n)
        return Syndrome(
            tuple(_sparse_syndrome(self.field, word, self.syndrome_count, self.fcr))
        )

    def power_sums(self, remainder) -> Syndrome:
        """Evaluate a mod-g remainder at the syndrome roots."""
        return Syndrome(
            tuple(
                _sparse_syndrome(self.field, list(remainder), self.syndrome_count, self.fcr)
            )
        )

    def decode_syndrome(self, synd, erasures=()) -> list[int]:
        values = synd.values if isinstance(synd, Syndrome) else tuple(synd)
        if len(values) != self.syndrome_count:
            raise LengthMismatchError(
                f"expected {self.syndrome_count} syndrome values, got {len(values)}"
            )
        return _gpz_decode(
            self.field, values, self.n, self.fcr, erasures, base_limit=self.p
        )

    def decode_remainder(self, remainder, erasures=()) -> list[int]:
        return self.decode_syndrome(self.power_sums(remainder), erasures)

    @property
    def systematic_slice(self) -> slice:
        return slice(self.redundancy, self.n)

    def spec_string(self) -> str:
        return f"bch({self.n},{self.design_t};gf({self.p}))"

    def __eq__(self, other):
        return (
            isinstance(other, BchCode)
            and (self.field, self.design_t, self.fcr)
            == (other.field, other.design_t, other.fcr)
        )

    def __hash__(self):
        return hash((self.field, self.design_t, self.fcr))

    def __repr__(self):
        return f"BchCode({self.spec_string()}, k={self.k})"


def bch_build(p: int, m: int, design_t: int, modulus=None) -> BchCode:
    """Build the narrow-sense primitive BCH code of length p^m - 1."""
    return BchCode(p, m, design_t, modulus=modulus)
