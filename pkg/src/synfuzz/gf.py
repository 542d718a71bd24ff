"""Arithmetic in prime fields F_p and extension fields F_{p^m}.

Field elements are plain ints.  An element of F_{p^m} is encoded as the
integer whose base-p digits are the coefficients of its polynomial
representation, digit i holding the coefficient of x^i.  Over F_2 this is
the familiar bit packing: in F_8 built on x^3 + x + 1 the element 3 is
0b011 = 1 + x.

Besides the integer encoding, two base-field views of an extension element
are provided: the coefficient vector of length m, and the m x m
companion-matrix image, which realises F_{p^m} as the matrix algebra
F_p[P].

Multiplication and inversion run on exp/log tables built over a generator
of the multiplicative group (the class of x itself whenever the modulus is
primitive).  Every extension-field multiplication bumps a thread-local
counter so decoder costs can be measured.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    NoDefaultModulusError,
    NonPrimitiveAlphaError,
    NotInAlgebraError,
    NotPrimeError,
    ReducibleModulusError,
)

# Primitive polynomials for F_{2^m}, coefficient tuples (c0, ..., cm) with
# digit i holding the coefficient of x^i.  m=8 is x^8+x^4+x^3+x^2+1.
_BINARY_DEFAULT_MODULI = {
    1: (1, 1),
    2: (1, 1, 1),
    3: (1, 1, 0, 1),
    4: (1, 1, 0, 0, 1),
    5: (1, 0, 1, 0, 0, 1),
    6: (1, 1, 0, 0, 0, 0, 1),
    7: (1, 0, 0, 1, 0, 0, 0, 1),
    8: (1, 0, 1, 1, 1, 0, 0, 0, 1),
    9: (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    10: (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1),
    11: (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    12: (1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1),
    13: (1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    14: (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1),
    15: (1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    16: (1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1),
}

# Fields larger than this get no searched default and no flat add table.
_MAX_DEFAULT_ORDER = 1 << 16
_MAX_ADD_TABLE_ORDER = 1 << 10


class _ThreadCount(threading.local):
    n = 0


class MulCounter:
    """Thread-local running total of extension-field multiplications."""

    def __init__(self):
        self._tl = _ThreadCount()

    @property
    def count(self) -> int:
        return self._tl.n

    def add(self, k: int = 1) -> None:
        self._tl.n += k

    def reset(self) -> None:
        self._tl.n = 0


MUL_COUNTER = MulCounter()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p; elements are the ints 0..p-1."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")

    @property
    def order(self) -> int:
        return self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("no inverse of 0 in a prime field")
        return pow(a, self.p - 2, self.p)

    def spec_string(self) -> str:
        return f"gf({self.p})"


def _to_digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, d = divmod(value, p)
        out.append(d)
    return out


def _from_digits(digits, p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _poly_trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _poly_mod(p: int, f: list[int], g: list[int]) -> list[int]:
    """Remainder of f by g over F_p; g need not be monic."""
    f = [c % p for c in f]
    g = _poly_trim([c % p for c in g])
    dg = len(g) - 1
    lead_inv = pow(g[-1], p - 2, p) if g[-1] != 1 else 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            factor = (c * lead_inv) % p
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - factor * g[j]) % p
    return _poly_trim(f[:dg] if dg > 0 else [0])


def _is_irreducible(p: int, coeffs) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            divisor = _to_digits(low, p, d) + [1]
            rem = _poly_mod(p, list(coeffs), divisor)
            if rem == [0]:
                return False
    return True


def _order_of_x(p: int, m: int, coeffs) -> int:
    """Multiplicative order of the class of x modulo the (irreducible) coeffs."""
    order = p**m
    modlow = coeffs[:-1]
    val = p % order if m > 1 else (-coeffs[0]) % p
    seen = 1
    cur = val
    while cur != 1:
        cur = _mulx_value(cur, p, m, order, modlow)
        seen += 1
        if seen > order:  # pragma: no cover - guards a broken modulus
            raise ReducibleModulusError("x generates a non-cyclic structure")
    return seen


def _mulx_value(v: int, p: int, m: int, order: int, modlow) -> int:
    """Multiply the encoded element v by x and reduce."""
    shifted = v * p
    d, rest = divmod(shifted, order)
    if not d:
        return rest
    digits = _to_digits(rest, p, m)
    for i, c in enumerate(modlow):
        if c:
            digits[i] = (digits[i] - d * c) % p
    return _from_digits(digits, p)


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        seen = g
        k = 1
        while seen != 1:
            seen = (seen * g) % p
            k += 1
        if k == p - 1:
            return g
    raise NotPrimeError(f"{p} has no primitive root")  # pragma: no cover


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Built-in modulus polynomial for F_{p^m} with a primitive x.

    Binary fields up to degree 16 come from a fixed table; other small
    fields use the lexicographically smallest primitive polynomial.
    """
    if not _is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2 and m in _BINARY_DEFAULT_MODULI:
        return _BINARY_DEFAULT_MODULI[m]
    if m == 1:
        g = _smallest_primitive_root(p)
        return ((-g) % p, 1)
    if p**m > _MAX_DEFAULT_ORDER:
        raise NoDefaultModulusError(f"no built-in modulus for gf({p}^{m})")
    for low in range(p**m):
        coeffs = tuple(_to_digits(low, p, m)) + (1,)
        if coeffs[0] == 0:  # x divides it
            continue
        if not _is_irreducible(p, coeffs):
            continue
        if _order_of_x(p, m, coeffs) == p**m - 1:
            return coeffs
    raise NoDefaultModulusError(f"no primitive modulus found for gf({p}^{m})")  # pragma: no cover


class ExtField:
    """The extension field F_{p^m} on an explicit modulus polynomial.

    Elements are ints in [0, p^m) under the digit encoding described in the
    module docstring.  The base field embeds as the values 0..p-1.
    """

    def __init__(self, p: int, m: int, modulus=None, require_primitive: bool = False):
        self.prime = PrimeField(p)
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.order = p**m
        if modulus is None:
            self.modulus = default_modulus(p, m)
            self.modulus_is_default = True
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not _is_irreducible(p, mod):
                raise ReducibleModulusError(f"{mod} is reducible over gf({p})")
            self.modulus = mod
            try:
                self.modulus_is_default = mod == default_modulus(p, m)
            except NoDefaultModulusError:
                self.modulus_is_default = False
        self._modlow = self.modulus[:-1]
        self.alpha = p % self.order if m > 1 else (-self.modulus[0]) % p
        self._build_tables()
        if require_primitive and not self.alpha_is_primitive:
            raise NonPrimitiveAlphaError(
                f"x has order {self.alpha_order}, not {self.order - 1}, modulo {self.modulus}"
            )
        self._addflat = None
        self._negtab = None
        if p != 2 and self.order <= _MAX_ADD_TABLE_ORDER:
            q = self.order
            self._addflat = [self._add_raw(a, b) for a in range(q) for b in range(q)]
            self._negtab = [self._scale_raw(a, p - 1) for a in range(q)]
        self._digit_cache: dict[int, tuple[int, ...]] = {}
        self._companion_cache: dict[int, tuple[tuple[int, ...], ...]] = {}
        self._companion_basis = None

    # ------------------------------------------------------------------
    # table construction (runs once, plain digit arithmetic)
    # ------------------------------------------------------------------

    def _mulx(self, v: int) -> int:
        return _mulx_value(v, self.p, self.m, self.order, self._modlow)

    def _scale_raw(self, v: int, c: int) -> int:
        if c == 0 or v == 0:
            return 0
        p = self.p
        digits = _to_digits(v, p, self.m)
        return _from_digits([(d * c) % p for d in digits], p)

    def _add_raw(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        da = _to_digits(a, p, self.m)
        db = _to_digits(b, p, self.m)
        return _from_digits([(x + y) % p for x, y in zip(da, db)], p)

    def _mul_raw(self, a: int, b: int) -> int:
        res = 0
        cur = a
        for d in _to_digits(b, self.p, self.m):
            if d:
                res = self._add_raw(res, self._scale_raw(cur, d))
            cur = self._mulx(cur)
        return res

    def _build_tables(self):
        q1 = self.order - 1
        self.alpha_order = _order_of_x(self.p, self.m, self.modulus)
        self.alpha_is_primitive = self.alpha_order == q1
        if self.alpha_is_primitive:
            gen = self.alpha
        else:
            gen = None
            for cand in range(2, self.order):
                cur = cand
                k = 1
                while cur != 1:
                    cur = self._mul_raw(cur, cand)
                    k += 1
                    if k > q1:
                        break
                if k == q1:
                    gen = cand
                    break
            if gen is None:  # pragma: no cover - cyclic group always has one
                raise ReducibleModulusError("multiplicative group has no generator")
        exp = [0] * (2 * q1)
        log = [0] * self.order
        val = 1
        for i in range(q1):
            exp[i] = val
            log[val] = i
            val = self._mul_raw(val, gen)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self.generator = gen
        self._exp = exp
        self._log = log
        self._log_alpha = log[self.alpha] if self.alpha else 0

    # ------------------------------------------------------------------
    # element arithmetic
    # ------------------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._addflat is not None:
            return self._addflat[a * self.order + b]
        return self._add_raw(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self._negtab is not None:
            return self._negtab[a]
        return self._scale_raw(a, self.p - 1)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        MUL_COUNTER._tl.n += 1
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("no inverse of 0")
        return self._exp[self.order - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        MUL_COUNTER._tl.n += 1
        q1 = self.order - 1
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("no inverse of 0")
            return 0
        return self._exp[(self._log[a] * (e % q1)) % q1]

    def alpha_pow(self, e: int) -> int:
        """The element x^e (e may be negative)."""
        q1 = self.order - 1
        return self._exp[(self._log_alpha * (e % q1)) % q1]

    def elements(self):
        return range(self.order)

    # ------------------------------------------------------------------
    # base-field representations
    # ------------------------------------------------------------------

    def to_base_vector(self, a: int) -> list[int]:
        """Coefficient vector [c_0, ..., c_{m-1}] with a = sum c_i x^i."""
        cached = self._digit_cache.get(a)
        if cached is None:
            cached = tuple(_to_digits(a, self.p, self.m))
            self._digit_cache[a] = cached
        return list(cached)

    def from_base_vector(self, digits) -> int:
        digits = list(digits)
        if len(digits) != self.m or any(not (0 <= d < self.p) for d in digits):
            raise ValueError(f"need {self.m} digits below {self.p}")
        return _from_digits(digits, self.p)

    @property
    def companion_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Companion matrix P of the modulus: subdiagonal ones, last column
        the negated low-order modulus coefficients."""
        return self._companion_image(self.alpha)

    def _basis_matrices(self):
        if self._companion_basis is None:
            m, p = self.m, self.p
            ident = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
            pm = [[0] * m for _ in range(m)]
            for r in range(1, m):
                pm[r][r - 1] = 1
            for r in range(m):
                pm[r][m - 1] = (-self._modlow[r]) % p
            basis = [ident]
            cur = ident
            for _ in range(1, m):
                nxt = [
                    [sum(cur[r][k] * pm[k][c] for k in range(m)) % p for c in range(m)]
                    for r in range(m)
                ]
                basis.append(nxt)
                cur = nxt
            self._companion_basis = basis
        return self._companion_basis

    def _companion_image(self, a: int) -> tuple[tuple[int, ...], ...]:
        cached = self._companion_cache.get(a)
        if cached is None:
            m, p = self.m, self.p
            basis = self._basis_matrices()
            digs = self.to_base_vector(a)
            rows = []
            for r in range(m):
                rows.append(
                    tuple(
                        sum(d * basis[i][r][c] for i, d in enumerate(digs) if d) % p
                        for c in range(m)
                    )
                )
            cached = tuple(rows)
            self._companion_cache[a] = cached
        return cached

    def to_companion_matrix(self, a: int) -> list[list[int]]:
        """The m x m matrix sum c_i P^i representing a in F_p[P]."""
        return [list(row) for row in self._companion_image(a)]

    def from_companion_matrix(self, mat) -> int:
        """Invert to_companion_matrix; rejects matrices outside F_p[P].

        The first column of the image of a is the coefficient vector of a
        (it is where multiplication by a sends 1), so it determines the only
        candidate element.
        """
        if len(mat) != self.m or any(len(row) != self.m for row in mat):
            raise NotInAlgebraError(f"matrix is not {self.m}x{self.m}")
        digits = [row[0] % self.p for row in mat]
        cand = _from_digits(digits, self.p)
        image = self._companion_image(cand)
        for r in range(self.m):
            for c in range(self.m):
                if mat[r][c] % self.p != image[r][c]:
                    raise NotInAlgebraError("matrix is not a polynomial in P")
        return cand

    def embed_base(self, c: int) -> int:
        if not (0 <= c < self.p):
            raise ValueError(f"{c} is not a base-field value")
        return c

    # ------------------------------------------------------------------

    def spec_string(self) -> str:
        if self.m == 1:
            return f"gf({self.p})"
        base = f"gf({self.p}^{self.m}"
        if self.modulus_is_default:
            return base + ")"
        return base + ";modulus=" + ",".join(str(c) for c in self.modulus) + ")"

    def canonical_spec(self) -> str:
        """Unambiguous field identifier used in hashed serializations."""
        if self.m == 1:
            return f"gf({self.p})"
        return (
            f"gf({self.p}^{self.m};modulus="
            + ",".join(str(c) for c in self.modulus)
            + ")"
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"ExtField({self.spec_string()})"


def build_ext_field(p: int, m: int, modulus=None, require_primitive: bool = False) -> ExtField:
    """Construct F_{p^m}, checking the modulus is irreducible.

    With no modulus a built-in default is used (binary fields up to degree
    16 from a fixed table, other small fields by deterministic search) and
    the class of x is guaranteed primitive.
    """
    return ExtField(p, m, modulus=modulus, require_primitive=require_primitive)
