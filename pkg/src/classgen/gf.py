"""Exact arithmetic in GF(p^k) with a deterministic construction.

A field element is stored as an integer code in [0, q).  The element whose
coefficient vector in the polynomial basis is (c0, ..., c_{k-1}), constant
term first, has code c0 + c1*p + ... + c_{k-1}*p**(k-1).

Construction is canonical: the modulus is the lexicographically least monic
irreducible polynomial of degree k over GF(p), and xi is the
lexicographically least element of multiplicative order exactly q - 1.
Both comparisons read coefficient tuples constant term first.  Two calls of
field_create with equal (p, k) therefore return identical contexts.

Small fields (q <= TABLE_LIMIT) lazily build q x q lookup tables; these only
speed things up and never change results.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

DEFAULT_FIELD_CAP = 2**20
TABLE_LIMIT = 2048


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# Polynomials over GF(p) are lists of residues, constant term first.

def _poly_mulmod(a: list[int], b: list[int], mod_low: tuple[int, ...], p: int, k: int) -> list[int]:
    """a * b reduced by the monic modulus whose low coefficients are mod_low."""
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            base = d - k
            for i in range(k):
                if mod_low[i]:
                    prod[base + i] = (prod[base + i] - c * mod_low[i]) % p
    return prod[:k]


def _poly_rem(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f by the monic polynomial g (both constant term first)."""
    r = list(f)
    dg = len(g) - 1
    for d in range(len(r) - 1, dg - 1, -1):
        c = r[d]
        if c:
            r[d] = 0
            for i in range(dg):
                r[d - dg + i] = (r[d - dg + i] - c * g[i]) % p
    return r[:dg]


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Trial division of the monic polynomial f by all monic g of degree <= deg(f)/2."""
    k = len(f) - 1
    fl = list(f)
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if not any(_poly_rem(fl, g, p)):
                return False
    return True


def _least_irreducible(p: int, k: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=k):
        cand = (*low, 1)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldCtx:
    """One finite field GF(p^k).  Construct through field_create only."""

    __slots__ = (
        "p", "k", "q", "modulus", "xi_code",
        "_add_table", "_mul_table", "_inv_table", "_exp", "_log",
        "_digits", "_digit_bytes",
    )

    def __init__(self, p: int, k: int, modulus: tuple[int, ...], xi_code: int):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.xi_code = xi_code
        self._add_table = None
        self._mul_table = None
        self._inv_table = None
        self._exp = None
        self._log = None
        self._digits = None
        self._digit_bytes = None

    # -- identity and comparison ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldCtx(GF({self.q}), modulus {poly_string(self.modulus)})"

    # -- element constructors ----------------------------------------------

    def code_to_coeffs(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return tuple(out)

    def coeffs_to_code(self, coeffs) -> int:
        if len(coeffs) > self.k:
            raise ValueError(f"coefficient vector longer than extension degree {self.k}")
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + (int(c) % self.p)
        return code

    def from_code(self, code: int) -> "FieldElem":
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} out of range [0, {self.q})")
        return FieldElem(self, int(code))

    def elem(self, x) -> "FieldElem":
        """Coerce x to a field element.

        Integers embed through the prime subfield (x mod p); sequences are
        read as coefficient vectors, constant term first.
        """
        if isinstance(x, FieldElem):
            if x.ctx != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, (int, np.integer)):
            return FieldElem(self, int(x) % self.p)
        if isinstance(x, (list, tuple)):
            return FieldElem(self, self.coeffs_to_code(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to a field element")

    def elements(self):
        """All field elements in code order."""
        for c in range(self.q):
            yield FieldElem(self, c)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def xi(self) -> "FieldElem":
        return FieldElem(self, self.xi_code)

    # -- arithmetic on codes -------------------------------------------------

    def add_code(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return int(self._add_table[a, b])
        p = self.p
        shift, out = 1, 0
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg_code(self, a: int) -> int:
        p = self.p
        shift, out = 1, 0
        for _ in range(self.k):
            out += ((-(a % p)) % p) * shift
            a //= p
            shift *= p
        return out

    def sub_code(self, a: int, b: int) -> int:
        return self.add_code(a, self.neg_code(b))

    def mul_code(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[a, b])
        return self._mul_code_poly(a, b)

    def _mul_code_poly(self, a: int, b: int) -> int:
        pa = list(self.code_to_coeffs(a))
        pb = list(self.code_to_coeffs(b))
        return self.coeffs_to_code(_poly_mulmod(pa, pb, self.modulus[: self.k], self.p, self.k))

    def inv_code(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by the zero field element")
        if self._inv_table is not None:
            return int(self._inv_table[a])
        return self.pow_code(a, self.q - 2)

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv_code(a)
            e = -e
        if a == 0:
            return 1 if e == 0 else 0
        e %= self.q - 1
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul_code(out, base)
            base = self.mul_code(base, base)
            e >>= 1
        return out

    def subfield_order(self) -> int:
        """q0 with q = q0**2, for the conjugation x -> x**q0."""
        if self.k % 2:
            raise ValueError(f"GF({self.q}) is not a quadratic extension")
        return self.p ** (self.k // 2)

    def frobenius_code(self, a: int) -> int:
        return self.pow_code(a, self.subfield_order())

    # -- lookup tables ---------------------------------------------------------

    def tables_supported(self) -> bool:
        return self.q <= TABLE_LIMIT

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables as (q, q) uint16 arrays.  Only for q <= TABLE_LIMIT."""
        if self._mul_table is None:
            if not self.tables_supported():
                raise ValueError(
                    f"GF({self.q}) exceeds the lookup-table limit {TABLE_LIMIT}")
            self._build_tables()
        return self._add_table, self._mul_table

    def _digit_matrix(self) -> np.ndarray:
        if self._digits is None:
            codes = np.arange(self.q, dtype=np.int64)
            digits = np.empty((self.q, self.k), dtype=np.int64)
            for i in range(self.k):
                digits[:, i] = codes % self.p
                codes //= self.p
            self._digits = digits
        return self._digits

    def _build_tables(self) -> None:
        q, p, k = self.q, self.p, self.k
        digits = self._digit_matrix()
        powers = p ** np.arange(k, dtype=np.int64)
        add = np.empty((q, q), dtype=np.uint16)
        step = max(1, (1 << 22) // (q * k))
        for lo in range(0, q, step):
            s = (digits[lo:lo + step, None, :] + digits[None, :, :]) % p
            add[lo:lo + step] = (s @ powers).astype(np.uint16)
        exp = np.empty(q - 1, dtype=np.int64)
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            cur = self._mul_code_poly(cur, self.xi_code)
        if cur != 1:
            raise AssertionError("xi does not have multiplicative order q - 1")
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        mul = exp[(log[:, None] + log[None, :]) % (q - 1)].astype(np.uint16)
        mul[0, :] = 0
        mul[:, 0] = 0
        inv = np.zeros(q, dtype=np.uint16)
        inv[exp] = exp[(q - 1 - log[exp]) % (q - 1)].astype(np.uint16)
        self._exp = exp
        self._log = log
        self._add_table = add
        self._mul_table = mul
        self._inv_table = inv

    def dlog_code(self, code: int) -> int:
        """Discrete log base xi; code must be nonzero."""
        if code == 0:
            raise ZeroDivisionError("zero has no discrete logarithm")
        self.tables()
        return int(self._log[code])

    def digit_bytes_table(self) -> np.ndarray:
        """(q, k*w) uint8 array; row c holds the canonical digit bytes of code c."""
        if self._digit_bytes is None:
            w = digit_width(self.p)
            digits = self._digit_matrix()
            if w == 1:
                db = digits.astype(np.uint8)
            elif w == 2:
                db = np.ascontiguousarray(digits.astype("<u2")).view(np.uint8)
                db = db.reshape(self.q, 2 * self.k)
            else:
                raise ValueError(f"digit width {w} unsupported for batched encoding")
            self._digit_bytes = np.ascontiguousarray(db)
        return self._digit_bytes


def digit_width(p: int) -> int:
    """Bytes needed to hold one base-p digit."""
    return ((p - 1).bit_length() + 7) // 8 if p > 2 else 1


class FieldElem:
    """An element of a FieldCtx.  Immutable; supports field arithmetic operators."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.code_to_coeffs(self.code)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ValueError("mixed fields in arithmetic")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.ctx.p
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add_code(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub_code(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub_code(c, self.code))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg_code(self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul_code(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul_code(self.code, self.ctx.inv_code(c)))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul_code(c, self.ctx.inv_code(self.code)))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow_code(self.code, int(e)))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, (int, np.integer)):
            return self.code == int(other) % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.q, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FieldElem(GF({self.ctx.q}), {list(self.coeffs)})"


def _least_primitive(ctx: FieldCtx) -> int:
    """Code of the lexicographically least element of order exactly q - 1."""
    q = ctx.q
    checks = [(q - 1) // r for r in _prime_factors(q - 1)]
    for coeffs in itertools.product(range(ctx.p), repeat=ctx.k):
        code = ctx.coeffs_to_code(coeffs)
        if code == 0:
            continue
        if all(ctx.pow_code(code, e) != 1 for e in checks):
            return code
    raise AssertionError(f"no primitive element found in GF({q})")


@functools.lru_cache(maxsize=None)
def _field_create_cached(p: int, k: int) -> FieldCtx:
    modulus = _least_irreducible(p, k)
    ctx = FieldCtx(p, k, modulus, 0)
    ctx.xi_code = _least_primitive(ctx)
    return ctx


def field_create(p: int, k: int, cap: int = DEFAULT_FIELD_CAP) -> FieldCtx:
    """Create GF(p^k) deterministically.

    Raises ValueError if p is not prime, k < 1, or p**k exceeds cap.
    Validation runs before the cache so the outcome never depends on
    which fields were built earlier.
    """
    if not isinstance(p, int) or not isinstance(k, int):
        raise ValueError("p and k must be integers")
    if not _is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree k = {k} must be at least 1")
    q = p**k
    if q > cap:
        raise ValueError(f"field cardinality {q} exceeds the cap {cap}")
    return _field_create_cached(p, k)


def frobenius(a: FieldElem, q0: int | None = None) -> FieldElem:
    """The conjugation x -> x**q0 on a quadratic extension GF(q0^2).

    With q0 omitted it is inferred from the field.  Applying it twice gives
    the identity, and it fixes exactly the subfield GF(q0).
    """
    ctx = a.ctx
    want = ctx.subfield_order()
    if q0 is not None and q0 != want:
        raise ValueError(f"GF({ctx.q}) is not a quadratic extension of GF({q0})")
    return FieldElem(ctx, ctx.frobenius_code(a.code))


def poly_string(coeffs) -> str:
    """Readable form of a coefficient vector (constant term first), e.g. t^2 + 1."""
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            var = "t" if d == 1 else f"t^{d}"
            terms.append(var if c == 1 else f"{c}*{var}")
    return " + ".join(terms) if terms else "0"


def field_to_json(ctx: FieldCtx) -> dict:
    """JSON-ready description: p, k, modulus and xi as coefficient lists."""
    return {
        "p": ctx.p,
        "k": ctx.k,
        "modulus": list(ctx.modulus),
        "xi": list(ctx.xi.coeffs),
    }
