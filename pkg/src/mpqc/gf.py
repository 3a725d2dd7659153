"""Exact arithmetic in GF(p^m).

Elements are represented as integer codes in [0, p^m): the base-p digits of
a code are the coefficients of the element in the polynomial basis, constant
term first.  Each field carries exp/log tables over a canonical generator of
the multiplicative group plus a Zech logarithm table, so that addition,
multiplication and inversion are all O(1) table lookups.

The modulus is pinned deterministically: among all monic irreducible
polynomials of degree m over GF(p), the one whose non-leading coefficient
vector encodes the smallest integer (constant term = least significant
digit) is chosen.  Two processes therefore always agree on every element
code.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator, Sequence

DEFAULT_ORDER_CAP = 2**20


class FieldError(ValueError):
    """Bad field parameters or illegal element operation."""


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
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


def split_prime_power(n: int) -> tuple[int, int]:
    """Write n = p^a with p prime, or raise FieldError."""
    if n < 2:
        raise FieldError(f"{n} is not a prime power")
    for p in range(2, n + 1):
        if p * p > n:
            p = n
        if n % p == 0:
            a = 0
            m = n
            while m % p == 0:
                m //= p
                a += 1
            if m != 1 or not is_prime(p):
                raise FieldError(f"{n} is not a prime power")
            return p, a
    raise FieldError(f"{n} is not a prime power")


# ---------------------------------------------------------------------------
# polynomial helpers over GF(p), coefficients as plain ints mod p,
# constant term first.  Only what the modulus search needs.


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_divmod(prod, mod, p)[1]


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    _poly_trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        f = a[-1] * inv_lead % p
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        _poly_trim(a)
    return q, a


def _poly_eval(c: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for ci in reversed(c):
        acc = (acc * x + ci) % p
    return acc


def _is_irreducible(c: list[int], p: int) -> bool:
    """Monic poly over GF(p): no roots, then trial division by all monic
    polynomials of degree 2..deg/2 (only reachable factor degrees)."""
    deg = len(c) - 1
    if deg == 1:
        return True
    for x in range(p):
        if _poly_eval(c, x, p) == 0:
            return False
    for fdeg in range(2, deg // 2 + 1):
        for enc in range(p**fdeg):
            div = _decode_coeffs(enc, p, fdeg) + [1]
            if not _poly_divmod(c, div, p)[1]:
                return False
    return True


def _decode_coeffs(code: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def _encode_coeffs(coeffs: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c % p
    return code


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Canonical monic irreducible of degree m over GF(p).

    Candidates are scanned in increasing order of the integer encoded by the
    m non-leading coefficients (constant term least significant), i.e. x^2,
    x^2+1, x^2+2, ..., x^2+x, ...  The first irreducible wins.
    """
    if m == 1:
        return (0, 1)
    for enc in range(p**m):
        cand = _decode_coeffs(enc, p, m) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible of degree {m} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------


class Field:
    """GF(p^m) with table-backed arithmetic on integer element codes."""

    def __init__(self, p: int, m: int, order_cap: int = DEFAULT_ORDER_CAP):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree {m} must be >= 1")
        order = p**m
        if order > order_cap:
            raise FieldError(f"field order {order} exceeds cap {order_cap}")
        self.p = p
        self.m = m
        self.order = order
        self.modulus: tuple[int, ...] = smallest_irreducible(p, m)
        self._xpow = self._reduction_table()
        self.generator: int = self._find_generator()
        self._build_tables()
        self._conj_table: list[int] | None = None

    # -- construction internals --

    def _reduction_table(self) -> list[list[int]]:
        # coefficient vectors of x^m .. x^(2m-2) reduced mod the modulus
        p, m = self.p, self.m
        mod = list(self.modulus)
        table = []
        cur = [(-c) % p for c in mod[:m]]  # x^m = -(mod - x^m)
        table.append(list(cur))
        for _ in range(m - 2):
            cur = [0] + cur
            if len(cur) > m:
                lead = cur.pop()
                cur = [(ci + lead * ri) % p for ci, ri in zip(cur, table[0])]
            table.append(list(cur))
        return table

    def _mul_codes_raw(self, a: int, b: int) -> int:
        # table-free multiply, used only while bootstrapping the tables
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        av = _decode_coeffs(a, p, m)
        bv = _decode_coeffs(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(av):
            if ai:
                for j, bj in enumerate(bv):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        acc = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                red = self._xpow[k - m]
                acc = [(x + c * r) % p for x, r in zip(acc, red)]
        return _encode_coeffs(acc, p)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_codes_raw(r, a)
            a = self._mul_codes_raw(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        q = self.order
        if q == 2:
            return 1
        checks = [(q - 1) // r for r in prime_factors(q - 1)]
        for g in range(2, q):
            if all(self._pow_raw(g, e) != 1 for e in checks):
                return g
        raise FieldError("no generator found")  # unreachable for true fields

    def _build_tables(self):
        q = self.order
        exp = [1] * (2 * q)
        log = [-1] * q
        g = self.generator
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_codes_raw(v, g)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
        p = self.p
        zech = [-1] * (q - 1)
        for k in range(q - 1):
            e = exp[k]
            c0 = e % p
            s = e - c0 + (c0 + 1) % p
            zech[k] = log[s] if s else -1
        self._exp = exp
        self._log = log
        self._zech = zech
        self._neg_shift = (q - 1) // 2 if p != 2 else 0

    # -- identity-ish --

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element codecs --

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_decode_coeffs(a, self.p, self.m))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m and any(c % self.p for c in coeffs[self.m :]):
            raise FieldError("coefficient vector longer than extension degree")
        return _encode_coeffs(list(coeffs[: self.m]) + [0] * (self.m - len(coeffs)), self.p)

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p if self.m == 1 else self._int_code(value))
        return FieldElement(self, self.from_coeffs(value))

    def _int_code(self, value: int) -> int:
        # integers embed through the prime subfield
        return value % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    # -- arithmetic on codes --

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la, lb = log[a], log[b]
        if la > lb:
            la, lb = lb, la
        z = self._zech[lb - la]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp[self._log[a] + self._neg_shift]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        return self._exp[self.order - 1 - self._log[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise FieldError("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.order - 1]

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents invert first."""
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # -- conjugation x -> x^l for q = l^2 --

    @property
    def has_square_order(self) -> bool:
        return self.m % 2 == 0

    @property
    def subfield_order(self) -> int:
        if not self.has_square_order:
            raise FieldError(f"order {self.order} is not a perfect square")
        return self.p ** (self.m // 2)

    def conj(self, a: int) -> int:
        """a^l, the involution fixing the index-2 subfield GF(l)."""
        if self._conj_table is None:
            l = self.subfield_order
            self._conj_table = [self.pow(x, l) for x in range(self.order)]
        return self._conj_table[a]

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.order - 1) // math.gcd(self._log[a], self.order - 1)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}


@functools.lru_cache(maxsize=None)
def field(p: int, m: int = 1) -> Field:
    """Shared, cached field instances (fields are immutable)."""
    return Field(p, m)


def square_field(l: int) -> Field:
    """GF(l^2) for a prime power l, the home of the Hermitian inner product."""
    p, a = split_prime_power(l)
    return field(p, 2 * a)


class FieldElement:
    """A field element bound to its field; cheap immutable wrapper."""

    __slots__ = ("field", "code")

    def __init__(self, fld: Field, code: int):
        if not 0 <= code < fld.order:
            raise FieldError(f"code {code} out of range for {fld}")
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "code", code)

    def __setattr__(self, *a):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands from different fields")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __repr__(self):
        return f"{self.field}:{self.code}"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.code))

    def __bool__(self):
        return self.code != 0

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, b))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._coerce(other), self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def conj(self) -> "FieldElement":
        return FieldElement(self.field, self.field.conj(self.code))

    def to_list(self) -> list[int]:
        return list(self.coeffs)


class SubfieldEmbedding:
    """Field homomorphism GF(q) -> GF(q^e) with an explicit preimage table.

    The canonical basis element x of the base field is sent to the smallest
    (by code) root of the base modulus inside the extension, which pins one
    embedding among the m conjugate choices.
    """

    def __init__(self, base: Field, ext: Field):
        if ext.p != base.p or ext.m % base.m != 0:
            raise FieldError(f"{ext} is not an extension of {base}")
        self.base = base
        self.ext = ext
        self.degree = ext.m // base.m
        root = self._modulus_root()
        self._root = root
        img = [0] * base.order
        rp = [1]
        for _ in range(base.m - 1):
            rp.append(ext.mul(rp[-1], root))
        for a in range(base.order):
            acc = 0
            for c, r in zip(base.coeffs(a), rp):
                acc = ext.add(acc, ext.mul(c, r))
            img[a] = acc
        self._img = img
        self._pre = {v: a for a, v in enumerate(img)}
        if len(self._pre) != base.order:
            raise FieldError("embedding is not injective")  # would mean a broken modulus

    def _modulus_root(self) -> int:
        base, ext = self.base, self.ext
        if base.m == 1:
            return 0  # degenerate modulus "x"; constants embed as themselves
        if base.m == ext.m:
            return base.from_coeffs([0, 1])
        q = base.order
        step = (ext.order - 1) // (q - 1)
        mod = [c % base.p for c in base.modulus]  # prime-subfield constants share codes
        roots = []
        # the subfield of order q is {0} plus the order-(q-1) subgroup
        for j in range(q - 1):
            x = ext._exp[j * step % (ext.order - 1)]
            acc = 0
            for c in reversed(mod):
                acc = ext.add(ext.mul(acc, x), c)
            if acc == 0:
                roots.append(x)
        if not roots:
            raise FieldError("base modulus has no root in extension")
        return min(roots)

    @property
    def generator_image(self) -> int:
        return self._img[self.base.generator]

    def embed(self, a: int) -> int:
        return self._img[a]

    def in_image(self, b: int) -> bool:
        # Frobenius fixation b^q == b is the subfield membership test;
        # the table lookup must agree with it.
        fixed = self.ext.pow(b, self.base.order) == b
        tabled = b in self._pre
        if fixed != tabled:
            raise FieldError("subfield membership tables are inconsistent")
        return tabled

    def restrict(self, b: int) -> int:
        if not self.in_image(b):
            raise FieldError("element is not in the embedded subfield")
        return self._pre[b]


def multiplicative_order(a: int, n: int) -> int:
    """Order of a modulo n; requires gcd(a, n) = 1."""
    import math

    if math.gcd(a, n) != 1:
        raise FieldError(f"{a} is not invertible modulo {n}")
    e = 1
    v = a % n
    while v != 1:
        v = v * a % n
        e += 1
    return e


def primitive_root_of_unity(
    base: Field, n: int, order_cap: int = DEFAULT_ORDER_CAP
) -> tuple[SubfieldEmbedding, int]:
    """Embedding of GF(q) into the smallest GF(q^e) containing an element of
    multiplicative order exactly n, together with that element.

    gamma is taken as g^((q^e - 1)/n) for the canonical generator g of the
    extension, so repeated calls agree.
    """
    import math

    q = base.order
    if math.gcd(n, q) != 1:
        raise FieldError(f"gcd({n}, {q}) != 1: no primitive {n}-th root exists")
    e = multiplicative_order(q, n)
    if q**e > order_cap:
        raise FieldError(f"extension order {q}^{e} exceeds cap {order_cap}")
    ext = field(base.p, base.m * e)
    emb = SubfieldEmbedding(base, ext)
    gamma = ext.pow(ext.generator, (ext.order - 1) // n)
    return emb, gamma
