"""Negacyclic codes of length n over GF(q): ideals of GF(q)[x]/(x^n + 1).

A code is pinned by a defining set Z of odd residues modulo 2n, closed
under multiplication by q.  Its generator polynomial is
g(x) = prod_{j in Z} (x - gamma^j) for a fixed primitive 2n-th root of
unity gamma living in GF(q^e); coset closure of Z is what makes the
coefficients land back in GF(q), and that landing is asserted rather than
assumed.  The canonical gamma comes from the canonical generator of the
extension, so every run builds the identical code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .code import LinearCode
from .gf import Field, FieldError, primitive_root_of_unity
from .matrix import Matrix


class NegacyclicError(ValueError):
    pass


# -- polynomial helpers on coefficient lists (constant term first) --


def poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(fld: Field, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = fld.add, fld.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return out


def poly_divmod(fld: Field, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = poly_trim(list(a))
    db = len(b) - 1
    inv_lead = fld.inv(b[-1])
    q = [0] * max(len(a) - db, 0)
    sub, mul = fld.sub, fld.mul
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        f = mul(a[-1], inv_lead)
        q[shift] = f
        for i, bi in enumerate(b):
            if bi:
                a[shift + i] = sub(a[shift + i], mul(f, bi))
        poly_trim(a)
    return q, a


def poly_eval(fld: Field, c: list[int], x: int) -> int:
    acc = 0
    for ci in reversed(c):
        acc = fld.add(fld.mul(acc, x), ci)
    return acc


# -- cyclotomic structure --


@dataclass(frozen=True)
class CyclotomicCoset:
    representative: int
    members: tuple[int, ...]
    modulus: int
    multiplier: int

    def __len__(self):
        return len(self.members)


def cyclotomic_coset(j: int, modulus: int, multiplier: int) -> CyclotomicCoset:
    """Orbit of j under multiplication by the multiplier, mod the modulus."""
    if math.gcd(multiplier, modulus) != 1:
        raise NegacyclicError(f"gcd({multiplier}, {modulus}) != 1")
    j %= modulus
    members = {j}
    x = j * multiplier % modulus
    while x != j:
        members.add(x)
        x = x * multiplier % modulus
    ms = tuple(sorted(members))
    return CyclotomicCoset(ms[0], ms, modulus, multiplier)


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets of odd residues mod 2n."""

    residues: tuple[int, ...]
    cosets: tuple[CyclotomicCoset, ...]
    n: int
    q: int

    def __post_init__(self):
        two_n = 2 * self.n
        seen = set(self.residues)
        if any(r % 2 == 0 for r in seen):
            raise NegacyclicError("negacyclic defining sets hold odd residues only")
        if any(r < 0 or r >= two_n for r in seen):
            raise NegacyclicError("residues out of range mod 2n")
        for r in seen:
            if r * self.q % two_n not in seen:
                raise NegacyclicError(f"residues not closed under *{self.q} mod {two_n}")

    def __len__(self):
        return len(self.residues)

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "residues": list(self.residues)}


def defining_set_from_residues(n: int, q: int, seeds) -> DefiningSet:
    two_n = 2 * n
    cosets = {}
    for j in seeds:
        c = cyclotomic_coset(j, two_n, q)
        cosets[c.representative] = c
    members: set[int] = set()
    for c in cosets.values():
        members.update(c.members)
    ordered = tuple(cosets[r] for r in sorted(cosets))
    return DefiningSet(tuple(sorted(members)), ordered, n, q)


def centered_defining_set(l: int, delta: int) -> DefiningSet:
    """Union of the cosets at t, t-2, ..., t-2*delta for n = l^2+1, t = n/2.

    Needs l = 1 mod 4 and 0 <= delta <= (l-1)/2; the cosets pair t-2i with
    t+2i, so the union has 2*delta + 1 residues.
    """
    if l % 4 != 1:
        raise NegacyclicError(f"l = {l} is not 1 mod 4")
    if not 0 <= delta <= (l - 1) // 2:
        raise NegacyclicError(f"delta = {delta} outside 0..{(l - 1) // 2}")
    n = l * l + 1
    t = n // 2
    return defining_set_from_residues(n, l * l, [t - 2 * i for i in range(delta + 1)])


def half_length_defining_set(l: int, delta: int) -> DefiningSet:
    """Union of the cosets at -1, 1, 3, ..., 2*delta-1 for n = (l^2+1)/2.

    Needs odd prime power l and 1 <= delta <= (l-1)/2; q = -1 mod 2n here,
    so each coset is a {j, -j} pair and the union has 2*delta residues.
    """
    if l % 2 == 0 or l < 3:
        raise NegacyclicError(f"l = {l} is not an odd prime power")
    if not 1 <= delta <= (l - 1) // 2:
        raise NegacyclicError(f"delta = {delta} outside 1..{(l - 1) // 2}")
    n = (l * l + 1) // 2
    return defining_set_from_residues(n, l * l, [2 * i - 1 for i in range(delta + 1)])


# -- code construction --


@dataclass(frozen=True)
class NegacyclicCode:
    code: LinearCode
    defining: DefiningSet
    genpoly: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def is_dual_containing(self) -> bool:
        """The explicit matrix check, independent of any coset argument."""
        return self.code.is_hermitian_dual_containing()

    def to_dict(self) -> dict:
        return {
            "code": self.code.to_dict(),
            "defining_set": self.defining.to_dict(),
            "genpoly": list(self.genpoly),
        }


def negacyclic_code(n: int, fld: Field, defining: DefiningSet) -> NegacyclicCode:
    """Build the code with the given defining set and verify its algebra.

    Checks performed: the generator polynomial has all coefficients fixed by
    the Frobenius x -> x^q (subfield membership), divides x^n + 1 exactly,
    and vanishes at gamma^j for exactly the j in the defining set among odd
    residues.  Any failure is an internal consistency error.
    """
    if defining.n != n or defining.q != fld.order:
        raise NegacyclicError("defining set was built for different (n, q)")
    if math.gcd(2 * n, fld.order) != 1:
        raise NegacyclicError("repeated-root case gcd(2n, q) != 1 rejected")
    if not defining.residues:
        return NegacyclicCode(LinearCode.full_space(fld, n), defining, (1,))

    emb, gamma = primitive_root_of_unity(fld, 2 * n)
    ext = emb.ext
    g = [1]
    for j in defining.residues:
        root = ext.pow(gamma, j)
        g = poly_mul(ext, g, [ext.neg(root), 1])
    # coefficients must sit in the embedded copy of GF(q)
    coeffs = []
    for c in g:
        if ext.pow(c, fld.order) != c or not emb.in_image(c):
            raise NegacyclicError("generator polynomial escaped the base field; "
                                  "the defining set cannot be coset-closed")
        coeffs.append(emb.restrict(c))

    xn_plus_1 = [1] + [0] * (n - 1) + [1]
    _, rem = poly_divmod(fld, xn_plus_1, coeffs)
    if rem:
        raise NegacyclicError("generator polynomial does not divide x^n + 1")

    g_ext = g
    for j in range(1, 2 * n, 2):
        val = poly_eval(ext, g_ext, ext.pow(gamma, j))
        if (val == 0) != (j in set(defining.residues)):
            raise NegacyclicError(f"root pattern mismatch at exponent {j}")

    deg = len(coeffs) - 1
    rows = [[0] * shift + coeffs + [0] * (n - deg - shift - 1) for shift in range(n - deg)]
    code = LinearCode.from_generator(Matrix(fld, rows, ncols=n))
    if code.k != n - len(defining):
        raise NegacyclicError("dimension disagrees with the defining set size")
    return NegacyclicCode(code, defining, tuple(coeffs))


def negacyclic_shift(fld: Field, word: list[int]) -> list[int]:
    """Cyclic shift with the wraparound entry negated."""
    return [fld.neg(word[-1])] + word[:-1]


def distance_report(nc: NegacyclicCode) -> "DistanceReport":
    """Certified distance bounds from the structure alone: the consecutive
    run bound below, the Singleton bound above.  For the centered and
    half-length families the two meet, so the report is exact without any
    codeword enumeration."""
    from .code import DistanceReport

    lo = bch_bound(nc.defining)
    hi = nc.n - nc.k + 1
    return DistanceReport(lo, hi, "bch", "singleton")


def bch_bound(defining: DefiningSet) -> int:
    """1 + the longest run of defining residues in step-2 progression.

    Odd residues mod 2n form a single cycle under +2 (wrapping 2n-1 -> 1),
    so this is a longest-circular-run scan; it certifies a distance lower
    bound for the code.
    """
    n = defining.n
    if not defining.residues:
        return 1
    positions = sorted((r - 1) // 2 for r in defining.residues)
    if len(positions) == n:
        return n + 1
    present = set(positions)
    best = 0
    for p in positions:
        if (p - 1) % n in present:
            continue  # not a run start
        length = 1
        x = (p + 1) % n
        while x in present:
            length += 1
            x = (x + 1) % n
        best = max(best, length)
    return best + 1
