"""Linear codes over a Field: duals, containment, distance oracles.

A code is stored as its reduced row-echelon generator matrix, so two equal
codes compare equal as objects and serialization is reproducible.  Distance
facts always travel with a provenance tag; nothing here ever reports a
distance it did not compute or certify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import Field
from .matrix import Matrix

DEFAULT_ENUM_BUDGET = 10**7
DEFAULT_SUBSET_BUDGET = 10**6


class BudgetError(RuntimeError):
    """An exhaustive check would exceed its enumeration budget."""


@dataclass(frozen=True)
class DistanceReport:
    """Bounds on the minimum Hamming distance, each with provenance."""

    lower: int
    upper: int
    lower_provenance: str
    upper_provenance: str

    def __post_init__(self):
        if not 1 <= self.lower <= self.upper:
            raise ValueError(f"bad distance bounds {self.lower}..{self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_dict(self) -> dict:
        d = {
            "lower": self.lower,
            "upper": self.upper,
            "provenance": {"lower": self.lower_provenance, "upper": self.upper_provenance},
        }
        if self.exact:
            d["exact"] = True
        return d


def exact_report(d: int, provenance: str) -> DistanceReport:
    return DistanceReport(d, d, provenance, provenance)


class LinearCode:
    __slots__ = ("field", "n", "k", "gen")

    def __init__(self, fld: Field, n: int, gen: Matrix):
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", gen.nrows)
        object.__setattr__(self, "gen", gen)

    def __setattr__(self, *a):
        raise AttributeError("LinearCode is immutable")

    @classmethod
    def from_generator(cls, rows: Matrix) -> "LinearCode":
        """Canonicalize any spanning set; dependent and zero rows are fine."""
        R, rank, _ = rows.rref()
        return cls(rows.field, rows.ncols, R.take_rows(rank))

    @classmethod
    def full_space(cls, fld: Field, n: int) -> "LinearCode":
        return cls(fld, n, Matrix.identity(fld, n))

    @classmethod
    def zero_code(cls, fld: Field, n: int) -> "LinearCode":
        return cls(fld, n, Matrix.zeros(fld, 0, n))

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen == other.gen
        )

    def __hash__(self):
        return hash((self.field, self.n, self.gen))

    def __repr__(self):
        return f"[{self.n},{self.k}] code over {self.field}"

    def params(self) -> tuple[int, int]:
        return (self.n, self.k)

    def to_dict(self, distance: "DistanceReport | None" = None) -> dict:
        out = {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "gen": self.gen.to_dict(),
        }
        if distance is not None:
            out["d"] = distance.to_dict()
        return out

    # -- membership and containment --

    def contains_word(self, word) -> bool:
        """Membership for a word given as element codes (the Matrix convention)."""
        codes = [x.code if hasattr(x, "code") else x for x in word]
        if len(codes) != self.n:
            raise ValueError("word length mismatch")
        if any(not 0 <= x < self.field.order for x in codes):
            raise ValueError("word entries are not element codes")
        if self.k == 0:
            return all(x == 0 for x in codes)
        return self.gen.row_space_contains(codes)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if self.field != other.field or self.n != other.n:
            raise ValueError("codes live in different spaces")
        if self.k > other.k:
            return False
        if self.k == 0:
            return True
        return other.gen.vstack(self.gen).rank() == other.k

    # -- duals --

    def euclidean_dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode.full_space(self.field, self.n)
        return LinearCode.from_generator(self.gen.nullspace())

    def conjugate_code(self) -> "LinearCode":
        """Entrywise x -> x^l image; linear because conjugation is additive."""
        return LinearCode.from_generator(self.gen.conjugate())

    def hermitian_dual(self) -> "LinearCode":
        if self.k == 0:
            return LinearCode.full_space(self.field, self.n)
        return LinearCode.from_generator(self.gen.conjugate().nullspace())

    def is_hermitian_dual_containing(self) -> bool:
        self.field.subfield_order  # raises unless the order is a square
        if 2 * self.k < self.n:
            return False
        return self.hermitian_dual().is_subcode_of(self)

    # -- distance oracles --

    def codewords(self):
        """All codewords, zero included.  Only sane for tiny codes."""
        f = self.field
        add, mul = f.add, f.mul
        words = [[0] * self.n]
        for row in self.gen.rows:
            scaled = {c: [mul(c, x) for x in row] for c in range(1, f.order)}
            nxt = []
            for w in words:
                nxt.append(w)
                for c in range(1, f.order):
                    s = scaled[c]
                    nxt.append([add(a, b) for a, b in zip(w, s)])
            words = nxt
        return words

    def min_distance_exhaustive(self, budget: int = DEFAULT_ENUM_BUDGET) -> DistanceReport:
        """Exact distance by enumerating all q^k - 1 nonzero messages."""
        if self.k == 0:
            raise ValueError("the zero code has no distance")
        f = self.field
        q = f.order
        if q**self.k > budget:
            raise BudgetError(f"{q}^{self.k} messages exceed budget {budget}")
        add, mul = f.add, f.mul
        n = self.n
        scaled_rows = [
            [None] + [[mul(c, x) for x in row] for c in range(1, q)] for row in self.gen.rows
        ]
        best = n + 1
        stack = [(0, [0] * n, False)]
        while stack:
            i, acc, nonzero = stack.pop()
            if i == self.k:
                if nonzero:
                    w = n - acc.count(0)
                    if w < best:
                        best = w
                continue
            stack.append((i + 1, acc, nonzero))
            for s in scaled_rows[i][1:]:
                stack.append((i + 1, [add(a, b) for a, b in zip(acc, s)], True))
        return exact_report(best, "exhaustive")

    def min_distance_by_supports(self) -> DistanceReport:
        """Exact distance for short codes via zero-support ranks.

        d = n - max(|S|) over column sets S on which some nonzero codeword
        vanishes.  The 2^n loop is independent of the field size, so this is
        the oracle of choice when q^k explodes but n is tiny.
        """
        if self.k == 0:
            raise ValueError("the zero code has no distance")
        n = self.n
        if n > 16:
            raise BudgetError(f"support enumeration over 2^{n} columns refused")
        best_zeroes = -1
        cols = list(range(n))
        for mask in range(1 << n):
            size = mask.bit_count()
            if size <= best_zeroes or size > n - 1:
                continue
            idx = [c for c in cols if mask >> c & 1]
            sub = self.gen.submatrix(tuple(range(self.k)), tuple(idx))
            if sub.rank() < self.k:
                best_zeroes = size
        if best_zeroes < 0:
            best_zeroes = 0
        return exact_report(n - best_zeroes, "exhaustive")

    def is_mds(self, max_subsets: int = DEFAULT_SUBSET_BUDGET) -> bool:
        """Certificate that d = n - k + 1.

        True iff every t-subset of columns is independent, taken on whichever
        of the generator (t = k) or the parity side (t = n - k) is smaller.
        A depth-first scan shares partial eliminations between subsets and
        aborts on the first dependency.
        """
        n, k = self.n, self.k
        if k == 0 or k == n:
            return True
        if k <= n - k:
            mat, t = self.gen, k
        else:
            mat, t = self.euclidean_dual().gen, n - k
        if math.comb(n, t) > max_subsets:
            raise BudgetError(f"C({n},{t}) column subsets exceed budget {max_subsets}")
        f = self.field
        sub, mul, div = f.sub, f.mul, f.div
        cols = [[mat.rows[i][j] for i in range(t)] for j in range(n)]

        # basis entries: (pivot_row, vector normalized to 1 at pivot)
        def reduce(vec, basis):
            v = list(vec)
            for pos, b in basis:
                c = v[pos]
                if c:
                    v = [sub(x, mul(c, y)) for x, y in zip(v, b)]
            piv = next((i for i, x in enumerate(v) if x), None)
            if piv is None:
                return None
            pv = v[piv]
            if pv != 1:
                v = [div(x, pv) for x in v]
            return piv, v

        def walk(start, basis):
            depth = len(basis)
            if depth == t:
                return True
            for j in range(start, n - (t - depth) + 1):
                entry = reduce(cols[j], basis)
                if entry is None:
                    return False
                if not walk(j + 1, basis + [entry]):
                    return False
            return True

        return walk(0, [])


def best_distance_report(
    code: LinearCode,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> DistanceReport:
    """Exact distance where a budgeted oracle applies, else certificates.

    The ladder: full message enumeration, then the short-length support scan,
    then the MDS certificate (which pins d = n - k + 1 when it fires).  A
    BudgetError propagates only when every rung is out of reach.
    """
    q = code.field.order
    if q**code.k <= enum_budget:
        return code.min_distance_exhaustive(enum_budget)
    if code.n <= 12:
        return code.min_distance_by_supports()
    if code.is_mds(subset_budget):
        return exact_report(code.n - code.k + 1, "mds-certificate")
    raise BudgetError(f"no exact oracle within budget for [{code.n},{code.k}] over GF({q})")
