"""Matrix product codes [C_1,...,C_s]A and their certified properties.

The code of s equal-length components under an s x m matrix A is generated
by the block matrix (a_ij G_i); codewords decompose into m length-n blocks
with block j equal to sum_i a_ij c_i.  Distance bounds come in two grades:
the full-row-rank bound through the row-prefix codes of A, and the sharper
non-singular-by-columns bound, which is an equality when A is also upper
triangular.

Derived facts are recomputed, not trusted: the dual identity is checked on
both sides, and every dual-containing product construction re-runs the
explicit Hermitian containment test on its output, raising
ConsistencyError if the algebra and the matrices ever disagree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .code import BudgetError, DistanceReport, LinearCode, exact_report
from .gf import Field
from .matrix import Matrix


class ConsistencyError(RuntimeError):
    """A certified identity failed on a concrete instance."""


def _check_components(codes: Sequence[LinearCode]) -> tuple[Field, int]:
    if not codes:
        raise ValueError("at least one component code required")
    fld, n = codes[0].field, codes[0].n
    for c in codes:
        if c.field != fld or c.n != n:
            raise ValueError("components must share length and field")
    return fld, n


def matrix_product_code(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """The length n*m code generated by the blocks a_ij G_i."""
    fld, n = _check_components(codes)
    s, m = A.nrows, A.ncols
    if s != len(codes):
        raise ValueError(f"A has {s} rows but {len(codes)} components given")
    if s > m:
        raise ValueError("A must have at least as many columns as rows")
    if A.field != fld:
        raise ValueError("A must live over the component field")
    mul = fld.mul
    rows = []
    for i, code in enumerate(codes):
        arow = A.rows[i]
        for g in code.gen.rows:
            rows.append([x for a in arow for x in ((mul(a, y) for y in g) if a else (0,) * n)])
    if not rows:
        return LinearCode.zero_code(fld, n * m)
    return LinearCode.from_generator(Matrix(fld, rows, ncols=n * m))


def is_frr(A: Matrix) -> bool:
    return A.rank() == A.nrows


def is_nsc(A: Matrix) -> bool:
    """Every t x t minor taken from the first t rows is invertible, all t."""
    s, m = A.nrows, A.ncols
    if s > m:
        return False
    for t in range(1, s + 1):
        rows = tuple(range(t))
        for cols in itertools.combinations(range(m), t):
            if A.submatrix(rows, cols).det().code == 0:
                return False
    return True


def is_upper_triangular(A: Matrix) -> bool:
    return all(A.rows[i][j] == 0 for i in range(A.nrows) for j in range(min(i, A.ncols)))


def row_prefix_code(A: Matrix, k: int) -> LinearCode:
    """The length-m code spanned by the first k rows of A."""
    if not 1 <= k <= A.nrows:
        raise ValueError(f"row count {k} outside 1..{A.nrows}")
    return LinearCode.from_generator(A.take_rows(k))


def _prefix_distance(A: Matrix, k: int, budget: int) -> int:
    code = row_prefix_code(A, k)
    q = code.field.order
    if q**code.k <= budget:
        return code.min_distance_exhaustive(budget).lower
    return code.min_distance_by_supports().lower


def frr_distance_bound(
    codes: Sequence[LinearCode], dists: Sequence[int], A: Matrix, budget: int = 10**7
) -> int:
    """min over i of d_i * d(prefix_i); valid whenever A has full row rank.

    Component distances must be exact.  Prefix distances are exact too:
    enumerated over q^k messages when affordable, otherwise by the support
    scan (A has few columns, so that one always applies).
    """
    if not is_frr(A):
        raise ValueError("bound requires a full-row-rank matrix")
    if len(dists) != len(codes):
        raise ValueError("one exact distance per component")
    return min(d * _prefix_distance(A, k + 1, budget) for k, d in enumerate(dists))


def nsc_distance_bound(dists: Sequence[int], A: Matrix) -> tuple[int, bool]:
    """d* = min{m d_1, (m-1) d_2, ...}; exact when A is upper triangular."""
    if not is_nsc(A):
        raise ValueError("bound requires a non-singular-by-columns matrix")
    m = A.ncols
    dstar = min(d * (m - i) for i, d in enumerate(dists))
    return dstar, is_upper_triangular(A)


def product_dual(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """Dual of [C_1..C_s]A, via [C_1-dual..C_s-dual](A^-1)^T.

    Both that expression and the plain nullspace dual of the product are
    computed; disagreement would break the dual identity and raises.
    """
    if A.nrows != A.ncols:
        raise ValueError("the dual identity needs a square matrix")
    det, ainv = A.det_inverse()
    if ainv is None:
        raise ValueError("the dual identity needs a nonsingular matrix")
    lhs = matrix_product_code(codes, A).euclidean_dual()
    rhs = matrix_product_code([c.euclidean_dual() for c in codes], ainv.transpose())
    if lhs != rhs:
        raise ConsistencyError("dual identity failed on this instance")
    return lhs


@dataclass(frozen=True)
class GramCheck:
    """Both sufficient conditions for products to stay dual-containing."""

    diagonal_condition: bool
    scalar_condition: bool
    scalar: int | None  # code of a with conj-inverse-transpose = a * A

    def to_dict(self) -> dict:
        return {
            "diagonal_condition": self.diagonal_condition,
            "scalar_condition": self.scalar_condition,
            "scalar": self.scalar,
        }


def hermitian_gram_check(A: Matrix) -> GramCheck:
    """Tests conj(A) A^T diagonal-invertible, and conj-inverse-transpose = a*A.

    A singular matrix cannot satisfy either condition: its conjugate Gram is
    singular (so never invertible-diagonal) and the scalar test has no
    inverse to compare against, which reports as a plain False."""
    if A.nrows != A.ncols:
        raise ValueError("square matrices only")
    fld = A.field
    s = A.nrows
    gram = A.conjugate() @ A.transpose()
    diagonal = all(
        (gram.rows[i][j] == 0) == (i != j) for i in range(s) for j in range(s)
    )
    det, inv_conj = A.conjugate().det_inverse()
    scalar_ok, scalar = False, None
    if inv_conj is not None:
        target = inv_conj.transpose()
        pos = next(
            ((i, j) for i in range(s) for j in range(s) if A.rows[i][j]), None
        )
        if pos is not None:
            i, j = pos
            a = fld.div(target.rows[i][j], A.rows[i][j])
            if a != 0 and target == A.scale(a):
                scalar_ok, scalar = True, a
    return GramCheck(diagonal, scalar_ok, scalar)


def dual_containing_product(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """Product of Hermitian dual-containing components under a matrix whose
    conjugate Gram is diagonal; the output is re-checked, not assumed."""
    check = hermitian_gram_check(A)
    if not check.diagonal_condition:
        raise ValueError("conj(A) A^T is not an invertible diagonal matrix")
    for i, c in enumerate(codes):
        if not c.is_hermitian_dual_containing():
            raise ValueError(f"component {i} is not Hermitian dual-containing")
    product = matrix_product_code(codes, A)
    if not product.is_hermitian_dual_containing():
        raise ConsistencyError("product lost dual containment despite the Gram condition")
    return product


def nested_chain_product(codes: Sequence[LinearCode], A: Matrix) -> LinearCode:
    """Product of a nested chain of dual-containing components under an NSC
    upper-triangular matrix.  The chain may ascend or descend; containment
    of consecutive components is verified either way, and the product is
    re-checked explicitly."""
    if A.nrows != A.ncols or A.nrows != len(codes):
        raise ValueError("need a square matrix matching the component count")
    if not is_upper_triangular(A):
        raise ValueError("matrix is not upper triangular")
    if not is_nsc(A):
        raise ValueError("matrix is not non-singular by columns")
    ascending = all(a.is_subcode_of(b) for a, b in zip(codes, codes[1:]))
    descending = all(b.is_subcode_of(a) for a, b in zip(codes, codes[1:]))
    if not (ascending or descending):
        raise ValueError("components do not form a containment chain")
    for i, c in enumerate(codes):
        if not c.is_hermitian_dual_containing():
            raise ValueError(f"component {i} is not Hermitian dual-containing")
    product = matrix_product_code(codes, A)
    if not product.is_hermitian_dual_containing():
        raise ConsistencyError("chain product lost dual containment")
    return product


def character_matrix(fld: Field, r: int) -> Matrix:
    """Character table of the r-fold product of the order-2 group, with
    entries +-1 in the given odd-characteristic field.

    Rows are group elements and columns characters, both in binary counting
    order; the (i, j) entry is -1 to the number of positions where the
    bit-reversal of i meets j.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    if fld.p == 2:
        raise ValueError("characteristic 2 collapses the two signs")
    s = 1 << r
    minus = fld.neg(1)

    def rev(i: int) -> int:
        return int(format(i, f"0{r}b")[::-1], 2)

    rows = [
        [minus if (rev(i) & j).bit_count() % 2 else 1 for j in range(s)] for i in range(s)
    ]
    return Matrix(fld, rows, ncols=s)


def character_product(codes: Sequence[LinearCode]) -> LinearCode:
    """Dual-containing product of four components under the 4 x 4 character
    table; the workhorse behind the quadrupled-length constructions."""
    if len(codes) != 4:
        raise ValueError("exactly four components")
    fld, _ = _check_components(codes)
    if (fld.order - 1) % 4 != 0:
        raise ValueError("field order must be 1 mod 4")
    return dual_containing_product(codes, character_matrix(fld, 2))


def product_distance_report(
    codes: Sequence[LinearCode],
    dists: Sequence[int],
    A: Matrix,
    budget: int = 10**7,
) -> DistanceReport:
    """Best certified distance statement for [C_1..C_s]A from exact
    component distances: the NSC equality when it applies, else the NSC
    bound, else the full-row-rank bound."""
    n = codes[0].n * A.ncols
    k = sum(c.k for c in codes)
    singleton = n - k + 1
    if is_nsc(A):
        dstar, exact = nsc_distance_bound(dists, A)
        if exact:
            return exact_report(dstar, "product-bound")
        return DistanceReport(dstar, singleton, "product-bound", "singleton")
    lower = frr_distance_bound(codes, dists, A, budget)
    return DistanceReport(lower, singleton, "product-bound", "singleton")
