"""Dense exact linear algebra over a Field.

Matrices are immutable grids of element codes.  Everything is plain
Gaussian elimination with first-nonzero pivoting; arithmetic is exact, so
no pivot strategy beyond that is needed.  Zero-row and zero-column shapes
are legal everywhere (duals of full spaces come out as 0 x n matrices).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .gf import Field, FieldElement


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, fld: Field, rows: Iterable[Sequence[int]], ncols: int | None = None):
        grid = tuple(tuple(r) for r in rows)
        if grid:
            ncols = len(grid[0])
            if any(len(r) != ncols for r in grid):
                raise ValueError("ragged rows")
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        q = fld.order
        for r in grid:
            for x in r:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} is not an element code of {fld}")
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "nrows", len(grid))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", grid)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    # -- constructors --

    @classmethod
    def from_elements(cls, fld: Field, rows: Iterable[Sequence]) -> "Matrix":
        conv = []
        for r in rows:
            conv.append([fld.element(x).code for x in r])
        return cls(fld, conv) if conv else cls(fld, [], ncols=0)

    @classmethod
    def identity(cls, fld: Field, n: int) -> "Matrix":
        return cls(fld, [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, fld: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(fld, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    # -- basics --

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}: {body})"

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_dict(self) -> dict:
        f = self.field
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[list(f.coeffs(x)) for x in r] for r in self.rows],
        }

    # -- shape surgery --

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        """Minor on strictly increasing 0-based index sets."""
        for name, idx, bound in (("row", row_idx, self.nrows), ("column", col_idx, self.ncols)):
            if any(i < 0 or i >= bound for i in idx):
                raise IndexError(f"{name} index out of range")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"{name} indices must be strictly increasing")
        return Matrix(
            self.field,
            [[self.rows[i][j] for j in col_idx] for i in row_idx],
            ncols=len(col_idx),
        )

    def take_rows(self, count: int) -> "Matrix":
        return Matrix(self.field, self.rows[:count], ncols=self.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or other.ncols != self.ncols:
            raise ValueError("stacking shape/field mismatch")
        return Matrix(self.field, self.rows + other.rows, ncols=self.ncols)

    def hconcat(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or other.nrows != self.nrows:
            raise ValueError("stacking shape/field mismatch")
        return Matrix(
            self.field,
            [a + b for a, b in zip(self.rows, other.rows)],
            ncols=self.ncols + other.ncols,
        )

    # -- entrywise maps --

    def conjugate(self) -> "Matrix":
        """Entrywise x -> x^l over GF(l^2)."""
        conj = self.field.conj
        return Matrix(self.field, [[conj(x) for x in r] for r in self.rows], ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        code = self.field.element(c).code
        mul = self.field.mul
        return Matrix(self.field, [[mul(code, x) for x in r] for r in self.rows], ncols=self.ncols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or other.shape != self.shape:
            raise ValueError("addition shape/field mismatch")
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.field != self.field or self.ncols != other.nrows:
            raise ValueError("product shape/field mismatch")
        f = self.field
        add, mul = f.add, f.mul
        bt = [[other.rows[k][j] for k in range(other.nrows)] for j in range(other.ncols)]
        out = []
        for r in self.rows:
            orow = []
            for col in bt:
                acc = 0
                for a, b in zip(r, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                orow.append(acc)
            out.append(orow)
        return Matrix(f, out, ncols=other.ncols)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    # -- elimination --

    def rref(self) -> tuple["Matrix", int, tuple[int, ...]]:
        """Reduced row-echelon form, rank and pivot columns."""
        f = self.field
        add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
        rows = [list(r) for r in self.rows]
        nr, nc = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            pr = next((i for i in range(r, nr) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            piv = rows[r][c]
            if piv != 1:
                pinv = inv(piv)
                rows[r] = [mul(pinv, x) for x in rows[r]]
            src = rows[r]
            for i in range(nr):
                if i == r:
                    continue
                fct = rows[i][c]
                if fct:
                    nf = neg(fct)
                    dst = rows[i]
                    rows[i] = [add(d, mul(nf, s)) for d, s in zip(dst, src)]
            pivots.append(c)
            r += 1
        return Matrix(f, rows, ncols=nc), r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self) -> "Matrix":
        """Rows span {x : self @ x^T = 0}; comes out with ncols(self) columns."""
        R, rank, pivots = self.rref()
        f = self.field
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[r][fc])
            basis.append(v)
        return Matrix(f, basis, ncols=self.ncols)

    def det_inverse(self) -> tuple[FieldElement, "Matrix | None"]:
        """Determinant and inverse; inverse is None exactly when singular."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        n = self.nrows
        add, mul, neg, inv = f.add, f.mul, f.neg, f.inv
        aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.rows)]
        det = 1
        for c in range(n):
            pr = next((i for i in range(c, n) if aug[i][c]), None)
            if pr is None:
                return FieldElement(f, 0), None
            if pr != c:
                aug[c], aug[pr] = aug[pr], aug[c]
                det = neg(det)
            piv = aug[c][c]
            det = mul(det, piv)
            pinv = inv(piv)
            aug[c] = [mul(pinv, x) for x in aug[c]]
            src = aug[c]
            for i in range(n):
                if i != c and aug[i][c]:
                    nf = neg(aug[i][c])
                    aug[i] = [add(d, mul(nf, s)) for d, s in zip(aug[i], src)]
        return FieldElement(f, det), Matrix(f, [r[n:] for r in aug], ncols=n)

    def det(self) -> FieldElement:
        return self.det_inverse()[0]

    def row_space_contains(self, vector: Sequence[int]) -> bool:
        stacked = self.vstack(Matrix(self.field, [vector], ncols=self.ncols))
        return stacked.rank() == self.rank()
