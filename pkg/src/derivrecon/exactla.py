"""Dense exact rational matrices and canonical subspaces.

Elimination pivots on the first nonzero entry in column order. Every entry
is a Fraction, so each step is already in lowest terms.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatch, DimensionMismatch, InvariantViolation
from .multiindex import ORDER_NAME, dim_S
from .polyring import to_rational


class ExactMatrix:
    """Immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols=None):
        data = tuple(tuple(to_rational(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise DimensionMismatch("column count required for an empty matrix")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch(f"row of length {len(row)} in a {cols}-column matrix")
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, size):
        return cls([[int(i == j) for j in range(size)] for i in range(size)], size)

    @property
    def entries(self):
        """Row-major flat tuple."""
        return tuple(x for row in self._data for x in row)

    def row(self, i):
        return self._data[i]

    def tolist(self):
        return [list(row) for row in self._data]

    def transpose(self):
        return ExactMatrix([[self._data[i][j] for i in range(self.rows)]
                            for j in range(self.cols)], self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.cols == other.cols and self._data == other._data

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"


def _rref_rows(rows, cols):
    """In-place RREF of a list of Fraction lists; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(cols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c] != 0:
                break
        else:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        for i in range(nrows):
            if i != r:
                factor = rows[i][c]
                if factor:
                    rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def _working_copy(M):
    return [list(row) for row in M]


def rref(M):
    """Reduced row echelon form and rank. Zero rows are kept at the bottom."""
    rows = _working_copy(M)
    pivots = _rref_rows(rows, M.cols)
    return ExactMatrix(rows, M.cols), len(pivots)


def rank(M):
    return len(_rref_rows(_working_copy(M), M.cols))


def pivot_columns(M):
    return tuple(_rref_rows(_working_copy(M), M.cols))


def nullspace(M):
    """RREF basis (as rows) of {v : M v = 0}."""
    rows = _working_copy(M)
    pivots = _rref_rows(rows, M.cols)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * M.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    # Vectors built from distinct free columns, listed in column order, are
    # not yet reduced against each other's pivots; canonicalize.
    if basis:
        _rref_rows(basis, M.cols)
    out = ExactMatrix(basis, M.cols)
    if len(pivots) + out.rows != M.cols:
        raise InvariantViolation("rank-nullity failed")
    return out


def solve(A, B):
    """Solve A X = B for X, requiring a unique solution.

    Returns ``None`` when the system is inconsistent. Raises
    :class:`DimensionMismatch` on shape errors and ``ValueError`` when the
    solution is not unique.
    """
    if A.rows != B.rows:
        raise DimensionMismatch(f"{A.rows} rows vs {B.rows} rows")
    rows = [list(a) + list(b) for a, b in zip(A, B)]
    pivots = _rref_rows(rows, A.cols + B.cols)
    if any(p >= A.cols for p in pivots):
        return None
    if len(pivots) < A.cols:
        raise ValueError("solution is not unique")
    return ExactMatrix([row[A.cols:] for row in rows[:A.cols]], B.cols)


def matmul(A, B):
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.rows}x{A.cols} times {B.rows}x{B.cols}")
    Bt = B.transpose()
    return ExactMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                         for col in Bt] for row in A], B.cols)


@dataclass(frozen=True)
class Subspace:
    """A subspace of S_{n,e}, held as its canonical RREF basis."""

    n: int
    e: int
    basis: ExactMatrix

    def __post_init__(self):
        if self.basis.cols != dim_S(self.n, self.e):
            raise DimensionMismatch(
                f"basis rows have length {self.basis.cols}, ambient S_{self.n},{self.e} "
                f"has dimension {dim_S(self.n, self.e)}")

    @property
    def dim(self):
        return self.basis.rows

    @property
    def ambient_dim(self):
        return self.basis.cols

    def is_full(self):
        return self.dim == self.ambient_dim

    def pivots(self):
        return tuple(next(c for c, x in enumerate(row) if x) for row in self.basis)

    def annihilator(self):
        """Basis of the vectors w with w . v = 0 for every v in the subspace."""
        return nullspace(self.basis)

    def to_dict(self):
        return {
            "n": self.n,
            "e": self.e,
            "order": ORDER_NAME,
            "basis": [[str(x) for x in row] for row in self.basis],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        if data.get("order", ORDER_NAME) != ORDER_NAME:
            raise AmbientMismatch(f"unsupported monomial order {data['order']!r}")
        n, e = int(data["n"]), int(data["e"])
        rows = [[Fraction(x) for x in row] for row in data["basis"]]
        return row_space(ExactMatrix(rows, dim_S(n, e)), n, e)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def row_space(M, n, e):
    if M.cols != dim_S(n, e):
        raise DimensionMismatch(f"{M.cols} columns, S_{n},{e} has dimension {dim_S(n, e)}")
    R, r = rref(M)
    return Subspace(n, e, ExactMatrix([R.row(i) for i in range(r)], M.cols))


def _same_ambient(A, B):
    if (A.n, A.e) != (B.n, B.e):
        raise AmbientMismatch(f"S_{A.n},{A.e} vs S_{B.n},{B.e}")


def subspace_equal(A, B):
    _same_ambient(A, B)
    return A.basis == B.basis


def subspace_contains(A, v):
    v = [to_rational(x) for x in v]
    if len(v) != A.ambient_dim:
        raise AmbientMismatch(f"vector of length {len(v)} in ambient of dimension {A.ambient_dim}")
    if A.dim == A.ambient_dim:
        return True
    return rank(ExactMatrix(list(A.basis) + [v], A.ambient_dim)) == A.dim


def subspace_le(A, B):
    """True when A is contained in B."""
    _same_ambient(A, B)
    return all(subspace_contains(B, row) for row in A.basis)
