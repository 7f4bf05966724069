"""Partial derivatives, the apolar pairing, catalecticants and E_k(f).

Derivatives use plain falling factorials: D_I x^J = prod_m J_m!/(J_m-I_m)! x^(J-I).
No division by I!, so the pairing <y^I, f> is exactly D_I f.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .errors import InvariantViolation, LengthMismatch, OrderOutOfRange
from .exactla import ExactMatrix, Subspace, rank, row_space
from .multiindex import ORDER_NAME, dim_S, enumerate_indices, format_index
from .polyring import HomPoly, add_scaled


@lru_cache(maxsize=4096)
def falling(J, I):
    """prod_m J_m (J_m - 1) ... (J_m - I_m + 1); zero unless J >= I."""
    out = 1
    for j, i in zip(J, I):
        if i > j:
            return 0
        out *= prod(range(j - i + 1, j + 1))
    return out


def derivative(f, I):
    I = tuple(I)
    if len(I) != f.n + 1:
        raise LengthMismatch(f"multi-index {I} for {f.n + 1} variables")
    k = sum(I)
    if k > f.d:
        return HomPoly.zero(f.n, 0)
    out = {}
    for J, c in f.coeffs.items():
        w = falling(J, I)
        if w:
            out[tuple(j - i for j, i in zip(J, I))] = c * w
    return HomPoly(f.n, f.d - k, out)


def apolar_pair(P, f):
    """<P, f> = P(d/dx_0, ..., d/dx_n) f."""
    if P.n != f.n:
        raise LengthMismatch(f"dual polynomial in {P.n + 1} variables, f in {f.n + 1}")
    if P.d > f.d:
        return HomPoly.zero(f.n, 0)
    total = HomPoly.zero(f.n, f.d - P.d)
    for I, c in P.coeffs.items():
        total = add_scaled(total, c, derivative(f, I))
    return total


@dataclass(frozen=True)
class Catalecticant:
    """Row I (in canonical order of order-k indices) is the coefficient
    vector of D_I f in S_{n,d-k}."""

    n: int
    d: int
    k: int
    matrix: ExactMatrix

    @property
    def rank(self):
        return rank(self.matrix)

    def to_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "rows": self.matrix.rows,
            "cols": self.matrix.cols,
            "order": ORDER_NAME,
            "row_index": [format_index(I) for I in enumerate_indices(self.n, self.k)],
            "col_index": [format_index(J) for J in enumerate_indices(self.n, self.d - self.k)],
            "entries": [[str(x) for x in row] for row in self.matrix],
        }


def catalecticant(f, k):
    if k < 0 or k > f.d:
        raise OrderOutOfRange(f"k={k} outside 0..{f.d}")
    rows = [derivative(f, I).coeff_vector() for I in enumerate_indices(f.n, k)]
    return Catalecticant(f.n, f.d, k, ExactMatrix(rows, dim_S(f.n, f.d - k)))


def rank_bound(n, d, k):
    return min(dim_S(n, k), dim_S(n, d - k))


def e_space(f, k):
    """E_k(f), the span of all order-k partials, inside S_{n,d-k}.

    For k > d the space is zero (with an empty ambient).
    """
    if k < 0:
        raise OrderOutOfRange(f"k={k} is negative")
    if k > f.d:
        return Subspace(f.n, f.d - k, ExactMatrix([], 0))
    V = row_space(catalecticant(f, k).matrix, f.n, f.d - k)
    if V.dim > rank_bound(f.n, f.d, k):
        raise InvariantViolation(f"dim E_{k} = {V.dim} exceeds the rank bound")
    return V


def e_dim(f, k):
    if k > f.d:
        return 0
    if k < 0:
        raise OrderOutOfRange(f"k={k} is negative")
    r = catalecticant(f, k).rank
    if r > rank_bound(f.n, f.d, k):
        raise InvariantViolation(f"dim E_{k} = {r} exceeds the rank bound")
    return r
