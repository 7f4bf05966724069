"""Multi-indices in N^{n+1}.

A multi-index is a plain tuple of nonnegative ints. Within a fixed order the
canonical ordering is lexicographic, largest first, so for two variables and
order 2 the sequence is (2,0), (1,1), (0,2).
"""

from functools import lru_cache
from math import comb

from .errors import LengthMismatch, NotDominated

ORDER_NAME = "grlex-desc"


def multi_index(entries, length=None):
    """Validate ``entries`` and return them as a tuple."""
    idx = tuple(int(i) for i in entries)
    if any(i < 0 for i in idx):
        raise ValueError(f"negative exponent in {idx}")
    if length is not None and len(idx) != length:
        raise LengthMismatch(f"{idx} has length {len(idx)}, expected {length}")
    return idx


def _check(I, J):
    if len(I) != len(J):
        raise LengthMismatch(f"{I} and {J} differ in length")


def order(I):
    return sum(I)


def geq(I, J):
    _check(I, J)
    return all(i >= j for i, j in zip(I, J))


def add(I, J):
    _check(I, J)
    return tuple(i + j for i, j in zip(I, J))


def sub(I, J):
    _check(I, J)
    if not all(i >= j for i, j in zip(I, J)):
        raise NotDominated(f"{I} is not >= {J}")
    return tuple(i - j for i, j in zip(I, J))


def unit(n, j):
    """The basis vector e_j of length n+1."""
    e = [0] * (n + 1)
    e[j] = 1
    return tuple(e)


def dim_S(n, e):
    """Dimension of the space of degree-e forms in n+1 variables (0 if e < 0)."""
    if e < 0:
        return 0
    return comb(n + e, e)


@lru_cache(maxsize=None)
def _enumerate(nvars, e):
    if nvars == 1:
        return ((e,),)
    out = []
    for first in range(e, -1, -1):
        for rest in _enumerate(nvars - 1, e - first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_indices(n, e):
    """All multi-indices of length n+1 and order e, in canonical order."""
    if n < 0 or e < 0:
        return ()
    return _enumerate(n + 1, e)


@lru_cache(maxsize=None)
def position_map(n, e):
    """Map each multi-index of order e to its position in canonical order."""
    return {I: pos for pos, I in enumerate(enumerate_indices(n, e))}


def format_index(I):
    return "(" + ",".join(str(i) for i in I) + ")"


def parse_index(text):
    """Read the CLI form ``"i0,i1,..."`` (surrounding parentheses tolerated)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        return multi_index(part for part in body.split(",") if part.strip())
    except ValueError as exc:
        raise ValueError(f"bad multi-index {text!r}") from exc
