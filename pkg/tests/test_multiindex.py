from itertools import product
from math import comb

import pytest

from derivrecon.errors import LengthMismatch, NotDominated
from derivrecon.multiindex import (add, dim_S, enumerate_indices, format_index, geq,
                                   multi_index, order, parse_index, sub, unit)


@pytest.mark.parametrize("I, expected", [((0, 0, 0), 0), ((2, 1), 3), ((1, 0, 2), 3)])
def test_order(I, expected):
    assert order(I) == expected


def test_geq():
    assert geq((2, 1), (1, 1))
    assert not geq((2, 0), (1, 1))
    assert geq((3, 0, 2), (3, 0, 2))
    with pytest.raises(LengthMismatch):
        geq((1, 0), (1, 0, 0))


def test_add_sub():
    assert add((1, 0), (0, 1)) == (1, 1)
    assert sub((2, 1), (1, 0)) == (1, 1)
    with pytest.raises(NotDominated):
        sub((1, 0), (0, 1))
    with pytest.raises(LengthMismatch):
        add((1,), (1, 1))


def test_enumerate_examples():
    assert enumerate_indices(1, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(enumerate_indices(2, 3)) == 10
    assert enumerate_indices(0, 4) == ((4,),)


@pytest.mark.parametrize("n, e", list(product(range(5), range(9))))
def test_enumerate_count_and_order(n, e):
    idx = enumerate_indices(n, e)
    assert len(idx) == comb(n + e, e) == dim_S(n, e)
    assert all(a > b for a, b in zip(idx, idx[1:]))
    assert all(len(I) == n + 1 and order(I) == e for I in idx)


def test_partial_order_axioms():
    for n in range(3):
        pool = [I for e in range(5) for I in enumerate_indices(n, e)]
        for I in pool:
            assert geq(I, I)
            for J in pool:
                if geq(I, J) and geq(J, I):
                    assert I == J
                if geq(I, J):
                    assert sub(add(sub(I, J), J), J) == sub(I, J)
                    assert add(sub(I, J), J) == I
                    for K in pool:
                        if geq(J, K):
                            assert geq(I, K)
                assert sub(add(I, J), J) == I


def test_text_forms():
    assert format_index((1, 0, 2)) == "(1,0,2)"
    assert parse_index("1,0,2") == (1, 0, 2)
    assert parse_index("(2,1)") == (2, 1)
    with pytest.raises(ValueError):
        parse_index("1,-1")
    with pytest.raises(LengthMismatch):
        multi_index([1, 2], length=3)
    assert unit(2, 1) == (0, 1, 0)
    assert dim_S(3, -1) == 0
