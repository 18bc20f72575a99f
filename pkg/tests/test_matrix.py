from fractions import Fraction
from itertools import permutations
from math import prod

import pytest
from hypothesis import given

from immpoly.matrix import ExactMatrix, as_fraction, determinant, format_rational, parse_rational, permanent

from strategies import matrices


def leibniz(M, signed):
    total = Fraction(0)
    for p in permutations(range(M.n)):
        inv = sum(1 for i in range(M.n) for j in range(i + 1, M.n) if p[i] > p[j])
        sign = (-1) ** inv if signed else 1
        total += sign * prod((M[i, p[i]] for i in range(M.n)), start=Fraction(1))
    return total


@pytest.mark.parametrize("text,value", [("3", 3), ("-2/4", Fraction(-1, 2)), ("+7/3", Fraction(7, 3)), (" 0 ", 0)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_fraction_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


@given(matrices(max_n=5))
def test_determinant_and_permanent_match_leibniz(M):
    assert determinant(M) == leibniz(M, True)
    assert permanent(M) == leibniz(M, False)


def test_matrix_helpers():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert M.trace() == 5
    assert M.shifted(1) == ExactMatrix([[2, 2], [3, 5]])
    assert M.char_matrix(2) == ExactMatrix([[1, -2], [-3, -2]])
    assert M.submatrix([1], [0]) == ExactMatrix([[3]])
    L, rows = ExactMatrix([[Fraction(1, 2), Fraction(1, 3)], [1, 0]]).integer_rows()
    assert L == 6 and rows == [[3, 2], [6, 0]]
