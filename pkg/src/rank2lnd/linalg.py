"""Exact linear algebra over the rationals (thin layer over sympy's DomainMatrix)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = list[list[Fraction]]


def _to_dm(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ(int(Fraction(c).numerator), int(Fraction(c).denominator)) for c in r] for r in rows]
    return DomainMatrix(data, (len(rows), ncols), QQ)


def _from_dm(m: DomainMatrix) -> Matrix:
    return [[Fraction(int(c.numerator), int(c.denominator)) for c in row] for row in m.to_list()]


def rank(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return _to_dm(rows, ncols).rank()


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis (as row vectors) of ``{v : rows @ v == 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = _to_dm(rows, ncols).nullspace()
    return [r for r in _from_dm(ns) if any(r)]


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    c = _to_dm(m).det()
    return Fraction(int(c.numerator), int(c.denominator))


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    if det(m) == 0:
        raise ZeroDivisionError("matrix is singular")
    return _from_dm(_to_dm(m).inv())


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
            for i in range(len(a))]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
