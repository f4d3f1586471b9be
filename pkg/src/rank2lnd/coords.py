"""Linear changes of coordinates on a polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .poly import Polynomial


def linear_form(coeffs: Sequence[Fraction], variables: Sequence[str]) -> Polynomial:
    variables = tuple(variables)
    n = len(variables)
    return Polynomial(variables, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})


def linear_coefficients(f: Polynomial) -> list[Fraction]:
    """Coefficient vector of a linear form; raises if ``f`` is not homogeneous linear."""
    n = len(f.variables)
    out = [Fraction(0)] * n
    for e, c in f.items():
        if sum(e) != 1:
            raise ValueError(f"{f} is not a linear form")
        out[e.index(1)] = c
    return out


@dataclass(frozen=True)
class LinearChange:
    """New variables ``target[i] = sum_j matrix[i][j] * source[j]``."""

    matrix: tuple[tuple[Fraction, ...], ...]
    source: tuple[str, ...]
    target: tuple[str, ...]

    def __post_init__(self):
        n = len(self.source)
        if len(self.target) != n or len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("linear change must be square and match both variable lists")
        if linalg.det(self.matrix) == 0:
            raise ValueError("linear change is not invertible")

    @classmethod
    def from_rows(cls, rows, source: Sequence[str], target: Sequence[str] | None = None) -> LinearChange:
        source = tuple(source)
        return cls(tuple(tuple(Fraction(c) for c in r) for r in rows), source,
                   tuple(target) if target is not None else source)

    @classmethod
    def identity(cls, source: Sequence[str], target: Sequence[str] | None = None) -> LinearChange:
        return cls.from_rows(linalg.identity(len(source)), source, target)

    @classmethod
    def from_forms(cls, forms: Sequence[Polynomial], target: Sequence[str] | None = None) -> LinearChange:
        source = forms[0].variables
        return cls.from_rows([linear_coefficients(f) for f in forms], source, target)

    def forms(self) -> tuple[Polynomial, ...]:
        """The new variables as linear forms in the source variables."""
        return tuple(linear_form(r, self.source) for r in self.matrix)

    def inverse(self) -> LinearChange:
        return LinearChange.from_rows(linalg.inverse(self.matrix), self.target, self.source)

    def then(self, other: LinearChange) -> LinearChange:
        """Compose: first ``self`` (source -> target), then ``other`` (target -> other.target)."""
        if other.source != self.target:
            raise ValueError("cannot compose: variable lists do not line up")
        return LinearChange.from_rows(linalg.matmul(other.matrix, self.matrix), self.source, other.target)

    def to_new(self, f: Polynomial) -> Polynomial:
        """Rewrite a source-ring polynomial in the new variables."""
        inv = self.inverse()
        return f.substitute(dict(zip(self.source, inv.forms())), self.target)

    def to_old(self, g: Polynomial) -> Polynomial:
        """Rewrite a target-ring polynomial in the source variables."""
        return g.substitute(dict(zip(self.target, self.forms())), self.source)

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "matrix": [[str(c) for c in r] for r in self.matrix],
            "forms": {t: str(f) for t, f in zip(self.target, self.forms())},
        }
