"""Random instances of the classified derivations, for property checks.

Every generator takes a :class:`random.Random` so runs are reproducible from a
seed. Coefficients are small integers so the exact arithmetic stays cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .coords import LinearChange
from .derivation import Derivation, KernelPair
from .normal_form import XYZ
from .poly import Polynomial

COEFF_RANGE = 3


def _nonzero(rng: random.Random, bound: int = COEFF_RANGE) -> int:
    return rng.choice([c for c in range(-bound, bound + 1) if c])


def _any(rng: random.Random, bound: int = COEFF_RANGE) -> int:
    return rng.randint(-bound, bound)


def random_binary_form(rng: random.Random, degree: int) -> Polynomial:
    """Random homogeneous polynomial in X and Y of the given degree (possibly zero)."""
    X, Y, _ = Polynomial.gens(XYZ)
    out = Polynomial.zero(XYZ)
    for i in range(degree + 1):
        out = out + X ** i * Y ** (degree - i) * _any(rng)
    return out


def triangular_template(rng: random.Random, d: int) -> Polynomial:
    """``Y^(d+2) + X f(X, Y) + beta X^(d+1) Z`` with ``f`` of degree ``d + 1`` and ``beta != 0``."""
    X, Y, Z = Polynomial.gens(XYZ)
    return Y ** (d + 2) + X * random_binary_form(rng, d + 1) + X ** (d + 1) * Z * _nonzero(rng)


def nontriangular_template(rng: random.Random, p: int, q: int, shifts: bool = True) -> Polynomial:
    """``T^p + sum c_i X^(iq) T^(p-i) + c_p X^(pq-1) Y + e X^(pq)`` with ``T = h + X^(q-1) Z``.

    ``h = Y^q + sum lambda_r X^(q-r) Y^r`` (``r < q``) carries random shifts
    when ``shifts`` is set, and ``h = Y^q`` otherwise.
    """
    X, Y, Z = Polynomial.gens(XYZ)
    h = Y ** q
    if shifts:
        for r in range(1, q):
            h = h + X ** (q - r) * Y ** r * _any(rng)
    T = h + X ** (q - 1) * Z
    out = T ** p + X ** (p * q - 1) * Y * _nonzero(rng)
    for i in range(1, p):
        out = out + X ** (i * q) * T ** (p - i) * _any(rng)
    return out + X ** (p * q) * _any(rng)


def random_scramble(rng: random.Random) -> LinearChange:
    """Invertible linear change fixing ``span{X}``, as the substitution ``v -> form``."""
    while True:
        rows = [[_nonzero(rng), 0, 0],
                [_any(rng), _any(rng), _any(rng)],
                [_any(rng), _any(rng), _any(rng)]]
        if rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]:
            return LinearChange.from_rows(rows, XYZ)


@dataclass(frozen=True)
class Instance:
    kernel_pair: KernelPair
    base: Polynomial  # the template polynomial before scrambling
    change: LinearChange | None

    @property
    def derivation(self) -> Derivation:
        return self.kernel_pair.derivation()


def scrambled(P: Polynomial, change: LinearChange, gamma: Fraction | int = 1) -> Instance:
    """``gamma * Jacobian(X, P o phi)`` where ``phi`` substitutes each variable by its form."""
    Pp = P.substitute(dict(zip(XYZ, change.forms())))
    X = Polynomial.variable("X", XYZ)
    return Instance(KernelPair(X, Pp, Fraction(gamma)), P, change)


def random_instance(rng: random.Random, kind: str, *, d: int | None = None, p: int | None = None,
                    q: int | None = None, scramble: bool = True) -> Instance:
    P = triangular_template(rng, d) if kind == "triangular" else nontriangular_template(rng, p, q)
    if not scramble:
        return Instance(KernelPair(Polynomial.variable("X", XYZ), P), P, None)
    return scrambled(P, random_scramble(rng), _nonzero(rng))


def off_triangle_term(rng: random.Random, P: Polynomial) -> Polynomial:
    """A random monomial of the same degree whose (Y, Z) exponent lies outside the Newton triangle of ``P``."""
    n = P.degree_in("Y")
    m = P.degree_in("Z")
    deg = P.total_degree()
    X, Y, Z = Polynomial.gens(XYZ)
    # the triangle is a/n + b/m <= 1, i.e. a*m + b*n <= n*m
    choices = [(a, b) for b in range(deg + 1) for a in range(deg + 1 - b) if a * m + b * n > n * m]
    a, b = rng.choice(choices)
    return X ** (deg - a - b) * Y ** a * Z ** b * _nonzero(rng)
