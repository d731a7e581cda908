"""Gauss-Jordan elimination over Q (Fractions) or over F_p (ints mod p)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


class Field:
    """Arithmetic of the rationals; subclassed for prime fields."""

    p = 0

    def norm(self, x):
        return Fraction(x)

    def inv(self, x):
        return 1 / Fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0


class PrimeField(Field):
    def __init__(self, p: int):
        self.p = p

    def norm(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def inv(self, x):
        return pow(x, -1, self.p)

    def is_zero(self, x) -> bool:
        return x % self.p == 0


QQ = Field()


def rref(rows: Sequence[Sequence], ncols: int, field: Field = QQ) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    m = [[field.norm(x) for x in r] for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.norm(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.norm(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int, field: Field = QQ) -> int:
    if not rows:
        return 0
    return len(rref(rows, ncols, field)[1])


def solve_affine(
    coeff_rows: Sequence[Sequence], consts: Sequence, n: int, field: Field = QQ
) -> Optional[Tuple[list, List[list]]]:
    """Solve ``a_r . x + b_r = 0`` for all rows r.

    Returns ``(point, basis)`` with the solution set equal to
    ``point + span(basis)``, or None if inconsistent. Free variables are taken
    in ascending coordinate order; ``basis[k]`` has a 1 in the k-th free
    coordinate and the point has zeros in every free coordinate.
    """
    aug = [list(a) + [-field.norm(b)] for a, b in zip(coeff_rows, consts)]
    red, pivots = rref(aug, n + 1, field)
    if pivots and pivots[-1] == n:
        return None
    zero, one = field.norm(0), field.norm(1)
    point = [zero] * n
    for row, c in zip(red, pivots):
        point[c] = row[n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for row, c in zip(red, pivots):
            v[c] = field.norm(-row[fc])
        basis.append(v)
    return point, basis
