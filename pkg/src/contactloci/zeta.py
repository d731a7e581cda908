"""Truncated naive motivic zeta function and the point counts it predicts."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Dict, Tuple

from .arith import LaurentPoly
from .arrangement import MultiArrangement
from .contact import decomposition, enumerate_T
from .errors import ArrangementError, BadReduction
from .jets import good_reduction_check, is_prime, reduce_forms
from .lattice import char_poly
from .linalg import PrimeField, solve_affine


@dataclass(frozen=True)
class LaurentSeriesTruncation:
    """Coefficients of T^0 .. T^max_order, each a Laurent polynomial in q."""

    max_order: int
    coefficients: Tuple[LaurentPoly, ...]

    def to_json(self) -> dict:
        return {"max_order": self.max_order, "coefficients": [c.to_json() for c in self.coefficients]}

    @classmethod
    def from_json(cls, obj) -> "LaurentSeriesTruncation":
        return cls(int(obj["max_order"]), tuple(LaurentPoly.from_json(c) for c in obj["coefficients"]))


def zeta_coefficient(A: MultiArrangement, m: int, **kw) -> LaurentPoly:
    """``sum_j chi_{A_j}(q) * q**(-n*m)`` over the components of the m-contact locus."""
    total = LaurentPoly()
    for comp in decomposition(A, m, **kw):
        total = total + LaurentPoly.from_intpoly(char_poly(comp.product))
    return total.shift(-A.dim * m)


def naive_zeta(A: MultiArrangement, max_order: int, **kw) -> LaurentSeriesTruncation:
    if not A.is_central():
        raise ArrangementError("the naive zeta function is only computed for central arrangements")
    if max_order < 0:
        raise ValueError("max_order must be nonnegative")
    return LaurentSeriesTruncation(max_order, tuple(zeta_coefficient(A, m, **kw) for m in range(max_order + 1)))


def _require_good(A: MultiArrangement, p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not good_reduction_check(A, p):
        raise BadReduction(f"arrangement has bad reduction at p={p}")


def zeta_point_count(A: MultiArrangement, m: int, p: int, **kw) -> int:
    """Predicted number of F_p-points of the m-contact locus.

    Works for any arrangement: the coefficient is summed over components
    directly, without the central-only series wrapper.
    """
    _require_good(A, p)
    value = zeta_coefficient(A, m, **kw)(p) * Fraction(p) ** (A.dim * m)
    assert value.denominator == 1
    return int(value)


# --- componentwise restricted count ------------------------------------------------


def _flat_points(forms, n: int, p: int):
    """All F_p points on the flat cut out by ``forms`` (list of (coeffs, const))."""
    sol = solve_affine([c for c, _ in forms], [b for _, b in forms], n, PrimeField(p))
    if sol is None:
        return
    point, basis = sol
    point = [int(x) % p for x in point]
    basis = [[int(x) % p for x in b] for b in basis]
    for coords in cartesian(range(p), repeat=len(basis)):
        yield tuple((point[i] + sum(c * b[i] for c, b in zip(coords, basis))) % p for i in range(n))


def _level_histogram(forms_p, S, J, s, homogeneous: bool, n: int, p: int) -> Dict[int, int]:
    """Distribution of ``prod_{i in J} h_i^(s_i)`` over points of the level flat where
    no h_i, i in J, vanishes."""
    cut = [(forms_p[i][0], 0 if homogeneous else forms_p[i][1]) for i in sorted(S)]
    hist: Counter = Counter()
    for x in _flat_points(cut, n, p):
        val = 1
        for i in J:
            c, b = forms_p[i]
            v = (sum(a * y for a, y in zip(c, x)) + (0 if homogeneous else b)) % p
            if v == 0:
                val = 0
                break
            val = val * pow(v, s[i], p) % p
        if val:
            hist[val] += 1
    return hist


def restricted_point_count(A: MultiArrangement, m: int, p: int, **kw) -> int:
    """Count the restricted m-contact locus over F_p component by component.

    For each j in T(m) the component is the product over levels k of the
    open pieces of the level flats; the fiber condition
    ``prod_i (h_i^(j_i))^(s_i) = prod_i (j_i!)^(s_i)`` is multiplicative across
    levels, so per-level value histograms are convolved in F_p^*.
    """
    if m < 1:
        raise ValueError("restricted counts are handled for m >= 1")
    _require_good(A, p)
    if p <= m:
        raise ValueError("need p > m")
    forms_p = reduce_forms(A, p)
    s = A.multiplicities
    n = A.dim
    total = 0
    for desc in enumerate_T(A, m, **kw):
        chain = desc.chain
        dist: Dict[int, int] = {1: 1}
        for k in range(m + 1):
            J = sorted(desc.exact_set(k))
            hist = _level_histogram(forms_p, chain[k], J, s, k >= 1, n, p)
            nxt: Counter = Counter()
            for a, ca in dist.items():
                for b, cb in hist.items():
                    nxt[a * b % p] += ca * cb
            dist = nxt
        target = 1
        for x, si in zip(desc.j, s):
            target = target * pow(math.factorial(x), si, p) % p
        total += dist.get(target, 0)
    return total
