"""Closed Betti-number formulas for generic and generic central arrangements.

Generic: any k <= n hyperplanes meet in codimension k, more meet nowhere.
Generic central: same for k <= n, while more than n meet only at the origin.
All multiplicities are 1. Binomials vanish outside ``0 <= b <= a``.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import List, Optional

from .arith import IntPoly, binom
from .arrangement import Hyperplane, MultiArrangement, subset_flat


def _eps(d: int, m: int) -> int:
    return 1 if m % d == 0 else 0


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _require(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def betti_generic_contact(n: int, d: int, m: int, k: int) -> int:
    """b_k of the m-contact locus of a generic arrangement (any d >= 1)."""
    _require(n >= 1 and d >= 1 and m >= 1 and k >= 0, "need n, d, m >= 1 and k >= 0")
    return binom(d, k) * sum(binom(d - k, i) * binom(m + k - 1, m - i) for i in range(n - k + 1))


def _central_free_part(n: int, d: int, m: int, k: int) -> int:
    # Components with fewer than n hyperplanes of contact at the base point.
    first = binom(d, k) * sum(binom(d - k, i) * binom(m + k - 1, m - i) for i in range(n - k))
    second = sum(
        binom(d, l) * binom(m - 1, m - l) * binom(d - l - 1, n - l - 1) * binom(l, k + l - n) for l in range(1, n)
    )
    return first + second


def betti_generic_central_contact(n: int, d: int, m: int, k: int) -> int:
    """b_k of the m-contact locus of a generic central arrangement, d > n >= 2.

    Peels off the full-center component repeatedly: X_m splits into the
    components with |I_0| < n for m, m - d, m - 2d, ..., and when d divides m
    the last step leaves the complement of the arrangement itself.
    """
    _require(d > n >= 2 and m >= 1 and 0 <= k <= n, "need d > n >= 2, m >= 1, 0 <= k <= n")
    total = 0
    rest = m
    while rest >= 1:
        total += _central_free_part(n, d, rest, k)
        rest -= d
    if rest == 0:
        total += betti_complement_generic_central(n, d)[k]
    return total


def betti_generic_central_restricted(n: int, d: int, m: int, k: int) -> int:
    """b_k of the restricted m-contact locus of a generic central arrangement, d > n >= 2."""
    _require(d > n >= 2 and m >= 1 and 0 <= k <= n - 1, "need d > n >= 2, m >= 1, 0 <= k <= n - 1")
    top = -(-m // d)
    total = 0
    for j in range(top + 1):
        for l in range(1, n):
            inner = sum(binom(d - 1 - l, i) * binom(l, k - i) for i in range(n - l))
            total += binom(d, l) * binom(m - j * d - 1, l - 1) * inner
    e = _eps(d, m)
    return total + binom(d - 1, k) * e + (d - 1) * binom(d - 2, n - 1) * _delta(k, n - 1) * e


def betti_complement_generic(n: int, d: int) -> IntPoly:
    """Betti polynomial of the complement of a generic arrangement."""
    return IntPoly(binom(d, k) for k in range(min(n, d) + 1))


def betti_complement_generic_central(n: int, d: int) -> IntPoly:
    """(1 + t) times the generic Betti polynomial for d - 1 hyperplanes in dimension n - 1."""
    _require(n >= 1 and d >= 1, "need n, d >= 1")
    return IntPoly((1, 1)) * IntPoly(binom(d - 1, k) for k in range(n))


def milnor_betti_generic_central(n: int, d: int, k: int) -> int:
    """b_k of the Milnor fiber of a generic central arrangement, d > n >= 2."""
    _require(d > n >= 2 and 0 <= k <= n - 1, "need d > n >= 2 and 0 <= k <= n - 1")
    if k <= n - 2:
        return binom(d - 1, k)
    return binom(d - 2, n - 2) + d * binom(d - 2, n - 1)


def betti_table(kind: str, n: int, d: int, m: int) -> dict:
    """All Betti numbers of one closed formula family, keyed by name."""
    if kind == "generic":
        return {"contact": [betti_generic_contact(n, d, m, k) for k in range(n + 1)]}
    if kind == "generic-central":
        out = {
            "contact": [betti_generic_central_contact(n, d, m, k) for k in range(n + 1)],
            "restricted": [betti_generic_central_restricted(n, d, m, k) for k in range(n)],
            "complement": list(betti_complement_generic_central(n, d).coeffs),
            "milnor_fiber": [milnor_betti_generic_central(n, d, k) for k in range(n)],
        }
        return out
    raise ValueError(f"unknown kind {kind!r}")


# --- realizations -------------------------------------------------------------


def is_generic(A: MultiArrangement, central: bool = False) -> bool:
    """Check the defining intersection pattern on every subset of hyperplanes."""
    if any(h.multiplicity != 1 for h in A.hyperplanes):
        return False
    if central and not A.is_central():
        return False
    n = A.dim
    for size in range(1, A.d + 1):
        for S in combinations(range(A.d), size):
            sol = subset_flat(A, S)
            if size <= n:
                if sol is None or n - sol[0] != size:
                    return False
            elif central:
                if sol is None or sol[0] != 0:
                    return False
            elif sol is not None:
                return False
    return True


def random_generic(n: int, d: int, central: bool = False, rng: Optional[random.Random] = None,
                   bound: int = 5, max_tries: int = 10000) -> MultiArrangement:
    """Small-integer realization, redrawn until the genericity check passes."""
    rng = rng or random.Random(0)
    for _ in range(max_tries):
        hs: List[Hyperplane] = []
        keys = set()
        for _ in range(d):
            coeffs = [rng.randint(-bound, bound) for _ in range(n)]
            if not any(coeffs):
                break
            const = 0 if central else rng.randint(-bound, bound)
            h = Hyperplane(coeffs, const)
            if h.key in keys:
                break
            keys.add(h.key)
            hs.append(h)
        if len(hs) != d:
            continue
        A = MultiArrangement(n, hs)
        if is_generic(A, central):
            return A
    raise RuntimeError("no generic realization found")
