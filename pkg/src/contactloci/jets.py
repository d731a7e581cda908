"""Brute-force point counts of contact loci over F_p.

A jet is a matrix ``a[i][k]`` (coordinate i, level k) standing for the
truncated arc ``x_i(t) = sum_k a[i][k] t^k / k!``. The k-th formal derivative
of a linear form evaluated at a jet only involves level k; the constant term
survives at level 0 only.

Nothing here looks at the component decomposition. The counts are the
independent side of every cross-check.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .arrangement import MultiArrangement, enumerate_flats
from .errors import BadReduction, BudgetExceeded, evaluation_budget
from .linalg import PrimeField

_CHUNK = 1 << 18


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


def reduce_forms(A: MultiArrangement, p: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Forms of A as primitive integer vectors reduced mod p."""
    out = []
    for i, h in enumerate(A.hyperplanes):
        coeffs, const = h.integer_form()
        red = tuple(c % p for c in coeffs)
        if not any(red):
            raise BadReduction(f"hyperplane {i} degenerates mod {p}")
        out.append((red, const % p))
    return out


def good_reduction_check(A: MultiArrangement, p: int) -> bool:
    """True iff the flats (and their dimensions) of A and of its homogeneous
    parts are the same over F_p as over Q."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    try:
        forms_p = reduce_forms(A, p)
    except BadReduction:
        return False
    Fp = PrimeField(p)
    for homog in (False, True):
        rat_forms = A.forms(homog)
        mod_forms = [(c, 0) for c, _ in forms_p] if homog else forms_p
        rat = {S: v[0] for S, v in enumerate_flats(rat_forms, A.dim).items()}
        mod = {S: v[0] for S, v in enumerate_flats(mod_forms, A.dim, Fp).items()}
        if rat != mod:
            return False
    return True


def _check(A: MultiArrangement, m: int, p: int, check: bool):
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= m:
        raise ValueError(f"need p > m so that factorials up to m! are units (p={p}, m={m})")
    if check and not good_reduction_check(A, p):
        raise BadReduction(f"arrangement has bad reduction at p={p}")


# --- derivatives at a single jet ---------------------------------------------------


@dataclass(frozen=True)
class JetPoint:
    """Jet coefficients ``a[i][k]`` in F_p, i < n, k <= m."""

    a: Tuple[Tuple[int, ...], ...]
    p: int

    @property
    def order(self) -> int:
        return len(self.a[0]) - 1 if self.a else 0

    def level(self, k: int) -> Tuple[int, ...]:
        return tuple(row[k] for row in self.a)


def derivative_tower(forms, jet: JetPoint) -> List[List[int]]:
    """``tower[t][k]`` = k-th derivative of form t at the jet."""
    p = jet.p
    out = []
    for coeffs, const in forms:
        row = []
        for k in range(jet.order + 1):
            v = sum(c * x for c, x in zip(coeffs, jet.level(k)))
            if k == 0:
                v += const
            row.append(v % p)
        out.append(row)
    return out


def _linear_factors(A: MultiArrangement, p: int):
    forms = reduce_forms(A, p)
    return [forms[i] for i, h in enumerate(A.hyperplanes) for _ in range(h.multiplicity)]


def _compositions(k: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def formal_derivative_eval(A: MultiArrangement, k: int, jet: JetPoint) -> int:
    """k-th formal derivative of ``f = prod h_i^s_i`` at the jet, mod p.

    Expands f as a product of N linear factors and sums
    ``k!/(b_1!...b_N!) * prod l_t^(b_t)`` over all compositions b of k.
    """
    p = jet.p
    if k > jet.order:
        raise ValueError("derivative order exceeds the jet order")
    tower = derivative_tower(_linear_factors(A, p), jet)
    total = 0
    fk = math.factorial(k)
    for beta in _compositions(k, len(tower)):
        coeff = fk
        for b in beta:
            coeff //= math.factorial(b)
        term = coeff
        for row, b in zip(tower, beta):
            term = term * row[b] % p
        total += term
    return total % p


def leibniz_derivative_eval(A: MultiArrangement, k: int, jet: JetPoint) -> int:
    """Same quantity by folding the product rule over the linear factors."""
    p = jet.p
    tower = derivative_tower(_linear_factors(A, p), jet)
    acc = [1] + [0] * k
    for row in tower:
        acc = [sum(math.comb(r, u) * acc[u] * row[r - u] for u in range(r + 1)) % p for r in range(k + 1)]
    return acc[k]


# --- counting ------------------------------------------------------------------------


def _all_points(n: int, p: int) -> Iterator[Tuple[int, ...]]:
    return cartesian(range(p), repeat=n)


def _vanishing_histogram(forms, n: int, p: int) -> Counter:
    hist: Counter = Counter()
    for x in _all_points(n, p):
        zero = frozenset(t for t, (c, b) in enumerate(forms) if (sum(a * v for a, v in zip(c, x)) + b) % p == 0)
        hist[zero] += 1
    return hist


def count_contact(A: MultiArrangement, m: int, p: int, check: bool = True, budget=None) -> int:
    """Number of m-jets over F_p with ``ord_t f(gamma) = m``.

    The order of f along a jet is ``sum_i s_i * ord_t h_i(gamma)`` and the order
    of each h_i is the first level at which its derivative is nonzero, so the
    count is a dynamic program over the set of hyperplanes still vanishing
    after each level, fed by histograms of level-wise vanishing patterns.
    """
    _check(A, m, p, check)
    n = A.dim
    work = 2 * p**n
    if work > evaluation_budget(budget):
        raise BudgetExceeded(f"{work} evaluations exceed the budget")
    forms = reduce_forms(A, p)
    s = A.multiplicities
    base = _vanishing_histogram(forms, n, p)
    higher = _vanishing_histogram([(c, 0) for c, _ in forms], n, p) if m else Counter()
    # state: (hyperplanes vanishing at every level so far, accumulated order)
    states: Dict[Tuple[frozenset, int], int] = Counter()
    for zero, cnt in base.items():
        states[(zero, 0)] += cnt
    for k in range(1, m + 1):
        nxt: Dict[Tuple[frozenset, int], int] = Counter()
        for (alive, w), cnt in states.items():
            if not alive:
                nxt[(alive, w)] += cnt * p**n
                continue
            for zero, c2 in higher.items():
                still = alive & zero
                w2 = w + k * sum(s[i] for i in alive - still)
                if w2 <= m:
                    nxt[(still, w2)] += cnt * c2
        states = nxt
    return sum(cnt for (alive, w), cnt in states.items() if not alive and w == m)


def _series_blocks(A: MultiArrangement, m: int, p: int, restricted: bool, budget) -> int:
    n = A.dim
    total_work = p ** (n * (m + 1))
    if total_work > evaluation_budget(budget):
        raise BudgetExceeded(f"{total_work} jet evaluations exceed the budget")
    factors = _linear_factors(A, p)
    inv_fact = [pow(math.factorial(k), -1, p) for k in range(m + 1)]
    coeff_mat = np.array([c for c, _ in factors], dtype=np.int64).reshape(len(factors), n)
    size = p ** (n * m)
    powers = p ** np.arange(n * m, dtype=np.int64)
    count = 0
    for x0 in _all_points(n, p):
        c0 = [(sum(a * v for a, v in zip(c, x0)) + b) % p for c, b in factors]
        f0 = 1
        for v in c0:
            f0 = f0 * v % p
        if m == 0:
            count += int(f0 == 1) if restricted else int(f0 != 0)
            continue
        if f0 != 0:
            continue
        for start in range(0, size, _CHUNK):
            idx = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
            digits = (idx[:, None] // powers[None, :]) % p  # (rows, n*m), level-major
            levels = digits.reshape(-1, m, n)
            # values[t, row, k-1]: k-th derivative of factor t
            values = np.einsum("tn,rkn->trk", coeff_mat, levels) % p
            series = np.zeros((idx.size, m + 1), dtype=np.int64)
            series[:, 0] = 1
            for t in range(len(factors)):
                fac = np.empty((idx.size, m + 1), dtype=np.int64)
                fac[:, 0] = c0[t]
                for k in range(1, m + 1):
                    fac[:, k] = values[t, :, k - 1] * inv_fact[k] % p
                new = np.zeros_like(series)
                for r in range(m + 1):
                    for u in range(r + 1):
                        new[:, r] += series[:, u] * fac[:, r - u]
                series = new % p
            low_zero = np.all(series[:, :m] == 0, axis=1)
            top = series[:, m]
            ok = low_zero & ((top == 1) if restricted else (top != 0))
            count += int(np.count_nonzero(ok))
    return count


def count_contact_bruteforce(A: MultiArrangement, m: int, p: int, check: bool = True, budget=None) -> int:
    """``count_contact`` by expanding ``f(gamma)`` as a truncated power series at every jet."""
    _check(A, m, p, check)
    return _series_blocks(A, m, p, restricted=False, budget=budget)


def count_restricted(A: MultiArrangement, m: int, p: int, check: bool = True, budget=None) -> int:
    """Number of m-jets with ``f = f' = ... = f^(m-1) = 0`` and ``f^(m) = m!``.

    Jets are enumerated block by block over their base point; blocks whose base
    point lies off the arrangement are skipped when m >= 1.
    """
    _check(A, m, p, check)
    return _series_blocks(A, m, p, restricted=True, budget=budget)
