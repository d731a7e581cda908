"""Affine hyperplane multi-arrangements over Q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .arith import parse_rational, rational_to_json
from .errors import ArrangementError, BudgetExceeded, DEFAULT_MAX_HYPERPLANES, HyperplaneContainsFlat
from .linalg import QQ, Field, solve_affine

IndexSet = FrozenSet[int]
# (dim, point, basis) with the flat equal to point + span(basis)
Parametrization = Tuple[int, list, List[list]]


def _canonical(coeffs: Sequence[Fraction], const: Fraction):
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g == 0:
        raise ArrangementError("hyperplane has an all-zero linear part")
    lead = next(v for v in ints if v != 0)
    scale = Fraction(den, g) * (1 if lead > 0 else -1)
    return tuple(Fraction(c * scale) for c in coeffs), Fraction(const * scale)


@dataclass(frozen=True)
class Hyperplane:
    """Zero set of ``coeffs . x + constant`` with a positive multiplicity.

    The form is normalised on construction: the linear part becomes a
    primitive integer vector whose first nonzero entry is positive.
    """

    coeffs: tuple
    constant: Fraction = Fraction(0)
    multiplicity: int = 1

    def __post_init__(self):
        coeffs = tuple(parse_rational(c) for c in self.coeffs)
        const = parse_rational(self.constant)
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ArrangementError(f"multiplicity must be a positive integer, got {self.multiplicity!r}")
        coeffs, const = _canonical(coeffs, const)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "constant", const)

    @property
    def key(self):
        """Identity of the underlying (reduced) hyperplane."""
        return (self.coeffs, self.constant)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def is_homogeneous(self) -> bool:
        return self.constant == 0

    def homogeneous(self) -> "Hyperplane":
        return Hyperplane(self.coeffs, 0, self.multiplicity)

    def with_multiplicity(self, s: int) -> "Hyperplane":
        return Hyperplane(self.coeffs, self.constant, s)

    def __call__(self, x: Sequence) -> Fraction:
        return sum((a * v for a, v in zip(self.coeffs, x)), Fraction(0)) + self.constant

    def integer_form(self) -> Tuple[Tuple[int, ...], int]:
        """Primitive integer vector proportional to (coeffs, constant)."""
        vals = list(self.coeffs) + [self.constant]
        den = 1
        for v in vals:
            den = den * v.denominator // math.gcd(den, v.denominator)
        ints = [int(v * den) for v in vals]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        ints = [v // g for v in ints]
        return tuple(ints[:-1]), ints[-1]

    def to_json(self) -> dict:
        return {
            "coeffs": [rational_to_json(c) for c in self.coeffs],
            "const": rational_to_json(self.constant),
            "mult": self.multiplicity,
        }


@dataclass(frozen=True)
class MultiArrangement:
    """Hyperplanes in affine ``dim``-space, pairwise distinct as zero sets.

    An empty hyperplane list (and ``dim == 0``) is allowed so that restrictions
    and products can be represented; :func:`from_json` rejects both for
    top-level input.
    """

    dim: int
    hyperplanes: tuple = ()

    def __post_init__(self):
        hs = tuple(self.hyperplanes)
        object.__setattr__(self, "hyperplanes", hs)
        if self.dim < 0:
            raise ArrangementError("ambient dimension must be nonnegative")
        seen: Dict[tuple, int] = {}
        for i, h in enumerate(hs):
            if h.dim != self.dim:
                raise ArrangementError(f"hyperplanes[{i}] has {h.dim} coefficients, expected {self.dim}")
            if h.key in seen:
                raise ArrangementError(f"duplicate hyperplane: hyperplanes[{seen[h.key]}] and hyperplanes[{i}]")
            seen[h.key] = i

    @property
    def d(self) -> int:
        return len(self.hyperplanes)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(h.multiplicity for h in self.hyperplanes)

    def is_central(self) -> bool:
        return all(h.is_homogeneous() for h in self.hyperplanes)

    def s_value(self, indices: Iterable[int]) -> int:
        return sum(self.hyperplanes[i].multiplicity for i in indices)

    def forms(self, homogeneous: bool = False) -> List[Tuple[tuple, Fraction]]:
        if homogeneous:
            return [(h.coeffs, Fraction(0)) for h in self.hyperplanes]
        return [(h.coeffs, h.constant) for h in self.hyperplanes]

    def to_json(self) -> dict:
        return {"dim": self.dim, "hyperplanes": [h.to_json() for h in self.hyperplanes]}

    @classmethod
    def from_json(cls, data) -> "MultiArrangement":
        if not isinstance(data, dict):
            raise ArrangementError("arrangement must be a JSON object")
        n = data.get("dim")
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise ArrangementError(f"dim: expected a positive integer, got {n!r}")
        raw = data.get("hyperplanes")
        if not isinstance(raw, list) or not raw:
            raise ArrangementError("hyperplanes: expected a non-empty list")
        hs = []
        for i, entry in enumerate(raw):
            where = f"hyperplanes[{i}]"
            if not isinstance(entry, dict):
                raise ArrangementError(f"{where}: expected an object")
            coeffs = entry.get("coeffs")
            if not isinstance(coeffs, list) or len(coeffs) != n:
                raise ArrangementError(f"{where}.coeffs: expected a list of {n} rationals")
            try:
                cs = [parse_rational(c) for c in coeffs]
                const = parse_rational(entry.get("const", "0"))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise ArrangementError(f"{where}: {exc}") from None
            mult = entry.get("mult", 1)
            if isinstance(mult, str) and mult.strip().isdigit():
                mult = int(mult)
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise ArrangementError(f"{where}.mult: expected a positive integer, got {mult!r}")
            try:
                hs.append(Hyperplane(cs, const, mult))
            except ArrangementError as exc:
                raise ArrangementError(f"{where}: {exc}") from None
        return cls(n, hs)


@dataclass(frozen=True)
class Flat:
    """An edge, named by its complete set of hyperplane indices."""

    indices: FrozenSet[int]
    dim: int
    s_value: int

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))

    @property
    def sorted_indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.indices))

    def codim(self, n: int) -> int:
        return n - self.dim


def make(dim: int, rows: Sequence[Sequence], mults: Optional[Sequence[int]] = None) -> MultiArrangement:
    """Build from rows ``[a_1, ..., a_n, b]`` meaning ``a . x + b = 0``."""
    mults = mults or [1] * len(rows)
    return MultiArrangement(dim, [Hyperplane(r[:-1], r[-1], s) for r, s in zip(rows, mults)])


# --- flats ------------------------------------------------------------------


def _dot(a, v, fld: Field):
    return fld.norm(sum(x * y for x, y in zip(a, v)))


def _pull(form, point, basis, fld: Field):
    a, b = form
    return fld.norm(_dot(a, point, fld) + b), [_dot(a, v, fld) for v in basis]


def _contains(form, point, basis, fld: Field) -> bool:
    c0, lin = _pull(form, point, basis, fld)
    return fld.is_zero(c0) and all(fld.is_zero(x) for x in lin)


def solve_forms(forms, indices: Iterable[int], n: int, fld: Field = QQ) -> Optional[Parametrization]:
    idx = sorted(indices)
    sol = solve_affine([forms[i][0] for i in idx], [forms[i][1] for i in idx], n, fld)
    if sol is None:
        return None
    point, basis = sol
    return len(basis), point, basis


def enumerate_flats(forms, n: int, fld: Field = QQ, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES):
    """All complete index sets of the forms, with a parametrization of each flat.

    Built codimension by codimension: each flat is cut by each hyperplane
    meeting it properly, and the result is closed under containment.
    """
    if len(forms) > max_hyperplanes:
        raise BudgetExceeded(f"{len(forms)} hyperplanes exceeds the budget of {max_hyperplanes}")
    one, zero = fld.norm(1), fld.norm(0)
    ident = [[one if r == c else zero for c in range(n)] for r in range(n)]
    bottom: IndexSet = frozenset()
    flats: Dict[IndexSet, Parametrization] = {bottom: (n, [zero] * n, ident)}
    level = [bottom]
    while level:
        nxt: Dict[IndexSet, Parametrization] = {}
        for S in level:
            _, point, basis = flats[S]
            for i, form in enumerate(forms):
                if i in S:
                    continue
                c0, lin = _pull(form, point, basis, fld)
                if all(fld.is_zero(x) for x in lin):
                    continue
                tsol = solve_affine([lin], [c0], len(basis), fld)
                tpoint, tbasis = tsol
                new_point = [fld.norm(p + sum(t * v[r] for t, v in zip(tpoint, basis))) for r, p in enumerate(point)]
                new_basis = [[fld.norm(sum(t * v[r] for t, v in zip(tb, basis))) for r in range(n)] for tb in tbasis]
                T = frozenset(
                    k for k, f in enumerate(forms) if k in S or k == i or _contains(f, new_point, new_basis, fld)
                )
                if T not in flats and T not in nxt:
                    nxt[T] = (len(new_basis), new_point, new_basis)
        flats.update(nxt)
        level = list(nxt)
    return flats


def subset_flat(A: MultiArrangement, S: Iterable[int], homogeneous: bool = False) -> Optional[Parametrization]:
    """Intersection of the hyperplanes indexed by S, or None if empty."""
    return solve_forms(A.forms(homogeneous), S, A.dim)


def completion(A: MultiArrangement, S: Iterable[int], homogeneous: bool = False) -> Optional[Flat]:
    S = frozenset(S)
    sol = subset_flat(A, S, homogeneous)
    if sol is None:
        return None
    dim, point, basis = sol
    forms = A.forms(homogeneous)
    full = frozenset(k for k, f in enumerate(forms) if k in S or _contains(f, point, basis, QQ))
    return Flat(full, dim, A.s_value(full))


def is_complete(A: MultiArrangement, S: Iterable[int], homogeneous: bool = False) -> bool:
    S = frozenset(S)
    if not S:
        return True
    c = completion(A, S, homogeneous)
    return c is not None and c.indices == S


def rank(A: MultiArrangement) -> int:
    """Codimension of the minimal edges.

    All minimal edges share one codimension, so one greedy pass suffices: keep
    each hyperplane that cuts the current flat properly. A hyperplane that
    misses (or contains) a flat misses (or contains) every flat inside it, so
    skipped hyperplanes never need a second look.
    """
    pivots: Dict[int, list] = {}
    for coeffs, const in A.forms():
        row = [Fraction(c) for c in coeffs] + [Fraction(const)]
        for col, prow in pivots.items():
            if row[col]:
                f = row[col]
                row = [a - f * b for a, b in zip(row, prow)]
        lead = next((c for c in range(A.dim) if row[c]), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        pivots[lead] = [x * inv for x in row]
    return len(pivots)


# --- constructions ----------------------------------------------------------


def centralize(A: MultiArrangement) -> MultiArrangement:
    """Homogeneous parts, coincident ones merged with multiplicities summed."""
    merged: Dict[tuple, int] = {}
    for h in A.hyperplanes:
        merged[h.coeffs] = merged.get(h.coeffs, 0) + h.multiplicity
    return MultiArrangement(A.dim, [Hyperplane(c, 0, s) for c, s in merged.items()])


def translate_to_origin(A: MultiArrangement) -> MultiArrangement:
    """Move a common point of all hyperplanes to the origin."""
    sol = subset_flat(A, range(A.d))
    if sol is None:
        raise ArrangementError("hyperplanes have no common point")
    _, point, _ = sol
    return MultiArrangement(A.dim, [Hyperplane(h.coeffs, h(point), h.multiplicity) for h in A.hyperplanes])


def pullback_forms(A: MultiArrangement, Z: Iterable[int], S: Iterable[int], homogeneous: bool = False):
    """Unnormalised pullbacks ``(i, coeffs, const)`` of the forms in S to the flat Z.

    Coordinates on Z are those of :func:`subset_flat`.
    """
    Zidx = frozenset(Z.indices if isinstance(Z, Flat) else Z)
    sol = subset_flat(A, Zidx, homogeneous)
    if sol is None:
        raise ArrangementError(f"flat {sorted(Zidx)} is empty")
    _, point, basis = sol
    forms = A.forms(homogeneous)
    out = []
    for i in sorted(S):
        if i in Zidx:
            raise HyperplaneContainsFlat(f"hyperplane {i} is one of the flat's own hyperplanes")
        c0, lin = _pull(forms[i], point, basis, QQ)
        out.append((i, tuple(lin), c0))
    return len(basis), out


def restrict(A: MultiArrangement, Z, S: Iterable[int], homogeneous: bool = False) -> MultiArrangement:
    """Trace on the flat Z of the hyperplanes in S.

    Hyperplanes missing Z are dropped; coincident traces are merged with their
    multiplicities summed. With ``homogeneous`` every form (those defining Z
    included) is replaced by its homogeneous part first.
    """
    dim, pulled = pullback_forms(A, Z, S, homogeneous)
    merged: Dict[tuple, Hyperplane] = {}
    for i, lin, c0 in pulled:
        s = A.hyperplanes[i].multiplicity
        if all(x == 0 for x in lin):
            if c0 == 0:
                raise HyperplaneContainsFlat(f"hyperplane {i} contains the flat")
            continue
        h = Hyperplane(lin, c0, s)
        if h.key in merged:
            h = merged[h.key].with_multiplicity(merged[h.key].multiplicity + s)
        merged[h.key] = h
    return MultiArrangement(dim, list(merged.values()))


def product(*factors: MultiArrangement) -> MultiArrangement:
    """Product arrangement in the direct sum of the ambient spaces."""
    total = sum(F.dim for F in factors)
    hs = []
    offset = 0
    for F in factors:
        for h in F.hyperplanes:
            coeffs = (0,) * offset + h.coeffs + (0,) * (total - offset - F.dim)
            hs.append(Hyperplane(coeffs, h.constant, h.multiplicity))
        offset += F.dim
    return MultiArrangement(total, hs)
