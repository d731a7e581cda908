"""Components of contact loci and restricted contact loci.

A component is indexed by an exponent vector ``j`` (the order of contact of
each hyperplane) whose level sets ``S_k = {i : j_i > k}`` form a descending
chain of complete sets with ``sum_k s(S_k) = m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .arith import IntPoly
from .arrangement import (
    MultiArrangement,
    is_complete,
    product,
    pullback_forms,
    rank,
    restrict,
    subset_flat,
)
from .errors import BudgetExceeded, DEFAULT_MAX_M, InvalidDescriptor, descriptor_budget
from .lattice import IntersectionPoset, build_poset, complement_betti


@dataclass(frozen=True)
class ChainDescriptor:
    j: Tuple[int, ...]
    m: int

    def level_set(self, k: int) -> FrozenSet[int]:
        """``I_k(j)``: hyperplanes whose order of contact exceeds k."""
        return frozenset(i for i, x in enumerate(self.j) if x > k)

    def exact_set(self, k: int) -> FrozenSet[int]:
        """``J_k(j)``: hyperplanes with order of contact exactly k."""
        return frozenset(i for i, x in enumerate(self.j) if x == k)

    @property
    def chain(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(self.level_set(k) for k in range(self.m + 1))

    def to_json(self) -> dict:
        return {"j": list(self.j), "m": self.m, "chain": [sorted(S) for S in self.chain]}


def descriptor(A: MultiArrangement, j: Sequence[int]) -> ChainDescriptor:
    """Validate ``j`` as an element of T(m) for the m it determines."""
    j = tuple(int(x) for x in j)
    if len(j) != A.d:
        raise InvalidDescriptor(f"expected {A.d} exponents, got {len(j)}")
    if any(x < 0 for x in j):
        raise InvalidDescriptor("exponents must be nonnegative")
    m = sum(x * s for x, s in zip(j, A.multiplicities))
    desc = ChainDescriptor(j, m)
    for k, S in enumerate(desc.chain):
        if not is_complete(A, S):
            raise InvalidDescriptor(f"{list(j)} is not in T({m}): S_{k} = {sorted(S)} is not complete")
    return desc


def enumerate_T(
    A: MultiArrangement,
    m: int,
    poset: Optional[IntersectionPoset] = None,
    max_m: int = DEFAULT_MAX_M,
    max_descriptors: Optional[int] = None,
) -> List[ChainDescriptor]:
    """All j in T(m), sorted lexicographically.

    Searches strictly descending chains of non-empty complete sets with
    positive repetition counts, pruning once the accumulated weight exceeds m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > max_m:
        raise BudgetExceeded(f"m = {m} exceeds the limit {max_m}")
    d = A.d
    if m == 0:
        return [ChainDescriptor((0,) * d, 0)]
    cap = descriptor_budget(max_descriptors)
    P = poset or build_poset(A)
    flats = [e for e in P.elements if e.indices]
    below = {e.indices: [f for f in flats if f.indices < e.indices] for e in flats}
    found: List[Tuple[int, ...]] = []
    chain: List[Tuple[FrozenSet[int], int]] = []

    def emit():
        j = [0] * d
        for T, nu in chain:
            for i in T:
                j[i] += nu
        found.append(tuple(j))
        if len(found) > cap:
            raise BudgetExceeded(f"|T({m})| exceeds the descriptor budget {cap}")

    def dfs(candidates, remaining):
        for T in candidates:
            for nu in range(1, remaining // T.s_value + 1):
                chain.append((T.indices, nu))
                rest = remaining - nu * T.s_value
                if rest == 0:
                    emit()
                else:
                    dfs(below[T.indices], rest)
                chain.pop()

    dfs(flats, m)
    return [ChainDescriptor(j, m) for j in sorted(found)]


# --- components ---------------------------------------------------------------


@dataclass(frozen=True)
class Factor:
    """One factor ``A_{j,k}`` of a component, living on the level-k flat.

    ``forms`` holds the unnormalised pullbacks ``(i, coeffs, const)`` of the
    k-th derivative of each h_i with j_i = k, in the flat's own coordinates;
    ``arrangement`` is their reduced multi-arrangement.
    """

    level: int
    flat: FrozenSet[int]
    arrangement: MultiArrangement
    forms: Tuple[Tuple[int, tuple, object], ...]

    @property
    def dim(self) -> int:
        return self.arrangement.dim

    def to_json(self) -> dict:
        from .arith import rational_to_json

        return {
            "level": self.level,
            "flat": sorted(self.flat),
            "dim": self.dim,
            "arrangement": self.arrangement.to_json(),
            "forms": [
                {"hyperplane": i, "coeffs": [rational_to_json(c) for c in lin], "const": rational_to_json(c0)}
                for i, lin, c0 in self.forms
            ],
        }


@dataclass(frozen=True)
class Component:
    descriptor: ChainDescriptor
    factors: Tuple[Factor, ...]
    product: MultiArrangement
    betti: IntPoly
    fiber_constant: int
    exponents: Tuple[int, ...]

    @property
    def dim(self) -> int:
        """Dimension of the ambient affine space X_j."""
        return self.product.dim

    @property
    def factor_dims(self) -> Tuple[int, ...]:
        return tuple(f.dim for f in self.factors)

    def fiber_equation(self) -> str:
        """Human-readable restricted-locus condition on X_j."""
        terms = []
        for f in self.factors:
            for i, _, _ in f.forms:
                s = self.exponents[i]
                base = f"h{i}^({f.level})"
                terms.append(base if s == 1 else f"({base})^{s}")
        lhs = " * ".join(terms) if terms else "1"
        return f"{lhs} = {self.fiber_constant}"

    def to_json(self, restricted: bool = False) -> dict:
        out = {
            "j": list(self.descriptor.j),
            "chain": [sorted(S) for S in self.descriptor.chain],
            "dim": self.dim,
            "factor_dims": list(self.factor_dims),
            "factors": [f.to_json() for f in self.factors],
            "fiber_constant": str(self.fiber_constant),
        }
        if restricted:
            out["fiber_equation"] = self.fiber_equation()
        else:
            out["betti"] = self.betti.to_json()
        return out


def build_component(A: MultiArrangement, j) -> Component:
    """Product decomposition ``X_j``, ``A_j`` of the component indexed by j.

    Level 0 is the affine flat cut out by ``S_0`` carrying the traces of the
    hyperplanes outside ``S_0``; level k >= 1 is the linear flat of the
    homogeneous parts of ``S_k`` carrying the traces of ``S_{k-1} - S_k``.
    """
    desc = descriptor(A, j.j if isinstance(j, ChainDescriptor) else j)
    chain = desc.chain
    everything = frozenset(range(A.d))
    factors = []
    for k in range(desc.m + 1):
        homog = k >= 1
        carried = (everything - chain[0]) if k == 0 else (chain[k - 1] - chain[k])
        _, pulled = pullback_forms(A, chain[k], carried, homogeneous=homog)
        arr = restrict(A, chain[k], carried, homogeneous=homog)
        factors.append(Factor(k, chain[k], arr, tuple(pulled)))
    betti = IntPoly.one()
    for f in factors:
        betti = betti * complement_betti(f.arrangement)
    const = 1
    for x, s in zip(desc.j, A.multiplicities):
        const *= math.factorial(x) ** s
    return Component(desc, tuple(factors), product(*(f.arrangement for f in factors)), betti, const, A.multiplicities)


def decomposition(A: MultiArrangement, m: int, **kw) -> List[Component]:
    P = build_poset(A)
    return [build_component(A, desc) for desc in enumerate_T(A, m, poset=P, **kw)]


def contact_betti(A: MultiArrangement, m: int, **kw) -> IntPoly:
    """Betti polynomial of the m-contact locus (zero if the locus is empty)."""
    total = IntPoly()
    for comp in decomposition(A, m, **kw):
        total = total + comp.betti
    return total


def restricted_decomposition(A: MultiArrangement, m: int, **kw) -> List[Component]:
    """Components of the restricted m-contact locus with their fiber conditions.

    On X_j the condition ``f^(m) = m!`` reads
    ``prod_i (h_i^(j_i)|X_j)^(s_i) = prod_i (j_i!)^(s_i)``.
    """
    if m < 1:
        raise ValueError("restricted contact loci are handled for m >= 1")
    return decomposition(A, m, **kw)


def component_rank(comp: Component) -> int:
    return rank(comp.product)


# --- nu-encoding ----------------------------------------------------------------


@dataclass(frozen=True)
class NuEncoding:
    """Strictly descending complete sets with repetition counts."""

    chain: Tuple[FrozenSet[int], ...]
    nu: Tuple[int, ...]
    s_values: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(v * s for v, s in zip(self.nu, self.s_values))

    def to_json(self) -> dict:
        return {"chain": [sorted(T) for T in self.chain], "nu": list(self.nu), "s": list(self.s_values)}


def nu_encoding(A: MultiArrangement, desc: ChainDescriptor) -> NuEncoding:
    if desc.m == 0:
        raise ValueError("m = 0 has no strictly descending chain")
    chain: List[FrozenSet[int]] = []
    nu: List[int] = []
    for S in desc.chain:
        if not S:
            break
        if chain and chain[-1] == S:
            nu[-1] += 1
        else:
            chain.append(S)
            nu.append(1)
    return NuEncoding(tuple(chain), tuple(nu), tuple(A.s_value(T) for T in chain))


def nu_decoding(A: MultiArrangement, enc: NuEncoding) -> ChainDescriptor:
    j = [0] * A.d
    for T, v in zip(enc.chain, enc.nu):
        for i in T:
            j[i] += v
    return ChainDescriptor(tuple(j), enc.weight)


def intrinsic_flat_dims(A: MultiArrangement, desc: ChainDescriptor) -> Tuple[int, ...]:
    """Dimensions of Z_0 and of the linear flats Z_k^center, k >= 1."""
    out = []
    for k, S in enumerate(desc.chain):
        sol = subset_flat(A, S, homogeneous=k >= 1)
        out.append(sol[0])
    return tuple(out)
