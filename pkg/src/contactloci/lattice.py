"""Intersection semi-lattice and the invariants read off from it."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import IntPoly
from .arrangement import Flat, MultiArrangement, enumerate_flats, is_complete, subset_flat
from .errors import BudgetExceeded, DEFAULT_MAX_HYPERPLANES, InvalidDescriptor


@dataclass(frozen=True)
class IntersectionPoset:
    """Edges of an arrangement plus the ambient space.

    ``elements[0]`` is the ambient space (empty index set). Elements are sorted
    by codimension, then by their sorted index tuples. ``x <= y`` iff the
    index set of x is contained in that of y (i.e. reverse inclusion of edges).
    """

    ambient_dim: int
    elements: Tuple[Flat, ...]
    mobius_values: Tuple[int, ...]

    def __len__(self):
        return len(self.elements)

    def index(self, indices) -> int:
        key = frozenset(indices)
        for k, e in enumerate(self.elements):
            if e.indices == key:
                return k
        raise KeyError(sorted(key))

    def leq(self, a: int, b: int) -> bool:
        return self.elements[a].indices <= self.elements[b].indices

    def codim(self, k: int) -> int:
        return self.ambient_dim - self.elements[k].dim

    def covers(self) -> List[Tuple[int, int]]:
        """Pairs (x, y) with y covering x."""
        out = []
        for a, x in enumerate(self.elements):
            for b, y in enumerate(self.elements):
                if x.indices < y.indices and self.codim(b) == self.codim(a) + 1:
                    out.append((a, b))
        return out

    @property
    def rank(self) -> int:
        return max(self.codim(k) for k in range(len(self.elements)))

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "elements": [
                {
                    "id": k,
                    "indices": list(e.sorted_indices),
                    "dim": e.dim,
                    "s": e.s_value,
                    "mobius": str(self.mobius_values[k]),
                }
                for k, e in enumerate(self.elements)
            ],
            "covers": [list(p) for p in self.covers()],
        }


def _mobius(elements: Sequence[Flat]) -> Tuple[int, ...]:
    mu: List[int] = []
    for k, z in enumerate(elements):
        if k == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[y] for y in range(k) if elements[y].indices < z.indices))
    return tuple(mu)


def build_poset(A: MultiArrangement, max_hyperplanes: int = DEFAULT_MAX_HYPERPLANES) -> IntersectionPoset:
    flats = enumerate_flats(A.forms(), A.dim, max_hyperplanes=max_hyperplanes)
    elements = sorted(
        (Flat(S, dim, A.s_value(S)) for S, (dim, _, _) in flats.items()),
        key=lambda f: (A.dim - f.dim, f.sorted_indices),
    )
    return IntersectionPoset(A.dim, tuple(elements), _mobius(elements))


def mobius(P: IntersectionPoset) -> Dict[Flat, int]:
    return dict(zip(P.elements, P.mobius_values))


def char_poly(A: MultiArrangement, poset: Optional[IntersectionPoset] = None) -> IntPoly:
    """sum over edges Z of mu(Z) * q**dim(Z). Multiplicities play no role."""
    P = poset or build_poset(A)
    out = [0] * (A.dim + 1)
    for e, mu in zip(P.elements, P.mobius_values):
        out[e.dim] += mu
    return IntPoly(out)


def complement_betti(A: MultiArrangement, poset: Optional[IntersectionPoset] = None) -> IntPoly:
    """Betti polynomial of the complement: sum |mu(Z)| * t**codim(Z)."""
    P = poset or build_poset(A)
    out = [0] * (A.dim + 1)
    for k, mu in enumerate(P.mobius_values):
        out[P.codim(k)] += abs(mu)
    return IntPoly(out)


# --- combinatorial type -------------------------------------------------------


@dataclass(frozen=True)
class CombinatorialType:
    """Canonically relabelled lattice with multiplicities.

    ``flats`` lists every non-empty complete set as (codimension, atoms) after
    relabelling the hyperplanes canonically; ``multiplicities[k]`` is the
    multiplicity of the hyperplane with canonical label k.
    """

    flats: Tuple[Tuple[int, Tuple[int, ...]], ...]
    multiplicities: Tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "flats": [{"codim": c, "atoms": list(a)} for c, a in self.flats],
            "multiplicities": list(self.multiplicities),
        }


def _rerank(sigs):
    table = {s: r for r, s in enumerate(sorted(set(sigs)))}
    return [table[s] for s in sigs]


def combinatorial_type(A: MultiArrangement, max_leaves: int = 10**6) -> CombinatorialType:
    """Canonical form of (intersection lattice, multiplicity function).

    Colour refinement on the hyperplanes followed by individualisation of the
    first non-singleton cell; the lexicographically least leaf encoding wins.
    """
    P = build_poset(A)
    d = A.d
    fam = [(P.codim(k), e.indices) for k, e in enumerate(P.elements) if e.indices]
    containing = [[(c, T) for c, T in fam if i in T] for i in range(d)]
    s = A.multiplicities

    def refine(colors):
        while True:
            sigs = [
                (
                    colors[i],
                    tuple(sorted((c, len(T), tuple(sorted(colors[k] for k in T))) for c, T in containing[i])),
                )
                for i in range(d)
            ]
            new = _rerank(sigs)
            if len(set(new)) == len(set(colors)):
                return new
            colors = new

    def encode(colors):
        return (
            tuple(sorted((c, tuple(sorted(colors[k] for k in T))) for c, T in fam)),
            tuple(s[i] for i in sorted(range(d), key=lambda i: colors[i])),
        )

    best = [None]
    leaves = [0]

    def search(colors):
        counts: Dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        cells = sorted(c for c, n in counts.items() if n > 1)
        if not cells:
            leaves[0] += 1
            if leaves[0] > max_leaves:
                raise BudgetExceeded("combinatorial type search exceeded its leaf budget")
            enc = encode(colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        target = cells[0]
        for x in [i for i in range(d) if colors[i] == target]:
            split = [(colors[i], 0 if i == x else 1) for i in range(d)]
            search(refine(_rerank(split)))

    init = [(s[i], tuple(sorted((c, len(T)) for c, T in containing[i]))) for i in range(d)]
    search(refine(_rerank(init)) if d else [])
    flats, mults = best[0] if best[0] is not None else ((), ())
    return CombinatorialType(flats, mults)


# --- Orlik-Solomon presentation --------------------------------------------------


@dataclass(frozen=True)
class OSGenerator:
    """Ideal generator ``e_J`` (boundary=False) or ``del e_J`` (boundary=True).

    ``kind`` is 1 for empty intersections at level 0, 2 for dependent sets at
    level 0 and 3 for dependent sets among the homogeneous forms at level k >= 1.
    """

    kind: int
    level: int
    indices: Tuple[int, ...]

    @property
    def boundary(self) -> bool:
        return self.kind != 1

    def to_json(self) -> dict:
        return {
            "type": self.kind,
            "level": self.level,
            "op": "boundary" if self.boundary else "monomial",
            "indices": list(self.indices),
        }


def _codim(A: MultiArrangement, idx, homogeneous: bool) -> Optional[int]:
    sol = subset_flat(A, idx, homogeneous)
    return None if sol is None else A.dim - sol[0]


def os_presentation(A: MultiArrangement, j: Sequence[int], max_size: Optional[int] = None) -> List[OSGenerator]:
    """Generators of the ideal presenting the cohomology of the component j.

    Subsets J are enumerated up to size ``rank(A) + 1`` unless ``max_size``
    says otherwise.
    """
    j = tuple(int(x) for x in j)
    if len(j) != A.d or any(x < 0 for x in j):
        raise InvalidDescriptor("exponent vector has the wrong length or a negative entry")
    m = sum(x * h.multiplicity for x, h in zip(j, A.hyperplanes))
    I = [frozenset(i for i in range(A.d) if j[i] > k) for k in range(m + 1)]
    for k, S in enumerate(I):
        if not is_complete(A, S):
            raise InvalidDescriptor(f"{list(j)} is not in T({m}): level {k} set {sorted(S)} is not complete")
    if max_size is None:
        max_size = build_poset(A).rank + 1
    gens: List[OSGenerator] = []
    for k in range(m + 1):
        Jk = sorted(i for i in range(A.d) if j[i] == k)
        homog = k >= 1
        base = _codim(A, I[k], homog)
        for size in range(1, min(max_size, len(Jk)) + 1):
            for J in combinations(Jk, size):
                c = _codim(A, I[k] | set(J), homog)
                if c is None:
                    gens.append(OSGenerator(1, k, J))
                elif c - base < size:
                    gens.append(OSGenerator(2 if k == 0 else 3, k, J))
    return gens
