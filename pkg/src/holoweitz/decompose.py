"""Tensor products, exterior powers and character decomposition.

Tensor products use Klimyk's reflection rule, iterating over the weight
multiset of the smaller factor.  Exterior powers enumerate p-element
subset sums of the weight multiset directly; this is exact and fast at
the scale of the supported holonomy representations (n <= 8) but grows
as C(n, p), so it is not intended for n much beyond 14.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from dataclasses import dataclass
from itertools import combinations

from . import roots
from .errors import (
    DegreeOutOfRange,
    InternalNegativeMultiplicity,
    MixedRootSystems,
    NotACharacter,
)
from .irreps import Irrep, dimension, full_weights, weight_system
from .roots import RootSystem, Weight, to_dominant_chamber, vadd, vsub


@dataclass(frozen=True)
class Decomposition:
    """Multiset of irreducible summands with multiplicities.

    Entries are sorted by (dimension ascending, highest weight
    lexicographic in ambient coordinates); no irrep repeats.
    """

    entries: tuple[tuple[Irrep, int], ...]

    def total_dimension(self) -> int:
        return sum(m * dimension(irr) for irr, m in self.entries)

    def multiplicity_of(self, irrep: Irrep) -> int:
        for irr, m in self.entries:
            if irr == irrep:
                return m
        return 0

    def as_multiset(self) -> frozenset[tuple[tuple[int, ...], int]]:
        return frozenset((irr.highest_weight, m) for irr, m in self.entries)

    def irreps(self) -> tuple[Irrep, ...]:
        return tuple(irr for irr, _ in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def sort_key(irrep: Irrep):
    """Canonical summand order: dimension, then highest weight lex."""
    return (dimension(irrep), irrep.hw_orthogonal)


def _make_decomposition(rs: RootSystem, acc: dict[tuple[int, ...], int]) -> Decomposition:
    entries = [(Irrep(rs, hw), m) for hw, m in acc.items() if m != 0]
    entries.sort(key=lambda em: sort_key(em[0]))
    return Decomposition(tuple(entries))


def _klimyk_expand(anchor: Irrep, expanded: Irrep) -> dict[tuple[int, ...], int]:
    """Klimyk accumulation: anchor highest weight + weights of ``expanded``.

    For each weight nu of ``expanded`` (with multiplicity), reflect
    lambda + nu + rho into the dominant chamber, drop singular points and
    accumulate the reflection parity on the irrep at (dominant - rho).
    """
    rs = anchor.root_system
    lam_rho = vadd(anchor.hw_orthogonal, rs.rho)
    acc: Counter[tuple[int, ...]] = Counter()
    for nu in full_weights(expanded):
        dom, parity, singular = to_dominant_chamber(rs, vadd(lam_rho, nu))
        if singular:
            continue
        mu = vsub(dom, rs.rho)
        fund = tuple(int(c) for c in roots.to_fundamental(rs, mu))
        acc[fund] += parity
    for hw, m in acc.items():
        if m < 0:
            raise InternalNegativeMultiplicity(
                f"Klimyk produced multiplicity {m} at {hw} in {anchor} x {expanded}"
            )
    return {hw: m for hw, m in acc.items() if m != 0}


@lru_cache(maxsize=None)
def tensor(a: Irrep, b: Irrep) -> Decomposition:
    """Decomposition of the tensor product of two irreps.

    Iterates over the weight system of the smaller-dimensional factor,
    so products against a small fixed factor stay cheap regardless of
    the size of the other one.
    """
    if a.root_system != b.root_system:
        raise MixedRootSystems(f"{a} and {b} live on different root systems")
    anchor, expanded = sorted((a, b), key=sort_key, reverse=True)
    return _make_decomposition(a.root_system, _klimyk_expand(anchor, expanded))


def decompose_character(rs: RootSystem, char: dict[Weight, int]) -> Decomposition:
    """Decompose a character given by its dominant weight multiplicities.

    Greedy highest-weight extraction: repeatedly take the maximal
    remaining dominant weight by (height, lex), subtract that irrep's
    dominant weight system scaled by the current multiplicity.
    """
    remaining = {w: m for w, m in char.items() if m != 0}
    acc: list[tuple[Irrep, int]] = []
    while remaining:
        top = max(remaining, key=lambda w: roots.weight_sort_key(rs, w))
        m = remaining[top]
        if m < 0:
            raise NotACharacter(f"negative multiplicity {m} at {top}")
        fund = tuple(int(c) for c in roots.to_fundamental(rs, top))
        irr = Irrep(rs, fund)
        for w, mw in weight_system(irr).items():
            left = remaining.get(w, 0) - m * mw
            if left:
                remaining[w] = left
            else:
                remaining.pop(w, None)
        acc.append((irr, m))
    acc.sort(key=lambda em: sort_key(em[0]))
    return Decomposition(tuple(acc))


@lru_cache(maxsize=None)
def exterior_power(t: Irrep, p: int) -> Decomposition:
    """Decomposition of the p-th exterior power of an irrep.

    Expands the full weight multiset, forms all p-element subset sums,
    keeps the dominant ones as a character and extracts irreps greedily.
    """
    n = dimension(t)
    if not 0 <= p <= n:
        raise DegreeOutOfRange(f"degree {p} outside [0, {n}]")
    rs = t.root_system
    weights = full_weights(t)
    char: Counter[Weight] = Counter()
    zero = (Fraction(0),) * rs.dim
    for subset in combinations(range(n), p):
        s = zero
        for i in subset:
            s = vadd(s, weights[i])
        if roots.is_dominant(rs, s):
            char[s] += 1
    return decompose_character(rs, dict(char))
