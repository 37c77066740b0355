"""Exact root-system geometry for the simple types A, B, C, D and G2.

Weights are tuples of ``fractions.Fraction`` in the coordinates of the
ambient space: standard e-coordinates for A/B/C/D, and simple-root
coordinates for G2.  The bilinear form is carried explicitly as a Gram
matrix (``base_form``), so the G2 model can realize the normalization
(w1, w1) = 1, (w1, w2) = 3/2, (w2, w2) = 3 with purely rational data.

All values are immutable after construction and every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotDominant, UnsupportedType

Weight = tuple[Fraction, ...]

_SUPPORTED = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}


def vector(coords: Iterable) -> Weight:
    return tuple(Fraction(c) for c in coords)


def vadd(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * a for a in u)


@dataclass(frozen=True)
class RootSystem:
    """One simple type: roots, invariant form and derived data.

    ``cartan_matrix[i][j] = 2(a_i, a_j)/(a_j, a_j)`` and ``rho`` is the
    half-sum of the positive roots (equivalently the sum of the
    fundamental weights; construction checks both agree).
    """

    family: str
    rank: int
    simple_roots: tuple[Weight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    cartan_matrix: tuple[tuple[int, ...], ...]
    base_form: tuple[tuple[Fraction, ...], ...]
    rho: Weight
    # inverse Gram matrix of the simple roots; expresses a vector of the
    # root span in simple-root coefficients (used for heights)
    _root_coeff: tuple[tuple[Fraction, ...], ...]
    # per simple root: sparse (index, coeff) pairs with
    # pairing(w, i) = sum w[j] * coeff; derived from base_form and
    # invariant under uniform rescaling of it
    _pairing_data: tuple[tuple[tuple[int, Fraction], ...], ...]

    @property
    def dim(self) -> int:
        """Coordinate dimension of the ambient space."""
        return len(self.simple_roots[0])

    def __repr__(self) -> str:  # keep reprs short; the full tuple dump is noise
        return f"RootSystem({self.family}{self.rank})"


@lru_cache(maxsize=None)
def _identity_form(dim: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    )


def inner(rs: RootSystem, u: Weight, v: Weight) -> Fraction:
    """Invariant bilinear form of ``rs`` evaluated on two weights."""
    if len(u) != rs.dim or len(v) != rs.dim:
        raise DimensionMismatch(
            f"expected coordinate length {rs.dim}, got {len(u)} and {len(v)}"
        )
    g = rs.base_form
    if g is _identity_form(rs.dim):
        return sum(a * b for a, b in zip(u, v))
    return sum(u[i] * g[i][j] * v[j] for i in range(rs.dim) for j in range(rs.dim))


def pairing(rs: RootSystem, w: Weight, i: int) -> Fraction:
    """Pairing <w, coroot(a_i)> = 2(w, a_i)/(a_i, a_i)."""
    return sum(w[j] * c for j, c in rs._pairing_data[i])


def reflect(rs: RootSystem, w: Weight, i: int) -> Weight:
    """Reflection of ``w`` in the wall orthogonal to the i-th simple root."""
    return vsub(w, vscale(pairing(rs, w, i), rs.simple_roots[i]))


def is_dominant(rs: RootSystem, w: Weight) -> bool:
    return all(pairing(rs, w, i) >= 0 for i in range(rs.rank))


def to_fundamental(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Coordinates of ``w`` with respect to the fundamental weights."""
    return tuple(pairing(rs, w, i) for i in range(rs.rank))


def to_orthogonal(rs: RootSystem, fund: Sequence) -> Weight:
    """Ambient coordinates of a weight given in fundamental coordinates."""
    w = (Fraction(0),) * rs.dim
    for c, omega in zip(fund, rs.fundamental_weights):
        w = vadd(w, vscale(c, omega))
    return w


def root_coefficients(rs: RootSystem, w: Weight) -> tuple[Fraction, ...]:
    """Coefficients of ``w`` in the simple-root basis (w must lie in the span)."""
    pair = [inner(rs, w, a) for a in rs.simple_roots]
    m = rs._root_coeff
    return tuple(
        sum(m[i][j] * pair[j] for j in range(rs.rank)) for i in range(rs.rank)
    )


def height(rs: RootSystem, w: Weight) -> Fraction:
    """Sum of the simple-root coefficients of ``w``."""
    return sum(root_coefficients(rs, w))


def weight_sort_key(rs: RootSystem, w: Weight):
    """Deterministic (height, lexicographic) ordering key."""
    return (height(rs, w), w)


def to_dominant_chamber(rs: RootSystem, w: Weight) -> tuple[Weight, int, bool]:
    """Dominant Weyl-orbit representative of ``w``.

    Returns ``(dominant, parity, singular)`` where parity is the
    determinant of the reflecting Weyl element.  Points on a chamber
    wall report ``singular=True`` with parity +1; callers performing
    signed accumulation must discard them.
    """
    dom, parity, _word = _to_dominant_with_word(rs, w)
    singular = any(pairing(rs, dom, i) == 0 for i in range(rs.rank))
    return dom, (1 if singular else parity), singular


def _to_dominant_with_word(rs: RootSystem, w: Weight) -> tuple[Weight, int, tuple[int, ...]]:
    """Reflection loop behind to_dominant_chamber, keeping the reflection word.

    The word lists simple reflections applied to ``w`` in order; applying
    them to the dominant output in reverse order reconstructs ``w``.
    """
    v = w
    parity = 1
    word: list[int] = []
    while True:
        for i in range(rs.rank):
            if pairing(rs, v, i) < 0:
                v = reflect(rs, v, i)
                parity = -parity
                word.append(i)
                break
        else:
            return v, parity, tuple(word)


def weyl_orbit(rs: RootSystem, w: Weight) -> frozenset[Weight]:
    """Full Weyl orbit of a dominant weight, by closure under simple reflections."""
    if not is_dominant(rs, w):
        raise NotDominant(f"weight {w} is not dominant")
    return _orbit(rs, w)


def _orbit(rs: RootSystem, w: Weight) -> frozenset[Weight]:
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                r = reflect(rs, v, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def highest_root(rs: RootSystem) -> Weight:
    """The unique positive root of maximal height."""
    return rs.positive_roots[-1]


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact Gauss-Jordan inverse of a small rational matrix."""
    n = len(matrix)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _simple_root_data(
    family: str, rank: int
) -> tuple[list[Weight], tuple[tuple[Fraction, ...], ...]]:
    """Simple roots in ambient coordinates plus the Gram matrix of the space."""
    one = Fraction(1)

    def e(i: int, dim: int) -> Weight:
        return tuple(one if j == i else Fraction(0) for j in range(dim))

    if family == "A":
        dim = rank + 1
        roots = [vsub(e(i, dim), e(i + 1, dim)) for i in range(rank)]
    elif family == "B":
        dim = rank
        roots = [vsub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(e(rank - 1, dim))
    elif family == "C":
        dim = rank
        roots = [vsub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(vscale(2, e(rank - 1, dim)))
    elif family == "D":
        dim = rank
        roots = [vsub(e(i, dim), e(i + 1, dim)) for i in range(rank - 1)]
        roots.append(vadd(e(rank - 2, dim), e(rank - 1, dim)))
    else:  # G2: simple-root coordinates, Gram pinned by (w1, w1) = 1
        dim = 2
        roots = [vector((1, 0)), vector((0, 1))]
        gram = (
            (Fraction(1), Fraction(-3, 2)),
            (Fraction(-3, 2), Fraction(3)),
        )
        return roots, gram

    return roots, _identity_form(dim)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of type ``family``/``rank``.

    Positive roots are generated by reflection closure from the simple
    roots and ordered by (height, lexicographic).  Construction verifies
    that rho computed as the half-sum of positive roots agrees with the
    sum of the fundamental weights.
    """
    if family not in _SUPPORTED or rank < _SUPPORTED[family] or (family == "G" and rank != 2):
        raise UnsupportedType(f"unsupported root system {family}{rank}")

    simple, base_form = _simple_root_data(family, rank)

    def form(u: Weight, v: Weight) -> Fraction:
        return sum(
            u[i] * base_form[i][j] * v[j] for i in range(len(u)) for j in range(len(v))
        )

    # inverse Gram matrix of the simple roots, for root-basis coefficients
    simple_gram = [[form(a, b) for b in simple] for a in simple]
    root_coeff = tuple(tuple(row) for row in _invert(simple_gram))

    def coeffs(w: Weight) -> tuple[Fraction, ...]:
        pair = [form(w, a) for a in simple]
        return tuple(
            sum(root_coeff[i][j] * pair[j] for j in range(rank)) for i in range(rank)
        )

    # all roots as the reflection closure of the simple roots
    def refl(w: Weight, i: int) -> Weight:
        a = simple[i]
        return vsub(w, vscale(2 * form(w, a) / form(a, a), a))

    all_roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                r = refl(v, i)
                if r not in all_roots:
                    all_roots.add(r)
                    nxt.append(r)
        frontier = nxt

    positive = [r for r in all_roots if sum(coeffs(r)) > 0]
    positive.sort(key=lambda r: (sum(coeffs(r)), r))

    cartan = tuple(
        tuple(int(2 * form(a, b) / form(b, b)) for b in simple) for a in simple
    )

    # fundamental weights: w_i = sum_j (C^-1)_ij a_j lies in the root span
    # and pairs to delta_ij against the simple coroots
    cartan_inv = _invert([[Fraction(x) for x in row] for row in cartan])
    fundamental = []
    for i in range(rank):
        w = (Fraction(0),) * len(simple[0])
        for j in range(rank):
            w = vadd(w, vscale(cartan_inv[i][j], simple[j]))
        fundamental.append(w)

    pairing_data = []
    for a in simple:
        norm = form(a, a)
        dense = [
            2 * sum(base_form[j][l] * a[l] for l in range(len(a))) / norm
            for j in range(len(a))
        ]
        pairing_data.append(tuple((j, c) for j, c in enumerate(dense) if c != 0))

    rho_roots = vscale(Fraction(1, 2), _sum_vectors(positive, len(simple[0])))
    rho_fund = _sum_vectors(fundamental, len(simple[0]))
    if rho_roots != rho_fund:
        raise RuntimeError(
            f"{family}{rank}: half-sum of positive roots disagrees with the sum "
            "of fundamental weights; root conventions are broken"
        )

    return RootSystem(
        family=family,
        rank=rank,
        simple_roots=tuple(simple),
        fundamental_weights=tuple(fundamental),
        positive_roots=tuple(positive),
        cartan_matrix=cartan,
        base_form=base_form,
        rho=rho_roots,
        _root_coeff=root_coeff,
        _pairing_data=tuple(pairing_data),
    )


def _sum_vectors(vectors: Sequence[Weight], dim: int) -> Weight:
    total = (Fraction(0),) * dim
    for v in vectors:
        total = vadd(total, v)
    return total
