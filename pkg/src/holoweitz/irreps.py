"""Irreducible highest-weight representations.

Dimensions come from the Weyl dimension formula, weight multiplicities
from the Freudenthal recursion, Casimir eigenvalues from the highest
weight.  The sign convention is Cas = sum X_i^2, so Casimir eigenvalues
are negative (zero only on the trivial representation).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import roots
from .errors import MixedRootSystems, TrivialHolonomyRep
from .roots import RootSystem, Weight, inner, vadd, vscale, vsub

WeightSystem = dict[Weight, int]


@dataclass(frozen=True)
class Irrep:
    """A dominant integral highest weight bound to its root system.

    The highest weight is stored in fundamental coordinates as
    non-negative integers; two irreps are equal iff they share the root
    system and the highest weight.
    """

    root_system: RootSystem
    highest_weight: tuple[int, ...]

    def __post_init__(self):
        hw = tuple(int(c) for c in self.highest_weight)
        if len(hw) != self.root_system.rank or any(c < 0 for c in hw):
            raise ValueError(
                f"highest weight {self.highest_weight} invalid for {self.root_system}"
            )
        object.__setattr__(self, "highest_weight", hw)

    @property
    def hw_orthogonal(self) -> Weight:
        return roots.to_orthogonal(self.root_system, self.highest_weight)

    def __repr__(self) -> str:
        return f"Irrep({self.root_system.family}{self.root_system.rank}, {self.highest_weight})"


def trivial_irrep(rs: RootSystem) -> Irrep:
    return Irrep(rs, (0,) * rs.rank)


def adjoint_irrep(rs: RootSystem) -> Irrep:
    """Irrep with the highest root as highest weight."""
    fund = roots.to_fundamental(rs, roots.highest_root(rs))
    return Irrep(rs, tuple(int(c) for c in fund))


@lru_cache(maxsize=None)
def dimension(irrep: Irrep) -> int:
    """Weyl dimension formula: prod over positive roots of (l+rho,a)/(rho,a)."""
    rs = irrep.root_system
    lam_rho = vadd(irrep.hw_orthogonal, rs.rho)
    value = Fraction(1)
    for a in rs.positive_roots:
        value *= inner(rs, lam_rho, a) / inner(rs, rs.rho, a)
    if value.denominator != 1:
        raise RuntimeError(f"Weyl dimension of {irrep} is not an integer: {value}")
    return int(value)


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> list[tuple[Weight, int]]:
    """Dominant weights mu <= lam, with depth = height(lam - mu).

    Searches lam - (nonnegative span of simple roots) pruned to the ball
    ||mu + rho||^2 <= ||lam + rho||^2, which contains every weight of the
    irrep; the search graph restricted to the ball is connected through
    the weight system, so no dominant weight is missed.
    """
    lam_rho = vadd(lam, rs.rho)
    bound = inner(rs, lam_rho, lam_rho)
    seen = {lam}
    frontier = [lam]
    found: list[tuple[Weight, int]] = []
    depth = {lam: 0}
    while frontier:
        nxt = []
        for v in frontier:
            if roots.is_dominant(rs, v):
                found.append((v, depth[v]))
            for a in rs.simple_roots:
                u = vsub(v, a)
                if u in seen:
                    continue
                u_rho = vadd(u, rs.rho)
                if inner(rs, u_rho, u_rho) <= bound:
                    seen.add(u)
                    depth[u] = depth[v] + 1
                    nxt.append(u)
        frontier = nxt
    found.sort(key=lambda item: (item[1], item[0]))
    return found


@lru_cache(maxsize=None)
def weight_system(irrep: Irrep) -> WeightSystem:
    """Multiplicities of the dominant weights, by the Freudenthal recursion.

    m(mu) * (||lam+rho||^2 - ||mu+rho||^2)
        = 2 * sum_{a>0} sum_{k>=1} m(mu + k a) * (mu + k a, a)

    evaluated in order of increasing depth below the highest weight.
    Only dominant weights are stored; multiplicities at arbitrary points
    follow by Weyl invariance (see :func:`multiplicity`).
    """
    rs = irrep.root_system
    lam = irrep.hw_orthogonal
    lam_rho = vadd(lam, rs.rho)
    lam_rho_sq = inner(rs, lam_rho, lam_rho)

    mult: WeightSystem = {}
    for mu, depth in _dominant_weights_below(rs, lam):
        if depth == 0:
            mult[mu] = 1
            continue
        mu_rho = vadd(mu, rs.rho)
        denom = lam_rho_sq - inner(rs, mu_rho, mu_rho)
        total = Fraction(0)
        for a in rs.positive_roots:
            k = 1
            while True:
                nu = vadd(mu, vscale(k, a))
                dom, _, _ = roots.to_dominant_chamber(rs, nu)
                m = mult.get(dom, 0)
                if m == 0:
                    break  # weight strings have no gaps above mu
                total += m * inner(rs, nu, a)
                k += 1
        value = 2 * total / denom
        if value.denominator != 1 or value <= 0:
            raise RuntimeError(f"Freudenthal failed at {mu} for {irrep}: {value}")
        mult[mu] = int(value)
    return mult


def multiplicity(irrep: Irrep, w: Weight) -> int:
    """Multiplicity of an arbitrary weight (0 if not a weight of the irrep)."""
    dom, _, _ = roots.to_dominant_chamber(irrep.root_system, w)
    return weight_system(irrep).get(dom, 0)


@lru_cache(maxsize=None)
def full_weights(irrep: Irrep) -> tuple[Weight, ...]:
    """The complete weight multiset, expanded over Weyl orbits.

    Deterministic order: dominant representatives by (height, lex), each
    orbit sorted lexicographically, repeated by multiplicity.  Length
    equals dimension(irrep).
    """
    rs = irrep.root_system
    out: list[Weight] = []
    for dom, m in sorted(
        weight_system(irrep).items(), key=lambda kv: roots.weight_sort_key(rs, kv[0])
    ):
        orbit = sorted(roots.weyl_orbit(rs, dom))
        for w in orbit:
            out.extend([w] * m)
    if len(out) != dimension(irrep):
        raise RuntimeError(
            f"weight multiset of {irrep} has {len(out)} entries, "
            f"expected {dimension(irrep)}"
        )
    return tuple(out)


def casimir_base(irrep: Irrep) -> Fraction:
    """Casimir eigenvalue -(lam, lam + 2 rho) under the root system's base form."""
    rs = irrep.root_system
    lam = irrep.hw_orthogonal
    return -inner(rs, lam, vadd(lam, vscale(2, rs.rho)))


def casimir_lambda2_ratio(t: Irrep, dim_g: int, irrep: Irrep) -> Fraction:
    """Casimir eigenvalue normalized by the form induced on g inside Lambda2(T).

    c_T in that normalization is -2 dim(g)/dim(T); for any other irrep
    the eigenvalue follows from the base-form value by the common ratio,
    which makes the result independent of base-form scaling.
    """
    c_base_t = casimir_base(t)
    if c_base_t == 0:
        raise TrivialHolonomyRep("holonomy representation has zero Casimir")
    c_l2_t = Fraction(-2 * dim_g, dimension(t))
    return (c_l2_t / c_base_t) * casimir_base(irrep)


def casimir_lambda2(ctx, irrep: Irrep) -> Fraction:
    """Lambda2(T)-normalized Casimir eigenvalue in a holonomy context."""
    if irrep.root_system != ctx.root_system:
        raise MixedRootSystems(f"{irrep} does not live on {ctx.root_system}")
    return casimir_lambda2_ratio(ctx.holonomy_rep, ctx.dim_g, irrep)
