"""Homogeneous bundles on G/P for a maximal parabolic P.

A bundle is named by the L-dominant highest weight of the irreducible
P-representation inducing it.  Crossing node k removes it from the Levi;
twisting by O(t) adds t at the crossed coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (
    Character,
    char_dim,
    char_mul,
    decompose,
    irrep_character,
    weyl_dim,
)
from .errors import NotDominant
from .lie_core import RootSystem, Subsystem, Weight

# A direct sum of irreducible bundles, canonically ordered.
GradedBundle = list[tuple[Weight, int]]


@dataclass(frozen=True)
class ParabolicSetup:
    """A root system with one crossed node and the derived geometry constants."""

    rs: RootSystem
    crossed: int
    levi: Subsystem
    dim_x: int   # number of positive roots off the Levi
    index: int   # crossed coordinate of their sum; c1 of the anticanonical bundle


def make_setup(rs: RootSystem, crossed: int) -> ParabolicSetup:
    levi = Subsystem.levi(rs.rank, crossed)
    nilradical = [r for r in rs.positive_roots if r.simple_coords[crossed - 1] > 0]
    dim_x = len(nilradical)
    index = sum(r.weight[crossed - 1] for r in nilradical)
    return ParabolicSetup(rs, crossed, levi, dim_x, index)


def check_bundle(setup: ParabolicSetup, w: Weight) -> Weight:
    w = setup.rs.check_rank(w)
    if not setup.rs.is_dominant(setup.levi, w):
        raise NotDominant(
            f"{w} is not dominant on the Levi nodes {sorted(setup.levi.nodes)}"
        )
    return w


def bundle_rank(setup: ParabolicSetup, w: Weight) -> int:
    return weyl_dim(setup.rs, setup.levi, check_bundle(setup, w))


def bundle_char(setup: ParabolicSetup, w: Weight) -> Character:
    return irrep_character(setup.rs, setup.levi, check_bundle(setup, w))


def bundle_dual(setup: ParabolicSetup, w: Weight) -> Weight:
    return setup.rs.dual_dominant(setup.levi, check_bundle(setup, w))


def twist(setup: ParabolicSetup, w: Weight, t: int) -> Weight:
    w = setup.rs.check_rank(w)
    i = setup.crossed - 1
    return w[:i] + (w[i] + t,) + w[i + 1:]


def line_bundle(setup: ParabolicSetup, t: int) -> Weight:
    return twist(setup, (0,) * setup.rs.rank, t)


def bundle_c1(setup: ParabolicSetup, w: Weight) -> int:
    """First Chern class in units of the ample generator."""
    i = setup.crossed - 1
    return sum(m * wt[i] for wt, m in bundle_char(setup, w).items())


def levi_tensor(setup: ParabolicSetup, a: Weight, b: Weight) -> GradedBundle:
    """Decomposition of E_a (x) E_b into irreducible bundles.

    Racah-style: run over the weights of the smaller factor, dot-reflect
    b + nu + rho into the dominant chamber, and accumulate signs; the
    result of the cancellation is the honest decomposition.
    """
    rs = setup.rs
    sub = setup.levi
    a = check_bundle(setup, a)
    b = check_bundle(setup, b)
    if bundle_rank(setup, a) > bundle_rank(setup, b):
        a, b = b, a
    acc: dict[Weight, int] = {}
    for nu, m in bundle_char(setup, a).items():
        shifted = tuple(x + y + 1 for x, y in zip(b, nu))
        count, dom = rs.make_dominant(sub, shifted)
        if any(dom[i - 1] == 0 for i in sub.nodes):
            continue
        w = tuple(x - 1 for x in dom)
        n = acc.get(w, 0) + (m if count % 2 == 0 else -m)
        if n:
            acc[w] = n
        else:
            del acc[w]
    assert all(m > 0 for m in acc.values()), "tensor components must have positive multiplicity"
    total = sum(m * weyl_dim(rs, sub, w) for w, m in acc.items())
    assert total == bundle_rank(setup, a) * bundle_rank(setup, b), "rank bookkeeping failed"
    return sorted(acc.items(), key=lambda t: rs.sort_key(t[0]))


def branch(setup: ParabolicSetup, lam: Weight) -> GradedBundle:
    """Restriction of the full-system irreducible V_lam to the Levi.

    The underlying weight multiset is unchanged; only the grouping into
    irreducibles changes, which is exactly a decomposition over the Levi.
    """
    rs = setup.rs
    lam = rs.check_rank(lam)
    full = Subsystem.full(rs.rank)
    if not rs.is_dominant(full, lam):
        raise NotDominant(f"{lam} is not dominant for the full system")
    ch = irrep_character(rs, full, lam)
    return decompose(rs, setup.levi, ch)


def graded_char(setup: ParabolicSetup, graded: GradedBundle) -> Character:
    from .characters import char_add, char_scale

    acc: Character = {}
    for w, m in graded:
        acc = char_add(acc, char_scale(bundle_char(setup, w), m))
    return acc


def graded_rank(setup: ParabolicSetup, graded: GradedBundle) -> int:
    return sum(m * bundle_rank(setup, w) for w, m in graded)
