"""Exact root-system combinatorics in the fundamental-weight basis.

A weight is a tuple of integers: its pairings with the simple coroots.
Column j of the Cartan matrix is then the coordinate vector of the
simple root alpha_j, so reflections, root generation and dominance
tests are all integer arithmetic on tuples.  Nodes are numbered 1..n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Optional

from .errors import NotDominant, NotFiniteType

Weight = tuple[int, ...]

# Safety stop for root generation; every finite type we handle is far below.
MAX_POSITIVE_ROOTS = 1000


@dataclass(frozen=True)
class CartanMatrix:
    """Integer Cartan matrix with entries[i][j] = <alpha_j, alpha_i^vee>."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0:
            raise ValueError("empty Cartan matrix")
        for row in self.entries:
            if len(row) != n:
                raise ValueError("Cartan matrix must be square")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ValueError(f"diagonal entry at node {i + 1} must be 2")
            for j in range(n):
                if i != j:
                    if self.entries[i][j] > 0:
                        raise ValueError(f"off-diagonal entry ({i + 1},{j + 1}) must be <= 0")
                    if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                        raise ValueError(f"zero pattern must be symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CartanMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def column(self, j: int) -> Weight:
        """Coordinates of the simple root alpha_j (1-based j)."""
        return tuple(self.entries[i][j - 1] for i in range(self.rank))


def _symmetrizer(cartan: CartanMatrix) -> tuple[Q, ...]:
    """Positive rationals d with d_i * a_ij symmetric, by graph propagation.

    Raises NotFiniteType when no consistent choice exists.
    """
    n = cartan.rank
    a = cartan.entries
    d: list[Optional[Q]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                # d_i a_ij = d_j a_ji fixes d_j from d_i.
                want = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = want
                    queue.append(j)
                elif d[j] != want:
                    raise NotFiniteType("Cartan matrix is not symmetrizable")
    lcm = 1
    for x in d:
        assert x is not None
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    scaled = tuple(x * lcm for x in d)  # type: ignore[operator]
    g = 0
    for x in scaled:
        g = _gcd(g, int(x))
    return tuple(x / g for x in scaled)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _is_positive_definite(cartan: CartanMatrix, d: tuple[Q, ...]) -> bool:
    """Sylvester criterion for the symmetrized matrix, in exact arithmetic."""
    n = cartan.rank
    m = [[d[i] * cartan.entries[i][j] for j in range(n)] for i in range(n)]
    # Fraction Gaussian elimination; all leading pivots must stay positive.
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root with its three exact coordinate vectors."""

    weight: Weight        # pairings <alpha, alpha_i^vee>
    simple_coords: Weight  # alpha = sum_j simple_coords[j] * alpha_j
    coroot: Weight        # <lam, alpha^vee> = sum_j coroot[j] * lam[j]

    @property
    def height(self) -> int:
        return sum(self.simple_coords)


@dataclass(frozen=True)
class Subsystem:
    """A subset of simple nodes (1-based), closed under nothing: just a label set."""

    nodes: frozenset[int]

    @classmethod
    def full(cls, rank: int) -> "Subsystem":
        return cls(frozenset(range(1, rank + 1)))

    @classmethod
    def levi(cls, rank: int, crossed: int) -> "Subsystem":
        if not 1 <= crossed <= rank:
            raise ValueError(f"crossed node {crossed} outside 1..{rank}")
        return cls(frozenset(range(1, rank + 1)) - {crossed})

    @property
    def sorted_nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.nodes))


class RootSystem:
    """Positive roots and Weyl-group operations for a finite-type Cartan matrix."""

    def __init__(self, cartan: CartanMatrix, max_roots: int = MAX_POSITIVE_ROOTS):
        self.cartan = cartan
        self.rank = cartan.rank
        d = _symmetrizer(cartan)
        if not _is_positive_definite(cartan, d):
            raise NotFiniteType("symmetrized Cartan matrix is not positive definite")
        lcm = 1
        for x in d:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        self.symmetrizer_int: tuple[int, ...] = tuple(int(x * lcm) for x in d)
        self.rho: Weight = (1,) * self.rank
        # Sparse columns: for node i (1-based), the nonzero (j0, a_j0i) pairs.
        self._columns: tuple[tuple[tuple[int, int], ...], ...] = tuple(
            tuple((j, cartan.entries[j][i]) for j in range(self.rank) if cartan.entries[j][i] != 0)
            for i in range(self.rank)
        )
        self.positive_roots: tuple[PositiveRoot, ...] = self._generate(max_roots)
        self._sub_roots: dict[frozenset[int], tuple[PositiveRoot, ...]] = {}
        self._height_vec: Optional[tuple[Q, ...]] = None
        self.key = cartan.entries  # hashable fingerprint for caches

    # -- construction -------------------------------------------------

    def _generate(self, max_roots: int) -> tuple[PositiveRoot, ...]:
        n = self.rank
        seen: dict[Weight, Weight] = {}
        queue: deque[Weight] = deque()
        for j in range(n):
            coords = tuple(1 if k == j else 0 for k in range(n))
            seen[coords] = self.cartan.column(j + 1)
            queue.append(coords)
        while queue:
            coords = queue.popleft()
            weight = seen[coords]
            for i in range(n):
                c = weight[i]
                if c == 0:
                    continue
                new_coords = tuple(
                    coords[k] - c if k == i else coords[k] for k in range(n)
                )
                if any(x < 0 for x in new_coords) or all(x == 0 for x in new_coords):
                    continue
                if new_coords in seen:
                    continue
                new_weight = list(weight)
                for j0, a in self._columns[i]:
                    new_weight[j0] -= c * a
                seen[new_coords] = tuple(new_weight)
                queue.append(new_coords)
                if len(seen) > max_roots:
                    raise NotFiniteType("positive-root closure exceeded the safety bound")
        roots = []
        for coords, weight in seen.items():
            roots.append(PositiveRoot(weight, coords, self._coroot(coords, weight)))
        roots.sort(key=lambda r: (r.height, r.simple_coords))
        return tuple(roots)

    def _coroot(self, coords: Weight, weight: Weight) -> Weight:
        d = self.symmetrizer_int
        half_norm = Q(sum(c * di * w for c, di, w in zip(coords, d, weight)), 2)
        out = []
        for c, di in zip(coords, d):
            e = Q(c * di) / half_norm
            if e.denominator != 1:
                raise AssertionError("coroot functional must be integral")
            out.append(int(e))
        return tuple(out)

    # -- subsystem plumbing -------------------------------------------

    def sub_positive_roots(self, sub: Subsystem) -> tuple[PositiveRoot, ...]:
        """Positive roots supported on the given nodes."""
        key = sub.nodes
        cached = self._sub_roots.get(key)
        if cached is None:
            zero_based = {i - 1 for i in key}
            cached = tuple(
                r for r in self.positive_roots
                if all(c == 0 or j in zero_based for j, c in enumerate(r.simple_coords))
            )
            self._sub_roots[key] = cached
        return cached

    def is_dominant(self, sub: Subsystem, lam: Weight) -> bool:
        return all(lam[i - 1] >= 0 for i in sub.nodes)

    def check_rank(self, lam: Weight) -> Weight:
        lam = tuple(int(x) for x in lam)
        if len(lam) != self.rank:
            raise ValueError(f"weight has length {len(lam)}, expected {self.rank}")
        return lam

    # -- Weyl-group operations ----------------------------------------

    def reflect(self, i: int, lam: Weight) -> Weight:
        """Simple reflection s_i (1-based i): lam - lam_i * alpha_i."""
        c = lam[i - 1]
        if c == 0:
            return tuple(lam)
        out = list(lam)
        for j0, a in self._columns[i - 1]:
            out[j0] -= c * a
        return tuple(out)

    def make_dominant(self, sub: Subsystem, lam: Weight) -> tuple[int, Weight]:
        """Dominant representative of the sub-Weyl orbit and reflections used.

        Always reflects at the lowest-index negative node, so the count is
        reproducible; on regular orbits it equals the Weyl-group length of
        the minimal word.
        """
        nodes = sub.sorted_nodes
        cur = list(lam)
        count = 0
        while True:
            for i in nodes:
                c = cur[i - 1]
                if c < 0:
                    for j0, a in self._columns[i - 1]:
                        cur[j0] -= c * a
                    count += 1
                    break
            else:
                return count, tuple(cur)

    def dotted_to_dominant(self, sub: Subsystem, lam: Weight) -> Optional[tuple[int, Weight]]:
        """Dotted action w . lam = w(lam + rho) - rho driven to dominance.

        Returns None when lam + rho is singular for the subsystem (some
        coordinate at a sub node vanishes), else (length, dominant weight).
        """
        shifted = tuple(x + 1 for x in lam)
        count, dom = self.make_dominant(sub, shifted)
        if any(dom[i - 1] == 0 for i in sub.nodes):
            return None
        return count, tuple(x - 1 for x in dom)

    def dual_dominant(self, sub: Subsystem, lam: Weight) -> Weight:
        """Highest weight of the dual: dominant representative of -lam."""
        if not self.is_dominant(sub, lam):
            raise NotDominant(f"{lam} is not dominant for nodes {sorted(sub.nodes)}")
        return self.make_dominant(sub, tuple(-x for x in lam))[1]

    # -- orderings ----------------------------------------------------

    def height_vector(self) -> tuple[Q, ...]:
        """Row vector h with h . lam = sum of simple-root coordinates of lam."""
        if self._height_vec is None:
            n = self.rank
            a = [[Q(self.cartan.entries[i][j]) for j in range(n)] for i in range(n)]
            rhs = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
            for k in range(n):
                piv = next(i for i in range(k, n) if a[i][k] != 0)
                a[k], a[piv] = a[piv], a[k]
                rhs[k], rhs[piv] = rhs[piv], rhs[k]
                inv = 1 / a[k][k]
                a[k] = [x * inv for x in a[k]]
                rhs[k] = [x * inv for x in rhs[k]]
                for i in range(n):
                    if i != k and a[i][k] != 0:
                        f = a[i][k]
                        a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                        rhs[i] = [x - f * y for x, y in zip(rhs[i], rhs[k])]
            self._height_vec = tuple(sum(rhs[i][j] for i in range(n)) for j in range(n))
        return self._height_vec

    def height_of(self, lam: Weight) -> Q:
        """Sum of simple-root coordinates of lam (rational for non-root weights)."""
        return sum(h * x for h, x in zip(self.height_vector(), lam))

    def sort_key(self, lam: Weight):
        return (self.height_of(lam), lam)
