"""Exact character arithmetic over a chosen subsystem.

A character is a finite dict {weight: multiplicity} with nonzero integer
values.  Irreducible characters come from Freudenthal's recursion on the
dominant cone; wedge and symmetric powers from Adams operations through
Newton's identities, with exact division as a built-in integrality check.
"""

from __future__ import annotations

import threading
from fractions import Fraction as Q
from typing import Iterable, Optional

from .errors import GuardrailExceeded, NonIntegralPlethysm, NotDecomposable, NotDominant
from .lie_core import RootSystem, Subsystem, Weight

Character = dict[Weight, int]

# Hard ceiling on character support; a product that would cross it is
# almost certainly a mistake in the calling code.
MAX_SUPPORT = 10 ** 6

_cache_lock = threading.Lock()
_char_cache: dict[tuple, Character] = {}
_cache_enabled = True


def set_cache_enabled(flag: bool) -> None:
    global _cache_enabled
    with _cache_lock:
        _cache_enabled = bool(flag)
        if not flag:
            _char_cache.clear()


def clear_cache() -> None:
    with _cache_lock:
        _char_cache.clear()


def _guard(size: int) -> None:
    if size > MAX_SUPPORT:
        raise GuardrailExceeded(f"character support {size} exceeds bound {MAX_SUPPORT}")


def _require_dominant(rs: RootSystem, sub: Subsystem, lam: Weight) -> Weight:
    lam = rs.check_rank(lam)
    if not rs.is_dominant(sub, lam):
        raise NotDominant(f"{lam} is not dominant on nodes {sorted(sub.nodes)}")
    return lam


# -- dimensions and orbits ---------------------------------------------


def weyl_dim(rs: RootSystem, sub: Subsystem, lam: Weight) -> int:
    """Dimension of the irreducible with highest weight lam, by the Weyl product."""
    lam = _require_dominant(rs, sub, lam)
    num = 1
    den = 1
    for r in rs.sub_positive_roots(sub):
        num *= sum(e * (x + 1) for e, x in zip(r.coroot, lam))
        den *= sum(r.coroot)
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl dimension must be an integer"
    return q


def weyl_orbit(rs: RootSystem, sub: Subsystem, lam: Weight) -> list[Weight]:
    """The sub-Weyl orbit of lam, deterministically ordered."""
    lam = rs.check_rank(lam)
    nodes = Subsystem.sorted_nodes.fget(sub)  # type: ignore[attr-defined]
    seen = {lam}
    queue = [lam]
    while queue:
        w = queue.pop()
        for i in nodes:
            nw = rs.reflect(i, w)
            if nw not in seen:
                _guard(len(seen) + 1)
                seen.add(nw)
                queue.append(nw)
    return sorted(seen)


def _dominant_weights(rs: RootSystem, sub: Subsystem, lam: Weight) -> dict[Weight, Weight]:
    """Sub-dominant weights of the irrep, mapped to root coordinates of lam - mu."""
    roots = rs.sub_positive_roots(sub)
    zero = (0,) * rs.rank
    found: dict[Weight, Weight] = {lam: zero}
    queue = [lam]
    while queue:
        mu = queue.pop()
        off = found[mu]
        for r in roots:
            nu = tuple(x - y for x, y in zip(mu, r.weight))
            if nu in found or not rs.is_dominant(sub, nu):
                continue
            found[nu] = tuple(x + y for x, y in zip(off, r.simple_coords))
            queue.append(nu)
    return found


def _freudenthal(rs: RootSystem, sub: Subsystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the sub-dominant weights of the irrep with highest weight lam."""
    roots = rs.sub_positive_roots(sub)
    d = rs.symmetrizer_int
    dom = _dominant_weights(rs, sub, lam)
    order = sorted(dom, key=lambda w: (sum(dom[w]), w))
    mults: dict[Weight, int] = {lam: 1}
    for nu in order:
        if nu == lam:
            continue
        off = dom[nu]  # root coordinates of lam - nu; positive total
        total = 0
        for r in roots:
            k = 1
            while True:
                mu = tuple(x + k * y for x, y in zip(nu, r.weight))
                _, dmu = rs.make_dominant(sub, mu)
                m = mults.get(dmu, 0)
                if m == 0:
                    break  # weight strings of an irrep have no internal gaps
                total += m * sum(c * di * x for c, di, x in zip(r.simple_coords, d, mu))
                k += 1
        den = sum(c * di * (a + b + 2) for c, di, a, b in zip(off, d, lam, nu))
        q, rem = divmod(2 * total, den)
        assert rem == 0 and q > 0, "Freudenthal recursion must yield positive integers"
        mults[nu] = q
    return mults


def irrep_character(rs: RootSystem, sub: Subsystem, lam: Weight) -> Character:
    """Full character of the irreducible with highest weight lam."""
    lam = _require_dominant(rs, sub, lam)
    key = (rs.key, sub.nodes, lam)
    if _cache_enabled:
        with _cache_lock:
            hit = _char_cache.get(key)
        if hit is not None:
            return dict(hit)
    out: Character = {}
    for nu, m in _freudenthal(rs, sub, lam).items():
        for w in weyl_orbit(rs, sub, nu):
            out[w] = m
        _guard(len(out))
    if _cache_enabled:
        with _cache_lock:
            _char_cache[key] = dict(out)
    return out


# -- ring operations ----------------------------------------------------


def char_dim(c: Character) -> int:
    return sum(c.values())


def char_add(a: Character, b: Character) -> Character:
    out = dict(a)
    for w, m in b.items():
        n = out.get(w, 0) + m
        if n:
            out[w] = n
        else:
            out.pop(w, None)
    return out


def char_scale(a: Character, k: int) -> Character:
    if k == 0:
        return {}
    return {w: m * k for w, m in a.items()}


def char_sub(a: Character, b: Character) -> Character:
    return char_add(a, char_scale(b, -1))


def char_mul(a: Character, b: Character) -> Character:
    if len(a) > len(b):
        a, b = b, a
    out: Character = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            n = out.get(w, 0) + ma * mb
            if n:
                out[w] = n
            else:
                del out[w]
        _guard(len(out))
    return out


def char_dual(a: Character) -> Character:
    return {tuple(-x for x in w): m for w, m in a.items()}


def char_twist(a: Character, node: int, t: int) -> Character:
    """Shift every weight by t at the given node (1-based)."""
    if t == 0:
        return dict(a)
    i = node - 1
    return {w[:i] + (w[i] + t,) + w[i + 1:]: m for w, m in a.items()}


# -- plethysms -----------------------------------------------------------


def adams(c: Character, k: int) -> Character:
    """Adams operation: stretch every weight by k."""
    if k < 1:
        raise ValueError("adams operation needs k >= 1")
    if k == 1:
        return dict(c)
    return {tuple(k * x for x in w): m for w, m in c.items()}


def _rank_of(c: Character) -> int:
    for w in c:
        return len(w)
    raise ValueError("cannot infer rank from an empty character")


def power_op(c: Character, k: int, kind: str) -> Character:
    """Wedge or symmetric power via Newton's identities on Adams operations."""
    if kind == "adams":
        return adams(c, k)
    if kind not in ("wedge", "sym"):
        raise ValueError(f"unknown power operation {kind!r}")
    if k < 0:
        raise ValueError("power operations need k >= 0")
    if k == 0:
        return {(0,) * _rank_of(c): 1}
    if any(m < 0 for m in c.values()):
        raise ValueError(f"{kind} power of a virtual character is undefined")
    # Newton: k e_k = sum_{i=1..k} (-1)^(i-1) psi_i e_{k-i};  k h_k likewise
    # with all plus signs.
    layers: list[Character] = [{(0,) * _rank_of(c): 1} if c else {}]
    psis = [adams(c, i) for i in range(1, k + 1)]
    for m in range(1, k + 1):
        acc: Character = {}
        for i in range(1, m + 1):
            term = char_mul(psis[i - 1], layers[m - i])
            if kind == "wedge" and i % 2 == 0:
                term = char_scale(term, -1)
            acc = char_add(acc, term)
        layer: Character = {}
        for w, n in acc.items():
            q, rem = divmod(n, m)
            if rem:
                raise NonIntegralPlethysm(f"{kind}^{m} multiplicity {n}/{m} at {w}")
            if q:
                layer[w] = q
        layers.append(layer)
    return layers[k]


# -- decomposition -------------------------------------------------------


def decompose(
    rs: RootSystem, sub: Subsystem, c: Character, virtual: bool = False
) -> list[tuple[Weight, int]]:
    """Write a character as a sum of irreducibles, highest weights first.

    Repeatedly strips the maximal weight in (height, lex) order; that
    weight must be sub-dominant, and unless `virtual` is set its
    multiplicity must be positive.
    """
    work = {w: m for w, m in c.items() if m}
    heights: dict[Weight, Q] = {}

    def key(w: Weight):
        h = heights.get(w)
        if h is None:
            h = rs.height_of(w)
            heights[w] = h
        return (h, w)

    out: list[tuple[Weight, int]] = []
    budget = 10 * len(work) + 1000
    while work:
        budget -= 1
        if budget < 0:
            raise NotDecomposable("decomposition did not terminate; input is not finite-dimensional")
        mu = max(work, key=key)
        m = work[mu]
        if not rs.is_dominant(sub, mu):
            raise NotDecomposable(f"maximal weight {mu} is not dominant on nodes {sorted(sub.nodes)}")
        if m < 0 and not virtual:
            raise NotDecomposable(f"maximal weight {mu} has negative multiplicity {m}")
        for w, cm in irrep_character(rs, sub, mu).items():
            n = work.get(w, 0) - m * cm
            if n:
                work[w] = n
            else:
                work.pop(w, None)
        out.append((mu, m))
    out.sort(key=lambda t: key(t[0]))
    return out


def from_components(
    rs: RootSystem, sub: Subsystem, comps: Iterable[tuple[Weight, int]]
) -> Character:
    """Inverse of decompose: rebuild the character of a sum of irreducibles."""
    acc: Character = {}
    for w, m in comps:
        acc = char_add(acc, char_scale(irrep_character(rs, sub, w), m))
    return acc
