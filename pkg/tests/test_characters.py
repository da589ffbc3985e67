"""Weyl dimensions, Freudenthal characters, plethysms and decomposition."""

import random

import pytest

from weylbott import RootSystem, Subsystem, get_preset
from weylbott.characters import (
    MAX_SUPPORT,
    adams,
    char_add,
    char_dim,
    char_dual,
    char_mul,
    char_scale,
    char_sub,
    char_twist,
    clear_cache,
    decompose,
    from_components,
    irrep_character,
    power_op,
    set_cache_enabled,
    weyl_dim,
    weyl_orbit,
)
from weylbott.errors import GuardrailExceeded, NotDecomposable, NotDominant

from oracles import orbit_sum_character

W = [tuple(1 if i == j else 0 for i in range(6)) for j in range(6)]
ZERO6 = (0,) * 6

E6_FUNDAMENTAL_DIMS = (27, 351, 2925, 78, 351, 27)
LEVI_FUNDAMENTAL_DIMS = {5: 10, 4: 45, 2: 120, 3: 16, 1: 16}  # 0-based node -> dim


def binomial(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


# -- dimensions ---------------------------------------------------------------


def test_e6_fundamental_dims(e6, e6_full):
    assert tuple(weyl_dim(e6, e6_full, w) for w in W) == E6_FUNDAMENTAL_DIMS


def test_levi_fundamental_dims(e6, e6_levi):
    for node0, dim in LEVI_FUNDAMENTAL_DIMS.items():
        assert weyl_dim(e6, e6_levi, W[node0]) == dim
    # crossed coordinate never changes a Levi rank
    assert weyl_dim(e6, e6_levi, (-9, 0, 0, 0, 0, 1)) == 10


def test_dim_of_zero_weight(e6, e6_full, e6_levi):
    assert weyl_dim(e6, e6_full, ZERO6) == 1
    assert weyl_dim(e6, e6_levi, ZERO6) == 1


def test_dim_requires_dominance(e6, e6_full):
    with pytest.raises(NotDominant):
        weyl_dim(e6, e6_full, (0, -1, 0, 0, 0, 0))


# -- irreducible characters -----------------------------------------------------


def test_trivial_character(e6, e6_full):
    assert irrep_character(e6, e6_full, ZERO6) == {ZERO6: 1}


def test_vector_character_weights(e6, e6_levi):
    ch = irrep_character(e6, e6_levi, W[5])
    assert char_dim(ch) == 10
    assert all(m == 1 for m in ch.values())
    assert ch[W[5]] == 1


def test_character_totals_match_weyl_dim(e6, e6_full, e6_levi):
    for j, w in enumerate(W):
        assert char_dim(irrep_character(e6, e6_full, w)) == E6_FUNDAMENTAL_DIMS[j]
    for node0, dim in LEVI_FUNDAMENTAL_DIMS.items():
        assert char_dim(irrep_character(e6, e6_levi, W[node0])) == dim


def test_adjoint_character_structure(e6, e6_full):
    ch = irrep_character(e6, e6_full, W[3])
    assert ch[ZERO6] == 6  # Cartan subalgebra
    assert char_dim(ch) == 78
    nonzero = {w: m for w, m in ch.items() if w != ZERO6}
    assert all(m == 1 for m in nonzero.values())
    assert set(nonzero) == {r.weight for r in e6.positive_roots} | {
        tuple(-x for x in r.weight) for r in e6.positive_roots
    }


def test_character_weyl_invariance(e6, e6_full):
    ch = irrep_character(e6, e6_full, (1, 0, 0, 0, 0, 1))
    rng = random.Random(3)
    for w, m in list(ch.items())[:50]:
        i = rng.randint(1, 6)
        assert ch[e6.reflect(i, w)] == m


@pytest.mark.parametrize(
    "preset,sub_nodes,lam",
    [
        ("A2", None, (2, 1)),
        ("A2", None, (3, 0)),
        ("B3", None, (0, 0, 1)),
        ("B3", None, (1, 0, 1)),
        ("D5", None, (1, 0, 0, 0, 0)),
        ("D5", None, (0, 0, 0, 1, 0)),
    ],
)
def test_freudenthal_against_orbit_sums(preset, sub_nodes, lam):
    rs = RootSystem(get_preset(preset))
    sub = Subsystem.full(rs.rank)
    assert irrep_character(rs, sub, lam) == orbit_sum_character(rs, sub, lam)


def test_freudenthal_against_orbit_sums_levi(e6, e6_levi):
    for lam in [W[5], W[3], (-1, 0, 0, 0, 0, 1), (0, 0, 0, 0, 0, 2)]:
        assert irrep_character(e6, e6_levi, lam) == orbit_sum_character(e6, e6_levi, lam)


def test_freudenthal_minuscule_is_single_orbit(e6, e6_full):
    # the 27 is minuscule: its character is one Weyl orbit, all multiplicities 1
    assert irrep_character(e6, e6_full, W[5]) == {
        w: 1 for w in weyl_orbit(e6, e6_full, W[5])
    }


def test_weyl_orbit_sizes(e6, e6_full, e6_levi):
    assert len(weyl_orbit(e6, e6_full, W[5])) == 27  # minuscule: one orbit
    assert len(weyl_orbit(e6, e6_levi, W[5])) == 10
    assert weyl_orbit(e6, e6_full, ZERO6) == [ZERO6]


def test_cache_toggle(e6, e6_full):
    clear_cache()
    a = irrep_character(e6, e6_full, W[0])
    set_cache_enabled(False)
    try:
        b = irrep_character(e6, e6_full, W[0])
    finally:
        set_cache_enabled(True)
    assert a == b
    # returned dicts are private copies: mutating one must not leak
    a[ZERO6] = 99
    assert irrep_character(e6, e6_full, W[0]) != a


# -- ring operations --------------------------------------------------------------


def test_char_arithmetic_basics(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    one = {ZERO6: 1}
    assert char_add(s, {}) == s
    assert char_sub(s, s) == {}
    assert char_mul(s, one) == s
    assert char_scale(s, 3) == {w: 3 * m for w, m in s.items()}
    assert char_dim(char_mul(s, s)) == 100
    t = irrep_character(e6, e6_levi, W[3])
    assert char_mul(s, t) == char_mul(t, s)


def test_char_twist_and_dual(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    assert char_twist(s, 1, 0) == s
    assert char_twist(char_twist(s, 1, 5), 1, -5) == s
    assert char_dual(char_dual(s)) == s
    # rank-10 factor is self-dual up to a twist
    assert char_dual(s) == char_twist(s, 1, -1)


def test_guardrail(e6):
    big = {(i, j, 0, 0, 0, 0): 1 for i in range(1100) for j in range(1000)}
    with pytest.raises(GuardrailExceeded):
        char_mul(big, {(0, 1, 0, 0, 0, 0): 1, (1, 0, 0, 0, 0, 0): 1})
    assert len(big) > MAX_SUPPORT  # the input itself was over the line


# -- plethysms ----------------------------------------------------------------------


def test_adams_basics(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    assert adams(s, 1) == s
    assert char_dim(adams(s, 3)) == 10
    assert power_op(s, 2, "adams") == {tuple(2 * x for x in w): m for w, m in s.items()}


def test_power_op_degenerate_cases(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    assert power_op(s, 0, "wedge") == {ZERO6: 1}
    assert power_op(s, 1, "wedge") == s
    assert power_op(s, 1, "sym") == s
    assert power_op(s, 11, "wedge") == {}  # beyond the rank
    line = {(2, 0, 0, 0, 0, 0): 1}
    assert power_op(line, 3, "sym") == {(6, 0, 0, 0, 0, 0): 1}
    assert power_op(line, 2, "wedge") == {}
    with pytest.raises(ValueError):
        power_op(char_scale(s, -1), 2, "wedge")
    with pytest.raises(ValueError):
        power_op(s, 2, "cube")


def test_power_op_dimension_counts(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    for k in range(5):
        assert char_dim(power_op(s, k, "wedge")) == binomial(10, k)
        assert char_dim(power_op(s, k, "sym")) == binomial(10 + k - 1, k)


def test_wedge_powers_of_vector_bundle(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    expected = {1: W[5], 2: W[4], 3: W[2], 4: (0, 1, 0, 1, 0, 0)}
    for k, top in expected.items():
        assert decompose(e6, e6_levi, power_op(s, k, "wedge")) == [(top, 1)]


def test_binomial_identity_wedge_sym(e6, e6_levi):
    # sum_k (-1)^k e_k h_{n-k} = 0 for n >= 1: Newton consistency across kinds
    s = irrep_character(e6, e6_levi, W[3])
    n = 3
    acc = {}
    for k in range(n + 1):
        term = char_mul(power_op(s, k, "wedge"), power_op(s, n - k, "sym"))
        acc = char_add(acc, char_scale(term, (-1) ** k))
    assert acc == {}


# -- decomposition ----------------------------------------------------------------


def test_decompose_round_trip(e6, e6_levi):
    comps = [((0, 0, 0, 0, 0, 2), 2), ((2, 0, 0, 0, 1, 0), 1), ((-1, 0, 0, 0, 0, 0), 5)]
    ch = from_components(e6, e6_levi, comps)
    assert decompose(e6, e6_levi, ch) == sorted(
        comps, key=lambda t: (e6.height_of(t[0]), t[0])
    )


def test_decompose_tensor_square(e6, e6_levi):
    s = irrep_character(e6, e6_levi, W[5])
    comps = decompose(e6, e6_levi, char_mul(s, s))
    assert set(comps) == {
        ((1, 0, 0, 0, 0, 0), 1),
        ((0, 0, 0, 0, 1, 0), 1),
        ((0, 0, 0, 0, 0, 2), 1),
    }


def test_decompose_rejects_virtual(e6, e6_levi):
    with pytest.raises(NotDecomposable):
        decompose(e6, e6_levi, {W[5]: -1})
    # the diagnostic mode accepts any integer combination of irreducibles
    s = irrep_character(e6, e6_levi, W[5])
    virt = char_sub(s, char_scale({ZERO6: 1}, 2))
    assert decompose(e6, e6_levi, virt, virtual=True) == [(ZERO6, -2), (W[5], 1)]


def test_decompose_rejects_asymmetric(e6, e6_levi):
    bad = dict(irrep_character(e6, e6_levi, W[5]))
    top = max(bad, key=lambda w: (e6.height_of(w), w))
    del bad[top]
    with pytest.raises(NotDecomposable):
        decompose(e6, e6_levi, bad)
