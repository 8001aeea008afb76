import math
import random
from fractions import Fraction

import pytest

from heckedirac.clifford import (
    build_spin_context,
    epsilon_of,
    predicted_genuine_dim_multiset,
    spin_char_table,
    spin_cover,
    spin_irrep_dimension,
)
from heckedirac.exactalg import Mat, Scalar, sqrt_of
from heckedirac.partitions import Partition, dp_class
from heckedirac.weyl import build_root_system


def test_rank_one_spin_modules():
    ctx = build_spin_context("A", 1)  # n = 1
    assert ctx.dim_s == 1
    assert ctx.gammas[0] == Mat.from_rows([[Scalar.i(1)]])
    assert ctx.gammas_minus[0] == Mat.from_rows([[Scalar.i(-1)]])


def test_a2_spin_context():
    ctx = build_spin_context("A", 2)  # n = 2
    assert ctx.dim_s == 2
    g1, g2 = ctx.gammas
    assert (g1 * g2 + g2 * g1).is_zero()
    assert g1 * g1 == Mat.identity(2).scale(-1)


def test_a3_two_simples_inequivalent():
    ctx = build_spin_context("A", 3)  # n = 3, two simples of dim 2
    assert ctx.dim_s == 2
    # oracle: trace of gamma1 gamma2 gamma3 separates S+ from S-
    prod_p = ctx.gammas[0] * ctx.gammas[1] * ctx.gammas[2]
    prod_m = ctx.gammas_minus[0] * ctx.gammas_minus[1] * ctx.gammas_minus[2]
    assert prod_p.trace() == -prod_m.trace()
    assert not prod_p.trace().is_zero()


def test_gtilde_squares_to_minus_norm():
    rng = random.Random(4)
    for label, rank, m in (("A", 2, None), ("A", 3, None), ("C", 2, Fraction(17, 10))):
        ctx = build_spin_context(label, rank, m)
        rs = ctx.rs
        for _ in range(20):
            coeffs = [Fraction(rng.randint(-3, 3)) for _ in rs.simples]
            v = [Fraction(0)] * rs.ambient
            for c, alpha in zip(coeffs, rs.simples):
                v = [x + c * a for x, a in zip(v, alpha)]
            norm = sum(x * x for x in v)
            g = ctx.gamma_for_vector(v)
            assert g * g == Mat.identity(ctx.dim_s).scale(Scalar.of(-norm))


def test_stilde_squares_and_braid():
    ctx = build_spin_context("A", 1)
    s = ctx.stilde(ctx.rs.simples[0])
    # oracle: g~_alpha^2 = -<alpha,alpha> = -2, divided by |alpha|^2 = 2
    assert s * s == Mat.identity(1).scale(-1)

    ctx2 = build_spin_context("A", 2)
    s1 = ctx2.stilde(ctx2.rs.simples[0])
    s2 = ctx2.stilde(ctx2.rs.simples[1])
    prod = s1 * s2
    cube = prod * prod * prod
    assert cube == Mat.identity(2).scale(-1)  # braid lift


def test_stilde_conjugation_projects_to_reflection():
    rng = random.Random(9)
    ctx = build_spin_context("A", 2)
    rs = ctx.rs
    for alpha in rs.positives:
        s = ctx.stilde(alpha)
        sinv = s.scale(-1)  # s~^2 = -1
        for beta in rs.positives:
            g = ctx.gamma_for_vector(beta)
            conj = s * g * sinv
            want = ctx.gamma_for_vector(rs.reflect(alpha, beta))
            assert conj == want or conj == want.scale(-1)
        # and the vector-level projection matches weyl action on random vectors
        for _ in range(10):
            coeffs = [Fraction(rng.randint(-2, 2)) for _ in rs.simples]
            v = [Fraction(0)] * rs.ambient
            for c, a in zip(coeffs, rs.simples):
                v = [x + c * y for x, y in zip(v, a)]
            gv = ctx.gamma_for_vector(v)
            assert s * gv * sinv == ctx.gamma_for_vector(rs.reflect(alpha, v)).scale(-1)


def test_spin_cover_order_and_center():
    for label, rank, m in (("A", 2, None), ("A", 3, None), ("C", 2, Fraction(3, 2))):
        cover = spin_cover(label, rank, m)
        rs = build_root_system(label, rank, m)
        assert cover.group.order == 2 * rs.order()
        # kernel of projection is {+-1}
        idents = [i for i in range(cover.group.order)
                  if cover.weyl_projection(i).is_identity()]
        assert sorted(idents) == sorted([0, cover.minus_one_index])


def test_s3tilde_genuine_dims():
    table = spin_char_table("A", 2)
    dims = table.genuine_dims()
    assert dims == [1, 1, 2]
    assert sum(d * d for d in dims) == 6


def test_s4tilde_genuine_includes_dim4():
    table = spin_char_table("A", 3)
    assert 4 in table.genuine_dims()
    assert sum(d * d for d in table.genuine_dims()) == 24


def test_genuine_character_value_at_center():
    table = spin_char_table("A", 2)
    for c, g in zip(table.chars, table.genuine):
        v1 = c.dim
        vz = c.values[table.minus_one_class]
        assert (vz == -v1) == g
        if not g:
            assert vz == v1


def test_spin_dim_formula_vs_tables():
    # oracle: Dixon tables of S~_3 and S~_4
    assert spin_irrep_dimension((3,)) == 2  # basic spin, l = 3
    assert spin_irrep_dimension((2, 1)) == 1
    assert spin_irrep_dimension((3, 1)) == 4
    assert predicted_genuine_dim_multiset(3) == spin_char_table("A", 2).genuine_dims()
    assert predicted_genuine_dim_multiset(4) == spin_char_table("A", 3).genuine_dims()


def test_spin_dim_formula_rejects_non_strict():
    with pytest.raises(ValueError):
        spin_irrep_dimension((2, 2))


def test_basic_spin_dimension():
    for l in (3, 4, 5, 6):
        assert spin_irrep_dimension((l,)) == 2 ** ((l - 1) // 2)


def test_epsilon_and_dp_class():
    assert dp_class(Partition((3,))) == "DP+"
    assert epsilon_of((3,)) == Scalar.of(1)
    assert dp_class(Partition((2, 1))) == "DP-"
    assert epsilon_of((2, 1)) == sqrt_of(2)
    assert dp_class(Partition((4,))) == "DP-"


def test_genuine_sum_rule_c2():
    table = spin_char_table("C", 2, Fraction(1))
    assert sum(d * d for d in table.genuine_dims()) == 8


def test_sign_of_canonical_lift():
    cover = spin_cover("A", 2)
    for i in range(cover.group.order):
        assert cover.sign_of(i) in (1, -1)
    # identity has sign +1, central -1 has sign -1
    assert cover.sign_of(0) == 1
    assert cover.sign_of(cover.minus_one_index) == -1
