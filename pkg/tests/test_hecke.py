import math
import random
from fractions import Fraction

import pytest

from heckedirac.chartable import induced_sign_character, multiplicity, sym_irreducible_character
from heckedirac.exactalg import Mat, Scalar
from heckedirac.hecke import (
    HAlgebra,
    HModule,
    direct_sum,
    extend_to_graded,
    im_dual,
    induce_multisegment,
    induce_one_dim,
    intertwiner_matrices,
    is_tempered,
    isotypic_component,
    simple_quotient,
    spin_subspace,
    theta_twist,
    typec_standard,
    z2_grading,
)
from heckedirac.segments import Multisegment, bgg_terms


def E(alg, text):
    return induce_multisegment(alg, Multisegment.parse(text).pairs())


def test_sign_module_structure():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    assert x.dim == 1
    for t in x.t_mats:
        assert t == Mat.from_rows([[-1]])
    for k, v in enumerate(x.v_mats):
        assert v == Mat.from_rows([[k - 1]])  # weight (-1, 0, 1)


def test_vtilde_kills_sign_module():
    # weight -1 plus (1/2) sum over alpha>0 of alpha^vee(eps_1)*(t sign) = -1+1 = 0
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    for k in range(3):
        ek = [Fraction(0)] * 3
        ek[k] = Fraction(1)
        assert x.vtilde_matrix(ek).is_zero()


def test_vtilde_equals_v_at_c_zero():
    alg = HAlgebra(HAlgebra.type_a(2).rs, c_factor=Fraction(0))
    # trivial W-rep with all v acting by zero
    t_mats = [Mat.identity(1)]
    v_mats = [Mat.zeros(1, 1), Mat.zeros(1, 1)]
    x = HModule(alg, t_mats, v_mats, weight_values=[0])
    for k in range(2):
        ek = [Fraction(0)] * 2
        ek[k] = Fraction(1)
        assert x.vtilde_matrix(ek) == x.v_matrix(ek)


def test_vtilde_equivariance_random():
    rng = random.Random(13)
    alg = HAlgebra.type_a(3)
    mods = [E(alg, "[-1,1]"), E(alg, "[0,1];[0,0]"), E(alg, "[1,1];[0,0];[-1,-1]")]
    for x in mods:
        for i in range(alg.num_simples):
            t = x.t_mats[i]
            for _ in range(6):
                v = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
                sv = alg.rs.reflect(alg.rs.simples[i], v)
                assert t * x.vtilde_matrix(v) * t == x.vtilde_matrix(sv)


def test_induce_dimension_is_coset_count():
    alg = HAlgebra.type_a(4)
    x = E(alg, "[0,1];[-1,0]")
    assert x.dim == math.factorial(4) // (2 * 2)  # [S4 : S2 x S2] = 6
    y = E(alg, "[-1,1];[0,0]")
    assert y.dim == 4


def test_induced_w_character_matches_formula():
    # oracle: direct traces versus the induced-character enumeration formula
    alg = HAlgebra.type_a(4)
    for text, lengths in (("[0,1];[-1,0]", (2, 2)), ("[-1,1];[0,0]", (3, 1))):
        x = E(alg, text)
        chi = x.w_character()
        want = induced_sign_character(4, lengths)
        # same class data ordering: compare via inner products against irreducibles
        from heckedirac.partitions import partitions_of

        for lam in partitions_of(4):
            irr = sym_irreducible_character(4, lam.parts)
            assert multiplicity(chi, irr) == multiplicity(want, irr)


def test_theta_selfdual_single_segment():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    th = theta_twist(alg, x)
    assert th.dim == 1
    mats = intertwiner_matrices(alg, x, th)
    assert len(mats) == 1  # explicit intertwiner found by linear solve


def test_im_is_involution():
    alg = HAlgebra.type_a(4)
    x = E(alg, "[0,1];[-1,0]")
    y = im_dual(alg, im_dual(alg, x))
    assert all(a == b for a, b in zip(x.t_mats, y.t_mats))
    assert all(a == b for a, b in zip(x.v_mats, y.v_mats))


def test_theta_involution_up_to_iso():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[0,1];[0,0]")
    tt = theta_twist(alg, theta_twist(alg, x))
    assert all(a == b for a, b in zip(x.t_mats, tt.t_mats))
    assert all(a == b for a, b in zip(x.v_mats, tt.v_mats))


def test_grading_one_dimensional():
    alg = HAlgebra.type_a(3)
    x = z2_grading(alg, E(alg, "[-1,1]"))
    plus, minus = x.grading
    assert {plus.dim, minus.dim} == {1, 0}


def test_grading_selfdual_pair():
    alg = HAlgebra.type_a(4)
    x = E(alg, "[0,1];[-1,0]")  # theta-selfdual multisegment
    g = z2_grading(alg, x)
    plus, minus = g.grading
    assert plus.dim + minus.dim == 6
    g.audit_grading()


def test_extend_to_graded():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[0,1];[0,0]")  # not theta-selfdual
    xx = extend_to_graded(alg, x)
    assert xx.dim == 2 * x.dim
    plus, minus = xx.grading
    assert plus.dim == minus.dim == x.dim


def test_grading_uniqueness_up_to_swap_for_irreducible():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    th = theta_twist(alg, x)
    mats = intertwiner_matrices(alg, x, th)
    assert len(mats) == 1  # intertwiner unique up to scalar -> gradings swap


def test_weights_single_segment():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    assert x.weights() == [((Fraction(-1), Fraction(0), Fraction(1)), 1)]


def test_weights_golden_pair():
    alg = HAlgebra.type_a(4)
    x = E(alg, "[0,1];[-1,0]")
    wts = x.weights()
    assert sum(m for _, m in wts) == 6
    from heckedirac.hecke import orbit_key

    keys = {orbit_key(alg.rs, wt) for wt, _ in wts}
    assert keys == {(Fraction(1), Fraction(0), Fraction(0), Fraction(-1))}
    assert x.central_character() == (1, 0, 0, -1)


def test_no_central_character_for_mixed_sum():
    alg = HAlgebra.type_a(3)
    a = E(alg, "[-1,1]")
    b = E(alg, "[0,2]")
    s = direct_sum(alg, a, b, audit=True)
    assert s.central_character() is None


def test_is_tempered_examples():
    alg3 = HAlgebra.type_a(3)
    assert is_tempered(alg3, E(alg3, "[-1,1]"))
    alg4 = HAlgebra.type_a(4)
    assert not is_tempered(alg4, E(alg4, "[0,1];[-1,0]"))
    assert is_tempered(alg4, E(alg4, "[-1,1];[0,0]"))


def test_simple_quotient_already_simple():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[-1,1]")
    l, rad = simple_quotient(alg, x)
    assert rad.dim == 0 and l.dim == 1


def test_simple_quotient_golden_pair():
    alg = HAlgebra.type_a(4)
    x = E(alg, "[0,1];[-1,0]")
    l, rad = simple_quotient(alg, x)
    # oracle: two-term resolution Euler characteristic 6 - 4 = 2
    assert x.dim - E(alg, "[-1,1];[0,0]").dim == 2
    assert l.dim == 2
    assert rad.dim == 4


def test_simple_quotient_w_character_is_alternating_sum():
    alg = HAlgebra.type_a(4)
    m = Multisegment.parse("[0,1];[-1,0]")
    x = induce_multisegment(alg, m.pairs())
    l, _rad = simple_quotient(alg, x)
    chi = l.w_character()
    total = None
    for _w, sign, piece in bgg_terms(m):
        if piece is None:
            continue
        lengths = tuple(s.length for s in piece)
        term = induced_sign_character(4, lengths) * sign
        total = term if total is None else total + term
    from heckedirac.partitions import partitions_of

    for lam in partitions_of(4):
        irr = sym_irreducible_character(4, lam.parts)
        assert multiplicity(chi, irr) == multiplicity(total, irr)


def test_spin_subspace_reaches_module():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[0,1];[0,0]")
    gen = [Scalar.of(1 if i == 0 else 0) for i in range(x.dim)]
    assert spin_subspace(x, [gen]).dim == x.dim


def test_lowest_type_generates_graded_selfdual():
    # E({[0,1],[-1,0]}) is theta-selfdual, so E' = E itself carries the grading;
    # the single lowest-type copy sits inside one graded part and generates E.
    alg = HAlgebra.type_a(4)
    g = z2_grading(alg, E(alg, "[0,1];[-1,0]"))
    sigma = sym_irreducible_character(4, (2, 2))  # mu = (2,2), lowest type sigma_{mu^T}
    iso = isotypic_component(g, sigma)
    plus, minus = g.grading
    in_plus, in_minus = iso.intersect(plus), iso.intersect(minus)
    assert {in_plus.dim, in_minus.dim} == {0, 2}
    seed = in_plus if in_plus.dim else in_minus
    assert spin_subspace(g, list(seed.basis.a)).dim == g.dim


def test_lowest_type_generates_extended_module():
    # non-selfdual case: E' = E (+) theta(E), one lowest-type copy per part
    alg = HAlgebra.type_a(5)
    x = E(alg, "[0,2];[-1,0]")
    xx = extend_to_graded(alg, x)
    sigma = sym_irreducible_character(5, (2, 2, 1))  # lengths (3,2) transposed
    iso = isotypic_component(xx, sigma)
    seed = iso.intersect(xx.grading[0])
    assert seed.dim == 5  # one copy of the five-dimensional sigma_(2,2,1)
    assert spin_subspace(xx, list(seed.basis.a)).dim == xx.dim


def test_typec_standard_full_j():
    alg = HAlgebra.type_c(2, Fraction(17, 10))
    m = alg.rs.m
    gamma = (m / 2 + 1, m / 2)
    x = typec_standard(alg, [0, 1], {0: 1, 1: 1}, gamma)
    assert x.dim == 1
    assert is_tempered(alg, x)


def test_typec_standard_principal_series():
    alg = HAlgebra.type_c(2, Fraction(17, 10))
    m = alg.rs.m
    gamma = (-m - 1, -m)
    x = typec_standard(alg, [], {}, gamma)
    assert x.dim == 8
    assert not is_tempered(alg, x)
    assert x.central_character() == (m + 1, m)


def test_typec_standard_rejects_bad_weights():
    alg = HAlgebra.type_c(2, Fraction(17, 10))
    m = alg.rs.m
    with pytest.raises(ValueError):
        typec_standard(alg, [], {}, (m, m + 1))  # gamma(alpha) >= 0 off J


def test_typec_sweep_instance_weight_from_contents():
    # s_lambda family member W(m, m-1) reached by a J = empty instance
    alg = HAlgebra.type_c(2, Fraction(17, 10))
    m = alg.rs.m
    x = typec_standard(alg, [], {}, (-m, -(m - 1)))
    assert x.dim == 8
    assert x.central_character() == (m, m - 1)


def test_relation_audit_catches_corruption():
    alg = HAlgebra.type_a(3)
    x = E(alg, "[0,1];[0,0]")
    bad_t = [m.copy() for m in x.t_mats]
    bad_t[0].a[0][0] = bad_t[0].a[0][0] + Scalar.of(1)
    with pytest.raises(AssertionError):
        HModule(alg, bad_t, x.v_mats)
