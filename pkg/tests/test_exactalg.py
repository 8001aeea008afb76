import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckedirac.exactalg import (
    Mat,
    Scalar,
    Subspace,
    image,
    kernel,
    parse_scalar,
    rank,
    simultaneous_generalized_eigenspaces,
    sqrt_of,
    sqrt_of_fraction,
)


def rand_scalar(rng, rads=(1, 2, 3)):
    parts = {}
    for d in rads:
        if rng.random() < 0.6:
            parts[d] = (Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                        Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    s = Scalar()
    for d, (re, im) in parts.items():
        term = Scalar.of(re) + Scalar.i(im)
        s = s + term * (sqrt_of(d) if d > 1 else Scalar.of(1))
    return s


# -- sqrt_of ---------------------------------------------------------------

def test_sqrt_of_one():
    assert sqrt_of(1) == Scalar.of(1)


def test_sqrt_of_perfect_square():
    assert sqrt_of(4) == Scalar.of(2)


def test_sqrt_of_eight_squares_back():
    # oracle: square the result exactly
    s = sqrt_of(8)
    assert s * s == Scalar.of(8)
    assert s == Scalar.of(2) * sqrt_of(2)


def test_sqrt_closure_product():
    # sqrt(2)*sqrt(6) = 2*sqrt(3): keys stay square-free
    p = sqrt_of(2) * sqrt_of(6)
    assert p == Scalar.of(2) * sqrt_of(3)
    assert all(d in (1, 2, 3, 5, 6, 7, 10, 15) or d > 1 for d in p.parts)
    for d in p.parts:
        for q in (4, 9, 25, 49):
            assert d % q != 0


def test_sqrt_of_fraction_negative():
    s = sqrt_of_fraction(Fraction(-9, 2))
    assert s * s == Scalar.of(Fraction(-9, 2))


# -- field axioms, randomized ------------------------------------------------

def test_field_axioms_randomized():
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = (rand_scalar(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
    for _ in range(200):
        a = rand_scalar(rng)
        if not a.is_zero():
            assert a * a.inverse() == Scalar.of(1)


@settings(max_examples=60, deadline=None)
@given(st.integers(-9, 9), st.integers(1, 6), st.integers(-9, 9), st.integers(-9, 9))
def test_inverse_round_trip(p, q, r, s):
    x = Scalar.of(Fraction(p, q)) + Scalar.i(r) + Scalar.of(s) * sqrt_of(2)
    if x.is_zero():
        return
    assert x.inverse() * x == Scalar.of(1)


def test_conjugate_fixes_real_radicals():
    x = Scalar.of(2) * sqrt_of(3) + Scalar.i(5)
    assert x.conjugate() == Scalar.of(2) * sqrt_of(3) - Scalar.i(5)


# -- serialization -----------------------------------------------------------

def test_str_matches_interface_form():
    x = Scalar.of(Fraction(3, 2)) + Scalar.i(Fraction(1, 2)) + (Scalar.of(2) - Scalar.i(1)) * sqrt_of(2)
    assert str(x) == "3/2 + 1/2*i + (2 - i)*sqrt(2)"


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_parse_round_trip_random(seed):
    rng = random.Random(seed)
    x = rand_scalar(rng, rads=(1, 2, 5))
    assert parse_scalar(str(x)) == x


# -- kernels and images -------------------------------------------------------

def test_kernel_zero_matrix():
    assert kernel(Mat.zeros(3, 3)).dim == 3


def test_kernel_image_identity():
    m = Mat.identity(4)
    assert kernel(m).dim == 0
    assert image(m).dim == 4


def test_kernel_with_radical_entries():
    r2 = sqrt_of(2)
    m = Mat.from_rows([[Scalar.of(1), r2], [r2, Scalar.of(2)]])
    k = kernel(m)
    assert k.dim == 1
    # oracle: M v = 0 exactly for the basis vector
    v = k.basis.a[0]
    for row in m.a:
        acc = Scalar()
        for x, y in zip(row, v):
            acc = acc + x * y
        assert acc.is_zero()
    # the canonical echelon basis of span{(-sqrt2, 1)} is (1, -sqrt2/... ) scaled
    assert k.contains_vec([-r2, Scalar.of(1)])


def test_rank_nullity_randomized():
    rng = random.Random(3)
    for _ in range(25):
        rows = [[rand_scalar(rng, rads=(1, 2)) for _ in range(5)] for _ in range(4)]
        m = Mat.from_rows(rows)
        assert rank(m) + kernel(m).dim == m.cols


# -- subspace arithmetic ------------------------------------------------------

def test_subspace_sum_intersect_trivial():
    a = Subspace.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], 4)
    b = Subspace.from_rows([[0, 0, 1, 0], [0, 0, 0, 1]], 4)
    assert a.intersect(b).dim == 0
    assert a.sum(b).dim == 4
    assert a.sum(a) == a
    assert a.intersect(a) == a


def test_modular_identity_randomized():
    rng = random.Random(11)
    for _ in range(20):
        ra = [[Scalar.of(rng.randint(-3, 3)) for _ in range(4)] for _ in range(2)]
        rb = [[Scalar.of(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
        a = Subspace.from_rows(ra, 4)
        b = Subspace.from_rows(rb, 4)
        assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_quotient_requires_containment():
    a = Subspace.from_rows([[1, 0], [0, 1]], 2)
    b = Subspace.from_rows([[1, 1]], 2)
    assert a.quotient_dim(b) == 1
    with pytest.raises(ValueError):
        b.quotient_dim(a)


def test_echelon_canonicality_under_change_of_basis():
    rng = random.Random(5)
    base = [[1, 2, 0, -1], [0, 1, 1, 1]]
    s = Subspace.from_rows(base, 4)
    for _ in range(20):
        # random invertible 2x2 integer change of basis
        while True:
            m = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
            if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0:
                break
        mixed = [
            [Scalar.of(m[0][0] * base[0][j] + m[0][1] * base[1][j]) for j in range(4)],
            [Scalar.of(m[1][0] * base[0][j] + m[1][1] * base[1][j]) for j in range(4)],
        ]
        assert Subspace.from_rows(mixed, 4) == s


# -- eigensplit ----------------------------------------------------------------

def test_eigensplit_diagonal():
    m = Mat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    pieces = simultaneous_generalized_eigenspaces([m])
    dims = sorted(p.dim for _, p in pieces)
    assert dims == [1, 2]


def test_eigensplit_jordan_block():
    m = Mat.from_rows([[5, 1], [0, 5]])
    pieces = simultaneous_generalized_eigenspaces([m])
    assert len(pieces) == 1
    (w, sub), = pieces
    assert w == (Scalar.of(5),) and sub.dim == 2
    # (M - 5)^dim vanishes on the piece
    n = (m - Mat.identity(2).scale(5))
    assert (n * n).is_zero()


def test_eigensplit_commuting_pair():
    a = Mat.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 3]])
    b = Mat.from_rows([[2, 1, 0], [0, 2, 0], [0, 0, 7]])
    pieces = simultaneous_generalized_eigenspaces([a, b])
    got = sorted(((tuple(x.rational() for x in w), s.dim) for w, s in pieces))
    assert got == [((Fraction(1), Fraction(2)), 2), ((Fraction(3), Fraction(7)), 1)]


def test_eigensplit_rejects_noncommuting():
    a = Mat.from_rows([[0, 1], [0, 0]])
    b = Mat.from_rows([[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        simultaneous_generalized_eigenspaces([a, b])
