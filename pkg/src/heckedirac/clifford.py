"""Clifford algebra of the root span, concrete spin modules, and the spin cover.

Gamma matrices come from the iterated Pauli construction multiplied by i, so
g~_v^2 = -<v, v> exactly and all Clifford entries stay in Q(i); square roots
enter only through the |alpha| normalizations of s~_alpha = g~_alpha/|alpha|.
For odd-dimensional root spans both simple modules S+ and S- are built, and
group-element equality is tested on S+ (+) S- so the center stays separated.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .chartable import ClassFunction, FiniteGroup, burnside_character_table
from .exactalg import Mat, Scalar, sqrt_of_fraction
from .partitions import Partition, dp_class, strict_partitions_of
from .weyl import RootSystem, build_root_system, dot

SPIN_DIM_BOUND = 12


def _pauli():
    i = Scalar.i(1)
    sx = Mat.from_rows([[0, 1], [1, 0]])
    sy = Mat.from_rows([[Scalar.of(0), -i], [i, Scalar.of(0)]])
    sz = Mat.from_rows([[1, 0], [0, -1]])
    return sx, sy, sz


def _hermitian_gammas(n):
    """Anticommuting Gamma_1..Gamma_n with Gamma^2 = +1, iterated tensor form."""
    sx, sy, sz = _pauli()
    m = n // 2
    dim = 2 ** m
    out = []

    def chain(mats):
        acc = mats[0]
        for mm in mats[1:]:
            acc = acc.kron(mm)
        return acc

    ident = Mat.identity(2)
    for k in range(1, m + 1):
        pre = [sz] * (k - 1)
        post = [ident] * (m - k)
        out.append(chain(pre + [sx] + post) if m else Mat.identity(1))
        out.append(chain(pre + [sy] + post))
    if n % 2 == 1:
        out.append(chain([sz] * m) if m else Mat.identity(1))
    return out, dim


class SpinContext:
    """Orthonormal basis of the root span and gamma matrices acting on S.

    For odd n the two simple modules differ in the sign of the last gamma;
    `gammas` belongs to S+ and `gammas_minus` to S-.
    """

    def __init__(self, rs: RootSystem, order=None):
        self.rs = rs
        simples = rs.simples
        n = len(simples)
        if n > SPIN_DIM_BOUND:
            raise ValueError("root span too large for desk-scale spin module")
        self.n = n
        if order is None:
            order = tuple(range(n))

        # Gram-Schmidt over the exact field; default processing order is the
        # simple-root order, a permutation is accepted for independence tests
        raw = []
        for k in order:
            alpha = simples[k]
            u = [Fraction(x) for x in alpha]
            for v in raw:
                coef = dot(u, v) / dot(v, v)
                u = [x - coef * y for x, y in zip(u, v)]
            raw.append(u)
        self.orthonormal_basis = []
        for u in raw:
            norm = sqrt_of_fraction(dot(u, u))
            inv = norm.inverse()
            self.orthonormal_basis.append([Scalar.of(x) * inv for x in u])

        if n == 0:
            self.dim_s = 1
            self.gammas = []
            self.gammas_minus = []
        else:
            herm, dim = _hermitian_gammas(n)
            i = Scalar.i(1)
            self.gammas = [g.scale(i) for g in herm]
            self.gammas_minus = list(self.gammas)
            if n % 2 == 1:
                self.gammas_minus = self.gammas[:-1] + [self.gammas[-1].scale(-1)]
            self.dim_s = dim
        self._audit()

    def _audit(self):
        for gset in (self.gammas, self.gammas_minus):
            for i, gi in enumerate(gset):
                for j, gj in enumerate(gset):
                    want = Mat.identity(self.dim_s).scale(-2 if i == j else 0)
                    if not (gi * gj + gj * gi - want).is_zero():
                        raise AssertionError("gamma anticommutation failed")

    @property
    def odd(self):
        return self.n % 2 == 1

    def coords_in_frame(self, v):
        """Coordinates of an ambient vector in the orthonormal frame; the vector
        must lie in the root span."""
        vv = [x if isinstance(x, Scalar) else Scalar.of(x) for x in v]
        coords = []
        for e in self.orthonormal_basis:
            c = Scalar.of(0)
            for a, b in zip(vv, e):
                c = c + a * b
            coords.append(c)
        # residual check: sum c_j e_j == v
        recon = [Scalar.of(0)] * len(vv)
        for c, e in zip(coords, self.orthonormal_basis):
            recon = [r + c * x for r, x in zip(recon, e)]
        if any(not (r - x).is_zero() for r, x in zip(recon, vv)):
            raise ValueError("vector not in the root span")
        return coords

    def gamma_for_vector(self, v, minus=False):
        """g~_v = sum coords * gamma_j; satisfies g~_v^2 = -<v,v>."""
        gset = self.gammas_minus if minus else self.gammas
        out = Mat.zeros(self.dim_s, self.dim_s)
        for c, g in zip(self.coords_in_frame(v), gset):
            if not c.is_zero():
                out = out + g.scale(c)
        return out

    def stilde(self, alpha, minus=False):
        """s~_alpha = g~_alpha / |alpha| for a positive root alpha."""
        if not self.rs.is_positive_root(tuple(Fraction(x) for x in alpha)):
            raise ValueError("stilde expects a positive root")
        norm = sqrt_of_fraction(dot([Fraction(x) for x in alpha],
                                    [Fraction(x) for x in alpha]))
        return self.gamma_for_vector(alpha, minus=minus).scale(norm.inverse())

    def stilde_both(self, alpha):
        """s~_alpha acting on S+ (+) S- (the faithful home for odd n)."""
        if not self.odd:
            return self.stilde(alpha)
        a = self.stilde(alpha, minus=False)
        b = self.stilde(alpha, minus=True)
        n = self.dim_s
        m = Mat.zeros(2 * n, 2 * n)
        for i in range(n):
            for j in range(n):
                m.a[i][j] = a.a[i][j]
                m.a[n + i][n + j] = b.a[i][j]
        return m

    def spin_module_matrix(self, word, minus=False):
        """Product of s~ generators along a word in simple-root indices."""
        gset_dim = self.dim_s
        out = Mat.identity(gset_dim)
        for k in word:
            out = out * self.stilde(self.rs.simples[k], minus=minus)
        return out

    def s_character_value(self, word, minus=False):
        return self.spin_module_matrix(word, minus=minus).trace()


@lru_cache(maxsize=None)
def build_spin_context(label, rank, m_param=None) -> SpinContext:
    return SpinContext(build_root_system(label, rank, m_param))


# ---------------------------------------------------------------------------
# The spin cover as a matrix group
# ---------------------------------------------------------------------------


class SpinCover:
    """W~ enumerated as matrices, with projection data to W."""

    def __init__(self, ctx: SpinContext):
        self.ctx = ctx
        rs = ctx.rs
        gens = [ctx.stilde_both(alpha) for alpha in rs.simples]
        ident = Mat.identity(gens[0].rows) if gens else Mat.identity(1)
        self.group = FiniteGroup(gens, ident, lambda a, b: a * b, key=lambda m: m.key())
        if self.group.order != 2 * rs.order():
            raise AssertionError("spin cover has wrong order")
        # central element -1
        minus_ident = ident.scale(-1)
        self.minus_one_index = self.group.index[minus_ident.key()]

    def weyl_projection(self, idx):
        """Weyl element under the 2-to-1 projection, via the element's word."""
        rs = self.ctx.rs
        w = rs.identity()
        for k in self.group.words[idx]:
            w = w.compose(rs.simple_reflection(k))
        return w

    def sign_of(self, idx):
        """+1 when the element equals the canonical lift of its projection
        (product of s~ along the lexicographically least reduced word)."""
        rs = self.ctx.rs
        w = self.weyl_projection(idx)
        mat = Mat.identity(self.group.elements[0].rows)
        for k in rs.word_of(w):
            mat = mat * self.ctx.stilde_both(rs.simples[k])
        if mat == self.group.elements[idx]:
            return 1
        if mat.scale(-1) == self.group.elements[idx]:
            return -1
        raise AssertionError("element is not +- its canonical lift")


@lru_cache(maxsize=None)
def spin_cover(label, rank, m_param=None) -> SpinCover:
    return SpinCover(build_spin_context(label, rank, m_param))


class SpinCharTable:
    """Character table of W~ with genuineness flags.

    `data.rep_words` are words in the simple s~ generators, shared with the
    diagonal-embedding traces computed on modules downstream.
    """

    def __init__(self, cover: SpinCover):
        self.cover = cover
        self.data, self.chars = burnside_character_table(
            cover.group, tag=f"spin({cover.ctx.rs.label}{cover.ctx.rs.rank})")
        class_of = cover.group.class_of_table()
        self.minus_one_class = class_of[cover.minus_one_index]
        self.genuine = []
        for c in self.chars:
            self.genuine.append(c.values[self.minus_one_class] == c.dim.__neg__())

    def genuine_chars(self):
        return [c for c, g in zip(self.chars, self.genuine) if g]

    def genuine_dims(self):
        return sorted(int(c.dim.rational()) for c in self.genuine_chars())


@lru_cache(maxsize=None)
def spin_char_table(label, rank, m_param=None) -> SpinCharTable:
    return SpinCharTable(spin_cover(label, rank, m_param))


# ---------------------------------------------------------------------------
# Strict-partition bookkeeping for genuine S~_l representations
# ---------------------------------------------------------------------------


def spin_irrep_dimension(lam) -> int:
    """Closed-form dimension of the genuine representation attached to a
    strict partition: 2^floor((l - len)/2) * l!/prod(parts!) * prod (li-lj)/(li+lj)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not lam.has_distinct_parts():
        raise ValueError("strict partition required")
    l = lam.size
    val = Fraction(math.factorial(l))
    for p in lam:
        val /= math.factorial(p)
    for a in range(len(lam)):
        for b in range(a + 1, len(lam)):
            val *= Fraction(lam[a] - lam[b], lam[a] + lam[b])
    val *= 2 ** ((l - len(lam)) // 2)
    if val.denominator != 1:
        raise ValueError(f"dimension formula not integral on {lam}")
    return int(val)


def epsilon_of(lam) -> Scalar:
    """sqrt(2) on DP-, 1 on DP+."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    from .exactalg import sqrt_of

    return sqrt_of(2) if dp_class(lam) == "DP-" else Scalar.of(1)


def predicted_genuine_dim_multiset(l) -> list:
    """Dims of genuine S~_l irreducibles predicted by strict partitions:
    one per DP+ partition, an associate pair per DP- partition."""
    out = []
    for lam in strict_partitions_of(l):
        d = spin_irrep_dimension(lam)
        if dp_class(lam) == "DP+":
            out.append(d)
        else:
            out.extend([d, d])
    return sorted(out)
