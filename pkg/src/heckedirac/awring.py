"""The skew group ring S(V) x| W: graded modules, deformations, Kato modules.

A graded module is a list of W-representations (one matrix per simple
reflection per degree) with commuting degree-raising maps, one per ambient
coordinate.  The associated graded of a Hecke module is built from the
filtration by tilde-words applied to a generating W-subspace; the Kato
quotient K_sigma over the positive-degree isotypic components uses the
dominance comparator in type A (the combinatorial shadow of the closure
order), kept pluggable for other orders.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chartable import ClassFunction, seminormal_rep, sym_irreducible_character
from .clifford import build_spin_context, spin_char_table
from .exactalg import Mat, Scalar, Subspace, image, kernel
from .hecke import HAlgebra, HModule, mat_vec
from .partitions import Partition
from .weyl import build_root_system, weyl_element_class_index, weyl_finite_group


class AWModule:
    """Graded pieces with W-actions and commuting raise maps."""

    def __init__(self, rs, dims, t_mats, raises, tag="", audit=True):
        # t_mats[i][d]: action of s_i on degree d; raises[k][d]: degree d -> d+1
        self.rs = rs
        self.dims = list(dims)
        self.t_mats = t_mats
        self.raises = raises
        self.tag = tag
        if audit:
            self.audit()

    @property
    def total_dim(self):
        return sum(self.dims)

    @property
    def num_degrees(self):
        return len(self.dims)

    def t_word_at(self, word, d) -> Mat:
        out = Mat.identity(self.dims[d])
        for k in word:
            out = out * self.t_mats[k][d]
        return out

    def raise_for_vector(self, vec, d) -> Mat:
        """Raise map of sum coords * eps_k from degree d to d+1."""
        nd = self.dims[d + 1] if d + 1 < self.num_degrees else 0
        out = Mat.zeros(nd, self.dims[d])
        if nd == 0:
            return out
        for k, c in enumerate(vec):
            c = c if isinstance(c, Scalar) else Scalar.of(c)
            if not c.is_zero():
                out = out + self.raises[k][d].scale(c)
        return out

    def audit(self):
        rs = self.rs
        nd = self.num_degrees
        for d in range(nd):
            ident = Mat.identity(self.dims[d])
            for i, tm in enumerate(self.t_mats):
                if not (tm[d] * tm[d] - ident).is_zero():
                    raise AssertionError("t^2 != 1 on a graded piece")
            for i in range(len(self.t_mats)):
                for j in range(i + 1, len(self.t_mats)):
                    m = rs.coxeter_m(i, j)
                    a, b = self.t_mats[i][d], self.t_mats[j][d]
                    lhs, rhs = ident, ident
                    for k in range(m):
                        lhs = lhs * (a if k % 2 == 0 else b)
                        rhs = rhs * (b if k % 2 == 0 else a)
                    if not (lhs - rhs).is_zero():
                        raise AssertionError("braid relation failed on a piece")
        # raises commute: v1 v2 = v2 v1 as maps d -> d+2
        for d in range(nd - 2):
            for k1 in range(len(self.raises)):
                for k2 in range(k1 + 1, len(self.raises)):
                    lhs = self.raises[k1][d + 1] * self.raises[k2][d]
                    rhs = self.raises[k2][d + 1] * self.raises[k1][d]
                    if not (lhs - rhs).is_zero():
                        raise AssertionError("raise maps do not commute")
        # W-equivariance: t_i v_k t_i = s_i(v_k) as maps d -> d+1
        for d in range(nd - 1):
            for i, alpha in enumerate(rs.simples):
                for k in range(len(self.raises)):
                    ek = [Fraction(0)] * rs.ambient
                    ek[k] = Fraction(1)
                    sv = rs.reflect(alpha, ek)
                    lhs = self.t_mats[i][d + 1] * self.raises[k][d] * self.t_mats[i][d]
                    rhs = self.raise_for_vector(sv, d)
                    if not (lhs - rhs).is_zero():
                        raise AssertionError("raises are not W-equivariant")

    def graded_dims(self):
        return list(self.dims)

    def w_character_at(self, d) -> ClassFunction:
        from .weyl import weyl_class_data, weyl_class_rep_words

        rs = self.rs
        m_key = str(rs.m) if rs.m is not None else None
        data = weyl_class_data(rs.label, rs.rank, m_key)
        words = weyl_class_rep_words(rs.label, rs.rank, m_key)
        return ClassFunction(data, [self.t_word_at(list(w), d).trace() for w in words])


# ---------------------------------------------------------------------------
# Associated graded of a Hecke module
# ---------------------------------------------------------------------------


def assoc_graded(alg: HAlgebra, x: HModule, sigma_sub: Subspace, tag="") -> AWModule:
    """Deformation of X along a generating W-subspace sigma.

    Filtration: X_0 = sigma, X_{i+1} = X_i + sum_k v~_k X_i.  Raises are the
    tilde actions pushed to the subquotients; t actions descend degreewise.
    Errors out if sigma fails to generate ('not a choice of deformation').
    """
    rs = alg.rs
    n = x.dim
    # W-stability of the seed
    for t in x.t_mats:
        for row in sigma_sub.basis.a:
            if not sigma_sub.contains_vec(mat_vec(t, row)):
                raise ValueError("seed subspace is not W-stable")

    vtildes = [x.vtilde_matrix([Fraction(1) if j == k else Fraction(0)
                                for j in range(rs.ambient)])
               for k in range(rs.ambient)]
    filt = [sigma_sub]
    while True:
        cur = filt[-1]
        rows = [r[:] for r in cur.basis.a]
        for vt in vtildes:
            for row in cur.basis.a:
                rows.append(mat_vec(vt, row))
        nxt = Subspace.from_rows(rows, n)
        if nxt.dim == cur.dim:
            break
        filt.append(nxt)
    if filt[-1].dim != n:
        raise ValueError("not a choice of deformation: seed does not generate")

    # canonical lifts: quotient bases from reduced superspace rows
    lifts = []
    for i, cur in enumerate(filt):
        prev = filt[i - 1] if i else Subspace.zero(n)
        prev_pivots = set(prev.pivots)
        rows = []
        for piv, row in zip(cur.pivots, cur.basis.a):
            if piv not in prev_pivots:
                rows.append(_reduce_mod(prev, row))
        lifts.append(Subspace.from_rows(rows, n))
    dims = [q.dim for q in lifts]

    def coords_in_piece(i, vec):
        prev = filt[i - 1] if i else Subspace.zero(n)
        red = _reduce_mod(prev, vec)
        cs = lifts[i].coords_of(red)
        if cs is None:
            raise AssertionError("projection left the expected piece")
        return cs

    t_mats = []
    for t in x.t_mats:
        per_degree = []
        for i, q in enumerate(lifts):
            cols = [coords_in_piece(i, mat_vec(t, row)) for row in q.basis.a]
            m = Mat.zeros(dims[i], dims[i])
            for ci, col in enumerate(cols):
                for r in range(dims[i]):
                    m.a[r][ci] = col[r]
            per_degree.append(m)
        t_mats.append(per_degree)

    raises = []
    for vt in vtildes:
        per_degree = []
        for i, q in enumerate(lifts):
            nd = dims[i + 1] if i + 1 < len(dims) else 0
            m = Mat.zeros(nd, dims[i])
            if nd:
                cols = [coords_in_piece(i + 1, mat_vec(vt, row)) for row in q.basis.a]
                for ci, col in enumerate(cols):
                    for r in range(nd):
                        m.a[r][ci] = col[r]
            per_degree.append(m)
        raises.append(per_degree)

    return AWModule(rs, dims, t_mats, raises, tag=tag or f"gr({x.tag})")


def _reduce_mod(sub: Subspace, vec):
    rem = [v if isinstance(v, Scalar) else Scalar.of(v) for v in vec]
    for p, row in zip(sub.pivots, sub.basis.a):
        c = rem[p]
        if c.parts:
            rem = [a - c * b if b.parts else a for a, b in zip(rem, row)]
    return rem


# ---------------------------------------------------------------------------
# Kato modules (type A seeds via Young's seminormal form)
# ---------------------------------------------------------------------------


def _monomials(nvars, degree):
    out = []

    def rec(rem, pos, acc):
        if pos == nvars - 1:
            out.append(acc + (rem,))
            return
        for e in range(rem, -1, -1):
            rec(rem - e, pos + 1, acc + (e,))

    rec(degree, 0, ())
    return out


def _perm_on_monomials(perm_images, monos, index):
    """w . x^e = x^{w(e)} with exponents pushed along the permutation."""
    m = Mat.zeros(len(monos), len(monos))
    for ci, e in enumerate(monos):
        out = [0] * len(e)
        for i, v in enumerate(e):
            out[perm_images[i] - 1] = v
        m.a[index[tuple(out)]][ci] = Scalar.of(1)
    return m


class KatoModule:
    """Kato quotient (or free) module with its seed and stabilization flag."""

    def __init__(self, sigma_partition, module: AWModule, truncation, stabilized):
        self.sigma = Partition(sigma_partition)
        self.module = module
        self.truncation = truncation
        self.stabilized = stabilized

    @property
    def graded_dims(self):
        return self.module.graded_dims()

    @property
    def total_dim(self):
        return self.module.total_dim


def kato_free(l: int, sigma_partition, n_degrees: int, audit=True) -> KatoModule:
    """K_sigma = A_W (x)_{C[W]} sigma, truncated: dims are dim sigma * dim S^d."""
    rs = build_root_system("A", l - 1)
    syt, sig_mats = seminormal_rep(tuple(sigma_partition))
    dim_s = sig_mats[0].rows if sig_mats else 1

    monos = [_monomials(l, d) for d in range(n_degrees)]
    indexes = [{e: i for i, e in enumerate(ms)} for ms in monos]
    dims = [len(ms) * dim_s for ms in monos]

    t_mats = []
    for i in range(l - 1):
        si_images = rs.simple_reflection(i).perm
        sig = sig_mats[i] if sig_mats else Mat.identity(1)
        per_degree = []
        for d in range(n_degrees):
            perm = _perm_on_monomials(si_images, monos[d], indexes[d])
            per_degree.append(perm.kron(sig))
        t_mats.append(per_degree)

    raises = []
    for k in range(l):
        per_degree = []
        for d in range(n_degrees):
            if d + 1 < n_degrees:
                m = Mat.zeros(len(monos[d + 1]), len(monos[d]))
                for ci, e in enumerate(monos[d]):
                    up = list(e)
                    up[k] += 1
                    m.a[indexes[d + 1][tuple(up)]][ci] = Scalar.of(1)
                per_degree.append(m.kron(Mat.identity(dim_s)))
            else:
                per_degree.append(Mat.zeros(0, dims[d]))
        raises.append(per_degree)

    module = AWModule(rs, dims, t_mats, raises, tag=f"K{tuple(sigma_partition)}",
                      audit=audit)
    return KatoModule(sigma_partition, module, n_degrees, stabilized=False)


def dominance_leq(tau_parts, sigma_parts) -> bool:
    """tau <= sigma in the closure-order shadow: tau's partition dominates."""
    return Partition(tau_parts).dominates(Partition(sigma_parts))


def expected_kato_dim(l: int, sigma_partition) -> int:
    """[S_l : S_{sigma^T}], the dimension of the matching tempered module."""
    mu = Partition(sigma_partition).transpose()
    out = math.factorial(l)
    for p in mu:
        out //= math.factorial(p)
    return out


def big_kato(l: int, sigma_partition, leq=dominance_leq, n_degrees=None) -> KatoModule:
    """K_sigma modulo the submodule generated by every tau-isotypic component
    in positive degree, over tau <= sigma (self maps included).

    Stabilization: once a quotient piece is zero every later piece is zero
    (V S^d covers S^{d+1}); the two-zero plateau is still checked.  Degrees
    are produced lazily so stabilization is cheap for small quotients.
    """
    sigma_partition = tuple(sigma_partition)
    if n_degrees is None:
        n_degrees = 2 * expected_kato_dim(l, sigma_partition) + 2
    probe = 4
    while True:
        free = kato_free(l, sigma_partition, min(probe, n_degrees), audit=False)
        result = _big_kato_from_free(l, sigma_partition, leq, free)
        if result is not None:
            return result
        if probe >= n_degrees:
            return KatoModule(sigma_partition, free.module, n_degrees,
                              stabilized=False)
        probe = min(probe + 3, n_degrees)


def _big_kato_from_free(l, sigma_partition, leq, free):
    mod = free.module
    rs = mod.rs
    n_degrees = mod.num_degrees
    group = weyl_finite_group("A", l - 1)
    class_idx = weyl_element_class_index("A", l - 1)

    from .partitions import partitions_of

    taus = [p for p in partitions_of(l) if leq(p.parts, sigma_partition)]
    data_chars = [sym_irreducible_character(l, t.parts) for t in taus]
    num_classes = data_chars[0].data.num_classes if data_chars else 0
    coeffs = []
    for ci in range(num_classes):
        acc = Scalar.of(0)
        for chi in data_chars:
            acc = acc + chi.dim * chi.values[ci].conjugate()
        coeffs.append(acc * Scalar.of(Fraction(1, group.order)))

    def projector_image(d):
        # propagate group element matrices along the prefix-closed BFS words
        nd = mod.dims[d]
        word_index = {(): 0}
        reps = [None] * group.order
        reps[0] = Mat.identity(nd)
        total = reps[0].scale(coeffs[class_idx[0]])
        for idx in range(1, group.order):
            word = group.words[idx]
            word_index[word] = idx
            reps[idx] = reps[word_index[word[:-1]]] * mod.t_mats[word[-1]][d]
            coef = coeffs[class_idx[idx]]
            if not coef.is_zero():
                total = total + reps[idx].scale(coef)
        return image(total)

    j_spaces = [Subspace.zero(mod.dims[0])]
    zero_run = 0
    cut = None
    for d in range(1, n_degrees):
        rows = []
        prev = j_spaces[d - 1]
        for k in range(len(mod.raises)):
            rmat = mod.raises[k][d - 1]
            for row in prev.basis.a:
                rows.append(mat_vec(rmat, row))
        iso = projector_image(d)
        rows.extend(iso.basis.a)
        jd = Subspace.from_rows(rows, mod.dims[d]) if rows else Subspace.zero(mod.dims[d])
        j_spaces.append(jd)
        if mod.dims[d] - jd.dim == 0:
            zero_run += 1
            if zero_run >= 2:
                cut = d + 1
                break
        else:
            zero_run = 0
    if cut is None:
        return None  # not stabilized within this truncation

    # build the quotient module up to the cut
    lifts = []
    for d in range(cut):
        sub = j_spaces[d]
        pivset = set(sub.pivots)
        comp = [i for i in range(mod.dims[d]) if i not in pivset]
        rows = []
        for i in comp:
            e = [Scalar.of(0)] * mod.dims[d]
            e[i] = Scalar.of(1)
            rows.append(_reduce_mod(sub, e))
        lifts.append(Subspace.from_rows(rows, mod.dims[d]) if rows
                     else Subspace.zero(mod.dims[d]))
    dims = [q.dim for q in lifts]
    while dims and dims[-1] == 0:
        dims.pop()
        lifts.pop()
    if not dims:
        raise AssertionError("Kato quotient collapsed to zero")

    def push_map(mat, d_from, d_to):
        nd_to = dims[d_to] if d_to < len(dims) else 0
        m = Mat.zeros(nd_to, dims[d_from])
        if nd_to == 0:
            return m
        for ci, row in enumerate(lifts[d_from].basis.a):
            img = mat_vec(mat, row)
            red = _reduce_mod(j_spaces[d_to], img)
            cs = lifts[d_to].coords_of(red)
            if cs is None:
                raise AssertionError("quotient coordinates failed")
            for r in range(nd_to):
                m.a[r][ci] = cs[r]
        return m

    t_mats = [[push_map(mod.t_mats[i][d], d, d) for d in range(len(dims))]
              for i in range(len(mod.t_mats))]
    raises = [[push_map(mod.raises[k][d], d, d + 1) for d in range(len(dims))]
              for k in range(len(mod.raises))]
    out = AWModule(rs, dims, t_mats, raises, tag=f"bK{sigma_partition}")
    return KatoModule(sigma_partition, out, cut, stabilized=True)


# ---------------------------------------------------------------------------
# The graded Dirac operator
# ---------------------------------------------------------------------------


class GradedDirac:
    """D_A = sum_i raise(e_i) (x) gamma_i on (+)_d piece_d (x) S."""

    def __init__(self, m: AWModule, minus=False):
        self.module = m
        rs = m.rs
        m_key = str(rs.m) if rs.m is not None else None
        self.ctx = build_spin_context(rs.label, rs.rank, m_key)
        self.minus = minus
        dim_s = self.ctx.dim_s
        total = m.total_dim * dim_s
        self.offsets = []
        acc = 0
        for d in m.dims:
            self.offsets.append(acc)
            acc += d * dim_s
        gammas = self.ctx.gammas_minus if minus else self.ctx.gammas
        dmat = Mat.zeros(total, total)
        for e_vec, gamma in zip(self.ctx.orthonormal_basis, gammas):
            for d in range(m.num_degrees - 1):
                blk = m.raise_for_vector(e_vec, d).kron(gamma)
                ro, co = self.offsets[d + 1], self.offsets[d]
                for r in range(blk.rows):
                    for c in range(blk.cols):
                        v = blk.a[r][c]
                        if v.parts:
                            dmat.a[ro + r][co + c] = dmat.a[ro + r][co + c] + v
        self.d = dmat
        self.total = total
        self.dim_s = dim_s

    def audit_square(self):
        """D_A^2 = -sum_i pi(e_i)^2 (x) 1 as flat matrices."""
        m = self.module
        total = self.total
        rhs = Mat.zeros(total, total)
        for e_vec in self.ctx.orthonormal_basis:
            flat = Mat.zeros(m.total_dim, m.total_dim)
            off_plain = []
            acc = 0
            for d in m.dims:
                off_plain.append(acc)
                acc += d
            for d in range(m.num_degrees - 1):
                blk = m.raise_for_vector(e_vec, d)
                for r in range(blk.rows):
                    for c in range(blk.cols):
                        v = blk.a[r][c]
                        if v.parts:
                            flat.a[off_plain[d + 1] + r][off_plain[d] + c] = v
            sq = flat * flat
            rhs = rhs + sq.kron(Mat.identity(self.dim_s))
        lhs = self.d * self.d
        return (lhs + rhs).is_zero()

    def delta_matrix(self, word) -> Mat:
        m = self.module
        s_part = self.ctx.spin_module_matrix(word, minus=self.minus)
        total = Mat.zeros(self.total, self.total)
        for d in range(m.num_degrees):
            blk = m.t_word_at(word, d).kron(s_part)
            off = self.offsets[d]
            for r in range(blk.rows):
                for c in range(blk.cols):
                    v = blk.a[r][c]
                    if v.parts:
                        total.a[off + r][off + c] = v
        return total


def dirac_a_cohomology(m: AWModule, minus=False):
    """H_{D_A} = ker/(ker cap im) with its Delta_A character; also returns
    the square audit result."""
    gd = GradedDirac(m, minus=minus)
    square_ok = gd.audit_square()
    ker = kernel(gd.d)
    rs = m.rs
    m_key = str(rs.m) if rs.m is not None else None
    table = spin_char_table(rs.label, rs.rank, m_key)
    if ker.dim == 0:
        zero = ClassFunction(table.data, [0] * table.data.num_classes)
        return {"dim": 0, "character": zero, "square_ok": square_ok}
    im = image(gd.d)
    overlap = ker.intersect(im)
    vals = []
    for word in table.data.rep_words:
        delta = gd.delta_matrix(word)
        v = ker.trace_of(delta)
        if overlap.dim:
            v = v - overlap.trace_of(delta)
        vals.append(v)
    chi = ClassFunction(table.data, vals)
    return {"dim": ker.dim - overlap.dim, "character": chi, "square_ok": square_ok}
