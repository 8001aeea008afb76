"""The Dirac element on X (x) S and its cohomology.

D = sum_i (e_i)~ (x) gamma_i over an orthonormal frame of the root span.
Everything here is exact: kernels, images and their intersection are computed
by certified elimination, and the spin-cover character of the cohomology is
read off W~-stable subspaces (the diagonal action anticommutes with D, so
kernel and image are stable and the quotient character is chi_ker minus
chi_(ker cap im)).
"""

from __future__ import annotations

from fractions import Fraction

from .chartable import ClassFunction, multiplicity
from .clifford import SpinContext, spin_char_table, spin_cover
from .exactalg import Mat, Scalar, Subspace, image, kernel, sqrt_of_fraction
from .hecke import HAlgebra, HModule
from .weyl import dot


class DiracContext:
    """Module, spin module choice, and the assembled Dirac matrix."""

    def __init__(self, alg: HAlgebra, ctx: SpinContext, x: HModule, minus=False):
        self.alg = alg
        self.ctx = ctx
        self.x = x
        self.minus = minus
        gammas = ctx.gammas_minus if minus else ctx.gammas
        n = x.dim * ctx.dim_s
        d = Mat.zeros(n, n)
        self._etilde = []
        for e_vec, gamma in zip(ctx.orthonormal_basis, gammas):
            et = x.vtilde_matrix(e_vec)
            self._etilde.append(et)
            d = d + et.kron(gamma)
        self.d = d

    @property
    def total_dim(self):
        return self.x.dim * self.ctx.dim_s

    def delta_matrix(self, word) -> Mat:
        """Diagonal action of the spin-cover element with the given generator word."""
        t = self.x.t_word(word)
        s = self.ctx.spin_module_matrix(word, minus=self.minus)
        return t.kron(s)

    def spin_class_words(self):
        rs = self.ctx.rs
        m_key = str(rs.m) if rs.m is not None else None
        return spin_char_table(rs.label, rs.rank, m_key).data.rep_words


def dirac_matrix(alg: HAlgebra, ctx: SpinContext, x: HModule, minus=False) -> DiracContext:
    dc = DiracContext(alg, ctx, x, minus=minus)
    # Delta(s~_alpha) D = -D Delta(s~_alpha) on every simple reflection, exactly
    for k, alpha in enumerate(ctx.rs.simples):
        delta = dc.delta_matrix((k,))
        if not (delta * dc.d + dc.d * delta).is_zero():
            raise AssertionError("diagonal spin action does not anticommute with D")
    return dc


def anticommutes_with_all_simples(dc: DiracContext) -> bool:
    for k in range(len(dc.ctx.rs.simples)):
        delta = dc.delta_matrix((k,))
        if not (delta * dc.d + dc.d * delta).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# The D^2 formula
# ---------------------------------------------------------------------------


def _reflection_pairs(rs):
    """(alpha, beta) positive with s_alpha(beta) negative."""
    out = []
    for alpha in rs.positives:
        for beta in rs.positives:
            if rs.is_negative_root(rs.reflect(alpha, beta)):
                out.append((alpha, beta))
    return out


def casimir_like_term(dc: DiracContext) -> Mat:
    """sum over the reflection pairs of c c |a||b| t_a t_b (x) s~_a s~_b."""
    alg, ctx, x = dc.alg, dc.ctx, dc.x
    rs = ctx.rs
    n = dc.total_dim
    acc = Mat.zeros(n, n)
    for alpha, beta in _reflection_pairs(rs):
        coef = (Scalar.of(alg.c_of(alpha) * alg.c_of(beta))
                * sqrt_of_fraction(rs.norm_sq(alpha))
                * sqrt_of_fraction(rs.norm_sq(beta)))
        t_part = x.t_of(rs.reflection(alpha)) * x.t_of(rs.reflection(beta))
        s_part = (ctx.stilde(alpha, minus=dc.minus)
                  * ctx.stilde(beta, minus=dc.minus))
        acc = acc + (t_part.kron(s_part)).scale(coef)
    return acc


def d_squared_audit(dc: DiracContext) -> dict:
    """Compare D*D against the formula RHS under both readings of the first
    term: the polynomial generators e_i^2 (the identity that holds) and the
    tilde generators (e~_i)^2 (retained to surface its failure)."""
    ctx, x = dc.ctx, dc.x
    ident_s = Mat.identity(ctx.dim_s)
    n = dc.total_dim
    lhs = dc.d * dc.d

    first_plain = Mat.zeros(n, n)
    first_tilde = Mat.zeros(n, n)
    for e_vec, et in zip(ctx.orthonormal_basis, dc._etilde):
        ev = x.v_matrix(e_vec)
        first_plain = first_plain + (ev * ev).kron(ident_s)
        first_tilde = first_tilde + (et * et).kron(ident_s)
    omega = casimir_like_term(dc).scale(Scalar.of(Fraction(dc.alg.r * dc.alg.r, 4)))
    rhs_plain = -first_plain - omega
    rhs_tilde = -first_tilde - omega
    return {
        "plain": (lhs - rhs_plain).is_zero(),
        "tilde": (lhs - rhs_tilde).is_zero(),
    }


# ---------------------------------------------------------------------------
# Dirac cohomology
# ---------------------------------------------------------------------------


class DiracCohomology:
    def __init__(self, dim, character, plus=None, minus=None,
                 kernel_dim=None, overlap_dim=None):
        self.dim = dim
        self.character = character
        self.plus = plus    # (dim, character) or None
        self.minus = minus
        self.kernel_dim = kernel_dim
        self.overlap_dim = overlap_dim

    def is_zero(self):
        return self.dim == 0

    def __repr__(self):
        return f"DiracCohomology(dim={self.dim})"


def _subquotient_character(dc: DiracContext, ker_sub, overlap_sub) -> ClassFunction:
    rs = dc.ctx.rs
    m_key = str(rs.m) if rs.m is not None else None
    table = spin_char_table(rs.label, rs.rank, m_key)
    vals = []
    for word in table.data.rep_words:
        delta = dc.delta_matrix(word)
        v = ker_sub.trace_of(delta)
        if overlap_sub.dim:
            v = v - overlap_sub.trace_of(delta)
        vals.append(v)
    return ClassFunction(table.data, vals)


def dirac_cohomology(dc: DiracContext) -> DiracCohomology:
    """ker D / (ker D cap im D) with its W~-character; +- parts when graded."""
    ker = kernel(dc.d)
    if ker.dim == 0:
        rs = dc.ctx.rs
        m_key = str(rs.m) if rs.m is not None else None
        table = spin_char_table(rs.label, rs.rank, m_key)
        zero = ClassFunction(table.data, [0] * table.data.num_classes)
        return DiracCohomology(0, zero, kernel_dim=0, overlap_dim=0)
    im = image(dc.d)
    overlap = ker.intersect(im)
    chi = _subquotient_character(dc, ker, overlap)
    out = DiracCohomology(ker.dim - overlap.dim, chi,
                          kernel_dim=ker.dim, overlap_dim=overlap.dim)
    if dc.x.grading is not None:
        out.plus, out.minus = _graded_parts(dc, ker)
    return out


def _lift_subspace(part: Subspace, dim_s: int) -> Subspace:
    """X^+- (x) S inside X (x) S, from a grading part of X."""
    rows = []
    for row in part.basis.a:
        for s in range(dim_s):
            vec = [Scalar.of(0)] * (len(row) * dim_s)
            for j, c in enumerate(row):
                vec[j * dim_s + s] = c
            rows.append(vec)
    return Subspace.from_rows(rows, part.ambient * dim_s)


def _graded_parts(dc: DiracContext, ker=None):
    plus, minus = dc.x.grading
    dim_s = dc.ctx.dim_s
    lifted = {"+": _lift_subspace(plus, dim_s), "-": _lift_subspace(minus, dim_s)}
    if ker is None:
        ker = kernel(dc.d)
    halves = {}
    for sign, other in (("+", "-"), ("-", "+")):
        k_part = ker.intersect(lifted[sign])
        # image of D restricted to the opposite part
        img_rows = lifted[other].basis * dc.d.transpose()
        im_part = Subspace.from_rows(img_rows, dc.total_dim)
        overlap = k_part.intersect(im_part)
        chi = _subquotient_character(dc, k_part, overlap)
        halves[sign] = (k_part.dim - overlap.dim, chi)
    return halves["+"], halves["-"]


def hd_for_module(alg: HAlgebra, x: HModule, minus=False):
    """Convenience wrapper: context, Dirac matrix, cohomology."""
    rs = alg.rs
    m_key = str(rs.m) if rs.m is not None else None
    from .clifford import build_spin_context

    ctx = build_spin_context(rs.label, rs.rank, m_key)
    dc = dirac_matrix(alg, ctx, x, minus=minus)
    return dc, dirac_cohomology(dc)


# ---------------------------------------------------------------------------
# a-values and the central-character check
# ---------------------------------------------------------------------------


def a_values(label, rank, m_param=None, c_factor=Fraction(1)) -> dict:
    """a(sigma~) for every genuine irreducible, via the class of s~_a s~_b.

    Also certifies that the Casimir-like element commutes with the spin
    generators (centrality), which is what makes the action scalar.
    """
    table = spin_char_table(label, rank, m_param)
    cover = table.cover
    ctx = cover.ctx
    rs = ctx.rs
    alg = HAlgebra(rs, c_factor=c_factor)
    class_of = cover.group.class_of_table()

    total = Mat.zeros(cover.group.elements[0].rows, cover.group.elements[0].rows)
    by_class: dict[int, Scalar] = {}
    for alpha, beta in _reflection_pairs(rs):
        coef = (Scalar.of(alg.c_of(alpha) * alg.c_of(beta))
                * sqrt_of_fraction(rs.norm_sq(alpha))
                * sqrt_of_fraction(rs.norm_sq(beta)))
        prod = ctx.stilde_both(alpha) * ctx.stilde_both(beta)
        idx = cover.group.index[prod.key()]
        ci = class_of[idx]
        by_class[ci] = by_class.get(ci, Scalar.of(0)) + coef
        total = total + prod.scale(coef)
    for k, alpha in enumerate(rs.simples):
        gen = ctx.stilde_both(alpha)
        if not (total * gen - gen * total).is_zero():
            raise AssertionError("Casimir-like element is not central")

    out = {}
    for chi in table.genuine_chars():
        acc = Scalar.of(0)
        for ci, coef in by_class.items():
            acc = acc + coef * chi.values[ci]
        a_val = acc * chi.dim.inverse() * Scalar.of(Fraction(-1, 4))
        out[chi.label] = a_val
    return out


def weight_norm_in_root_span(ctx: SpinContext, weight) -> Scalar:
    """<s, s>_{V'}: squared length of the projection to the root span."""
    acc = Scalar.of(0)
    for e in ctx.orthonormal_basis:
        c = Scalar.of(0)
        for a, b in zip(weight, e):
            c = c + Scalar.of(a) * b
        acc = acc + c * c
    return acc


def vogan_check(dc: DiracContext, hd: DiracCohomology) -> dict:
    """For every genuine irreducible occurring in H_D, compare a(sigma~)
    against <s, s>_{V'}/r^2 (the calibrated reading) and against the quarter
    reading; the report lists exact residuals."""
    rs = dc.ctx.rs
    m_key = str(rs.m) if rs.m is not None else None
    table = spin_char_table(rs.label, rs.rank, m_key)
    cc = dc.x.central_character()
    report = {"central_character": cc, "occurrences": [], "pass": True,
              "vacuous": hd.is_zero()}
    if cc is None:
        report["pass"] = hd.is_zero()
        report["reason"] = "no central character"
        return report
    norm = weight_norm_in_root_span(dc.ctx, cc)
    r2 = Scalar.of(dc.alg.r * dc.alg.r)
    avals = a_values(rs.label, rs.rank, m_key, c_factor=dc.alg.c_factor)
    for chi in table.genuine_chars():
        mult = multiplicity(hd.character, chi)
        if mult == 0:
            continue
        a_val = avals[chi.label]
        res_full = a_val * r2 - norm
        res_quarter = a_val * r2 - norm * Scalar.of(Fraction(1, 4))
        report["occurrences"].append({
            "sigma": chi.label,
            "mult": mult,
            "a": str(a_val),
            "residual_kappa1": str(res_full),
            "residual_kappa_quarter": str(res_quarter),
        })
        if not res_full.is_zero():
            report["pass"] = False
    return report


def calibrate_kappa() -> dict:
    """Fix the normalization constant on the rank-two single-segment case:
    H_D is the full spin module there and the matching reading is kappa = 1."""
    from .hecke import induce_multisegment

    alg = HAlgebra.type_a(3)
    x = induce_multisegment(alg, [(-1, 1)])
    dc, hd = hd_for_module(alg, x)
    cc = x.central_character()
    norm = weight_norm_in_root_span(dc.ctx, cc)
    avals = a_values("A", 2)
    table = spin_char_table("A", 2)
    hits = {"kappa1": 0, "kappa_quarter": 0, "occurrences": 0}
    for chi in table.genuine_chars():
        if multiplicity(hd.character, chi) == 0:
            continue
        hits["occurrences"] += 1
        a_val = avals[chi.label]
        if (a_val - norm).is_zero():
            hits["kappa1"] += 1
        if (a_val - norm * Scalar.of(Fraction(1, 4))).is_zero():
            hits["kappa_quarter"] += 1
    return hits


# ---------------------------------------------------------------------------
# Dirac index
# ---------------------------------------------------------------------------


def dirac_index(alg: HAlgebra, x: HModule) -> ClassFunction:
    """I(X) = (X+ - X-) (x) script-S as a virtual W~-character."""
    if x.grading is None:
        raise ValueError("index needs a Z2-graded module")
    rs = alg.rs
    m_key = str(rs.m) if rs.m is not None else None
    from .clifford import build_spin_context

    ctx = build_spin_context(rs.label, rs.rank, m_key)
    table = spin_char_table(rs.label, rs.rank, m_key)
    plus, minus = x.grading
    vals = []
    for word in table.data.rep_words:
        t = x.t_word(word)
        tr_w = plus.trace_of(t) - minus.trace_of(t)
        tr_s = ctx.s_character_value(word, minus=False)
        if ctx.odd:
            tr_s = tr_s + ctx.s_character_value(word, minus=True)
        vals.append(tr_w * tr_s)
    return ClassFunction(table.data, vals)


def index_via_cohomology(alg: HAlgebra, x: HModule) -> ClassFunction:
    """script-H_D^+ - script-H_D^- computed independently on S (and S- when odd)."""
    rs = alg.rs
    m_key = str(rs.m) if rs.m is not None else None
    from .clifford import build_spin_context

    ctx = build_spin_context(rs.label, rs.rank, m_key)
    table = spin_char_table(rs.label, rs.rank, m_key)
    total = ClassFunction(table.data, [0] * table.data.num_classes)
    choices = [False, True] if ctx.odd else [False]
    for minus in choices:
        dc = dirac_matrix(alg, ctx, x, minus=minus)
        (dp, chip), (dm, chim) = _graded_parts(dc)
        total = total + chip - chim
    return total
