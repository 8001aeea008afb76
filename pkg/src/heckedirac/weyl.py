"""Root systems of types A_{l-1} and C_n, their Weyl groups and character tables.

Vectors live in the ambient coordinate space (dimension l for type A, n for
type C) with the standard pairing <eps_i, eps_j> = delta_ij.  For type A the
roots span the sum-zero subspace; for type C the long roots 2*eps_i then have
<a, a> = 4 under this form, which is the convention the type-C parameter
formulas assume.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exactalg import Mat, Scalar

DESK_GROUP_BOUND = 3628800  # 10!


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class WeylElt:
    """Group element stored as images of the coordinate axes.

    perm[i] = +-(j+1) meaning w(eps_{i+1}) = +-eps_{j+1}; type A never uses
    the sign.  `word` is the lexicographically least reduced expression.
    """

    __slots__ = ("perm", "word")

    def __init__(self, perm, word=None):
        self.perm = tuple(perm)
        self.word = word

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"WeylElt{self.perm}"

    def is_identity(self):
        return all(v == i + 1 for i, v in enumerate(self.perm))

    def act(self, vec):
        """w(v) for a coordinate vector v (Fractions or Scalars)."""
        out = [None] * len(vec)
        for i, target in enumerate(self.perm):
            j = abs(target) - 1
            out[j] = vec[i] if target > 0 else -vec[i]
        return out

    def act_weight(self, weight):
        """Action on weights: (w . gamma)_i = +-gamma_{w^{-1}(i)}; same formula
        as `act` because the pairing identifies both sides."""
        return tuple(self.act(list(weight)))

    def compose(self, other: "WeylElt"):
        """self * other (apply other first)."""
        perm = []
        for i in range(len(self.perm)):
            t = other.perm[i]
            s = self.perm[abs(t) - 1]
            perm.append(s if t > 0 else -s)
        return WeylElt(perm)

    def inverse(self):
        perm = [0] * len(self.perm)
        for i, t in enumerate(self.perm):
            perm[abs(t) - 1] = (i + 1) if t > 0 else -(i + 1)
        return WeylElt(perm)

    def matrix(self) -> Mat:
        n = len(self.perm)
        m = Mat.zeros(n, n)
        for i, t in enumerate(self.perm):
            m.a[abs(t) - 1][i] = Scalar.of(1 if t > 0 else -1)
        return m


class RootSystem:
    """Roots, Weyl group generators and parameter function for A_{l-1} or C_n."""

    def __init__(self, label, rank, m_param=None):
        if label not in ("A", "C"):
            raise ValueError("label must be 'A' or 'C'")
        if rank < 1:
            raise ValueError("rank must be >= 1")
        if label == "C" and m_param is None:
            raise ValueError("type C requires the long-root parameter m")
        if label == "A" and m_param is not None:
            raise ValueError("type A takes no m parameter")
        self.label = label
        self.rank = rank
        self.m = Fraction(m_param) if m_param is not None else None
        self.ambient = rank + 1 if label == "A" else rank

        n = self.ambient
        if label == "A":
            pos = []
            for i in range(n):
                for j in range(i + 1, n):
                    v = [Fraction(0)] * n
                    v[i], v[j] = Fraction(1), Fraction(-1)
                    pos.append(tuple(v))
            simples = []
            for i in range(n - 1):
                v = [Fraction(0)] * n
                v[i], v[i + 1] = Fraction(1), Fraction(-1)
                simples.append(tuple(v))
        else:
            pos = []
            for i in range(n):
                for j in range(i + 1, n):
                    for sj in (Fraction(-1), Fraction(1)):
                        v = [Fraction(0)] * n
                        v[i], v[j] = Fraction(1), sj
                        pos.append(tuple(v))
            for i in range(n):
                v = [Fraction(0)] * n
                v[i] = Fraction(2)
                pos.append(tuple(v))
            simples = []
            for i in range(n - 1):
                v = [Fraction(0)] * n
                v[i], v[i + 1] = Fraction(1), Fraction(-1)
                simples.append(tuple(v))
            v = [Fraction(0)] * n
            v[n - 1] = Fraction(2)
            simples.append(tuple(v))

        self.positives = tuple(pos)
        self.simples = tuple(simples)
        self.roots = tuple(pos) + tuple(tuple(-x for x in a) for a in pos)
        self._posset = set(self.positives)

    # -- basic root calculus ----------------------------------------------

    def norm_sq(self, alpha):
        return dot(alpha, alpha)

    def coroot_pairing(self, alpha, v):
        """alpha^vee(v) = 2 <alpha, v> / <alpha, alpha>."""
        return 2 * dot(alpha, v) / self.norm_sq(alpha)

    def c_param(self, alpha) -> Fraction:
        """W-invariant parameter: type A all 1; type C 1 short, m long."""
        if self.label == "A":
            return Fraction(1)
        return self.m if self.norm_sq(alpha) == 4 else Fraction(1)

    def reflect(self, alpha, v):
        """s_alpha(v) = v - alpha^vee(v) alpha."""
        c = self.coroot_pairing(alpha, v)
        return tuple(x - c * a for x, a in zip(v, alpha))

    def reflection(self, alpha) -> WeylElt:
        perm = []
        for i in range(self.ambient):
            e = [Fraction(0)] * self.ambient
            e[i] = Fraction(1)
            img = self.reflect(alpha, e)
            nz = [(j, x) for j, x in enumerate(img) if x != 0]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise ValueError("reflection is not a signed permutation")
            j, x = nz[0]
            perm.append((j + 1) if x > 0 else -(j + 1))
        w = WeylElt(perm)
        w.word = self.word_of(w)
        return w

    def simple_reflection(self, k) -> WeylElt:
        return self.reflection(self.simples[k])

    def is_positive_root(self, v):
        return tuple(v) in self._posset

    def is_negative_root(self, v):
        return tuple(-x for x in v) in self._posset

    # -- word machinery -----------------------------------------------------

    def left_descent(self, w: WeylElt):
        """Smallest k with l(s_k w) < l(w), i.e. w^{-1}(alpha_k) < 0."""
        winv = w.inverse()
        for k, alpha in enumerate(self.simples):
            if self.is_negative_root(winv.act(list(alpha))):
                return k
        return None

    def word_of(self, w: WeylElt):
        """Lexicographically least reduced word, by greedy minimal left descent."""
        word = []
        cur = w
        while True:
            k = self.left_descent(cur)
            if k is None:
                break
            word.append(k)
            cur = self._plain_simple(k).compose(cur)
        if not cur.is_identity():
            raise ValueError("element did not reduce to identity")
        return tuple(word)

    def _plain_simple(self, k):
        alpha = self.simples[k]
        perm = []
        for i in range(self.ambient):
            e = [Fraction(0)] * self.ambient
            e[i] = Fraction(1)
            img = self.reflect(alpha, e)
            nz = [(j, x) for j, x in enumerate(img) if x != 0][0]
            perm.append((nz[0] + 1) if nz[1] > 0 else -(nz[0] + 1))
        return WeylElt(perm)

    def from_word(self, word) -> WeylElt:
        w = self.identity()
        for k in word:
            w = w.compose(self._plain_simple(k))
        w.word = tuple(word)
        return w

    def identity(self) -> WeylElt:
        w = WeylElt(range(1, self.ambient + 1))
        w.word = ()
        return w

    def length(self, w: WeylElt):
        return len(self.word_of(w))

    # -- enumeration ----------------------------------------------------------

    def order(self):
        import math

        n = self.ambient
        return math.factorial(n) if self.label == "A" else math.factorial(n) * 2 ** n

    @lru_cache(maxsize=None)
    def elements(self) -> tuple[WeylElt, ...]:
        if self.order() > DESK_GROUP_BOUND:
            raise ValueError("Weyl group too large for desk-scale enumeration")
        n = self.ambient
        out = []
        if self.label == "A":
            for p in itertools.permutations(range(1, n + 1)):
                w = WeylElt(p)
                w.word = self.word_of(w)
                out.append(w)
        else:
            for p in itertools.permutations(range(1, n + 1)):
                for signs in itertools.product((1, -1), repeat=n):
                    w = WeylElt(tuple(s * v for s, v in zip(signs, p)))
                    w.word = self.word_of(w)
                    out.append(w)
        return tuple(out)

    def longest_element(self) -> WeylElt:
        best = max(self.elements(), key=lambda w: len(w.word))
        return best

    # -- weights ---------------------------------------------------------------

    @lru_cache(maxsize=None)
    def fundamental_weights(self):
        """omega_k with alpha_j^vee(omega_k) = delta_jk, inside the root span."""
        k = len(self.simples)
        # omega = sum_j x_j alpha_j; impose the coroot pairings
        gram = [[self.coroot_pairing(ai, aj) for aj in self.simples] for ai in self.simples]
        out = []
        for target in range(k):
            x = _solve_rational(gram, [Fraction(1) if j == target else Fraction(0) for j in range(k)])
            omega = [Fraction(0)] * self.ambient
            for coef, alpha in zip(x, self.simples):
                omega = [o + coef * av for o, av in zip(omega, alpha)]
            out.append(tuple(omega))
        return tuple(out)

    def coxeter_m(self, i, j):
        """Order of s_i s_j, read off the root geometry (enough for A and C)."""
        if i == j:
            return 1
        si, sj = self.simples[i], self.simples[j]
        prod = self._plain_simple(i).compose(self._plain_simple(j))
        order = 1
        cur = prod
        while not cur.is_identity():
            cur = cur.compose(prod)
            order += 1
            if order > 6:
                raise ValueError("unexpected Coxeter order")
        return order

    def describe(self):
        return {
            "label": self.label,
            "rank": self.rank,
            "m": str(self.m) if self.m is not None else None,
            "order": self.order(),
            "positive_roots": len(self.positives),
        }


def _solve_rational(a_rows, rhs):
    """Solve a small square rational system exactly."""
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(a_rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        f = a[c][c]
        a[c] = [x / f for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                g = a[i][c]
                a[i] = [x - g * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def build_root_system(label, rank, m_param=None) -> RootSystem:
    """Cached constructor; m_param must be hashable (use Fraction or str)."""
    m = Fraction(m_param) if m_param is not None else None
    return RootSystem(label, rank, m)


# ---------------------------------------------------------------------------
# Character tables of W
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def weyl_finite_group(label, rank, m_param=None):
    from .chartable import FiniteGroup

    rs = build_root_system(label, rank, m_param)
    gens = [rs.simple_reflection(k) for k in range(len(rs.simples))]
    return FiniteGroup(gens, rs.identity(), lambda a, b: a.compose(b),
                       key=lambda w: w.perm)


@lru_cache(maxsize=None)
def char_table(label, rank, m_param=None):
    """Irreducible characters of W by the Burnside-Dixon engine.

    For type A the table is re-emitted on the cycle-type class data after an
    exact match against the Murnaghan-Nakayama rows, so partition-labelled
    characters and module characters share one ClassData.
    """
    from .chartable import (ClassFunction, burnside_character_table,
                            cycle_type, mn_character, sym_class_data)

    group = weyl_finite_group(label, rank, m_param)
    data, chars = burnside_character_table(group, tag=f"W({label}{rank})")
    if label != "A":
        return data, chars, None

    l = rank + 1
    cyc_data, types = sym_class_data(l)
    dixon_types = [cycle_type(group.elements[r].perm).parts for r in data.rep_indices]
    reorder = [dixon_types.index(t.parts) for t in types]
    from .partitions import partitions_of

    out_chars = []
    matched = {}
    for c in chars:
        vals = [c.values[i] for i in reorder]
        out_chars.append(ClassFunction(cyc_data, vals, label=c.label))
    for lam in partitions_of(l):
        wanted = [Scalar.of(mn_character(lam, t)) for t in types]
        for c in out_chars:
            if c.values == wanted:
                matched[lam.parts] = c
                c.label = f"sigma{lam.parts}"
                break
        else:
            raise RuntimeError(f"MN row for {lam} missing from Dixon table")
    return cyc_data, out_chars, matched


def weyl_class_data(label, rank, m_param=None):
    return char_table(label, rank, m_param)[0]


@lru_cache(maxsize=None)
def weyl_class_rep_words(label, rank, m_param=None):
    """A representative word per conjugacy class, aligned with weyl_class_data."""
    from .chartable import cycle_type, sym_class_data

    group = weyl_finite_group(label, rank, m_param)
    data = weyl_class_data(label, rank, m_param)
    if label != "A":
        return tuple(data.rep_words)
    _, types = sym_class_data(rank + 1)
    rs = build_root_system(label, rank, m_param)
    found = {}
    for w in rs.elements():
        t = cycle_type(w.perm).parts
        if t not in found:
            found[t] = rs.word_of(w)
    return tuple(found[t.parts] for t in types)


@lru_cache(maxsize=None)
def weyl_element_class_index(label, rank, m_param=None):
    """element index in the enumerated group -> class index in weyl_class_data."""
    from .chartable import cycle_type, sym_class_data

    group = weyl_finite_group(label, rank, m_param)
    if label != "A":
        return tuple(group.class_of_table())
    _, types = sym_class_data(rank + 1)
    type_index = {t.parts: i for i, t in enumerate(types)}
    return tuple(type_index[cycle_type(w.perm).parts] for w in group.elements)
