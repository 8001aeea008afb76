"""Character tables of explicitly enumerated finite groups.

One engine serves both the Weyl groups and their spin double covers: BFS
enumeration from generators, conjugacy classes by orbit partition, class
multiplication constants, and Burnside-Dixon eigenvector splitting done
exactly over the quadratic Gaussian tower (sympy factors the rational
characteristic polynomials; roots of the quadratic factors stay in the
tower).  Murnaghan-Nakayama is kept alongside as an independent route to
the symmetric-group table.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import sympy

from .exactalg import Mat, Scalar, Subspace, charpoly, kernel, sqrt_of_fraction
from .partitions import Partition, partitions_of


class FiniteGroup:
    """A finite group enumerated from generators via hashable element keys."""

    def __init__(self, gens, identity, mul, key=lambda x: x):
        self.mul = mul
        self.keyf = key
        self.elements = [identity]
        self.index = {key(identity): 0}
        self.words = [()]
        self.gen_count = len(gens)

        rmul_maps = [dict() for _ in gens]
        frontier = [0]
        while frontier:
            new_frontier = []
            for i in frontier:
                for k, g in enumerate(gens):
                    prod = mul(self.elements[i], g)
                    pk = key(prod)
                    j = self.index.get(pk)
                    if j is None:
                        j = len(self.elements)
                        self.elements.append(prod)
                        self.index[pk] = j
                        self.words.append(self.words[i] + (k,))
                        new_frontier.append(j)
                    rmul_maps[k][i] = j
            frontier = new_frontier
        n = len(self.elements)
        self.rmul = []
        for k, g in enumerate(gens):
            col = [None] * n
            for i in range(n):
                j = rmul_maps[k].get(i)
                if j is None:
                    j = self.index[key(mul(self.elements[i], g))]
                col[i] = j
            self.rmul.append(col)
        # generator inverses: rmul[k] is a permutation; preimage of identity
        self.gen_inv = [self.rmul[k].index(0) for k in range(self.gen_count)]
        self._inverse = None
        self._classes = None

    @property
    def order(self):
        return len(self.elements)

    def mul_index(self, i, j):
        """Index of elements[i] * elements[j], walking j's generator word."""
        cur = i
        for k in self.words[j]:
            cur = self.rmul[k][cur]
        return cur

    def inverse_index(self, i):
        if self._inverse is None:
            inv = [0] * self.order
            for idx in range(self.order):
                cur = 0
                for k in reversed(self.words[idx]):
                    cur = self.mul_index(cur, self.gen_inv[k])
                inv[idx] = cur
            self._inverse = inv
        return self._inverse[i]

    def conjugacy_classes(self):
        """List of (sorted index list, representative index); identity class
        first, then ordered by (size, representative word)."""
        if self._classes is not None:
            return self._classes
        n = self.order
        seen = [False] * n
        classes = []
        for start in range(n):
            if seen[start]:
                continue
            orbit = {start}
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                for k in range(self.gen_count):
                    gi = self.rmul[k][self.mul_index(self.gen_inv[k], x)]
                    if not seen[gi]:
                        seen[gi] = True
                        orbit.add(gi)
                        stack.append(gi)
            classes.append(sorted(orbit))

        def rep_of(cls):
            return min(cls, key=lambda i: (len(self.words[i]), self.words[i]))

        def sort_key(cls):
            if 0 in cls:
                return (0, 0, ())
            r = rep_of(cls)
            return (1, len(cls), (len(self.words[r]), self.words[r]))

        classes.sort(key=sort_key)
        self._classes = [(cls, rep_of(cls)) for cls in classes]
        return self._classes

    def class_of_table(self):
        table = [None] * self.order
        for ci, (cls, _) in enumerate(self.conjugacy_classes()):
            for i in cls:
                table[i] = ci
        return table


class ClassData:
    """Shared class bookkeeping for class functions on one group."""

    __slots__ = ("order", "sizes", "rep_words", "rep_indices", "identity_class", "tag")

    def __init__(self, order, sizes, rep_words, rep_indices, tag=""):
        self.order = order
        self.sizes = list(sizes)
        self.rep_words = [tuple(w) for w in rep_words]
        self.rep_indices = list(rep_indices)
        self.identity_class = 0
        self.tag = tag

    @property
    def num_classes(self):
        return len(self.sizes)

    def __eq__(self, other):
        return (isinstance(other, ClassData) and self.order == other.order
                and self.sizes == other.sizes and self.rep_words == other.rep_words
                and self.tag == other.tag)

    def __hash__(self):
        return hash((self.order, tuple(self.sizes), tuple(self.rep_words), self.tag))


class ClassFunction:
    """Exact class function: one Scalar per conjugacy class."""

    __slots__ = ("data", "values", "label")

    def __init__(self, data: ClassData, values, label=None):
        self.data = data
        self.values = [v if isinstance(v, Scalar) else Scalar.of(v) for v in values]
        self.label = label

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.data == other.data
                and self.values == other.values)

    def __hash__(self):
        return hash((self.data, tuple(v.key() for v in self.values)))

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.data, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.data, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.data, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.data, [v * Scalar.of(other) for v in self.values])

    def _check(self, other):
        if self.data != other.data:
            raise ValueError("class functions live on different groups")

    @property
    def dim(self):
        return self.values[self.data.identity_class]

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def inner(self, other: "ClassFunction") -> Scalar:
        self._check(other)
        acc = Scalar.of(0)
        for size, a, b in zip(self.data.sizes, self.values, other.values):
            acc = acc + Scalar.of(size) * a * b.conjugate()
        return acc * Scalar.of(Fraction(1, self.data.order))

    def __repr__(self):
        return f"ClassFunction({self.label or 'chi'}: {[str(v) for v in self.values]})"


def multiplicity(chi: ClassFunction, sigma: ClassFunction) -> int:
    """<chi, sigma> as a non-negative integer; non-integrality flags an upstream bug."""
    val = chi.inner(sigma)
    if not val.is_rational():
        raise ValueError("non-integral multiplicity (irrational)")
    q = val.rational()
    if q.denominator != 1 or q < 0:
        raise ValueError(f"non-integral multiplicity {q}")
    return int(q)


def decompose(chi: ClassFunction, irreducibles) -> dict:
    """Multiplicities of chi against a list of irreducible characters."""
    out = {}
    for irr in irreducibles:
        m = multiplicity(chi, irr)
        if m:
            out[irr.label] = m
    return out


# ---------------------------------------------------------------------------
# Burnside-Dixon on the enumerated group
# ---------------------------------------------------------------------------


def _eigenvalues_in_tower(m: Mat):
    """Eigenvalues of a rational matrix whose eigenvalues lie in the quadratic tower."""
    coeffs = charpoly(m)
    x = sympy.symbols("x")
    poly = sum(sympy.Rational(c.rational()) * x ** k for k, c in enumerate(coeffs))
    vals = []
    for factor, _mult in sympy.factor_list(sympy.Poly(poly, x))[1]:
        fp = sympy.Poly(factor, x)
        cs = [Fraction(str(c)) for c in fp.all_coeffs()]
        if fp.degree() == 1:
            a, b = cs
            vals.append(Scalar.of(-b / a))
        elif fp.degree() == 2:
            a, b, c = cs
            disc = b * b - 4 * a * c
            root = sqrt_of_fraction(disc)
            half = Scalar.of(Fraction(1, 2 * a))
            for sgn in (1, -1):
                vals.append((Scalar.of(-b) + Scalar.of(sgn) * root) * half)
        else:
            raise ValueError("class-matrix eigenvalue outside the quadratic tower")
    out = []
    for v in vals:
        if v not in out:
            out.append(v)
    return out


def burnside_character_table(group: FiniteGroup, tag=""):
    """Irreducible characters by exact class-matrix eigenvector splitting.

    Returns (ClassData, characters) with characters sorted by dimension then
    value key, labelled chi0, chi1, ...
    """
    classes = group.conjugacy_classes()
    k = len(classes)
    class_of = group.class_of_table()
    reps = [rep for _, rep in classes]
    sizes = [len(cls) for cls, _ in classes]

    mats = []
    for r in range(k):
        b = [[0] * k for _ in range(k)]
        for t in range(k):
            zt = reps[t]
            for x in classes[r][0]:
                y = group.mul_index(group.inverse_index(x), zt)
                b[class_of[y]][t] += 1
        mats.append(Mat.from_rows(b))

    pieces = [Subspace.full(k)]
    for br in mats:
        if all(p.dim == 1 for p in pieces):
            break
        vals = _eigenvalues_in_tower(br)
        spaces = [_stable_kernel(br, v) for v in vals]
        new_pieces = []
        for piece in pieces:
            if piece.dim == 1:
                new_pieces.append(piece)
                continue
            used = 0
            for sp in spaces:
                inter = piece.intersect(sp)
                if inter.dim:
                    new_pieces.append(inter)
                    used += inter.dim
            if used != piece.dim:
                raise ValueError("class matrix failed to split")
        pieces = new_pieces
    if any(p.dim != 1 for p in pieces):
        raise ValueError("class matrices did not separate all characters")

    data = ClassData(group.order, sizes, [group.words[r] for r in reps], reps, tag=tag)
    chars = []
    for piece in pieces:
        v = piece.basis.a[0]
        v0 = v[0]
        if v0.is_zero():
            raise ValueError("degenerate eigenvector")
        omegas = [x / v0 for x in v]
        denom = Scalar.of(0)
        for s in range(k):
            denom = denom + omegas[s] * omegas[s].conjugate() * Scalar.of(Fraction(1, sizes[s]))
        d_sq = (Scalar.of(group.order) / denom).rational()
        d = _exact_sqrt_fraction(d_sq)
        values = [Scalar.of(d) * omegas[s] * Scalar.of(Fraction(1, sizes[s])) for s in range(k)]
        chars.append(ClassFunction(data, values))
    chars.sort(key=lambda c: (c.dim.rational(), tuple(v.key() for v in c.values)))
    for idx, c in enumerate(chars):
        c.label = f"chi{idx}"
    return data, chars


def _stable_kernel(m: Mat, lam: Scalar):
    n = m.rows
    shifted = m - Mat.identity(n).scale(lam)
    power = shifted
    prev = kernel(power)
    while True:
        power = power * shifted
        nxt = kernel(power)
        if nxt.dim == prev.dim:
            return prev
        prev = nxt


def _exact_sqrt_fraction(q: Fraction) -> Fraction:
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise ValueError(f"{q} is not a perfect square")
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# Symmetric group specifics: Murnaghan-Nakayama, Kostka, Young seminormal
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _mn_beta(beta: tuple, mu: tuple) -> int:
    """MN recursion on beta-sets: beta is a sorted tuple of distinct non-negative
    integers encoding the partition; removing a k-strip swaps b -> b-k."""
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb >= 0 and nb not in bset:
            height = sum(1 for x in beta if nb < x < b)
            nbeta = tuple(sorted(bset - {b} | {nb}))
            total += (-1) ** height * _mn_beta(nbeta, rest)
    return total


def mn_character(lam, mu) -> int:
    """chi^lam on the class of cycle type mu, by Murnaghan-Nakayama."""
    lam = tuple(lam.parts if isinstance(lam, Partition) else tuple(lam))
    mu = tuple(mu.parts if isinstance(mu, Partition) else tuple(mu))
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    n = max(len(lam), 1)
    padded = list(lam) + [0] * (n - len(lam))
    beta = tuple(sorted(padded[i] + (n - 1 - i) for i in range(n)))
    return _mn_beta(beta, mu)


def cycle_type(perm_images) -> Partition:
    """Cycle type of a permutation given as 1-based images."""
    n = len(perm_images)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm_images[j] - 1
            ln += 1
        parts.append(ln)
    return Partition.sorted_from(parts)


def perm_sign(p) -> int:
    inv = 0
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def sym_class_data(l: int):
    """ClassData for S_l with classes indexed by cycle type, identity first."""
    types = sorted(partitions_of(l), key=lambda p: (p != Partition([1] * l), p.parts))
    sizes = []
    for t in types:
        counts = {}
        for p in t:
            counts[p] = counts.get(p, 0) + 1
        denom = 1
        for v, m in counts.items():
            denom *= (v ** m) * math.factorial(m)
        sizes.append(math.factorial(l) // denom)
    data = ClassData(math.factorial(l), sizes, [t.parts for t in types],
                     list(range(len(types))), tag=f"S{l}-cycletype")
    return data, tuple(types)


@lru_cache(maxsize=None)
def sym_irreducible_character(l: int, lam: tuple) -> ClassFunction:
    data, types = sym_class_data(l)
    vals = [mn_character(lam, t) for t in types]
    return ClassFunction(data, vals, label=f"sigma{lam}")


@lru_cache(maxsize=None)
def induced_sign_character(l: int, lengths: tuple) -> ClassFunction:
    """Character of Ind_{S_mu}^{S_l}(sgn) on cycle-type classes, by direct enumeration."""
    data, types = sym_class_data(l)
    lengths = tuple(int(x) for x in lengths)
    if sum(lengths) != l:
        raise ValueError("lengths must sum to l")
    block_of = []
    for bi, ln in enumerate(lengths):
        block_of.extend([bi] * ln)
    h_order = 1
    for ln in lengths:
        h_order *= math.factorial(ln)

    first_of_type: dict[tuple, tuple] = {}
    for p in itertools.permutations(range(1, l + 1)):
        t = cycle_type(p).parts
        if t not in first_of_type:
            first_of_type[t] = p

    values = []
    for t in types:
        g = first_of_type[t.parts]
        total = 0
        for x in itertools.permutations(range(1, l + 1)):
            xinv = [0] * l
            for i, v in enumerate(x):
                xinv[v - 1] = i + 1
            y = tuple(x[g[xinv[i] - 1] - 1] for i in range(l))
            if all(block_of[y[i] - 1] == block_of[i] for i in range(l)):
                total += perm_sign(y)
        if total % h_order:
            raise ValueError("induced character not integral")
        values.append(total // h_order)
    return ClassFunction(data, values, label=f"ind_sgn{lengths}")


@lru_cache(maxsize=None)
def kostka_number(nu: tuple, mu: tuple) -> int:
    """Number of semistandard tableaux of shape nu and content mu."""
    nu = tuple(nu)
    mu = tuple(mu)
    if sum(nu) != sum(mu):
        return 0

    def rec(filled, idx):
        # filled: tuple of current row lengths
        if idx == len(mu):
            return 1
        count = mu[idx]
        total = 0

        def place(row, left, newf):
            nonlocal total
            if left == 0:
                total += rec(tuple(newf), idx + 1)
                return
            if row >= len(nu):
                return
            # entries idx+1 placed at the end of rows; at most one per column
            # means new length of row r cannot exceed the previous length of
            # row r-1 (strict column increase).
            cap = min(nu[row] - newf[row],
                      left,
                      (filled[row - 1] - newf[row]) if row > 0 else left)
            for c in range(cap, -1, -1):
                nf = list(newf)
                nf[row] += c
                place(row + 1, left - c, nf)

        place(0, count, list(filled))
        return total

    return rec(tuple(0 for _ in nu), 0)


@lru_cache(maxsize=None)
def seminormal_rep(lam: tuple):
    """Young's seminormal matrices for the adjacent transpositions of S_l.

    Returns (list of SYT as dicts entry -> (row, col), list of Mat); the
    build is validated by relation and trace checks in the test suite.
    """
    lam_p = Partition(lam)
    l = lam_p.size

    def tableaux(shape):
        out = []

        def rec(placed, heights):
            k = len(placed) + 1
            if k > l:
                out.append(dict(placed))
                return
            for r in range(len(shape)):
                c = heights[r]
                if c < shape[r] and (r == 0 or heights[r - 1] > c):
                    heights2 = list(heights)
                    heights2[r] += 1
                    placed[k] = (r, c)
                    rec(placed, heights2)
                    del placed[k]

        rec({}, [0] * len(shape))
        return out

    syt = tableaux(lam_p.parts)
    syt.sort(key=lambda t: tuple(t[k] for k in range(1, l + 1)))
    index = {tuple(sorted(t.items())): i for i, t in enumerate(syt)}
    dim = len(syt)

    mats = []
    for k in range(1, l):
        m = Mat.zeros(dim, dim)
        done = set()
        for ti, t in enumerate(syt):
            if ti in done:
                continue
            rk, ck = t[k]
            rk1, ck1 = t[k + 1]
            if rk == rk1:
                m.a[ti][ti] = Scalar.of(1)
                done.add(ti)
                continue
            if ck == ck1:
                m.a[ti][ti] = Scalar.of(-1)
                done.add(ti)
                continue
            t2 = dict(t)
            t2[k], t2[k + 1] = t[k + 1], t[k]
            tj = index[tuple(sorted(t2.items()))]
            ax = (ck1 - rk1) - (ck - rk)
            a = Scalar.of(Fraction(1, ax))
            one = Scalar.of(1)
            m.a[ti][ti] = a
            m.a[tj][ti] = one
            m.a[ti][tj] = one - a * a
            m.a[tj][tj] = -a
            done.add(ti)
            done.add(tj)
        mats.append(m)
    return syt, mats
