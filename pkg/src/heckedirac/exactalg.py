"""Exact scalars in the Gaussian multi-quadratic tower, and dense exact linear algebra.

A scalar is a finite sum  sum_d (p_d + q_d*i) * sqrt(d)  over square-free
positive integers d, with Gaussian-rational coefficients.  d = 1 is the
rational part.  Radicals are adjoined lazily: multiplying sqrt(2) by sqrt(6)
lands on 2*sqrt(3) automatically.  No floating point is used anywhere;
every rank decision downstream is certified by exact elimination.

Internally a scalar is stored as integer Gaussian coefficients over one
positive common denominator, which keeps the elimination kernels fast.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

_GCD = math.gcd


def _factor(n):
    """Prime factorization of a positive integer as a dict prime -> exponent."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


_factor_cache: dict[int, dict[int, int]] = {}


def _factor_cached(n):
    f = _factor_cache.get(n)
    if f is None:
        f = _factor(n)
        _factor_cache[n] = f
    return f


def _square_free_split(n):
    """n = s*s*d with d square-free; returns (s, d)."""
    s, d = 1, 1
    for p, e in _factor_cached(n).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


_radical_gcd_cache: dict[tuple[int, int], tuple[int, int]] = {}


def _radical_mul(d1, d2):
    """sqrt(d1)*sqrt(d2) = g*sqrt(d) with d square-free; returns (g, d)."""
    key = (d1, d2)
    got = _radical_gcd_cache.get(key)
    if got is None:
        g = _GCD(d1, d2)
        got = (g, (d1 // g) * (d2 // g))
        _radical_gcd_cache[key] = got
    return got


class Scalar:
    """Element of Q(i, sqrt(2), sqrt(3), sqrt(5), ...).  Immutable by convention."""

    __slots__ = ("den", "parts")

    def __init__(self, den=1, parts=None):
        # den: positive int; parts: dict square-free d -> (a, b) ints, no (0, 0)
        self.den = den
        self.parts = parts if parts is not None else {}

    @staticmethod
    def _make(den, parts):
        if not parts:
            return _S0
        if den < 0:
            den = -den
            parts = {d: (-a, -b) for d, (a, b) in parts.items()}
        if den != 1:
            g = den
            for a, b in parts.values():
                g = _GCD(g, a)
                g = _GCD(g, b)
                if g == 1:
                    break
            if g > 1:
                den //= g
                parts = {d: (a // g, b // g) for d, (a, b) in parts.items()}
        return Scalar(den, parts)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def of(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar(1, {1: (x, 0)}) if x else _S0
        q = Fraction(x)
        if q == 0:
            return _S0
        return Scalar(q.denominator, {1: (q.numerator, 0)})

    @staticmethod
    def i(coeff=1) -> "Scalar":
        q = Fraction(coeff)
        if q == 0:
            return _S0
        return Scalar(q.denominator, {1: (0, q.numerator)})

    # -- predicates and extraction --------------------------------------

    def is_zero(self):
        return not self.parts

    def is_rational(self):
        if not self.parts:
            return True
        if len(self.parts) != 1 or 1 not in self.parts:
            return False
        return self.parts[1][1] == 0

    def is_real(self):
        return all(b == 0 for (_, b) in self.parts.values())

    def rational(self) -> Fraction:
        """The value as a Fraction; raises if it is not rational."""
        if not self.parts:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"not a rational scalar: {self}")
        return Fraction(self.parts[1][0], self.den)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        sp, op = self.parts, other.parts
        if not sp:
            return other
        if not op:
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            den, f1, f2 = d1, 1, 1
        else:
            g = _GCD(d1, d2)
            den = d1 // g * d2
            f1, f2 = den // d1, den // d2
        parts = {d: (a * f1, b * f1) for d, (a, b) in sp.items()} if f1 != 1 else dict(sp)
        for d, (a, b) in op.items():
            cur = parts.get(d)
            if cur is None:
                parts[d] = (a * f2, b * f2)
            else:
                na, nb = cur[0] + a * f2, cur[1] + b * f2
                if na == 0 and nb == 0:
                    del parts[d]
                else:
                    parts[d] = (na, nb)
        return Scalar._make(den, parts)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.den, {d: (-a, -b) for d, (a, b) in self.parts.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.of(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        sp, op = self.parts, other.parts
        if not sp or not op:
            return _S0
        # fast path: both pure Gaussian rational
        if len(sp) == 1 and len(op) == 1:
            c1 = sp.get(1)
            c2 = op.get(1)
            if c1 is not None and c2 is not None:
                a1, b1 = c1
                a2, b2 = c2
                return Scalar._make(self.den * other.den,
                                    {1: (a1 * a2 - b1 * b2, a1 * b2 + b1 * a2)})
        parts: dict[int, tuple[int, int]] = {}
        for d1, (a1, b1) in sp.items():
            for d2, (a2, b2) in op.items():
                if d1 == 1:
                    g, d = 1, d2
                elif d2 == 1:
                    g, d = 1, d1
                elif d1 == d2:
                    g, d = d1, 1
                else:
                    g, d = _radical_mul(d1, d2)
                a = (a1 * a2 - b1 * b2) * g
                b = (a1 * b2 + b1 * a2) * g
                cur = parts.get(d)
                if cur is not None:
                    a += cur[0]
                    b += cur[1]
                if a == 0 and b == 0:
                    parts.pop(d, None)
                else:
                    parts[d] = (a, b)
        return Scalar._make(self.den * other.den, parts)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation; real radicals are fixed."""
        return Scalar(self.den, {d: (a, -b) for d, (a, b) in self.parts.items()})

    def _split_by_prime(self, p):
        """self = x + sqrt(p)*y with x, y free of the prime p in their radicals."""
        pa, pb = {}, {}
        for d, c in self.parts.items():
            if d % p == 0:
                pb[d // p] = c
            else:
                pa[d] = c
        return Scalar(self.den, pa) if pa else _S0, Scalar(self.den, pb) if pb else _S0

    def inverse(self):
        if not self.parts:
            raise ZeroDivisionError("inverse of zero scalar")
        primes = set()
        for d in self.parts:
            if d != 1:
                primes.update(_factor_cached(d))
        if not primes:
            a, b = self.parts[1]
            n = a * a + b * b
            return Scalar._make(n, {1: (a * self.den, -b * self.den)})
        p = max(primes)
        x, y = self._split_by_prime(p)
        # 1/(x + sqrt(p) y) = (x - sqrt(p) y) / (x^2 - p y^2); the denominator
        # is nonzero because sqrt(p) is not in the subfield without p.
        denom = x * x - Scalar(1, {1: (p, 0)}) * y * y
        sqrtp = Scalar(1, {p: (1, 0)})
        return (x - sqrtp * y) * denom.inverse()

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.of(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Scalar.of(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- identity --------------------------------------------------------

    def key(self):
        return (self.den, tuple(sorted((d, a, b) for d, (a, b) in self.parts.items())))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.den == other.den and self.parts == other.parts

    def __hash__(self):
        return hash(self.key())

    # -- formatting -------------------------------------------------------

    def _coeff(self, d):
        a, b = self.parts[d]
        return Fraction(a, self.den), Fraction(b, self.den)

    def __str__(self):
        if not self.parts:
            return "0"
        terms = []
        for d in sorted(self.parts):
            re_, im_ = self._coeff(d)
            if d == 1:
                if re_ != 0:
                    terms.append(str(re_))
                if im_ != 0:
                    terms.append(self._coef_i(im_))
            else:
                rad = f"sqrt({d})"
                if im_ == 0:
                    if re_ == 1:
                        terms.append(rad)
                    elif re_ == -1:
                        terms.append(f"-{rad}")
                    else:
                        terms.append(f"{re_}*{rad}")
                elif re_ == 0:
                    terms.append(f"{self._coef_i(im_)}*{rad}")
                else:
                    sign = "+" if im_ > 0 else "-"
                    terms.append(f"({re_} {sign} {self._coef_i(abs(im_))})*{rad}")
        out = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                out += " - " + t[1:]
            else:
                out += " + " + t
        return out

    @staticmethod
    def _coef_i(q: Fraction) -> str:
        if q == 1:
            return "i"
        if q == -1:
            return "-i"
        return f"{q}*i"

    def __repr__(self):
        return f"Scalar({self})"


_S0 = Scalar()
S0 = _S0
S1 = Scalar(1, {1: (1, 0)})


def sqrt_of(n: int) -> Scalar:
    """Exact square root of a positive integer, canonical positive choice."""
    if n < 1:
        raise ValueError("sqrt_of expects a positive integer")
    s, d = _square_free_split(n)
    if d == 1:
        return Scalar.of(s)
    return Scalar(1, {d: (s, 0)})


def sqrt_of_fraction(q) -> Scalar:
    """Square root of a rational; negative inputs give i*sqrt(|q|)."""
    q = Fraction(q)
    if q == 0:
        return _S0
    root = sqrt_of(abs(q.numerator) * q.denominator) * Scalar.of(Fraction(1, q.denominator))
    if q < 0:
        return Scalar.i(1) * root
    return root


_TERM_RAD = re.compile(r"^(?P<coef>.*?)\*?sqrt\((?P<d>\d+)\)$")


def parse_scalar(text: str) -> Scalar:
    """Parse the serialization produced by str(Scalar), e.g. '3/2 + 1/2*i + (2 - i)*sqrt(2)'."""
    s = text.strip()
    if s == "0":
        return Scalar()
    terms, depth, cur, sign = [], 0, "", 1
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip():
            terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign *= 1 if ch == "+" else -1
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    total = Scalar()
    for sgn, term in terms:
        total = total + Scalar.of(sgn) * _parse_term(term)
    return total


def _parse_gaussian(text: str) -> Scalar:
    out = Scalar()
    for piece in re.finditer(r"([+-]?[^+-]+)", text.replace(" ", "")):
        t = piece.group(1)
        sgn = 1
        if t.startswith("+"):
            t = t[1:]
        elif t.startswith("-"):
            sgn, t = -1, t[1:]
        if t.endswith("i"):
            t = t[:-1].rstrip("*")
            q = Fraction(t) if t else Fraction(1)
            out = out + Scalar.i(sgn * q)
        else:
            out = out + Scalar.of(sgn * Fraction(t))
    return out


def _parse_term(term: str) -> Scalar:
    m = _TERM_RAD.match(term.replace(" ", "")) if "sqrt" in term else None
    if m:
        d = int(m.group("d"))
        rad = Scalar(1, {d: (1, 0)}) if d != 1 else S1
        coef = m.group("coef")
        if not coef:
            return rad
        if coef.startswith("(") and coef.endswith(")"):
            coef = coef[1:-1]
        return _parse_gaussian(coef) * rad
    return _parse_gaussian(term)


# ---------------------------------------------------------------------------
# Dense matrices
# ---------------------------------------------------------------------------


class Mat:
    """Dense matrix with Scalar entries; equality is entrywise exact."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, rows, cols, a):
        self.rows = rows
        self.cols = cols
        self.a = a  # list of row lists

    @staticmethod
    def zeros(rows, cols):
        return Mat(rows, cols, [[S0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n):
        a = [[S0] * n for _ in range(n)]
        for k in range(n):
            a[k][k] = S1
        return Mat(n, n, a)

    @staticmethod
    def from_rows(rows):
        rs = [[x if isinstance(x, Scalar) else Scalar.of(x) for x in row] for row in rows]
        ncol = len(rs[0]) if rs else 0
        for r in rs:
            if len(r) != ncol:
                raise ValueError("ragged rows")
        return Mat(len(rs), ncol, rs)

    def copy(self):
        return Mat(self.rows, self.cols, [row[:] for row in self.a])

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.a == other.a

    def __hash__(self):
        return hash(self.key())

    def key(self):
        return (self.rows, self.cols, tuple(x.key() for row in self.a for x in row))

    def is_zero(self):
        return all(x.is_zero() for row in self.a for x in row)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.a, other.a)])

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.a, other.a)])

    def __neg__(self):
        return Mat(self.rows, self.cols, [[-x for x in row] for row in self.a])

    def scale(self, c):
        c = c if isinstance(c, Scalar) else Scalar.of(c)
        return Mat(self.rows, self.cols, [[c * x for x in row] for row in self.a])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        ob = other.a
        out = [[S0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.a):
            orow = out[i]
            for k, x in enumerate(row):
                if not x.parts:
                    continue
                brow = ob[k]
                for j, y in enumerate(brow):
                    if y.parts:
                        orow[j] = orow[j] + x * y
        return Mat(self.rows, other.cols, out)

    __rmul__ = scale

    def transpose(self):
        if self.rows == 0:
            return Mat(self.cols, 0, [[] for _ in range(self.cols)])
        return Mat(self.cols, self.rows, [list(col) for col in zip(*self.a)])

    def trace(self):
        t = S0
        for k in range(min(self.rows, self.cols)):
            t = t + self.a[k][k]
        return t

    def kron(self, other):
        rows, cols = self.rows * other.rows, self.cols * other.cols
        out = [[S0] * cols for _ in range(rows)]
        for i, row in enumerate(self.a):
            for j, x in enumerate(row):
                if not x.parts:
                    continue
                for p, orow in enumerate(other.a):
                    tr = out[i * other.rows + p]
                    base = j * other.cols
                    for q, y in enumerate(orow):
                        if y.parts:
                            tr[base + q] = x * y
        return Mat(rows, cols, out)

    def apply_row(self, v):
        """Row vector v (length rows) times self."""
        out = [S0] * self.cols
        for i, c in enumerate(v):
            if not c.parts:
                continue
            row = self.a[i]
            for j, x in enumerate(row):
                if x.parts:
                    out[j] = out[j] + c * x
        return out

    @staticmethod
    def vstack(mats):
        cols = mats[0].cols
        rows = []
        for m in mats:
            if m.cols != cols:
                raise ValueError("vstack column mismatch")
            rows.extend(row[:] for row in m.a)
        return Mat(len(rows), cols, rows)

    @staticmethod
    def hstack(mats):
        rows = mats[0].rows
        out = []
        for i in range(rows):
            row = []
            for m in mats:
                if m.rows != rows:
                    raise ValueError("hstack row mismatch")
                row.extend(m.a[i])
            out.append(row)
        return Mat(rows, sum(m.cols for m in mats), out)

    def to_strings(self):
        return [[str(x) for x in row] for row in self.a]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols})"


def rref(mat: Mat):
    """Reduced row echelon form (canonical): returns (R, pivot column list).

    Pivoting is leftmost nonzero column, first nonzero row, pivots scaled
    to 1 and cleared above and below, so equal row spaces give equal output.
    """
    a = [row[:] for row in mat.a]
    nr, nc = mat.rows, mat.cols
    pivots = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if a[i][c].parts:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        if piv != S1:
            inv = piv.inverse()
            a[r] = [inv * x if x.parts else x for x in a[r]]
        arow = a[r]
        for i in range(nr):
            if i != r:
                f = a[i][c]
                if f.parts:
                    ai = a[i]
                    a[i] = [x - f * y if y.parts else x for x, y in zip(ai, arow)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return Mat(nr, nc, a), pivots


class Subspace:
    """Subspace of a column-vector space of given ambient dimension.

    `basis` rows are the canonical reduced-echelon basis; two equal
    subspaces therefore carry identical basis matrices.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient, basis, pivots):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @staticmethod
    def from_rows(rows, ambient):
        if not isinstance(rows, Mat):
            if not rows:
                return Subspace.zero(ambient)
            rows = Mat.from_rows(rows)
        if rows.rows == 0:
            return Subspace.zero(ambient)
        r, piv = rref(rows)
        keep = [r.a[i] for i in range(len(piv))]
        return Subspace(ambient, Mat(len(keep), ambient, keep), piv)

    @staticmethod
    def zero(ambient):
        return Subspace(ambient, Mat(0, ambient, []), [])

    @staticmethod
    def full(ambient):
        return Subspace(ambient, Mat.identity(ambient), list(range(ambient)))

    @property
    def dim(self):
        return self.basis.rows

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis.key()))

    def coords_of(self, v):
        """Coordinates of vector v in the echelon basis, or None if v not in span."""
        v = [x if isinstance(x, Scalar) else Scalar.of(x) for x in v]
        coords = [v[p] for p in self.pivots]
        rem = v[:]
        for c, row in zip(coords, self.basis.a):
            if c.parts:
                rem = [x - c * y if y.parts else x for x, y in zip(rem, row)]
        if any(x.parts for x in rem):
            return None
        return coords

    def contains_vec(self, v):
        return self.coords_of(v) is not None

    def contains(self, other: "Subspace"):
        return all(self.contains_vec(row) for row in other.basis.a)

    def sum(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return Subspace.from_rows(Mat.vstack([self.basis, other.basis]), self.ambient)

    def intersect(self, other: "Subspace"):
        """Zassenhaus: row reduce [A A; B 0]; rows with zero left block span the intersection."""
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        n = self.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(n)
        top = Mat.hstack([self.basis, self.basis])
        bot = Mat.hstack([other.basis, Mat.zeros(other.basis.rows, n)])
        r, piv = rref(Mat.vstack([top, bot]))
        rows = []
        for i, p in enumerate(piv):
            if p >= n:
                rows.append(r.a[i][n:])
        return Subspace.from_rows(rows, n) if rows else Subspace.zero(n)

    def quotient_dim(self, sub: "Subspace"):
        if self.ambient != sub.ambient:
            raise ValueError("ambient mismatch")
        if not self.contains(sub):
            raise ValueError("not a subspace of the ambient space given")
        return self.dim - sub.dim

    def restrict_operator(self, op: Mat):
        """Matrix of the operator on this subspace (op acts on column vectors).

        Requires invariance; raises if a basis image leaves the span.
        With an echelon basis the coordinates are just the pivot entries.
        """
        images = self.basis * op.transpose()
        coords = []
        for i in range(self.dim):
            row = images.a[i]
            cs = [row[p] for p in self.pivots]
            rem = row[:]
            for c, brow in zip(cs, self.basis.a):
                if c.parts:
                    rem = [x - c * y if y.parts else x for x, y in zip(rem, brow)]
            if any(x.parts for x in rem):
                raise ValueError("subspace is not invariant under the operator")
            coords.append(cs)
        return Mat(self.dim, self.dim, coords)

    def trace_of(self, op: Mat):
        """Trace of an invariant operator restricted to this subspace."""
        images = self.basis * op.transpose()
        t = S0
        for i in range(self.dim):
            t = t + images.a[i][self.pivots[i]]
        return t

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel(m: Mat) -> Subspace:
    """Exact kernel {v : M v = 0} with canonical echelon basis."""
    r, piv = rref(m)
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    rows = []
    for f in free:
        v = [S0] * m.cols
        v[f] = S1
        for i, p in enumerate(piv):
            v[p] = -r.a[i][f]
        rows.append(v)
    return Subspace.from_rows(rows, m.cols) if rows else Subspace.zero(m.cols)


def image(m: Mat) -> Subspace:
    """Exact column space of M."""
    return Subspace.from_rows(m.transpose(), m.rows)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


# ---------------------------------------------------------------------------
# Simultaneous generalized eigenspaces
# ---------------------------------------------------------------------------


def charpoly(m: Mat):
    """Characteristic polynomial coefficients [c_0, ..., c_n] (monic, c_n = 1),
    by Faddeev-LeVerrier.  Intended for small matrices."""
    n = m.rows
    coeffs = [S0] * (n + 1)
    coeffs[n] = S1
    a = Mat.identity(n)
    for k in range(1, n + 1):
        a = m * a
        c = a.trace() * Scalar.of(Fraction(-1, k))
        coeffs[n - k] = c
        a = a + Mat.identity(n).scale(c)
    return coeffs


def _rational_roots(coeffs):
    """All rational roots (with multiplicity) of a polynomial with rational
    Scalar coefficients; returns (roots, fully_split)."""
    fracs = []
    for c in coeffs:
        if not c.is_rational():
            return [], False
        fracs.append(c.rational())
    roots = []
    from math import lcm

    den = 1
    for f in fracs:
        den = lcm(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for v in ints:
        g = _GCD(g, v)
    if g:
        ints = [v // g for v in ints]

    def divisors(n):
        n = abs(n)
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    def eval_at(poly, q):
        acc = Fraction(0)
        for c in reversed(poly):
            acc = acc * q + c
        return acc

    poly = [Fraction(v) for v in ints]
    while len(poly) > 1:
        a0, an = poly[0], poly[-1]
        if a0 == 0:
            roots.append(Fraction(0))
            poly = poly[1:]
            continue
        found = None
        for p in divisors(a0.numerator):
            for q in divisors(an.numerator):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if eval_at(poly, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return roots, False
        roots.append(found)
        out = [Fraction(0)] * (len(poly) - 1)
        acc = Fraction(0)
        for k in range(len(poly) - 1, 0, -1):
            acc = poly[k] + acc * found
            out[k - 1] = acc
        poly = out
    return roots, True


def _generalized_eigenspace(m: Mat, lam: Scalar):
    """Kernel of (M - lam)^k, iterated until the dimension stabilizes."""
    n = m.rows
    shifted = m - Mat.identity(n).scale(lam)
    power = shifted
    prev = kernel(power)
    while prev.dim < n:
        power = power * shifted
        nxt = kernel(power)
        if nxt.dim == prev.dim:
            break
        prev = nxt
    return prev


def simultaneous_generalized_eigenspaces(mats, candidates=None, check_commute=True):
    """Split ambient space into joint generalized eigenspaces of commuting matrices.

    candidates: optional list (one entry per matrix) of iterables of known
    eigenvalue candidates (Fractions or Scalars); without it, eigenvalues are
    found as rational roots of the characteristic polynomial.
    """
    if not mats:
        raise ValueError("no matrices given")
    n = mats[0].rows
    for m in mats:
        if m.rows != n or m.cols != n:
            raise ValueError("matrices must be square of equal size")
    if check_commute:
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                if not (mats[i] * mats[j] - mats[j] * mats[i]).is_zero():
                    raise ValueError("matrices do not commute")
    pieces = [((), Subspace.full(n))]
    for idx, m in enumerate(mats):
        if candidates is not None:
            vals = []
            for v in candidates[idx]:
                v = v if isinstance(v, Scalar) else Scalar.of(v)
                if v not in vals:
                    vals.append(v)
        else:
            roots, full = _rational_roots(charpoly(m))
            if not full:
                raise ValueError("non-rational eigenvalues; supply candidates")
            vals = []
            for rt in roots:
                s = Scalar.of(rt)
                if s not in vals:
                    vals.append(s)
        spaces = {v.key(): _generalized_eigenspace(m, v) for v in vals}
        new_pieces = []
        for weight, sub in pieces:
            used = 0
            for v in vals:
                inter = sub.intersect(spaces[v.key()])
                if inter.dim > 0:
                    new_pieces.append((weight + (v,), inter))
                    used += inter.dim
            if used != sub.dim:
                raise ValueError("eigenvalue candidates do not exhaust the space")
        pieces = new_pieces
    return pieces
