"""Zelevinsky multisegment combinatorics.

Covers the classification predicates (strictly decreasing right endpoints,
ladder, elliptic central character), m-profiles, the symmetric companion
m^temp, linkage classes, the permutation w(m), the hook-built partition
alpha(m), lambda(m), the two-sided resolution terms E(m^w) with their signs
and zero markers, and the closed-form prediction for the Dirac cohomology of
a ladder representation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .clifford import epsilon_of, spin_irrep_dimension
from .exactalg import Scalar, sqrt_of
from .partitions import Partition, dp_class


@dataclass(frozen=True)
class Segment:
    a: int
    b: int

    def __post_init__(self):
        if self.b < self.a:
            raise ValueError(f"segment needs b >= a, got [{self.a},{self.b}]")

    @property
    def length(self):
        return self.b - self.a + 1

    def __str__(self):
        return f"[{self.a},{self.b}]"


class Multisegment:
    """Ordered list of segments; the standard order has b_1 > b_2 > ... > b_n."""

    def __init__(self, segments):
        self.segments = tuple(
            s if isinstance(s, Segment) else Segment(int(s[0]), int(s[1]))
            for s in segments)
        if not self.segments:
            raise ValueError("empty multisegment")

    @staticmethod
    def parse(text: str) -> "Multisegment":
        """Parse the interface syntax '[-1,1];[0,0]'."""
        parts = [p.strip() for p in text.strip().split(";") if p.strip()]
        segs = []
        for p in parts:
            if not (p.startswith("[") and p.endswith("]")):
                raise ValueError(f"bad segment syntax at {p!r}: expected [a,b]")
            inner = p[1:-1].split(",")
            if len(inner) != 2:
                raise ValueError(f"bad segment syntax at {p!r}: expected two endpoints")
            try:
                a, b = int(inner[0]), int(inner[1])
            except ValueError as err:
                raise ValueError(f"bad integer in segment {p!r}") from err
            segs.append(Segment(a, b))
        return Multisegment(segs)

    def __str__(self):
        return ";".join(str(s) for s in self.segments)

    def __repr__(self):
        return f"Multisegment({self})"

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __eq__(self, other):
        return isinstance(other, Multisegment) and self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    @property
    def total_length(self):
        return sum(s.length for s in self.segments)

    def pairs(self):
        return [(s.a, s.b) for s in self.segments]

    def in_standard_order(self):
        bs = [s.b for s in self.segments]
        return all(bs[i] > bs[i + 1] for i in range(len(bs) - 1))

    def is_ladder(self):
        if not self.in_standard_order():
            return False
        a_s = [s.a for s in self.segments]
        return all(a_s[i] > a_s[i + 1] for i in range(len(a_s) - 1))

    def theta_dual(self) -> "Multisegment":
        """[a,b] -> [-b,-a], re-sorted to the standard order."""
        flipped = sorted(((-s.b, -s.a) for s in self.segments),
                         key=lambda ab: -ab[1])
        return Multisegment(flipped)


def m_profile(m: Multisegment, e: int) -> int:
    """Number of segments covering the integer e."""
    return sum(1 for s in m if s.a <= e <= s.b)


def profile_dict(m: Multisegment) -> dict:
    out = {}
    for s in m:
        for e in range(s.a, s.b + 1):
            out[e] = out.get(e, 0) + 1
    return out


def temp_of(m: Multisegment):
    """The symmetric multisegment {[-b_i, b_i]} with the same m-profile, or None."""
    prof = profile_dict(m)
    bs = []
    e = 0
    while prof.get(e, 0):
        drop = prof.get(e, 0) - prof.get(e + 1, 0)
        if drop < 0:
            return None
        bs.extend([e] * drop)
        e += 1
    bs.sort(reverse=True)
    if not bs or len(set(bs)) != len(bs):
        return None
    cand = Multisegment([(-b, b) for b in bs])
    if profile_dict(cand) != prof:
        return None
    return cand


def is_elliptic_cc(m: Multisegment) -> bool:
    return temp_of(m) is not None


# ---------------------------------------------------------------------------
# Linkage classes and the permutation w(m)
# ---------------------------------------------------------------------------


def linked(s1: Segment, s2: Segment) -> bool:
    return s1.b + 1 == s2.a or s2.b + 1 == s1.a


@dataclass
class LinkageClass:
    segments: tuple  # ordered so that b(e) + 1 = a(e-1): top down
    j_interval: tuple  # (a(f), b(f)) = [a^p, b^1]

    @property
    def a(self):
        return self.j_interval[0]

    @property
    def b(self):
        return self.j_interval[1]


def linkage_classes(m: Multisegment):
    """Equivalence classes of the relation generated by end-to-end linkage."""
    if not m.is_ladder():
        raise ValueError("linkage classes are defined for ladder multisegments")
    segs = list(m.segments)
    n = len(segs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if linked(segs[i], segs[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    classes = []
    for idxs in groups.values():
        members = sorted((segs[i] for i in idxs), key=lambda s: -s.b)
        # within a class consecutive segments chain end-to-end
        for u in range(len(members) - 1):
            if members[u + 1].b + 1 != members[u].a:
                raise AssertionError("linkage class does not chain end-to-end")
        classes.append(LinkageClass(tuple(members),
                                    (members[-1].a, members[0].b)))
    classes.sort(key=lambda f: -f.b)
    return classes


def w_of(m: Multisegment):
    """The permutation w(m) in one-line form (images of 1..n).

    Step 3 of the source algorithm maps the top 'a' of the e-th class in the
    b-ordering to the bottom 'a' of the e-th class in the a-ordering, and
    shifts the remaining 'a's one step up within their own class (the worked
    examples force the within-class reading).
    """
    if not m.is_ladder():
        raise ValueError("w(m) is defined for ladder multisegments")
    classes = linkage_classes(m)
    by_b = sorted(classes, key=lambda f: -f.b)
    by_a = sorted(classes, key=lambda f: f.a)
    g_map = {}
    for e, (fi, fj) in enumerate(zip(by_b, by_a)):
        members = fi.segments  # ordered top (largest b) down
        g_map[members[0].a] = fj.segments[-1].a  # a(j_e, p_{j_e})
        for d in range(1, len(members)):
            g_map[members[d].a] = members[d - 1].a
    a_list = [s.a for s in m.segments]
    if len(set(a_list)) != len(a_list):
        raise AssertionError("ladder guarantees distinct left endpoints")
    if sorted(g_map) != sorted(a_list) or sorted(g_map.values()) != sorted(a_list):
        raise AssertionError("G is not a bijection on the left endpoints")
    pos = {a: i + 1 for i, a in enumerate(a_list)}
    images = [pos[g_map[a]] for a in a_list]
    return tuple(images)


def perm_cycles_str(images) -> str:
    """Canonical cycle string, fixed points omitted: '(1,4,2,3)'."""
    n = len(images)
    seen = [False] * n
    cycles = []
    for i in range(n):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = images[j] - 1
        if len(cyc) > 1:
            cycles.append(cyc)
    if not cycles:
        return "e"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# The partition alpha(m)
# ---------------------------------------------------------------------------


def hooks_of(m: Multisegment):
    """(hk(m, e), ht(m, e)) for e = 1..s, from the two class orderings."""
    classes = linkage_classes(m)
    by_b = sorted(classes, key=lambda f: -f.b)
    by_a = sorted(classes, key=lambda f: f.a)
    bs = [s.b for s in m.segments]
    out = []
    for fi, fj in zip(by_b, by_a):
        hk = fi.b - fj.a + 1
        ht = sum(1 for b in bs if fj.a <= b <= fi.b)
        out.append((hk, ht))
    return out


def alpha_of(m: Multisegment) -> Partition:
    """Partition assembled from the principal hooks (hk, ht), then transposed."""
    if not m.is_ladder() or not is_elliptic_cc(m):
        raise ValueError("alpha(m) needs a ladder with elliptic central character")
    data = hooks_of(m)
    s = len(data)
    rows = []
    col_lengths = []
    for e, (hk, ht) in enumerate(data, start=1):
        t_e = ht + e - 1
        l_e = hk - ht + e
        if l_e < e or t_e < e:
            raise AssertionError("inconsistent hook data")
        rows.append(l_e)
        col_lengths.append(t_e)
    for r in range(s, max(col_lengths, default=0)):
        rows.append(sum(1 for t in col_lengths if t > r))
    rows = [r for r in rows if r > 0]
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise AssertionError("hook data did not assemble into a partition")
    alpha_prime = Partition(rows)
    if alpha_prime.size != m.total_length:
        raise AssertionError("hook partition has the wrong size")
    # consistency: the declared hooks and heights must be reproduced
    for e, (hk, ht) in enumerate(data, start=1):
        if alpha_prime.hook_length(e) != hk:
            raise AssertionError("hook length mismatch")
        if alpha_prime.transpose().parts[e - 1] - e + 1 != ht:
            raise AssertionError("hook height mismatch")
    return alpha_prime.transpose()


def lambda_of(m: Multisegment) -> Partition:
    """Sorted segment lengths."""
    return Partition.sorted_from([s.length for s in m.segments])


# ---------------------------------------------------------------------------
# Resolution terms
# ---------------------------------------------------------------------------


def bgg_terms(m: Multisegment):
    """All n! terms (w, sign, multisegment-or-None): m^w keeps the right
    endpoints and permutes the left ones; a term with a_{w(k)} > b_k + 1 is
    the zero marker, and empty segments (a = b + 1) are dropped."""
    if not m.is_ladder():
        raise ValueError("resolution terms need a ladder multisegment")
    n = len(m.segments)
    a_list = [s.a for s in m.segments]
    b_list = [s.b for s in m.segments]
    out = []
    for w in itertools.permutations(range(n)):
        sign = _perm_sign_images([x + 1 for x in w])
        segs = []
        dead = False
        for k in range(n):
            a_new = a_list[w[k]]
            if a_new > b_list[k] + 1:
                dead = True
                break
            if a_new == b_list[k] + 1:
                continue  # empty segment contributes nothing
            segs.append((a_new, b_list[k]))
        images = tuple(x + 1 for x in w)
        if dead or not segs:
            out.append((images, sign, None))
        else:
            out.append((images, sign, Multisegment(segs)))
    return out


def _perm_sign_images(images):
    inv = 0
    n = len(images)
    for i in range(n):
        for j in range(i + 1, n):
            if images[i] > images[j]:
                inv += 1
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# Ladder Dirac cohomology prediction
# ---------------------------------------------------------------------------


def ladder_hd_prediction(m: Multisegment):
    """Predicted (lambda, block description, k under both epsilon readings,
    total dimension) for the Dirac cohomology of L(m).

    Defined for ladders with elliptic central character and for the symmetric
    multisegments themselves (which are not ladders once nested)."""
    mt = temp_of(m)
    if mt is None or not (m.is_ladder() or m == mt):
        raise ValueError("prediction needs a ladder with elliptic central character")
    lam = lambda_of(mt)
    n_classes = len(lam)
    l = lam.size
    block_single = dp_class(lam) == "DP+"
    block_dim = spin_irrep_dimension(lam) * (1 if block_single else 2)

    two = Scalar.of(2)
    pow_term = sqrt_of(2 ** (n_classes - 1))
    k_readings = {}
    for label, eps_sub in (("eps(n)", Partition((n_classes,))),
                           ("eps(l)", Partition((l,)))):
        denom = epsilon_of(lam) * epsilon_of(eps_sub)
        val = pow_term * denom.inverse()
        if not val.is_rational() or val.rational().denominator != 1:
            k_readings[label] = None
        else:
            k_readings[label] = int(val.rational())
    return {
        "lambda": lam,
        "block": ("single" if block_single else "pair"),
        "block_dim": block_dim,
        "k_readings": k_readings,
        "total_dims": {lab: (None if k is None else k * block_dim)
                       for lab, k in k_readings.items()},
    }


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def enumerate_zl(l: int, window: int):
    """All standard-order multisegments of total length l with endpoints in
    [-window, window]."""
    segs = [(a, b) for a in range(-window, window + 1)
            for b in range(a, window + 1)]
    by_b: dict[int, list] = {}
    for a, b in segs:
        by_b.setdefault(b, []).append((a, b))
    out = []

    def rec(remaining, max_b, acc):
        if remaining == 0:
            out.append(Multisegment(list(acc)))
            return
        for b in range(max_b, -window - 1, -1):
            for (a, bb) in by_b.get(b, []):
                ln = bb - a + 1
                if ln <= remaining:
                    rec(remaining - ln, b - 1, acc + [(a, bb)])

    rec(l, window, [])
    return out


def enumerate_ladders(l: int, window: int):
    return [m for m in enumerate_zl(l, window) if m.is_ladder()]


def enumerate_elliptic_ladders(l: int, window: int):
    return [m for m in enumerate_ladders(l, window) if is_elliptic_cc(m)]


def segment_info(m: Multisegment) -> dict:
    """Everything the segment-level CLI surface reports."""
    prof = profile_dict(m)
    info = {
        "multisegment": str(m),
        "l": m.total_length,
        "profile": {str(e): prof[e] for e in sorted(prof)},
        "standard_order": m.in_standard_order(),
        "ladder": m.is_ladder(),
        "elliptic_cc": is_elliptic_cc(m),
        "lambda": str(lambda_of(m)),
    }
    mt = temp_of(m)
    info["temp"] = str(mt) if mt is not None else None
    if m.is_ladder():
        info["w"] = perm_cycles_str(w_of(m))
        info["J"] = [f"[{f.a},{f.b}]" for f in linkage_classes(m)]
        if mt is not None:
            info["alpha"] = str(alpha_of(m))
            pred = ladder_hd_prediction(m)
            info["hd_prediction"] = {
                "lambda_temp": str(pred["lambda"]),
                "block": pred["block"],
                "block_dim": pred["block_dim"],
                "k": pred["k_readings"],
                "total_dims": pred["total_dims"],
            }
    return info
