"""Partition combinatorics: transpose, dominance, strict partitions, hooks."""

from __future__ import annotations

from functools import lru_cache


class Partition:
    """Weakly decreasing positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        ps = tuple(int(p) for p in parts)
        if any(p <= 0 for p in ps):
            raise ValueError("parts must be positive")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError("parts must decrease weakly")
        self.parts = ps

    @staticmethod
    def sorted_from(values):
        return Partition(sorted((int(v) for v in values), reverse=True))

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == other
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [sum(1 for p in self.parts if p > j) for j in range(self.parts[0])]
        return Partition(cols)

    def dominates(self, other: "Partition") -> bool:
        """Dominance order on partitions of the same size."""
        if self.size != other.size:
            raise ValueError("dominance compares partitions of equal size")
        acc_a = acc_b = 0
        for k in range(max(len(self), len(other))):
            acc_a += self.parts[k] if k < len(self.parts) else 0
            acc_b += other.parts[k] if k < len(other.parts) else 0
            if acc_a < acc_b:
                return False
        return True

    def has_distinct_parts(self):
        return len(set(self.parts)) == len(self.parts)

    def hook_length(self, e):
        """Length of the e-th principal hook (1-based): row + column - 2e + 1."""
        t = self.transpose()
        if e < 1 or e > len(self.parts) or e > len(t.parts):
            raise ValueError("hook index out of range")
        return self.parts[e - 1] + t.parts[e - 1] - 2 * e + 1

    def is_hook(self):
        return len(self.parts) == 1 or all(p == 1 for p in self.parts[1:])


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order."""
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(Partition(acc))
            return
        for p in range(min(rem, maxpart), 0, -1):
            rec(rem - p, p, acc + (p,))

    rec(n, n, ())
    return tuple(out)


def strict_partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(n) if p.has_distinct_parts())


def dp_class(lam: Partition) -> str:
    """'DP+' when size - length is even, 'DP-' when odd (distinct parts required)."""
    if not lam.has_distinct_parts():
        raise ValueError("dp_class needs distinct parts")
    return "DP+" if (lam.size - len(lam)) % 2 == 0 else "DP-"


def distinct_odd_partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in strict_partitions_of(n) if all(x % 2 == 1 for x in p))
