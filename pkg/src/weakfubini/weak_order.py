"""The right weak order on S_n and its Boolean intervals.

A cover ``p < p * s_i`` exists exactly when ``i`` is an ascent of ``p``.
Boolean intervals are recognised algebraically: ``[v, w]`` is Boolean iff
``v^-1 w`` is a product of pairwise commuting simple transpositions.  The
poset-isomorphism version of that test lives in :mod:`weakfubini.oracle`.
"""

import os
from collections import deque
from dataclasses import dataclass

from . import perm as P
from .errors import CapExceeded, InvalidInterval, LengthMismatch, NotComparable

DEFAULT_LATTICE_CAP = int(os.environ.get("WEAKFUBINI_CAP", "8"))
DOT_CAP = 6


@dataclass(frozen=True)
class BooleanInterval:
    """``[min, min * prod_{i in I} s_i]`` for a nonconsecutive ``I`` inside Asc(min)."""

    min: P.Permutation
    index_set: tuple = ()

    def __post_init__(self):
        I = tuple(sorted(self.index_set))
        object.__setattr__(self, "index_set", I)
        n = self.min.n
        if any(not 1 <= i <= n - 1 for i in I):
            raise InvalidInterval(f"index set {I} not inside [1, {n - 1}]")
        if not P.is_nonconsecutive(I):
            raise InvalidInterval(f"index set {I} has consecutive entries")
        if not set(I) <= P.ascent_set(self.min):
            raise InvalidInterval(f"index set {I} is not inside Asc({self.min})")

    @property
    def max(self):
        w = list(self.min.one_line)
        for i in self.index_set:
            w[i - 1], w[i] = w[i], w[i - 1]
        return P.Permutation(tuple(w))

    @property
    def rank(self):
        return len(self.index_set)

    @property
    def size(self):
        return 2 ** len(self.index_set)

    def sort_key(self):
        return (self.min.one_line, len(self.index_set), self.index_set)

    def to_dict(self):
        return {
            "min": str(self.min),
            "max": str(self.max),
            "index_set": list(self.index_set),
            "rank": self.rank,
        }

    def __str__(self):
        return f"[{self.min}, {self.max}]"


def covers(p):
    """Elements covering ``p``, sorted lexicographically."""
    return sorted(P.swap_positions(p, i) for i in P.ascent_set(p))


def covered_by(p):
    """Elements covered by ``p``."""
    return sorted(P.swap_positions(p, i) for i in P.descent_set(p))


def _reach(start, step, bound):
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in step(x):
            if y not in seen and bound(y):
                seen.add(y)
                queue.append(y)
    return seen


def up_set(v, max_length=None):
    """Everything reachable from ``v`` by cover steps, optionally bounded in length."""
    if max_length is None:
        return _reach(v, covers, lambda y: True)
    return _reach(v, covers, lambda y: y.length() <= max_length)


def down_set(w, min_length=None):
    if min_length is None:
        return _reach(w, covered_by, lambda y: True)
    return _reach(w, covered_by, lambda y: y.length() >= min_length)


def less_equal(v, w):
    """``v <= w`` by breadth-first reachability over covers."""
    if v.n != w.n:
        raise LengthMismatch(f"sizes {v.n} and {w.n} differ")
    lw = w.length()
    if v.length() > lw:
        return False
    return w in up_set(v, max_length=lw)


def less_equal_fast(v, w):
    """``v <= w`` via containment of inversion sets (value pairs)."""
    if v.n != w.n:
        raise LengthMismatch(f"sizes {v.n} and {w.n} differ")
    return v.inversions() <= w.inversions()


def interval_elements(v, w):
    if v.n != w.n:
        raise LengthMismatch(f"sizes {v.n} and {w.n} differ")
    lv, lw = v.length(), w.length()
    up = up_set(v, max_length=lw)
    if w not in up:
        raise NotComparable(f"{v} is not below {w}")
    return up & down_set(w, min_length=lv)


def as_boolean_interval(v, w):
    """Return the Boolean interval ``[v, w]`` or ``None`` if it is not one."""
    if v.n != w.n:
        raise LengthMismatch(f"sizes {v.n} and {w.n} differ")
    u = P.compose(P.inverse(v), w).one_line
    n = len(u)
    I = [i for i in range(1, n) if u[i - 1] == i + 1]
    if not P.is_nonconsecutive(I):
        return None
    expected = list(range(1, n + 1))
    for i in I:
        expected[i - 1], expected[i] = expected[i], expected[i - 1]
    if tuple(expected) != u:
        return None
    if not set(I) <= P.ascent_set(v):
        return None
    return BooleanInterval(v, tuple(I))


def boolean_intervals_with_min(p):
    """All Boolean intervals with minimal element ``p``, sorted by (|I|, I)."""
    return [BooleanInterval(p, I) for I in P.nonconsecutive_subsets(P.ascent_set(p))]


def _check_cap(what, n, cap):
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded(what, n, cap)


def enumerate_boolean_intervals(n, rank=None, cap=None):
    """Stream every Boolean interval of W(S_n), by minimal element then (|I|, I)."""
    _check_cap("enumerate_boolean_intervals", n, DEFAULT_LATTICE_CAP if cap is None else cap)
    for p in P.all_permutations(n):
        for b in boolean_intervals_with_min(p):
            if rank is None or b.rank == rank:
                yield b


def hasse_dot(n, highlight=None, cap=DOT_CAP):
    """DOT source for the Hasse diagram of W(S_n), edges drawn bottom to top."""
    _check_cap("hasse_dot", n, cap)
    if highlight is not None:
        if not isinstance(highlight, BooleanInterval) or highlight.min.n != n:
            raise InvalidInterval(f"highlight is not a Boolean interval of W(S_{n})")
        marked = interval_elements(highlight.min, highlight.max)
    else:
        marked = set()

    perms = sorted(P.all_permutations(n), key=lambda p: (p.length(), p.one_line))
    lines = [f"digraph weak_order_S{n} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_length = {}
    for p in perms:
        by_length.setdefault(p.length(), []).append(p)
    for length in sorted(by_length):
        ids = " ".join(f'"{p}";' for p in by_length[length])
        lines.append(f"  {{ rank=same; {ids} }}")
    for p in perms:
        if p in marked:
            lines.append(f'  "{p}" [color=red, fontcolor=red, penwidth=2];')
    for p in perms:
        for q in covers(p):
            attr = " [color=red, penwidth=2]" if p in marked and q in marked else ""
            lines.append(f'  "{p}" -> "{q}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
