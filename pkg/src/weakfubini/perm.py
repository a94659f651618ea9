"""Permutations of [n] in one-line notation.

Positions and values are 1-indexed everywhere a caller can see them.
Composition follows ``(s * t)(i) = s(t(i))``, so multiplying ``p`` on the
right by the simple transposition ``s_i`` swaps the entries of ``p`` in
positions ``i`` and ``i + 1``::

    >>> p = Permutation.parse("451623")
    >>> p * s(6, 1) * s(6, 3) * s(6, 5)
    Permutation('546132')
"""

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations

from .errors import CapExceeded, DuplicateValue, IndexOutOfRange, InvalidPermutation, LengthMismatch

PERMUTATION_ENUMERATION_CAP = 20


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple

    def __post_init__(self):
        values = tuple(self.one_line)
        object.__setattr__(self, "one_line", values)
        n = len(values)
        if n == 0:
            raise InvalidPermutation("a permutation needs at least one entry")
        seen = set()
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidPermutation(f"entry {v!r} is not an integer")
            if not 1 <= v <= n:
                raise InvalidPermutation(f"entry {v} outside 1..{n}")
            if v in seen:
                raise DuplicateValue(f"value {v} appears more than once")
            seen.add(v)

    @classmethod
    def parse(cls, text):
        """Read the text form: digits for n <= 9 ("2314"), else comma separated."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        try:
            if "," in text:
                values = [int(tok) for tok in text.split(",")]
            else:
                values = [int(ch) for ch in text]
        except ValueError as exc:
            raise InvalidPermutation(f"cannot read permutation from {text!r}") from exc
        return cls(tuple(values))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n):
        return cls(tuple(range(n, 0, -1)))

    @property
    def n(self):
        return len(self.one_line)

    def __len__(self):
        return len(self.one_line)

    def __iter__(self):
        return iter(self.one_line)

    def __call__(self, i):
        """Image of ``i`` (1-indexed)."""
        return self.one_line[i - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __str__(self):
        return format_one_line(self.one_line)

    def __repr__(self):
        return f"Permutation('{self}')"

    def is_identity(self):
        return all(v == i for i, v in enumerate(self.one_line, 1))

    def inversions(self):
        """Value pairs ``(a, b)`` with ``a < b`` and ``b`` left of ``a``."""
        w = self.one_line
        return frozenset(
            (w[j], w[i])
            for i in range(len(w))
            for j in range(i + 1, len(w))
            if w[i] > w[j]
        )

    def length(self):
        """Number of inversions, i.e. the rank in the weak order."""
        w = self.one_line
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def format_one_line(values):
    values = tuple(values)
    if len(values) <= 9 and all(0 <= v <= 9 for v in values):
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def from_one_line(values):
    return Permutation(tuple(values))


def simple_transposition(n, i):
    """The adjacent transposition ``s_i = (i, i+1)`` in S_n."""
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} is not defined in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


s = simple_transposition


def inverse(p):
    q = [0] * p.n
    for i, v in enumerate(p.one_line, 1):
        q[v - 1] = i
    return Permutation(tuple(q))


def compose(s, t):
    if s.n != t.n:
        raise LengthMismatch(f"cannot compose permutations of sizes {s.n} and {t.n}")
    a = s.one_line
    return Permutation(tuple(a[v - 1] for v in t.one_line))


def swap_positions(p, i):
    """``p * s_i`` without building ``s_i``."""
    if not 1 <= i <= p.n - 1:
        raise IndexOutOfRange(f"s_{i} is not defined in S_{p.n}")
    w = list(p.one_line)
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(tuple(w))


def ascent_set(p):
    w = p.one_line
    return frozenset(j for j in range(1, len(w)) if w[j - 1] < w[j])


def descent_set(p):
    w = p.one_line
    return frozenset(j for j in range(1, len(w)) if w[j - 1] > w[j])


def maximal_runs(indices):
    """Split a set of integers into maximal runs of consecutive values."""
    runs = []
    for i in sorted(indices):
        if runs and runs[-1][-1] == i - 1:
            runs[-1].append(i)
        else:
            runs.append([i])
    return tuple(tuple(r) for r in runs)


def ascent_blocks(p):
    """Maximal runs of consecutive ascent positions, e.g. 412356 -> ((2, 3, 4, 5),)."""
    return maximal_runs(ascent_set(p))


def all_permutations(n, cap=PERMUTATION_ENUMERATION_CAP):
    """All of S_n in lexicographic order of one-line notation."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded("all_permutations", n, cap)
    for w in _itertools_permutations(range(1, n + 1)):
        yield Permutation(w)


def nonconsecutive_subsets(indices):
    """All subsets of ``indices`` with no two elements differing by one.

    Output is sorted by size, then lexicographically; the empty set comes first.
    """
    items = sorted(indices)
    out = []

    def extend(start, chosen):
        out.append(tuple(chosen))
        for k in range(start, len(items)):
            if chosen and items[k] == chosen[-1] + 1:
                continue
            chosen.append(items[k])
            extend(k + 1, chosen)
            chosen.pop()

    extend(0, [])
    out.sort(key=lambda I: (len(I), I))
    return out


def is_nonconsecutive(indices):
    items = sorted(indices)
    return all(b - a >= 2 for a, b in zip(items, items[1:]))
