"""Fubini rankings, unit Fubini rankings, the delta operators and the map to
Boolean intervals.

A unit Fubini ranking is a ranking of ``n`` competitors with ties in which
no rank is shared by more than two competitors.  Parking such a tuple
yields a permutation ``p``, and the values occurring twice are a
nonconsecutive subset ``I`` of Asc(p); ``phi`` sends the tuple to the
Boolean interval ``[p, p * prod_{i in I} s_i]``.
"""

from collections import Counter

from . import perm as P
from .errors import ConsecutiveIndices, IndexOutOfRange, NotUnitFubini
from .parking import as_prefs, format_prefs, park
from .weak_order import BooleanInterval


def is_fubini_ranking(prefs):
    """Every rank ``v`` held by ``t`` competitors sits at sorted positions v..v+t-1."""
    prefs = as_prefs(prefs)
    srt = sorted(prefs)
    return srt[0] == 1 and all(
        srt[i] == srt[i - 1] or srt[i] == i + 1 for i in range(1, len(srt))
    )


def unit_lower_bounds(sorted_prefs):
    """Lower bounds ``c_i`` for the sorted entries of a unit Fubini ranking."""
    c = [1]
    for i in range(2, len(sorted_prefs) + 1):
        c.append(i if sorted_prefs[i - 2] == i - 2 else i - 1)
    return c


def is_unit_fubini(prefs):
    prefs = as_prefs(prefs)
    srt = sorted(prefs)
    lower = unit_lower_bounds(srt)
    return all(c <= a <= i for i, (c, a) in enumerate(zip(lower, srt), 1))


def _require_unit_fubini(prefs):
    prefs = as_prefs(prefs)
    if not is_unit_fubini(prefs):
        raise NotUnitFubini(f"{format_prefs(prefs)} is not a unit Fubini ranking")
    return prefs


def weakly_increasing_unit_fubini(n):
    """Sorted unit Fubini rankings of length n, lexicographically.

    Grown one entry at a time inside the bounds ``c_i <= a_i <= i``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []

    def grow(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        low = 1 if i == 1 else (i if prefix[-1] == i - 2 else i - 1)
        for a in range(max(low, prefix[-1] if prefix else 1), i + 1):
            prefix.append(a)
            grow(prefix)
            prefix.pop()

    grow([])
    return out


def distinct_ranks(prefs):
    return len(set(_require_unit_fubini(prefs)))


def tied_ranks(prefs):
    """Values occurring exactly twice, sorted."""
    return tuple(sorted(v for v, t in Counter(prefs).items() if t == 2))


def delta(prefs, i):
    """Merge the singleton ranks ``i`` and ``i + 1`` into a tie at ``i``.

    Leaves the tuple alone when any of ``i - 1``, ``i``, ``i + 1`` is
    already tied.
    """
    prefs = _require_unit_fubini(prefs)
    n = len(prefs)
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"delta_{i} is not defined for length {n}")
    counts = Counter(prefs)
    if counts[i - 1] == 2 or counts[i] == 2 or counts[i + 1] == 2:
        return prefs
    # rank i + 1 can only be missing when rank i is tied, so it occurs once here
    return tuple(i if a == i + 1 else a for a in prefs)


def delta_set(p, I):
    """Apply delta over ``I`` to the one-line tuple of ``p``, largest index first."""
    I = sorted(I)
    if not P.is_nonconsecutive(I):
        raise ConsecutiveIndices(f"index set {tuple(I)} has consecutive entries")
    alpha = tuple(p.one_line) if isinstance(p, P.Permutation) else as_prefs(p)
    for i in reversed(I):
        alpha = delta(alpha, i)
    return alpha


def fiber(p):
    """All unit Fubini rankings whose parking outcome is ``p``.

    One tuple per nonconsecutive ``I`` inside Asc(p), ordered by (|I|, I).
    """
    alpha = P.inverse(p)
    return [delta_set(alpha, I) for I in P.nonconsecutive_subsets(P.ascent_set(p))]


def phi(prefs):
    prefs = _require_unit_fubini(prefs)
    result = park(prefs)
    I = tied_ranks(prefs)
    assert P.is_nonconsecutive(I), f"tied ranks {I} are consecutive"
    return BooleanInterval(result.outcome, I)


def phi_inverse(interval):
    return delta_set(P.inverse(interval.min), interval.index_set)


def interval_record(prefs):
    """JSON-ready description of ``phi(prefs)`` together with the tuple itself."""
    record = phi(prefs).to_dict()
    record["ufr"] = list(prefs)
    return record
