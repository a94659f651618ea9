"""Brute-force reference implementations.

Nothing here reuses the production predicates or the algebraic Boolean
interval test.  Tuples are checked against the plain definitions (park the
cars, rank = 1 + number of strictly better competitors) and Boolean
intervals are found by extracting every interval of W(S_n) and testing it
for isomorphism with a subset lattice through atom labels.
"""

import hashlib
import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from math import comb

from . import counting, fubini, parking, weak_order
from . import perm as P
from .errors import CapExceeded

TUPLE_CAP = 7
INTERVAL_CAP = 5

# |UFR_n| for n = 1..7 as tabulated in the source paper
UFR_TABLE = {1: 1, 2: 3, 3: 12, 4: 66, 5: 450, 6: 3690, 7: 35280}


def naive_spots(prefs):
    """Spot taken by each car, or None if some car cannot park."""
    n = len(prefs)
    taken = set()
    spots = []
    for a in prefs:
        free = [x for x in range(a, n + 1) if x not in taken]
        if not free:
            return None
        taken.add(free[0])
        spots.append(free[0])
    return spots


def oracle_parking(prefs):
    return naive_spots(prefs) is not None


def oracle_unit_interval(prefs):
    spots = naive_spots(prefs)
    return spots is not None and all(x - a in (0, 1) for x, a in zip(spots, prefs))


def oracle_fubini(prefs):
    return all(r == 1 + sum(1 for q in prefs if q < r) for r in prefs)


def oracle_unit_fubini(prefs):
    return oracle_fubini(prefs) and oracle_unit_interval(prefs)


PREDICATES = {
    "parking": oracle_parking,
    "unit-interval": oracle_unit_interval,
    "fubini": oracle_fubini,
    "unit-fubini": oracle_unit_fubini,
}


def _tuples_with_head(args):
    n, predicate, head = args
    test = PREDICATES[predicate]
    return [(head,) + rest for rest in product(range(1, n + 1), repeat=n - 1) if test((head,) + rest)]


def brute_tuples(n, predicate, cap=TUPLE_CAP, workers=1):
    """All tuples of [n]^n satisfying a named predicate, lexicographically."""
    if predicate not in PREDICATES:
        raise KeyError(f"unknown predicate {predicate!r}; choose from {sorted(PREDICATES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded("brute_tuples", n, cap)
    jobs = [(n, predicate, head) for head in range(1, n + 1)]
    if workers > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_tuples_with_head, jobs))
    else:
        chunks = map(_tuples_with_head, jobs)
    for chunk in chunks:
        yield from chunk


def _up_covers(w):
    out = []
    for i in range(len(w) - 1):
        if w[i] < w[i + 1]:
            out.append(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
    return out


def weak_order_closure(n):
    """Cover lists and up-sets of W(S_n) on raw tuples."""
    elements = list(permutations(range(1, n + 1)))
    up_cover = {w: _up_covers(w) for w in elements}
    up = {}
    for w in elements:
        seen = {w}
        stack = [w]
        while stack:
            x = stack.pop()
            for y in up_cover[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        up[w] = seen
    return elements, up_cover, up


def boolean_rank(interval, bottom, up_cover):
    """Return k if the poset ``interval`` is isomorphic to the subset lattice
    of a k-set, else None."""
    members = set(interval)
    above = {x: [y for y in up_cover[x] if y in members] for x in members}

    height = {}

    def longest(x):
        if x not in height:
            height[x] = max((1 + longest(y) for y in above[x]), default=0)
        return height[x]

    k = longest(bottom)
    if len(members) != 2 ** k:
        return None

    under = {x: [] for x in members}
    for x in members:
        for y in above[x]:
            under[y].append(x)
    level = {}

    def depth(x):
        if x not in level:
            level[x] = max((1 + depth(y) for y in under[x]), default=0)
        return level[x]

    for x in members:
        depth(x)
    # ranked: every maximal chain has length k
    for x in members:
        if level[x] + longest(x) != k:
            return None
    sizes = Counter(level.values())
    if any(sizes[j] != comb(k, j) for j in range(k + 1)):
        return None

    below = {}
    for x in sorted(members, key=lambda m: level[m]):
        below.setdefault(x, {x})
        for y in above[x]:
            below.setdefault(y, {y}).update(below[x])

    atoms = frozenset(above[bottom])
    if len(atoms) != k:
        return None
    label = {x: frozenset(a for a in atoms if a in below[x]) for x in members}
    if len(set(label.values())) != 2 ** k:
        return None
    for x in members:
        for y in members:
            if (x in below[y]) != (label[x] <= label[y]):
                return None
    return k


def brute_boolean_intervals(n, cap=INTERVAL_CAP):
    """Every Boolean interval of W(S_n) as (min, max, rank), sorted by (min, max)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise CapExceeded("brute_boolean_intervals", n, cap)
    elements, up_cover, up = weak_order_closure(n)
    down = {w: set() for w in elements}
    for v in elements:
        for w in up[v]:
            down[w].add(v)
    for v in elements:
        for w in sorted(up[v]):
            k = boolean_rank(up[v] & down[w], v, up_cover)
            if k is not None:
                yield P.Permutation(v), P.Permutation(w), k


def digest(items):
    """Short stable fingerprint of a collection of items."""
    text = "\n".join(sorted(repr(x) for x in items))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    elapsed: float = 0.0

    @property
    def passed(self):
        return self.expected == self.actual


@dataclass
class VerificationReport:
    n: int
    checks: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def to_dicts(self):
        return [
            {
                "n": self.n,
                "check": c.name,
                "expected": str(c.expected),
                "actual": str(c.actual),
                "pass": c.passed,
                "elapsed": round(c.elapsed, 4),
            }
            for c in self.checks
        ]

    def to_json(self):
        return json.dumps(
            {"n": self.n, "all_pass": self.all_passed, "checks": self.to_dicts(), "skipped": self.skipped},
            indent=2,
        )

    def to_table(self, timings=True):
        header = ("check", "expected", "actual", "status", "seconds")
        rows = [header if timings else header[:4]]
        for c in self.checks:
            row = (c.name, str(c.expected), str(c.actual), "PASS" if c.passed else "FAIL")
            rows.append(row + (f"{c.elapsed:.3f}",) if timings else row)
        widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        for name in self.skipped:
            lines.append(f"{name}  skipped (n={self.n} above interval cap)")
        lines.append(f"n={self.n}: {'ALL PASS' if self.all_passed else 'FAILURES'}")
        return "\n".join(lines)


class _Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def verify_suite(n, tuple_cap=TUPLE_CAP, interval_cap=INTERVAL_CAP, workers=1):
    """Cross-check production code against brute force for one n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > tuple_cap:
        raise CapExceeded("verify_suite", n, tuple_cap)
    report = VerificationReport(n)

    def add(name, expected, actual, timer):
        report.checks.append(Check(name, expected, actual, timer.elapsed))

    with _Timer() as t:
        pf = list(brute_tuples(n, "parking", cap=tuple_cap, workers=workers))
        pf_set = set(pf)
        upf = [a for a in pf if oracle_unit_interval(a)]
        fr = [a for a in pf if oracle_fubini(a)]
        ufr = [a for a in upf if oracle_fubini(a)]
        ufr_set = set(ufr)
    add("parking count = (n+1)^(n-1)", (n + 1) ** (n - 1), len(pf), t)

    with _Timer() as t:
        prod_pf = {a for a in product(range(1, n + 1), repeat=n) if parking.is_parking_function(a)}
    add("is_parking_function agrees with simulation", digest(pf_set), digest(prod_pf), t)

    with _Timer() as t:
        expected = counting.fubini_number(n)
    add("unit interval PF count = Fubini number", expected, len(upf), t)
    add("Fubini ranking count = Fubini number", expected, len(fr), t)

    with _Timer() as t:
        expected = counting.f_total(n)
    add("unit Fubini count = f(n)", expected, len(ufr), t)
    if n in UFR_TABLE:
        add("unit Fubini count = tabulated value", UFR_TABLE[n], len(ufr), t)

    with _Timer() as t:
        prod_ufr = {a for a in pf if fubini.is_unit_fubini(a)}
    add("is_unit_fubini agrees with FR and UPF", digest(ufr_set), digest(prod_ufr), t)

    with _Timer() as t:
        increasing = sum(1 for a in ufr if list(a) == sorted(a))
    add("weakly increasing unit Fubini count = F(n+1)", counting.fibonacci(n + 1), increasing, t)

    with _Timer() as t:
        fibers = {}
        wrong_outcome = 0
        wrong_size = 0
        for p in P.all_permutations(n):
            fib = fubini.fiber(p)
            fibers[p] = fib
            wrong_outcome += sum(1 for a in fib if parking.park(a).outcome != p)
            wrong_size += len(fib) != counting.fiber_count(p)
        union = [a for fib in fibers.values() for a in fib]
    add("fiber elements park to their permutation (failures)", 0, wrong_outcome, t)
    add("fiber sizes = product of Fibonacci numbers (mismatches)", 0, wrong_size, t)
    add("fibers are disjoint (repeats)", 0, len(union) - len(set(union)), t)
    add("fibers cover all unit Fubini rankings", digest(ufr_set), digest(set(union)), t)
    add("sum of fiber counts = f(n)", counting.f_total(n), sum(counting.fiber_count(p) for p in fibers), t)

    with _Timer() as t:
        production = {(b.min, b.max, b.rank) for b in weak_order.enumerate_boolean_intervals(n, cap=max(n, 1))}
        images = {}
        stat_bad = 0
        roundtrip_bad = 0
        for a in ufr:
            b = fubini.phi(a)
            images[a] = (b.min, b.max, b.rank)
            stat_bad += len(set(a)) != n - b.rank
            roundtrip_bad += fubini.phi_inverse(b) != a
    add("phi is injective (collisions)", 0, len(ufr) - len(set(images.values())), t)
    add("phi image = all Boolean intervals", digest(production), digest(set(images.values())), t)
    add("phi maps n-k distinct ranks to rank k (mismatches)", 0, stat_bad, t)
    add("phi_inverse after phi is identity (mismatches)", 0, roundtrip_bad, t)

    if n <= interval_cap:
        with _Timer() as t:
            brute = set(brute_boolean_intervals(n, cap=interval_cap))
        add("brute Boolean intervals = enumerated intervals", digest(brute), digest(production), t)
        add("brute Boolean intervals = phi image", digest(brute), digest(set(images.values())), t)
        by_rank = Counter(k for _, _, k in brute)
        for k in range(n // 2 + 1):
            add(f"brute rank-{k} intervals = f(n,{k})", counting.f_closed(n, k), by_rank[k], t)
    else:
        report.skipped.append("Boolean interval oracle")
    return report
