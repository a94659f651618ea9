"""Parking preference tuples: simulation, predicates and block structure.

A preference tuple ``(a_1, ..., a_n)`` lists the preferred spot of each car.
Cars arrive in order 1..n and take the first free spot at or after their
preference on a one-way street with ``n`` spots.
"""

from dataclasses import dataclass

from .errors import InvalidTuple, NotUnitIntervalPF
from .perm import Permutation


def as_prefs(values):
    """Validate ``values`` as an element of [n]^n and return it as a tuple."""
    prefs = tuple(values)
    n = len(prefs)
    if n == 0:
        raise InvalidTuple("empty preference tuple")
    for a in prefs:
        if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= n:
            raise InvalidTuple(f"entry {a!r} outside 1..{n}")
    return prefs


def parse_prefs(text):
    """Read ``"1,6,4,4,3,3,2"`` or ``"(1,6,4,4,3,3,2)"``."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidTuple(f"cannot read preference tuple from {text!r}") from exc
    return as_prefs(values)


def format_prefs(prefs):
    return "(" + ",".join(str(a) for a in prefs) + ")"


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the parking process.

    On success ``outcome`` is the permutation whose ``j``-th entry is the car
    parked in spot ``j`` and ``spots[i-1]`` is the spot taken by car ``i``.
    On failure ``failed_car`` is the first car that found no free spot and
    ``occupancy`` records which car held each spot at that moment (0 = empty).
    """

    prefs: tuple
    outcome: Permutation = None
    spots: tuple = None
    failed_car: int = None
    occupancy: tuple = None

    @property
    def ok(self):
        return self.outcome is not None

    def displacements(self):
        if not self.ok:
            return None
        return tuple(spot - a for spot, a in zip(self.spots, self.prefs))

    def describe(self):
        if self.ok:
            return f"outcome {self.outcome}"
        car = self.failed_car
        a = self.prefs[car - 1]
        n = len(self.prefs)
        return (
            f"car {car} cannot park: it prefers spot {a} and spots {a}..{n} "
            f"are held by cars {','.join(str(c) for c in self.occupancy[a - 1:])}"
        )


def park(prefs):
    prefs = as_prefs(prefs)
    n = len(prefs)
    occupant = [0] * (n + 1)
    spots = []
    for car, a in enumerate(prefs, 1):
        spot = a
        while spot <= n and occupant[spot]:
            spot += 1
        if spot > n:
            return ParkingOutcome(prefs, failed_car=car, occupancy=tuple(occupant[1:]))
        occupant[spot] = car
        spots.append(spot)
    return ParkingOutcome(prefs, outcome=Permutation(tuple(occupant[1:])), spots=tuple(spots))


def weakly_increasing_rearrangement(prefs):
    return tuple(sorted(prefs))


def is_parking_function(prefs):
    prefs = as_prefs(prefs)
    return all(a <= i for i, a in enumerate(sorted(prefs), 1))


def is_unit_interval_pf(prefs):
    result = park(prefs)
    return result.ok and all(d <= 1 for d in result.displacements())


def block_structure(prefs):
    """Cut the sorted tuple at every index ``i`` whose sorted entry equals ``i``.

    >>> block_structure((3, 5, 5, 1, 1, 3))
    ((1, 1), (3, 3), (5, 5))
    """
    if not is_unit_interval_pf(prefs):
        raise NotUnitIntervalPF(f"{format_prefs(prefs)} is not a unit interval parking function")
    srt = sorted(prefs)
    blocks = []
    for i, a in enumerate(srt, 1):
        if a == i:
            blocks.append([a])
        else:
            blocks[-1].append(a)
    return tuple(tuple(b) for b in blocks)


def block_has_unit_shape(block):
    """True if ``block`` is ``(i)``, ``(i, i)`` or ``(i, i, i+1, ..., i+len-2)``."""
    i = block[0]
    if len(block) == 1:
        return True
    return block[1] == i and all(b == i + k for k, b in enumerate(block[2:], 1))
