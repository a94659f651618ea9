"""Command-line front end.

Exit status: 0 success, 1 verification failure or oracle mismatch,
2 usage error, 3 enumeration cap exceeded.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import counting, fubini, oracle, parking, weak_order
from . import perm as P
from .errors import CapExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("table", "json", "csv")


def _default_cap():
    return int(os.environ.get("WEAKFUBINI_CAP", "8"))


@dataclass
class CliConfig:
    output_format: str = "table"
    enumeration_cap: int = field(default_factory=_default_cap)
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)
    force: bool = False

    def check_cap(self, what, n, cap=None):
        cap = self.enumeration_cap if cap is None else cap
        if n > cap and not self.force:
            raise CapExceeded(what, n, cap)

    def raised(self, cap, n):
        """A library cap, lifted to ``n`` when --force is given."""
        return max(cap, n) if self.force else cap


class UsageError(Exception):
    pass


def _emit(out, cfg, header, rows, records=None):
    """Write rows as an aligned table, CSV with header, or JSON lines."""
    if cfg.output_format == "json":
        for rec in records if records is not None else (dict(zip(header, r)) for r in rows):
            out.write(json.dumps(rec) + "\n")
    elif cfg.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        table = [list(map(str, header))] + [list(map(str, r)) for r in rows]
        widths = [max(len(r[j]) for r in table) for j in range(len(header))]
        for r in table:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _index_text(I):
    return "{" + ",".join(str(i) for i in I) + "}"


def _tuple_text(a):
    return P.format_one_line(a)


# count ---------------------------------------------------------------------

def _oracle_count(cfg, n, rank):
    interval_cap = cfg.raised(oracle.INTERVAL_CAP, n) if rank is not None else 0
    if rank is not None and n <= interval_cap:
        return sum(1 for _, _, k in oracle.brute_boolean_intervals(n, cap=interval_cap) if k == rank)
    tuple_cap = cfg.raised(oracle.TUPLE_CAP, n)
    ufr = oracle.brute_tuples(n, "unit-fubini", cap=tuple_cap, workers=cfg.workers)
    if rank is None:
        return sum(1 for _ in ufr)
    return sum(1 for a in ufr if len(set(a)) == n - rank)


def cmd_count(args, cfg, out):
    n, rank = args.n, args.rank
    if n < 0 or (rank is not None and rank < 0):
        raise UsageError("--n and --rank must be nonnegative")
    value = counting.f_total(n) if rank is None else counting.f_closed(n, rank)
    record = {"n": n, "rank": rank, "count": str(value)}
    status = EXIT_OK
    if args.brute:
        if n < 1:
            raise UsageError("--brute needs --n >= 1")
        found = _oracle_count(cfg, n, rank)
        record.update(oracle=str(found), match=found == value)
        status = EXIT_OK if found == value else EXIT_FAIL
    if cfg.output_format == "table":
        if args.brute:
            out.write(f"{value} / {record['oracle']} / {'MATCH' if record['match'] else 'MISMATCH'}\n")
        else:
            out.write(f"{value}\n")
    else:
        header = list(record)
        _emit(out, cfg, header, [["" if v is None else v for v in record.values()]], [record])
    return status


# fiber ---------------------------------------------------------------------

def cmd_fiber(args, cfg, out):
    p = P.Permutation.parse(args.pi)
    blocks = P.ascent_blocks(p)
    factors = [counting.fibonacci(len(b) + 2) for b in blocks]
    count = counting.fiber_count(p)
    tuples = fubini.fiber(p)
    if cfg.output_format == "json":
        out.write(json.dumps({
            "pi": str(p),
            "count": str(count),
            "ascent_blocks": [list(b) for b in blocks],
            "factors": [str(f) for f in factors],
        }) + "\n")
        for a in tuples:
            out.write(json.dumps(fubini.interval_record(a)) + "\n")
        return EXIT_OK
    rows = []
    for a in tuples:
        b = fubini.phi(a)
        rows.append([_tuple_text(a), str(b.min), str(b.max), b.rank, _index_text(b.index_set)])
    if cfg.output_format == "table":
        out.write(f"pi {p}\n")
        if blocks:
            parts = [f"{_index_text(b)} -> F{len(b) + 2} = {f}" for b, f in zip(blocks, factors)]
            out.write("ascent blocks " + "; ".join(parts) + "\n")
        else:
            out.write("ascent blocks none\n")
        out.write(f"count {count}\n")
    _emit(out, cfg, ["ufr", "min", "max", "rank", "I"], rows)
    return EXIT_OK


# park ----------------------------------------------------------------------

def cmd_park(args, cfg, out):
    prefs = parking.parse_prefs(args.pref)
    result = parking.park(prefs)
    record = {"pref": list(prefs)}
    if result.ok:
        record["outcome"] = str(result.outcome)
    else:
        record["failed_car"] = result.failed_car
        record["occupancy"] = list(result.occupancy)
    if args.classify:
        ufr = fubini.is_unit_fubini(prefs)
        record.update(
            parking_function=parking.is_parking_function(prefs),
            unit_interval=parking.is_unit_interval_pf(prefs),
            fubini_ranking=fubini.is_fubini_ranking(prefs),
            unit_fubini=ufr,
            distinct_ranks=fubini.distinct_ranks(prefs) if ufr else None,
        )
    if cfg.output_format == "table":
        out.write(result.describe() + "\n")
        if args.classify:
            yes = {True: "yes", False: "no"}
            out.write(f"parking function      {yes[record['parking_function']]}\n")
            out.write(f"unit interval PF      {yes[record['unit_interval']]}\n")
            out.write(f"Fubini ranking        {yes[record['fubini_ranking']]}\n")
            out.write(f"unit Fubini ranking   {yes[record['unit_fubini']]}\n")
            if record["distinct_ranks"] is not None:
                out.write(f"distinct ranks        {record['distinct_ranks']}\n")
    else:
        flat = {k: (_tuple_text(v) if isinstance(v, list) else v) for k, v in record.items()}
        _emit(out, cfg, list(flat), [["" if v is None else v for v in flat.values()]], [record])
    return EXIT_OK


# verify --------------------------------------------------------------------

def cmd_verify(args, cfg, out):
    n = args.n
    cfg.check_cap("verify", n)
    report = oracle.verify_suite(
        n,
        tuple_cap=cfg.raised(oracle.TUPLE_CAP, n),
        interval_cap=oracle.INTERVAL_CAP,
        workers=cfg.workers,
    )
    if cfg.output_format == "table":
        out.write(report.to_table(timings=args.timings) + "\n")
    else:
        dicts = report.to_dicts()
        if not args.timings:
            for d in dicts:
                d.pop("elapsed")
        header = list(dicts[0]) if dicts else ["n", "check"]
        _emit(out, cfg, header, [list(d.values()) for d in dicts], dicts)
    return EXIT_OK if report.all_passed else EXIT_FAIL


# dot -----------------------------------------------------------------------

def cmd_dot(args, cfg, out):
    n = args.n
    cfg.check_cap("dot", n, weak_order.DOT_CAP)
    highlight = None
    if args.highlight_I is not None and args.highlight_min is None:
        raise UsageError("--highlight-I needs --highlight-min")
    if args.highlight_min is not None:
        p = P.Permutation.parse(args.highlight_min)
        if p.n != n:
            raise UsageError(f"--highlight-min has length {p.n}, expected {n}")
        I = _parse_index_list(args.highlight_I)
        highlight = weak_order.BooleanInterval(p, I)
    out.write(weak_order.hasse_dot(n, highlight, cap=cfg.raised(weak_order.DOT_CAP, n)))
    return EXIT_OK


def _parse_index_list(text):
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot read index list {text!r}") from exc


# enumerate -----------------------------------------------------------------

def _fibers_with_head(args):
    n, head = args
    found = []
    for p in P.all_permutations(n):
        if p.one_line[0] == head:
            found.extend(fubini.fiber(p))
    return found


def all_unit_fubini(n, workers=1):
    """UFR_n built as the union of fibers over S_n, sorted lexicographically."""
    jobs = [(n, head) for head in range(1, n + 1)]
    if workers > 1 and n >= 7:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_fibers_with_head, jobs))
    else:
        chunks = [_fibers_with_head(j) for j in jobs]
    return sorted(a for chunk in chunks for a in chunk)


def cmd_enumerate(args, cfg, out):
    n = args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    cfg.check_cap("enumerate", n)
    d, k = args.distinct_ranks, args.rank
    if d is not None and k is not None and d != n - k:
        raise UsageError(f"--distinct-ranks {d} and --rank {k} disagree for n={n}")
    if k is None and d is not None:
        k = n - d

    if args.what == "intervals":
        # the cap was enforced above
        intervals = list(weak_order.enumerate_boolean_intervals(n, rank=k, cap=n))
        rows = [[str(b.min), str(b.max), b.rank, _index_text(b.index_set)] for b in intervals]
        records = []
        if cfg.output_format == "json":
            for b in intervals:
                rec = b.to_dict()
                rec["ufr"] = list(fubini.phi_inverse(b))
                records.append(rec)
        header = ["min", "max", "rank", "I"]
        expected = counting.f_total(n) if k is None else counting.f_closed(n, k)
    else:
        if args.what == "ufr":
            tuples = all_unit_fubini(n, cfg.workers)
            expected = counting.f_total(n) if k is None else counting.f_closed(n, k)
        else:
            tuples = fubini.weakly_increasing_unit_fubini(n)
            expected = counting.weakly_increasing_ufr_count(n) if k is None else None
        if k is not None:
            tuples = [a for a in tuples if len(set(a)) == n - k]
        rows = [[parking.format_prefs(a)] for a in tuples]
        records = [fubini.interval_record(a) for a in tuples] if cfg.output_format == "json" else None
        header = ["ufr"]

    total = len(rows)
    if expected is not None:
        assert total == expected, f"enumerated {total} items, formula gives {expected}"
    if cfg.output_format == "table":
        if header == ["ufr"]:
            for r in rows:
                out.write(r[0] + "\n")
        else:
            _emit(out, cfg, header, rows)
        out.write(f"total {total}\n")
    elif cfg.output_format == "csv":
        _emit(out, cfg, header, rows)
        out.write(f"total,{total}\n")
    else:
        _emit(out, cfg, header, rows, records)
        out.write(json.dumps({"total": str(total)}) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="output format (default: table)")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help="enumeration cap (default: $WEAKFUBINI_CAP or 8)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        help="worker processes for large enumerations")
    common.add_argument("--force", action="store_true", default=argparse.SUPPRESS,
                        help="lift enumeration caps to the requested n")

    parser = argparse.ArgumentParser(
        prog="weakfubini",
        description="Boolean intervals of the weak order on S_n and unit Fubini rankings.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="closed-form and recursive counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--brute", action="store_true", help="also count by brute force")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fiber", parents=[common], help="unit Fubini rankings parking to a permutation")
    p.add_argument("--pi", required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("park", parents=[common], help="run the parking process")
    p.add_argument("--pref", required=True)
    p.add_argument("--classify", action="store_true")
    p.set_defaults(func=cmd_park)

    p = sub.add_parser("verify", parents=[common], help="cross-check against brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--timings", action="store_true", help="report seconds per check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", parents=[common], help="Hasse diagram of W(S_n) in DOT")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--highlight-min", dest="highlight_min")
    p.add_argument("--highlight-I", dest="highlight_I")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("enumerate", parents=[common], help="list unit Fubini rankings or intervals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--what", choices=("ufr", "intervals", "ufr-weakly-increasing"), required=True)
    p.add_argument("--distinct-ranks", dest="distinct_ranks", type=int)
    p.add_argument("--rank", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    cfg = CliConfig()
    if "format" in args:
        cfg.output_format = args.format
    if "cap" in args:
        cfg.enumeration_cap = args.cap
    if "workers" in args:
        cfg.workers = max(1, args.workers)
    if "force" in args:
        cfg.force = args.force
    try:
        return args.func(args, cfg, out)
    except CapExceeded as exc:
        print(f"error: CapExceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
