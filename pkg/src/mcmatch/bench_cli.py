"""Benchmark driver: builds instances, runs the engines, verifies every
result and emits CSV with deterministic seeds and portable operation
counters.

One row is emitted per (algorithm, repetition) plus a mean row per algorithm
(seed column -1).  Rows only reach the output after check_matching and
check_osc both passed; a failure aborts with exit code 2 and the failing
seed.  The wall_ms column is informational only -- everything else is
byte-identical for identical flags.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass, fields

from . import gabow, single_path
from .graph_core import (StaticGraph, generate_random, generate_worst_case,
                         permute_representation, read_edge_list)
from .verify import check_matching, check_osc

ALGORITHMS = ("gabow", "gabow-noheur", "kp", "queue")


@dataclass
class ExperimentRecord:
    algorithm: str
    generator: str
    n: int
    m: int
    permuted: bool
    seed: int
    repetitions: int
    matching_size: int
    iterations: int
    edge_scans: int
    unions: int
    queue_ops: int
    wall_ms: float


CSV_FIELDS = [f.name for f in fields(ExperimentRecord)]


class VerificationError(RuntimeError):
    def __init__(self, algorithm: str, seed: int, detail: str):
        super().__init__(f"{algorithm}: {detail} (seed {seed})")
        self.seed = seed


def _build_instance(args, seed: int) -> StaticGraph:
    if args.input:
        g = read_edge_list(args.input)
    elif args.gen == "random":
        g = generate_random(args.n, args.m, seed)
    else:
        mode = 0 if args.gen == "worst0" else 1
        g, _ = generate_worst_case(args.n, args.m, mode)
    if args.permute:
        g = permute_representation(g, seed)
    return g


def _run_engine(algorithm: str, g: StaticGraph, heur_factor: float):
    if algorithm == "gabow":
        return gabow.solve(g, heur_factor=heur_factor, heur=True)
    if algorithm == "gabow-noheur":
        return gabow.solve(g, heur=False)
    if algorithm == "kp":
        return single_path.kp_matcher(g, heur=1)
    if algorithm == "queue":
        return single_path.queue_matcher(g, heur=1)
    raise ValueError(f"unknown algorithm {algorithm!r}")


def run_experiment(args) -> list[ExperimentRecord]:
    """Run the configured experiment; every record has been verified."""
    algorithms = ALGORITHMS if args.alg == "all" else (args.alg,)
    records = []
    for rep in range(args.reps):
        seed = args.seed + rep
        g = _build_instance(args, seed)
        sizes = set()
        for algorithm in algorithms:
            start = time.perf_counter()
            result = _run_engine(algorithm, g, args.heur_factor)
            wall_ms = (time.perf_counter() - start) * 1000.0
            reason: list[str] = []
            if not check_matching(g, result.edges):
                raise VerificationError(algorithm, seed, "invalid matching")
            if not check_osc(g, result.edges, result.osc, reason):
                raise VerificationError(algorithm, seed,
                                        f"invalid odd-set cover: {reason[0]}")
            sizes.add(len(result.edges))
            records.append(ExperimentRecord(
                algorithm=algorithm,
                generator="file" if args.input else args.gen,
                n=g.node_count,
                m=g.edge_count,
                permuted=bool(args.permute),
                seed=seed,
                repetitions=args.reps,
                matching_size=len(result.edges),
                iterations=result.iterations,
                edge_scans=int(result.counters[0]),
                unions=int(result.counters[1]),
                queue_ops=int(result.counters[2]),
                wall_ms=wall_ms,
            ))
        if len(sizes) > 1:
            raise VerificationError("all", seed,
                                    f"engines disagree on size: {sorted(sizes)}")
    return records


def mean_records(records: list[ExperimentRecord]) -> list[ExperimentRecord]:
    """One aggregate row per algorithm, seed column -1."""
    means = []
    for algorithm in dict.fromkeys(r.algorithm for r in records):
        rows = [r for r in records if r.algorithm == algorithm]
        k = len(rows)
        means.append(ExperimentRecord(
            algorithm=algorithm,
            generator=rows[0].generator,
            n=rows[0].n,
            m=rows[0].m,
            permuted=rows[0].permuted,
            seed=-1,
            repetitions=rows[0].repetitions,
            matching_size=round(sum(r.matching_size for r in rows) / k, 3),
            iterations=round(sum(r.iterations for r in rows) / k, 3),
            edge_scans=round(sum(r.edge_scans for r in rows) / k, 3),
            unions=round(sum(r.unions for r in rows) / k, 3),
            queue_ops=round(sum(r.queue_ops for r in rows) / k, 3),
            wall_ms=round(sum(r.wall_ms for r in rows) / k, 3),
        ))
    return means


def counters_report(records: list[ExperimentRecord]) -> list[dict]:
    """edge_scans growth ratios between runs at n and 2n.

    Records are grouped by (algorithm, generator, permuted); within a group
    there must be runs whose n values form doubling pairs.  Raises ValueError
    when no pair exists.
    """
    rows = []
    groups: dict[tuple, dict[int, list[int]]] = {}
    for r in records:
        key = (r.algorithm, r.generator, r.permuted)
        groups.setdefault(key, {}).setdefault(r.n, []).append(r.edge_scans)
    for key, by_n in sorted(groups.items()):
        ns = sorted(by_n)
        for n in ns:
            if 2 * n in by_n:
                small = sum(by_n[n]) / len(by_n[n])
                large = sum(by_n[2 * n]) / len(by_n[2 * n])
                rows.append({
                    "algorithm": key[0], "generator": key[1],
                    "permuted": key[2], "n": n,
                    "edge_scans_ratio": large / small,
                })
    if not rows:
        raise ValueError("need records at two sizes n and 2n "
                         "for the same configuration")
    return rows


def write_csv(records: list[ExperimentRecord], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in records:
        writer.writerow([getattr(r, name) for name in CSV_FIELDS])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcmatch-bench",
        description="matching benchmark driver (CSV on stdout)")
    parser.add_argument("--gen", choices=("random", "worst0", "worst1"),
                        default="random")
    parser.add_argument("--n", type=int, default=10000)
    parser.add_argument("--m", type=int, default=None,
                        help="edge parameter (default 4n)")
    parser.add_argument("--alg", choices=ALGORITHMS + ("all",),
                        default="gabow")
    parser.add_argument("--seed", type=int, default=290849)
    parser.add_argument("--reps", type=int, default=None,
                        help="repetitions (default 10 for random/permuted "
                             "instances, 1 for canonical ones)")
    parser.add_argument("--permute", action="store_true",
                        help="randomly permute the graph representation")
    parser.add_argument("--heur-factor", type=float, default=1.0,
                        dest="heur_factor")
    parser.add_argument("--input", type=str, default=None,
                        help="read the instance from an edge-list file")
    parser.add_argument("--csv", type=str, default=None,
                        help="also write the CSV to this path")
    parser.add_argument("--ratios", type=str, default=None,
                        help="read a previously written CSV and print "
                             "edge-scan doubling ratios instead of running")
    return parser


def _load_csv(path: str) -> list[ExperimentRecord]:
    records = []
    with open(path, newline="", encoding="utf-8") as f:
        for row in csv.DictReader(f):
            records.append(ExperimentRecord(
                algorithm=row["algorithm"], generator=row["generator"],
                n=int(row["n"]), m=int(row["m"]),
                permuted=row["permuted"] == "True",
                seed=int(row["seed"]), repetitions=int(row["repetitions"]),
                matching_size=int(float(row["matching_size"])),
                iterations=int(float(row["iterations"])),
                edge_scans=int(float(row["edge_scans"])),
                unions=int(float(row["unions"])),
                queue_ops=int(float(row["queue_ops"])),
                wall_ms=float(row["wall_ms"])))
    return [r for r in records if r.seed != -1]


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.ratios:
        try:
            rows = counters_report(_load_csv(args.ratios))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        writer = csv.DictWriter(sys.stdout, rows[0].keys(),
                                lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        return 0
    if args.m is None:
        args.m = 4 * args.n
    if args.reps is None:
        args.reps = 10 if (args.gen == "random" or args.permute) else 1
    if args.reps < 1 or args.n < 1:
        parser.print_usage(sys.stderr)
        return 1
    try:
        records = run_experiment(args)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 2
    records = records + mean_records(records)
    write_csv(records, sys.stdout)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            write_csv(records, f)
    return 0


if __name__ == "__main__":
    sys.exit(main())
