"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]

Every workload is run on each available backend; results must agree before
a timing is reported.
"""
import argparse
import json
import statistics
import time

from invseq import kernels
from invseq.core import RelationPattern, TriplePattern, all_relation_patterns


def workloads():
    gt_le = RelationPattern.parse(">,<=")
    ge_gt = RelationPattern.parse(">=,>")
    triple = TriplePattern.parse(">,<,-")
    tables = [p.table for p in all_relation_patterns()]
    vinc = [((1, 2, 4, 3), 0b011)]
    return [
        ("relation_counts (>,<=) n=10", lambda k: k.relation_counts(gt_le.table, gt_le.r1.mask, 10)),
        ("relation_counts (>=,>) n=9", lambda k: k.relation_counts(ge_gt.table, ge_gt.r1.mask, 9)),
        ("triple_counts (>,<,-) n=10", lambda k: k.triple_counts(triple.r1.mask, triple.r2.mask, triple.r3.mask, 10)),
        ("profile_counts 36 patterns n=8", lambda k: k.profile_counts(tables, 8)),
        ("vincular_count (124)3 n=8", lambda k: k.vincular_count(8, vinc)),
    ]


def _normalize(x):
    if isinstance(x, (list, tuple)):
        return [_normalize(v) for v in x]
    return x


def time_call(fn, repeat):
    runs = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        runs.append(time.perf_counter() - start)
    return statistics.median(runs), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print JSON instead of a table")
    args = ap.parse_args(argv)

    backends = kernels.available()
    rows = []
    for name, job in workloads():
        times, results = {}, {}
        for b in backends:
            k = kernels.load(b)
            times[b], results[b] = time_call(lambda: job(k), args.repeat)
        agree = len({json.dumps(_normalize(r)) for r in results.values()}) == 1
        if not agree:
            raise SystemExit(f"backends disagree on {name}")
        row = {"workload": name, **{f"{b}_s": round(t, 4) for b, t in times.items()}}
        if "compiled" in times:
            row["speedup"] = round(times["pure"] / times["compiled"], 1)
        rows.append(row)

    if args.json:
        print(json.dumps({"backends": backends, "rows": rows}, indent=2))
        return
    print(f"{'workload':34} " + " ".join(f"{b + ' (s)':>14}" for b in backends) + ("  speedup" if len(backends) > 1 else ""))
    for r in rows:
        cells = " ".join(f"{r[b + '_s']:>14.4f}" for b in backends)
        tail = f"  {r['speedup']:>6.1f}x" if "speedup" in r else ""
        print(f"{r['workload']:34} {cells}{tail}")


if __name__ == "__main__":
    main()
