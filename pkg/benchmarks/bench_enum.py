"""Timing comparison of the enumeration backends.

Runs the same census on the pure-Python reference and on the compiled
kernel, checks the counts agree, and prints a table.

    python3 benchmarks/bench_enum.py [--repeat N]
"""
import argparse
import time

from coordlat.coordinator import LatticeType
from coordlat.latticeenum import enumerate_lengths, lattice_spec, native_available

CASES = [
    ("A2", LatticeType("A", 2), 25),
    ("A3", LatticeType("A", 3), 12),
    ("B3", LatticeType("B", 3), 12),
    ("C3", LatticeType("C", 3), 10),
    ("D4", LatticeType("D", 4), 9),
    ("G2", LatticeType("G2"), 20),
    ("F4", LatticeType("F4"), 5),
]


def timed(spec, K, backend, repeat):
    best = float("inf")
    counts = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        counts = enumerate_lengths(spec, K, backend=backend).counts
        best = min(best, time.perf_counter() - t0)
    return best, counts


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if not native_available():
        print("compiled kernel not built; nothing to compare")
        return 1

    print(f"{'case':<6} {'K':>3} {'points':>9} {'python':>9} {'native':>9} {'speedup':>8}")
    for label, lt, K in CASES:
        spec = lattice_spec(lt)
        t_py, c_py = timed(spec, K, "python", args.repeat)
        t_nat, c_nat = timed(spec, K, "native", args.repeat)
        assert c_py == c_nat, f"{label}: backend disagreement"
        total = sum(c_py)
        print(
            f"{label:<6} {K:>3} {total:>9} {t_py:>8.3f}s {t_nat:>8.3f}s "
            f"{t_py / t_nat:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
