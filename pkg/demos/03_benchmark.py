"""Time the serial map-based baseline against the sort/scan/scatter pipeline
on generated quad grids and emit the CSV report.

Each N x N grid stores 5 vertices per quad (4 replicated corners plus one
unused center), so 5 N^2 vertices go in and exactly (N+1)^2 come out.
Larger sizes: try 2048 or 4096 if you have the memory and patience.
"""
import sys

import remeshx as rx

sizes = [int(s) for s in sys.argv[1:]] or [8, 64, 256, 1024]
records = rx.run_bench(sizes, reps=5)
from remeshx.bench import format_table

print(format_table(records))
with open("bench.csv", "w") as handle:
    rx.write_csv(records, handle)
print("\nwrote bench.csv")
