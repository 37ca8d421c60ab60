"""
Non-Hamiltonian cubic graphs up to 14 vertices
==============================================

"""

import time

from cubic_genetics import StatsRecord, canonical_form, mutants, table1_stats

print(StatsRecord.CSV_HEADER)
for n in (10, 12, 14):
    t0 = time.perf_counter()
    rec = table1_stats(n)
    print(rec.csv_row(), f"  # {time.perf_counter() - t0:.1f}s")

# the only bridgeless, cracker-free, non-Hamiltonian graph in this range
for n in (10, 12, 14):
    for g in mutants(n):
        print("mutant on", n, "vertices:", canonical_form(g).decode())
