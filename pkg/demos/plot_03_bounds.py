"""
How large can a code be?
========================

A(n, d) is the largest set of rankings with pairwise Kendall distance at
least d. For tiny n it is found exactly by a clique search; otherwise it is
bracketed by packing and covering arguments.
"""

import math

from rankperm.bounds import bounds_report
from rankperm.enumeration import exact_optimal_size

###############################################################################
# Exact values against the bounds
# -------------------------------
# The (5, 3) search is the slow one, around fifteen seconds.

for n in (3, 4, 5):
    N = n * (n - 1) // 2
    for d in range(1, N + 1):
        rep = bounds_report(n, d)
        a = exact_optimal_size(n, d)
        print(f"n={n} d={d:2d}: {rep.best_lower:4d} <= A = {a:4d} <= {rep.best_upper}")

###############################################################################
# Rates
# -----
# log A / log n! for a distance growing like n^1.5.

for n in (8, 10, 12, 14):
    d = math.ceil(n ** 1.5)
    rep = bounds_report(n, d)
    print(f"n={n:2d} d={d:3d}: rate in [{rep.rate_lower:.4f}, {rep.rate_upper:.4f}]")

###############################################################################
# The full record
# ---------------
# Every bound, exactly; rationals stay rationals.

for key, value in vars(bounds_report(6, 5)).items():
    print(f"{key:>20}: {value}")
