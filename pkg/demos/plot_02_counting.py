"""
Counting inversions and ball sizes
==================================

How many rankings sit within distance r of a given one? Because the metric
is right invariant, the answer does not depend on the centre, and it is a
partial sum of the inversion-count distribution.
"""

import math

import numpy as np

from rankperm.enumeration import (
    brute_weight_distribution, h_ball_volume, kendall_ball_volume, kn_explicit,
    q_count, qnr_sandwich, weight_distribution,
)

###############################################################################
# Inversion-count distribution
# ----------------------------
# Coefficients of prod_i (1 + z + ... + z^{i-1}); symmetric and summing to n!.

for n in range(1, 7):
    print(n, weight_distribution(n).counts)
assert weight_distribution(7) == brute_weight_distribution(7)

# a closed form for small k agrees with the product expansion
n = 12
print([kn_explicit(n, k) for k in range(1, n + 1)])
print(list(weight_distribution(n).counts[1:n + 1]))

###############################################################################
# Ball volumes
# ------------
# Balls grow fast: at radius n the ball already holds a sizeable share of S_n.

n = 10
vol = np.array([kendall_ball_volume(n, r) for r in range(n * (n - 1) // 2 + 1)], dtype=float)
share = vol / math.factorial(n)
for r in (1, 2, 5, 10, 20):
    print(f"|B_{r}| = {int(vol[r])}  ({share[r]:.2e} of S_{n})")

###############################################################################
# The l1 box
# ----------
# Q(n, r) counts vectors in {0..n-1}^n with coordinate sum r. For r well
# below n^2/ln n two binomials bracket it.

for r in range(0, 30, 6):
    lo, hi = qnr_sandwich(15, r)
    print(f"r={r:2d}: {lo} <= Q = {q_count(15, r)} <= {hi}")
print("radius-3 l1 ball in {1..6}^6:", h_ball_volume(6, 3))
