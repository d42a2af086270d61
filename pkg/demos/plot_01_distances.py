"""
Distances between rankings
==========================

A permutation is read in one-line notation: ``(2, 1, 4, 3)`` puts item 2
first, item 1 second and so on. The Kendall distance counts the pairs of
positions on which two rankings disagree.
"""

from rankperm.perm import (
    Permutation, cayley_distance, compose, footrule, from_inversion_vector,
    inverse, kendall_distance, l1_distance, to_hamming_image, to_inversion_vector,
)

a = Permutation((2, 1, 4, 3))
b = Permutation((2, 3, 4, 1))
print("kendall :", kendall_distance(a, b))

###############################################################################
# Inversion vectors
# -----------------
# Coordinate i counts how many of the first i entries exceed entry i+1. The
# map is a bijection onto the box {0..1} x {0..2} x ... x {0..n-1}, and the
# l1 distance between two vectors never exceeds the Kendall distance.

xa, xb = to_inversion_vector(a), to_inversion_vector(b)
print("vectors :", xa, xb)
print("l1      :", l1_distance(xa, xb))
print("back    :", from_inversion_vector(xa))

###############################################################################
# Right invariance
# ----------------
# Relabelling positions the same way in both rankings, ``s -> s o p``, leaves
# the distance unchanged. Here ``compose(s, p)(i) = s(p(i))``.

p = Permutation((4, 1, 3, 2))
print("after relabelling:", kendall_distance(compose(a, p), compose(b, p)))
print("as a weight      :", kendall_distance(compose(a, inverse(b)), Permutation((1, 2, 3, 4))))

###############################################################################
# Other metrics
# -------------
# Footrule D (sum of |a_i - b_i|) and Cayley T (any transpositions) bracket
# the Kendall distance: D/2 <= d <= D - T.

D, T = footrule(a, b), cayley_distance(a, b)
print(f"D = {D}, T = {T}: {D / 2} <= {kendall_distance(a, b)} <= {D - T}")

###############################################################################
# Hamming image
# -------------
# One bit per position pair (i < j), set when the pair is inverted. Hamming
# distance between images equals Kendall distance.

print("images:", to_hamming_image(a), to_hamming_image(b))
