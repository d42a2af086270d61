"""
Building and decoding a t-error-correcting code
===============================================

The code is a coset of a weighted checksum on inversion vectors: all x in
the inversion-vector box with sum_i h_i x_i = a (mod m_t). The weights h
come from a Sidon set, so low-weight error patterns have distinct
checksums and can be looked up directly.
"""

import math
import random

from rankperm.codebook import dumps, loads, verify_code
from rankperm.construction import (
    bose_chowla_set, build_code, decode, is_sidon, min_kendall_distance,
)
from rankperm.enumeration import kendall_ball_volume
from rankperm.perm import kendall_distance

###############################################################################
# A Sidon set
# -----------
# q + 1 residues modulo (q^3 - 1)/(q - 1) whose pairwise sums all differ.

J = bose_chowla_set(7, 2)
print(J.m, J.elements, is_sidon(J.elements, 2, J.m))

###############################################################################
# The code
# --------

code = build_code(9, 2)
print(f"n=9, t=2: h={code.h} mod {code.m_t}, coset {code.coset}")
print(f"{len(code)} codewords (at least {math.ceil(math.factorial(9) / code.m_t)} guaranteed)")
print("minimum distance:", min_kendall_distance(code))
packing = math.factorial(9) // kendall_ball_volume(9, 2)
print(f"packing bound {packing}, efficiency {len(code) / packing:.3f}")

###############################################################################
# Decoding
# --------
# Apply two random Kendall steps (exchanging neighbouring values) and decode.

rng = random.Random(3)
word = code.codebook[123]
noisy = word.entries
for _ in range(2):
    k = rng.randrange(1, 9)
    noisy = tuple(k + 1 if v == k else k if v == k + 1 else v for v in noisy)
print(word, "->", noisy, f"(distance {kendall_distance(word, noisy)}) ->", decode(noisy, code))

###############################################################################
# Files
# -----
# The codebook serialises to a JSON document that round-trips exactly and can
# be re-verified from scratch.

text = dumps(code)
again = loads(text)
print(dumps(again) == text, verify_code(again, check_distance=False))
