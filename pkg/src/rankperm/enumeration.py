"""
Exact counting in the Kendall space and in ``H_n = {1..n}^n`` with the l1 metric.

Everything here returns Python integers; ``n!`` leaves the int64 range at
``n = 21`` and the counts are used as exact inputs to the code bounds.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapExceeded
from .perm import to_hamming_image

__all__ = [
    "WeightDistribution", "binom", "weight_distribution", "kn_explicit",
    "kendall_ball_volume", "q_count", "h_ball_volume", "qnr_sandwich",
    "qnr_in_range", "brute_weight_distribution", "brute_q_count",
    "exact_optimal_size", "max_clique", "BRUTE_WEIGHT_CAP", "BRUTE_Q_CAP",
    "OPTIMAL_CAP",
]

BRUTE_WEIGHT_CAP = 8
BRUTE_Q_CAP = 6
OPTIMAL_CAP = 5


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero for a negative lower index or ``b > a >= 0``."""
    if b < 0:
        return 0
    if a < 0:
        raise ValueError(f"binom({a}, {b}): negative upper index is not used here")
    return math.comb(a, b)


@dataclass(frozen=True)
class WeightDistribution:
    """``counts[k]`` is the number of permutations of ``[n]`` with ``k`` inversions."""

    n: int
    counts: tuple[int, ...]

    @property
    def max_weight(self) -> int:
        return self.n * (self.n - 1) // 2

    def __getitem__(self, k):
        return self.counts[k]

    def __len__(self):
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts)


@lru_cache(maxsize=None)
def _weight_counts(n: int) -> tuple[int, ...]:
    # multiply out prod_{i=1..n} (1 + z + ... + z^{i-1})
    coeffs = [1]
    for i in range(2, n + 1):
        new = [0] * (len(coeffs) + i - 1)
        running = 0
        for k in range(len(new)):
            if k < len(coeffs):
                running += coeffs[k]
            if k - i >= 0:
                running -= coeffs[k - i]
            new[k] = running
        coeffs = new
    return tuple(coeffs)


def weight_distribution(n: int) -> WeightDistribution:
    """
    Coefficients of ``prod_{i=1..n} (1 - z^i) / (1 - z)``.

    Memory holds ``n(n-1)/2 + 1`` big integers; a few hundred ``n`` is
    practical, results are cached per ``n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return WeightDistribution(n, _weight_counts(n))


def kn_explicit(n: int, k: int) -> int:
    """Closed-form count of permutations with ``k`` inversions, valid for ``1 <= k <= n``."""
    if not 1 <= k <= n:
        raise ValueError(f"the explicit formula needs 1 <= k <= n, got k={k}, n={n}")
    total = binom(n + k - 2, k) - binom(n + k - 3, k - 2)
    j = 2
    while True:
        u = (3 * j * j - j) // 2
        if k - u < 0:
            break
        term = binom(n + k - u - 1, k - u) + binom(n + k - u - j - 1, k - u - j)
        total += term if j % 2 == 0 else -term
        j += 1
    return total


def kendall_ball_volume(n: int, r: int) -> int:
    """Size of a radius-``r`` Kendall ball in ``S_n`` (the same for every center)."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    counts = weight_distribution(n).counts
    return sum(counts[: r + 1])


def q_count(n: int, r: int) -> int:
    """Solutions of ``x_1 + ... + x_n = r`` with ``0 <= x_i <= n-1`` (inclusion-exclusion)."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    total = 0
    i = 0
    while n * i <= r and i <= n:
        term = math.comb(n, i) * binom(n + r - n * i - 1, r - n * i)
        total += -term if i % 2 else term
        i += 1
    return total


def h_ball_volume(n: int, s: int) -> int:
    """``|B_s(1)|`` in ``H_n`` with the l1 metric."""
    if s < 0:
        raise ValueError("radius must be nonnegative")
    return sum(q_count(n, r) for r in range(min(s, n * (n - 1)) + 1))


def qnr_in_range(n: int, r: int) -> bool:
    """Whether ``r < n^2 / ln n``; every ``r`` qualifies at ``n = 1``."""
    if n == 1:
        return True
    return r * math.log(n) < n * n


def qnr_sandwich(n: int, r: int) -> tuple[int, int]:
    """
    Lower and upper estimates of ``q_count(n, r)`` from the first two
    inclusion-exclusion terms. Only defined for ``r < n^2 / ln n``.
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    if not qnr_in_range(n, r):
        raise ValueError(f"r={r} is outside r < n^2/ln n = {n * n / math.log(n):.3f}")
    upper = binom(n + r - 1, r)
    lower = upper - n * binom(r - 1, r - n)
    return lower, upper


def brute_weight_distribution(n: int) -> WeightDistribution:
    """Inversion counts tallied over every permutation; test oracle, ``n <= 8``."""
    if not 1 <= n <= BRUTE_WEIGHT_CAP:
        raise CapExceeded(f"brute force enumeration is capped at n <= {BRUTE_WEIGHT_CAP}")
    tally = Counter()
    for p in itertools.permutations(range(n)):
        tally[sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])] += 1
    N = n * (n - 1) // 2
    return WeightDistribution(n, tuple(tally[k] for k in range(N + 1)))


@lru_cache(maxsize=None)
def _composition_tally(n: int) -> Counter:
    return Counter(sum(x) for x in itertools.product(range(n), repeat=n))


def brute_q_count(n: int, r: int) -> int:
    if not 1 <= n <= BRUTE_Q_CAP:
        raise CapExceeded(f"brute force composition count is capped at n <= {BRUTE_Q_CAP}")
    return _composition_tally(n)[r]


def max_clique(adj: list[int]) -> int:
    """
    Size of a maximum clique; ``adj[v]`` is the neighbour bitset of ``v``.

    Branch and bound with greedy colouring as the bound (Tomita-style),
    vertices relabelled by decreasing degree first.
    """
    n = len(adj)
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    pos = {v: k for k, v in enumerate(order)}
    g = [0] * n
    for v in range(n):
        bits = 0
        rest = adj[v]
        while rest:
            low = rest & -rest
            bits |= 1 << pos[low.bit_length() - 1]
            rest ^= low
        g[pos[v]] = bits

    best = 0

    def expand(size, cand):
        nonlocal best
        verts, colours = [], []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~g[v] & ~low
                uncoloured &= ~low
                verts.append(v)
                colours.append(colour)
        for idx in range(len(verts) - 1, -1, -1):
            if size + colours[idx] <= best:
                return
            v = verts[idx]
            sub = cand & g[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << n) - 1)
    return best


def _distance_matrix(n: int) -> np.ndarray:
    perms = list(itertools.permutations(range(1, n + 1)))
    bits = np.array([to_hamming_image(p) for p in perms], dtype=np.int64).reshape(len(perms), -1)
    w = bits.sum(axis=1)
    return w[:, None] + w[None, :] - 2 * (bits @ bits.T)


def exact_optimal_size(n: int, d: int) -> int:
    """
    ``A(n, d)``: the largest code in ``S_n`` with pairwise Kendall distance ``>= d``.

    Max clique of the graph joining permutations at distance ``>= d``. The
    graph is vertex-transitive (right multiplication), so the identity is
    put in the clique and the search runs on its neighbourhood.
    """
    if not 1 <= n <= OPTIMAL_CAP:
        raise CapExceeded(f"exact search is capped at n <= {OPTIMAL_CAP}")
    N = n * (n - 1) // 2
    if not 1 <= d <= max(N, 1):
        raise ValueError(f"d must lie in 1..{N}")
    if n == 1:
        return 1
    dist = _distance_matrix(n)
    far = dist >= d
    nbrs = np.flatnonzero(far[0])
    sub = far[np.ix_(nbrs, nbrs)]
    adj = []
    for row in sub:
        bits = 0
        for k in np.flatnonzero(row):
            bits |= 1 << int(k)
        adj.append(bits)
    return 1 + max_clique(adj)
