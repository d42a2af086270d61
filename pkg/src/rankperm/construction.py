"""
t-error-correcting codes in the Kendall space built from Sidon-type sets.

Pipeline: Bose-Chowla set ``J`` modulo ``m = (q^{t+1}-1)/(q-1)`` ->
shifted check vector ``h`` modulo ``m_t`` -> the most populated coset of
``{x : sum h_i x_i = a (mod m_t)}`` inside the inversion-vector space
``G_n`` -> codebook of permutations. Decoding is syndrome lookup on the
inversion vector of the received permutation.

>>> code = build_code(5, 2)
>>> code.m_t, len(code.codebook) >= 2
(104, True)
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapExceeded
from .field import FIELD_CAP, build_field, prime_power
from .perm import (
    InversionVector, Permutation, as_permutation, from_inversion_vector,
    to_inversion_vector,
)

__all__ = [
    "SidonSet", "ParityCheck", "RankCode", "is_sidon", "bose_chowla_set",
    "exhaustive_sidon_set", "lift_check", "syndromes_distinct",
    "error_vectors", "shorten", "lift_ranges_hold", "proof_sum_properties_hold",
    "coset_profile", "choose_q", "improve_assignment", "build_code",
    "build_syndrome_table", "syndrome", "decode",
    "codeword_index", "min_kendall_distance", "min_l1_distance",
    "CODEBOOK_CAP", "UNCORRECTABLE",
]

CODEBOOK_CAP = 10**6
FALLBACK_MAX_M = 200
UNCORRECTABLE = None


@dataclass(frozen=True)
class SidonSet:
    q: int
    t: int
    m: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class ParityCheck:
    t: int
    m: int
    m_t: int
    h: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.h)


def is_sidon(elements: Sequence[int], t: int, m: int) -> bool:
    """True iff all sums of ``t`` elements (repetition allowed) are distinct mod ``m``."""
    seen = set()
    for combo in itertools.combinations_with_replacement(elements, t):
        s = sum(combo) % m
        if s in seen:
            return False
        seen.add(s)
    return True


def _bc_modulus(q: int, t: int) -> int:
    return (q ** (t + 1) - 1) // (q - 1)


def exhaustive_sidon_set(q: int, t: int, m: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically first ``q+1``-element set containing 0 with distinct ``t``-sums mod ``m``."""
    if m is None:
        m = _bc_modulus(q, t)
    size = q + 1

    def extend(chosen):
        if len(chosen) == size:
            return tuple(chosen)
        for v in range(chosen[-1] + 1, m - (size - len(chosen)) + 1):
            cand = chosen + [v]
            if is_sidon(cand, t, m):
                found = extend(cand)
                if found:
                    return found
        return None

    return extend([0])


def bose_chowla_set(q: int, t: int) -> SidonSet:
    """
    ``q+1`` residues modulo ``m = (q^{t+1}-1)/(q-1)`` whose ``t``-fold sums
    are all distinct.

    With ``theta`` primitive in ``GF(q^{t+1})`` the set is 0 together with
    ``log(theta + a) mod m`` for ``a`` in ``GF(q)``. The result is always
    checked with :func:`is_sidon` before it is returned.
    """
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"q={q} is not a prime power")
    if t < 1:
        raise ValueError("t must be >= 1")
    p, e = pe
    m = _bc_modulus(q, t)
    if q ** (t + 1) > FIELD_CAP:
        raise CapExceeded(f"GF({q}^{t + 1}) exceeds the field table cap {FIELD_CAP}")
    F = build_field(p, e * (t + 1))
    sub = F.subfield(e)
    # every primitive element is a valid theta; try them in ascending order
    for theta in range(1, F.size):
        if F.multiplicative_order(theta) != F.order:
            continue
        logs = [F.element_log(F.add(theta, a)) % m for a in sub]
        elements = tuple(sorted({0, *logs}))
        if len(elements) == q + 1 and is_sidon(elements, t, m):
            return SidonSet(q, t, m, elements)
    if m <= FALLBACK_MAX_M:
        found = exhaustive_sidon_set(q, t, m)
        if found:
            return SidonSet(q, t, m, found)
    raise RuntimeError(f"no Sidon set found for q={q}, t={t}; this is a bug")


def error_vectors(length: int, t: int):
    """All integer vectors of the given length with l1 weight at most ``t``."""
    def rec(pos, budget):
        if pos == length:
            yield ()
            return
        for v in range(-budget, budget + 1):
            for rest in rec(pos + 1, budget - abs(v)):
                yield (v,) + rest
    yield from rec(0, t)


def syndromes_distinct(parity: ParityCheck, L: int | None = None, t: int | None = None) -> bool:
    """
    Whether ``sum e_i h_i mod m_t`` separates every error vector of l1 weight
    ``<= t`` on the first ``L`` coordinates, with only ``e = 0`` mapping to 0.
    """
    h = parity.h if L is None else parity.h[:L]
    t = parity.t if t is None else t
    if L is not None and L > len(parity.h):
        raise ValueError(f"L={L} exceeds check length {len(parity.h)}")
    seen = set()
    for e in error_vectors(len(h), t):
        s = sum(a * b for a, b in zip(e, h)) % parity.m_t
        if s in seen:
            return False
        seen.add(s)
    return True


def _shift_and_modulus(t: int, m: int) -> tuple[int, int]:
    if t % 2:
        return (t - 1) * m // 2, t * (t + 1) * m
    return t * m // 2, t * (t + 2) * m


def lift_check(J: SidonSet) -> ParityCheck:
    """
    Shift the Sidon residues into the middle band: ``h_i = j_{i-1} + (t-1)m/2``
    for odd ``t``, ``j_{i-1} + tm/2`` for even ``t``, modulo ``m_t``.
    """
    if J.t < 2:
        raise ValueError("the shifted check needs t >= 2 (t = 1 uses h_i = i in build_code)")
    shift, m_t = _shift_and_modulus(J.t, J.m)
    parity = ParityCheck(J.t, J.m, m_t, tuple(j + shift for j in J.elements))
    if not syndromes_distinct(parity):
        raise RuntimeError(f"lifted check {parity.h} mod {m_t} fails the syndrome test")
    return parity


def lift_ranges_hold(parity: ParityCheck) -> bool:
    """Band condition on each ``h_i``: ``[(t-1)m/2, (t+1)m/2)`` for odd t, ``[tm/2, (t+2)m/2]`` for even t."""
    t, m = parity.t, parity.m
    if t % 2:
        return all((t - 1) * m <= 2 * h < (t + 1) * m for h in parity.h)
    return all(t * m <= 2 * h <= (t + 2) * m for h in parity.h)


def proof_sum_properties_hold(parity: ParityCheck) -> bool:
    """
    The two sum inequalities behind the distinct-syndrome argument, checked
    at their extremes over multisets drawn from ``H = {0} + h``:

    * any ``2t`` elements of ``H`` sum to less than ``m_t``;
    * for nonzero elements and ``r < t``, the ``r`` largest sum to less
      than the ``2t - r`` smallest.
    """
    t, m, h = parity.t, parity.m, parity.h
    if not h:
        return True
    hi, lo = max(h), min(h)
    if 2 * t * hi >= parity.m_t:
        return False
    top = (t + 1) * m if t % 2 else (t + 2) * m  # twice the band's upper end
    bottom = (t - 1) * m if t % 2 else t * m  # twice the band's lower end
    for r in range(1, t):
        # sum of r largest < r*top/2 <= (2t-r)*bottom/2 <= sum of 2t-r smallest
        if not (2 * r * hi < r * top <= (2 * t - r) * bottom <= 2 * (2 * t - r) * lo):
            return False
    return True


def shorten(parity: ParityCheck, L: int) -> ParityCheck:
    if not 0 <= L <= parity.length:
        raise ValueError(f"cannot shorten a length-{parity.length} check to {L}")
    out = ParityCheck(parity.t, parity.m, parity.m_t, parity.h[:L])
    if not syndromes_distinct(out):
        raise RuntimeError("shortened check fails the syndrome test")
    return out


def coset_profile(n: int, parity: ParityCheck) -> list[int]:
    """
    ``profile[a]`` = number of inversion vectors ``x`` in ``G_n`` with
    ``sum h_i x_i = a (mod m_t)``.
    """
    if parity.length != n - 1:
        raise ValueError(f"check length {parity.length} does not match n-1 = {n - 1}")
    m_t = parity.m_t
    dtype = np.int64 if math.factorial(n) < 2**62 else object
    counts = np.zeros(m_t, dtype=dtype)
    counts[0] = 1
    for i, h in enumerate(parity.h, start=1):
        new = np.zeros(m_t, dtype=dtype)
        for v in range(i + 1):
            new = new + np.roll(counts, (v * h) % m_t)
        counts = new
    return [int(c) for c in counts]


def _mixed_radix_block(sizes: Sequence[int]) -> np.ndarray:
    """All vectors with coordinate k in range(sizes[k]), lexicographic order."""
    if not sizes:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(s) for s in sizes], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)


def _coset_vectors(n: int, parity: ParityCheck, a: int) -> np.ndarray:
    """Inversion vectors of the coset ``a``, lexicographically sorted (meet in the middle)."""
    sizes = [i + 1 for i in range(1, n)]
    h = np.array(parity.h, dtype=np.int64)
    m_t = parity.m_t
    split = len(sizes) // 2
    left = _mixed_radix_block(sizes[:split])
    right = _mixed_radix_block(sizes[split:])
    left_s = (left @ h[:split]) % m_t if split else np.zeros(1, dtype=np.int64)
    right_s = (right @ h[split:]) % m_t
    order = np.argsort(right_s, kind="stable")
    sorted_s = right_s[order]
    starts = np.searchsorted(sorted_s, np.arange(m_t), side="left")
    ends = np.searchsorted(sorted_s, np.arange(m_t), side="right")
    parts = []
    for row, s in zip(left, left_s):
        need = (a - s) % m_t
        idx = order[starts[need]:ends[need]]
        if len(idx):
            block = np.empty((len(idx), len(sizes)), dtype=np.int64)
            block[:, :split] = row
            block[:, split:] = right[idx]
            parts.append(block)
    if not parts:
        return np.zeros((0, len(sizes)), dtype=np.int64)
    return np.concatenate(parts)


@dataclass(frozen=True, eq=False)
class RankCode:
    """
    A code in ``S_n`` given by the coset ``{x : sum h_i x_i = coset (mod m_t)}``
    of inversion vectors. ``q`` and ``sidon`` are None on the ``t = 1`` path.
    """

    n: int
    t: int
    q: int | None
    sidon: SidonSet | None
    parity: ParityCheck
    coset: int
    codebook: tuple[Permutation, ...]
    syndrome_table: dict[int, tuple[int, ...]] = field(repr=False)

    @property
    def m(self) -> int:
        return self.parity.m

    @property
    def m_t(self) -> int:
        return self.parity.m_t

    @property
    def h(self) -> tuple[int, ...]:
        return self.parity.h

    def __len__(self):
        return len(self.codebook)

    def vectors(self) -> np.ndarray:
        return np.array([to_inversion_vector(c).coords for c in self.codebook],
                        dtype=np.int64).reshape(len(self.codebook), self.n - 1)


def build_syndrome_table(parity: ParityCheck) -> dict[int, tuple[int, ...]]:
    table = {}
    for e in error_vectors(parity.length, parity.t):
        s = sum(a * b for a, b in zip(e, parity.h)) % parity.m_t
        if s in table:
            raise RuntimeError("syndrome collision; the check does not correct t errors")
        table[s] = e
    return table


def choose_q(n: int) -> int:
    """Smallest prime power ``q >= n - 2``."""
    q = max(2, n - 2)
    while prime_power(q) is None:
        q += 1
    return q


def _parity_for(n: int, t: int) -> tuple[int | None, SidonSet | None, ParityCheck]:
    if t == 1:
        m_t = 2 * n - 1
        parity = ParityCheck(1, m_t, m_t, tuple(range(1, n)))
        if not syndromes_distinct(parity):
            raise RuntimeError("t = 1 check fails the syndrome test")
        return None, None, parity
    q = choose_q(n)
    if q ** (t + 1) > FIELD_CAP:
        raise CapExceeded(f"q={q}, t={t}: field GF(q^{t + 1}) exceeds the table cap {FIELD_CAP}")
    J = bose_chowla_set(q, t)
    parity = shorten(lift_check(J), n - 1)
    return q, J, parity


def improve_assignment(n: int, parity: ParityCheck) -> ParityCheck:
    """
    Reorder the check coefficients over the coordinates of ``G_n`` to enlarge
    the best coset.

    Coordinate ``i`` only ranges over ``0..i``, so which coefficient sits
    where changes the coset sizes while the syndrome property (symmetric in
    the coordinates) is untouched. Best-improvement pairwise swaps from the
    given order, first swap in lexicographic order winning ties.
    """
    h = list(parity.h)

    def score(hs):
        return max(coset_profile(n, ParityCheck(parity.t, parity.m, parity.m_t, tuple(hs))))

    best = score(h)
    while True:
        winner = None
        for i in range(len(h)):
            for j in range(i + 1, len(h)):
                g = h[:]
                g[i], g[j] = g[j], g[i]
                s = score(g)
                if s > best and (winner is None or s > winner[0]):
                    winner = (s, g)
        if winner is None:
            return ParityCheck(parity.t, parity.m, parity.m_t, tuple(h))
        best, h = winner


def build_code(n: int, t: int, assignment: str = "swap",
               codebook_cap: int = CODEBOOK_CAP) -> RankCode:
    """
    Build the ``t``-error-correcting code for ``S_n``.

    ``t >= 2`` uses the smallest prime power ``q >= n - 2``, lifts a
    Bose-Chowla set and keeps the first ``n - 1`` check coefficients;
    ``t = 1`` uses ``h_i = i`` modulo ``2n - 1``. For ``t >= 2`` and
    ``assignment="swap"`` the coefficients are then reordered by
    :func:`improve_assignment`; ``"sorted"`` keeps them ascending. The coset with the most
    inversion vectors wins, ties going to the smallest residue.
    """
    if n < 4:
        raise ValueError("n must be >= 4")
    if t < 1:
        raise ValueError("t must be >= 1")
    if assignment not in ("swap", "sorted"):
        raise ValueError(f"unknown assignment {assignment!r}")
    q, J, parity = _parity_for(n, t)
    if assignment == "swap" and t >= 2:
        parity = improve_assignment(n, parity)
    profile = coset_profile(n, parity)
    best = max(profile)
    coset = profile.index(best)
    if best > codebook_cap:
        raise CapExceeded(f"codebook of {best} words exceeds the cap {codebook_cap}")
    vecs = _coset_vectors(n, parity, coset)
    codebook = tuple(from_inversion_vector(InversionVector(tuple(int(v) for v in row)))
                     for row in vecs)
    return RankCode(n, t, q, J, parity, coset, codebook, build_syndrome_table(parity))


def syndrome(x, code: RankCode) -> int:
    """``sum h_i x_i - coset (mod m_t)``; zero exactly on the code."""
    coords = x.coords if isinstance(x, InversionVector) else tuple(x)
    if len(coords) != code.n - 1:
        raise ValueError(f"vector length {len(coords)} does not match n-1 = {code.n - 1}")
    return (sum(a * b for a, b in zip(coords, code.h)) - code.coset) % code.m_t


def decode(received, code: RankCode) -> Permutation | None:
    """
    Bounded-distance decoding: returns the codeword within Kendall distance
    ``t`` of ``received`` or None (``UNCORRECTABLE``) when the syndrome or the
    corrected vector points outside the code.
    """
    received = as_permutation(received)
    if received.n != code.n:
        raise ValueError(f"received word has size {received.n}, code has n={code.n}")
    y = to_inversion_vector(received).coords
    e = code.syndrome_table.get(syndrome(y, code))
    if e is None:
        return UNCORRECTABLE
    x = tuple(a - b for a, b in zip(y, e))
    if any(not 0 <= c <= i for i, c in enumerate(x, start=1)):
        return UNCORRECTABLE
    return from_inversion_vector(InversionVector(x))


def codeword_index(code: RankCode, i: int) -> Permutation:
    if not 0 <= i < len(code.codebook):
        raise IndexError(f"codeword index {i} out of range 0..{len(code.codebook) - 1}")
    return code.codebook[i]


def _hamming_images(perms: Sequence[Permutation]) -> np.ndarray:
    arr = np.array([p.entries for p in perms], dtype=np.int16)
    n = arr.shape[1]
    iu, ju = np.triu_indices(n, k=1)
    return (arr[:, iu] > arr[:, ju]).astype(np.float32)


def min_kendall_distance(code_or_words, chunk: int = 1024) -> int:
    """
    Exact minimum pairwise Kendall distance. A codebook with fewer than two
    words reports ``N + 1`` (no pairs to measure).
    """
    words = code_or_words.codebook if isinstance(code_or_words, RankCode) else tuple(
        as_permutation(w) for w in code_or_words)
    if not words:
        raise ValueError("empty codebook")
    n = words[0].n
    N = n * (n - 1) // 2
    if len(words) < 2:
        return N + 1
    bits = _hamming_images(words)
    w = bits.sum(axis=1)
    best = N + 1
    # 0/1 products of length <= N stay exact in float32
    for start in range(0, len(words), chunk):
        blk = bits[start:start + chunk]
        d = w[start:start + chunk, None] + w[None, :] - 2 * (blk @ bits.T)
        rows = np.arange(len(blk))
        d[rows, rows + start] = N + 1
        best = min(best, int(round(float(d.min()))))
    return best


def min_l1_distance(vectors: np.ndarray, chunk: int = 1024) -> int:
    """Minimum pairwise l1 distance between rows; ``inf`` stand-in ``sys.maxsize`` for < 2 rows."""
    vectors = np.asarray(vectors, dtype=np.int64)
    if len(vectors) < 2:
        return int(np.iinfo(np.int64).max)
    best = None
    for start in range(0, len(vectors), chunk):
        blk = vectors[start:start + chunk]
        d = np.abs(blk[:, None, :] - vectors[None, :, :]).sum(axis=2)
        rows = np.arange(len(blk))
        d[rows, rows + start] = np.iinfo(np.int64).max
        v = int(d.min())
        best = v if best is None else min(best, v)
    return best
