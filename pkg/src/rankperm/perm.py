"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation and the Kendall tau
metric on them.

Besides the metric itself this module holds the three maps used to move
between spaces: the inversion vector (a Lehmer-code variant living in
``Z_2 x Z_3 x ... x Z_n``), the footrule/Cayley companions, and the binary
image indexed by position pairs.

>>> kendall_distance(Permutation((2, 1, 4, 3)), Permutation((2, 3, 4, 1)))
3
>>> to_inversion_vector(Permutation((2, 3, 4, 1))).coords
(0, 0, 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "InversionVector", "identity", "reversal", "parse_permutation",
    "parse_vector", "format_sequence", "as_permutation",
    "inversion_count", "kendall_distance", "to_inversion_vector",
    "from_inversion_vector", "compose", "inverse", "l1_distance", "footrule",
    "cayley_distance", "cycle_count", "to_hamming_image", "hamming_distance", "pair_index",
]

# above this size inversion counting switches to merge sort
MERGE_THRESHOLD = 64


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]`` onto itself, stored in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        n = len(entries)
        if n < 1:
            raise ValueError("a permutation needs at least one entry")
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"{entries} is not a permutation of 1..{n}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return format_sequence(self.entries)


@dataclass(frozen=True)
class InversionVector:
    """
    Element of ``G_n``: ``coords[i-1]`` lies in ``{0, ..., i}`` for
    ``i = 1, ..., n-1``.
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(v) for v in self.coords)
        for i, c in enumerate(coords, start=1):
            if not 0 <= c <= i:
                raise ValueError(f"coordinate {i} is {c}, must lie in 0..{i}")
        object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    @property
    def weight(self) -> int:
        return sum(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return format_sequence(self.coords)


def as_permutation(s) -> Permutation:
    if isinstance(s, Permutation):
        return s
    return Permutation(tuple(s))


def _as_vector(x) -> InversionVector:
    if isinstance(x, InversionVector):
        return x
    return InversionVector(tuple(x))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def format_sequence(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def _parse_ints(text: str) -> tuple[int, ...]:
    items = [item.strip() for item in text.strip().split(",")]
    out = []
    for pos, item in enumerate(items, start=1):
        try:
            out.append(int(item))
        except ValueError:
            raise ValueError(f"entry {pos} ({item!r}) is not an integer") from None
    return tuple(out)


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation such as ``"2,1,4,3"``."""
    return Permutation(_parse_ints(text))


def parse_vector(text: str) -> InversionVector:
    return InversionVector(_parse_ints(text))


def _check_sizes(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")


def _naive_inversions(seq: Sequence[int]) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def _merge_inversions(seq: Sequence[int]) -> int:
    # iterative bottom-up merge sort, counting cross inversions
    a = list(seq)
    n = len(a)
    buf = [0] * n
    count = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if a[i] <= a[j]:
                    buf[k] = a[i]
                    i += 1
                else:
                    buf[k] = a[j]
                    count += mid - i
                    j += 1
                k += 1
            buf[k:k + mid - i] = a[i:mid]
            k += mid - i
            buf[k:k + hi - j] = a[j:hi]
        a, buf = buf, a
        width *= 2
    return count


def inversion_count(s) -> int:
    """Number of position pairs ``i < j`` with ``s(i) > s(j)``."""
    entries = as_permutation(s).entries
    if len(entries) > MERGE_THRESHOLD:
        return _merge_inversions(entries)
    return _naive_inversions(entries)


def compose(s, t) -> Permutation:
    """``compose(s, t)(i) = s(t(i))``."""
    s, t = as_permutation(s), as_permutation(t)
    _check_sizes(s, t)
    return Permutation(tuple(s.entries[v - 1] for v in t.entries))


def inverse(s) -> Permutation:
    s = as_permutation(s)
    out = [0] * s.n
    for i, v in enumerate(s.entries, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def kendall_distance(s, p) -> int:
    """
    Minimum number of adjacent transpositions taking ``s`` to ``p``.

    Counts the position pairs ordered differently by the two permutations,
    which is the inversion count of ``s o p^-1``.
    """
    s, p = as_permutation(s), as_permutation(p)
    _check_sizes(s, p)
    return inversion_count(compose(s, inverse(p)))


def to_inversion_vector(s) -> InversionVector:
    """
    ``x(i) = |{j <= i : s(j) > s(i+1)}|`` for ``i = 1, ..., n-1``.
    """
    entries = as_permutation(s).entries
    if len(entries) < 2:
        raise ValueError("inversion vectors need n >= 2")
    coords = []
    for i in range(1, len(entries)):
        v = entries[i]
        coords.append(sum(1 for u in entries[:i] if u > v))
    return InversionVector(tuple(coords))


def from_inversion_vector(x) -> Permutation:
    x = _as_vector(x)
    n = x.n
    remaining = list(range(1, n + 1))
    out = [0] * n
    # position i+1 holds the (x(i)+1)-th largest value not yet placed
    for i in range(n - 1, 0, -1):
        out[i] = remaining.pop(len(remaining) - 1 - x.coords[i - 1])
    out[0] = remaining[0]
    return Permutation(tuple(out))


def l1_distance(x, y) -> int:
    x, y = _as_vector(x), _as_vector(y)
    _check_sizes(x, y)
    return sum(abs(a - b) for a, b in zip(x.coords, y.coords))


def footrule(s, p) -> int:
    """Spearman footrule ``sum |s(i) - p(i)|``."""
    s, p = as_permutation(s), as_permutation(p)
    _check_sizes(s, p)
    return sum(abs(a - b) for a, b in zip(s.entries, p.entries))


def cycle_count(s) -> int:
    s = as_permutation(s)
    seen = [False] * (s.n + 1)
    cycles = 0
    for start in range(1, s.n + 1):
        if seen[start]:
            continue
        cycles += 1
        v = start
        while not seen[v]:
            seen[v] = True
            v = s.entries[v - 1]
    return cycles


def cayley_distance(s, p) -> int:
    """Minimum number of arbitrary transpositions: ``n`` minus the cycles of ``s o p^-1``."""
    s, p = as_permutation(s), as_permutation(p)
    _check_sizes(s, p)
    return s.n - cycle_count(compose(s, inverse(p)))


def pair_index(i: int, j: int, n: int) -> int:
    """Zero-based index of the position pair ``(i, j)``, ``1 <= i < j <= n``, in lexicographic order."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


def to_hamming_image(s) -> tuple[int, ...]:
    """
    Binary vector of length ``n(n-1)/2``; the bit for position pair ``(i, j)``
    (lexicographic order) is 1 when that pair is an inversion.
    """
    e = as_permutation(s).entries
    n = len(e)
    return tuple(int(e[i] > e[j]) for i in range(n) for j in range(i + 1, n))


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    _check_sizes(a, b)
    return sum(1 for u, v in zip(a, b) if u != v)
