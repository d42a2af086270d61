"""
Table-driven arithmetic in ``GF(p^e)``.

Elements are integers ``0 .. p^e - 1`` whose base-``p`` digits are the
polynomial coefficients (lowest degree first). Multiplication goes through
log/antilog tables built from a primitive element.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded

__all__ = ["FiniteField", "build_field", "is_prime", "prime_power", "factorize", "FIELD_CAP"]

FIELD_CAP = 10**7


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


def factorize(n: int) -> dict[int, int]:
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, e)`` with ``q = p^e``, or None if ``q`` is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, e), = fac.items()
    return p, e


# --- polynomial helpers over GF(p); coefficient lists, lowest degree first ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[k - dm + j] = (a[k - dm + j] - c * m[j]) % p
    return _trim(a[:dm])


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _digits(x: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _monic(e: int, low: int, p: int) -> list[int]:
    # monic polynomial of degree e whose lower coefficients encode `low`
    return _digits(low, p, e) + [1]


def _is_irreducible(f, p) -> bool:
    e = len(f) - 1
    for deg in range(1, e // 2 + 1):
        for low in range(p ** deg):
            if not _poly_mod(f, _monic(deg, low, p), p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> list[int]:
    for low in range(p ** e):
        f = _monic(e, low, p)
        if _is_irreducible(f, p):
            return f
    raise RuntimeError(f"no monic irreducible of degree {e} over GF({p}); this is a bug")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """``GF(p^e)`` with log/antilog tables relative to ``primitive``."""

    p: int
    e: int
    modulus: tuple[int, ...]  # monic, lowest degree first
    primitive: int
    antilog: np.ndarray = field(repr=False)  # antilog[k] = primitive^k, k < size-1
    log: np.ndarray = field(repr=False)  # log[0] is unused (-1)

    @property
    def size(self) -> int:
        return self.p ** self.e

    @property
    def order(self) -> int:
        return self.size - 1

    def add(self, a: int, b: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.e):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        out, scale = 0, 1
        for _ in range(self.e):
            a, r = divmod(a, p)
            out += ((-r) % p) * scale
            scale *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % self.order])

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        return int(self.antilog[(int(self.log[a]) * k) % self.order])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.antilog[(-int(self.log[a])) % self.order])

    def element_log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0 is undefined")
        return int(self.log[a])

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        return self.order // math.gcd(self.order, int(self.log[a]))

    def subfield(self, k: int) -> list[int]:
        """Elements of the subfield ``GF(p^k)``, ``k | e``, in ascending log order with 0 first."""
        if self.e % k:
            raise ValueError(f"GF({self.p}^{k}) is not a subfield of GF({self.p}^{self.e})")
        step = self.order // (self.p ** k - 1)
        return [0] + [int(self.antilog[i * step]) for i in range(self.p ** k - 1)]


def _powmod_poly(base, k, m, p):
    result = [1]
    while k:
        if k & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        k >>= 1
    return result


def _antilog_table(g, m, p, e, order):
    """Successive powers of ``g`` as encoded integers, computed in numpy blocks."""
    # matrix of multiplication by g acting on coefficient columns
    mat = np.zeros((e, e), dtype=np.int64)
    for j in range(e):
        basis = [0] * j + [1]
        col = _poly_mod(_poly_mul(basis, g, p), m, p)
        for i, c in enumerate(col):
            mat[i, j] = c
    block = max(1, math.isqrt(order))
    vecs = np.zeros((block, e), dtype=np.int64)
    vecs[0, 0] = 1
    for k in range(1, block):
        vecs[k] = mat @ vecs[k - 1] % p
    # jump = mat^block
    jump = np.eye(e, dtype=np.int64)
    for _ in range(block):
        jump = mat @ jump % p
    chunks = [vecs]
    total = block
    while total < order:
        vecs = vecs @ jump.T % p
        chunks.append(vecs)
        total += block
    digits = np.concatenate(chunks)[:order]
    weights = p ** np.arange(e, dtype=np.int64)
    return digits @ weights


def build_field(p: int, e: int) -> FiniteField:
    """
    Construct ``GF(p^e)`` from the smallest monic irreducible modulus and
    the smallest primitive element (both by integer encoding).

    >>> F = build_field(3, 3)
    >>> F.size, F.multiplicative_order(F.primitive)
    (27, 26)
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    if p ** e > FIELD_CAP:
        raise CapExceeded(f"field size {p}^{e} exceeds the table cap {FIELD_CAP}")
    m = _smallest_irreducible(p, e)
    order = p ** e - 1
    prime_factors = list(factorize(order)) if order > 1 else []
    primitive = None
    for g in range(1, p ** e):
        gp = _trim(_digits(g, p, e))
        if all(_powmod_poly(gp, order // r, m, p) != [1] for r in prime_factors):
            primitive = g
            break
    if primitive is None:
        raise RuntimeError("no primitive element found; this is a bug")
    antilog = _antilog_table(_trim(_digits(primitive, p, e)), m, p, e, order)
    log = np.full(p ** e, -1, dtype=np.int64)
    log[antilog] = np.arange(order, dtype=np.int64)
    if (log[1:] < 0).any():
        raise RuntimeError("antilog table does not cover the multiplicative group")
    return FiniteField(p, e, tuple(m), primitive, antilog, log)
