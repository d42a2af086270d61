"""
Codebook files and the verification gates run on a loaded code.

A codebook file is one JSON document with a fixed key order; every integer
is written as a decimal string so values never pass through floats.
``dumps(loads(text)) == text`` for any file this module wrote.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from .construction import (
    ParityCheck, RankCode, SidonSet, build_syndrome_table, coset_profile,
    is_sidon, lift_ranges_hold, min_kendall_distance, proof_sum_properties_hold,
    syndrome, syndromes_distinct,
)
from .perm import parse_permutation, to_inversion_vector

__all__ = ["dumps", "loads", "save_code", "load_code", "verify_code"]

FORMAT = "rankperm-codebook/1"


def _ints(values):
    return [str(v) for v in values]


def dumps(code: RankCode) -> str:
    doc = {
        "format": FORMAT,
        "n": str(code.n),
        "t": str(code.t),
        "q": None if code.q is None else str(code.q),
        "m": str(code.m),
        "m_t": str(code.m_t),
        "sidon": None if code.sidon is None else _ints(code.sidon.elements),
        "h": _ints(code.h),
        "coset": str(code.coset),
        "codebook": [str(c) for c in code.codebook],
    }
    return json.dumps(doc, indent=1) + "\n"


def loads(text: str) -> RankCode:
    """
    Parse a codebook document. The syndrome table is rebuilt from ``h``;
    when the check cannot separate errors the table is left empty so that
    :func:`verify_code` can report it instead of failing here.
    """
    doc = json.loads(text)
    if doc.get("format") != FORMAT:
        raise ValueError(f"not a codebook file (format={doc.get('format')!r})")
    n, t = int(doc["n"]), int(doc["t"])
    q = None if doc["q"] is None else int(doc["q"])
    m, m_t = int(doc["m"]), int(doc["m_t"])
    sidon = None
    if doc["sidon"] is not None:
        sidon = SidonSet(q, t, m, tuple(int(v) for v in doc["sidon"]))
    parity = ParityCheck(t, m, m_t, tuple(int(v) for v in doc["h"]))
    codebook = tuple(parse_permutation(s) for s in doc["codebook"])
    for c in codebook:
        if c.n != n:
            raise ValueError(f"codeword {c} has size {c.n}, expected {n}")
    try:
        table = build_syndrome_table(parity)
    except RuntimeError:
        table = {}
    return RankCode(n, t, q, sidon, parity, int(doc["coset"]), codebook, table)


def save_code(code: RankCode, path) -> None:
    Path(path).write_text(dumps(code), encoding="utf-8")


def load_code(path) -> RankCode:
    return loads(Path(path).read_text(encoding="utf-8"))


def verify_code(code: RankCode, check_distance: bool = True) -> dict[str, bool]:
    """
    Re-run every gate on a code and return ``{gate: passed}``.

    The Sidon and band gates only apply to codes from the Sidon path
    (``t >= 2``); they are reported as passed otherwise.
    """
    n, t = code.n, code.t
    gates = {}
    if code.sidon is not None:
        J = code.sidon
        shift = (t - 1) * J.m // 2 if t % 2 else t * J.m // 2
        lifted = {j + shift for j in J.elements}
        gates["sidon"] = (is_sidon(J.elements, t, J.m) and len(set(code.h)) == len(code.h)
                          and set(code.h) <= lifted)
        gates["band"] = lift_ranges_hold(code.parity) and proof_sum_properties_hold(code.parity)
    else:
        gates["sidon"] = True
        gates["band"] = True
    gates["check_length"] = len(code.h) == n - 1
    gates["syndromes_distinct"] = syndromes_distinct(code.parity)
    gates["in_coset"] = gates["check_length"] and all(
        syndrome(to_inversion_vector(c), code) == 0 for c in code.codebook)
    gates["distinct_words"] = len(set(code.codebook)) == len(code.codebook)
    gates["size"] = len(code.codebook) >= -(-math.factorial(n) // code.m_t)
    if gates["check_length"]:
        gates["full_coset"] = coset_profile(n, code.parity)[code.coset] == len(code.codebook)
    else:
        gates["full_coset"] = False
    if check_distance:
        gates["min_distance"] = bool(code.codebook) and min_kendall_distance(code) >= 2 * t + 1
    return gates
