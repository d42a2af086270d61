"""
Command-line front end.

Exit status: 0 success, 1 usage error, 2 verification failure, 3 resource cap.
``--format structured`` prints one JSON object with a fixed key order and
every integer as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bounds as _bounds
from . import enumeration as _enum
from .codebook import load_code, save_code, verify_code
from .construction import build_code, decode, min_kendall_distance
from .errors import CapExceeded
from .perm import (
    cayley_distance, footrule, from_inversion_vector, inversion_count,
    kendall_distance, l1_distance, parse_permutation, parse_vector,
    to_inversion_vector,
)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3

CONSTRUCT_CAP = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def _emit(record: dict, fmt: str, out=None):
    out = out or sys.stdout
    rendered = {k: (v if v is None or isinstance(v, (str, list, bool)) else str(v))
                for k, v in record.items()}
    if fmt == "structured":
        out.write(json.dumps(rendered) + "\n")
    else:
        for k, v in rendered.items():
            if v is None:
                v = "n/a"
            elif isinstance(v, list):
                v = " ".join(v)
            out.write(f"{k}: {v}\n")


def _perm(text):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise UsageError(f"bad permutation {text!r}: {exc}") from None


def cmd_dist(args):
    a, b = _perm(args.p1), _perm(args.p2)
    if a.n != b.n:
        raise UsageError(f"size mismatch: {a.n} vs {b.n}")
    record = {"kendall": kendall_distance(a, b), "footrule": footrule(a, b),
              "cayley": cayley_distance(a, b)}
    if a.n >= 2:
        record["l1_inversion"] = l1_distance(to_inversion_vector(a), to_inversion_vector(b))
    _emit(record, args.format)
    return EXIT_OK


def cmd_invvec(args):
    if (args.perm is None) == (args.vec is None):
        raise UsageError("give exactly one of --perm or --vec")
    if args.perm is not None:
        p = _perm(args.perm)
        if p.n < 2:
            raise UsageError("inversion vectors need n >= 2")
        x = to_inversion_vector(p)
    else:
        try:
            x = parse_vector(args.vec)
        except ValueError as exc:
            raise UsageError(f"bad inversion vector {args.vec!r}: {exc}") from None
        p = from_inversion_vector(x)
    _emit({"permutation": str(p), "vector": str(x), "inversions": inversion_count(p)}, args.format)
    return EXIT_OK


def cmd_volume(args):
    n = args.n
    if n < 1:
        raise UsageError("--n must be >= 1")
    if args.k is None and args.r is None:
        raise UsageError("give --k and/or --r")
    record = {"n": n}
    if args.k is not None:
        dist = _enum.weight_distribution(n)
        record["k"] = args.k
        record["K"] = dist[args.k] if args.k < len(dist) else 0
    if args.r is not None:
        record["r"] = args.r
        record["kendall_ball"] = _enum.kendall_ball_volume(n, args.r)
        record["Q"] = _enum.q_count(n, args.r)
        record["h_ball"] = _enum.h_ball_volume(n, args.r)
    if args.check:
        if n > _enum.BRUTE_WEIGHT_CAP:
            raise CapExceeded(f"--check enumerates S_n and is capped at n <= {_enum.BRUTE_WEIGHT_CAP}")
        ok = _enum.brute_weight_distribution(n) == _enum.weight_distribution(n)
        if args.r is not None and n <= _enum.BRUTE_Q_CAP:
            ok = ok and _enum.brute_q_count(n, args.r) == record["Q"]
        record["check"] = "pass" if ok else "fail"
        _emit(record, args.format)
        return EXIT_OK if ok else EXIT_VERIFY
    _emit(record, args.format)
    return EXIT_OK


def cmd_bounds(args):
    N = args.n * (args.n - 1) // 2
    if args.n < 2 or not 1 <= args.d <= N:
        raise UsageError(f"need n >= 2 and 1 <= d <= N = {N}")
    _emit(_bounds.report_record(_bounds.bounds_report(args.n, args.d)), args.format)
    return EXIT_OK


def cmd_construct(args):
    if args.n < 4 or args.t < 1:
        raise UsageError("need n >= 4 and t >= 1")
    if args.n > CONSTRUCT_CAP:
        raise CapExceeded(f"construct is capped at n <= {CONSTRUCT_CAP}")
    code = build_code(args.n, args.t, assignment=args.assignment)
    save_code(code, args.out)
    record = {"n": code.n, "t": code.t, "size": len(code), "m_t": code.m_t,
              "coset": code.coset,
              "guaranteed": math.ceil(math.factorial(code.n) / code.m_t)}
    if not args.skip_distance:
        record["min_distance"] = min_kendall_distance(code)
    record["path"] = str(args.out)
    _emit(record, args.format)
    return EXIT_OK


def cmd_verify(args):
    try:
        code = load_code(args.path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read codebook {args.path}: {exc}") from None
    gates = verify_code(code)
    record = {"n": code.n, "t": code.t, "size": len(code)}
    record.update({k: "pass" if v else "fail" for k, v in gates.items()})
    _emit(record, args.format)
    return EXIT_OK if all(gates.values()) else EXIT_VERIFY


def cmd_decode(args):
    try:
        code = load_code(args.path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read codebook {args.path}: {exc}") from None
    received = _perm(args.received)
    if received.n != code.n:
        raise UsageError(f"received word has size {received.n}, code has n = {code.n}")
    word = decode(received, code)
    _emit({"decoded": "uncorrectable" if word is None else str(word)}, args.format)
    return EXIT_OK


def cmd_optimal(args):
    if args.n > _enum.OPTIMAL_CAP:
        raise CapExceeded(f"optimal is capped at n <= {_enum.OPTIMAL_CAP}")
    N = args.n * (args.n - 1) // 2
    if args.n < 2 or not 1 <= args.d <= N:
        raise UsageError(f"need n >= 2 and 1 <= d <= N = {N}")
    _emit({"n": args.n, "d": args.d, "A": _enum.exact_optimal_size(args.n, args.d)}, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rankperm", description="Kendall tau permutation codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("dist", cmd_dist, "distances between two permutations")
    p.add_argument("p1")
    p.add_argument("p2")

    p = add("invvec", cmd_invvec, "convert between permutation and inversion vector")
    p.add_argument("--perm")
    p.add_argument("--vec")

    p = add("volume", cmd_volume, "inversion counts and ball volumes")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--r", type=_nonneg)
    p.add_argument("--check", action="store_true", help="cross-check against brute force (n <= 8)")

    p = add("bounds", cmd_bounds, "bounds on A(n, d)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)

    p = add("construct", cmd_construct, "build a t-error-correcting code")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--t", type=_nonneg, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--assignment", choices=("swap", "sorted"), default="swap")
    p.add_argument("--skip-distance", action="store_true")

    p = add("verify", cmd_verify, "re-check a codebook file")
    p.add_argument("path")

    p = add("decode", cmd_decode, "decode a received permutation")
    p.add_argument("path")
    p.add_argument("received")

    p = add("optimal", cmd_optimal, "exact A(n, d) by clique search (n <= 5)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--d", type=_nonneg, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rankperm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"rankperm {args.command}: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
