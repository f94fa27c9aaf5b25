"""Command-line front end.

Verbs:
  construct     synthesize a code with prescribed Forney indices
  reduce        semi-reduce a matrix of the ring, listing the unit factors
  xi            convert between skew polynomials and ring matrices
  distance      free distance of a code given by its encoder JSON
  rook          solve one placement instance or sweep all of them
  verify-paper  run the full regression/property suite

Exit codes: 0 success, 1 mathematical infeasibility, 2 malformed input.
Errors are emitted as one-line JSON objects on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import DEFAULT_SEED, run_all
from .codes import ConvCode, free_distance
from .construct import RookInstance, construct_code, rook_solve, rook_sweep
from .errors import (
    BothZero,
    ContextMismatch,
    DivisionByZero,
    FieldMismatch,
    Infeasible,
    InvalidParameters,
    InvalidSpec,
    NoRootOfUnity,
    NotADivisor,
    NotBasic,
    NotCyclicSigma,
    NotDelayFree,
    NotMinimal,
    NotSemiReduced,
    RankDeficient,
    RookInfeasible,
    SizeError,
    StateSpaceTooLarge,
)
from .field import field_spec_for_order
from .matring import MMatrix, semi_reduce, xi, xi_inv
from .polymat import PolyMatrix
from .skew import RingContext, SkewPoly

_INFEASIBLE = (
    Infeasible,
    RookInfeasible,
    NotBasic,
    NotSemiReduced,
    NotDelayFree,
    NotMinimal,
    NotCyclicSigma,
    NoRootOfUnity,
    NotADivisor,
    RankDeficient,
    StateSpaceTooLarge,
    DivisionByZero,
    BothZero,
)
_MALFORMED = (
    InvalidParameters,
    InvalidSpec,
    SizeError,
    FieldMismatch,
    ContextMismatch,
    ValueError,
    KeyError,
    TypeError,
    json.JSONDecodeError,
    OSError,
)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n")


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _int_list(text):
    return [int(v) for v in text.split(",") if v != ""]


def _cmd_construct(args):
    spec = field_spec_for_order(args.q)
    ctx = RingContext(spec, args.n)
    code = construct_code(ctx, _int_list(args.indices), strategy=args.strategy)
    _emit(code.to_dict())
    return 0


def _cmd_reduce(args):
    spec = field_spec_for_order(args.q)
    ctx = RingContext(spec, args.n)
    M = MMatrix.from_ints(ctx, _load(args.matrix))
    result = semi_reduce(M)
    _emit(
        {
            "reduced": result.reduced.to_ints(),
            "factors": [list(f) for f in result.factors],
        }
    )
    return 0


def _cmd_xi(args):
    spec = field_spec_for_order(args.q)
    ctx = RingContext(spec, args.n)
    data = _load(getattr(args, "in"))
    if args.dir == "fwd":
        _emit(xi(SkewPoly.from_ints(ctx, data)).to_ints())
    else:
        _emit(xi_inv(MMatrix.from_ints(ctx, data)).to_ints())
    return 0


def _cmd_distance(args):
    data = _load(args.code)
    spec = field_spec_for_order(int(data["q"]))
    G = PolyMatrix.from_ints(spec, data["G"])
    code = ConvCode.from_encoder(G)
    sys.stdout.write(f"{free_distance(code, max_states=args.max_states)}\n")
    return 0


def _cmd_rook(args):
    if args.verify_all == (args.values is not None):
        raise InvalidParameters("give exactly one of --values or --verify-all")
    if args.verify_all:
        failures = rook_sweep(args.n, strategy=args.strategy)
        if failures:
            for values in sorted(failures):
                _emit({"n": args.n, "values": list(values), "solvable": False})
            sys.stdout.write("unsolvable instances found\n")
            return 1
        sys.stdout.write("all instances solvable\n")
        return 0
    sol = rook_solve(RookInstance(args.n, _int_list(args.values)), strategy=args.strategy)
    _emit(sol.to_dict())
    return 0


def _cmd_verify_paper(args):
    results = run_all(seed=args.seed)
    width = max(len(name) for _, name, _, _ in results)
    all_ok = True
    for number, name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        all_ok &= ok
        sys.stdout.write(f"{number:>2}  {name:<{width}}  {status}  {detail}\n")
    sys.stdout.write(("all criteria passed" if all_ok else "criteria failed") + "\n")
    return 0 if all_ok else 1


def _parser():
    parser = argparse.ArgumentParser(
        prog="sccc",
        description="construct and analyze cyclic convolutional codes",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", help="synthesize a code from Forney indices")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--indices", required=True, help="comma-separated Forney indices")
    p.add_argument("--strategy", default="auto", choices=["auto", "constructive", "exhaustive"])
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("reduce", help="semi-reduce a ring matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", required=True, help="JSON file with the coefficient grid")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("xi", help="convert between skew polynomials and matrices")
    p.add_argument("--dir", required=True, choices=["fwd", "inv"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--in", required=True, help="JSON input file")
    p.set_defaults(fn=_cmd_xi)

    p = sub.add_parser("distance", help="free distance of an encoder")
    p.add_argument("--code", required=True, help="JSON file with {q,n,k,forney,G}")
    p.add_argument("--max-states", type=int, default=10**6)
    p.set_defaults(fn=_cmd_distance)

    p = sub.add_parser("rook", help="residue placement in the circulant table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--values", help="comma-separated residues")
    p.add_argument("--verify-all", action="store_true")
    p.add_argument("--strategy", default="auto", choices=["auto", "constructive", "exhaustive"])
    p.set_defaults(fn=_cmd_rook)

    p = sub.add_parser("verify-paper", help="run the regression/property suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=_cmd_verify_paper)

    return parser


def run(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _INFEASIBLE as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 1
    except _MALFORMED as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
