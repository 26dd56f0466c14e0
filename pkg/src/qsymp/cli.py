"""Command-line entry point ``qsymp``.

Exit codes: 0 success, 1 a verified property failed or normalisation failed,
2 malformed input.
"""

import argparse
import json
import sys

from . import serialize as ser
from .autos import compile_word
from .exactnum import Scalar
from .hamflows import flow, poisson_bracket
from .nagao import NonUnitDeterminant, i_map, nagao_decompose
from .normalize import NormalizationFailed, NotRegularSemisimple, normalize_to_Mn
from .reps import act_word, cm_point, in_fiber
from .suites import SUITES, UnknownSuite, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class CliInputError(Exception):
    pass


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: invalid JSON ({exc})") from None


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _scalar_arg(text):
    try:
        return Scalar.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an exact number: {text!r}") from None


def _scalar_list(text):
    return [_scalar_arg(x) for x in text.replace(",", " ").split()]


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, args.n, args.deg, args.trials, args.seed) for name in names]
    if args.json:
        _emit([r.to_json(timing=args.timing) for r in reports])
    else:
        for r in reports:
            print(r.summary(timing=args.timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_factor(args):
    word = nagao_decompose(ser.polymat_from_json(_load(args.matrix)))
    _emit(ser.nagao_word_to_json(word))
    return EXIT_OK


def cmd_imap(args):
    _emit(ser.endo_to_json(i_map(ser.gamma_from_json(_load(args.gamma)))))
    return EXIT_OK


def cmd_act(args):
    word = ser.tameword_from_json(_load(args.word))
    pt = ser.point_from_json(_load(args.point))
    if args.compiled:
        _emit(ser.endo_to_json(compile_word(word)))
        return EXIT_OK
    _emit(ser.point_to_json(act_word(word, pt)))
    return EXIT_OK


def cmd_flow(args):
    h = ser.hamspec_from_json(_load(args.ham))
    pt = ser.point_from_json(_load(args.point))
    try:
        out = flow(h, args.time, pt)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    _emit(ser.point_to_json(out))
    return EXIT_OK


def cmd_bracket(args):
    h1 = ser.hamspec_from_json(_load(args.h1))
    h2 = ser.hamspec_from_json(_load(args.h2))
    pt = ser.point_from_json(_load(args.point))
    _emit({"value": ser.scalar_to_json(poisson_bracket(h1, h2, pt))})
    return EXIT_OK


def cmd_normalize(args):
    pt = ser.point_from_json(_load(args.point))
    try:
        word, gl, result = normalize_to_Mn(pt, seed=args.seed)
    except (NormalizationFailed, NotRegularSemisimple) as exc:
        print(f"normalization failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit({"word": ser.tameword_to_json(word), "gl": ser.matrix_to_json(gl),
           "result": ser.point_to_json(result)})
    return EXIT_OK


def cmd_cm_point(args):
    try:
        pt = cm_point(args.n, args.tau, args.x, args.p)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    if not in_fiber(pt):
        print("constructed point is not in the fiber", file=sys.stderr)
        return EXIT_FAILED
    _emit(ser.point_to_json(pt))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qsymp", description="Exact checks of tame symplectic automorphisms and their flows.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run seeded verification suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or 'all'")
    p.add_argument("--n", type=int, default=4, help="largest matrix size")
    p.add_argument("--deg", type=int, default=6, help="degree / word-length bound")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true", help="print JSON reports")
    p.add_argument("--timing", action="store_true", help="include elapsed times")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factor", help="amalgamated factorisation of a 2x2 polynomial matrix")
    p.add_argument("matrix", help="PolyMat2 JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("imap", help="automorphism attached to (p, M)")
    p.add_argument("gamma", help="GammaElem JSON file")
    p.set_defaults(func=cmd_imap)

    p = sub.add_parser("act", help="apply a tame word to a point")
    p.add_argument("--word", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--compiled", action="store_true", help="print the compiled endomorphism instead")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("flow", help="closed-form Hamiltonian flow")
    p.add_argument("--ham", required=True)
    p.add_argument("--time", type=_scalar_arg, required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("bracket", help="exact Poisson bracket at a point")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("normalize", help="move a point into the slice v_2 = 0, w_2 = 0")
    p.add_argument("--point", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("cm-point", help="build a Calogero-Moser point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", type=_scalar_arg, default=Scalar(1))
    p.add_argument("--x", type=_scalar_list, required=True, help="n distinct positions")
    p.add_argument("--p", type=_scalar_list, required=True, help="n momenta")
    p.set_defaults(func=cmd_cm_point)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CliInputError, ser.InputError, UnknownSuite, NonUnitDeterminant) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
