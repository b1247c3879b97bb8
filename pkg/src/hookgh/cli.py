"""Command-line interface.

Shapes are written "a", "a,1" or "a,1^l".  Fillings are JSON objects
{"shape": {"a": A, "leg": L}, "row": [...], "col": [...]} with the column
listed bottom to top.  Words are comma-separated letters, or a plain digit
string when every letter is a single digit.  Verification subcommands exit
0 exactly when every asserted claim passes; exploratory findings never
affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .fillings import (
    filling_from_json,
    filling_to_json,
    inversions,
    phi,
)
from .foata import arm, bump, leg, theta, theta_inverse
from .lab import (
    explore_d_intersection,
    hilbert_series,
    verify_arr_basis,
    verify_nfact2,
    verify_orbit_harmonics,
)
from .polyalg import (
    OrbitParams,
    default_params,
    delta,
    derivative_module,
    seeded_params,
)
from .shapes import format_shape, parse_shape
from .fillings import enumerate_fillings


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(p) for p in text.split(","))
    if text.isdigit():
        return tuple(int(ch) for ch in text)
    raise ValueError(f"cannot parse word {text!r}: use digits or commas")


def _format_word(word) -> str:
    if all(x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def _format_filling(S) -> str:
    row = " ".join(str(e) for e in S.row)
    col = " ".join(str(e) for e in S.col)
    return f"{row} | {col}" if col else f"{row} |"


def _load_filling(args):
    S = filling_from_json(json.loads(args.filling))
    if getattr(args, "shape", None):
        declared = parse_shape(args.shape)
        if declared != S.shape:
            raise ValueError(f"--shape {format_shape(declared)} conflicts with "
                             f"filling shape {format_shape(S.shape)}")
    return S


def _emit(args, payload: dict, text: str) -> int:
    print(json.dumps(payload, indent=2) if args.json else text)
    return 0


def _emit_report(args, report) -> int:
    print(json.dumps(report.to_json(), indent=2) if args.json
          else report.to_text())
    return 0 if report.ok else 1


def _cmd_enumerate(args) -> int:
    s = parse_shape(args.shape)
    fillings = enumerate_fillings(s)
    if args.json:
        print(json.dumps([filling_to_json(S) for S in fillings]))
    else:
        for S in fillings:
            print(_format_filling(S))
    return 0


def _cmd_phi(args) -> int:
    S = _load_filling(args)
    m = phi(S)
    return _emit(args, {"filling": filling_to_json(S), "phi": str(m)}, str(m))


def _cmd_inversions(args) -> int:
    S = _load_filling(args)
    inv = inversions(S)
    rp = sorted(inv.row_pairs)
    cp = sorted(inv.col_pairs)
    text = (f"row inversions: {' '.join(map(str, rp)) or '(none)'}\n"
            f"column inversions: {' '.join(map(str, cp)) or '(none)'}")
    return _emit(args, {"row_pairs": [list(p) for p in rp],
                        "col_pairs": [list(p) for p in cp]}, text)


def _cmd_theta(args) -> int:
    S = _load_filling(args)
    T = theta(S)
    payload = {"image": filling_to_json(T),
               "phi_source": str(phi(S)), "phi_image": str(phi(T))}
    text = (f"{_format_filling(T)}\n"
            f"phi(S) = {payload['phi_source']}\n"
            f"phi(theta(S)) = {payload['phi_image']}")
    return _emit(args, payload, text)


def _cmd_theta_inverse(args) -> int:
    T = _load_filling(args)
    S = theta_inverse(T)
    payload = {"preimage": filling_to_json(S),
               "phi_source": str(phi(T)), "phi_preimage": str(phi(S))}
    text = (f"{_format_filling(S)}\n"
            f"phi(T) = {payload['phi_source']}\n"
            f"phi(theta_inverse(T)) = {payload['phi_preimage']}")
    return _emit(args, payload, text)


def _cmd_arm(args) -> int:
    out = arm(args.u, _parse_word(args.word))
    return _emit(args, {"word": list(out)}, _format_word(out))


def _cmd_leg(args) -> int:
    out = leg(args.v, _parse_word(args.word))
    return _emit(args, {"word": list(out)}, _format_word(out))


def _cmd_bump(args) -> int:
    S = _load_filling(args)
    B = bump(S)
    return _emit(args, {"image": filling_to_json(B)}, _format_filling(B))


def _cmd_delta(args) -> int:
    s = parse_shape(args.shape)
    d = delta(s)
    return _emit(args, {"shape": format_shape(s), "n": d.n,
                        "terms": d.to_json()}, str(d))


def _cmd_dmodule(args) -> int:
    s = parse_shape(args.shape)
    basis = derivative_module(s)
    text = f"dim = {len(basis)}"
    return _emit(args, {"shape": format_shape(s), "dim": len(basis),
                        "basis": [p.to_json() for p in basis]}, text)


def _cmd_hilbert(args) -> int:
    s = parse_shape(args.shape)
    h = hilbert_series(s)
    payload = {"shape": format_shape(s), "series": str(h)}
    payload.update(h.to_json())
    return _emit(args, payload, str(h))


def _orbit_params(args, n: int) -> OrbitParams:
    if args.alphas or args.betas:
        if not (args.alphas and args.betas):
            raise ValueError("--alphas and --betas must be given together")
        return OrbitParams(tuple(Fraction(p) for p in args.alphas.split(",")),
                           tuple(Fraction(p) for p in args.betas.split(",")))
    if args.seed is not None:
        return seeded_params(n, args.seed)
    return default_params(n)


def _cmd_verify_basis(args) -> int:
    return _emit_report(args, verify_arr_basis(parse_shape(args.shape),
                                               guard=args.guard))


def _cmd_verify_nfact2(args) -> int:
    return _emit_report(args, verify_nfact2(parse_shape(args.lam),
                                            guard=args.guard))


def _cmd_verify_orbit(args) -> int:
    s = parse_shape(args.shape)
    params = _orbit_params(args, s.n)
    return _emit_report(args, verify_orbit_harmonics(s, params,
                                                     guard=args.guard))


def _cmd_explore_d(args) -> int:
    return _emit_report(args, explore_d_intersection(parse_shape(args.lam),
                                                     guard=args.guard))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookgh",
        description="Exact computations on hook-shape fillings, inversion "
                    "monomials and derivative modules.")
    parser.add_argument("--version", action="version",
                        version=f"hookgh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")
        return p

    p = add("enumerate", _cmd_enumerate, help="list all standard fillings")
    p.add_argument("--shape", required=True, help="hook shape, e.g. 5,1^4")

    for name, fn, descr in [
            ("phi", _cmd_phi, "inversion monomial of a filling"),
            ("inversions", _cmd_inversions, "row and column inversion pairs"),
            ("theta", _cmd_theta, "apply the corner-crossing bijection"),
            ("theta-inverse", _cmd_theta_inverse, "invert the bijection"),
            ("bump", _cmd_bump, "slide a filling one step around its corner")]:
        p = add(name, fn, help=descr)
        p.add_argument("--filling", required=True,
                       help='filling JSON, e.g. {"shape": {"a": 2, "leg": 1}, '
                            '"row": [1, 2], "col": [3]}')
        p.add_argument("--shape", help="optional shape cross-check")

    p = add("arm", _cmd_arm, help="forward block shuffle of a word")
    p.add_argument("-u", type=int, required=True, help="pivot letter")
    p.add_argument("--word", required=True, help="word, e.g. 49263187 or 10,4,12")

    p = add("leg", _cmd_leg, help="backward block shuffle of a word")
    p.add_argument("-v", type=int, required=True, help="pivot letter")
    p.add_argument("--word", required=True)

    p = add("delta", _cmd_delta, help="hook determinant polynomial")
    p.add_argument("--shape", required=True)

    p = add("dmodule", _cmd_dmodule, help="derivative span of the determinant")
    p.add_argument("--shape", required=True)

    p = add("hilbert", _cmd_hilbert, help="bigraded Hilbert series")
    p.add_argument("--shape", required=True)

    p = add("verify-basis", _cmd_verify_basis,
            help="certify the inversion monomial basis")
    p.add_argument("--shape", required=True)
    p.add_argument("--guard", type=int, default=6, help="largest allowed n")

    p = add("verify-nfact2", _cmd_verify_nfact2,
            help="certify the half-factorial intersection")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="parent hook shape, e.g. 5,1^5")
    p.add_argument("--guard", type=int, default=8)

    p = add("verify-orbit", _cmd_verify_orbit,
            help="certify orbit evaluation nonsingularity + complementation")
    p.add_argument("--shape", required=True)
    p.add_argument("--guard", type=int, default=5)
    p.add_argument("--alphas", help="comma-separated rationals, one per row")
    p.add_argument("--betas", help="comma-separated rationals, one per column")
    p.add_argument("--seed", type=int,
                   help="draw distinct rational parameters from this seed")

    p = add("explore-d", _cmd_explore_d,
            help="explore the derivative-span intersection (asserts nothing)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--guard", type=int, default=5)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
