"""Command-line front end.

Every command prints a JSON run document (or CSV for ``converge --format
csv``) and exits with 0 on success, 2 on a usage or precondition error, 3
when a numerical check fails and 4 when the constants table is unusable.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .constants import TABLE_VERSION, load_table
from .errors import PreconditionError, QtfaError
from .gabor import CoefficientSequence, frame_operator, janssen_operator
from .invariant import (
    analyze_translation_invariant,
    composition_translation_check,
    fourier_wigner_periodize,
    invariance_defect,
    operator_periodize,
    spreading_calculus,
    synthesize_modulation_invariant,
    synthesize_translation_invariant,
    theta,
    trig_samples,
)
from .operators import op_norm
from .phase_space import half_lattice, make_lattice
from .testkit.rng import seeded_random
from .transforms import delta, parity_matrix

log = logging.getLogger("qtfa")

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_CONSTANTS = 0, 2, 3, 4
DEFAULT_TOL = 1e-10


class UsageError(PreconditionError):
    pass


# -- encoding -----------------------------------------------------------------


def encode(x):
    """JSON-ready form: complex -> [re, im], arrays nested row-major."""
    if isinstance(x, np.ndarray):
        if np.iscomplexobj(x):
            return np.stack([x.real, x.imag], axis=-1).tolist()
        return x.tolist()
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    if isinstance(x, dict):
        return {k: encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    return x


def decode_complex(data) -> np.ndarray:
    arr = np.asarray(data, dtype=float)
    if arr.shape[-1] != 2:
        raise UsageError("complex data must be given as [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def run_document(args, inputs: dict, outputs: dict, residuals: dict) -> dict:
    return {
        "command": args.command,
        "argv": args.argv,
        "inputs": encode(inputs),
        "outputs": encode(outputs),
        "residuals": encode(residuals),
        "constants_version": TABLE_VERSION,
        "constants_checksum": load_table().checksum(),
        "seed": args.seed,
        "version": __version__,
    }


def need_seed(args) -> int:
    if args.seed is None:
        raise UsageError("this input is random; pass --seed")
    return args.seed


# -- commands -------------------------------------------------------------------


def cmd_lattice_info(args):
    lat = make_lattice(args.L, args.a, args.b)
    adj = lat.adjoint()
    try:
        half = half_lattice(lat)
        halving = {"halvable": True, "half_lattice": half.as_triple(), "odd_order": lat.L % 2 == 1}
    except PreconditionError as exc:
        halving = {"halvable": False, "reason": str(exc)}
    outputs = {
        "lattice": lat.as_triple(),
        "adjoint": adj.as_triple(),
        "covolume": str(lat.covolume()),
        "adjoint_covolume": str(adj.covolume()),
        "points": lat.count,
        "adjoint_points": adj.count,
        **halving,
    }
    return run_document(args, {"lattice": lat.as_triple()}, outputs, {}), True


def _windows(args, L):
    if args.windows == "delta":
        return delta(0, L), delta(0, L)
    seed = need_seed(args)
    return (
        seeded_random("signal", seed, L, normalize=True),
        seeded_random("signal", seed + 1, L, normalize=True),
    )


def cmd_janssen_check(args):
    lat = make_lattice(args.L, args.a, args.b)
    g, h = _windows(args, lat.L)
    direct = frame_operator(g, h, lat)
    janssen = janssen_operator(g, h, lat)
    res = op_norm(direct - janssen)
    outputs = {"frame_operator_diagonal": np.diag(direct)}
    if lat.L <= 16:
        outputs["frame_operator"] = direct
    ok = res <= args.tol
    return run_document(
        args, {"lattice": lat.as_triple(), "windows": args.windows}, outputs, {"janssen_op_norm": res}
    ), ok


def _coefficients(args, lat) -> CoefficientSequence:
    adj = lat.adjoint()
    if args.data:
        vals = decode_complex(read_json(args.data).get("values", []))
        return CoefficientSequence.on_adjoint(lat, vals)
    if args.source == "delta":
        return CoefficientSequence.delta(adj, dual_of=lat)
    if args.source == "random":
        return CoefficientSequence.on_adjoint(lat, seeded_random("coefficient", need_seed(args), adj.count))
    raise UsageError(f"source {args.source!r} does not describe coefficients")


def _operator(args, lat):
    L = lat.L
    if args.data:
        return decode_complex(read_json(args.data).get("operator", []))
    if args.source == "identity":
        return np.eye(L, dtype=complex)
    if args.source == "parity":
        return parity_matrix(L)
    if args.source == "random":
        S = seeded_random("operator", need_seed(args), (L, L))
        if args.kind == "translation":
            return operator_periodize(S, lat)
        return fourier_wigner_periodize(S, lat)
    if args.source == "random-raw":
        return seeded_random("operator", need_seed(args), (L, L))
    raise UsageError(f"source {args.source!r} does not describe an operator")


def cmd_invariant(args):
    lat = make_lattice(args.L, args.a, args.b)
    inputs = {"lattice": lat.as_triple(), "kind": args.kind, "mode": args.mode, "source": args.source}
    if args.mode == "synth":
        k = _coefficients(args, lat)
        if args.kind == "translation":
            T = synthesize_translation_invariant(k, lat)
            back = analyze_translation_invariant(T, lat).values
        else:
            T = synthesize_modulation_invariant(k, lat)
            back = trig_samples(T, lat).values
        rep = invariance_defect(T, lat, args.kind)
        rt = float(np.abs(back - k.values).max(initial=0.0))
        outputs = {"operator": T, "report": rep.to_dict()}
        return run_document(args, inputs, outputs, {"round_trip": rt, "defect": rep.max_defect}), (
            rt <= args.tol and rep.is_invariant
        )
    T = _operator(args, lat)
    if args.kind == "translation":
        seq = analyze_translation_invariant(T, lat)
        again = synthesize_translation_invariant(seq, lat)
    else:
        seq = trig_samples(T, lat)
        again = synthesize_modulation_invariant(seq, lat)
    rep = invariance_defect(T, lat, args.kind)
    rt = op_norm(again - T)
    outputs = {"coefficients": seq.to_dict(), "adjoint_points": list(seq.lattice.points), "report": rep.to_dict()}
    return run_document(args, inputs, outputs, {"round_trip": rt, "defect": rep.max_defect}), rt <= args.tol


def cmd_calculus(args):
    lat = make_lattice(args.L, args.a, args.b)
    L = lat.L
    if args.parity:
        S = T = parity_matrix(L)
    else:
        seed = need_seed(args)
        S = fourier_wigner_periodize(seeded_random("operator", seed, (L, L)), lat)
        T = fourier_wigner_periodize(seeded_random("operator", seed + 1, (L, L)), lat)
    calc = spreading_calculus(S, T, lat)
    comp = composition_translation_check(S, T, lat)
    residuals = {
        "spreading_calculus": calc.residual,
        "commutation": calc.commutation_residual,
        "weyl_symbol_calculus": calc.weyl_residual,
        "theta_round_trip": op_norm(theta(theta(S)) - S),
        "half_lattice_translation_defect": comp.max_defect,
    }
    ok = all(v <= args.tol for v in residuals.values())
    inputs = {"lattice": lat.as_triple(), "pair": "parity" if args.parity else "seeded"}
    return run_document(args, inputs, {"report": comp.to_dict()}, residuals), ok


def cmd_converge(args):
    from .continuum import DEFAULT_CONFIG, convergence_report, load_config, report_ok, rows_to_csv

    config = load_config(args.config) if args.config else DEFAULT_CONFIG
    rows = convergence_report(config)
    ok = report_ok(rows)
    if args.format == "csv":
        return rows_to_csv(rows), ok
    outputs = {"rows": [r.__dict__ for r in rows], "all_within_threshold": ok}
    return run_document(args, {"config": config}, outputs, {}), ok


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for random inputs (required when used)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="acceptance tolerance")
    common.add_argument("--out", default=None, help="write the output here instead of stdout")
    common.add_argument("--format", choices=["doc", "csv"], default="doc")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="qtfa", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"qtfa {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def lattice_args(sp):
        sp.add_argument("L", type=int)
        sp.add_argument("a", type=int)
        sp.add_argument("b", type=int)

    sp = sub.add_parser("lattice-info", parents=[common], help="lattice, adjoint, covolume, halving")
    lattice_args(sp)
    sp.set_defaults(func=cmd_lattice_info)

    sp = sub.add_parser("janssen-check", parents=[common], help="frame operator vs Janssen representation")
    lattice_args(sp)
    sp.add_argument("--windows", choices=["delta", "random"], default="random")
    sp.set_defaults(func=cmd_janssen_check)

    sp = sub.add_parser("invariant", parents=[common], help="synthesise or analyse invariant operators")
    sp.add_argument("kind", choices=["translation", "modulation"])
    sp.add_argument("mode", choices=["synth", "analyze"])
    lattice_args(sp)
    sp.add_argument(
        "--source",
        choices=["delta", "random", "identity", "parity", "random-raw"],
        default=None,
        help="built-in input (synth: delta|random; analyze: identity|parity|random|random-raw)",
    )
    sp.add_argument("--data", default=None, help="JSON file with 'values' (synth) or 'operator' (analyze)")
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("calculus", parents=[common], help="composition calculus of modulation-invariant pairs")
    lattice_args(sp)
    sp.add_argument("--parity", action="store_true", help="use S = T = P instead of a seeded pair")
    sp.set_defaults(func=cmd_calculus)

    sp = sub.add_parser("converge", parents=[common], help="continuum-bridge residual ladder")
    sp.add_argument("config", nargs="?", default=None, help="JSON config (default: built-in ladder)")
    sp.set_defaults(func=cmd_converge)
    return p


def _emit(result, args) -> None:
    text = result if isinstance(result, str) else json.dumps(result, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = argv
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "invariant" and args.source is None:
        args.source = "delta" if args.mode == "synth" else "identity"
    try:
        load_table()
        result, ok = args.func(args)
    except QtfaError as exc:
        print(f"qtfa: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    _emit(result, args)
    if not ok:
        print("qtfa: residual above tolerance", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
