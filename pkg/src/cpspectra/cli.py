"""cp-spectra command line: sweep, validate, point.

Exit codes: 0 success, 1 validation failure, 2 configuration error.
"""

import argparse
import sys

from .config import ConfigError, load_config
from .errors import CpSpectraError
from .spectroscopy import observables
from .sweep import run_sweep, write_csv
from .validation import run_validation


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cp-spectra",
        description="Medium-induced transition rates and resonant shifts "
                    "for an atom moving between two dielectric plates")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run the configured sweep and write a CSV")
    p_sweep.add_argument("--config", required=True, help="scenario config path")
    p_sweep.add_argument("--out", required=True, help="output CSV path")

    sub.add_parser("validate", help="run the cross-oracle invariant suite")

    p_point = sub.add_parser("point", help="single evaluation, human readable")
    p_point.add_argument("--config", required=True, help="scenario config path")
    return parser


def _load(path):
    try:
        return load_config(path)
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        raise SystemExit(2)
    except ConfigError as exc:
        print(exc, file=sys.stderr)
        raise SystemExit(2)


def _cmd_sweep(args) -> int:
    cfg = _load(args.config)
    table = run_sweep(cfg)
    write_csv(table, args.out)
    print(f"{len(table.rows)} rows ({table.kind} sweep) -> {args.out}")
    return 0


def _cmd_validate(_args) -> int:
    results = run_validation()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _cmd_point(args) -> int:
    cfg = _load(args.config)
    try:
        res = observables(cfg.cavity_setup(), cfg.transition(), cfg.quadrature)
    except CpSpectraError as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return 1
    print(f"omega_tilde        {cfg.omega_mn:.6e} rad/s")
    print(f"detuning           {res.detuning:.6e} rad/s")
    print(f"gamma_induced      {res.gamma_induced:.6e} 1/s")
    print(f"shift_res          {res.shift_res:.6e} rad/s")
    print(f"gamma_free         {res.gamma_free:.6e} 1/s")
    print(f"enhancement        {res.enhancement:.6e}")
    print(f"flags              {';'.join(sorted(res.flags)) or '-'}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"sweep": _cmd_sweep, "validate": _cmd_validate,
               "point": _cmd_point}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
