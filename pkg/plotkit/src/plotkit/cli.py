"""plotkit FIGSPEC.cfg: render one figure from sweep CSVs.

Exit codes: 0 rendered, 1 input-data problem (schema mismatch, missing
or empty CSV), 2 bad figure specification.
"""

import argparse
import sys

from .csvdata import SchemaError
from .figspec import FigSpecError, load_figspec
from .render import render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="Render profile, velocity and plate-compare figures "
                    "from cp-spectra CSV tables")
    parser.add_argument("figspec", help="figure specification file")
    args = parser.parse_args(argv)

    try:
        spec = load_figspec(args.figspec)
    except OSError as exc:
        print(f"cannot read figspec: {exc}", file=sys.stderr)
        return 2
    except FigSpecError as exc:
        print(f"bad figspec: {exc}", file=sys.stderr)
        return 2

    try:
        render(spec)
    except SchemaError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cannot write figure: {exc}", file=sys.stderr)
        return 1

    print(f"wrote {spec.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
