# +
"""
python -m thezeta.cl {eval, zeta, transform, sweep, errata} [flags]

exit codes: 0 success, 1 a failed verification (or no unique
canonical candidate), 2 usage error.
"""
import argparse
import sys

import thezeta.cl as cline
from thezeta.cl import errata, evaluate, sweep, transform, zeta
from thezeta.errors import AmbiguousResolution, DomainError, ZetaError
from thezeta.util.parallel import mpi_init

COMMANDS = {
    "eval": evaluate,
    "zeta": zeta,
    "transform": transform,
    "sweep": sweep,
    "errata": errata,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="thezeta",
        description="closed forms and quadrature checks of Hurwitz zeta integrals",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, module in COMMANDS.items():
        module.command(sub, name)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return cline.USAGE if err.code is None else err.code
    mpi_init()
    try:
        return args.run(args)
    except AmbiguousResolution as err:
        cline.diagnose(err)
        return cline.FAILED
    except DomainError as err:
        cline.diagnose(err)
        return cline.USAGE
    except ZetaError as err:
        cline.diagnose(f"{err.__class__.__name__}: {err}")
        return cline.FAILED
    except OSError as err:
        cline.diagnose(err)
        return cline.USAGE


def test_usage():
    assert main([]) == 2
    assert main(["--help"]) == 0
    assert main(["integrate"]) == 2


if __name__ == "__main__":
    sys.exit(main())
