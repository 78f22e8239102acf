# +
import argparse
import csv
import io
import sys

from thezeta.closed import hypotheses
from thezeta.errors import DomainError
from thezeta.io.recordio import FORMATS, dumps, format_records, guess_format, write_text
from thezeta.util.parallel import if_master
from thezeta.util.util import get_default_args, read_args, update_args

# exit codes
OK = 0
FAILED = 1
USAGE = 2


def parse_complex(text):
    """
    "RE" or "RE,IM" -> complex. A negative value with an imaginary
    part needs the --flag=RE,IM spelling.
    """
    parts = text.split(",")
    try:
        if len(parts) > 2:
            raise ValueError
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE[,IM], got {text!r}")
    return complex(re, im)


def pair(z):
    if z is None:
        return None
    z = complex(z)
    return [z.real, z.imag]


def common():
    """flags shared by every subcommand"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help="output format (default: from the --out extension, else json)",
    )
    parent.add_argument("--out", metavar="FILE", default=None, help="write the output to FILE instead of stdout")
    parent.add_argument(
        "--args",
        metavar="FILE",
        default=None,
        help='ARGS file of "key = value" lines overriding keyword defaults',
    )
    return parent


def options(func, args_file=None, **flags):
    """
    Keyword arguments for func: its defaults, updated by the ARGS file,
    updated by the flags that were given (not None).
    """
    kwargs = get_default_args(func)
    if args_file is not None:
        try:
            update_args(kwargs, read_args(args_file))
        except (OSError, RuntimeError, ValueError, SyntaxError) as err:
            raise DomainError(f"--args {args_file}: {err}")
    update_args(kwargs, {k: v for k, v in flags.items() if v is not None})
    return kwargs


def output_format(args):
    if args.format is not None:
        return args.format
    return guess_format(args.out) if args.out else "json"


def ensure_resolved(names, sweeper=None):
    """runs hypothesis resolution for the families without a canonical mark"""
    from thezeta.verify.resolve import resolve_hypotheses

    for family in dict.fromkeys(names):
        if not hypotheses.is_resolved(family):
            resolve_hypotheses(family, sweeper=sweeper)


@if_master
def echo(text, stream=None):
    print(text, end="", file=sys.stdout if stream is None else stream)


def diagnose(text):
    echo(f"thezeta: {text}\n", sys.stderr)


def render(result, fmt="json"):
    """result: a flat dict of scalars, strings and [re, im] pairs"""
    if fmt == "json":
        return dumps(result) + "\n"
    flat = {}
    for key, value in result.items():
        if isinstance(value, list) and len(value) == 2:
            flat[f"{key}_re"], flat[f"{key}_im"] = value
        else:
            flat[key] = value
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: "" if v is None else repr(v) if isinstance(v, float) else v for k, v in flat.items()})
        return buf.getvalue()
    if fmt == "text":
        width = max(len(k) for k in flat)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat.items())
    raise DomainError(f"unknown format {fmt!r}, expected one of {FORMATS}")


def emit(text, args):
    if args.out:
        write_text(text, args.out)
    else:
        echo(text)


def emit_result(result, args):
    emit(render(result, output_format(args)), args)


def emit_records(records, args):
    emit(format_records(records, output_format(args)), args)


def test_parse_complex():
    import pytest

    assert parse_complex("2") == 2
    assert parse_complex("1,0.5") == complex(1, 0.5)
    assert parse_complex("-2.5") == -2.5
    for bad in ["", "1,2,3", "x", "1,"]:
        with pytest.raises(argparse.ArgumentTypeError):
            parse_complex(bad)


def test_render():
    result = dict(family="bose-even", n=0, closed=[0.07246703342411321, 0.0])
    assert render(result).startswith("{")
    lines = render(result, "csv").splitlines()
    assert lines[0] == "family,n,closed_re,closed_im"
    assert float(lines[1].split(",")[2]) == 0.07246703342411321
    assert render(result, "text").splitlines()[0].split() == ["family", "bose-even"]


def test_options(tmp_path=None):
    import os
    import tempfile

    import pytest

    def job(grid, tol=1e-8, workers=1, logfile=None):
        pass

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "ARGS")
    with open(path, "w") as f:
        f.write("tol = 1e-6\nworkers = 4  # threads\n")
    assert options(job, path, workers=2) == {"tol": 1e-6, "workers": 2, "logfile": None}
    assert options(job) == {"tol": 1e-8, "workers": 1, "logfile": None}
    with open(path, "w") as f:
        f.write("tol\n")
    with pytest.raises(DomainError):
        options(job, path)
    with pytest.raises(DomainError):
        options(job, os.path.join(folder, "missing"))


if __name__ == "__main__":
    test_parse_complex()
    test_render()
    test_options()
