# +
import thezeta.cl as cline
from thezeta.errors import DomainError
from thezeta.verify.resolve import errata
from thezeta.verify.sweep import ACCEPT_TOL, Sweeper


def run_errata(tol=ACCEPT_TOL, workers=1, logfile=None):
    """full hypothesis resolution; the ErrataReport as a dict"""
    sweeper = Sweeper(tol=tol, workers=workers, logfile=logfile)
    return errata(tol=tol, sweeper=sweeper).as_dict()


def summary(report):
    lines = [f"{family:<14} {d['canonical']}" for family, d in report["families"].items()]
    lines += [f"mellin-{kind:<5} c = {d['constant']:g}" for kind, d in report["kernels"].items()]
    lines += [f"discrepancies: {len(report['discrepancies'])}"]
    return "\n".join(lines) + "\n"


def command(sub, name="errata"):
    parser = sub.add_parser(name, parents=[cline.common()], help="resolve every hypothesis, write the errata report")
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--logfile", default=None)
    parser.set_defaults(run=run)
    return parser


def run(args):
    fmt = cline.output_format(args)
    if fmt == "csv":
        raise DomainError("errata: the report is written as json or text")
    kwargs = cline.options(run_errata, args.args, tol=args.tol, workers=args.workers, logfile=args.logfile)
    report = run_errata(**kwargs)
    text = cline.dumps(report) + "\n" if fmt == "json" else summary(report)
    cline.emit(text, args)
    return cline.OK


def test_errata_command(tmp_path=None):
    import json
    import os
    import tempfile

    from thezeta.cl.__main__ import main
    from thezeta.closed import hypotheses

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    path = os.path.join(folder, "errata.json")
    marks = hypotheses.snapshot()
    try:
        assert main(["errata", "--out", path]) == 0
        with open(path) as f:
            report = json.load(f)
        assert report["families"]["bose-even"]["canonical"] == "printed"
        assert report["families"]["fermi-odd"]["canonical"] == "corrected"
        assert report["families"]["parseval-sinh"]["canonical"] == "corrected"
        assert {k: d["constant"] for k, d in report["kernels"].items()} == {
            "bose": 1.0,
            "fermi": 1.0,
            "sinh": 2.0,
            "cosh": 2.0,
        }
        # nothing survives a zero tolerance
        assert main(["errata", "--tol", "0", "--out", path]) == 1
        assert main(["errata", "--format", "csv"]) == 2
    finally:
        hypotheses.restore(marks)


if __name__ == "__main__":
    test_errata_command()
