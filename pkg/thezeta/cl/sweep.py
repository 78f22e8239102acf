# +
import thezeta.cl as cline
from thezeta.integrate.families import FamilySpec
from thezeta.io.recordio import read_grid
from thezeta.verify.records import FAIL, NO_CONVERGENCE, summarize
from thezeta.verify.sweep import ACCEPT_TOL, QUAD_TOL, Sweeper


def run_sweep(grid, tol=ACCEPT_TOL, quad_tol=QUAD_TOL, workers=1, logfile=None):
    """
    grid: list of FamilySpec or (FamilySpec, candidate); families used
    with the canonical candidate are resolved first (at ACCEPT_TOL).
    """
    canonical = []
    for item in grid:
        spec, cand = (item, "canonical") if isinstance(item, FamilySpec) else item
        if cand == "canonical":
            canonical.append(spec.family)
    if canonical:
        cline.ensure_resolved(canonical, Sweeper(workers=workers, logfile=logfile))
    sweeper = Sweeper(tol, quad_tol, workers, logfile, append=bool(canonical))
    return sweeper.run(grid, "grid")


def command(sub, name="sweep"):
    parser = sub.add_parser(name, parents=[cline.common()], help="verify closed forms over a grid file")
    parser.add_argument("--grid", required=True, metavar="FILE", help="JSON array of FamilySpec objects")
    parser.add_argument("--tol", type=float, default=None, help="acceptance tolerance (relative)")
    parser.add_argument("--quad-tol", dest="quad_tol", type=float, default=None)
    parser.add_argument("--workers", type=int, default=None, help="threads (ignored under mpi)")
    parser.add_argument("--logfile", default=None)
    parser.set_defaults(run=run)
    return parser


def run(args):
    kwargs = cline.options(
        run_sweep, args.args, tol=args.tol, quad_tol=args.quad_tol, workers=args.workers, logfile=args.logfile
    )
    records = run_sweep(read_grid(args.grid), **kwargs)
    cline.emit_records(records, args)
    counts = summarize(records)
    cline.diagnose(" ".join(f"{k}={v}" for k, v in counts.items()))
    return cline.FAILED if counts[FAIL] + counts[NO_CONVERGENCE] > 0 else cline.OK


def _write_grid(path, items):
    import json

    with open(path, "w") as f:
        json.dump(items, f)


def test_sweep_command(tmp_path=None):
    import csv
    import json
    import os
    import tempfile

    from thezeta.cl.__main__ import main

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    grid = os.path.join(folder, "grid.json")
    out = os.path.join(folder, "records.csv")
    log = os.path.join(folder, "sweep.log")
    _write_grid(
        grid,
        [
            {"family": "bose-even", "n": 0, "a": [1, 0], "s": [2, 0], "candidate": "printed"},
            {"family": "sinh-even", "n": 1, "a": [2.3, 0], "s": [3.5, 0], "candidate": "printed"},
            {"family": "bose-even", "n": 1, "a": [1, 0], "s": [3, 0], "candidate": "printed"},
        ],
    )
    argv = ["sweep", "--grid", grid, "--tol", "1e-8", "--out", out, "--logfile", log]
    assert main(argv) == 0
    with open(out) as f:
        rows = list(csv.DictReader(f))
    assert [r["status"] for r in rows] == ["PASS", "PASS", "SKIPPED_POLE"]
    with open(log) as f:
        assert "grid: 3 points" in f.read()

    # ARGS file values apply, flags win over them
    args = os.path.join(folder, "ARGS")
    with open(args, "w") as f:
        f.write("tol = 1e-6\nworkers = 2\n")
    out = os.path.join(folder, "records.json")
    assert main(["sweep", "--grid", grid, "--out", out, "--args", args]) == 0
    with open(out) as f:
        assert {d["tol"] for d in json.load(f)} == {1e-6}
    assert main(["sweep", "--grid", grid, "--out", out, "--args", args, "--tol", "1e-9"]) == 0
    with open(out) as f:
        assert {d["tol"] for d in json.load(f)} == {1e-9}

    # a failing candidate
    _write_grid(grid, [{"family": "sinh-odd", "n": 0, "a": [1, 0], "s": [2.5, 0], "candidate": "printed"}])
    assert main(["sweep", "--grid", grid, "--out", out]) == 1

    # usage errors
    _write_grid(grid, [{"family": "open-T", "n": 1, "q": 1.0}])
    assert main(["sweep", "--grid", grid, "--out", out]) == 2
    assert main(["sweep", "--grid", os.path.join(folder, "missing.json")]) == 2
    _write_grid(grid, [])
    assert main(["sweep", "--grid", grid]) == 2


if __name__ == "__main__":
    test_sweep_command()
