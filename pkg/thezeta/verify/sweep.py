# +
import time
from concurrent.futures import ThreadPoolExecutor

import torch

from thezeta.closed import hypotheses
from thezeta.closed.theorems import closed_form
from thezeta.errors import DomainError, PoleProximity, QuadratureFailure
from thezeta.integrate.families import FamilySpec, family_quadrature
from thezeta.util.parallel import balance_work, index_gather, rank, world_size
from thezeta.util.util import date
from thezeta.verify.records import (
    NO_CONVERGENCE,
    SKIPPED_POLE,
    STATUSES,
    VerificationRecord,
    summarize,
)

ACCEPT_TOL = 1e-8
QUAD_TOL = 1e-11


def quadrature_spec(spec, cand):
    """the integral a candidate claims to evaluate; an explicit kernel_scale on spec wins"""
    scale = spec.kernel_scale if spec.kernel_scale is not None else cand.scale
    return spec.replace(kernel_scale=scale, reading=cand.reading)


def _key(spec, quad_tol):
    return (spec.family, spec.n, spec.a, spec.s, spec.scale, spec.trig, quad_tol)


def verify_point(spec, candidate="canonical", tol=ACCEPT_TOL, quad_tol=QUAD_TOL, cache=None):
    """
    Compares closed_form(spec, candidate) with the quadrature of the
    integral the candidate refers to. PoleProximity in the closed form
    gives SKIPPED_POLE, QuadratureFailure gives NO_CONVERGENCE.
    cache (dict) shares quadratures between candidates.
    """
    if spec.is_open:
        raise DomainError(f"{spec.family} has no closed form to verify")
    cand = hypotheses.candidate(spec.family, candidate)
    start = time.perf_counter()
    ms = lambda: 1000 * (time.perf_counter() - start)
    try:
        closed = closed_form(spec.family, spec.n, spec.a, spec.s, cand.id)
    except PoleProximity as err:
        return VerificationRecord(spec, cand.id, tol=tol, status=SKIPPED_POLE, runtime_ms=ms(), message=str(err))
    qspec = quadrature_spec(spec, cand)
    key = _key(qspec, quad_tol)
    try:
        if cache is not None and key in cache:
            out = cache[key]
        else:
            out = family_quadrature(qspec, quad_tol)
            if cache is not None:
                cache[key] = out
    except QuadratureFailure as err:
        return VerificationRecord(
            spec, cand.id, closed, tol=tol, status=NO_CONVERGENCE, runtime_ms=ms(), message=str(err)
        )
    return VerificationRecord(spec, cand.id, closed, out.value, tol=tol, n_evals=out.n_evals, runtime_ms=ms())


def _points(grid):
    points = []
    for item in grid:
        if isinstance(item, FamilySpec):
            points.append((item, "canonical"))
        else:
            spec, cand = item
            points.append((spec, cand))
    return points


_nan = float("nan")


def _encode(rec):
    closed = _nan if rec.closed is None else rec.closed
    quad = _nan if rec.quad is None else rec.quad
    return [
        complex(closed).real,
        complex(closed).imag,
        complex(quad).real,
        complex(quad).imag,
        STATUSES.index(rec.status),
        rec.n_evals,
        rec.runtime_ms,
    ]


def _decode(row, spec, cand, tol):
    cr, ci, qr, qi, status, n_evals, runtime_ms = row.tolist()
    closed = None if cr != cr else complex(cr, ci)
    quad = None if qr != qr else complex(qr, qi)
    return VerificationRecord(spec, cand, closed, quad, tol, STATUSES[int(status)], int(n_evals), runtime_ms)


def sweep(grid, tol=ACCEPT_TOL, quad_tol=QUAD_TOL, workers=1, cache=None):
    """
    One record per (spec, candidate) of grid, in grid order.
    A bare FamilySpec stands for (spec, "canonical").
    With mpi the points are divided between the ranks and the
    records gathered on all of them; otherwise workers > 1 uses a
    thread pool.
    """
    points = _points(grid)
    if len(points) == 0:
        raise DomainError("sweep: empty grid")
    # canonical ids are fixed before any parallel work
    points = [(spec, hypotheses.candidate(spec.family, cand).id) for spec, cand in points]
    cache = {} if cache is None else cache
    job = lambda p: verify_point(p[0], p[1], tol, quad_tol, cache)

    if world_size() > 1:
        start, end = balance_work(len(points), world_size())[rank()]
        local = [job(p) for p in points[start:end]]
        rows = torch.tensor([_encode(rec) for rec in local], dtype=torch.float64).view(-1, 7)
        rows = index_gather(rows, slice(start, end), len(points))
        return [_decode(row, spec, cand, tol) for row, (spec, cand) in zip(rows, points)]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, points))
    return [job(p) for p in points]


def theorem_grid(family="bose-even", n_range=range(4), a_values=(0.7, 1.0, 2.3), offsets=(1.5, 3.7, 6.0)):
    """points (n, a, s = power + offset) for one family; 36 by default"""
    probe = FamilySpec(family, 0, 1.0, 10.0)
    if probe.is_open:
        raise DomainError(f"{family} has no closed form")
    grid = []
    for n in n_range:
        power = 2 * n + (1 if probe.parity == "odd" else 0)
        for a in a_values:
            for off in offsets:
                grid.append(FamilySpec(family, n, a, power + off))
    return grid


def resolution_grid(family, n_range=range(4), a_values=(0.7, 1.0, 2.3), offsets=(1.5, 3.7)):
    """24 points by default"""
    return theorem_grid(family, n_range, a_values, offsets)


class Sweeper:
    """
    Runs sweeps and logs "date message" lines to logfile (rank 0).
    The logfile is truncated unless append.
    """

    def __init__(self, tol=ACCEPT_TOL, quad_tol=QUAD_TOL, workers=1, logfile=None, stdout=False, append=False):
        self.tol = tol
        self.quad_tol = quad_tol
        self.workers = workers
        self.logfile = logfile
        self.stdout = stdout
        self.cache = {}
        self.rank = rank()
        mode = "a" if append else "w"
        self.log(f"sweeper: tol={tol} quad_tol={quad_tol} workers={workers} ranks={world_size()}", mode=mode)

    def log(self, mssge, mode="a"):
        if self.rank != 0:
            return
        line = f"{date()} {mssge}"
        if self.logfile:
            with open(self.logfile, mode) as f:
                f.write(line + "\n")
        if self.stdout:
            print(line)

    def run(self, grid, label="sweep"):
        start = time.perf_counter()
        records = sweep(grid, self.tol, self.quad_tol, self.workers, self.cache)
        self.log(f"{label}: {len(records)} points {summarize(records)} ({time.perf_counter() - start:.2f} s)")
        for rec in records:
            if not rec.passed:
                self.log(f"    {rec}")
        return records


def test_verify_point():
    from thezeta.verify.resolve import resolved

    resolved()
    rec = verify_point(FamilySpec("bose-even", 0, 1.0, 2.0), "printed")
    assert rec.status == "PASS"
    assert abs(rec.closed - 0.0724670334) < 1e-10 and abs(rec.quad - 0.0724670334) < 1e-10
    rec = verify_point(FamilySpec("bose-even", 1, 1.0, 5.0))
    assert rec.status == "PASS" and rec.candidate == "printed"
    rec = verify_point(FamilySpec("bose-even", 1, 1.0, 3.0))
    assert rec.status == SKIPPED_POLE and rec.quad is None
    # the quadrature side follows the candidate's kernel
    rec = verify_point(FamilySpec("fermi-even", 1, 1.0, 4.5), "corrected@pi")
    assert rec.status == "FAIL"


def test_no_convergence():
    import thezeta.verify.sweep as sw
    from thezeta.errors import NoConvergence

    def failing(spec, tol):
        raise NoConvergence("forced")

    original = sw.family_quadrature
    sw.family_quadrature = failing
    try:
        rec = verify_point(FamilySpec("bose-even", 0, 1.0, 2.0), "printed")
    finally:
        sw.family_quadrature = original
    assert rec.status == NO_CONVERGENCE and rec.closed is not None


def test_sweep_order():
    import pytest

    grid = [
        (FamilySpec("bose-even", 0, 1.0, 2.0), "printed"),
        (FamilySpec("bose-even", 1, 1.0, 3.0), "printed"),
        (FamilySpec("sinh-even", 1, 2.0, 6.0), "printed"),
        (FamilySpec("bose-odd", 0, 1.0, 4.0), "corrected"),
    ]
    serial = sweep(grid)
    threaded = sweep(grid, workers=3)
    assert [r.spec for r in serial] == [g[0] for g in grid]
    assert [r.status for r in serial] == ["PASS", SKIPPED_POLE, "PASS", "PASS"]
    assert all(a.same_result(b) for a, b in zip(serial, threaded))
    assert len(sweep(grid[:1])) == 1
    with pytest.raises(DomainError):
        sweep([])


def test_theorem_grids():
    """the bose and sinh even identities on their 36-point grids"""
    from thezeta.verify.resolve import resolved

    resolved()
    sweeper = Sweeper()
    for family in ["bose-even", "sinh-even"]:
        grid = theorem_grid(family)
        assert len(grid) == 36
        records = sweeper.run(grid, family)
        assert all(r.passed for r in records), [r for r in records if not r.passed]


def test_lemma_on_theorem_grid():
    """lemma21_rhs by all three routes against the closed form and the quadrature"""
    from thezeta.closed.lemma import METHODS, lemma21_rhs
    from thezeta.closed.theorems import closed_even

    grid = theorem_grid("bose-even")
    for i in [0, 8, 13, 20, 24, 31]:
        spec = grid[i]
        ref = closed_even("bose", spec.n, spec.a, spec.s, "printed")
        quad = family_quadrature(spec, QUAD_TOL).value
        assert abs(quad - ref) < ACCEPT_TOL * max(1, abs(ref)), spec
        for method in METHODS:
            got = lemma21_rhs(spec.n, spec.a, spec.s, method)
            assert abs(got - ref) < ACCEPT_TOL * max(1, abs(ref)), (spec, method, got, ref)


def test_tightening_tol():
    from thezeta.verify.resolve import resolved

    resolved()
    points = [
        FamilySpec("bose-even", 1, 0.7, 5.7),
        FamilySpec("sinh-even", 2, 2.3, 5.5),
        FamilySpec("fermi-even", 0, 1.0, 3.7),
        FamilySpec("bose-odd", 1, 1.0, 6.5),
        FamilySpec("sinh-odd", 0, 2.3, 2.5),
        FamilySpec("sech-odd", 1, 0.7, 4.7),
    ]
    cache = {}
    for spec in points:
        loose = verify_point(spec, tol=1e-6, cache=cache)
        tight = verify_point(spec, tol=1e-8, cache=cache)
        assert loose.closed == tight.closed and loose.quad == tight.quad
        if loose.passed and not tight.passed:
            qspec = quadrature_spec(spec, hypotheses.candidate(spec.family))
            margin = family_quadrature(qspec, QUAD_TOL).err_estimate
            assert tight.rel_err <= 1e-8 + margin, (spec, tight.rel_err, margin)
        # and never the other way round
        assert loose.passed or not tight.passed


def test_even_families_real():
    from thezeta.verify.resolve import resolved

    resolved()
    for family in ["bose-even", "sinh-even", "fermi-even", "sech-even"]:
        for n, a, s in [(1, 0.7, 5.7), (2, 2.3, 7.5), (0, 1.0, 3.7)]:
            rec = verify_point(FamilySpec(family, n, a, s))
            assert rec.passed, rec
            assert abs(rec.quad.imag) <= 1e-12, (family, n, rec.quad)
            assert abs(rec.closed.imag) <= 1e-12 * max(1, abs(rec.closed)), (family, n, rec.closed)


def test_sweeper_log(tmp_path=None):
    import os
    import tempfile

    folder = tempfile.mkdtemp() if tmp_path is None else str(tmp_path)
    logfile = os.path.join(folder, "sweep.log")
    sweeper = Sweeper(logfile=logfile)
    sweeper.run([(FamilySpec("bose-even", 0, 1.0, 2.0), "printed")], "single")
    with open(logfile) as f:
        lines = f.readlines()
    assert len(lines) == 2 and "single: 1 points" in lines[1]


if __name__ == "__main__":
    test_verify_point()
    test_no_convergence()
    test_sweep_order()
    test_theorem_grids()
    test_lemma_on_theorem_grid()
    test_tightening_tol()
    test_even_families_real()
    test_sweeper_log()
