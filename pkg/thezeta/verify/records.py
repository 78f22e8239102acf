# +
import math

from thezeta.integrate.families import FamilySpec

PASS = "PASS"
FAIL = "FAIL"
SKIPPED_POLE = "SKIPPED_POLE"
NO_CONVERGENCE = "NO_CONVERGENCE"
STATUSES = (PASS, FAIL, SKIPPED_POLE, NO_CONVERGENCE)

FIELDS = (
    "family",
    "n",
    "a",
    "s",
    "candidate",
    "closed",
    "quad",
    "abs_err",
    "rel_err",
    "tol",
    "status",
    "n_evals",
    "runtime_ms",
)


def _pair(z):
    return None if z is None else [z.real, z.imag]


def _unpair(p):
    return None if p is None else complex(*p)


class VerificationRecord:
    """
    closed-form vs quadrature at one point; rel_err = abs_err / max(1, |quad|)
    and status = PASS iff rel_err <= tol (when both values exist).
    """

    def __init__(
        self,
        spec,
        candidate,
        closed=None,
        quad=None,
        tol=1e-8,
        status=None,
        n_evals=0,
        runtime_ms=0.0,
        message=None,
    ):
        self.spec = spec
        self.candidate = candidate
        self.closed = None if closed is None else complex(closed)
        self.quad = None if quad is None else complex(quad)
        self.tol = tol
        self.n_evals = n_evals
        self.runtime_ms = runtime_ms
        self.message = message
        if self.closed is not None and self.quad is not None:
            self.abs_err = abs(self.closed - self.quad)
            self.rel_err = self.abs_err / max(1.0, abs(self.quad))
        else:
            self.abs_err = None
            self.rel_err = None
        if status is None:
            if self.rel_err is None:
                raise ValueError("status is required when closed or quad is missing")
            status = PASS if self.rel_err <= tol else FAIL
        elif status not in STATUSES:
            raise ValueError(f"unknown status {status!r}")
        self.status = status

    @property
    def passed(self):
        return self.status == PASS

    def as_dict(self):
        return dict(
            family=self.spec.family,
            n=self.spec.n,
            a=_pair(self.spec.a),
            s=_pair(self.spec.s),
            candidate=self.candidate,
            closed=_pair(self.closed),
            quad=_pair(self.quad),
            abs_err=self.abs_err,
            rel_err=self.rel_err,
            tol=self.tol,
            status=self.status,
            n_evals=self.n_evals,
            runtime_ms=self.runtime_ms,
        )

    @staticmethod
    def from_dict(d):
        spec = FamilySpec(d["family"], d["n"], _unpair(d["a"]), _unpair(d["s"]))
        return VerificationRecord(
            spec,
            d["candidate"],
            _unpair(d["closed"]),
            _unpair(d["quad"]),
            d["tol"],
            d["status"],
            d["n_evals"],
            d["runtime_ms"],
        )

    def same_result(self, other):
        """equal apart from runtime"""
        a, b = self.as_dict(), other.as_dict()
        a.pop("runtime_ms"), b.pop("runtime_ms")
        return a == b

    def __repr__(self):
        err = "-" if self.rel_err is None else f"{self.rel_err:.2e}"
        return f"VerificationRecord({self.spec!r}, {self.candidate}, rel_err={err}, {self.status})"


def summarize(records):
    counts = {status: 0 for status in STATUSES}
    for rec in records:
        counts[rec.status] += 1
    return counts


class ErrataReport:
    """
    families:  family -> canonical candidate, printed form, evidence counts
    kernels:   kernel -> certified constant c of the Mellin integral
    discrepancies: printed statements that differ from the canonical form
    """

    def __init__(self):
        self.families = {}
        self.kernels = {}
        self.discrepancies = []

    def add_family(self, family, canonical, description, evidence):
        self.families[family] = dict(canonical=canonical, description=description, evidence=evidence)
        if canonical != "printed":
            self.discrepancies.append(
                dict(
                    where=family,
                    printed="printed",
                    canonical=canonical,
                    description=description,
                    evidence=evidence,
                )
            )

    def add_kernel(self, kind, candidate, constant, printed, evidence):
        self.kernels[kind] = dict(candidate=candidate, constant=constant, printed=printed, evidence=evidence)
        if candidate != "printed":
            self.discrepancies.append(
                dict(
                    where=f"mellin-{kind}",
                    printed="printed",
                    canonical=candidate,
                    description=f"{constant:g} x {printed}",
                    evidence=evidence,
                )
            )

    def merge(self, other):
        self.families.update(other.families)
        self.kernels.update(other.kernels)
        self.discrepancies += other.discrepancies
        return self

    def as_dict(self):
        return dict(families=self.families, kernels=self.kernels, discrepancies=self.discrepancies)


def test_record():
    spec = FamilySpec("bose-even", 0, 1.0, 2.0)
    rec = VerificationRecord(spec, "printed", 0.07246703342411321, 0.0724670334241132, tol=1e-8)
    assert rec.status == PASS and rec.rel_err < 1e-15
    d = rec.as_dict()
    assert tuple(d) == FIELDS
    assert d["a"] == [1.0, 0.0]
    assert VerificationRecord.from_dict(d).same_result(rec)
    bad = VerificationRecord(spec, "printed", 1.0 + 1e-6, 1.0, tol=1e-8)
    assert bad.status == FAIL
    # relative to max(1, |quad|)
    small = VerificationRecord(spec, "printed", 2e-9, 1e-9, tol=1e-8)
    assert small.status == PASS and math.isclose(small.rel_err, 1e-9)
    skipped = VerificationRecord(spec, "printed", status=SKIPPED_POLE)
    assert skipped.as_dict()["closed"] is None and skipped.rel_err is None


def test_errata():
    report = ErrataReport()
    report.add_family("bose-even", "printed", "P1", {"points": 4})
    report.add_family("sech-odd", "corrected", "4 P4", {"points": 4})
    report.add_kernel("sinh", "double", 2.0, "Γ(s)(ζ(s,a) - 2^-s ζ(s,a/2))", {"points": 3})
    d = report.as_dict()
    assert set(d["families"]) == {"bose-even", "sech-odd"}
    assert [x["where"] for x in d["discrepancies"]] == ["sech-odd", "mellin-sinh"]
    assert summarize([]) == {s: 0 for s in STATUSES}


if __name__ == "__main__":
    test_record()
    test_errata()
