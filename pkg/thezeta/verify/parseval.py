# +
import time

from thezeta.errors import DomainError, QuadratureFailure
from thezeta.integrate.families import FamilySpec, family_quadrature
from thezeta.integrate.tanhsinh import integrate_half_line
from thezeta.special.transforms import check_kind, fourier_sine, fourier_sine_g, transform_sense
from thezeta.verify.records import NO_CONVERGENCE, VerificationRecord


def parseval_check(n, a, s, kind="bose", tol=1e-8, quad_tol=1e-12):
    """
    ∫ K g dt  against  ∫ F(K) F(g) dw  for the kernel K of the
    {kind}-even family at its default scale and
    g = t^2n sin(s·arctan(t/a)) / (a²+t²)^(s/2), with F the unitary
    sine transform; the record's closed field holds the frequency side.
    """
    check_kind(kind)
    if transform_sense(kind) != "sin":
        raise DomainError(f"parseval_check: the {kind} kernel has a cosine transform")
    spec = FamilySpec(f"{kind}-even", n, a, s)
    start = time.perf_counter()

    def freq(w):
        return fourier_sine(kind, w, spec.scale) * fourier_sine_g(n, spec.a, spec.s, w)

    try:
        lhs = family_quadrature(spec, quad_tol)
        rhs = integrate_half_line(freq, tol=quad_tol, decay_rate=spec.a.real)
    except QuadratureFailure as err:
        ms = 1000 * (time.perf_counter() - start)
        return VerificationRecord(spec, "parseval", tol=tol, status=NO_CONVERGENCE, runtime_ms=ms, message=str(err))
    ms = 1000 * (time.perf_counter() - start)
    return VerificationRecord(
        spec, "parseval", rhs.value, lhs.value, tol=tol, n_evals=lhs.n_evals + rhs.n_evals, runtime_ms=ms
    )


def test_parseval():
    for n, a, s in [(0, 1.0, 3.0), (1, 2.0, 6.0), (0, 1.0, 2.0)]:
        rec = parseval_check(n, a, s)
        assert rec.status == "PASS", rec
    rec = parseval_check(0, 1.0, 2.0)
    assert abs(rec.closed - 0.0724670334) < 1e-10
    assert abs(rec.quad - 0.0724670334) < 1e-10


def test_parseval_complex():
    rec = parseval_check(1, 1.5 + 0.5j, 4.5 - 1j)
    assert rec.status == "PASS", rec


def test_parseval_kernels():
    import pytest

    from thezeta.closed.lemma import lemma31_rhs

    for kind in ["sinh", "fermi"]:
        for n, a, s in [(0, 1.0, 2.0), (1, 0.7, 3.7), (2, 2.3, 5.5)]:
            rec = parseval_check(n, a, s, kind)
            assert rec.status == "PASS", (kind, rec)
            if kind == "sinh":
                assert abs(lemma31_rhs(n, a, s, "corrected") - rec.closed) < 1e-9 * max(1, abs(rec.closed))
    with pytest.raises(DomainError):
        parseval_check(0, 1.0, 2.0, "cosh")


if __name__ == "__main__":
    test_parseval()
    test_parseval_complex()
    test_parseval_kernels()
