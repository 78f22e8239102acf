# +
from math import ceil, exp, factorial, pi

import torch
from scipy.special import bernoulli

from thezeta.closed.hypotheses import canonical
from thezeta.errors import DomainError, PoleProximity
from thezeta.integrate.tanhsinh import integrate_half_line
from thezeta.special.gamma import DELTA, gamma
from thezeta.special.transforms import KERNELS, arctan_sine, check_kind
from thezeta.util.tensors import (
    as_complex,
    check_finite,
    cpow,
    expm1,
    scalar_io,
    to_complex,
)

EM_SHIFT = 15
EM_TERMS = 15

_b = bernoulli(2 * EM_TERMS)
# B_2j / (2j)!
_em_coef = [float(_b[2 * j]) / factorial(2 * j) for j in range(1, EM_TERMS + 1)]


def zeta_params(s, a, where="hurwitz_zeta"):
    s, a = torch.broadcast_tensors(as_complex(s), as_complex(a))
    if (a.real <= 0).any():
        i = int(torch.argmin(a.real.reshape(-1)))
        raise DomainError(f"{where}: Re(a) should be positive, got a={a.reshape(-1)[i].item()}")
    d = (s - 1).abs()
    if (d < DELTA).any():
        i = int(torch.argmin(d.reshape(-1)))
        raise PoleProximity(where, s.reshape(-1)[i].item(), 1.0, DELTA)
    return s, a


def em_shift(s, a):
    """
    Number of terms summed directly before the Euler–Maclaurin tail;
    the tail needs |s| + 2*EM_TERMS < 1.5π (a + N).
    """
    reach = ceil((float(s.abs().max()) + 2 * EM_TERMS) / (1.5 * pi) - float(a.real.min()))
    return max(EM_SHIFT + ceil(float(s.imag.abs().max()) / 2), reach)


def euler_maclaurin(s, a):
    n = em_shift(s, a)
    k = torch.arange(n, dtype=torch.float64)
    head = cpow(a[..., None] + k, -s[..., None]).sum(dim=-1)
    x = a + n
    xs = cpow(x, -s)
    tail = x * xs / (s - 1) + xs / 2
    # f_j = s(s+1)...(s+2j-2) x^(-s-2j+1)
    f = s * xs / x
    x2 = x * x
    for j, c in enumerate(_em_coef, 1):
        tail = tail + c * f
        f = f * (s + 2 * j - 1) * (s + 2 * j) / x2
    return head + tail


def _hurwitz(s, a):
    # the direct terms of the head grow like k^-Re(s) and cancel
    # against the tail, so Re(s) < 0 goes through hermite_zeta
    neg = s.real < 0
    if not neg.any():
        return euler_maclaurin(s, a)
    shape = s.shape
    s, a, neg = s.reshape(-1), a.reshape(-1), neg.reshape(-1)
    out = torch.empty(s.shape, dtype=torch.complex128)
    if not neg.all():
        out[~neg] = euler_maclaurin(s[~neg], a[~neg])
    out[neg] = torch.tensor(
        [hermite_zeta(u, v) for u, v in zip(s[neg].tolist(), a[neg].tolist())],
        dtype=torch.complex128,
    )
    return out.reshape(shape)


@scalar_io
def hurwitz_zeta(s, a):
    """
    ζ(s, a) = sum_k (a+k)^-s continued to s != 1, for Re(a) > 0.
    Re(s) >= 0: Euler–Maclaurin, N terms directly, then the integral,
    the half-term and B_2..B_30 corrections at x = a + N.
    Re(s) < 0: the Hermite integral (hermite_zeta), point by point.
    """
    s, a = zeta_params(s, a)
    return check_finite(_hurwitz(s, a), "hurwitz_zeta")


def _scalar_params(s, a, where):
    s, a = zeta_params(s, a, where)
    if s.dim() > 0:
        raise DomainError(f"{where} takes scalar s and a")
    return s, a


def hermite_zeta(s, a, tol=1e-13):
    """
    ζ(s, a) = a^-s/2 + a^(1-s)/(s-1)
              + 2 ∫_0^∞ sin(s·arctan(t/a)) / ((a²+t²)^(s/2) (e^(2πt)-1)) dt
    valid for every s != 1.
    """
    s, a = _scalar_params(s, a, "hermite_zeta")

    def f(t):
        return arctan_sine(a, s, t) / torch.expm1(2 * pi * t)

    out = integrate_half_line(f, tol=tol, decay_rate=2 * pi)
    value = cpow(a, -s) / 2 + cpow(a, 1 - s) / (s - 1) + 2 * out.value
    return to_complex(check_finite(value, "hermite_zeta"))


def hurwitz_zeta_ds(s, a, tol=1e-13):
    """
    ∂ζ(s, a)/∂s from the Hermite representation with t = a u:

        -a^-s log(a)/2 - a^(1-s) log(a)/(s-1) - a^(1-s)/(s-1)²
        + 2 a^(1-s) [-log(a) I1 - I2/2 + I3]

    I1 = ∫ sin(sφ) ρ du,  I2 = ∫ log(1+u²) sin(sφ) ρ du,
    I3 = ∫ φ cos(sφ) ρ du,  φ = arctan u,  ρ = (1+u²)^(-s/2) / (e^(2πau)-1).
    """
    s, a = _scalar_params(s, a, "hurwitz_zeta_ds")
    decay = 2 * pi * float(a.real)

    def rho(u):
        return torch.exp(-s / 2 * torch.log1p(u * u)) / expm1(2 * pi * a * u)

    def i1(u):
        return torch.sin(s * torch.atan(u)) * rho(u)

    def i2(u):
        return torch.log1p(u * u) * torch.sin(s * torch.atan(u)) * rho(u)

    def i3(u):
        phi = torch.atan(u)
        return phi * torch.cos(s * phi) * rho(u)

    I1, I2, I3 = (integrate_half_line(f, tol=tol, decay_rate=decay).value for f in (i1, i2, i3))
    la = torch.log(a)
    a1s = cpow(a, 1 - s)
    value = (
        -cpow(a, -s) * la / 2
        - a1s * la / (s - 1)
        - a1s / (s - 1) ** 2
        + 2 * a1s * (-la * I1 - I2 / 2 + I3)
    )
    return to_complex(check_finite(value, "hurwitz_zeta_ds"))


def direct_series(s, a, terms=10000):
    """
    Truncated sum_{k<terms} (a+k)^-s and a bound on the dropped tail;
    needs Re(s) > 1.
    """
    s, a = _scalar_params(s, a, "direct_series")
    sigma = float(s.real)
    if sigma <= 1:
        raise DomainError(f"direct_series: needs Re(s) > 1, got {s.item()}")
    k = torch.arange(terms, dtype=torch.float64)
    value = cpow(a + k, -s).sum()
    x = float(a.real) + terms - 1
    # |(a+k)^-s| <= (Re a + k)^-σ e^(|Im s| |arg(a+k)|)
    arg = abs(float(torch.angle(a + terms)))
    bound = x ** (1 - sigma) / (sigma - 1) * exp(abs(float(s.imag)) * arg)
    return to_complex(value), bound


# --------------------------------------------------------------- Mellin kernels

MELLIN_CONSTANTS = {"half": 0.5, "printed": 1.0, "double": 2.0}


def mellin_family(kind):
    return f"mellin-{kind}"


def printed_mellin(kind, s, a):
    """
    Right sides as printed next to the kernel integrals:
        bose   Γ(s) ζ(s,a)
        sinh   Γ(s) (ζ(s,a) - 2^-s ζ(s,a/2))
        fermi  Γ(s) (2^(1-s) ζ(s,a/2) - ζ(s,a))
        cosh   Γ(s) 4^-s (ζ(s,(a+1)/4) - ζ(s,(a+3)/4))
    sinh is evaluated as Γ(s) 2^-s ζ(s,(a+1)/2), the same function
    but defined at a = 0.
    """
    g = gamma(s)
    if kind == "bose":
        return g * hurwitz_zeta(s, a)
    if kind == "sinh":
        return g * 2 ** (-s) * hurwitz_zeta(s, (a + 1) / 2)
    if kind == "fermi":
        return g * (2 ** (1 - s) * hurwitz_zeta(s, a / 2) - hurwitz_zeta(s, a))
    return g * 4 ** (-s) * (hurwitz_zeta(s, (a + 1) / 4) - hurwitz_zeta(s, (a + 3) / 4))


def _check_mellin(kind, s, a):
    check_kind(kind)
    if not s.real > 1:
        raise DomainError(f"kernel_mellin: needs Re(s) > 1, got {s}")
    if kind in ("sinh", "cosh"):
        if a.real < 0:
            raise DomainError(f"kernel_mellin({kind}): needs Re(a) >= 0, got {a}")
    elif not a.real > 0:
        raise DomainError(f"kernel_mellin({kind}): needs Re(a) > 0, got {a}")


def kernel_mellin(kind, s, a, candidate="canonical"):
    """
    ∫_0^∞ t^(s-1) e^(-at) w(t) dt for the weights
        bose 1/(1-e^-t), fermi 1/(1+e^-t), sinh 1/sinh t, cosh 1/cosh t,
    as c times the printed right side; candidate picks c.
    """
    s, a = complex(s), complex(a)
    _check_mellin(kind, s, a)
    if candidate == "canonical":
        candidate = canonical(mellin_family(kind))
    if candidate not in MELLIN_CONSTANTS:
        raise DomainError(f"unknown Mellin candidate {candidate!r}")
    return MELLIN_CONSTANTS[candidate] * printed_mellin(kind, s, a)


def mellin_integrand(kind, s, a):
    """the integrand of kernel_mellin and its exponential decay rate"""
    s, a = complex(s), complex(a)
    _check_mellin(kind, s, a)
    s, a = as_complex(s), as_complex(a)

    def f(t):
        p = torch.exp((s - 1) * torch.log(t) - a * t)
        if kind == "bose":
            return p / -torch.expm1(-t)
        if kind == "fermi":
            return p / (1 + torch.exp(-t))
        e = torch.exp(-t)
        if kind == "sinh":
            return p * 2 * e / -torch.expm1(-2 * t)
        return p * 2 * e / (1 + e * e)

    decay = float(a.real) + (1.0 if kind in ("sinh", "cosh") else 0.0)
    return f, decay


def test_hurwitz_values():
    import pytest

    assert abs(hurwitz_zeta(2.0, 1.0) - pi**2 / 6) < 1e-14
    assert abs(hurwitz_zeta(2.0, 0.5) - pi**2 / 2) < 1e-14
    assert abs(hurwitz_zeta(3.0, 1.0) - 1.2020569031595942) < 1e-14
    for a in [0.5, 1.0, 2.5, 1 + 0.5j]:
        assert abs(hurwitz_zeta(0.0, a) - (0.5 - a)) < 1e-13
    assert abs(hurwitz_zeta(-1.0, 1.0) + 1 / 12) < 1e-13
    with pytest.raises(PoleProximity):
        hurwitz_zeta(1.0 + 1e-8, 1.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, -0.5)
    with pytest.raises(DomainError):
        hurwitz_zeta(2.0, 0.0)


def test_hurwitz_scipy():
    from scipy.special import zeta as sp_zeta

    for s in [1.5, 2.0, 3.7, 10.0, 25.0]:
        for a in [0.3, 1.0, 2.3, 17.0, 50.0]:
            ref = sp_zeta(s, a)
            assert abs(hurwitz_zeta(s, a) - ref) < 1e-12 * ref


def test_recurrence():
    grid_s = [-29.5, -10.5, -2.5, -1.0, 0.5, 2.0, 3.7, 2 + 3j, 12.5 - 4j, 30.0]
    grid_a = [0.5, 1.0, 2.3, 1 + 0.5j, 7.7 - 2j]
    for s in grid_s:
        for a in grid_a:
            z = hurwitz_zeta(s, a)
            lhs = z - hurwitz_zeta(s, a + 1) - a ** (-s)
            assert abs(lhs) <= 1e-11 * max(1, abs(z)), (s, a, lhs)


def test_negative_s():
    import pytest

    mpmath = pytest.importorskip("mpmath")
    for s in [-0.5, -2.5, -5.5, -10.5, -20.3, -29.5, -12 + 3j]:
        for a in [0.3, 1.0, 2.3, 17.0, 50.0]:
            with mpmath.workdps(30):
                ref = complex(mpmath.zeta(s, a))
            z = hurwitz_zeta(s, a)
            assert abs(z - ref) <= 1e-11 * abs(ref), (s, a, z, ref)
    # ζ(s, 1/2) = (2^s - 1) ζ(s) and the trivial zeros
    for s in [-5.5, -10.5, -29.5]:
        z = hurwitz_zeta(s, 1.0)
        assert abs(hurwitz_zeta(s, 0.5) - (2**s - 1) * z) <= 1e-11 * abs(z)
    for s in [-10.0, -20.0, -30.0]:
        scale = abs(hurwitz_zeta(s - 1, 1.0))
        assert abs(hurwitz_zeta(s, 1.0)) <= 1e-10 * scale
    s = torch.tensor([-20.3, 2.0, -5.5 + 1j])
    a = torch.tensor([1.0, 1.0, 2.3])
    z = hurwitz_zeta(s, a)
    for i in range(3):
        ref = hurwitz_zeta(s[i].item(), a[i].item())
        assert abs(z[i].item() - ref) <= 1e-14 * abs(ref)


def test_tensor_input():
    s = torch.tensor([2.0, 3.7, 2 + 3j])
    a = torch.tensor([1.0, 0.5, 2.3])
    z = hurwitz_zeta(s, a)
    assert isinstance(z, torch.Tensor) and z.shape == (3,)
    for i in range(3):
        assert abs(z[i].item() - hurwitz_zeta(s[i].item(), a[i].item())) < 1e-14 * abs(z[i])


def test_hermite():
    assert abs(hermite_zeta(2.0, 1.0) - pi**2 / 6) < 1e-12
    assert abs(hermite_zeta(-1.0, 1.0) + 1 / 12) < 1e-12
    assert abs(hermite_zeta(0.0, 2.5) + 2.0) < 1e-14
    for s in [-2.5, -1.0, 0.5, 2.0, 3.7, 2 + 3j]:
        for a in [0.5, 1.0, 2.3, 1 + 0.5j]:
            z = hurwitz_zeta(s, a)
            h = hermite_zeta(s, a)
            assert abs(z - h) <= 1e-10 * max(1, abs(z)), (s, a, z, h)


def test_derivative():
    from math import log

    assert abs(hurwitz_zeta_ds(0.0, 1.0) + 0.5 * log(2 * pi)) < 1e-8
    assert abs(hurwitz_zeta_ds(2.0, 1.0) + 0.9375482543158437) < 1e-10
    glaisher = 1.2824271291006226
    assert abs(hurwitz_zeta_ds(-1.0, 1.0) - (1 / 12 - log(glaisher))) < 1e-10
    h = 1e-5
    for s in [-2.5, -1.0, 0.5, 2.0, 3.7, 2 + 3j]:
        for a in [0.5, 1.0, 2.3, 1 + 0.5j]:
            fd = (hurwitz_zeta(s + h, a) - hurwitz_zeta(s - h, a)) / (2 * h)
            assert abs(hurwitz_zeta_ds(s, a) - fd) < 1e-7, (s, a)


def test_direct_series():
    import pytest

    for s, a in [(2.0, 1.0), (3.7, 2.3), (2.5 + 1j, 0.5 + 0.5j)]:
        value, bound = direct_series(s, a, terms=2000)
        assert abs(value - hurwitz_zeta(s, a)) <= bound
    with pytest.raises(DomainError):
        direct_series(0.5, 1.0)


def test_mellin_printed():
    import pytest

    from thezeta.closed import hypotheses
    from thezeta.errors import UnresolvedHypothesis

    catalan = 0.915965594177219
    assert abs(kernel_mellin("fermi", 2, 1, "printed") - pi**2 / 12) < 1e-13
    assert abs(kernel_mellin("sinh", 2, 1, "double") - pi**2 / 12) < 1e-13
    assert abs(kernel_mellin("cosh", 2, 0, "double") - 2 * catalan) < 1e-13
    assert abs(kernel_mellin("bose", 2, 1, "printed") - pi**2 / 6) < 1e-13
    # ∫ t^(s-1) / sinh t dt = 2 (1 - 2^-s) Γ(s) ζ(s)
    assert abs(kernel_mellin("sinh", 3, 0, "double") - 3.5 * 1.2020569031595942) < 1e-12
    with pytest.raises(DomainError):
        kernel_mellin("bose", 2, 0, "printed")
    with pytest.raises(DomainError):
        kernel_mellin("fermi", 1.0, 1, "printed")
    with pytest.raises(DomainError):
        kernel_mellin("fermi", 2.0, 1, "triple")
    saved = hypotheses.snapshot()
    hypotheses.reset()
    try:
        with pytest.raises(UnresolvedHypothesis):
            kernel_mellin("cosh", 2, 1)
    finally:
        hypotheses.restore(saved)


def test_mellin_integrand():
    for kind in KERNELS:
        for s, a in [(2.0, 1.0), (3.5, 0.7)]:
            f, decay = mellin_integrand(kind, s, a)
            out = integrate_half_line(f, tol=1e-12, decay_rate=decay)
            c = {"bose": 1, "fermi": 1, "sinh": 2, "cosh": 2}[kind]
            ref = c * printed_mellin(kind, complex(s), complex(a))
            assert abs(out.value - ref) < 1e-10 * abs(ref), (kind, s, a)


if __name__ == "__main__":
    test_hurwitz_values()
    test_hurwitz_scipy()
    test_recurrence()
    test_negative_s()
    test_tensor_input()
    test_hermite()
    test_derivative()
    test_direct_series()
    test_mellin_printed()
    test_mellin_integrand()
