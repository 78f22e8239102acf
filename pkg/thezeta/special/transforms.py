# +
from math import pi, sqrt

import torch

from thezeta.errors import DomainError
from thezeta.special.gamma import _log_gamma, pole_guard
from thezeta.special.laguerre import laguerre_explicit
from thezeta.util.tensors import as_complex, as_real, cpow, expm1, log1p, scalar_io

KERNELS = ("bose", "fermi", "sinh", "cosh")

# scales printed next to the transform entries
DEFAULT_BETA = {"bose": 2 * pi, "fermi": pi, "sinh": pi, "cosh": pi}

# the cosh entry is a cosine transform
TRANSFORM_SENSE = {"bose": "sin", "fermi": "sin", "sinh": "sin", "cosh": "cos"}


def check_kind(kind):
    if kind not in KERNELS:
        raise DomainError(f"unknown kernel {kind!r}, expected one of {KERNELS}")


def transform_sense(kind):
    check_kind(kind)
    return TRANSFORM_SENSE[kind]


def _beta(kind, beta):
    beta = DEFAULT_BETA[kind] if beta is None else float(beta)
    if beta <= 0:
        raise DomainError(f"kernel scale should be positive, got {beta}")
    return beta


def kernel(kind, t, beta=None):
    """
    1/(e^(βt)-1), 1/(e^(βt)+1), 1/sinh(βt), 1/cosh(βt)
    for kind = bose, fermi, sinh, cosh; t > 0.
    """
    check_kind(kind)
    beta = _beta(kind, beta)
    bt = beta * as_real(t)
    if kind == "bose":
        return 1 / torch.expm1(bt)
    e = torch.exp(-bt)
    if kind == "fermi":
        return e / (1 + e)
    if kind == "sinh":
        return 2 * e / -torch.expm1(-2 * bt)
    return 2 * e / (1 + e * e)


def kernel_at_zero(kind, beta=None):
    """
    K(0) for the bounded kernels, and lim t K(t) for the
    kernels with a simple pole at 0 (bose, sinh).
    """
    check_kind(kind)
    beta = _beta(kind, beta)
    return {"bose": 1 / beta, "sinh": 1 / beta, "fermi": 0.5, "cosh": 1.0}[kind]


def _coth_minus_inv(y):
    small = y < 1e-2
    yy = y * y
    series = y * (1 / 3 - yy * (1 / 45 - yy * (2 / 945 - yy / 4725)))
    safe = torch.where(small, torch.ones_like(y), y)
    return torch.where(small, series, 1 / torch.tanh(safe) - 1 / safe)


def _inv_minus_csch(y):
    small = y < 1e-2
    yy = y * y
    series = y * (1 / 6 - yy * (7 / 360 - yy * 31 / 15120))
    safe = torch.where(small, torch.ones_like(y), y)
    return torch.where(small, series, 1 / safe - 1 / torch.sinh(safe))


def kernel_sine_transform(kind, w, beta=None):
    """
    Closed form of ∫_0^∞ sin(wt) K(t) dt (cos(wt) for cosh):
        bose   (π/2β) coth(πw/β) - 1/(2w);  at β=2π: (1/(e^w-1) + 1/2 - 1/w)/2
        sinh   (π/2β) tanh(πw/2β)
        fermi  1/(2w) - π/(2β sinh(πw/β))
        cosh   (π/2β) / cosh(πw/2β)
    bose and fermi are evaluated through series near w=0.
    """
    check_kind(kind)
    beta = _beta(kind, beta)
    scalar = not isinstance(w, torch.Tensor)
    w = as_real(w)
    if (w < 0).any() or (kind != "cosh" and (w == 0).any()):
        raise DomainError(f"{kind} transform: frequency should be positive")
    c = pi / (2 * beta)
    if kind == "bose":
        out = c * _coth_minus_inv(pi * w / beta)
    elif kind == "sinh":
        out = c * torch.tanh(pi * w / (2 * beta))
    elif kind == "fermi":
        out = c * _inv_minus_csch(pi * w / beta)
    else:
        out = c / torch.cosh(pi * w / (2 * beta))
    return float(out) if scalar else out


def fourier_sine(kind, w, beta=None):
    """unitary (√(2/π)-normalized) transform of the kernel"""
    return sqrt(2 / pi) * kernel_sine_transform(kind, w, beta)


def arctan_sine(a, s, t):
    """
    sin(s·arctan(t/a)) / (a²+t²)^(s/2), in the form
    [(a-it)^-s - (a+it)^-s] / 2i which holds for complex a (Re a > 0)
    and s; the difference is taken through expm1 so that it stays
    accurate as t -> 0.
    """
    a, s, t = as_complex(a), as_complex(s), as_real(t)
    p = a + 1j * t
    u = -2j * t / p
    return cpow(p, -s) * expm1(-s * log1p(u)) / 2j


def arctan_cosine(a, s, t):
    """cos(s·arctan(t/a)) / (a²+t²)^(s/2)"""
    a, s, t = as_complex(a), as_complex(s), as_real(t)
    return (cpow(a - 1j * t, -s) + cpow(a + 1j * t, -s)) / 2


def g_factor(n, a, s, t):
    """g(t) = t^2n sin(s·arctan(t/a)) / (a²+t²)^(s/2)"""
    t = as_real(t)
    return t ** (2 * n) * arctan_sine(a, s, t)


def _check_g(n, a, s):
    if int(n) != n or n < 0:
        raise DomainError(f"power index should be a non-negative integer, got {n}")
    if a.real <= 0:
        raise DomainError(f"Re(a) should be positive, got {a.item()}")
    if not 2 * n < s.real:
        raise DomainError(f"needs 2n < Re(s), got n={n}, s={s.item()}")


@scalar_io
def g_sine_transform(n, a, s, w):
    """
    ∫_0^∞ g(t) sin(wt) dt
        = (-1)^n π (2n)! / (2Γ(s)) e^(-aw) w^(s-2n-1) L_2n^(s-2n-1)(aw)
    """
    a, s = as_complex(a), as_complex(s)
    _check_g(n, a, s)
    w = as_real(w)
    if (w <= 0).any():
        raise DomainError("g transform: frequency should be positive")
    pole_guard(s, where="g_sine_transform")
    k = s - 2 * n - 1
    log_fac = float(torch.lgamma(torch.tensor(2.0 * n + 1)))
    log_pref = log_fac - _log_gamma(s) - a * w + k * torch.log(w)
    lag = laguerre_explicit(2 * n, k, a * w)
    return (-1) ** n * pi / 2 * torch.exp(log_pref) * lag


def fourier_sine_g(n, a, s, w):
    return sqrt(2 / pi) * g_sine_transform(n, a, s, w)


def test_kernel_transforms():
    from thezeta.integrate.tanhsinh import integrate_half_line

    for kind in KERNELS:
        trig = torch.cos if transform_sense(kind) == "cos" else torch.sin
        for beta in [pi, 2 * pi]:
            for w in [0.1, 0.5, 1.0, 2.0, 5.0]:
                f = lambda t: trig(w * t) * kernel(kind, t, beta)
                out = integrate_half_line(f, tol=1e-12, decay_rate=beta)
                ref = kernel_sine_transform(kind, w, beta)
                assert abs(out.value - ref) < 1e-10, (kind, beta, w, out.value, ref)


def test_transform_values():
    from math import e, tanh

    import pytest

    assert abs(kernel_sine_transform("bose", 1.0) - 0.5 * (1 / (e - 1) - 0.5)) < 1e-15
    # the often quoted 0.0409883525 is mis-rounded in the ninth digit
    assert abs(kernel_sine_transform("bose", 1.0) - 0.04098835344) < 1e-11
    assert abs(kernel_sine_transform("sinh", 1.0, pi) - 0.5 * tanh(0.5)) < 1e-15
    assert abs(kernel_sine_transform("cosh", 0.0, pi) - 0.5) < 1e-15
    w = 1e-4
    assert abs(kernel_sine_transform("bose", w) - w / 24) < 1e-14
    # both sides of the series switch
    for kind in ["bose", "fermi"]:
        lo = kernel_sine_transform(kind, 0.999e-2 * DEFAULT_BETA[kind] / pi)
        hi = kernel_sine_transform(kind, 1.001e-2 * DEFAULT_BETA[kind] / pi)
        assert 0 < hi - lo < 1e-4
    with pytest.raises(DomainError):
        kernel_sine_transform("bose", 0.0)
    with pytest.raises(DomainError):
        kernel_sine_transform("fermi", -1.0)
    with pytest.raises(DomainError):
        kernel_sine_transform("gauss", 1.0)
    assert transform_sense("cosh") == "cos"


def test_arctan_forms():
    from math import atan, cos, sin

    for a in [0.5, 1.0, 2.3]:
        for s in [1.5, 2.0, 3.7, 6.0]:
            t = torch.tensor([1e-20, 1e-6, 0.3, 1.0, 4.0, 50.0])
            got = arctan_sine(a, s, t)
            gotc = arctan_cosine(a, s, t)
            for i, ti in enumerate(t.tolist()):
                r = (a * a + ti * ti) ** (-s / 2)
                ref = sin(s * atan(ti / a)) * r
                refc = cos(s * atan(ti / a)) * r
                assert abs(got[i] - ref) <= 1e-12 * abs(ref)
                assert abs(gotc[i] - refc) <= 1e-12 * max(abs(refc), r)


def test_g_sine_transform():
    from math import exp

    import numpy as np
    from scipy.integrate import quad
    from scipy.special import gamma as sp_gamma

    assert abs(g_sine_transform(0, 1.0, 2.0, 1.0) - pi / 2 * exp(-1)) < 1e-14
    assert abs(g_sine_transform(0, 1.0, 2.0, 1.0) - 0.5778636748) < 1e-10
    a, s, w = 1.3, 4.2, 0.7
    ref = pi / (2 * sp_gamma(s)) * exp(-a * w) * w ** (s - 1)
    assert abs(g_sine_transform(0, a, s, w) - ref) < 1e-13

    def g(t, n, a, s):
        return t ** (2 * n) * np.sin(s * np.arctan(t / a)) / (a * a + t * t) ** (s / 2)

    for n, a, s, w in [(1, 1.0, 6.0, 2.0), (0, 2.0, 3.0, 0.5), (2, 0.7, 5.5, 1.5)]:
        ref = quad(g, 0, np.inf, args=(n, a, s), weight="sin", wvar=w, epsabs=1e-13)[0]
        got = g_sine_transform(n, a, s, w)
        assert abs(got - ref) < 1e-9 * max(1, abs(ref)), (n, a, s, w, got, ref)


def test_g_domain():
    import pytest

    with pytest.raises(DomainError):
        g_sine_transform(1, 1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        g_sine_transform(0, -1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        g_sine_transform(0, 1.0, 2.0, 0.0)


if __name__ == "__main__":
    test_kernel_transforms()
    test_transform_values()
    test_arctan_forms()
    test_g_sine_transform()
    test_g_domain()
