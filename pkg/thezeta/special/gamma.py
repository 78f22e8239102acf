# +
from math import log, pi

import torch

from thezeta.errors import PoleProximity
from thezeta.util.tensors import as_complex, check_finite, scalar_io

DELTA = 1e-6

# Lanczos approximation with g=7, 9 coefficients
_g = 7.0
_p = torch.tensor(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ],
    dtype=torch.float64,
)
_shifts = torch.arange(1, 9, dtype=torch.float64)
_log_sqrt_2pi = 0.5 * log(2 * pi)


def _lanczos(z):
    """log Γ(z) for Re(z) >= 0.5"""
    z = z - 1
    x = _p[0] + (_p[1:] / (z[..., None] + _shifts)).sum(dim=-1)
    t = z + _g + 0.5
    return _log_sqrt_2pi + (z + 0.5) * torch.log(t) - t + torch.log(x)


def pole_guard(z, delta=DELTA, where="log_gamma"):
    """raises if z is within delta of a non-positive integer"""
    nearest = torch.round(z.real).clamp(max=0)
    d = (z - nearest).abs()
    if (d < delta).any():
        i = int(torch.argmin(d))
        raise PoleProximity(where, z.reshape(-1)[i].item(), float(nearest.reshape(-1)[i]), delta)


def _log_gamma(z):
    reflect = z.real < 0.5
    if not reflect.any():
        return _lanczos(z)
    # Γ(z) Γ(1-z) = π / sin(πz)
    zz = torch.where(reflect, 1 - z, z)
    lg = _lanczos(zz)
    refl = log(pi) - torch.log(torch.sin(pi * z)) - lg
    return torch.where(reflect, refl, lg)


@scalar_io
def log_gamma(z):
    """
    Logarithm of Γ(z) for complex z; exp(log_gamma(z)) = Γ(z).
    The imaginary part is taken modulo 2π on the reflected half-plane.
    """
    z = as_complex(z)
    pole_guard(z)
    return check_finite(_log_gamma(z), "log_gamma")


@scalar_io
def gamma(z):
    z = as_complex(z)
    pole_guard(z, where="gamma")
    return check_finite(torch.exp(_log_gamma(z)), "gamma")


def test_log_gamma():
    import pytest
    from scipy.special import loggamma

    assert abs(log_gamma(1.0)) < 1e-15
    assert abs(log_gamma(5.0) - log(24.0)) < 1e-14
    for z in [0.5 + 1.0j, 3.7 - 2.2j, 25.0 + 40.0j, -2.5 + 0.3j, -7.2, 0.1j + 1e-3]:
        ref = complex(loggamma(complex(z)))
        got = log_gamma(z)
        # compare exp(.) through the difference, modulo 2πi
        d = got - ref
        d = complex(d.real, (d.imag + pi) % (2 * pi) - pi)
        assert abs(d) < 1e-13, (z, got, ref)
    with pytest.raises(PoleProximity):
        log_gamma(-3.0 + 1e-8)
    with pytest.raises(PoleProximity):
        gamma(0.0)


def test_gamma_values():
    assert abs(gamma(0.5) - pi**0.5) < 1e-14
    assert abs(gamma(6.0) - 120.0) < 1e-11
    # reflection: Γ(z)Γ(1-z) sin(πz) = π
    z = torch.tensor([0.3 + 0.4j, -1.7 + 2.0j, 2.2 - 0.5j])
    lhs = gamma(z) * gamma(1 - z) * torch.sin(pi * z)
    assert torch.allclose(lhs, torch.full_like(z, pi), rtol=1e-13, atol=0)
    # recurrence: Γ(z+1) = z Γ(z)
    assert torch.allclose(gamma(z + 1), z * gamma(z), rtol=1e-13, atol=0)


if __name__ == "__main__":
    test_log_gamma()
    test_gamma_values()
