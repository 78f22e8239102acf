# +
import torch

from thezeta.errors import DomainError, PoleProximity
from thezeta.special.gamma import DELTA, _log_gamma, pole_guard
from thezeta.util.tensors import as_complex, check_finite, scalar_io

MAX_DEGREE = 64


def _check_degree(n):
    if int(n) != n or n < 0:
        raise DomainError(f"laguerre: degree should be a non-negative integer, got {n}")
    if n > MAX_DEGREE:
        raise DomainError(f"laguerre: degree {n} exceeds the supported cap {MAX_DEGREE}")
    return int(n)


def _check_parameter(n, k):
    j = torch.arange(n + 1, dtype=torch.float64)
    try:
        pole_guard(k[..., None] + j + 1, DELTA, "laguerre")
    except PoleProximity as err:
        raise DomainError(f"laguerre: k + j is (nearly) a negative integer ({err})")


def laguerre_coefficients(n, k):
    """
    c_j, j = 0..n, of L_n^k(x) = sum_j c_j x^j:
        c_j = (-1)^j Γ(n+k+1) / (Γ(n-j+1) Γ(k+j+1) Γ(j+1))
    c_0 is the exp of a log_gamma difference, the others follow from
        c_(j+1) = -c_j (n-j) / ((k+j+1)(j+1))
    so that all of them carry the same rounding as c_0.
    """
    n = _check_degree(n)
    k = as_complex(k)
    _check_parameter(n, k)
    if n == 0:
        return torch.ones(*k.shape, 1, dtype=torch.complex128)
    if n == 1:
        return torch.stack([k + 1, -torch.ones_like(k)], dim=-1)
    c0 = torch.exp(_log_gamma(n + k + 1) - _log_gamma(as_complex(n + 1.0)) - _log_gamma(k + 1))
    j = torch.arange(n, dtype=torch.float64)
    ratio = -(n - j) / ((k[..., None] + j + 1) * (j + 1))
    ones = torch.ones(*k.shape, 1, dtype=torch.complex128)
    return c0[..., None] * torch.cat([ones, torch.cumprod(ratio, dim=-1)], dim=-1)


def _horner(c, x):
    val = c[..., -1]
    for j in range(c.size(-1) - 2, -1, -1):
        val = val * x + c[..., j]
    return val


@scalar_io
def laguerre_explicit(n, k, x, cond=False):
    """
    L_n^k(x) from the explicit sum with gamma-valued factorials.
    If cond=True, also returns sum_j |c_j x^j| / |L_n^k(x)|; a large
    value flags digits lost to cancellation in the alternating sum.
    """
    c = laguerre_coefficients(n, k)
    x = as_complex(x)
    val = check_finite(_horner(c, x), "laguerre_explicit")
    if cond:
        mag = _horner(c.abs(), x.abs())
        return val, mag / val.abs()
    return val


@scalar_io
def laguerre_recurrence(n, k, x):
    n = _check_degree(n)
    k = as_complex(k)
    _check_parameter(n, k)
    x = as_complex(x)
    prev = torch.ones_like(k + x)
    if n == 0:
        return prev
    cur = 1 + k - x
    for m in range(1, n):
        prev, cur = cur, ((2 * m + 1 + k - x) * cur - (m + k) * prev) / (m + 1)
    return check_finite(cur, "laguerre_recurrence")


def test_anchors():
    assert laguerre_explicit(0, 3.2 - 1j, 7.0) == 1
    assert laguerre_recurrence(0, 3.2, 7.0) == 1
    for k, x in [(3.2, 7.0), (0.5 + 2j, -1.5j), (-0.5, 2.0)]:
        ref = k + 1 - x
        assert abs(laguerre_explicit(1, k, x) - ref) <= 1e-15 * abs(ref)
        assert abs(laguerre_recurrence(1, k, x) - ref) <= 1e-15 * abs(ref)
    assert abs(laguerre_explicit(2, 1.5, 2.0) + 0.625) < 1e-14
    assert abs(laguerre_recurrence(2, 1.5, 2.0) + 0.625) < 1e-14


def test_paths_agree():
    for n in [2, 5, 10, 16]:
        for k in [0.0, 1.5, -0.5 + 2j, 7.3, 20.0, -13.4]:
            for x in [0.3, 2.0, 7.5 - 1j, 20.0, 3j]:
                e, cond = laguerre_explicit(n, k, x, cond=True)
                r = laguerre_recurrence(n, k, x)
                # cancellation in the explicit sum is bounded by cond
                assert abs(e - r) <= 1e-10 * abs(r) + 1e-14 * cond * abs(e), (n, k, x, e, r)


def test_rodrigues():
    """L_n^k(x) = x^-k e^x / n! d^n/dx^n (e^-x x^(n+k))"""
    from math import exp, factorial

    from scipy.special import eval_genlaguerre

    for k in [0.0, 1.5]:
        for n in range(7):
            for x0 in [0.4, 1.7, 5.0]:
                x = torch.tensor(x0, requires_grad=True)
                y = torch.exp(-x) * x ** (n + k)
                for _ in range(n):
                    (y,) = torch.autograd.grad(y, x, create_graph=True)
                ref = float(y) * x0 ** (-k) * exp(x0) / factorial(n)
                got = laguerre_explicit(n, k, x0)
                assert abs(got - ref) < 1e-12 * max(1, abs(ref))
                assert abs(got - eval_genlaguerre(n, k, x0)) < 1e-12 * max(1, abs(ref))


def test_high_degree():
    from math import comb, factorial

    from scipy.special import eval_genlaguerre

    for n, k, x in [(16, 3.0, 5.0), (10, 7.3, 0.3), (8, 1.5, 2.0)]:
        ref = eval_genlaguerre(n, k, x)
        assert abs(laguerre_explicit(n, k, x) - ref) < 1e-10 * abs(ref), (n, k, x)
        assert abs(laguerre_recurrence(n, k, x) - ref) < 1e-12 * abs(ref), (n, k, x)
    # integer k: c_j = (-1)^j C(n+k, n-j) / j!
    c = laguerre_coefficients(12, 4.0)
    for j in range(13):
        ref = (-1) ** j * comb(16, 12 - j) / factorial(j)
        assert abs(c[j].item() - ref) <= 1e-13 * abs(ref), j


def test_tensor_input():
    x = torch.linspace(0, 10, 11)
    val = laguerre_explicit(3, 0.5, x)
    assert val.shape == x.shape
    assert torch.allclose(val, laguerre_recurrence(3, 0.5, x), rtol=1e-12)


def test_domain():
    import pytest

    with pytest.raises(DomainError):
        laguerre_explicit(MAX_DEGREE + 1, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre_explicit(-1, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre_explicit(2.5, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre_recurrence(3, -2.0, 1.0)


if __name__ == "__main__":
    test_anchors()
    test_paths_agree()
    test_rodrigues()
    test_high_degree()
    test_tensor_input()
    test_domain()
