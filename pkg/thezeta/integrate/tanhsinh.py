# +
from math import e, exp, log, pi

import torch

from thezeta.errors import BadIntegrand, NoConvergence
from thezeta.util.tensors import as_real

MAX_LEVELS = 12
T_MAX = 3.5
_eps = torch.finfo(torch.float64).eps


class QuadratureOutcome:
    def __init__(self, value, err_estimate, n_evals, truncation_point):
        self.value = value
        self.err_estimate = err_estimate
        self.n_evals = n_evals
        self.truncation_point = truncation_point

    def __repr__(self):
        return (
            f"QuadratureOutcome(value={self.value}, err_estimate={self.err_estimate:.3g}, "
            f"n_evals={self.n_evals}, truncation_point={self.truncation_point:.4g})"
        )


def truncation_point(f, tol, decay_rate, grow=1.25, max_steps=200):
    """
    Smallest T (on a geometric ladder) with exp(-decay_rate*T) < tol/100
    and 2|f| / decay_rate < tol/100 around T.
    Returns T and the tail estimate.
    """
    if decay_rate <= 0:
        raise BadIntegrand(f"decay_rate should be positive, got {decay_rate}")
    T = max(-log(tol / 100) / decay_rate, 1.0 / decay_rate)
    for _ in range(max_steps):
        y = f(as_real([T, 1.05 * T, 1.1 * T]))
        if not torch.isfinite(y).all():
            raise BadIntegrand(f"non-finite integrand near the truncation point {T}")
        tail = 2 * float(y.abs().max()) / decay_rate
        if tail < tol / 100:
            return T, tail
        T *= grow
    raise NoConvergence(f"integrand does not decay (|f({T})| = {tail * decay_rate / 2})")


def tanh_sinh_nodes(level, T, h0=1.0, t_max=T_MAX):
    """
    Nodes and weights (without the step factor h) on [0, T].
    level 0 holds all multiples of h0 in [-t_max, t_max],
    level l > 0 only the odd multiples of h0/2**l.
    """
    h = h0 / 2**level
    if level == 0:
        k = int(t_max / h)
        tau = torch.arange(-k, k + 1, dtype=torch.float64) * h
    else:
        k = int((t_max / h - 1) / 2)
        tau = (2 * torch.arange(-k - 1, k + 1, dtype=torch.float64) + 1) * h
    v = 0.5 * pi * torch.sinh(tau)
    # distance from the nearest end
    d = T / (torch.exp(2 * v.abs()) + 1)
    x = torch.where(tau < 0, d, T - d)
    w = 0.5 * T * 0.5 * pi * torch.cosh(tau) / torch.cosh(v) ** 2
    return x, w


def integrate_half_line(f, tol=1e-12, decay_rate=1.0, levels=MAX_LEVELS, h0=1.0, min_levels=3):
    """
    ∫_0^∞ f(t) dt for f decaying at least like exp(-decay_rate*t).
    f: a vectorized callable; tensor (float64) -> tensor (real or complex).
    The integral is truncated at T (see truncation_point) and
    [0, T] is integrated by the tanh-sinh rule, halving the step
    until two successive levels differ by less than tol.
    """
    T, tail = truncation_point(f, tol, decay_rate)
    total = 0.0
    l1 = 0.0
    n_evals = 3
    prev = None
    diff = float("nan")
    for level in range(levels):
        h = h0 / 2**level
        x, w = tanh_sinh_nodes(level, T, h0=h0)
        y = f(x)
        n_evals += x.numel()
        if not torch.isfinite(y).all():
            bad = x[~torch.isfinite(y)][0]
            raise BadIntegrand(f"non-finite integrand at t={float(bad)}")
        total = total + (w * y).sum()
        l1 = l1 + (w * y.abs()).sum()
        value = h * total
        if prev is not None and level + 1 >= min_levels:
            diff = float((value - prev).abs())
            floor = 64 * _eps * float(h * l1)
            if diff <= tol or diff <= floor:
                err = max(diff, floor) + tail
                return QuadratureOutcome(complex(value.item()), err, n_evals, T)
        prev = value
    raise NoConvergence(f"no convergence after {levels} levels (last difference {diff:.3g})")


def test_elementary():
    out = integrate_half_line(lambda t: torch.exp(-t), tol=1e-12)
    assert abs(out.value - 1.0) < 1e-12
    assert out.err_estimate < 1e-11
    out = integrate_half_line(lambda t: t * torch.exp(-t * t), tol=1e-12)
    assert abs(out.value - 0.5) < 1e-12
    # endpoint singularity
    out = integrate_half_line(lambda t: torch.exp(-t) / t.sqrt(), tol=1e-12)
    assert abs(out.value - pi**0.5) < 1e-9


def test_sine_over_bose():
    out = integrate_half_line(
        lambda t: torch.sin(t) / torch.expm1(2 * pi * t), tol=1e-12, decay_rate=2 * pi
    )
    ref = 0.5 * (1 / (e - 1) - 0.5)
    assert abs(out.value - ref) < 1e-12
    assert abs(out.value.imag) == 0


def test_tolerance_halving():
    f = lambda t: t**3 * torch.exp(-0.7 * t) * torch.cos(t)
    a = integrate_half_line(f, tol=1e-8, decay_rate=0.7)
    b = integrate_half_line(f, tol=0.5e-8, decay_rate=0.7)
    assert abs(a.value - b.value) <= a.err_estimate + b.err_estimate
    assert b.truncation_point >= a.truncation_point


def test_failures():
    import pytest

    with pytest.raises(BadIntegrand):
        integrate_half_line(lambda t: torch.where(t < 1, t * float("nan"), torch.exp(-t)))
    with pytest.raises(NoConvergence):
        integrate_half_line(lambda t: torch.exp(-t) * torch.cos(40 * t), levels=2)
    with pytest.raises(NoConvergence):
        integrate_half_line(lambda t: torch.ones_like(t))


if __name__ == "__main__":
    test_elementary()
    test_sine_over_bose()
    test_tolerance_halving()
    test_failures()
