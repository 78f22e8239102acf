# +
from math import factorial, pi

import torch

from thezeta.closed import hypotheses
from thezeta.closed.auxiliary import p_aux
from thezeta.errors import DomainError, PoleProximity
from thezeta.integrate.tanhsinh import integrate_half_line
from thezeta.special.gamma import DELTA, gamma
from thezeta.special.laguerre import laguerre_coefficients, laguerre_explicit
from thezeta.special.transforms import kernel_sine_transform
from thezeta.special.zeta import hurwitz_zeta
from thezeta.util.tensors import as_complex

METHODS = ("quad", "split", "series")
SINH_METHODS = ("quad", "series")
SINH_IDENTITY = "parseval-sinh"


def _bracket(w):
    """1/(e^w-1) + 1/2 - 1/w"""
    return 2 * kernel_sine_transform("bose", w)


def _check(n, a, s, where):
    if int(n) != n or n < 0:
        raise DomainError(f"power index should be a non-negative integer, got {n}")
    a, s = complex(a), complex(s)
    if not a.real > 0:
        raise DomainError(f"{where}: Re(a) should be positive, got {a}")
    if not 2 * n < s.real:
        raise DomainError(f"{where}: needs 2n < Re(s), got n={n}, s={s}")
    return int(n), a, s


def _laguerre_weight(n, a, k):
    """w -> e^(-aw) w^k L_2n^k(aw)"""
    a_, k_ = as_complex(a), as_complex(k)

    def base(w):
        return torch.exp(k_ * torch.log(w) - a_ * w) * laguerre_explicit(2 * n, k_, a_ * w)

    return base


def lemma21_rhs(n, a, s, method=None, tol=1e-12):
    """
    (-1)^n (2n)! / (2Γ(s)) ∫_0^∞ e^(-aw) w^k L_2n^k(aw) (1/(e^w-1) + 1/2 - 1/w) dw,
    k = s-2n-1: the frequency side of the Parseval identity for the
    bose-even family.

    method:
        "quad"    the w-integral as it stands
        "split"   the three pieces of the bracket integrated separately,
                  needs Re(s) > 2n+1
        "series"  the Laguerre sum, each piece in closed form through
                  Γ and ζ(σ, a+1)
    default: "split" if Re(s) > 2n+1 else "quad".
    """
    n, a, s = _check(n, a, s, "lemma21_rhs")
    if method is None:
        method = "split" if s.real > 2 * n + 1 else "quad"
    if method not in METHODS:
        raise DomainError(f"lemma21_rhs: unknown method {method!r}, expected one of {METHODS}")
    if method == "split" and not s.real > 2 * n + 1:
        raise DomainError(f"lemma21_rhs: the split integrals need Re(s) > 2n+1, got s={s}")

    k = s - 2 * n - 1
    pref = (-1) ** n * factorial(2 * n) / (2 * gamma(s))
    if method == "series":
        return pref * _series(n, a, k)

    base = _laguerre_weight(n, a, k)
    decay = a.real
    if method == "quad":
        out = integrate_half_line(lambda w: base(w) * _bracket(w), tol=tol, decay_rate=decay)
        return pref * out.value

    bose = integrate_half_line(lambda w: base(w) / torch.expm1(w), tol=tol, decay_rate=decay + 1)
    half = integrate_half_line(lambda w: base(w) / 2, tol=tol, decay_rate=decay)
    inv = integrate_half_line(lambda w: base(w) / w, tol=tol, decay_rate=decay)
    return pref * (bose.value + half.value - inv.value)


def _series(n, a, k):
    """
    sum_j c_j a^j [Γ(σ) ζ(σ,a+1) + Γ(σ) a^-σ / 2 - Γ(σ-1) a^(1-σ)],
    σ = k+j+1, c_j the coefficients of L_2n^k
    """
    c = laguerre_coefficients(2 * n, k).tolist()
    total = 0
    for j, cj in enumerate(c):
        sigma = k + j + 1
        if abs(sigma - 1) < DELTA:
            raise PoleProximity("lemma21_rhs", sigma, 1.0, DELTA)
        g = gamma(sigma)
        piece = g * hurwitz_zeta(sigma, a + 1) + g * a ** (-sigma) / 2 - gamma(sigma - 1) * a ** (1 - sigma)
        total += cj * a**j * piece
    return total


def lemma31_rhs(n, a, s, candidate="canonical", method="quad", tol=1e-12):
    """
    Frequency side of the Parseval identity for the sinh-even family;
    the sine transform of 1/sinh(πt) is tanh(w/2)/2. Candidates:
        printed    (-1)^n π (2n)! / (4Γ(s))
                   ∫ tanh(w/2) e^(-aw) w^k L_2n^k(aw) (1/(e^w-1) + 1/2 - 1/w) dw
        corrected  (-1)^n (2n)! / (2Γ(s)) ∫ tanh(w/2) e^(-aw) w^k L_2n^k(aw) dw
    k = s-2n-1. method "series" (corrected only) writes
    tanh(w/2) = 2/(1+e^-w) - 1, which turns each Laguerre term into Γ(σ) P2(a, σ).
    """
    n, a, s = _check(n, a, s, "lemma31_rhs")
    cand = hypotheses.candidate(SINH_IDENTITY, candidate)
    if method not in SINH_METHODS:
        raise DomainError(f"lemma31_rhs: unknown method {method!r}, expected one of {SINH_METHODS}")
    if method == "series" and cand.id != "corrected":
        raise DomainError(f"lemma31_rhs: no series for the {cand.id!r} candidate")

    k = s - 2 * n - 1
    sign = (-1) ** n * factorial(2 * n)
    if method == "series":
        c = laguerre_coefficients(2 * n, k).tolist()
        total = sum(cj * a**j * gamma(k + j + 1) * p_aux(2, a, k + j + 1) for j, cj in enumerate(c))
        return sign * total / (2 * gamma(s))

    base = _laguerre_weight(n, a, k)
    if cand.id == "printed":
        f = lambda w: torch.tanh(w / 2) * base(w) * _bracket(w)
        pref = sign * pi / (4 * gamma(s))
    else:
        f = lambda w: torch.tanh(w / 2) * base(w)
        pref = sign / (2 * gamma(s))
    return pref * integrate_half_line(f, tol=tol, decay_rate=a.real).value


def test_triangulation():
    from thezeta.closed.theorems import closed_even

    for n, a, s, tol in [(0, 1.0, 3.0, 1e-9), (1, 1.0, 6.0, 1e-8), (0, 1.0, 2.0, 1e-9), (1, 2.3, 3.7, 1e-8)]:
        ref = closed_even("bose", n, a, s, "printed")
        for method in METHODS:
            got = lemma21_rhs(n, a, s, method)
            assert abs(got - ref) < tol * max(1, abs(ref)), (n, a, s, method, got, ref)
    assert abs(lemma21_rhs(0, 1.0, 2.0) - 0.0724670334) < 1e-10


def test_unsplit_region():
    from thezeta.closed.theorems import closed_even

    # 2n < Re(s) <= 2n+1: only the unsplit and series routes apply
    for n, a, s in [(0, 0.7, 0.8), (1, 1.0, 2.5), (2, 2.3, 4.6)]:
        ref = closed_even("bose", n, a, s, "printed")
        assert abs(lemma21_rhs(n, a, s) - ref) < 1e-8 * max(1, abs(ref))
        assert abs(lemma21_rhs(n, a, s, "series") - ref) < 1e-10 * max(1, abs(ref))


def test_sinh_identity():
    from thezeta.closed.theorems import closed_even
    from thezeta.integrate.families import FamilySpec, family_quadrature

    for n, a, s in [(0, 1.0, 2.0), (1, 0.7, 3.7), (2, 2.3, 5.5), (1, 1.5 + 0.5j, 4.5 - 1j)]:
        quad = family_quadrature(FamilySpec("sinh-even", n, a, s)).value
        ref = closed_even("sinh", n, a, s, "printed")
        scale = max(1, abs(quad))
        assert abs(quad - ref) < 1e-9 * scale
        for method in SINH_METHODS:
            got = lemma31_rhs(n, a, s, "corrected", method)
            assert abs(got - quad) < 1e-9 * scale, (n, a, s, method, got, quad)
        printed = lemma31_rhs(n, a, s, "printed")
        assert abs(printed - quad) > 1e-4 * scale, (n, a, s, printed, quad)


def test_domain():
    import pytest

    with pytest.raises(DomainError):
        lemma21_rhs(1, 1.0, 2.5, "split")
    with pytest.raises(DomainError):
        lemma21_rhs(1, 1.0, 2.0)
    with pytest.raises(DomainError):
        lemma21_rhs(0, 1.0, 3.0, "bogus")
    with pytest.raises(DomainError):
        lemma21_rhs(0, -1.0, 3.0)
    with pytest.raises(DomainError):
        lemma31_rhs(0, 1.0, 3.0, "printed", "series")
    with pytest.raises(DomainError):
        lemma31_rhs(0, 1.0, 3.0, "unprinted")
    with pytest.raises(DomainError):
        lemma31_rhs(1, 1.0, 1.5, "corrected")


if __name__ == "__main__":
    test_triangulation()
    test_unsplit_region()
    test_sinh_identity()
    test_domain()
