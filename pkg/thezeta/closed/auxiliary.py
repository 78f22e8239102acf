# +
from thezeta.errors import DomainError, PoleProximity
from thezeta.special.gamma import DELTA
from thezeta.special.zeta import hurwitz_zeta

AUX_VARIANTS = {
    1: ("printed",),
    2: ("printed",),
    3: ("printed", "rederived@2pi", "rederived@pi"),
    4: ("printed", "rederived"),
}


def p_aux(kind, a, sigma, variant="printed"):
    """
    Auxiliary functions of the closed forms (ζ = hurwitz_zeta):
        P1 = ζ(σ,a) - a^-σ/2 - a^(1-σ)/(σ-1)
        P2 = 2^(2-σ) ζ(σ,a/2) - 2ζ(σ,a) - a^-σ
        P3 = a^(1-σ)/(σ-1) - ζ(σ,a) - 2^-σ ζ(σ,a/2)
        P4 = 2^-2σ (ζ(σ,(a+1)/4) - ζ(σ,(a+3)/4))
    re-derived variants:
        P3 rederived@2pi = a^(1-σ)/(σ-1) - ζ(σ,a+1/2)
        P3 rederived@pi  = a^(1-σ)/(σ-1) - 2^(1-σ) ζ(σ,(a+1)/2)
        P4 rederived     = 4 P4
    """
    if kind not in AUX_VARIANTS:
        raise DomainError(f"p_aux: kind should be one of 1..4, got {kind}")
    if variant not in AUX_VARIANTS[kind]:
        raise DomainError(f"p_aux: kind {kind} has no variant {variant!r}")
    a, sigma = complex(a), complex(sigma)
    if not a.real > 0:
        raise DomainError(f"p_aux: Re(a) should be positive, got {a}")
    if abs(sigma - 1) < DELTA:
        raise PoleProximity("p_aux", sigma, 1.0, DELTA)

    if kind == 1:
        return hurwitz_zeta(sigma, a) - a ** (-sigma) / 2 - a ** (1 - sigma) / (sigma - 1)
    if kind == 2:
        return 2 ** (2 - sigma) * hurwitz_zeta(sigma, a / 2) - 2 * hurwitz_zeta(sigma, a) - a ** (-sigma)
    if kind == 3:
        pole = a ** (1 - sigma) / (sigma - 1)
        if variant == "printed":
            return pole - hurwitz_zeta(sigma, a) - 2 ** (-sigma) * hurwitz_zeta(sigma, a / 2)
        if variant == "rederived@2pi":
            return pole - hurwitz_zeta(sigma, a + 0.5)
        return pole - 2 ** (1 - sigma) * hurwitz_zeta(sigma, (a + 1) / 2)
    p4 = 2 ** (-2 * sigma) * (hurwitz_zeta(sigma, (a + 1) / 4) - hurwitz_zeta(sigma, (a + 3) / 4))
    return 4 * p4 if variant == "rederived" else p4


def test_values():
    from math import pi

    assert abs(p_aux(1, 1, 2) - (pi**2 / 6 - 1.5)) < 1e-14
    assert abs(p_aux(1, 1, 2) - 0.1449340668) < 1e-10
    assert abs(p_aux(4, 1, 2) - (pi**2 / 2 - pi**2 / 6) / 16) < 1e-14
    assert abs(p_aux(4, 1, 2) - 0.2056167583) < 1e-10
    assert p_aux(4, 1, 2, "rederived") == 4 * p_aux(4, 1, 2)


def test_bracket():
    """2 P1 is the bracketed integral of the Hermite representation"""
    from thezeta.special.zeta import hermite_zeta

    for a, s in [(1.0, 2.0), (0.7, 3.7), (2.3 + 0.5j, 1.5)]:
        a, s = complex(a), complex(s)
        integral = (hermite_zeta(s, a) - a ** (-s) / 2 - a ** (1 - s) / (s - 1)) / 2
        assert abs(p_aux(1, a, s) - 2 * integral) < 1e-11


def test_p3_variants():
    """the re-derived P3 forms are rewritings of sums over odd/half-integer shifts"""
    from thezeta.special.zeta import direct_series

    a, s = 0.7, 3.3
    pole = a ** (1 - s) / (s - 1)
    # ζ(s, a+1/2) = sum (a+1/2+k)^-s
    shifted, bound = direct_series(s, a + 0.5, terms=4000)
    assert abs(pole - p_aux(3, a, s, "rederived@2pi") - shifted) < bound + 1e-12
    # 2^(1-s) ζ(s, (a+1)/2) = 2 sum (a+2k+1)^-s
    odd = 2 * sum((a + 2 * k + 1) ** (-s) for k in range(20000))
    assert abs(pole - p_aux(3, a, s, "rederived@pi") - odd) < 1e-8


def test_domain():
    import pytest

    with pytest.raises(PoleProximity):
        p_aux(1, 1.0, 1.0 + 1e-9)
    with pytest.raises(PoleProximity):
        p_aux(4, 1.0, 1.0)
    with pytest.raises(DomainError):
        p_aux(5, 1.0, 2.0)
    with pytest.raises(DomainError):
        p_aux(2, 1.0, 2.0, "rederived")
    with pytest.raises(DomainError):
        p_aux(1, -1.0, 2.0)


if __name__ == "__main__":
    test_values()
    test_bracket()
    test_p3_variants()
    test_domain()
