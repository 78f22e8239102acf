# +
from scipy.special import comb

from thezeta.closed import hypotheses
from thezeta.closed.auxiliary import p_aux
from thezeta.errors import DomainError, PoleProximity
from thezeta.special.gamma import DELTA

KERNEL_OF = {"bose": "bose", "sinh": "sinh", "fermi": "fermi", "sech": "cosh"}


def family_name(family, parity):
    """bose -> bose-even, ...; full family names pass through"""
    if family in KERNEL_OF:
        return f"{family}-{parity}"
    base, _, p = family.partition("-")
    if base not in KERNEL_OF or p != parity:
        raise DomainError(f"not a {parity} theorem family: {family!r}")
    return family


def binomial_terms(family, n, a, s, candidate="canonical", parity="even"):
    """
    The summands (-1)^(m+n) C(N,m) a^m sign P(a, m+s-N) / 2, m = 0..N,
    N = 2n (even) or 2n+1 (odd), with P and sign fixed by the candidate.
    """
    name = family_name(family, parity)
    cand = hypotheses.candidate(name, candidate)
    if int(n) != n or n < 0:
        raise DomainError(f"power index should be a non-negative integer, got {n}")
    n = int(n)
    a, s = complex(a), complex(s)
    N = 2 * n if parity == "even" else 2 * n + 1
    if not a.real > 0:
        raise DomainError(f"{name}: Re(a) should be positive, got {a}")
    if not N < s.real:
        raise DomainError(f"{name}: needs {N} < Re(s), got n={n}, s={s}")
    sigmas = [m + s - N for m in range(N + 1)]
    for sigma in sigmas:
        if abs(sigma - 1) < DELTA:
            raise PoleProximity(name, sigma, 1.0, DELTA)
    return [
        (-1) ** (m + n) * comb(N, m, exact=True) * a**m * cand.sign * p_aux(cand.aux, a, sigma, cand.variant) / 2
        for m, sigma in enumerate(sigmas)
    ]


def closed_even(family, n, a, s, candidate="canonical"):
    """
    ∫_0^∞ t^2n sin(s·arctan(t/a)) / (a²+t²)^(s/2) K(t) dt
        = 1/2 sum_{m=0}^{2n} (-1)^(m+n) C(2n,m) a^m P(a, m+s-2n)
    family: bose, sinh, fermi or sech (or the full name, e.g. "sinh-even").
    """
    return sum(binomial_terms(family, n, a, s, candidate, "even"))


def closed_odd(family, n, a, s, candidate="canonical"):
    """
    ∫_0^∞ t^(2n+1) cos(s·arctan(t/a)) / (a²+t²)^(s/2) K(t) dt
        = 1/2 sum_{m=0}^{2n+1} (-1)^(m+n) C(2n+1,m) a^m P(a, m+s-2n-1)
    (the sech family reads sin in place of cos, see the candidates).
    """
    return sum(binomial_terms(family, n, a, s, candidate, "odd"))


def closed_form(family, n, a, s, candidate="canonical"):
    """dispatch on the full family name"""
    if family.endswith("-even"):
        return closed_even(family, n, a, s, candidate)
    if family.endswith("-odd"):
        return closed_odd(family, n, a, s, candidate)
    raise DomainError(f"{family!r} has no closed form")


def test_collapse():
    from thezeta.closed.auxiliary import p_aux

    for a, s in [(1.0, 2.0), (0.7, 3.7), (2.3 + 0.5j, 1.5 - 1j)]:
        assert closed_even("bose", 0, a, s, "printed") - 0.5 * p_aux(1, a, s) == 0
    assert abs(closed_even("bose", 0, 1, 2, "printed") - 0.0724670334) < 1e-10


def test_odd_shape():
    from thezeta.closed.auxiliary import p_aux

    for a, s in [(1.0, 4.0), (0.7, 3.7)]:
        ref = 0.5 * (p_aux(1, a, s - 1) - a * p_aux(1, a, s))
        assert abs(closed_odd("bose", 0, a, s, "printed") - ref) < 1e-15 * max(1, abs(ref))
        assert closed_odd("bose", 0, a, s, "corrected") == -closed_odd("bose", 0, a, s, "printed")


def test_reassociation():
    for family in ["bose", "sinh", "fermi", "sech"]:
        for n, a, s in [(1, 1.0, 3.7), (2, 2.3, 6.5), (3, 0.7, 7.5)]:
            terms = binomial_terms(family, n, a, s, "printed")
            fwd, bwd = sum(terms), sum(reversed(terms))
            scale = sum(abs(t) for t in terms)
            assert abs(fwd - bwd) <= 8 * len(terms) * 2.2e-16 * scale


def test_domain():
    import pytest

    from thezeta.errors import UnresolvedHypothesis

    with pytest.raises(PoleProximity):
        closed_even("bose", 1, 1.0, 3.0, "printed")
    with pytest.raises(PoleProximity):
        closed_odd("sinh", 0, 1.0, 2.0, "printed")
    with pytest.raises(DomainError):
        closed_even("bose", 2, 1.0, 3.5, "printed")
    with pytest.raises(DomainError):
        closed_odd("bose", 1, 1.0, 3.0, "printed")
    with pytest.raises(DomainError):
        closed_even("gauss", 0, 1.0, 2.0, "printed")
    with pytest.raises(DomainError):
        closed_even("bose-odd", 0, 1.0, 2.0, "printed")
    with pytest.raises(DomainError):
        closed_form("open-I", 0, 1.0, 2.0)
    saved = hypotheses.snapshot()
    hypotheses.reset()
    try:
        with pytest.raises(UnresolvedHypothesis):
            closed_even("fermi", 0, 1.0, 2.5)
    finally:
        hypotheses.restore(saved)


if __name__ == "__main__":
    test_collapse()
    test_odd_shape()
    test_reassociation()
    test_domain()
