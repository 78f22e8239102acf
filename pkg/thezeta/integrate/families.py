# +
from math import pi

import torch

from thezeta.errors import DomainError
from thezeta.integrate.tanhsinh import integrate_half_line
from thezeta.special.transforms import arctan_cosine, arctan_sine, kernel, kernel_at_zero
from thezeta.util.tensors import as_complex, as_real

# family: (kernel, default scale, reading, parity)
FAMILIES = {
    "bose-even": ("bose", 2 * pi, "sin", "even"),
    "sinh-even": ("sinh", pi, "sin", "even"),
    "fermi-even": ("fermi", 2 * pi, "sin", "even"),
    "sech-even": ("cosh", pi / 2, "sin", "even"),
    "bose-odd": ("bose", 2 * pi, "cos", "odd"),
    "sinh-odd": ("sinh", pi, "cos", "odd"),
    "fermi-odd": ("fermi", pi, "cos", "odd"),
    "sech-odd": ("cosh", pi / 2, "sin", "odd"),
    "open-I": ("bose", None, None, "open"),
    "open-T": ("bose", None, None, "open"),
    "open-L": ("bose", None, None, "open"),
}

THEOREM_FAMILIES = [f for f, v in FAMILIES.items() if v[3] != "open"]
OPEN_FAMILIES = [f for f, v in FAMILIES.items() if v[3] == "open"]


class FamilySpec:
    """
    One integral of a family:
        even  ∫ t^2n     R(s·arctan(t/a)) / (a²+t²)^(s/2) K(t) dt
        odd   ∫ t^(2n+1) R(s·arctan(t/a)) / (a²+t²)^(s/2) K(t) dt
    R = sin or cos (reading), K the family kernel at kernel_scale.
    Open families (n is their k; a and s are unused):
        open-I  ∫ t / ((1+t²)^(k+1) (e^2πqt - 1)) dt
        open-T  ∫ t^k arctan(t) / (e^2πqt - 1) dt
        open-L  ∫ t^k log(1+t²) / (e^2πqt - 1) dt
    """

    def __init__(self, family, n=0, a=1.0, s=2.0, kernel_scale=None, q=1.0, reading=None):
        if family not in FAMILIES:
            raise DomainError(f"unknown family {family!r}, expected one of {list(FAMILIES)}")
        if int(n) != n or n < 0:
            raise DomainError(f"{family}: n should be a non-negative integer, got {n}")
        self.family = family
        self.n = int(n)
        self.a = complex(a)
        self.s = complex(s)
        self.kernel_scale = None if kernel_scale is None else float(kernel_scale)
        self.q = float(q)
        self.reading = reading
        self.check()

    @property
    def kind(self):
        return FAMILIES[self.family][0]

    @property
    def parity(self):
        return FAMILIES[self.family][3]

    @property
    def is_open(self):
        return self.parity == "open"

    @property
    def scale(self):
        if self.kernel_scale is not None:
            return self.kernel_scale
        if self.is_open:
            return 2 * pi * self.q
        return FAMILIES[self.family][1]

    @property
    def trig(self):
        return self.reading or FAMILIES[self.family][2]

    @property
    def power(self):
        return 2 * self.n + (1 if self.parity == "odd" else 0)

    def check(self):
        if self.kernel_scale is not None and not self.kernel_scale > 0:
            raise DomainError(f"{self.family}: kernel_scale should be positive")
        if self.is_open:
            if not self.q > 0:
                raise DomainError(f"{self.family}: q should be positive, got {self.q}")
            return
        if self.reading not in (None, "sin", "cos"):
            raise DomainError(f"{self.family}: reading should be sin or cos, got {self.reading!r}")
        if not self.a.real > 0:
            raise DomainError(f"{self.family}: Re(a) should be positive, got {self.a}")
        if not self.power < self.s.real:
            raise DomainError(f"{self.family}: needs {self.power} < Re(s), got n={self.n}, s={self.s}")

    def replace(self, **kwargs):
        d = dict(
            family=self.family,
            n=self.n,
            a=self.a,
            s=self.s,
            kernel_scale=self.kernel_scale,
            q=self.q,
            reading=self.reading,
        )
        d.update(kwargs)
        return FamilySpec(**d)

    def as_dict(self):
        d = dict(family=self.family, n=self.n)
        if self.is_open:
            d["q"] = self.q
        else:
            d["a"] = [self.a.real, self.a.imag]
            d["s"] = [self.s.real, self.s.imag]
        if self.kernel_scale is not None:
            d["kernel_scale"] = self.kernel_scale
        if self.reading is not None:
            d["reading"] = self.reading
        return d

    @staticmethod
    def from_dict(d):
        d = dict(d)
        for key in ("a", "s"):
            if key in d and isinstance(d[key], (list, tuple)):
                re, im = (list(d[key]) + [0.0])[:2]
                d[key] = complex(re, im)
        return FamilySpec(**d)

    def __repr__(self):
        if self.is_open:
            return f"FamilySpec({self.family}, k={self.n}, q={self.q}, scale={self.scale:.6g})"
        return (
            f"FamilySpec({self.family}, n={self.n}, a={self.a}, s={self.s}, "
            f"scale={self.scale:.6g}, reading={self.trig})"
        )

    def __eq__(self, other):
        return isinstance(other, FamilySpec) and self.as_dict() == other.as_dict()


def integrand_limit(spec):
    """value of the integrand at t = 0+"""
    if spec.is_open:
        lead = 1 / spec.scale
        if spec.family == "open-I" or (spec.family == "open-T" and spec.n == 0):
            return lead
        return 0.0
    a, s = spec.a, spec.s
    # t^p R(..) ~ coef t^order, K ~ k0 t^-pole
    if spec.trig == "sin":
        coef, order = s * a ** (-s - 1), spec.power + 1
    else:
        coef, order = a ** (-s), spec.power
    pole = 1 if spec.kind in ("bose", "sinh") else 0
    if order - pole < 0:
        raise DomainError(f"{spec}: the integrand is not integrable at t = 0")
    if order - pole > 0:
        return 0.0
    return coef * kernel_at_zero(spec.kind, spec.scale)


def family_integrand(spec):
    """vectorized t -> integrand; t = 0 gives the analytic limit"""
    limit = integrand_limit(spec)
    K = lambda t: kernel(spec.kind, t, spec.scale)

    if spec.family == "open-I":
        body = lambda t: t / (1 + t * t) ** (spec.n + 1) * K(t)
    elif spec.family == "open-T":
        body = lambda t: t**spec.n * torch.atan(t) * K(t)
    elif spec.family == "open-L":
        body = lambda t: t**spec.n * torch.log1p(t * t) * K(t)
    else:
        part = arctan_sine if spec.trig == "sin" else arctan_cosine
        a, s, p = as_complex(spec.a), as_complex(spec.s), spec.power
        body = lambda t: t**p * part(a, s, t) * K(t)

    def f(t):
        t = as_real(t)
        zero = t == 0
        safe = torch.where(zero, torch.ones_like(t), t)
        val = body(safe)
        return torch.where(zero, torch.as_tensor(limit, dtype=val.dtype), val)

    return f


def family_quadrature(spec, tol=1e-12):
    return integrate_half_line(family_integrand(spec), tol=tol, decay_rate=spec.scale)


def open_family_check(family, k, q, tol=1e-11):
    """
    Integrates an open family at tol and tol/2; returns both outcomes
    and whether they agree within the first error estimate.
    """
    spec = FamilySpec(family, n=k, q=q)
    if not spec.is_open:
        raise DomainError(f"{family} is not an open family")
    first = family_quadrature(spec, tol)
    second = family_quadrature(spec, tol / 2)
    return first, second, abs(first.value - second.value) <= first.err_estimate


def test_limits():
    f = family_integrand(FamilySpec("bose-even", 0, 1.0, 2.0))
    assert abs(f(torch.tensor([0.0]))[0] - 1 / pi) < 1e-15
    assert abs(f(torch.tensor([1e-12]))[0] - 1 / pi) < 1e-10
    f = family_integrand(FamilySpec("bose-even", 1, 1.0, 6.0))
    assert f(torch.tensor([0.0]))[0] == 0
    f = family_integrand(FamilySpec("open-I", 2, q=0.5))
    assert abs(f(torch.tensor([0.0]))[0] - 1 / pi) < 1e-15
    f = family_integrand(FamilySpec("open-L", 0, q=1.0))
    assert f(torch.tensor([0.0]))[0] == 0
    f = family_integrand(FamilySpec("sech-even", 0, 1.3, 2.5, reading="cos"))
    assert abs(f(torch.tensor([0.0]))[0] - 1.3**-2.5) < 1e-15


def test_open_T_value():
    from math import atan, exp

    f = family_integrand(FamilySpec("open-T", 1, q=1.0))
    ref = 2 * atan(2) / (exp(4 * pi) - 1)
    assert abs(f(torch.tensor([2.0]))[0] - ref) < 1e-15 * ref
    assert abs(ref - 7.72e-6) < 1e-8


def test_n0_bose_even():
    from thezeta.special.zeta import hurwitz_zeta

    out = family_quadrature(FamilySpec("bose-even", 0, 1.0, 2.0))
    ref = 0.5 * (hurwitz_zeta(2.0, 1.0) - 1.5)
    assert abs(out.value - ref) < 1e-12
    assert abs(out.value - 0.0724670334) < 1e-10
    assert abs(out.value.imag) < 1e-12


def test_sinh_even_n0():
    # SH_0(a, s) = sum_j (-1)^j (a+j)^-s - a^-s/2, summed in pairs
    a, s = 1.0, 2.0
    ref = sum((a + 2 * j) ** -s - (a + 2 * j + 1) ** -s for j in range(200000)) - a**-s / 2
    out = family_quadrature(FamilySpec("sinh-even", 0, a, s))
    assert abs(out.value - ref) < 1e-10


def test_open_families():
    for family in OPEN_FAMILIES:
        for k in [0, 1, 2]:
            for q in [0.5, 1.0, 2.0]:
                first, second, same = open_family_check(family, k, q)
                assert first.err_estimate < 1e-10
                assert same, (family, k, q, first, second)


def test_spec_checks():
    import pytest

    with pytest.raises(DomainError):
        FamilySpec("bose-even", 2, 1.0, 3.5)
    with pytest.raises(DomainError):
        FamilySpec("bose-odd", 1, 1.0, 3.0)
    with pytest.raises(DomainError):
        FamilySpec("fermi-even", 0, -1.0, 2.0)
    with pytest.raises(DomainError):
        FamilySpec("gauss-even")
    with pytest.raises(DomainError):
        FamilySpec("open-T", 1, q=0.0)
    with pytest.raises(DomainError):
        family_integrand(FamilySpec("bose-even", 0, 1.0, 2.0, reading="cos"))
    spec = FamilySpec("fermi-odd", 1, 0.7 + 0.1j, 4.5, kernel_scale=2 * pi)
    assert FamilySpec.from_dict(spec.as_dict()) == spec
    assert spec.replace(kernel_scale=None).scale == pi


if __name__ == "__main__":
    test_limits()
    test_open_T_value()
    test_n0_bose_even()
    test_sinh_even_n0()
    test_open_families()
    test_spec_checks()
