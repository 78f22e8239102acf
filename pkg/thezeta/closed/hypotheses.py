# +
"""
Registry of candidate closed forms.

Every theorem family (kernel x parity), every Mellin kernel and the sinh
Parseval identity hold one or more candidates; verification marks exactly
one of them canonical.
A candidate fixes everything that the printed statements leave open:
the auxiliary function (kind and variant), the kernel scale, the
trigonometric reading of the integrand and an overall sign.
"""
from math import pi

from thezeta.errors import DomainError, UnresolvedHypothesis


class HypothesisCandidate:
    def __init__(
        self, id, description, aux=None, variant="printed", scale=None, reading=None, sign=1
    ):
        self.id = id
        self.description = description
        self.aux = aux
        self.variant = variant
        self.scale = scale
        self.reading = reading
        self.sign = sign

    def as_dict(self):
        return dict(
            id=self.id,
            description=self.description,
            aux=self.aux,
            variant=self.variant,
            scale=self.scale,
            reading=self.reading,
            sign=self.sign,
        )

    def __repr__(self):
        return f"HypothesisCandidate({self.id!r}, aux={self.aux}/{self.variant}, scale={self.scale}, reading={self.reading}, sign={self.sign:+d})"


_registry = {}
_canonical = {}


def register(family, candidate):
    cands = _registry.setdefault(family, {})
    if candidate.id in cands:
        raise DomainError(f"{family}: candidate {candidate.id!r} is already registered")
    cands[candidate.id] = candidate


def families():
    return list(_registry)


def candidates(family):
    try:
        return list(_registry[family].values())
    except KeyError:
        raise DomainError(f"no candidates registered for {family!r}")


def canonical(family):
    if family not in _registry:
        raise DomainError(f"no candidates registered for {family!r}")
    if family not in _canonical:
        raise UnresolvedHypothesis(f"{family}: no canonical candidate (resolution has not run)")
    return _canonical[family]


def candidate(family, cid="canonical"):
    if cid == "canonical":
        cid = canonical(family)
    try:
        return _registry[family][cid]
    except KeyError:
        raise DomainError(f"{family}: unknown candidate {cid!r}")


def mark_canonical(family, cid):
    candidate(family, cid)
    _canonical[family] = cid


def is_resolved(family):
    return family in _canonical


def reset():
    _canonical.clear()


def snapshot():
    return dict(_canonical)


def restore(marks):
    _canonical.clear()
    _canonical.update(marks)


def _printed(family, aux, scale, reading, description):
    register(family, HypothesisCandidate("printed", description, aux, "printed", scale, reading))


def _register_defaults():
    half, one, two = pi / 2, pi, 2 * pi

    _printed("bose-even", 1, two, "sin", "P1 with 1/(e^2πt - 1)")

    _printed("sinh-even", 2, one, "sin", "P2 (printed under the label P1) with 1/sinh πt")
    register("sinh-even", HypothesisCandidate("label-p1", "P1 as labelled", 1, "printed", one, "sin"))

    _printed("fermi-even", 3, two, "sin", "P3 with 1/(e^2πt + 1)")
    register("fermi-even", HypothesisCandidate("printed@pi", "P3 with 1/(e^πt + 1)", 3, "printed", one, "sin"))
    register("fermi-even", HypothesisCandidate("label-p1", "P1 as labelled", 1, "printed", two, "sin"))
    register(
        "fermi-even",
        HypothesisCandidate(
            "corrected", "a^(1-σ)/(σ-1) - ζ(σ,a+1/2) with 1/(e^2πt + 1)", 3, "rederived@2pi", two, "sin"
        ),
    )
    register(
        "fermi-even",
        HypothesisCandidate(
            "corrected@pi", "a^(1-σ)/(σ-1) - ζ(σ,a+1/2) with 1/(e^πt + 1)", 3, "rederived@2pi", one, "sin"
        ),
    )

    _printed("sech-even", 4, half, "sin", "P4 with 1/cosh(πt/2)")
    register("sech-even", HypothesisCandidate("printed@pi", "P4 with 1/cosh πt", 4, "printed", one, "sin"))
    register("sech-even", HypothesisCandidate("label-p1", "P1 as labelled", 1, "printed", half, "sin"))
    register(
        "sech-even",
        HypothesisCandidate("cos-reading", "P4, cos(s·arctan(t/a)) integrand", 4, "printed", half, "cos"),
    )
    register(
        "sech-even",
        HypothesisCandidate("corrected", "4 P4, cos(s·arctan(t/a)) integrand", 4, "rederived", half, "cos"),
    )
    register(
        "sech-even",
        HypothesisCandidate("corrected@pi", "4 P4, cos integrand, 1/cosh πt", 4, "rederived", one, "cos"),
    )

    _printed("bose-odd", 1, two, "cos", "P1 with 1/(e^2πt - 1)")
    register("bose-odd", HypothesisCandidate("corrected", "-P1 (opposite sign)", 1, "printed", two, "cos", -1))

    _printed("sinh-odd", 2, one, "cos", "P2 with 1/sinh πt")
    register("sinh-odd", HypothesisCandidate("corrected", "-P2 (opposite sign)", 2, "printed", one, "cos", -1))

    _printed("fermi-odd", 3, one, "cos", "P3 with 1/(e^πt + 1)")
    register("fermi-odd", HypothesisCandidate("printed@2pi", "P3 with 1/(e^2πt + 1)", 3, "printed", two, "cos"))
    register(
        "fermi-odd",
        HypothesisCandidate(
            "corrected",
            "-(a^(1-σ)/(σ-1) - 2^(1-σ) ζ(σ,(a+1)/2)) with 1/(e^πt + 1)",
            3,
            "rederived@pi",
            one,
            "cos",
            -1,
        ),
    )
    register(
        "fermi-odd",
        HypothesisCandidate(
            "corrected@2pi",
            "-(a^(1-σ)/(σ-1) - 2^(1-σ) ζ(σ,(a+1)/2)) with 1/(e^2πt + 1)",
            3,
            "rederived@pi",
            two,
            "cos",
            -1,
        ),
    )

    _printed("sech-odd", 4, half, "sin", "P4 with 1/cosh(πt/2)")
    register("sech-odd", HypothesisCandidate("printed@pi", "P4 with 1/cosh πt", 4, "printed", one, "sin"))
    register(
        "sech-odd",
        HypothesisCandidate("cos-reading", "P4, cos(s·arctan(t/a)) integrand", 4, "printed", half, "cos"),
    )
    register("sech-odd", HypothesisCandidate("corrected", "4 P4", 4, "rederived", half, "sin"))

    for kind in ("bose", "fermi", "sinh", "cosh"):
        for cid, c in (("half", "1/2"), ("printed", "1"), ("double", "2")):
            register(f"mellin-{kind}", HypothesisCandidate(cid, f"{c} x printed right side"))

    lhs = "∫ tanh(w/2) e^-aw w^k L_2n^k(aw)"
    register(
        "parseval-sinh",
        HypothesisCandidate("printed", f"(-1)^n π (2n)! / (4Γ(s)) {lhs} (1/(e^w-1) + 1/2 - 1/w) dw"),
    )
    register("parseval-sinh", HypothesisCandidate("corrected", f"(-1)^n (2n)! / (2Γ(s)) {lhs} dw"))


_register_defaults()


def test_registry():
    import pytest

    saved = snapshot()
    reset()
    try:
        assert [c.id for c in candidates("bose-even")] == ["printed"]
        assert len(candidates("fermi-even")) == 5
        assert {c.id for c in candidates("mellin-sinh")} == {"half", "printed", "double"}
        assert [c.id for c in candidates("parseval-sinh")] == ["printed", "corrected"]
        for family in families():
            assert len(candidates(family)) >= 1
        with pytest.raises(UnresolvedHypothesis):
            canonical("sech-odd")
        with pytest.raises(DomainError):
            canonical("gauss-even")
        with pytest.raises(DomainError):
            mark_canonical("sech-odd", "nonsense")
        mark_canonical("sech-odd", "corrected")
        assert candidate("sech-odd").sign == 1 and candidate("sech-odd").variant == "rederived"
        reset()
        assert not is_resolved("sech-odd")
    finally:
        restore(saved)


if __name__ == "__main__":
    test_registry()
