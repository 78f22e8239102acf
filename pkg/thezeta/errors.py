# +
class ZetaError(RuntimeError):
    pass


class DomainError(ZetaError, ValueError):
    pass


class PoleProximity(DomainError):
    def __init__(self, where, value, pole, delta):
        super().__init__(f"{where}: {value} is within {delta} of the pole at {pole}")
        self.where = where
        self.value = value
        self.pole = pole


class QuadratureFailure(ZetaError):
    pass


class NoConvergence(QuadratureFailure):
    pass


class BadIntegrand(QuadratureFailure):
    pass


class UnresolvedHypothesis(ZetaError):
    pass


class AmbiguousResolution(ZetaError):
    def __init__(self, family, survivors):
        super().__init__(
            f"{family}: {len(survivors)} surviving candidates {list(survivors)} (expected 1)"
        )
        self.family = family
        self.survivors = list(survivors)
