"""Exception hierarchy for the q-matroid engine."""


class QMatroidError(Exception):
    """Base class for every error raised by this package."""


class NonPrimeModulus(QMatroidError, ValueError):
    pass


class DegreeTooLarge(QMatroidError, ValueError):
    pass


class EmptyList(QMatroidError, ValueError):
    pass


class DimensionMismatch(QMatroidError, ValueError):
    pass


class LatticeTooLarge(QMatroidError, RuntimeError):
    pass


class NotAMember(QMatroidError, KeyError):
    pass


class NotTotal(QMatroidError, ValueError):
    pass


class BadRank(QMatroidError, ValueError):
    pass


class BadDivisibility(QMatroidError, ValueError):
    pass


class NotCoprime(QMatroidError, ValueError):
    pass


class RankDeficientG(QMatroidError, ValueError):
    pass


class ZeroSpace(QMatroidError, ValueError):
    pass


class PathEdgeMissing(QMatroidError, KeyError):
    pass


class UnknownFixture(QMatroidError, KeyError):
    pass


class AxiomViolation(QMatroidError):
    """A table, family or map fails an axiom system.

    ``report`` carries the full :class:`~qmatroid.axioms.AxiomReport`.
    """

    def __init__(self, report):
        self.report = report
        failed = report.first_failure()
        msg = f"{report.system}: axiom {failed.axiom} fails" if failed else report.system
        if failed is not None and failed.witness is not None:
            parts = ", ".join(f"{k}={v}" for k, v in failed.witness.roles)
            msg += f" (witness {parts})"
        super().__init__(msg)
