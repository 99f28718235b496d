"""Exception types shared across the workbench.

Every error that a verification suite can map to an exit code lives here,
so the CLI can translate them uniformly.
"""


class CogworkError(Exception):
    """Base class for all workbench errors."""


class ParseError(CogworkError):
    """Malformed expression or spec file."""


class DenominatorVanishes(CogworkError):
    """A specialization hit a zero denominator (outside the generic locus)."""


class SingularMatrix(CogworkError):
    """A matrix that must be invertible is not."""


class DegreeTooLarge(CogworkError):
    """A filtration-degree computation exceeded the configured caps."""


class NotConfluent(CogworkError):
    """A rewrite system has an unresolved overlap ambiguity."""


class NotStabilized(CogworkError):
    """A cotensor dimension did not stabilize at the requested degree."""


class NotConnected(CogworkError):
    """A hom-algebra lacks a nonzero certificate; the check would be vacuous."""


class NotACocycle(CogworkError):
    """A candidate group 2-cocycle fails the cocycle identity."""


class NotAST(CogworkError):
    """A parameter matrix fails the p_ii = 1, p_ij p_ji = 1 conditions."""


class NotPlusMinusOne(CogworkError):
    """A parameter matrix entry is not +1 or -1 where it must be."""


class CongruenceWitnessInvalid(CogworkError):
    """The supplied P does not satisfy F = P G P^t."""


class SimilarityWitnessInvalid(CogworkError):
    """The supplied P does not satisfy F = P G P^{-1}."""


class NoCharacter(CogworkError):
    """The algebra admits no character compatible with the request."""


class NotYD(CogworkError):
    """The input fails the Yetter-Drinfeld compatibility condition."""


class NotABimodule(CogworkError):
    """The input fails a bimodule axiom."""


class BasisCollapse(CogworkError):
    """Internal: a higher relation killed a lower basis word; the fast slice
    engine is invalid for this presentation and callers fall back to the
    brute-force ideal slices."""
