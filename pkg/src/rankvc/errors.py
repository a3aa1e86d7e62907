"""Exception hierarchy shared across the package."""


class RankVCError(Exception):
    """Base class for all package errors."""


class InputError(RankVCError, ValueError):
    """Malformed input: bad indices, dimensions, labels or file contents."""


class RetryableError(RankVCError):
    """A randomized step hit a bad draw; the caller may resample and retry."""


class DenominatorCollision(RetryableError):
    """A rational entry has a denominator divisible by the chosen prime."""


class PrimeSearchExhausted(RetryableError):
    """No prime was found in the requested interval within the draw limit."""


class ContractLoopError(RankVCError):
    """Attempted to contract a loop element."""


class PreconditionError(RankVCError):
    """An operation was called outside its documented precondition."""


class DegenerateFlat(RankVCError):
    """The flat spanned by a neighbourhood has rank zero (or is empty)."""


class SchwartzZippelFailure(RankVCError):
    """A random combination landed on a detectably bad point (e.g. zero)."""


class BitControlError(RankVCError):
    """Repeated denominator collisions while reducing modulo random primes."""

    def __init__(self, message, primes_tried=()):
        super().__init__(message)
        self.primes_tried = tuple(primes_tried)


class OracleLimitError(RankVCError):
    """Instance too large for an exhaustive oracle."""
