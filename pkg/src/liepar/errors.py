"""Error taxonomy.

DomainError: the caller handed us something outside an operation's
domain (not a subalgebra, not parabolic, flag invalid, ...).  CLI exit 1.

InternalCheckError: a cross-check between two routes that are provably
equivalent disagreed, or a hard postcondition assertion failed.  These
indicate a bug or a genuine gap and are never silently patched.  CLI
exit 2.
"""


class DomainError(ValueError):
    pass


class InternalCheckError(AssertionError):
    pass
