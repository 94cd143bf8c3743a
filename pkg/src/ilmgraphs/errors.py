"""Exception types shared across the package.

The CLI maps these onto exit codes: UsageError -> 2, CapacityError -> 3.
Verification failures are reported, not raised, and map to exit 1.
"""


class UsageError(ValueError):
    """Malformed input: bad graph name, bad file format, bad argument combination."""


class SequenceParseError(UsageError):
    """Binary sequence spec does not match the accepted grammar."""


class CapacityError(RuntimeError):
    """A requested computation exceeds a configured size cap or budget."""
