"""Binary step sequences and their derived indices.

A sequence spec is either a finite bit string or a bit string followed by a
parenthesized repeating tail:

    BITS  ::= [01]+
    SPEC  ::= BITS | BITS? "(" BITS ")*"

Bit s_t = 1 selects a transitive cloning step at time t, s_t = 0 an
anti-transitive one. Specs with a tail describe an infinite sequence; finite
specs only define bits 0..len-1 and generation past the end is a usage error.
"""

import re
from dataclasses import dataclass
from typing import Optional

from .errors import SequenceParseError, UsageError

_SPEC_RE = re.compile(r"^([01]*)(?:\(([01]+)\)\*)?$")


@dataclass(frozen=True)
class SequenceSpec:
    """Parsed step sequence: finite prefix plus optional repeating tail."""

    prefix: str
    tail: str
    text: str

    @property
    def finite(self) -> bool:
        return not self.tail

    def __len__(self) -> int:
        if self.finite:
            return len(self.prefix)
        raise UsageError(f"sequence {self.text!r} is infinite")

    def bit(self, i: int) -> int:
        """s_i as 0/1."""
        if i < 0:
            raise UsageError(f"negative sequence index {i}")
        if i < len(self.prefix):
            return int(self.prefix[i])
        if not self.tail:
            raise UsageError(
                f"sequence {self.text!r} has only {len(self.prefix)} bits, index {i} requested"
            )
        return int(self.tail[(i - len(self.prefix)) % len(self.tail)])

    def bits(self, count: int) -> str:
        return "".join(str(self.bit(i)) for i in range(count))

    def defined_through(self, count: int) -> bool:
        """True when bits 0..count-1 all exist."""
        return bool(self.tail) or count <= len(self.prefix)

    def tau(self, j: int, search_limit: int = 4096) -> Optional[int]:
        """Index of the j-th zero (j >= 1), or None if there is no such zero."""
        if j < 1:
            raise UsageError("tau index must be >= 1")
        seen = 0
        horizon = len(self.prefix) + (len(self.tail) * j if self.tail else 0)
        horizon = min(max(horizon, len(self.prefix)), search_limit)
        for i in range(horizon):
            if self.bit(i) == 0:
                seen += 1
                if seen == j:
                    return i
        return None

    def beta(self, t: int) -> Optional[int]:
        """Largest index b <= t with s_b = 0, or None."""
        for b in range(t, -1, -1):
            if not self.defined_through(b + 1):
                continue
            if self.bit(b) == 0:
                return b
        return None

    def gap_bound(self) -> Optional[int]:
        """Smallest k such that the sequence has no k contiguous 1s.

        Equals 1 + the longest run of 1s. None when runs are unbounded
        (a tail with no zero). For finite specs the value reflects the
        prefix alone.
        """
        if self.tail and "0" not in self.tail:
            return None
        s = self.prefix + self.tail * 3
        if not s:
            return None
        longest = 0
        run = 0
        for ch in s:
            if ch == "1":
                run += 1
                longest = max(longest, run)
            else:
                run = 0
        return longest + 1

    def hamiltonian_threshold(self, search_limit: int = 4096) -> Optional[int]:
        """Smallest zero index j having an earlier zero at i <= j-2, or None.

        Graphs at times t >= j+1 satisfy the two-non-consecutive-zeros
        Hamiltonicity hypothesis.
        """
        zeros = []
        horizon = len(self.prefix) + (len(self.tail) * 4 if self.tail else 0)
        horizon = min(max(horizon, len(self.prefix)), search_limit)
        for i in range(horizon):
            if self.bit(i) == 0:
                for z in zeros:
                    if z <= i - 2:
                        return i
                zeros.append(i)
        return None

    def describe(self) -> str:
        return self.text


def parse_sequence(text: str) -> SequenceSpec:
    """Parse a sequence spec; raises SequenceParseError on bad syntax."""
    if not isinstance(text, str):
        raise SequenceParseError(f"sequence spec must be a string, got {type(text).__name__}")
    m = _SPEC_RE.match(text)
    if not m:
        raise SequenceParseError(f"bad sequence spec {text!r}")
    prefix, tail = m.group(1), m.group(2) or ""
    if not prefix and not tail:
        raise SequenceParseError("empty sequence spec")
    return SequenceSpec(prefix=prefix, tail=tail, text=text)


#: Named sequences accepted by the CLI and the builtin corpus.
NAMED_SEQUENCES = {
    "ones": "(1)*",
    "zeros": "(0)*",
    "alt01": "(01)*",
    "alt10": "(10)*",
    "burst": "1(100)*",
}


def resolve_sequence(text: str) -> SequenceSpec:
    """Accept either a named sequence or a literal spec."""
    return parse_sequence(NAMED_SEQUENCES.get(text, text))
