import pytest

from ilmgraphs.errors import SequenceParseError, UsageError
from ilmgraphs.sequence import (
    NAMED_SEQUENCES,
    parse_sequence,
    resolve_sequence,
)


def test_parse_literal():
    seq = parse_sequence("1101")
    assert seq.bits(4) == "1101"
    assert seq.defined_through(4)
    assert not seq.defined_through(5)


def test_parse_periodic_tail():
    seq = parse_sequence("(10)*")
    assert seq.bits(6) == "101010"
    assert seq.defined_through(1000)


def test_parse_prefix_plus_tail():
    seq = parse_sequence("1(100)*")
    assert seq.bits(7) == "1100100"


def test_parse_rejects_garbage():
    for bad in ("", "102", "(10", "10)*", "(10)*1", "( )*", "(10)**"):
        with pytest.raises(SequenceParseError):
            parse_sequence(bad)


def test_named_sequences_resolve():
    for name, text in NAMED_SEQUENCES.items():
        seq = resolve_sequence(name)
        assert seq.text == text
    assert resolve_sequence("ones").bits(3) == "111"
    assert resolve_sequence("zeros").bits(3) == "000"


def test_resolve_passes_through_specs():
    assert resolve_sequence("(01)*").bits(4) == "0101"
    with pytest.raises(UsageError):
        resolve_sequence("no-such-name")


def test_finite_sequence_exhaustion():
    seq = parse_sequence("10")
    assert seq.bit(0) == 1
    assert seq.bit(1) == 0
    with pytest.raises(UsageError):
        seq.bit(2)


def test_tau_zero_positions():
    # tau(j) is the index of the j-th zero bit
    seq = parse_sequence("1(100)*")
    assert seq.tau(1) == 2
    assert seq.tau(2) == 3
    assert seq.tau(3) == 5
    assert parse_sequence("(1)*").tau(1) is None
    assert parse_sequence("(01)*").tau(1) == 0


def test_beta_largest_zero_at_or_before():
    seq = parse_sequence("1(100)*")
    # bits: 1 1 0 0 1 0 0 ...
    assert seq.beta(1) is None
    assert seq.beta(2) == 2
    assert seq.beta(3) == 3
    assert seq.beta(4) == 3
    assert seq.beta(5) == 5


def test_gap_bound_is_one_plus_longest_one_run():
    assert parse_sequence("(01)*").gap_bound() == 2
    assert parse_sequence("(0)*").gap_bound() == 1
    assert parse_sequence("(110)*").gap_bound() == 3
    assert parse_sequence("1(100)*").gap_bound() == 3
    # a tail with no zeros never revisits the anti-transitive step
    assert parse_sequence("(1)*").gap_bound() is None
    assert parse_sequence("0(1)*").gap_bound() is None


def test_hamiltonian_threshold():
    # the returned index j is a zero having another zero at i <= j-2
    for text in ("(01)*", "(10)*", "1(100)*", "(0)*"):
        seq = parse_sequence(text)
        j = seq.hamiltonian_threshold()
        assert j is not None
        assert seq.bit(j) == 0
        assert any(seq.bit(i) == 0 for i in range(0, j - 1))
    assert parse_sequence("(1)*").hamiltonian_threshold() is None
    # two zeros back to back never satisfy the gap requirement alone
    assert parse_sequence("00(1)*").hamiltonian_threshold() is None


def test_describe_mentions_pattern():
    seq = parse_sequence("1(100)*")
    assert "1(100)*" in seq.describe()
