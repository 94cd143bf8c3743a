"""Packed-bitset helpers.

Adjacency rows and vertex sets are stored as little-endian uint64 words:
bit j of a length-n set lives in word j // 64 at position j % 64. All
helpers keep the unused tail bits of the last word zeroed so popcounts
and equality checks stay honest.
"""

from typing import Iterable, Iterator, List

import numpy as np

WORD_BITS = 64
_ONE = np.uint64(1)


def word_count(n_bits: int) -> int:
    return (n_bits + WORD_BITS - 1) // WORD_BITS


def tail_mask(n_bits: int) -> np.uint64:
    """Mask of valid bits in the final word of a length-n_bits set."""
    r = n_bits % WORD_BITS
    if r == 0:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << r) - 1)


def zeros(n_bits: int) -> np.ndarray:
    return np.zeros(word_count(n_bits), dtype=np.uint64)


def full(n_bits: int) -> np.ndarray:
    w = np.full(word_count(n_bits), 0xFFFFFFFFFFFFFFFF, dtype=np.uint64)
    if len(w):
        w[-1] = tail_mask(n_bits)
    return w


def from_indices(n_bits: int, ids: Iterable[int]) -> np.ndarray:
    w = zeros(n_bits)
    for i in ids:
        if not 0 <= i < n_bits:
            raise IndexError(f"bit {i} out of range for size {n_bits}")
        w[i // WORD_BITS] |= _ONE << np.uint64(i % WORD_BITS)
    return w


def get_bit(words: np.ndarray, i: int) -> bool:
    return bool((words[i // WORD_BITS] >> np.uint64(i % WORD_BITS)) & _ONE)


def popcount(words: np.ndarray) -> int:
    return int(np.bitwise_count(words).sum())


def iter_bits(words: np.ndarray) -> Iterator[int]:
    """Yield set bit indices in increasing order."""
    for k in range(len(words)):
        w = int(words[k])
        base = k * WORD_BITS
        while w:
            low = w & -w
            yield base + low.bit_length() - 1
            w ^= low


def to_indices(words: np.ndarray) -> List[int]:
    return list(iter_bits(words))


def complement(words: np.ndarray, n_bits: int) -> np.ndarray:
    out = ~words
    if len(out):
        out[-1] &= tail_mask(n_bits)
    return out


def to_int(words: np.ndarray) -> int:
    """Pack into one Python int (bit j of the set == bit j of the int)."""
    acc = 0
    for k in range(len(words) - 1, -1, -1):
        acc = (acc << WORD_BITS) | int(words[k])
    return acc


def from_int(n_bits: int, value: int) -> np.ndarray:
    w = zeros(n_bits)
    mask = (1 << WORD_BITS) - 1
    for k in range(len(w)):
        w[k] = (value >> (k * WORD_BITS)) & mask
    return w


def pack_bool_matrix(dense: np.ndarray) -> np.ndarray:
    """Pack an (r, n) boolean matrix into (r, word_count(n)) uint64 rows."""
    r, n = dense.shape
    W = word_count(n)
    padded = np.zeros((r, W * WORD_BITS), dtype=np.uint8)
    padded[:, :n] = dense.astype(np.uint8)
    packed8 = np.packbits(padded, axis=1, bitorder="little")
    return packed8.view(np.uint64).reshape(r, W).copy()


def unpack_to_bool(words: np.ndarray, n_bits: int) -> np.ndarray:
    """Inverse of pack_bool_matrix; returns an (r, n_bits) boolean matrix."""
    r = words.shape[0]
    bits8 = np.unpackbits(words.view(np.uint8).reshape(r, -1), axis=1, bitorder="little")
    return bits8[:, :n_bits].astype(bool)


def place_bits(dst: np.ndarray, src: np.ndarray, offset: int) -> None:
    """OR the rows of src into dst starting at bit position `offset`.

    src rows hold some n_src-bit sets (tail bits clean); dst rows must be
    wide enough to hold offset + n_src bits. Vectorized over rows.
    """
    q, r = divmod(offset, WORD_BITS)
    Ws = src.shape[1]
    Wd = dst.shape[1]
    if r == 0:
        hi = min(Wd, q + Ws)
        dst[:, q:hi] |= src[:, : hi - q]
        return
    rs = np.uint64(r)
    inv = np.uint64(WORD_BITS - r)
    lo_parts = src << rs
    hi_parts = src >> inv
    hi = min(Wd, q + Ws)
    dst[:, q:hi] |= lo_parts[:, : hi - q]
    hi2 = min(Wd, q + 1 + Ws)
    dst[:, q + 1 : hi2] |= hi_parts[:, : hi2 - q - 1]
