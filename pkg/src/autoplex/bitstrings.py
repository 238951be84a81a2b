"""Binary string kernel: storage, substring counting, repetition detection, orderings.

The BitString type is the carrier for every sequence fragment in this
package.  Internally it wraps an ASCII '0'/'1' string, which keeps slicing
and substring comparison in C; the external contract is index-level access.
"""

from __future__ import annotations

import struct
from typing import Iterable, Iterator, Union

import numpy as np

BitsLike = Union["BitString", str, Iterable[int]]


class BitString:
    """Immutable finite word over {0,1}."""

    __slots__ = ("_s",)

    def __init__(self, bits: BitsLike = ""):
        if isinstance(bits, BitString):
            s = bits._s
        elif isinstance(bits, str):
            s = bits
        else:
            s = "".join("1" if b else "0" for b in bits)
        if s.strip("01"):
            raise ValueError("bits must contain only '0' and '1'")
        self._s = s

    # -- basic protocol ------------------------------------------------

    def __len__(self) -> int:
        return len(self._s)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return BitString(self._s[i])
        return int(self._s[i])

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self._s)

    def __eq__(self, other) -> bool:
        if isinstance(other, BitString):
            return self._s == other._s
        if isinstance(other, str):
            return self._s == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._s)

    def __add__(self, other: BitsLike) -> "BitString":
        return BitString(self._s + BitString(other)._s)

    def __mul__(self, k: int) -> "BitString":
        return BitString(self._s * k)

    def __str__(self) -> str:
        return self._s

    def __repr__(self) -> str:
        if len(self._s) <= 40:
            return f"BitString({self._s!r})"
        return f"BitString({self._s[:37]!r}..., len={len(self._s)})"

    # -- conversions ---------------------------------------------------

    def to_text(self) -> str:
        """ASCII line of '0'/'1' characters."""
        return self._s

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        return cls(text.strip())

    def to_packed(self) -> bytes:
        """8-byte little-endian bit-length header, then bits LSB-first per byte."""
        n = len(self._s)
        out = bytearray(struct.pack("<Q", n))
        for i in range(0, n, 8):
            byte = 0
            for j, c in enumerate(self._s[i : i + 8]):
                if c == "1":
                    byte |= 1 << j
            out.append(byte)
        return bytes(out)

    @classmethod
    def from_packed(cls, data: bytes) -> "BitString":
        (n,) = struct.unpack("<Q", data[:8])
        chars = []
        for i in range(n):
            byte = data[8 + i // 8]
            chars.append("1" if (byte >> (i % 8)) & 1 else "0")
        return cls("".join(chars))

    def to_array(self) -> np.ndarray:
        return np.frombuffer(self._s.encode("ascii"), dtype=np.uint8) - ord("0")


def _coerce(x: BitsLike) -> BitString:
    return x if isinstance(x, BitString) else BitString(x)


EMPTY = BitString("")


# -- counting ------------------------------------------------------------


def occ(w: BitsLike, x: BitsLike) -> int:
    """Occurrences of w as a (possibly overlapping) substring of x."""
    w, x = _coerce(w), _coerce(x)
    if len(w) == 0:
        raise ValueError("pattern must be nonempty")
    n = 0
    i = x._s.find(w._s)
    while i != -1:
        n += 1
        i = x._s.find(w._s, i + 1)
    return n


def occ_block(w: BitsLike, x: BitsLike) -> int:
    """Occurrences of w in x at positions that are multiples of |w|."""
    w, x = _coerce(w), _coerce(x)
    m = len(w)
    if m == 0:
        raise ValueError("pattern must be nonempty")
    return sum(1 for i in range(0, len(x) - m + 1, m) if x._s[i : i + m] == w._s)


# -- repetitions ----------------------------------------------------------


def find_squares(x: BitsLike, min_half: int = 1) -> list[tuple[int, int]]:
    """All (i, l) with l >= min_half and x[i..i+l-1] == x[i+l..i+2l-1].

    Scans one half-length at a time over a numpy self-match mask; the
    per-length pass is linear, so the whole scan is O(|x|^2) bit
    comparisons in vectorized form.  Sorted by (i, l).
    """
    x = _coerce(x)
    if min_half < 1:
        raise ValueError("min_half must be >= 1")
    n = len(x)
    out: list[tuple[int, int]] = []
    if n < 2 * min_half:
        return out
    a = x.to_array()
    for l in range(min_half, n // 2 + 1):
        eq = (a[:-l] == a[l:]).astype(np.int64)
        # position i starts a square of half l iff eq[i:i+l] is all ones
        window = np.convolve(eq, np.ones(l, dtype=np.int64), mode="valid")
        for i in np.nonzero(window == l)[0]:
            out.append((int(i), l))
    out.sort()
    return out


def is_k_power_free(x: BitsLike, k: int) -> bool:
    """True iff no substring of x is u^k for a nonempty u."""
    if k < 2:
        raise ValueError("k must be >= 2")
    x = _coerce(x)
    n = len(x)
    if n < k:
        return True
    a = x.to_array()
    for p in range(1, n // k + 1):
        # u^k with |u| = p exists iff some window of (k-1)*p consecutive
        # positions i satisfies x[i] == x[i+p]
        eq = (a[:-p] == a[p:]).astype(np.int64)
        need = (k - 1) * p
        if len(eq) < need:
            continue
        window = np.convolve(eq, np.ones(need, dtype=np.int64), mode="valid")
        if np.any(window == need):
            return False
    return True


# -- ordering --------------------------------------------------------------


def lexlen_compare(x: BitsLike, y: BitsLike) -> int:
    """Length-lexicographic order: -1 if x first, 0 if equal, 1 if y first."""
    x, y = _coerce(x), _coerce(y)
    if len(x) != len(y):
        return -1 if len(x) < len(y) else 1
    if x._s == y._s:
        return 0
    return -1 if x._s < y._s else 1
