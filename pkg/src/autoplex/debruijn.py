"""Binary de Bruijn strings: generation, verification, rotation."""

from __future__ import annotations

from dataclasses import dataclass

from .bitstrings import BitString

DEFAULT_ORDER_CAP = 24


class OrderTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class DeBruijnString:
    """A de Bruijn string of the given order, remembered with its rotation
    relative to the lexicographically least representative."""

    order: int
    bits: BitString
    rotation: int = 0

    def __post_init__(self):
        if len(self.bits) != 1 << self.order:
            raise ValueError("length must be 2^order")

    def __str__(self) -> str:
        return str(self.bits)


def generate_lex_least(n: int, cap: int = DEFAULT_ORDER_CAP) -> DeBruijnString:
    """Lexicographically least de Bruijn string of order n.

    Concatenates, in lexicographic order, the Lyndon words over {0,1} whose
    length divides n (iterative Duval successor, O(n) working space per
    word).  The result starts with 0^n and ends with 1^n.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > cap:
        raise OrderTooLarge(f"order {n} exceeds cap {cap}")
    out: list[str] = []
    w = [0]
    while w:
        if n % len(w) == 0:
            out.extend("01"[b] for b in w)
        # Duval successor: extend w periodically to length n, strip the
        # maximal symbol 1 from the tail, bump the last remaining symbol.
        w = [w[i % len(w)] for i in range(n)]
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] = 1
    return DeBruijnString(n, BitString("".join(out)), 0)


def is_debruijn(u: BitString, n: int) -> bool:
    """True iff |u| = 2^n and every length-n word occurs exactly once
    in u read cyclically."""
    if n < 1 or len(u) != 1 << n:
        return False
    s = str(u) + str(u)[: n - 1]
    seen = set()
    for i in range(1 << n):
        w = s[i : i + n]
        if w in seen:
            return False
        seen.add(w)
    return len(seen) == 1 << n


def rotate(d: DeBruijnString, j: int) -> DeBruijnString:
    """Left-rotation by j positions."""
    size = 1 << d.order
    if not 0 <= j < size:
        raise ValueError(f"rotation {j} out of range [0, {size})")
    s = str(d.bits)
    return DeBruijnString(d.order, BitString(s[j:] + s[:j]), (d.rotation + j) % size)


def generate_with_start_bit(n: int, b: int, cap: int = DEFAULT_ORDER_CAP) -> DeBruijnString:
    """A de Bruijn string of order n whose first bit is b.

    For b = 0 this is the lex-least string; for b = 1 it is its
    left-rotation by n (the lex-least string's first 1 sits at index n).
    """
    if b not in (0, 1):
        raise ValueError("start bit must be 0 or 1")
    d = generate_lex_least(n, cap=cap)
    if b == 0:
        return d
    return rotate(d, n)


def all_debruijn(n: int) -> list[BitString]:
    """Every de Bruijn string of order n, by exhaustive check.  Tiny n only."""
    if n > 4:
        raise OrderTooLarge("exhaustive enumeration is limited to n <= 4")
    size = 1 << n
    found = []
    for v in range(1 << size):
        u = BitString(format(v, f"0{size}b"))
        if is_debruijn(u, n):
            found.append(u)
    return found


def rotation_classes(n: int) -> int:
    """Number of de Bruijn strings of order n up to cyclic rotation."""
    strings = {str(u) for u in all_debruijn(n)}
    classes = 0
    while strings:
        s = strings.pop()
        classes += 1
        for j in range(1, len(s)):
            strings.discard(s[j:] + s[:j])
    return classes
