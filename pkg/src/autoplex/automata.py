"""Total binary DFAs: execution, exact acceptance counting, unique acceptance."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bitstrings import BitString, BitsLike


@dataclass(frozen=True)
class Dfa:
    """Total DFA over {0,1}.  delta[q] = (target on 0, target on 1)."""

    states: int
    start: int
    accept: frozenset
    delta: tuple

    def __post_init__(self):
        if not 0 <= self.start < self.states:
            raise ValueError("start state out of range")
        if len(self.delta) != self.states:
            raise ValueError("delta must have one row per state")
        for row in self.delta:
            if len(row) != 2 or not all(0 <= t < self.states for t in row):
                raise ValueError("transition target out of range")
        if not all(0 <= q < self.states for q in self.accept):
            raise ValueError("accept state out of range")

    # -- execution -------------------------------------------------------

    def run(self, x: BitsLike) -> int:
        q = self.start
        delta = self.delta
        for b in BitString(x):
            q = delta[q][b]
        return q

    def accepts(self, x: BitsLike) -> bool:
        return self.run(x) in self.accept

    def count_accepted(self, n: int, cap: int | None = None) -> int:
        """|L(M) intersect {0,1}^n|, exact.

        Per-state path counts from the start state are advanced n steps;
        totality conserves their sum at 2^k after k steps.  With cap set,
        counts saturate there (enough to decide uniqueness cheaply).
        """
        if n < 0:
            raise ValueError("n must be >= 0")
        counts = [0] * self.states
        counts[self.start] = 1
        for _ in range(n):
            nxt = [0] * self.states
            for q, c in enumerate(counts):
                if c:
                    t0, t1 = self.delta[q]
                    nxt[t0] += c
                    nxt[t1] += c
            if cap is not None:
                nxt = [min(c, cap) for c in nxt]
            counts = nxt
        return sum(counts[q] for q in self.accept)

    def uniquely_accepts(self, x: BitsLike) -> bool:
        x = BitString(x)
        return self.accepts(x) and self.count_accepted(len(x), cap=2) == 1

    # -- interchange -------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "states": self.states,
                "start": self.start,
                "accept": sorted(self.accept),
                "delta": [list(row) for row in self.delta],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Dfa":
        obj = json.loads(text)
        return cls(
            states=obj["states"],
            start=obj["start"],
            accept=frozenset(obj["accept"]),
            delta=tuple(tuple(row) for row in obj["delta"]),
        )


def run(m: Dfa, x: BitsLike) -> int:
    return m.run(x)


def accepts(m: Dfa, x: BitsLike) -> bool:
    return m.accepts(x)


def count_accepted(m: Dfa, n: int) -> int:
    return m.count_accepted(n)


def uniquely_accepts(m: Dfa, x: BitsLike) -> bool:
    return m.uniquely_accepts(x)
