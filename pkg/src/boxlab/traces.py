"""Observational outcomes and traces.

An outcome is the only data an observer ever gets from a box: a fixed-width
bit string stamped with a 1-based time index. A trace is a consecutive run
of outcomes of one shared width.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Bits = tuple[int, ...]


def _check_bits(bits: Sequence[int]) -> Bits:
    out = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"outcome bits must be 0/1, got {bits!r}")
    return out


@dataclass(frozen=True)
class Outcome:
    """One observation: `bits` of fixed width, received at time index `k`."""

    bits: Bits
    k: int

    def __post_init__(self):
        object.__setattr__(self, "bits", _check_bits(self.bits))
        if self.k < 1:
            raise ValueError("time index k starts at 1")

    @property
    def n(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class Trace:
    """A run of outcomes with consecutive time indices 1..N and equal width."""

    outcomes: tuple[Outcome, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        for pos, outcome in enumerate(self.outcomes, start=1):
            if outcome.n != self.n:
                raise ValueError(
                    f"outcome at k={outcome.k} has width {outcome.n}, expected {self.n}"
                )
            if outcome.k != pos:
                raise ValueError(
                    f"time indices must be consecutive from 1; got k={outcome.k} at position {pos}"
                )

    def __len__(self) -> int:
        return len(self.outcomes)

    def __iter__(self):
        return iter(self.outcomes)

    @property
    def bits_list(self) -> list[Bits]:
        return [o.bits for o in self.outcomes]

    def bits_array(self) -> np.ndarray:
        """Outcome bits as an (N, n) uint8 array."""
        return np.array([o.bits for o in self.outcomes], dtype=np.uint8).reshape(
            len(self.outcomes), self.n
        )

    def bit_column(self, index: int) -> Bits:
        return tuple(o.bits[index] for o in self.outcomes)

    def project(self, indices: Iterable[int]) -> "Trace":
        """Restrict every outcome to the given bit positions (in given order)."""
        idx = tuple(indices)
        for i in idx:
            if not 0 <= i < self.n:
                raise IndexError(f"bit position {i} out of range for width {self.n}")
        outs = tuple(
            Outcome(tuple(o.bits[i] for i in idx), o.k) for o in self.outcomes
        )
        return Trace(outs, len(idx))

    def prefix(self, length: int) -> "Trace":
        return Trace(self.outcomes[:length], self.n)

    def reversed(self) -> "Trace":
        """Same outcomes read backwards, re-stamped with indices 1..N."""
        outs = tuple(
            Outcome(o.bits, i)
            for i, o in enumerate(reversed(self.outcomes), start=1)
        )
        return Trace(outs, self.n)


def trace_from_bits(rows: Iterable[Sequence[int]], n: int | None = None) -> Trace:
    """Build a trace from raw bit rows, stamping indices 1..N."""
    outs = tuple(Outcome(row, k) for k, row in enumerate(rows, start=1))
    if n is None:
        if not outs:
            raise ValueError("width n is required for an empty trace")
        n = outs[0].n
    return Trace(outs, n)
