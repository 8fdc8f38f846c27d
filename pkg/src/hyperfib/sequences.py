"""Exact generators for Fibonacci, polytopic, and hyperfibonacci numbers.

The generation-r hyperfibonacci sequence is the r-fold running sum of the
Fibonacci numbers, every generation starting 0, 1.  Generation r satisfies
the inhomogeneous recurrence

    F(n+2) = F(n+1) + F(n) + C(n+r, r-1)

whose correction term is a polytopic (figurate) number; running it backward
extends every generation to negative indices.  Three independent evaluation
strategies are provided and agree wherever they are defined, which the test
suite uses as a cross-check.  All arithmetic is plain Python int, so results
are exact at any size.
"""

from __future__ import annotations

import threading
from enum import Enum


class Strategy(Enum):
    """Evaluation route for hyperfibonacci terms."""

    PREFIX_SUM = "prefix"       # iterated cumulative sums; n >= 0 only
    RECURRENCE = "recurrence"   # two-sided inhomogeneous recurrence
    MATRIX_POWER = "matpow"     # companion-matrix power


def fibonacci(n: int) -> int:
    """F_n for any integer n, with F_0 = 0 and F_1 = 1.

    Negative indices run the recurrence backward, F_n = F_{n+2} - F_{n+1},
    which reproduces the negafibonacci values (-1)^(n+1) * F_{-n}.
    """
    a, b = 0, 1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def binomial_poly(t: int, k: int) -> int:
    """Binomial coefficient C(t, k), extended polynomially to any integer t.

    Evaluates t(t-1)...(t-k+1) / k!, which is an integer for every integer t.
    """
    if k < 0:
        raise ValueError("lower index must be >= 0")
    result = 1
    for i in range(k):
        # partial product C(t, i) * (t - i) is divisible by i + 1, so the
        # floor division is exact even for negative t
        result = result * (t - i) // (i + 1)
    return result


def polytopic(r: int, n: int) -> int:
    """The n-th regular r-topic (figurate) number, C(n+r-1, r)."""
    if r < 1:
        raise ValueError("polytopic numbers need r >= 1")
    return binomial_poly(n + r - 1, r)


class HyperfibSequence:
    """Generation-r terms with a transparent two-sided memo.

    The cache is an optimization only: ``term`` returns the same values as
    the uncached strategy evaluators.  Cache extension happens under a lock,
    so concurrent first computations are idempotent; reads of already-filled
    indices need no lock because the lists only grow.
    """

    def __init__(self, r: int):
        if r < 0:
            raise ValueError("generation must be >= 0")
        self.r = r
        self._fwd = [0, 1]            # terms 0, 1, 2, ...
        self._bwd: list[int] = []     # terms -1, -2, ...
        self._lock = threading.Lock()

    def _correction(self, n: int) -> int:
        # the inhomogeneous term C(n+r, r-1); zero for plain Fibonacci
        if self.r == 0:
            return 0
        return binomial_poly(n + self.r, self.r - 1)

    def term(self, n: int) -> int:
        if n >= 0:
            fwd = self._fwd
            if n >= len(fwd):
                with self._lock:
                    while n >= len(fwd):
                        k = len(fwd)
                        fwd.append(fwd[k - 1] + fwd[k - 2] + self._correction(k - 2))
            return fwd[n]
        bwd = self._bwd
        idx = -n - 1
        if idx >= len(bwd):
            with self._lock:
                while idx >= len(bwd):
                    m = -len(bwd) - 1   # index being produced
                    t1 = self._fwd[m + 1] if m + 1 >= 0 else bwd[-(m + 1) - 1]
                    t2 = self._fwd[m + 2] if m + 2 >= 0 else bwd[-(m + 2) - 1]
                    bwd.append(t2 - t1 - self._correction(m))
        return bwd[idx]

    def terms(self, start: int, stop: int) -> list[int]:
        """Terms for indices start..stop-1 (half-open, like range)."""
        return [self.term(n) for n in range(start, stop)]


_shared: dict[int, HyperfibSequence] = {}


def sequence(r: int) -> HyperfibSequence:
    """Shared memoized sequence for generation r."""
    seq = _shared.get(r)
    if seq is None:
        # setdefault keeps racing creators idempotent
        seq = _shared.setdefault(r, HyperfibSequence(r))
    return seq


def hyperfib(r: int, n: int, strategy: Strategy = Strategy.RECURRENCE) -> int:
    """The n-th hyperfibonacci number of generation r, by the chosen strategy."""
    if r < 0:
        raise ValueError("generation must be >= 0")
    if strategy is Strategy.PREFIX_SUM:
        if n < 0:
            raise ValueError("prefix-sum evaluation is defined only for n >= 0")
        return _prefix_sum(r, n)
    if strategy is Strategy.RECURRENCE:
        return _recurrence(r, n)
    if strategy is Strategy.MATRIX_POWER:
        from . import qmatrix   # deferred: qmatrix builds on this module

        return qmatrix.reconstruct(r, n).get(0, 0)
    raise ValueError(f"unknown strategy: {strategy!r}")


def _prefix_sum(r: int, n: int) -> int:
    row = []
    a, b = 0, 1
    for _ in range(n + 1):
        row.append(a)
        a, b = b, a + b
    for _ in range(r):
        total = 0
        for i, v in enumerate(row):
            total += v
            row[i] = total
    return row[n]


def _recurrence(r: int, n: int) -> int:
    # rolling two-term window, O(1) memory; the memoized path lives in
    # HyperfibSequence
    if n >= 0:
        a, b = 0, 1
        for k in range(n):
            a, b = b, a + b + (binomial_poly(k + r, r - 1) if r else 0)
        return a
    a, b = 1, 0   # F_{k+2}, F_{k+1} while stepping k downward
    k = -1
    while True:
        t = a - b - (binomial_poly(k + r, r - 1) if r else 0)
        if k == n:
            return t
        a, b = b, t
        k -= 1
