"""Hankel windows of hyperfibonacci terms and their determinant identities.

A window of size m starting at index n collects the terms F(n) through
F(n+2m-2) of one generation into the symmetric Hankel matrix with entries
M[i][j] = F(n+i+j).  For m = r+2 the determinant is always +1 or -1 and the
sign follows a closed formula in n and r, generalizing the classical
Cassini identity; for m > r+2 the determinant vanishes identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import IntMatrix, det
from .sequences import fibonacci, sequence


@dataclass(frozen=True)
class Window:
    """Size-m Hankel window of generation-r terms starting at index n."""

    m: int
    n: int
    r: int
    matrix: IntMatrix


def build_window(m: int, n: int, r: int) -> Window:
    """Fill the m x m Hankel window from 2m-1 consecutive terms."""
    if m < 1:
        raise ValueError("window size must be >= 1")
    if r < 0:
        raise ValueError("generation must be >= 0")
    terms = sequence(r).terms(n, n + 2 * m - 1)
    entries = tuple(terms[i + j] for i in range(m) for j in range(m))
    return Window(m, n, r, IntMatrix(m, m, entries))


def predicted_sign(r: int, n: int) -> int:
    """Claimed value of det of the (r+2)-window at n: (-1)^(n + floor((r+3)/2))."""
    if r < 1:
        raise ValueError("sign formula is stated for generations r >= 1")
    return 1 if (n + (r + 3) // 2) % 2 == 0 else -1


def cassini_det(r: int, n: int) -> int:
    """Determinant of the (r+2)-window at n, by fraction-free elimination."""
    if r < 0:
        raise ValueError("generation must be >= 0")
    return det(build_window(r + 2, n, r).matrix)


def shifted_fib_det(n: int) -> int:
    """Determinant of the 3x3 window of shifted Fibonacci numbers F(k) - 1."""
    if n < 0:
        raise ValueError("shifted determinant is stated for n >= 0")
    rows = [[fibonacci(n + i + j) - 1 for j in range(3)] for i in range(3)]
    return det(IntMatrix.from_rows(rows))


def zero_det_check(m: int, n: int, r: int) -> int:
    """Determinant of an oversized window (m > r+2); identically zero."""
    if m <= r + 2:
        raise ValueError("oversized-window statement requires m > r + 2")
    return det(build_window(m, n, r).matrix)


@dataclass(frozen=True)
class SecondOrderPair:
    """Two sequences evolving by x(n+2) = alpha*x(n+1) + beta*x(n)."""

    alpha: int
    beta: int
    a0: int
    a1: int
    b0: int
    b1: int


def general_cassini(pair: SecondOrderPair, m: int) -> tuple[int, int]:
    """Both sides of the two-solution Cassini identity at index m.

    Returns (a_m*b_{m-1} - a_{m-1}*b_m, (-beta)^(m-1) * (a_1*b_0 - a_0*b_1));
    the components are equal for every pair of solutions.
    """
    if m < 1:
        raise ValueError("index must be >= 1")
    a_prev, a_cur = pair.a0, pair.a1
    b_prev, b_cur = pair.b0, pair.b1
    for _ in range(m - 1):
        a_prev, a_cur = a_cur, pair.alpha * a_cur + pair.beta * a_prev
        b_prev, b_cur = b_cur, pair.alpha * b_cur + pair.beta * b_prev
    lhs = a_cur * b_prev - a_prev * b_cur
    rhs = (-pair.beta) ** (m - 1) * (pair.a1 * pair.b0 - pair.a0 * pair.b1)
    return lhs, rhs


@dataclass(frozen=True)
class SignCase:
    """One determinant checked against its predicted sign."""

    r: int
    n: int
    determinant: int
    predicted: int

    @property
    def ok(self) -> bool:
        return self.determinant == self.predicted


@dataclass(frozen=True)
class SignReport:
    r_range: tuple[int, int]
    n_range: tuple[int, int]
    cases: tuple[SignCase, ...]

    @property
    def failures(self) -> tuple[SignCase, ...]:
        return tuple(c for c in self.cases if not c.ok)

    @property
    def all_ok(self) -> bool:
        return not self.failures


def sign_sweep(r_min: int, r_max: int, n_min: int, n_max: int) -> SignReport:
    """Check det == predicted sign over the full (r, n) grid (ends inclusive)."""
    if r_min < 1:
        raise ValueError("sweep starts at generation 1")
    cases = tuple(
        SignCase(r, n, cassini_det(r, n), predicted_sign(r, n))
        for r in range(r_min, r_max + 1)
        for n in range(n_min, n_max + 1)
    )
    return SignReport((r_min, r_max), (n_min, n_max), cases)
