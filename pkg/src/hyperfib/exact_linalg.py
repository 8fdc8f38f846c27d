"""Dense exact integer linear algebra.

Matrices hold arbitrary-precision Python ints and never touch floating
point.  Determinants use fraction-free (Bareiss) elimination whose interior
divisions are exact; a cofactor expansion is kept as an independent oracle
for small matrices.  Unimodular matrices get an exact integer inverse via
the adjugate, and characteristic polynomials come from the
Faddeev-LeVerrier iteration, whose divisions are likewise exact over the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ArithmeticError(f"non-exact division: {a} / {b}")
    return q


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major matrix of integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        for e in self.entries:
            if not isinstance(e, int):
                raise TypeError(f"non-integer entry: {e!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]]) -> "IntMatrix":
        data = [list(row) for row in rows]
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        return cls(len(data), width, tuple(x for row in data for x in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.get(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> int:
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        return sum(self.get(i, i) for i in range(self.rows))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __pow__(self, e: int) -> "IntMatrix":
        return mat_pow(self, e)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.to_rows())


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a.entries, b.entries
    bcols = [be[j::m] for j in range(m)]
    out = []
    for i in range(n):
        arow = ae[i * k:(i + 1) * k]
        out.extend(sum(x * y for x, y in zip(arow, bcol)) for bcol in bcols)
    return IntMatrix(n, m, tuple(out))


def mat_pow(a: IntMatrix, e: int) -> IntMatrix:
    """a**e by binary exponentiation; negative e uses the adjugate inverse."""
    if not a.is_square():
        raise ValueError("matrix power needs a square matrix")
    if e < 0:
        base = adjugate_inverse(a)   # raises unless det(a) is +-1
        e = -e
    else:
        base = a
    result = IntMatrix.identity(a.rows)
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def det(a: IntMatrix, method: str = "bareiss") -> int:
    """Exact determinant.

    "bareiss" is the fraction-free elimination used everywhere; "cofactor"
    is the independent test oracle and is limited to matrices up to 6x6.
    """
    if not a.is_square():
        raise ValueError("determinant needs a square matrix")
    if method == "bareiss":
        return _bareiss(a.to_rows())
    if method == "cofactor":
        if a.rows > 6:
            raise ValueError("cofactor determinant is an oracle for matrices up to 6x6")
        return _cofactor(a.to_rows())
    raise ValueError(f"unknown determinant method: {method!r}")


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0   # column has no pivot below the diagonal
        pivot = m[k][k]
        rowk = m[k]
        for i in range(k + 1, n):
            rowi = m[i]
            lead = rowi[k]
            for j in range(k + 1, n):
                # exact by the Bareiss minor identity
                rowi[j] = (pivot * rowi[j] - lead * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _cofactor(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * x * _cofactor(minor)
    return total


def adjugate_inverse(a: IntMatrix) -> IntMatrix:
    """Exact integer inverse det(a) * adj(a) of a unimodular matrix."""
    if not a.is_square():
        raise ValueError("inverse needs a square matrix")
    d = det(a)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    n = a.rows
    rows = a.to_rows()
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for r_i, row in enumerate(rows) if r_i != i]
            # adjugate transposes the cofactors: entry (j, i) from minor (i, j)
            out[j * n + i] = d * (-1) ** (i + j) * _bareiss(minor)
    return IntMatrix(n, n, tuple(out))


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial; coefficients ascending by degree, normalized."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"non-integer coefficient: {x!r}")
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1   # zero polynomial has degree -1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, x in enumerate(b):
            merged[i] += x
        return Polynomial(tuple(merged))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self or not other:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("polynomial power must be >= 0")
        result = Polynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division over the integers; leading quotient steps must divide."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        qlen = len(rem) - len(div) + 1
        if qlen <= 0:
            return Polynomial(()), self
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = _exact_div(rem[i + len(div) - 1], lead)
            quot[i] = c
            if c:
                for j, y in enumerate(div):
                    rem[i + j] -= c * y
        return Polynomial(tuple(quot)), Polynomial(tuple(rem))

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def char_poly(a: IntMatrix) -> Polynomial:
    """Monic characteristic polynomial det(xI - a).

    Faddeev-LeVerrier iteration: every division by the step index is exact
    because the coefficients are integers.
    """
    if not a.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        c = _exact_div(-am.trace(), k)
        coeffs[n - k] = c
        if k < n:
            m = IntMatrix(n, n, tuple(
                x + c if i % (n + 1) == 0 else x
                for i, x in enumerate(am.entries)
            ))
    return Polynomial(tuple(coeffs))
