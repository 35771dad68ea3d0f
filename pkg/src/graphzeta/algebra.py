"""Exact univariate arithmetic over the rationals.

Everything downstream (zeta expressions, determinant identities) is decided
by exact comparison, so this module provides the value types that make
equality structural:

* ``Polynomial`` -- dense coefficients of ascending degree in ``t``, stored
  as ``Fraction``; no trailing zeros, the zero polynomial keeps no
  coefficients at all.
* ``RationalFunction`` -- reduced quotient of two polynomials.  Numerator
  and denominator are coprime and the denominator is scaled so that its
  lowest-degree nonzero coefficient is 1.  Two equal values are therefore
  structurally identical.
* ``Matrix`` -- dense matrix of rational functions with exact determinant
  (fraction-field Gaussian elimination) and inverse.  An independent
  cofactor-expansion determinant is kept as a cross-checking oracle.
* ``TruncatedSeries`` -- power series cut at a fixed order, with exp/log.

All values are immutable after construction and every operation is pure,
so they can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Coefficient = Union[int, Fraction]
Scalar = Union[int, Fraction, "Polynomial", "RationalFunction"]


def _coeff(value: Coefficient) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected a rational coefficient, got {type(value).__name__}")


class Polynomial:
    """Univariate polynomial in the indeterminate ``t`` over the rationals."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Coefficient) -> "Polynomial":
        return cls((value,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the highest-degree term (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def first_nonzero_coefficient(self) -> Fraction:
        """Coefficient of the lowest-degree nonzero term (0 for the zero polynomial)."""
        for c in self.coeffs:
            if c != 0:
                return c
        return Fraction(0)

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def __call__(self, value: Coefficient) -> Fraction:
        x = _coeff(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerced(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return P_ZERO
        a, b = self.coeffs, rhs.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                if cb != 0:
                    out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = P_ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("zero divisor")
        if self.degree < other.degree:
            return P_ZERO, self
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        dd = len(div) - 1
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j in range(dd + 1):
                rem[i - dd + j] -= q * div[j]
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Polynomial(tuple(c / lead for c in self.coeffs))

    @staticmethod
    def gcd(a: "Polynomial", b: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor over Q[t]."""
        if a.is_zero:
            return b.monic()
        if b.is_zero:
            return a.monic()
        if a.is_constant or b.is_constant:
            return P_ONE
        while not b.is_zero:
            _, r = divmod(a, b)
            a, b = b, (r.monic() if not r.is_zero else r)
        return a.monic()

    def __eq__(self, other: object) -> bool:
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self.coeffs == rhs.coeffs

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_term())
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


P_ZERO = Polynomial()
P_ONE = Polynomial((1,))
T = Polynomial((0, 1))


class RationalFunction:
    """Reduced quotient of two polynomials in ``t``.

    Construction always reduces to canonical form: numerator and denominator
    coprime, denominator scaled so its lowest-degree nonzero coefficient
    is 1.  A denominator that vanishes at t=0 is representable (generic
    elimination can pass through such values) but is rejected when the value
    is read as a power series.
    """

    __slots__ = ("num", "den")

    num: Polynomial
    den: Polynomial

    def __init__(self, num: "Polynomial | Coefficient", den: "Polynomial | Coefficient" = P_ONE):
        if not isinstance(num, Polynomial):
            num = Polynomial((_coeff(num),))
        if not isinstance(den, Polynomial):
            den = Polynomial((_coeff(den),))
        if den.is_zero:
            raise ZeroDivisionError("zero divisor")
        if num.is_zero:
            self.num = P_ZERO
            self.den = P_ONE
            return
        if den == P_ONE:
            self.num = num
            self.den = den
            return
        if not (num.is_constant or den.is_constant):
            g = Polynomial.gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        scale = den.first_nonzero_coefficient()
        if scale != 1:
            inv = Fraction(1) / scale
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value: Scalar) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return cls(value)
        return cls(Polynomial((_coeff(value),)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den == P_ONE

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"not a constant: {self}")
        return self.num.constant_term()

    @property
    def is_polynomial(self) -> bool:
        return self.den == P_ONE

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    def _coerced(self, other: object) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction.of(other)
        return None

    def __add__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero:
            return rhs
        if rhs.is_zero:
            return self
        if self.den == rhs.den:
            return RationalFunction(self.num + rhs.num, self.den)
        return RationalFunction(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return RF_ZERO
        return RationalFunction(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("zero divisor")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.reciprocal()

    def __rtruediv__(self, other: object) -> "RationalFunction":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.reciprocal()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self.num == rhs.num and self.den == rhs.den

    def __hash__(self) -> int:
        if self.den == P_ONE:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self) -> str:
        num_s = str(self.num)
        if self.den == P_ONE:
            return num_s
        if " " in num_s or "*" in num_s:
            num_s = f"({num_s})"
        return f"{num_s}/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


RF_ZERO = RationalFunction(P_ZERO)
RF_ONE = RationalFunction(P_ONE)


class Matrix:
    """Dense matrix over the rational-function field."""

    __slots__ = ("rows", "cols", "_entries")

    rows: int
    cols: int
    _entries: tuple[tuple[RationalFunction, ...], ...]

    def __init__(self, entries: Sequence[Sequence[Scalar]], cols: int | None = None):
        grid = tuple(tuple(RationalFunction.of(e) for e in row) for row in entries)
        self.rows = len(grid)
        if grid:
            self.cols = len(grid[0])
            if any(len(row) != self.cols for row in grid):
                raise ValueError("shape: ragged rows")
        else:
            self.cols = 0 if cols is None else cols
        self._entries = grid

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[RF_ONE if i == j else RF_ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[RF_ZERO] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, key: tuple[int, int]) -> RationalFunction:
        i, j = key
        return self._entries[i][j]

    def row(self, i: int) -> tuple[RationalFunction, ...]:
        return self._entries[i]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape: mismatched matrix sizes")
        return Matrix(
            [
                [self._entries[i][j] + other._entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([[-e for e in row] for row in self._entries], cols=self.cols)

    def scale(self, factor: Scalar) -> "Matrix":
        f = RationalFunction.of(factor)
        return Matrix(
            [[RF_ZERO if e.is_zero else e * f for e in row] for row in self._entries],
            cols=self.cols,
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape: inner dimensions differ")
        out = [[RF_ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            left = self._entries[i]
            for k in range(self.cols):
                a = left[k]
                if a.is_zero:
                    continue
                right = other._entries[k]
                for j in range(other.cols):
                    b = right[j]
                    if not b.is_zero:
                        out[i][j] = out[i][j] + a * b
        return Matrix(out, cols=other.cols)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self._entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def trace(self) -> RationalFunction:
        if not self.is_square:
            raise ValueError(f"shape: {self.rows}x{self.cols} matrix is not square")
        acc = RF_ZERO
        for i in range(self.rows):
            acc = acc + self._entries[i][i]
        return acc

    def trace_power(self, k: int) -> RationalFunction:
        """Trace of the k-th matrix power, by repeated multiplication."""
        if not self.is_square:
            raise ValueError(f"shape: {self.rows}x{self.cols} matrix is not square")
        if k < 1:
            raise ValueError("period must be positive")
        power = self
        for _ in range(k - 1):
            power = power @ self
        return power.trace()

    def det(self) -> RationalFunction:
        """Exact determinant by fraction-field Gaussian elimination.

        Every intermediate entry is kept reduced; the empty 0x0 matrix has
        determinant 1.
        """
        if not self.is_square:
            raise ValueError(f"shape: {self.rows}x{self.cols} matrix is not square")
        n = self.rows
        if n == 0:
            return RF_ONE
        work = [list(row) for row in self._entries]
        result = RF_ONE
        sign = 1
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if not work[r][col].is_zero:
                    pivot_row = r
                    break
            if pivot_row is None:
                return RF_ZERO
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
                sign = -sign
            pivot = work[col][col]
            result = result * pivot
            for r in range(col + 1, n):
                lead = work[r][col]
                if lead.is_zero:
                    continue
                factor = lead / pivot
                work[r][col] = RF_ZERO
                prow = work[col]
                for j in range(col + 1, n):
                    if not prow[j].is_zero:
                        work[r][j] = work[r][j] - factor * prow[j]
        return result if sign == 1 else -result

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination on the augmented matrix."""
        if not self.is_square:
            raise ValueError(f"shape: {self.rows}x{self.cols} matrix is not square")
        n = self.rows
        work = [list(self._entries[i]) + [RF_ONE if i == j else RF_ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if not work[r][col].is_zero:
                    pivot_row = r
                    break
            if pivot_row is None:
                raise ZeroDivisionError("singular matrix")
            if pivot_row != col:
                work[col], work[pivot_row] = work[pivot_row], work[col]
            pivot = work[col][col]
            if pivot != RF_ONE:
                inv = pivot.reciprocal()
                work[col] = [RF_ZERO if e.is_zero else e * inv for e in work[col]]
            prow = work[col]
            for r in range(n):
                if r == col:
                    continue
                lead = work[r][col]
                if lead.is_zero:
                    continue
                row = work[r]
                for j in range(2 * n):
                    if not prow[j].is_zero:
                        row[j] = row[j] - lead * prow[j]
        return Matrix([row[n:] for row in work], cols=n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._entries))

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self._entries)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


def cofactor_determinant(m: Matrix) -> RationalFunction:
    """Determinant by Laplace expansion along rows.

    Independent of :meth:`Matrix.det`; used as the cross-checking oracle.
    Column subsets are memoized so moderate sizes stay tractable.
    """
    if not m.is_square:
        raise ValueError(f"shape: {m.rows}x{m.cols} matrix is not square")
    n = m.rows
    if n == 0:
        return RF_ONE
    memo: dict[int, RationalFunction] = {}

    def expand(row: int, used_mask: int) -> RationalFunction:
        if row == n:
            return RF_ONE
        cached = memo.get(used_mask)
        if cached is not None:
            return cached
        total = RF_ZERO
        position = 0
        for col in range(n):
            bit = 1 << col
            if used_mask & bit:
                continue
            entry = m[row, col]
            if not entry.is_zero:
                term = entry * expand(row + 1, used_mask | bit)
                total = total + term if position % 2 == 0 else total - term
            position += 1
        memo[used_mask] = total
        return total

    return expand(0, 0)


class TruncatedSeries:
    """Formal power series truncated at a fixed order.

    A series of order N stores exactly N+1 rational coefficients for
    t^0..t^N; arithmetic discards everything of higher degree.  Mixed-order
    arithmetic truncates to the smaller order.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Coefficient], order: int | None = None):
        cs = [_coeff(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("series order must be nonnegative")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        elif not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls(p.coeffs, order)

    @classmethod
    def from_rational_function(cls, f: RationalFunction, order: int) -> "TruncatedSeries":
        """Maclaurin coefficients of ``f`` through t^order, exactly."""
        d0 = f.den.constant_term()
        if d0 == 0:
            raise ValueError("not a power series: denominator vanishes at t=0")
        num = f.num
        den = f.den
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = num.coefficient(n)
            for i in range(1, min(n, den.degree) + 1):
                acc -= den.coefficient(i) * out[n - i]
            out.append(acc / d0)
        return cls(out)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    def coefficient(self, degree: int) -> Fraction:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def _coerced(self, other: object) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((other,), self.order)
        return None

    def __add__(self, other: object) -> "TruncatedSeries":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        order = min(self.order, rhs.order)
        return TruncatedSeries(
            [self.coeffs[i] + rhs.coeffs[i] for i in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "TruncatedSeries":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __mul__(self, other: object) -> "TruncatedSeries":
        rhs = self._coerced(other)
        if rhs is None:
            return NotImplemented
        order = min(self.order, rhs.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j in range(min(rhs.order, order - i) + 1):
                b = rhs.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def exp(self) -> "TruncatedSeries":
        """Composition with the exponential series; needs zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("series domain: exp needs zero constant term")
        n_max = self.order
        out = [Fraction(1)] + [Fraction(0)] * n_max
        for n in range(1, n_max + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                sk = self.coeffs[k]
                if sk != 0:
                    acc += k * sk * out[n - k]
            out[n] = acc / n
        return TruncatedSeries(out)

    def log(self) -> "TruncatedSeries":
        """Composition with the logarithm series; needs constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("series domain: log needs constant term 1")
        n_max = self.order
        out = [Fraction(0)] * (n_max + 1)
        for n in range(1, n_max + 1):
            acc = Fraction(0)
            for k in range(1, n):
                gk = out[k]
                if gk != 0:
                    acc += k * gk * self.coeffs[n - k]
            out[n] = self.coeffs[n] - acc / n
        return TruncatedSeries(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self)})"
