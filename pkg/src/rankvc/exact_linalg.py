"""
Exact dense linear algebra over the rationals and over prime fields GF(q).

Matrices are small (tens of rows and columns), so everything is plain Python:
``fractions.Fraction`` for the rationals and reduced ``int`` residues for
GF(q).  No floating point is used anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DenominatorCollision, InputError, PrimeSearchExhausted

__all__ = [
    "RATIONAL",
    "Rational",
    "PrimeField",
    "ExactMatrix",
    "rank",
    "in_span",
    "row_basis",
    "determinant",
    "mod_reduce",
    "is_probable_prime",
    "random_prime",
]


# ---------------------------------------------------------------------------
# scalar domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rational:
    """The field of rational numbers, entries stored as ``Fraction``."""

    kind = "rational"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise InputError(f"not an exact rational: {x!r}")
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not an exact rational: {x!r}") from exc

    def reduce(self, x):
        return x

    def inv(self, x):
        return 1 / x

    def __str__(self):
        return "rational"


RATIONAL = Rational()


@dataclass(frozen=True)
class PrimeField:
    """GF(q) for an odd prime q; entries are ints in ``range(q)``."""

    q: int
    kind = "gfp"
    zero = 0
    one = 1

    def __post_init__(self):
        if isinstance(self.q, bool) or not isinstance(self.q, int):
            raise InputError(f"field modulus must be an int, got {self.q!r}")
        if self.q < 3 or not is_probable_prime(self.q):
            raise InputError(f"field modulus must be an odd prime, got {self.q}")

    def coerce(self, x) -> int:
        if isinstance(x, bool):
            raise InputError(f"not a field element: {x!r}")
        if isinstance(x, int):
            return x % self.q
        if isinstance(x, Fraction):
            if x.denominator % self.q == 0:
                raise DenominatorCollision(
                    f"denominator {x.denominator} divisible by {self.q}")
            return x.numerator * pow(x.denominator, -1, self.q) % self.q
        if isinstance(x, str):
            return self.coerce(Rational().coerce(x))
        raise InputError(f"not a field element: {x!r}")

    def reduce(self, x):
        return x % self.q

    def inv(self, x):
        return pow(x, -1, self.q)

    def __str__(self):
        return f"gfp {self.q}"


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class ExactMatrix:
    """Immutable dense matrix over a `Rational` or `PrimeField` domain.

    ``ExactMatrix(rows, domain)`` coerces every entry into the domain.  A
    matrix may have zero rows; the column count is then given explicitly.
    """

    __slots__ = ("domain", "nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Sequence] = (), domain=RATIONAL,
                 ncols: int | None = None):
        rows = [tuple(domain.coerce(x) for x in row) for row in rows]
        if ncols is None:
            if not rows:
                raise InputError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise InputError("ragged matrix rows")
        self.domain = domain
        self.nrows = len(rows)
        self.ncols = ncols
        self._rows = tuple(rows)

    @classmethod
    def _trusted(cls, rows, ncols, domain) -> "ExactMatrix":
        # rows must already be tuples of reduced domain elements
        m = object.__new__(cls)
        m.domain = domain
        m.nrows = len(rows)
        m.ncols = ncols
        m._rows = tuple(rows)
        return m

    @classmethod
    def identity(cls, n: int, domain=RATIONAL) -> "ExactMatrix":
        one, zero = domain.one, domain.zero
        rows = [tuple(one if i == j else zero for j in range(n)) for i in range(n)]
        return cls._trusted(rows, n, domain)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], domain=RATIONAL,
                     nrows: int | None = None) -> "ExactMatrix":
        columns = [tuple(c) for c in columns]
        if nrows is None:
            if not columns:
                raise InputError("nrows is required for a matrix without columns")
            nrows = len(columns[0])
        for c in columns:
            if len(c) != nrows:
                raise InputError("columns of unequal length")
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls(rows, domain, ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def column(self, j: int) -> tuple:
        self._check_col(j)
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[tuple]:
        return [tuple(row[j] for row in self._rows) for j in range(self.ncols)]

    def select_columns(self, cols: Sequence[int]) -> "ExactMatrix":
        for j in cols:
            self._check_col(j)
        rows = [tuple(row[j] for j in cols) for row in self._rows]
        return ExactMatrix._trusted(rows, len(cols), self.domain)

    def select_rows(self, rows: Sequence[int]) -> "ExactMatrix":
        for i in rows:
            if not 0 <= i < self.nrows:
                raise InputError(f"row index {i} out of range")
        return ExactMatrix._trusted([self._rows[i] for i in rows], self.ncols,
                                    self.domain)

    def with_column(self, j: int, vec: Sequence) -> "ExactMatrix":
        """Copy with column ``j`` replaced by ``vec``."""
        self._check_col(j)
        vec = self.coerce_vector(vec)
        rows = [row[:j] + (x,) + row[j + 1:] for row, x in zip(self._rows, vec)]
        return ExactMatrix._trusted(rows, self.ncols, self.domain)

    def drop_column(self, j: int) -> "ExactMatrix":
        self._check_col(j)
        rows = [row[:j] + row[j + 1:] for row in self._rows]
        return ExactMatrix._trusted(rows, self.ncols - 1, self.domain)

    def coerce_vector(self, vec: Sequence) -> tuple:
        if len(vec) != self.nrows:
            raise InputError(
                f"vector of length {len(vec)} does not match {self.nrows} rows")
        return tuple(self.domain.coerce(x) for x in vec)

    def max_entry_bits(self) -> int:
        """Largest bit length of any numerator or denominator (0 if empty)."""
        bits = 0
        for row in self._rows:
            for x in row:
                if isinstance(x, Fraction):
                    b = max(abs(x.numerator).bit_length(), x.denominator.bit_length())
                else:
                    b = abs(x).bit_length()
                bits = max(bits, b)
        return bits

    def max_abs_entry(self) -> int:
        """Largest absolute numerator or denominator over all entries."""
        best = 0
        for row in self._rows:
            for x in row:
                if isinstance(x, Fraction):
                    best = max(best, abs(x.numerator), x.denominator)
                else:
                    best = max(best, abs(x))
        return best

    def _check_col(self, j):
        if isinstance(j, bool) or not isinstance(j, int) or not 0 <= j < self.ncols:
            raise InputError(f"column index {j!r} out of range [0, {self.ncols})")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.domain == other.domain and self.ncols == other.ncols
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.domain, self.ncols, self._rows))

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self._rows]!r}, {self.domain}, ncols={self.ncols})"


class _Echelon:
    """Incrementally built echelon basis of a subspace of domain^dim."""

    __slots__ = ("domain", "dim", "basis")

    def __init__(self, domain, dim):
        self.domain = domain
        self.dim = dim
        self.basis: list[tuple[int, list]] = []

    def reduce(self, vec) -> list:
        v = list(vec)
        red = self.domain.reduce
        for p, b in self.basis:
            c = v[p]
            if c:
                v = [red(x - c * y) for x, y in zip(v, b)]
        return v

    def add(self, vec) -> bool:
        """Insert ``vec``; return True iff it was independent of the basis."""
        v = self.reduce(vec)
        for p, x in enumerate(v):
            if x:
                inv = self.domain.inv(x)
                red = self.domain.reduce
                self.basis.append((p, [red(y * inv) for y in v]))
                return True
        return False

    def __len__(self):
        return len(self.basis)


def _resolve_cols(m: ExactMatrix, cols) -> list[int]:
    if cols is None:
        return list(range(m.ncols))
    cols = list(cols)
    for j in cols:
        m._check_col(j)
    return cols


def rank(m: ExactMatrix, cols: Iterable[int] | None = None) -> int:
    """Linear rank of the selected columns (all columns by default)."""
    cols = _resolve_cols(m, cols)
    ech = _Echelon(m.domain, m.nrows)
    r = 0
    for j in cols:
        if ech.add(m.column(j)):
            r += 1
            if r == m.nrows:
                break
    return r


def in_span(m: ExactMatrix, target, generators: Iterable[int]) -> bool:
    """Whether ``target`` (a column index or a vector) lies in the span of the
    generator columns."""
    if isinstance(target, int) and not isinstance(target, bool):
        vec = m.column(target)
    else:
        vec = m.coerce_vector(target)
    ech = _Echelon(m.domain, m.nrows)
    for j in _resolve_cols(m, generators):
        ech.add(m.column(j))
    return not any(ech.reduce(vec))


def row_basis(m: ExactMatrix) -> ExactMatrix:
    """Submatrix formed by a maximal independent set of rows, taken greedily
    in row order.  Represents the same column matroid as ``m``."""
    ech = _Echelon(m.domain, m.ncols)
    keep = [i for i, row in enumerate(m.rows) if ech.add(row)]
    if len(keep) == m.nrows:
        return m
    return m.select_rows(keep)


def determinant(m: ExactMatrix, rows: Sequence[int] | None = None,
                cols: Sequence[int] | None = None):
    """Exact determinant of the square submatrix ``m[rows, cols]``."""
    rows = list(range(m.nrows)) if rows is None else list(rows)
    cols = _resolve_cols(m, cols)
    if len(rows) != len(cols):
        raise InputError(f"non-square selection {len(rows)}x{len(cols)}")
    dom = m.domain
    a = [[m[i, j] for j in cols] for i in rows]
    n = len(a)
    det = dom.one
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return dom.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = dom.reduce(-det)
        det = dom.reduce(det * a[c][c])
        inv = dom.inv(a[c][c])
        for r in range(c + 1, n):
            f = a[r][c]
            if f:
                f = dom.reduce(f * inv)
                a[r] = [dom.reduce(x - f * y) for x, y in zip(a[r], a[c])]
    return det


def mod_reduce(m: ExactMatrix, q: int) -> ExactMatrix:
    """Map a rational matrix entrywise into GF(q): a/b -> a * b^-1 mod q.

    Raises `DenominatorCollision` when some denominator is divisible by q;
    the caller is expected to draw another prime.
    """
    if m.domain != RATIONAL:
        raise InputError("mod_reduce expects a rational matrix")
    field = PrimeField(q)
    rows = [tuple(field.coerce(x) for x in row) for row in m.rows]
    return ExactMatrix._trusted(rows, m.ncols, field)


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Miller-Rabin with these bases is exact below 3.3e24 > 2**64
_DETERMINISTIC_BASES = _SMALL_PRIMES


def is_probable_prime(n: int, rounds: int = 40, rng: random.Random | None = None) -> bool:
    """Miller-Rabin.  Exact for n < 2**64; otherwise ``rounds`` random bases.

    Without an ``rng`` the random bases are derived from ``n`` itself, so the
    answer is reproducible.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    if n < 1 << 64:
        return not any(witness(a) for a in _DETERMINISTIC_BASES)
    rng = rng or random.Random(n)
    return not any(witness(rng.randrange(2, n - 1)) for _ in range(rounds))


def random_prime(lower: int, upper: int, rng: random.Random,
                 max_draws: int | None = None) -> int:
    """Odd prime drawn from ``[lower, upper]`` by rejection sampling.

    Uniform integers are drawn and tested, so every odd prime in the interval
    is returned with the same probability.
    """
    lower = max(lower, 3)
    if upper < lower:
        raise InputError(f"empty prime interval [{lower}, {upper}]")
    if max_draws is None:
        # ~ 40 expected-gaps worth of draws
        max_draws = max(2000, 40 * upper.bit_length())
    for _ in range(max_draws):
        c = rng.randint(lower, upper)
        if c % 2 and is_probable_prime(c):
            return c
    raise PrimeSearchExhausted(f"no odd prime found in [{lower}, {upper}] "
                               f"after {max_draws} draws")
