"""Exact dense linear algebra over GF(2) with bit-packed storage.

Vectors and matrix rows live in arbitrary-precision Python integers: bit i
of the vector is bit i of the integer, so word i//64, position i%64 when
the integer is viewed as 64-bit words (see ``BitVec.words``). XOR, AND and
popcount then run on whole words at C speed, which is what makes plain
Gauss-Jordan elimination fast enough for matrices in the low thousands.

All types are immutable after construction and every operation is a pure
function of its inputs; elimination works on private copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

__all__ = [
    "WORD_BITS",
    "DimensionError",
    "BitVec",
    "Gf2Matrix",
    "SolutionSet",
    "rref",
    "rank",
    "solve",
    "nullspace_basis",
    "solution_set",
    "parse_matrix",
    "format_matrix",
]

WORD_BITS = 64
_WORD_MASK = (1 << WORD_BITS) - 1


class DimensionError(ValueError):
    """Operands have incompatible dimensions."""


class BitVec:
    """Fixed-length immutable vector over GF(2).

    Storage bits above the logical length are always zero, so equality,
    hashing and popcount can work on the raw integer.
    """

    __slots__ = ("_n", "_bits")

    def __init__(self, n: int, bits: int = 0):
        if n < 0:
            raise ValueError(f"vector length must be >= 0, got {n}")
        self._n = n
        self._bits = bits & ((1 << n) - 1)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n)

    @classmethod
    def ones(cls, n: int) -> "BitVec":
        return cls(n, (1 << n) - 1)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVec":
        """Vector with a single 1 at index ``i``."""
        if not 0 <= i < n:
            raise IndexError(f"index {i} out of range for length {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVec":
        value = 0
        n = 0
        for b in bits:
            if b:
                value |= 1 << n
            n += 1
        return cls(n, value)

    @classmethod
    def from01(cls, s: str) -> "BitVec":
        """Parse a left-to-right 0/1 string: s[i] is component i."""
        if s.strip("01"):
            raise ValueError(f"not a 0/1 string: {s!r}")
        value = 0
        for i, ch in enumerate(s):
            if ch == "1":
                value |= 1 << i
        return cls(len(s), value)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVec":
        value = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"index {i} out of range for length {n}")
            value |= 1 << i
        return cls(n, value)

    @classmethod
    def from_bytes(cls, n: int, data: bytes) -> "BitVec":
        """Little-endian bit order: byte k bit b is component 8*k + b."""
        return cls(n, int.from_bytes(data, "little"))

    @classmethod
    def from_words(cls, n: int, words: Sequence[int]) -> "BitVec":
        value = 0
        for k, w in enumerate(words):
            value |= (w & _WORD_MASK) << (k * WORD_BITS)
        return cls(n, value)

    # -- accessors -------------------------------------------------------

    @property
    def value(self) -> int:
        """The packed integer; bit i is component i."""
        return self._bits

    @property
    def words(self) -> tuple[int, ...]:
        """64-bit words; component i sits in word i//64 at bit i%64."""
        n_words = (self._n + WORD_BITS - 1) // WORD_BITS
        v = self._bits
        return tuple((v >> (k * WORD_BITS)) & _WORD_MASK for k in range(n_words))

    @property
    def weight(self) -> int:
        """Number of 1 components (Hamming weight)."""
        return self._bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Indices of the 1 components, ascending."""
        out = []
        v = self._bits
        while v:
            low = v & -v
            out.append(low.bit_length() - 1)
            v ^= low
        return tuple(out)

    def to01(self) -> str:
        return "".join("1" if (self._bits >> i) & 1 else "0" for i in range(self._n))

    # -- protocol --------------------------------------------------------

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(f"index {i} out of range for length {self._n}")
        return (self._bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        for i in range(self._n):
            yield (bits >> i) & 1

    def __bool__(self) -> bool:
        return self._bits != 0

    def __xor__(self, other: "BitVec") -> "BitVec":
        if self._n != other._n:
            raise DimensionError(f"length mismatch: {self._n} vs {other._n}")
        return BitVec(self._n, self._bits ^ other._bits)

    def __and__(self, other: "BitVec") -> "BitVec":
        if self._n != other._n:
            raise DimensionError(f"length mismatch: {self._n} vs {other._n}")
        return BitVec(self._n, self._bits & other._bits)

    def __invert__(self) -> "BitVec":
        return BitVec(self._n, ~self._bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVec):
            return NotImplemented
        return self._n == other._n and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._n, self._bits))

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        return f"BitVec({self.to01()!r})"

    # -- arithmetic ------------------------------------------------------

    def dot(self, other: "BitVec") -> int:
        """GF(2) inner product: parity of the overlap."""
        if self._n != other._n:
            raise DimensionError(f"length mismatch: {self._n} vs {other._n}")
        return (self._bits & other._bits).bit_count() & 1


RowLike = Union[BitVec, str, Sequence[int]]


class Gf2Matrix:
    """Dense matrix over GF(2) stored as packed rows."""

    __slots__ = ("_n_rows", "_n_cols", "_row_bits", "_symmetric")

    def __init__(self, rows: Iterable[RowLike], n_cols: int | None = None):
        packed: list[int] = []
        for row in rows:
            if isinstance(row, BitVec):
                width, bits = len(row), row.value
            elif isinstance(row, str):
                v = BitVec.from01(row)
                width, bits = len(v), v.value
            else:
                v = BitVec.from_bits(row)
                width, bits = len(v), v.value
            if n_cols is None:
                n_cols = width
            elif width != n_cols:
                raise DimensionError(f"row length {width} != n_cols {n_cols}")
            packed.append(bits)
        if n_cols is None:
            raise ValueError("n_cols is required for a matrix with no rows")
        self._n_rows = len(packed)
        self._n_cols = n_cols
        self._row_bits = tuple(packed)
        self._symmetric: bool | None = None

    @classmethod
    def _raw(cls, n_rows: int, n_cols: int, row_bits: tuple[int, ...]) -> "Gf2Matrix":
        m = object.__new__(cls)
        m._n_rows = n_rows
        m._n_cols = n_cols
        m._row_bits = row_bits
        m._symmetric = None
        return m

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "Gf2Matrix":
        if n_rows < 0 or n_cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        return cls._raw(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls._raw(n, n, tuple(1 << i for i in range(n)))

    # -- accessors -------------------------------------------------------

    @property
    def n_rows(self) -> int:
        return self._n_rows

    @property
    def n_cols(self) -> int:
        return self._n_cols

    @property
    def rows(self) -> tuple[BitVec, ...]:
        n = self._n_cols
        return tuple(BitVec(n, bits) for bits in self._row_bits)

    def row(self, i: int) -> BitVec:
        return BitVec(self._n_cols, self._row_bits[i])

    def column(self, j: int) -> BitVec:
        if not 0 <= j < self._n_cols:
            raise IndexError(f"column {j} out of range")
        bits = 0
        for i, row in enumerate(self._row_bits):
            bits |= ((row >> j) & 1) << i
        return BitVec(self._n_rows, bits)

    def get(self, i: int, j: int) -> int:
        if not 0 <= j < self._n_cols:
            raise IndexError(f"column {j} out of range")
        return (self._row_bits[i] >> j) & 1

    # -- operations ------------------------------------------------------

    def matvec(self, x: BitVec) -> BitVec:
        """A·x: XOR of the columns selected by x, computed row-wise."""
        if len(x) != self._n_cols:
            raise DimensionError(
                f"vector length {len(x)} != n_cols {self._n_cols}"
            )
        xb = x.value
        out = 0
        for i, row in enumerate(self._row_bits):
            out |= ((row & xb).bit_count() & 1) << i
        return BitVec(self._n_rows, out)

    def __matmul__(self, x: BitVec) -> BitVec:
        return self.matvec(x)

    def transpose(self) -> "Gf2Matrix":
        out = [0] * self._n_cols
        for i, row in enumerate(self._row_bits):
            bit = 1 << i
            v = row
            while v:
                low = v & -v
                out[low.bit_length() - 1] |= bit
                v ^= low
        return Gf2Matrix._raw(self._n_cols, self._n_rows, tuple(out))

    def is_symmetric(self) -> bool:
        # memoized: the matrix is immutable and the check is hot in the
        # theorem harness, which guards every call on it
        if self._symmetric is None:
            self._symmetric = (
                self._n_rows == self._n_cols and self == self.transpose()
            )
        return self._symmetric

    def diagonal(self) -> BitVec:
        """The diagonal as a vector; defined for square matrices only."""
        if self._n_rows != self._n_cols:
            raise DimensionError(
                f"diagonal of a non-square matrix ({self._n_rows}x{self._n_cols})"
            )
        bits = 0
        for i, row in enumerate(self._row_bits):
            bits |= ((row >> i) & 1) << i
        return BitVec(self._n_rows, bits)

    # -- protocol --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return (
            self._n_rows == other._n_rows
            and self._n_cols == other._n_cols
            and self._row_bits == other._row_bits
        )

    def __hash__(self) -> int:
        return hash((self._n_rows, self._n_cols, self._row_bits))

    def __str__(self) -> str:
        return "\n".join(BitVec(self._n_cols, b).to01() for b in self._row_bits)

    def __repr__(self) -> str:
        return f"Gf2Matrix({self._n_rows}x{self._n_cols})"


@dataclass(frozen=True)
class SolutionSet:
    """The full coset of solutions to a solvable system A·x = b.

    Every solution is ``particular`` XOR some subset of ``basis``; the coset
    has exactly 2**nullity members.
    """

    particular: BitVec
    basis: tuple[BitVec, ...]

    @property
    def nullity(self) -> int:
        return len(self.basis)

    def count(self) -> int:
        return 1 << len(self.basis)

    def members(self) -> Iterator[BitVec]:
        """All coset members in Gray-code order (first one is particular).

        Materializes 2**nullity vectors; callers guard the size.
        """
        n = len(self.particular)
        cur = self.particular.value
        yield BitVec(n, cur)
        basis_bits = [v.value for v in self.basis]
        for step in range(1, 1 << len(basis_bits)):
            j = (step & -step).bit_length() - 1
            cur ^= basis_bits[j]
            yield BitVec(n, cur)


# -- elimination --------------------------------------------------------


def _eliminate(rows: list[int], pivot_limit: int) -> list[int]:
    """In-place Gauss-Jordan over GF(2); rows are packed integers.

    Pivots are searched left to right in columns < pivot_limit, taking the
    first unprocessed row with a 1 (deterministic). Returns pivot columns,
    strictly increasing. Row operations span the full row width, so callers
    may carry augmented columns at bit positions >= pivot_limit.
    """
    pivots: list[int] = []
    m = len(rows)
    r = 0
    for c in range(pivot_limit):
        if r == m:
            break
        mask = 1 << c
        pivot_row = -1
        for i in range(r, m):
            if rows[i] & mask:
                pivot_row = i
                break
        if pivot_row < 0:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r]
        for i in range(m):
            if rows[i] & mask and i != r:
                rows[i] ^= piv
        pivots.append(c)
        r += 1
    return pivots


def rref(a: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    rows = list(a._row_bits)
    pivots = _eliminate(rows, a.n_cols)
    return Gf2Matrix._raw(a.n_rows, a.n_cols, tuple(rows)), pivots


def rank(a: Gf2Matrix) -> int:
    rows = list(a._row_bits)
    return len(_eliminate(rows, a.n_cols))


def _basis_from_rref(rows: list[int], pivots: list[int], n_cols: int) -> tuple[BitVec, ...]:
    """One nullspace vector per free column: free var 1, pivots back-filled."""
    pivot_set = set(pivots)
    basis = []
    for f in range(n_cols):
        if f in pivot_set:
            continue
        v = 1 << f
        fmask = 1 << f
        for k, c in enumerate(pivots):
            if rows[k] & fmask:
                v |= 1 << c
        basis.append(BitVec(n_cols, v))
    return tuple(basis)


def nullspace_basis(a: Gf2Matrix) -> list[BitVec]:
    """Basis of {x : A·x = 0}, one vector per free column of the RREF."""
    rows = list(a._row_bits)
    pivots = _eliminate(rows, a.n_cols)
    return list(_basis_from_rref(rows, pivots, a.n_cols))


def _solve_raw(a: Gf2Matrix, b: BitVec) -> tuple[int, list[int], list[int]] | None:
    """Eliminate the augmented system; None if inconsistent.

    Returns (particular_bits, reduced_rows, pivots); the reduced rows still
    carry the augmented bit at position n_cols.
    """
    if len(b) != a.n_rows:
        raise DimensionError(
            f"right-hand side length {len(b)} != n_rows {a.n_rows}"
        )
    n = a.n_cols
    bb = b.value
    rows = [bits | (((bb >> i) & 1) << n) for i, bits in enumerate(a._row_bits)]
    pivots = _eliminate(rows, n)
    for i in range(len(pivots), len(rows)):
        if rows[i]:
            return None
    x = 0
    b_mask = 1 << n
    for k, c in enumerate(pivots):
        if rows[k] & b_mask:
            x |= 1 << c
    return x, rows, pivots


def solve(a: Gf2Matrix, b: BitVec) -> BitVec | None:
    """Canonical solution of A·x = b (free variables 0), or None.

    None means b is outside the column space; it is a normal outcome, not
    an error.
    """
    raw = _solve_raw(a, b)
    if raw is None:
        return None
    x, _, _ = raw
    return BitVec(a.n_cols, x)


def solution_set(a: Gf2Matrix, b: BitVec) -> SolutionSet | None:
    """Particular solution plus nullspace basis, from a single elimination."""
    raw = _solve_raw(a, b)
    if raw is None:
        return None
    x, rows, pivots = raw
    basis = _basis_from_rref(rows, pivots, a.n_cols)
    return SolutionSet(BitVec(a.n_cols, x), basis)


# -- fixture text format -------------------------------------------------


def format_matrix(a: Gf2Matrix) -> str:
    """Plain-text literal: "ROWS COLS" header then one 0/1 line per row."""
    lines = [f"{a.n_rows} {a.n_cols}"]
    lines.extend(BitVec(a.n_cols, b).to01() for b in a._row_bits)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Gf2Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix literal")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {lines[0]!r}, expected 'ROWS COLS'")
    n_rows, n_cols = int(head[0]), int(head[1])
    if n_rows < 0 or n_cols < 0:
        raise ValueError(f"negative dimensions in header {lines[0]!r}")
    if n_cols == 0:
        # zero-width rows serialize as blank lines; nothing to read back
        return Gf2Matrix._raw(n_rows, 0, (0,) * n_rows)
    body = lines[1:]
    if len(body) != n_rows:
        raise ValueError(f"expected {n_rows} rows, got {len(body)}")
    rows = []
    for ln in body:
        if len(ln) != n_cols:
            raise ValueError(f"row {ln!r} is not {n_cols} columns wide")
        rows.append(ln)
    return Gf2Matrix(rows, n_cols=n_cols)
