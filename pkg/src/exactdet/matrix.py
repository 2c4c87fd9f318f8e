"""Dense matrices of ring scalars, with the submatrix vocabulary the
condensation algorithm is phrased in.

A ``Matrix`` is an immutable rectangular array whose entries all live in one
ring.  Row operations return new matrices; nothing is mutated in place, so a
condensation trace can keep every intermediate stage intact.

Submatrix terms used throughout the package:

* *connected minor* -- contiguous square block anchored at (top_row, left_col);
* *interior*        -- the matrix with its first and last rows and columns
  removed (the elementwise divisor of the condensation step two stages on);
* ``delete_row_col`` -- the classical minor with one row and one column gone;
* *adjugate*        -- entrywise signed minors ``(-1)^(i+j) * det(minor_ij)``
  with 1-based i, j in the sign, and **no transpose**.  The transpose-free
  convention is deliberate: it is the form the corner identity in
  ``oracle.jacobi_check`` is stated in.
"""

from __future__ import annotations

from .ring import (
    ApproxReal,
    ExactInteger,
    ExactRational,
    Scalar,
    format_scalar,
    parse_scalar,
)


class IndexOutOfRange(IndexError):
    """Row/column index outside the matrix."""


class TooSmall(ValueError):
    """Matrix too small for the requested operation (e.g. interior of 2x2)."""


class ParseError(ValueError):
    """Malformed matrix text; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Matrix:
    __slots__ = ("n_rows", "n_cols", "_rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        first = rows[0][0]
        if not isinstance(first, Scalar):
            raise TypeError(f"entries must be scalars, got {type(first).__name__}")
        kind = type(first)
        if any(type(e) is not kind for r in rows for e in r):
            raise TypeError("all entries must belong to one ring")
        self.n_rows = len(rows)
        self.n_cols = width
        self._rows = rows

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._rows[i][j]

    def rows(self):
        return self._rows

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.n_rows == other.n_rows
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(
            " ".join(format_scalar(e) for e in row) for row in self._rows
        )
        return f"<Matrix {self.n_rows}x{self.n_cols} [{body}]>"

    def _check_row(self, i):
        if not 0 <= i < self.n_rows:
            raise IndexOutOfRange(f"row {i} outside 0..{self.n_rows - 1}")

    def _check_col(self, j):
        if not 0 <= j < self.n_cols:
            raise IndexOutOfRange(f"column {j} outside 0..{self.n_cols - 1}")

    def connected_minor(self, top_row: int, left_col: int, size: int) -> "Matrix":
        """Contiguous size x size block with upper-left corner at (top_row, left_col)."""
        if size < 1:
            raise IndexOutOfRange("minor size must be >= 1")
        if top_row < 0 or top_row + size > self.n_rows:
            raise IndexOutOfRange(f"rows [{top_row}, {top_row + size}) out of range")
        if left_col < 0 or left_col + size > self.n_cols:
            raise IndexOutOfRange(f"cols [{left_col}, {left_col + size}) out of range")
        return Matrix(
            r[left_col : left_col + size]
            for r in self._rows[top_row : top_row + size]
        )

    def interior(self) -> "Matrix":
        """The matrix with first/last rows and columns deleted."""
        if self.n_rows < 3 or self.n_cols < 3:
            raise TooSmall("interior needs at least 3 rows and 3 columns")
        return Matrix(r[1:-1] for r in self._rows[1:-1])

    def delete_row_col(self, i: int, j: int) -> "Matrix":
        """Minor with row i and column j removed."""
        if not self.is_square or self.n_rows < 2:
            raise TooSmall("delete_row_col needs a square matrix, n >= 2")
        self._check_row(i)
        self._check_col(j)
        return Matrix(
            r[:j] + r[j + 1 :] for k, r in enumerate(self._rows) if k != i
        )

    def swap_rows(self, i: int, j: int) -> "Matrix":
        """Rows i and j exchanged; the caller owns the (-1) determinant factor."""
        self._check_row(i)
        self._check_row(j)
        if i == j:
            raise IndexOutOfRange("swap needs two distinct rows")
        rows = list(self._rows)
        rows[i], rows[j] = rows[j], rows[i]
        return Matrix(rows)

    def swap_cols(self, i: int, j: int) -> "Matrix":
        self._check_col(i)
        self._check_col(j)
        if i == j:
            raise IndexOutOfRange("swap needs two distinct columns")
        return Matrix(
            tuple(
                r[j] if k == i else (r[i] if k == j else r[k])
                for k in range(self.n_cols)
            )
            for r in self._rows
        )

    def add_scaled_row(self, src: int, dst: int, c: Scalar) -> "Matrix":
        """Row dst becomes dst + c*src; determinant is unchanged."""
        self._check_row(src)
        self._check_row(dst)
        if src == dst:
            raise IndexOutOfRange("source and destination rows must differ")
        rows = list(self._rows)
        rows[dst] = tuple(d + c * s for d, s in zip(rows[dst], rows[src]))
        return Matrix(rows)

    def add_scaled_col(self, src: int, dst: int, c: Scalar) -> "Matrix":
        self._check_col(src)
        self._check_col(dst)
        if src == dst:
            raise IndexOutOfRange("source and destination columns must differ")
        return Matrix(
            tuple(
                r[k] + c * r[src] if k == dst else r[k]
                for k in range(self.n_cols)
            )
            for r in self._rows
        )


def adjugate(a: Matrix, det_fn) -> Matrix:
    """Entrywise signed-minor matrix, *without* the classical transpose.

    ``det_fn`` is any determinant oracle taking a Matrix.  The (i, j) entry is
    ``(-1)^(i+j) * det_fn(a.delete_row_col(i, j))`` with the sign exponent in
    1-based indices.
    """
    if not a.is_square or a.n_rows < 2:
        raise TooSmall("adjugate needs a square matrix, n >= 2")
    out = []
    for i in range(a.n_rows):
        row = []
        for j in range(a.n_cols):
            d = det_fn(a.delete_row_col(i, j))
            row.append(d if (i + j) % 2 == 0 else -d)
        out.append(row)
    return Matrix(out)


def int_matrix(rows) -> Matrix:
    """Build an ExactInteger matrix from plain ints (test/benchmark helper)."""
    return Matrix([[ExactInteger(v) for v in r] for r in rows])


def parse_matrix(text: str, tolerance=None) -> Matrix:
    """Parse the whitespace matrix format.

    ``#`` starts a comment; an optional first line ``n m`` fixes the shape,
    otherwise every non-blank line is one row.  The ring is inferred from the
    tokens: any ``/`` makes the file rational (integer tokens are promoted,
    the one permitted promotion), any ``.`` or exponent makes it real; mixing
    rational and real tokens is an error.
    """
    from .ring import DEFAULT_TOLERANCE

    tol = DEFAULT_TOLERANCE if tolerance is None else tolerance
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise ParseError("no matrix data")

    header = None
    first = lines[0][1]
    if len(first) == 2:
        try:
            n, m = int(first[0]), int(first[1])
        except ValueError:
            n = m = 0
        if n > 0 and m > 0:
            rest = sum(len(toks) for _, toks in lines[1:])
            if rest == n * m:
                header = (n, m)
                lines = lines[1:]

    tokens = []
    for lineno, toks in lines:
        for t in toks:
            tokens.append((lineno, t))

    has_rational = any("/" in t for _, t in tokens)
    has_real = any(("." in t or "e" in t or "E" in t) and "/" not in t for _, t in tokens)
    if has_rational and has_real:
        raise ParseError("file mixes rational and real tokens")

    def read(lineno, t):
        try:
            s = parse_scalar(t, tolerance=tol)
        except ValueError as e:
            raise ParseError(str(e), line=lineno) from e
        if has_rational and isinstance(s, ExactInteger):
            s = ExactRational(s.value)
        elif has_real and isinstance(s, ExactInteger):
            s = ApproxReal(float(s.value), tol)
        return s

    if header:
        n, m = header
        flat = [read(lineno, t) for lineno, t in tokens]
        rows = [flat[i * m : (i + 1) * m] for i in range(n)]
    else:
        widths = {len(toks) for _, toks in lines}
        if len(widths) != 1:
            raise ParseError(
                f"rows have differing entry counts {sorted(widths)}",
                line=lines[0][0],
            )
        rows = [[read(lineno, t) for t in toks] for lineno, toks in lines]
    return Matrix(rows)


def format_matrix(a: Matrix) -> str:
    """Render a matrix in the text format, always with the ``n m`` header."""
    out = [f"{a.n_rows} {a.n_cols}"]
    for row in a.rows():
        out.append(" ".join(format_scalar(e) for e in row))
    return "\n".join(out) + "\n"
