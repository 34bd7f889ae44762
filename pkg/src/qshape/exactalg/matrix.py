"""Immutable exact matrices over a base ring.

Entries are stored row-major as a flat tuple of canonical ring elements.
All operations return new matrices; a Matrix is hashable and safe to
share between threads.
"""

from __future__ import annotations

from ..errors import InvalidParameter
from .rings import BaseRing


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: BaseRing, rows: int, cols: int, entries):
        if rows < 0 or cols < 0:
            raise InvalidParameter("matrix dimensions must be nonnegative")
        entries = tuple(ring.canon(x) for x in entries)
        if len(entries) != rows * cols:
            raise InvalidParameter(
                f"expected {rows * cols} entries, got {len(entries)}")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_rows(ring: BaseRing, rows_data) -> "Matrix":
        rows_data = [list(r) for r in rows_data]
        r = len(rows_data)
        c = len(rows_data[0]) if r else 0
        if any(len(row) != c for row in rows_data):
            raise InvalidParameter("ragged rows")
        return Matrix(ring, r, c, [x for row in rows_data for x in row])

    @staticmethod
    def zeros(ring: BaseRing, rows: int, cols: int) -> "Matrix":
        return Matrix(ring, rows, cols, [ring.zero] * (rows * cols))

    @staticmethod
    def identity(ring: BaseRing, n: int) -> "Matrix":
        return Matrix(ring, n, n,
                      [ring.one if i == j else ring.zero
                       for i in range(n) for j in range(n)])

    @staticmethod
    def column(ring: BaseRing, data) -> "Matrix":
        data = list(data)
        return Matrix(ring, len(data), 1, data)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def column_matrix(self, j) -> "Matrix":
        return Matrix(self.ring, self.rows, 1, self.col(j))

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    # -- predicates -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        z = self.ring.zero
        return all(x == z for x in self.entries)

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.ring == other.ring
                and self.rows == other.rows
                and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({self.ring!r}, {self.rows}x{self.cols}, {self.to_lists()})"

    # -- arithmetic ---------------------------------------------------------------

    def _same_shape(self, other):
        if self.ring != other.ring or self.rows != other.rows \
                or self.cols != other.cols:
            raise InvalidParameter("shape or ring mismatch")

    def __add__(self, other) -> "Matrix":
        self._same_shape(other)
        add = self.ring.add
        return Matrix(self.ring, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other) -> "Matrix":
        self._same_shape(other)
        sub = self.ring.sub
        return Matrix(self.ring, self.rows, self.cols,
                      [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        neg = self.ring.neg
        return Matrix(self.ring, self.rows, self.cols,
                      [neg(a) for a in self.entries])

    def scale(self, c) -> "Matrix":
        mul = self.ring.mul
        return Matrix(self.ring, self.rows, self.cols,
                      [mul(c, a) for a in self.entries])

    def __mul__(self, other) -> "Matrix":
        if self.ring != other.ring or self.cols != other.rows:
            raise InvalidParameter("incompatible product")
        ring = self.ring
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                s = 0
                for t in range(k):
                    x = arow[t]
                    if x:
                        s += x * b[t * m + j]
                out.append(ring.canon(s))
        return Matrix(ring, n, m, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.cols, self.rows,
                      [self.entries[i * self.cols + j]
                       for j in range(self.cols) for i in range(self.rows)])

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; (self ⊗ other)[(i,k),(j,l)] = self[i,j]*other[k,l]."""
        ring = self.ring
        R, C = self.rows * other.rows, self.cols * other.cols
        out = [ring.zero] * (R * C)
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i * self.cols + j]
                if a == ring.zero:
                    continue
                for k in range(other.rows):
                    base = (i * other.rows + k) * C + j * other.cols
                    for l in range(other.cols):
                        out[base + l] = ring.mul(a, other.entries[k * other.cols + l])
        return Matrix(ring, R, C, out)

    # -- assembly -----------------------------------------------------------------

    @staticmethod
    def hstack(matrices) -> "Matrix":
        matrices = [m for m in matrices]
        if not matrices:
            raise InvalidParameter("hstack of nothing")
        ring, rows = matrices[0].ring, matrices[0].rows
        if any(m.rows != rows or m.ring != ring for m in matrices):
            raise InvalidParameter("hstack shape mismatch")
        out = []
        for i in range(rows):
            for m in matrices:
                out.extend(m.row(i))
        return Matrix(ring, rows, sum(m.cols for m in matrices), out)

    @staticmethod
    def vstack(matrices) -> "Matrix":
        matrices = [m for m in matrices]
        if not matrices:
            raise InvalidParameter("vstack of nothing")
        ring, cols = matrices[0].ring, matrices[0].cols
        if any(m.cols != cols or m.ring != ring for m in matrices):
            raise InvalidParameter("vstack shape mismatch")
        out = []
        for m in matrices:
            out.extend(m.entries)
        return Matrix(ring, sum(m.rows for m in matrices), cols, out)

    @staticmethod
    def block_diag(ring: BaseRing, matrices) -> "Matrix":
        matrices = [m for m in matrices]
        R = sum(m.rows for m in matrices)
        C = sum(m.cols for m in matrices)
        out = [ring.zero] * (R * C)
        r0 = c0 = 0
        for m in matrices:
            for i in range(m.rows):
                for j in range(m.cols):
                    out[(r0 + i) * C + (c0 + j)] = m.entries[i * m.cols + j]
            r0 += m.rows
            c0 += m.cols
        return Matrix(ring, R, C, out)

    def take_columns(self, indices) -> "Matrix":
        indices = list(indices)
        out = []
        for i in range(self.rows):
            row = self.row(i)
            out.extend(row[j] for j in indices)
        return Matrix(self.ring, self.rows, len(indices), out)

    def take_rows(self, indices) -> "Matrix":
        indices = list(indices)
        out = []
        for i in indices:
            out.extend(self.row(i))
        return Matrix(self.ring, len(indices), self.cols, out)

    # -- serialization ---------------------------------------------------------------

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [self.ring.format_entry(x) for x in self.entries]}

    @staticmethod
    def from_json(ring: BaseRing, data) -> "Matrix":
        if not isinstance(data, dict) or {"rows", "cols", "entries"} - set(data):
            raise InvalidParameter("matrix object needs rows/cols/entries")
        entries = [ring.parse_entry(x) for x in data["entries"]]
        return Matrix(ring, data["rows"], data["cols"], entries)
