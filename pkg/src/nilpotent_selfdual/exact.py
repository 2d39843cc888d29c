"""Exact sparse matrices over Q(i) and the linear algebra the oracle needs.

Entries are stored as two sparse dictionaries of ``Fraction`` (real and
imaginary parts). Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Sparse = dict[tuple[int, int], Fraction]


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _add(a: Sparse, b: Sparse, sign: int = 1) -> Sparse:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return _clean(out)


def _mm(a: Sparse, b: Sparse) -> Sparse:
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return _clean(out)


def _to_parts(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, tuple):
        return Fraction(x[0]), Fraction(x[1])
    if isinstance(x, complex):
        re, im = Fraction(x.real), Fraction(x.imag)
        if re.denominator > 1 << 20 or im.denominator > 1 << 20:
            raise ValueError("complex literals must have exactly representable parts")
        return re, im
    return Fraction(x), Fraction(0)


class ExactMatrix:
    """Rectangular matrix over Q(i)."""

    __slots__ = ("rows", "cols", "re", "im")

    def __init__(self, rows: int, cols: int, re: Sparse | None = None, im: Sparse | None = None):
        self.rows = rows
        self.cols = cols
        self.re: Sparse = _clean(re or {})
        self.im: Sparse = _clean(im or {})

    # construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        """Entries may be ints, Fractions, ``(re, im)`` pairs or complex literals."""
        r = len(rows)
        c = len(rows[0]) if r else 0
        re, im = {}, {}
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                a, b = _to_parts(x)
                if a:
                    re[(i, j)] = a
                if b:
                    im[(i, j)] = b
        return cls(r, c, re, im)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        return cls(n, n, {(i, i): Fraction(v) for i, v in enumerate(values)})

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, imaginary: bool = False) -> "ExactMatrix":
        entry = {(i, j): Fraction(1)}
        return cls(rows, cols, None if imaginary else entry, entry if imaginary else None)

    # algebra
    def _check_same(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols, _add(self.re, other.re), _add(self.im, other.im))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix(self.rows, self.cols, _add(self.re, other.re, -1), _add(self.im, other.im, -1))

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, {k: -v for k, v in self.re.items()}, {k: -v for k, v in self.im.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a, b, c, d = self.re, self.im, other.re, other.im
        re = _add(_mm(a, c), _mm(b, d), -1)
        im = _add(_mm(a, d), _mm(b, c))
        return ExactMatrix(self.rows, other.cols, re, im)

    def scale(self, re: Scalar, im: Scalar = 0) -> "ExactMatrix":
        """Multiply by the scalar ``re + i*im``."""
        re, im = Fraction(re), Fraction(im)
        out_re = _add({k: re * v for k, v in self.re.items()}, {k: im * v for k, v in self.im.items()}, -1)
        out_im = _add({k: im * v for k, v in self.re.items()}, {k: re * v for k, v in self.im.items()})
        return ExactMatrix(self.rows, self.cols, out_re, out_im)

    def __mul__(self, c: Scalar) -> "ExactMatrix":
        return self.scale(c)

    __rmul__ = __mul__

    def times_i(self) -> "ExactMatrix":
        return self.scale(0, 1)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.re.items()},
                           {(j, i): v for (i, j), v in self.im.items()})

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, dict(self.re), {k: -v for k, v in self.im.items()})

    @property
    def H(self) -> "ExactMatrix":
        return self.T.conj()

    def trace(self) -> tuple[Fraction, Fraction]:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        n = self.rows
        return (sum((self.re.get((i, i), Fraction(0)) for i in range(n)), Fraction(0)),
                sum((self.im.get((i, i), Fraction(0)) for i in range(n)), Fraction(0)))

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.re == other.re and self.im == other.im

    __hash__ = None  # type: ignore[assignment]

    def entry(self, i: int, j: int) -> tuple[Fraction, Fraction]:
        return self.re.get((i, j), Fraction(0)), self.im.get((i, j), Fraction(0))

    def real_rows(self) -> list[list[Fraction]]:
        if self.im:
            raise ValueError("matrix is not real")
        return [[self.re.get((i, j), Fraction(0)) for j in range(self.cols)] for i in range(self.rows)]

    def coordinates(self) -> dict[int, Fraction]:
        """Sparse real coordinate vector: real parts first, then imaginary parts."""
        c = self.cols
        off = self.rows * c
        out = {i * c + j: v for (i, j), v in self.re.items()}
        out.update({off + i * c + j: v for (i, j), v in self.im.items()})
        return out

    def __repr__(self) -> str:
        def fmt(i: int, j: int) -> str:
            a, b = self.entry(i, j)
            if not b:
                return str(a)
            if not a:
                return f"{b}i"
            return f"{a}{'+' if b > 0 else '-'}{abs(b)}i"

        body = "; ".join(", ".join(fmt(i, j) for j in range(self.cols)) for i in range(self.rows))
        return f"ExactMatrix([{body}])"


def block_diag(*mats: ExactMatrix) -> ExactMatrix:
    r = c = 0
    re: Sparse = {}
    im: Sparse = {}
    for m in mats:
        re.update({(i + r, j + c): v for (i, j), v in m.re.items()})
        im.update({(i + r, j + c): v for (i, j), v in m.im.items()})
        r += m.rows
        c += m.cols
    return ExactMatrix(r, c, re, im)


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; rows of ``a`` index the outer blocks."""
    def part(x: Sparse, y: Sparse) -> Sparse:
        return {(i * b.rows + k, j * b.cols + l): v * w for (i, j), v in x.items() for (k, l), w in y.items()}

    re = _add(part(a.re, b.re), part(a.im, b.im), -1)
    im = _add(part(a.re, b.im), part(a.im, b.re))
    return ExactMatrix(a.rows * b.rows, a.cols * b.cols, re, im)


def place(target_size: int, blocks: Iterable[tuple[int, int, ExactMatrix]]) -> ExactMatrix:
    """Square matrix of the given size with each block added at its (row, col) offset."""
    re: Sparse = {}
    im: Sparse = {}
    for r0, c0, m in blocks:
        for (i, j), v in m.re.items():
            re[(r0 + i, c0 + j)] = re.get((r0 + i, c0 + j), 0) + v
        for (i, j), v in m.im.items():
            im[(r0 + i, c0 + j)] = im.get((r0 + i, c0 + j), 0) + v
    return ExactMatrix(target_size, target_size, re, im)


def bracket(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


# sparse elimination ----------------------------------------------------------

SparseVec = dict[int, Fraction]


class RowReducer:
    """Incremental reduced row echelon form over Q on sparse rows."""

    def __init__(self) -> None:
        self.pivots: dict[int, SparseVec] = {}

    def add(self, row: SparseVec) -> bool:
        """Insert a row; returns True when it was independent of those before."""
        r = {k: Fraction(v) for k, v in row.items() if v}
        for c in [c for c in r if c in self.pivots]:
            coef = r.get(c)
            if not coef:
                continue
            for k, v in self.pivots[c].items():
                nv = r.get(k, 0) - coef * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if not r:
            return False
        col = min(r)
        inv = 1 / r[col]
        r = {k: v * inv for k, v in r.items()}
        for other in self.pivots.values():
            coef = other.get(col)
            if coef:
                for k, v in r.items():
                    nv = other.get(k, 0) - coef * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.pivots[col] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def nullspace(self, ncols: int) -> list[SparseVec]:
        out = []
        for free in range(ncols):
            if free in self.pivots:
                continue
            vec: SparseVec = {free: Fraction(1)}
            for c, row in self.pivots.items():
                v = row.get(free)
                if v:
                    vec[c] = -v
            out.append(_integral(vec))
        return out


def _integral(vec: SparseVec) -> SparseVec:
    den = lcm(*(v.denominator for v in vec.values())) if vec else 1
    return {k: v * den for k, v in vec.items()}


def nullspace(rows: Iterable[SparseVec], ncols: int) -> list[SparseVec]:
    red = RowReducer()
    for r in rows:
        red.add(r)
    return red.nullspace(ncols)


def rank(rows: Iterable[SparseVec]) -> int:
    red = RowReducer()
    for r in rows:
        red.add(r)
    return red.rank


def combine(basis: Sequence[ExactMatrix], coeffs: SparseVec) -> ExactMatrix:
    out = ExactMatrix.zeros(basis[0].rows, basis[0].cols)
    for k, c in coeffs.items():
        out = out + basis[k] * c
    return out


def solve_subspace(
    basis: Sequence[ExactMatrix], constraints: Sequence[Callable[[ExactMatrix], ExactMatrix]]
) -> list[ExactMatrix]:
    """Basis of the real span of ``basis`` cut out by ``L(X) = 0`` for each constraint.

    ``basis`` must be linearly independent over R; the result then is too.
    """
    if not basis:
        return []
    columns: list[dict[int, Fraction]] = []
    for b in basis:
        col: dict[int, Fraction] = {}
        offset = 0
        for L in constraints:
            img = L(b)
            for k, v in img.coordinates().items():
                col[offset + k] = v
            offset += 2 * img.rows * img.cols
        columns.append(col)
    rows: dict[int, SparseVec] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return [combine(basis, vec) for vec in nullspace(rows.values(), len(basis))]


def real_span_dim(mats: Sequence[ExactMatrix]) -> int:
    return rank(m.coordinates() for m in mats)


# inertia ---------------------------------------------------------------------

def symmetric_inertia(S: Sequence[Sequence[Scalar]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a rational symmetric matrix, by congruence."""
    a = [[Fraction(x) for x in row] for row in S]
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((k for k in active if a[k][k] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/column i += row/column j makes the (i, i) entry 2 a[i][j] != 0
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / piv
            if f:
                for t in active:
                    a[i][t] -= f * a[k][t]
        for i in active:
            a[i][k] = a[k][i] = Fraction(0)
    return pos, neg, n - pos - neg


def hermitian_inertia(G: ExactMatrix) -> tuple[int, int, int]:
    """Inertia of a Hermitian matrix via its real symmetric embedding ``[[A, -B], [B, A]]``."""
    if G != G.H:
        raise ValueError("matrix is not Hermitian")
    n = G.rows
    big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for (i, j), v in G.re.items():
        big[i][j] = v
        big[n + i][n + j] = v
    for (i, j), v in G.im.items():
        big[i][n + j] = -v
        big[n + i][j] = v
    p, q, z = symmetric_inertia(big)
    return p // 2, q // 2, z // 2


def inverse(m: ExactMatrix) -> ExactMatrix:
    """Inverse of a real invertible matrix by Gauss-Jordan elimination."""
    n = m.rows
    if m.cols != n:
        raise ValueError("matrix is not square")
    a = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.real_rows())]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ValueError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return ExactMatrix.from_rows([row[n:] for row in a])
