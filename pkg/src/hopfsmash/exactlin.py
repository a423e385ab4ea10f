"""Exact rational linear algebra: vectors, matrices, order-3 structure tensors,
multi-leg tensor elements, and the nullspace / solving primitives used by every
other module.

Conventions, fixed once:
  * scalars are `fractions.Fraction` (always lowest terms, denominator > 0);
  * vectors are tuples of Fraction, matrices are row-major tuples of rows;
  * a matrix M represents the map e_c |-> sum_r M[r][c] e_r (columns index
    the source basis);
  * Tensor3 t stores t[i][j][k] = coefficient of basis vector k in the
    product (resp. of e_j (x) e_k in the coproduct) of basis vectors i, j;
  * contract(a, b, pairs) keeps the remaining legs of a first, then the
    remaining legs of b, each in their original order.

Elimination is fraction-free: rows are cleared to integers and updated by
cross-multiplication with gcd reduction, which keeps intermediate entries
small without ever rounding.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

Rat = Fraction

RAT_ZERO = Fraction(0)
RAT_ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Shapes of the operands do not line up."""


def rat(x) -> Fraction:
    """Coerce an int, string 'p/q', or Fraction to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


def rat_str(x: Fraction) -> str:
    """Serialize as 'p/q', or 'p' when the denominator is 1."""
    return str(x)


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------

def vec(entries) -> tuple:
    return tuple(rat(x) for x in entries)


def zero_vec(n: int) -> tuple:
    return (RAT_ZERO,) * n


def basis_vec(n: int, i: int) -> tuple:
    return tuple(RAT_ONE if j == i else RAT_ZERO for j in range(n))


def vec_add(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    c = rat(c)
    return tuple(c * a for a in v)


def vec_dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    return sum((a * b for a, b in zip(u, v)), RAT_ZERO)


def is_zero_vec(v) -> bool:
    return all(a == 0 for a in v)


def mat(rows) -> tuple:
    m = tuple(vec(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged rows")
    return m


def identity_mat(n: int) -> tuple:
    return tuple(basis_vec(n, i) for i in range(n))


def zero_mat(r: int, c: int) -> tuple:
    return tuple(zero_vec(c) for _ in range(r))


def mat_shape(m) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_vec(m, v):
    r, c = mat_shape(m)
    if len(v) != c:
        raise DimensionMismatch(f"matrix is {r}x{c}, vector has length {len(v)}")
    return tuple(vec_dot(row, v) for row in m)


def mat_mul(a, b):
    ra, ca = mat_shape(a)
    rb, cb = mat_shape(b)
    if ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(vec_dot(arow, bcol) for bcol in bt) for arow in a)


def transpose(m):
    r, c = mat_shape(m)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def mat_eq(a, b) -> bool:
    return mat_shape(a) == mat_shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# sparse fraction-free elimination core
# ---------------------------------------------------------------------------

def _int_row(row) -> dict:
    """Clear denominators; return {col: int} over the nonzero entries."""
    entries = [(j, x) for j, x in enumerate(row) if x != 0]
    if not entries:
        return {}
    den = 1
    for _, x in entries:
        den = den * x.denominator // gcd(den, x.denominator)
    out = {j: int(x * den) for j, x in entries}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


def _reduce_content(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _sparse_rref(rows: list[dict], ncols: int):
    """Fraction-free reduced echelon form of integer sparse rows.

    Returns (pivot_rows, pivots) where pivot_rows[i] is a normalized sparse
    Fraction row with leading 1 in column pivots[i], reduced above and below.
    """
    work = [dict(r) for r in rows if r]
    piv_rows: list[dict] = []
    pivots: list[int] = []
    for col in range(ncols):
        cand = None
        for idx, r in enumerate(work):
            if col in r:
                if cand is None or len(r) < len(work[cand]):
                    cand = idx
        if cand is None:
            continue
        prow = work.pop(cand)
        p = prow[col]
        nxt = []
        for r in work:
            a = r.get(col)
            if a is None:
                nxt.append(r)
                continue
            new = {}
            for j in r.keys() | prow.keys():
                w = r.get(j, 0) * p - prow.get(j, 0) * a
                if w:
                    new[j] = w
            new.pop(col, None)
            if new:
                nxt.append(_reduce_content(new))
        work = nxt
        piv_rows.append(prow)
        pivots.append(col)
    # back-substitute to reduced form, over Fraction
    frac_rows = [{j: Fraction(v, r[pivots[i]]) for j, v in r.items()}
                 for i, r in enumerate(piv_rows)]
    for i in range(len(frac_rows) - 1, -1, -1):
        for k in range(i):
            c = frac_rows[k].get(pivots[i])
            if c is None or c == 0:
                continue
            rk = frac_rows[k]
            for j, v in frac_rows[i].items():
                w = rk.get(j, RAT_ZERO) - c * v
                if w:
                    rk[j] = w
                else:
                    rk.pop(j, None)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return [frac_rows[i] for i in order], [pivots[i] for i in order]


def _rows_of_mat(m) -> list[dict]:
    return [_int_row(r) for r in m]


def rref(m):
    """Reduced row echelon form (dense) and the pivot-column list."""
    r, c = mat_shape(m)
    frac_rows, pivots = _sparse_rref(_rows_of_mat(m), c)
    dense = tuple(tuple(row.get(j, RAT_ZERO) for j in range(c)) for row in frac_rows)
    return dense, pivots


def rank(m) -> int:
    _, pivots = _sparse_rref(_rows_of_mat(m), mat_shape(m)[1])
    return len(pivots)


def kernel_basis(m) -> list:
    """Exact basis of the right null space {v : m v = 0}; [] iff injective."""
    nrows, ncols = mat_shape(m)
    frac_rows, pivots = _sparse_rref(_rows_of_mat(m), ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [RAT_ZERO] * ncols
        v[f] = RAT_ONE
        for row, p in zip(frac_rows, pivots):
            c = row.get(f)
            if c is not None:
                v[p] = -c
        basis.append(tuple(v))
    return basis


def solve(m, b):
    """Exact solution of m x = b, or None when the system is inconsistent."""
    nrows, ncols = mat_shape(m)
    if len(b) != nrows:
        raise DimensionMismatch(f"matrix is {nrows}x{ncols}, rhs has length {len(b)}")
    aug = [list(row) + [bv] for row, bv in zip(m, b)]
    frac_rows, pivots = _sparse_rref([_int_row(r) for r in aug], ncols + 1)
    x = [RAT_ZERO] * ncols
    for row, p in zip(frac_rows, pivots):
        if p == ncols:
            return None
        x[p] = row.get(ncols, RAT_ZERO)
    return tuple(x)


def mat_inverse(m):
    """Exact inverse, or None when singular."""
    n, c = mat_shape(m)
    if n != c:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = [list(row) + list(basis_vec(n, i)) for i, row in enumerate(m)]
    frac_rows, pivots = _sparse_rref([_int_row(r) for r in aug], 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    inv = tuple(tuple(frac_rows[i].get(n + j, RAT_ZERO) for j in range(n))
                for i in range(n))
    return inv


# ---------------------------------------------------------------------------
# subspaces (canonical RREF bases make comparisons exact and cheap)
# ---------------------------------------------------------------------------

def span_basis(vectors, dim: int | None = None) -> list:
    """Canonical (RREF) basis of the span of the given vectors."""
    vectors = list(vectors)
    if dim is None:
        if not vectors:
            raise DimensionMismatch("empty span needs an explicit ambient dimension")
        dim = len(vectors[0])
    rows = [_int_row(v) for v in vectors]
    frac_rows, _ = _sparse_rref(rows, dim)
    return [tuple(r.get(j, RAT_ZERO) for j in range(dim)) for r in frac_rows]


def in_span(basis, v) -> bool:
    """Exact membership of v in the span of the basis vectors."""
    if not basis:
        return is_zero_vec(v)
    m = transpose(tuple(basis))
    return solve(m, v) is not None


def coords_in_basis(basis, v):
    """Coordinates of v in the given basis, or None if v is outside the span."""
    if not basis:
        return () if is_zero_vec(v) else None
    return solve(transpose(tuple(basis)), v)


def spans_equal(vs, ws, dim: int | None = None) -> bool:
    vs, ws = list(vs), list(ws)
    if dim is None:
        dim = len(vs[0]) if vs else (len(ws[0]) if ws else 0)
    return span_basis(vs, dim) == span_basis(ws, dim)


# ---------------------------------------------------------------------------
# order-3 structure tensors
# ---------------------------------------------------------------------------

class Tensor3:
    """Order-3 array of exact rationals with the fixed index convention
    value[i][j][k] = coefficient of k in the product / coproduct of (i, j).

    Storage is per-(i, j) coefficient rows, so sparse structure constants
    (group algebras, smash products) cost what they contain; `dense()`
    materializes the full nested array for serialization.
    """

    __slots__ = ("dims", "_rows")

    def __init__(self, dims, rows):
        self.dims = tuple(dims)
        self._rows = rows

    @staticmethod
    def from_dense(data) -> "Tensor3":
        d0 = len(data)
        d1 = len(data[0]) if d0 else 0
        d2 = len(data[0][0]) if d1 else 0
        rows = tuple(
            tuple(
                tuple((k, rat(x)) for k, x in enumerate(data[i][j]) if rat(x) != 0)
                for j in range(d1))
            for i in range(d0))
        return Tensor3((d0, d1, d2), rows)

    @staticmethod
    def from_entries(dims, entries) -> "Tensor3":
        """Build from an iterable of (i, j, k, value)."""
        d0, d1, d2 = dims
        acc: dict = {}
        for i, j, k, v in entries:
            v = rat(v)
            if v == 0:
                continue
            key = (i, j)
            cell = acc.setdefault(key, {})
            w = cell.get(k, RAT_ZERO) + v
            if w == 0:
                cell.pop(k, None)
            else:
                cell[k] = w
        rows = tuple(
            tuple(tuple(sorted(acc.get((i, j), {}).items()))
                  for j in range(d1))
            for i in range(d0))
        return Tensor3(dims, rows)

    @staticmethod
    def from_row_dicts(dims, rowdicts) -> "Tensor3":
        """Build from {(i, j): {k: value}}; absent cells are zero."""
        d0, d1, d2 = dims
        rows = tuple(
            tuple(tuple(sorted((k, v) for k, v in rowdicts.get((i, j), {}).items() if v != 0))
                  for j in range(d1))
            for i in range(d0))
        return Tensor3(dims, rows)

    def row(self, i: int, j: int):
        """Nonzero (k, coeff) pairs of the (i, j) cell."""
        return self._rows[i][j]

    def entry(self, i: int, j: int, k: int) -> Fraction:
        for kk, v in self._rows[i][j]:
            if kk == k:
                return v
        return RAT_ZERO

    def out_vec(self, i: int, j: int) -> tuple:
        v = [RAT_ZERO] * self.dims[2]
        for k, c in self._rows[i][j]:
            v[k] = c
        return tuple(v)

    def dense(self) -> list:
        d0, d1, d2 = self.dims
        return [[list(self.out_vec(i, j)) for j in range(d1)] for i in range(d0)]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tensor3) and self.dims == other.dims
                and self._rows == other._rows)

    def __hash__(self):
        return hash((self.dims, self._rows))

    def __repr__(self):
        return f"Tensor3(dims={self.dims})"


# ---------------------------------------------------------------------------
# dense multi-leg tensor elements
# ---------------------------------------------------------------------------

def _strides(dims) -> tuple:
    s = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        s[i] = s[i + 1] * dims[i + 1]
    return tuple(s)


class TensorElem:
    """An element of V_1 (x) ... (x) V_m, stored densely over a multi-index.

    Houses things like R in H(x)H or a separability idempotent in A(x)A.
    """

    __slots__ = ("dims", "coeffs")

    def __init__(self, dims, coeffs):
        self.dims = tuple(dims)
        self.coeffs = tuple(rat(c) for c in coeffs)
        size = 1
        for d in self.dims:
            size *= d
        if len(self.coeffs) != size:
            raise DimensionMismatch("coefficient count does not match leg dimensions")

    @property
    def legs(self) -> int:
        return len(self.dims)

    @staticmethod
    def zero(dims) -> "TensorElem":
        size = 1
        for d in dims:
            size *= d
        return TensorElem(dims, (RAT_ZERO,) * size)

    @staticmethod
    def from_vector(v) -> "TensorElem":
        return TensorElem((len(v),), v)

    @staticmethod
    def from_matrix(m) -> "TensorElem":
        r, c = mat_shape(m)
        return TensorElem((r, c), tuple(x for row in m for x in row))

    @staticmethod
    def from_entries(dims, entries) -> "TensorElem":
        """Build from an iterable of (multi_index, value); repeats accumulate."""
        strides = _strides(dims)
        size = 1
        for d in dims:
            size *= d
        co = [RAT_ZERO] * size
        for idx, v in entries:
            flat = sum(i * s for i, s in zip(idx, strides))
            co[flat] += rat(v)
        return TensorElem(dims, co)

    def entry(self, *idx) -> Fraction:
        strides = _strides(self.dims)
        return self.coeffs[sum(i * s for i, s in zip(idx, strides))]

    def items(self):
        """Nonzero (multi_index, value) pairs."""
        ranges = [range(d) for d in self.dims]
        for flat, idx in enumerate(itertools.product(*ranges)):
            c = self.coeffs[flat]
            if c != 0:
                yield idx, c

    def as_matrix(self) -> tuple:
        if self.legs != 2:
            raise DimensionMismatch("as_matrix needs exactly 2 legs")
        r, c = self.dims
        return tuple(tuple(self.coeffs[i * c + j] for j in range(c)) for i in range(r))

    def add(self, other) -> "TensorElem":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor shapes differ")
        return TensorElem(self.dims, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def sub(self, other) -> "TensorElem":
        if self.dims != other.dims:
            raise DimensionMismatch("tensor shapes differ")
        return TensorElem(self.dims, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "TensorElem":
        c = rat(c)
        return TensorElem(self.dims, tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def swap_legs(self, perm) -> "TensorElem":
        """Reorder legs: new leg t carries old leg perm[t]."""
        if sorted(perm) != list(range(self.legs)):
            raise DimensionMismatch("not a permutation of the legs")
        new_dims = tuple(self.dims[p] for p in perm)
        co = [RAT_ZERO] * len(self.coeffs)
        strides_new = _strides(new_dims)
        for idx, c in self.items():
            new_idx = tuple(idx[p] for p in perm)
            co[sum(i * s for i, s in zip(new_idx, strides_new))] = c
        return TensorElem(new_dims, co)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TensorElem) and self.dims == other.dims
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.dims, self.coeffs))

    def __repr__(self):
        nz = sum(1 for c in self.coeffs if c != 0)
        return f"TensorElem(dims={self.dims}, nonzeros={nz})"


def tensor_product(a: TensorElem, b: TensorElem) -> TensorElem:
    """Outer product; legs of a first."""
    dims = a.dims + b.dims
    co = [x * y for x in a.coeffs for y in b.coeffs]
    return TensorElem(dims, co)


def contract(a: TensorElem, b: TensorElem, pairs) -> TensorElem:
    """Exact contraction of the given (leg-of-a, leg-of-b) pairs.

    Result legs: remaining legs of a in order, then remaining legs of b.
    """
    pairs = list(pairs)
    for la, lb in pairs:
        if a.dims[la] != b.dims[lb]:
            raise DimensionMismatch(
                f"paired legs have different dimensions: {a.dims[la]} vs {b.dims[lb]}")
    a_con = [la for la, _ in pairs]
    b_con = [lb for _, lb in pairs]
    if len(set(a_con)) != len(a_con) or len(set(b_con)) != len(b_con):
        raise DimensionMismatch("a leg may be contracted at most once")
    a_keep = [l for l in range(a.legs) if l not in a_con]
    b_keep = [l for l in range(b.legs) if l not in b_con]
    dims = tuple(a.dims[l] for l in a_keep) + tuple(b.dims[l] for l in b_keep)
    strides = _strides(dims) if dims else ()
    size = 1
    for d in dims:
        size *= d
    co = [RAT_ZERO] * size
    b_items = list(b.items())
    for ia, ca in a.items():
        for ib, cb in b_items:
            if any(ia[la] != ib[lb] for la, lb in pairs):
                continue
            idx = tuple(ia[l] for l in a_keep) + tuple(ib[l] for l in b_keep)
            co[sum(i * s for i, s in zip(idx, strides))] += ca * cb
    return TensorElem(dims, co)
