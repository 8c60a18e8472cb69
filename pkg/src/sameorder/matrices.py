"""Matrix groups over finite fields: SL, PSL, SU, PSU.

Elements are dense n x n matrices of field codes.  Groups built here override
the generic closure, power, and conjugation paths with table-driven numpy
batches whenever the field carries dense tables; the pure-Python element
arithmetic stays authoritative for everything else and for large fields.

Projective groups (PSL, PSU) represent each coset of the scalar subgroup by
the unique scalar multiple whose first nonzero entry in row-major order is 1,
multiplying and renormalizing.  Two special linear matrices normalize to the
same representative exactly when they differ by a scalar of determinant one,
so the construction realizes the quotient faithfully.
"""

from __future__ import annotations

import math
from array import array
from itertools import product

import numpy as np

from .core import DEFAULT_CAP, Group, GroupElement, closure_elements
from .errors import CapExceededError, InvalidParameterError, OrderMismatchError
from .fields import FiniteField, field_make
from .numtheory import prime_power


def mat_identity_rows(n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(field: FiniteField, a, b) -> tuple:
    n = len(a)
    mr = field.mul_rows
    ar = field.add_rows
    out = []
    if mr is not None:
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                s = 0
                for k in range(n):
                    s = ar[s][mr[ai[k]][b[k][j]]]
                row.append(s)
            out.append(tuple(row))
        return tuple(out)
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            s = 0
            for k in range(n):
                s = field.add(s, field.mul(ai[k], b[k][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_inv(field: FiniteField, rows) -> tuple:
    """Gauss-Jordan inverse; group elements are invertible by construction."""
    n = len(rows)
    aug = [list(rows[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise InvalidParameterError("matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        s = field.inv(aug[col][col])
        aug[col] = [field.mul(s, x) for x in aug[col]]
        pivrow = aug[col]
        for r in range(n):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(aug[r], pivrow)]
    return tuple(tuple(row[n:]) for row in aug)


def mat_det(field: FiniteField, rows) -> int:
    n = len(rows)
    m = [list(r) for r in rows]
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = field.neg(det)
        det = field.mul(det, m[col][col])
        sinv = field.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col]:
                f = field.mul(sinv, m[r][col])
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[col])]
    return det


def mat_normalize(field: FiniteField, rows) -> tuple:
    """Scale so the first nonzero entry in row-major order is 1."""
    for row in rows:
        for x in row:
            if x:
                if x == 1:
                    return rows
                s = field.inv(x)
                return tuple(tuple(field.mul(s, y) for y in r) for r in rows)
    raise InvalidParameterError("zero matrix cannot be normalized")


class MatrixElement(GroupElement):
    __slots__ = ("field", "rows", "projective", "_key")
    kind = "matrix"

    def __init__(self, field: FiniteField, rows, projective: bool = False):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.projective = projective
        self._key = None

    def op(self, other: "MatrixElement") -> "MatrixElement":
        prod = mat_mul(self.field, self.rows, other.rows)
        if self.projective:
            prod = mat_normalize(self.field, prod)
        return MatrixElement(self.field, prod, self.projective)

    def inv(self) -> "MatrixElement":
        r = mat_inv(self.field, self.rows)
        if self.projective:
            r = mat_normalize(self.field, r)
        return MatrixElement(self.field, r, self.projective)

    def key(self) -> bytes:
        # matches the raw bytes of a uint16 numpy row, so both closure paths
        # land in the same index
        if self._key is None:
            flat = [x for row in self.rows for x in row]
            self._key = array("H", flat).tobytes()
        return self._key

    def det(self) -> int:
        return mat_det(self.field, self.rows)

    def __repr__(self):
        return f"Matrix{self.rows}"


# -- batched table arithmetic -----------------------------------------------------


def _bmul(add_t, mul_t, a, b):
    """Batched matrix product C[..., i, j] = sum_k A[..., i, k] B[..., k, j].

    Leading dimensions broadcast; entries are field codes indexed through the
    dense add/mul tables.
    """
    p = mul_t[a[..., :, :, None], b[..., None, :, :]]
    out = p[..., 0, :]
    for k in range(1, p.shape[-2]):
        out = add_t[out, p[..., k, :]]
    return out


def _bnormalize(mul_t, inv_t, m):
    shape = m.shape
    flat = m.reshape(shape[:-2] + (shape[-1] * shape[-2],))
    first = (flat != 0).argmax(axis=-1)
    lead = np.take_along_axis(flat, first[..., None], axis=-1)[..., 0]
    return mul_t[inv_t[lead][..., None], flat].reshape(shape)


_CHUNK = 2048


class MatrixGroup(Group):
    """Group of matrices over one field, with vectorized internals."""

    def __init__(self, generators, field: FiniteField, n: int,
                 projective: bool = False, name=None, cap=DEFAULT_CAP):
        ident = MatrixElement(field, mat_identity_rows(n), projective)
        super().__init__(generators, ident, name=name, cap=cap)
        self.field = field
        self.n = n
        self.projective = projective
        self._np_elems = None

    def _closure(self, gens, stop_size=None):
        tabs = self.field.np_tables()
        if tabs is None or not gens:
            return closure_elements(self.identity, gens, self.cap, stop_size)
        add_t, mul_t, inv_t = tabs
        n = self.n
        garr = np.array([g.rows for g in gens], dtype=np.uint16)
        ident = np.array(self.identity.rows, dtype=np.uint16)[None]
        index = {self.identity.key(): 0}
        stored = [ident]
        count = 1
        frontier = ident
        while frontier is not None:
            batches = []
            for s in range(0, len(frontier), _CHUNK):
                chunk = frontier[s:s + _CHUNK]
                prod = _bmul(add_t, mul_t, chunk[:, None], garr[None, :])
                prod = prod.reshape(-1, n, n)
                if self.projective:
                    prod = _bnormalize(mul_t, inv_t, prod)
                batches.append(prod.reshape(-1, n * n))
            cand = np.concatenate(batches) if len(batches) > 1 else batches[0]
            fresh = []
            for row in np.unique(cand, axis=0):
                b = row.tobytes()
                if b not in index:
                    index[b] = count
                    count += 1
                    fresh.append(row)
                    if stop_size is not None and count > stop_size:
                        return [], {}, True
                    if count > self.cap:
                        raise CapExceededError(self.cap)
            if fresh:
                frontier = np.stack(fresh).reshape(-1, n, n)
                stored.append(frontier)
            else:
                frontier = None
        rows = np.concatenate(stored).reshape(-1, n, n)
        elems = [
            MatrixElement(self.field, tuple(map(tuple, r)), self.projective)
            for r in rows.tolist()
        ]
        return elems, index, False

    def _np_elements(self):
        if self._np_elems is None:
            self._np_elems = np.array(
                [e.rows for e in self.elements()], dtype=np.uint16
            )
        return self._np_elems

    def _compute_orders(self):
        tabs = self.field.np_tables()
        if tabs is None:
            return super()._compute_orders()
        add_t, mul_t, inv_t = tabs
        e = self._np_elements()
        total = len(e)
        flat = e.reshape(total, -1)
        ident = flat[0]
        orders = np.zeros(total, dtype=np.int64)
        done = (flat == ident).all(axis=1)
        orders[done] = 1
        remaining = np.nonzero(~done)[0]
        cur = e.copy()
        k = 1
        while remaining.size:
            k += 1
            if k > total:
                raise AssertionError("power walk exceeded the group order")
            sub = _bmul(add_t, mul_t, cur[remaining], e[remaining])
            if self.projective:
                sub = _bnormalize(mul_t, inv_t, sub)
            cur[remaining] = sub
            hit = (sub.reshape(len(remaining), -1) == ident).all(axis=1)
            orders[remaining[hit]] = k
            remaining = remaining[~hit]
        return orders.tolist()

    def _conjugation_maps(self):
        tabs = self.field.np_tables()
        if tabs is None:
            return super()._conjugation_maps()
        add_t, mul_t, inv_t = tabs
        e = self._np_elements()
        index = self.element_index()
        total = len(e)
        maps = []
        for a in self.reduced_generators():
            arr = np.array(a.rows, dtype=np.uint16)[None]
            ainv = np.array(a.inv().rows, dtype=np.uint16)[None]
            conj = _bmul(add_t, mul_t, _bmul(add_t, mul_t, ainv, e), arr)
            if self.projective:
                conj = _bnormalize(mul_t, inv_t, conj)
            flat = conj.reshape(total, -1)
            maps.append([index[flat[i].tobytes()] for i in range(total)])
        return maps


# -- classical constructors --------------------------------------------------------


def classical_order(family: str, n: int, q: int) -> int:
    """Order formula for SL/PSL/SU/PSU of degree n over GF(q)."""
    if family in ("SL", "PSL"):
        m = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            m *= q**i - 1
        return m if family == "SL" else m // math.gcd(n, q - 1)
    if family in ("SU", "PSU"):
        m = q ** (n * (n - 1) // 2)
        for i in range(2, n + 1):
            m *= q**i - (-1) ** i
        return m if family == "SU" else m // math.gcd(n, q + 1)
    raise InvalidParameterError(f"unsupported classical family {family!r}")


def _field_for(q: int, double: bool = False) -> FiniteField:
    pp = prime_power(q)
    if pp is None:
        raise InvalidParameterError(f"{q} is not a prime power")
    p, k = pp
    return field_make(p, 2 * k if double else k)


def sl_generators(n: int, field: FiniteField) -> list:
    """Elementary transvections I + lambda*E_ij over an additive field basis."""
    if n not in (2, 3, 4):
        raise InvalidParameterError(f"SL degree {n} unsupported (need 2, 3, or 4)")
    lambdas = [field.p**t for t in range(field.k)]
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for lam in lambdas:
                rows = [list(r) for r in mat_identity_rows(n)]
                rows[i][j] = lam
                gens.append(MatrixElement(field, rows))
    return gens


def hermitian_product(field: FiniteField, q: int, x, y) -> int:
    """h(x, y) = sum_a x[a] * conj(y[n-1-a]), conjugation being t -> t^q."""
    n = len(x)
    s = 0
    for a in range(n):
        s = field.add(s, field.mul(x[a], field.pow(y[n - 1 - a], q)))
    return s


def preserves_form(g: MatrixElement, q: int) -> bool:
    """Whether g* J g = J for the antidiagonal form (g* = conjugate transpose)."""
    field, rows = g.field, g.rows
    n = len(rows)
    for a in range(n):
        for b in range(n):
            s = 0
            for c in range(n):
                s = field.add(s, field.mul(field.pow(rows[c][a], q), rows[n - 1 - c][b]))
            if s != (1 if a + b == n - 1 else 0):
                return False
    return True


def su_generators(n: int, q: int, field: FiniteField | None = None) -> list:
    """Unitary transvections for SU(n, q) on GF(q^2).

    One transvection per (isotropic projective point v, scalar lambda with
    lambda^q = -lambda, lambda != 0); the matrix is I + lambda * v * (v^s)^T J,
    which preserves the antidiagonal Hermitian form and has determinant 1.
    """
    if n not in (3, 4):
        raise InvalidParameterError(f"SU degree {n} unsupported (need 3 or 4)")
    if field is None:
        field = _field_for(q, double=True)
    lambdas = [
        lam for lam in range(1, field.q) if field.pow(lam, q) == field.neg(lam)
    ]
    points = []
    for v in product(range(field.q), repeat=n):
        nz = next((x for x in v if x), None)
        if nz != 1:
            continue  # zero vector, or not the scaled projective representative
        if hermitian_product(field, q, v, v) == 0:
            points.append(v)
    gens = []
    for v in points:
        for lam in lambdas:
            rows = []
            for a in range(n):
                va = field.mul(lam, v[a])
                row = []
                for b in range(n):
                    x = field.mul(va, field.pow(v[n - 1 - b], q))
                    if a == b:
                        x = field.add(x, 1)
                    row.append(x)
                rows.append(tuple(row))
            g = MatrixElement(field, rows)
            assert preserves_form(g, q), "transvection failed the form check"
            assert g.det() == 1, "transvection determinant is not 1"
            gens.append(g)
    return gens


def sl_group(n: int, q: int, cap=DEFAULT_CAP, field: FiniteField | None = None) -> MatrixGroup:
    if field is None:
        field = _field_for(q)
    grp = MatrixGroup(sl_generators(n, field), field, n, name=f"SL({n},{q})", cap=cap)
    _check_order(grp, classical_order("SL", n, q))
    return grp


def su_group(n: int, q: int, cap=DEFAULT_CAP) -> MatrixGroup:
    field = _field_for(q, double=True)
    grp = MatrixGroup(su_generators(n, q, field), field, n, name=f"SU({n},{q})", cap=cap)
    _check_order(grp, classical_order("SU", n, q))
    return grp


def projectivize(parent: MatrixGroup, name=None) -> MatrixGroup:
    """Quotient by scalars: renormalized generators, projective multiplication."""
    if parent.projective:
        return parent
    gens = [
        MatrixElement(parent.field, mat_normalize(parent.field, g.rows), True)
        for g in parent.generators
    ]
    return MatrixGroup(gens, parent.field, parent.n, projective=True,
                       name=name or (f"P{parent.name}" if parent.name else None),
                       cap=parent.cap)


def psl_group(n: int, q: int, cap=DEFAULT_CAP, field: FiniteField | None = None) -> MatrixGroup:
    grp = projectivize(sl_group(n, q, cap=cap, field=field), name=f"PSL({n},{q})")
    _check_order(grp, classical_order("PSL", n, q))
    return grp


def psu_group(n: int, q: int, cap=DEFAULT_CAP) -> MatrixGroup:
    grp = projectivize(su_group(n, q, cap=cap), name=f"PSU({n},{q})")
    _check_order(grp, classical_order("PSU", n, q))
    return grp


def _check_order(grp: MatrixGroup, expected: int):
    got = grp.order()
    if got != expected:
        raise OrderMismatchError(
            f"{grp.name}: closure produced {got} elements, formula says {expected}"
        )
