"""Exact arithmetic for the finite fields GF(p^k).

Elements are integer codes in ``[0, q)``.  The base-p digits of a code are the
coefficients of a polynomial over GF(p), reduced modulo a fixed monic
irreducible modulus of degree k.  Multiplication runs through discrete exp/log
tables built from a generator of the multiplicative group; addition is
digitwise mod p.  Small fields additionally carry dense q-by-q tables so both
scalar and vectorized matrix arithmetic can index straight into them.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError
from .numtheory import is_prime

MAX_FIELD_SIZE = 1 << 16

# Dense q*q add/mul tables are built only below this size.  Every field that
# can actually back an enumerable matrix group is far smaller; larger fields
# still get correct (slower) scalar arithmetic.
TABLE_LIMIT = 512


def _digits(code: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of a by a monic modulus, little-endian coefficients."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm] if len(a) >= dm else a + [0] * (dm - len(a))


def _poly_is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            div = _digits(code, p, d) + [1]
            if not any(_poly_rem(list(poly), div, p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for m in range(p**k):
        cand = tuple(_digits(m, p, k)) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FiniteField:
    """GF(p^k) on integer codes, with table-backed operations."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise InvalidParameterError(f"characteristic {p} is not prime")
        if k < 1:
            raise InvalidParameterError(f"extension degree {k} must be >= 1")
        q = p**k
        if q > MAX_FIELD_SIZE:
            raise InvalidParameterError(
                f"field size {p}^{k} = {q} exceeds the supported maximum {MAX_FIELD_SIZE}"
            )
        if modulus is None:
            modulus = _smallest_irreducible(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise InvalidParameterError(
                    f"modulus must be monic of degree {k}, got {modulus}"
                )
            if not _poly_is_irreducible(modulus, p):
                raise InvalidParameterError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._p_pows = [p**i for i in range(k)]
        self._build_exp_log()
        self.add_rows: list[list[int]] | None = None
        self.mul_rows: list[list[int]] | None = None
        self._np_tables: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None
        if q <= TABLE_LIMIT:
            self._build_dense_tables()

    # -- construction ------------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        pa = _digits(a, self.p, self.k)
        pb = _digits(b, self.p, self.k)
        rem = _poly_rem(_poly_mul(pa, pb, self.p), list(self.modulus), self.p)
        return sum(c * w for c, w in zip(rem, self._p_pows))

    def _build_exp_log(self):
        q = self.q
        if q == 2:
            self.generator = 1
            self._exp = [1]
            self._log = [0, 0]
            return
        for g in range(2, q):
            exp = [1]
            cur = 1
            ok = True
            for _ in range(q - 2):
                cur = self._mul_slow(cur, g)
                if cur == 1:
                    ok = False
                    break
                exp.append(cur)
            if ok:
                assert self._mul_slow(cur, g) == 1
                self.generator = g
                self._exp = exp
                log = [0] * q
                for i, c in enumerate(exp):
                    log[c] = i
                self._log = log
                return
        raise AssertionError("unreachable: GF(q)* is cyclic")

    def _build_dense_tables(self):
        q, p, k = self.q, self.p, self.k
        codes = np.arange(q)
        if k == 1:
            add = (codes[:, None] + codes[None, :]) % p
        else:
            add = np.zeros((q, q), dtype=np.int64)
            scale = 1
            for i in range(k):
                di = (codes // scale) % p
                add += ((di[:, None] + di[None, :]) % p) * scale
                scale *= p
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.add_rows = add.tolist()
        self.mul_rows = mul.tolist()
        inv = np.zeros(q, dtype=np.uint16)
        for c in range(1, q):
            inv[c] = self.inv(c)
        self._np_tables = (
            add.astype(np.uint16),
            mul.astype(np.uint16),
            inv,
        )

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_rows is not None:
            return self.add_rows[a][b]
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        for w in self._p_pows:
            out += ((a // w + b // w) % p) * w
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        for w in self._p_pows:
            out += ((-(a // w)) % p) * w
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mul_rows is not None:
            return self.mul_rows[a][b]
        if a == 0 or b == 0:
            return 0
        e = self._log[a] + self._log[b]
        qm = self.q - 1
        if e >= qm:
            e -= qm
        return self._exp[e]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        qm = self.q - 1
        return self._exp[(qm - self._log[a]) % qm]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        """The field automorphism x -> x^p."""
        return self.pow(a, self.p)

    def np_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray] | None:
        """(add, mul, inv) uint16 arrays for vectorized indexing, if built."""
        return self._np_tables

    # -- misc ----------------------------------------------------------------

    def element_codes(self) -> range:
        return range(self.q)

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.q})"


def field_make(p: int, k: int) -> FiniteField:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""
    return FiniteField(p, k)
