"""Dense linear algebra over a small finite field F_q.

Elements are integer *symbols* in ``range(q)``. For prime q the symbol is the
residue itself and arithmetic is plain modular arithmetic; for prime powers
the caller supplies addition and multiplication tables (see
:meth:`bicycl.gf.FieldTower.base_field`).
"""

from __future__ import annotations

import numpy as np

from .errors import FieldDivisionByZero


class SmallField:
    """F_q acting on numpy arrays of symbols."""

    def __init__(self, p: int, e: int = 1, add_table=None, mul_table=None):
        self.p = p
        self.e = e
        self.q = p**e
        self.prime = e == 1
        if self.prime:
            s = np.arange(p, dtype=np.int64)
            add_table = (s[:, None] + s[None, :]) % p
            mul_table = (s[:, None] * s[None, :]) % p
        self.add_table = np.asarray(add_table, dtype=np.int64)
        self.mul_table = np.asarray(mul_table, dtype=np.int64)
        zero_rows = self.add_table == 0
        self.neg_table = np.argmax(zero_rows, axis=1)
        ones = self.mul_table == 1
        self.inv_table = np.where(ones.any(axis=1), np.argmax(ones, axis=1), -1)

    @classmethod
    def prime_field(cls, p: int) -> "SmallField":
        return cls(p)

    def __repr__(self):
        return f"SmallField(q={self.q})"

    def add(self, a, b):
        if self.prime:
            return (np.asarray(a) + np.asarray(b)) % self.p
        return self.add_table[a, b]

    def neg(self, a):
        if self.prime:
            return (-np.asarray(a)) % self.p
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.prime:
            return (np.asarray(a) * np.asarray(b)) % self.p
        return self.mul_table[a, b]

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise FieldDivisionByZero("inverse of zero")
        return self.inv_table[a]

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.prime:
            return (A @ B) % self.p
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for k in range(A.shape[1]):
            out = self.add_table[out, self.mul_table[A[:, k, None], B[None, k, :]]]
        return out

    def dot(self, a, b) -> int:
        return int(self.matmul(np.asarray(a)[None, :], np.asarray(b)[:, None])[0, 0])


def rref(F: SmallField, A):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    R = np.array(A, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = F.mul(R[r], F.inv(R[r, c]))
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit] = F.sub(R[hit], F.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: SmallField, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: SmallField, A):
    """Basis (as rows) of the right null space ``{x : A x = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(F, A)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = F.neg(R[r, f])
    return basis


def left_nullspace(F: SmallField, A):
    """Basis (as rows) of ``{c : c A = 0}``."""
    return nullspace(F, np.asarray(A).T)


def solve(F: SmallField, A, b):
    """One solution of ``A x = b``, or ``None`` if the system is inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    R, pivots = rref(F, np.hstack([A, b]))
    cols = A.shape[1]
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def inverse(F: SmallField, A):
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    R, pivots = rref(F, np.hstack([A, np.eye(n, dtype=np.int64)]))
    if pivots[:n] != list(range(n)):
        raise FieldDivisionByZero("matrix is singular")
    return R[:, n:]
