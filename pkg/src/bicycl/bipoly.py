"""Bivariate polynomials and the quotient ring F[x,y]/<x^M - l1, y^N - l2>.

A polynomial is a 2-D numpy array of vector-form ambient elements, entry
``[i, j]`` being the coefficient of ``x^i y^j``. Reduced ring elements are
exactly ``M x N``; unreduced polynomials may have any shape.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import InvalidRoot, ParamMismatch
from .gf import (  # noqa: F401  (univariate helpers live with the field)
    FieldTower,
    format_uni,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_mul,
    poly_scale,
    poly_trim,
)


@dataclass(frozen=True)
class CodeParams:
    tower: FieldTower
    M: int
    N: int
    lambda1: int
    lambda2: int

    def __post_init__(self):
        tw = self.tower
        if self.M < 1 or self.N < 1:
            raise ValueError("M and N must be positive")
        if math.gcd(self.M, tw.p) != 1 or math.gcd(self.N, tw.p) != 1:
            raise ValueError(f"M and N must be coprime to the characteristic {tw.p}")
        for lam in (self.lambda1, self.lambda2):
            if lam == 0 or not tw.in_subfield(lam, 1):
                raise InvalidRoot(f"lambda {tw.fmt(lam)} must be a nonzero element of F_q")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.M, self.N)

    @property
    def area(self) -> int:
        return self.M * self.N

    def inverse(self) -> "CodeParams":
        """Parameters of the (l1^-1, l2^-1) ring hosting the dual code."""
        tw = self.tower
        return CodeParams(tw, self.M, self.N, tw.inv(self.lambda1), tw.inv(self.lambda2))

    def describe(self) -> str:
        tw = self.tower
        return (f"M={self.M} N={self.N} lambda1={tw.to_symbol(self.lambda1)} "
                f"lambda2={tw.to_symbol(self.lambda2)} over F_{tw.q}")


def _check(params: CodeParams, *polys):
    for f in polys:
        if np.shape(f) != params.shape:
            raise ParamMismatch(f"expected a {params.M}x{params.N} grid, got {np.shape(f)}")


def zero(params: CodeParams) -> np.ndarray:
    return np.zeros(params.shape, dtype=np.int64)


def monomial(params: CodeParams, i: int, j: int, c: int = 1) -> np.ndarray:
    f = np.zeros((i + 1, j + 1), dtype=np.int64)
    f[i, j] = c
    return reduce_omega(params, f)


def reduce_omega(params: CodeParams, f) -> np.ndarray:
    """Fold an arbitrary-degree polynomial into the M x N grid."""
    tw = params.tower
    f = np.atleast_2d(np.asarray(f, dtype=np.int64))
    M, N = params.M, params.N
    r, c = f.shape
    rows = -(-r // M) * M
    cols = -(-c // N) * N
    g = np.zeros((rows, cols), dtype=np.int64)
    g[:r, :c] = f
    # block (b, k) is multiplied by l1^b * l2^k
    D = tw.vdigits(g).reshape(rows // M, M, cols // N, N, tw.n)
    bx = np.arange(rows // M)
    by = np.arange(cols // N)
    fac = tw.vmul(tw.vexp(bx * tw.log(params.lambda1))[:, None],
                  tw.vexp(by * tw.log(params.lambda2))[None, :])
    out = np.zeros((M, N, tw.n), dtype=np.int64)
    for b in bx:
        for k in by:
            block = tw.vpack(D[b, :, k, :])
            if block.any():
                out += tw.vdigits(tw.vmul(fac[b, k], block))
    return tw.vpack(out)


def add(params: CodeParams, f, g) -> np.ndarray:
    _check(params, f, g)
    return params.tower.vadd(f, g)


def sub(params: CodeParams, f, g) -> np.ndarray:
    _check(params, f, g)
    return params.tower.vsub(f, g)


def scale(params: CodeParams, c: int, f) -> np.ndarray:
    return params.tower.vmul(c, f)


def shift_xy(params: CodeParams, f, i: int, j: int) -> np.ndarray:
    """``{x^i y^j f}`` in the quotient ring, for any integers i, j >= 0."""
    _check(params, f)
    tw = params.tower
    M, N = params.M, params.N
    bi, i = divmod(i, M)
    bj, j = divmod(j, N)
    l1, l2 = params.lambda1, params.lambda2
    g = np.roll(np.asarray(f, dtype=np.int64), (i, j), axis=(0, 1))
    fac = np.ones((M, N), dtype=np.int64)
    fac[:i, :] = tw.vmul(fac[:i, :], l1)
    fac[:, :j] = tw.vmul(fac[:, :j], l2)
    if bi or bj:
        fac = tw.vmul(fac, tw.mul(tw.pow(l1, bi), tw.pow(l2, bj)))
    return tw.vmul(fac, g)


def shift_x(params: CodeParams, f) -> np.ndarray:
    """Column l1-constacyclic shift: top row becomes l1 * (old last row)."""
    return shift_xy(params, f, 1, 0)


def shift_y(params: CodeParams, f) -> np.ndarray:
    return shift_xy(params, f, 0, 1)


def mul_omega(params: CodeParams, f, g) -> np.ndarray:
    _check(params, f, g)
    tw = params.tower
    f = np.asarray(f, dtype=np.int64)
    if np.count_nonzero(f) > np.count_nonzero(g):
        f, g = np.asarray(g, dtype=np.int64), f
    acc = np.zeros(params.shape + (tw.n,), dtype=np.int64)
    for i, j in zip(*np.nonzero(f)):
        acc += tw.vdigits(tw.vmul(f[i, j], shift_xy(params, g, int(i), int(j))))
    return tw.vpack(acc)


def eval_at(tw: FieldTower, f, a: int, b: int) -> int:
    """Exact evaluation of a (reduced or not) bivariate polynomial at (a, b)."""
    f = np.atleast_2d(np.asarray(f, dtype=np.int64))
    ap = np.asarray([tw.pow(a, i) for i in range(f.shape[0])], dtype=np.int64)
    bp = np.asarray([tw.pow(b, j) for j in range(f.shape[1])], dtype=np.int64)
    terms = tw.vmul(f, tw.vmul(ap[:, None], bp[None, :]))
    return tw.vsum(terms)


def eval_x(tw: FieldTower, f, a: int) -> list[int]:
    """Substitute x = a; returns the univariate polynomial in y (ascending)."""
    f = np.atleast_2d(np.asarray(f, dtype=np.int64))
    ap = np.asarray([tw.pow(a, i) for i in range(f.shape[0])], dtype=np.int64)
    return poly_trim(tw.vsum(tw.vmul(f, ap[:, None]), axis=0).tolist())


def reciprocal(f) -> np.ndarray:
    """``x^(M-1) y^(N-1) f(1/x, 1/y)``: both axes reversed."""
    return np.asarray(f)[::-1, ::-1].copy()


def from_uni_x(params: CodeParams, poly) -> np.ndarray:
    return reduce_omega(params, np.asarray(poly if len(poly) else [0], dtype=np.int64)[:, None])


def from_uni_y(params: CodeParams, poly) -> np.ndarray:
    return reduce_omega(params, np.asarray(poly if len(poly) else [0], dtype=np.int64)[None, :])


# -- text forms ----------------------------------------------------------

_TERM = re.compile(
    r"(?P<c>\(?(?:\d+|a(?:\^\d+)?)\)?\*?)?"
    r"(?P<x>x(?:\^(?P<xe>\d+))?)?"
    r"(?P<y>y(?:\^(?P<ye>\d+))?)?"
)


def parse_bipoly(tw: FieldTower, text: str) -> np.ndarray:
    """Parse ``"2x^3y + x + 1"``; integers are prime-field constants,
    ``a^k`` denotes alpha^k. Returns an unreduced coefficient array."""
    s = re.sub(r"\s+", "", text).replace("α", "a").replace("·", "*")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sg + body for sg, body in pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    terms = []
    for sign, body in pieces:
        m = _TERM.fullmatch(body)
        if not m or not body:
            raise ValueError(f"bad term {body!r} in {text!r}")
        ctext = (m.group("c") or "").strip("()*")
        if not ctext:
            c = 1
        elif ctext.isdigit():
            c = int(ctext) % tw.p
        else:
            c = tw.parse_element(ctext)
        if sign == "-":
            c = tw.neg(c)
        i = 0 if not m.group("x") else int(m.group("xe") or 1)
        j = 0 if not m.group("y") else int(m.group("ye") or 1)
        terms.append((i, j, c))
    shape = (max(t[0] for t in terms) + 1, max(t[1] for t in terms) + 1)
    f = np.zeros(shape, dtype=np.int64)
    for i, j, c in terms:
        f[i, j] = tw.add(int(f[i, j]), c)
    return f


def _coef_text(tw: FieldTower, c: int, has_mono: bool) -> str:
    if c < tw.p:
        return "" if (c == 1 and has_mono) else str(c)
    return tw.fmt(c) + ("*" if has_mono else "")


def format_bipoly(tw: FieldTower, f) -> str:
    f = np.atleast_2d(np.asarray(f))
    terms = []
    for i in range(f.shape[0] - 1, -1, -1):
        for j in range(f.shape[1] - 1, -1, -1):
            c = int(f[i, j])
            if c == 0:
                continue
            mono = ""
            if i:
                mono += "x" if i == 1 else f"x^{i}"
            if j:
                mono += "y" if j == 1 else f"y^{j}"
            terms.append(_coef_text(tw, c, bool(mono)) + mono)
    return " + ".join(terms) if terms else "0"


def parse_grid(text: str, M: int | None = None, N: int | None = None) -> np.ndarray:
    """M lines of N integer symbols (whitespace separated, or packed digits)."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.replace(",", " ").split()
        if len(toks) == 1 and N is not None and N > 1 and len(toks[0]) == N:
            toks = list(toks[0])
        rows.append([int(t) for t in toks])
    if not rows or len({len(r) for r in rows}) != 1:
        raise ValueError("grid rows must be non-empty and of equal length")
    grid = np.asarray(rows, dtype=np.int64)
    if (M is not None and grid.shape[0] != M) or (N is not None and grid.shape[1] != N):
        raise ParamMismatch(f"expected a {M}x{N} grid, got {grid.shape[0]}x{grid.shape[1]}")
    return grid


def format_grid(grid) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in np.asarray(grid))
