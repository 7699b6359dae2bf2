"""Table-driven arithmetic in one ambient field F_{p^n}, n = e*L.

Every field the code constructions need (F_q with q = p^e, F_{q^m}, ...)
is realised as a Frobenius-fixed subfield of this single ambient field, so
no isomorphisms between separately built fields are ever needed.

Elements are plain ints in *vector form*: ``v = sum(c_i * p**i)`` where
``c_i`` is the coefficient of ``alpha**i`` and ``alpha`` is the class of
the indeterminate modulo the defining polynomial. Zero is ``0`` and the
prime-field constants ``0..p-1`` are their own vector forms.
"""

from __future__ import annotations

import math
import re
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    FieldDivisionByZero,
    FieldTooLarge,
    NoRootInField,
    NotInSpan,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
)
from .linalg import SmallField, inverse, rref

MAX_FIELD_SIZE = 1 << 24

# Named defining polynomials (ascending coefficients over Z_p).
PRESETS = {
    "F81-a": (3, [2, 1, 0, 0, 1]),  # x^4 + x + 2
    "F81-b": (3, [2, 0, 0, 2, 1]),  # x^4 + 2x^3 + 2
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for f in range(2, math.isqrt(n) + 1):
        if n % f == 0:
            return False
    return True


def _fp_mod(a: list, b: list, p: int) -> list:
    """Remainder of a modulo monic-or-not b over F_p (ascending lists)."""
    a = [c % p for c in a]
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = [c % p for c in poly]
    n = len(poly) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if poly[0] == 0:
        return False
    for k in range(1, n // 2 + 1):
        for idx in range(p**k):
            low = [(idx // p**i) % p for i in range(k)]
            if not _fp_mod(poly, low + [1], p):
                return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _fp_powmod(base: list, k: int, mod: list, p: int) -> list:
    result, b = [1], _fp_mod(base, mod, p)
    while k:
        if k & 1:
            result = _fp_mod(_fp_mulpoly(result, b, p), mod, p)
        b = _fp_mod(_fp_mulpoly(b, b, p), mod, p)
        k >>= 1
    return result


def _fp_mulpoly(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_primitive_poly(poly: Sequence[int], p: int) -> bool:
    poly = [c % p for c in poly]
    n = len(poly) - 1
    if not is_irreducible(poly, p):
        return False
    Q = p**n - 1
    if n == 1:
        # x - r with r a generator of F_p^*
        r = (-poly[0] * pow(poly[1], -1, p)) % p
        return all(pow(r, Q // f, p) != 1 for f in _prime_factors(Q)) if Q > 1 else True
    return all(_fp_powmod([0, 1], Q // f, poly, p) != [1] for f in _prime_factors(Q))


def first_primitive_poly(p: int, n: int) -> list[int]:
    """Monic primitive polynomial of degree n with the smallest base-p index
    of its lower coefficients."""
    for idx in range(1, p**n):
        poly = [(idx // p**i) % p for i in range(n)] + [1]
        if is_primitive_poly(poly, p):
            return poly
    raise NotPrimitive(f"no primitive polynomial of degree {n} over F_{p}")


def parse_poly_over_fp(text: str) -> list[int]:
    """``"x^4+2x^3+2"`` -> ``[2, 0, 0, 2, 1]``."""
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = re.fullmatch(r"(\d*)(x(?:\^(\d+))?)?", body)
        if not m or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad term {body!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        deg = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[deg] = coeffs.get(deg, 0) + (c if sign == "+" else -c)
    out = [0] * (max(coeffs) + 1)
    for deg, c in coeffs.items():
        out[deg] = c
    return out


def format_poly_over_fp(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if c == 0:
            continue
        mono = "" if deg == 0 else (var if deg == 1 else f"{var}^{deg}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


class FieldTower:
    """The ambient field F_{p^{eL}} with F_q = F_{p^e} as its base field.

    ``defining_poly`` is an ascending coefficient list over Z_p of degree
    e*L; it must be primitive, and ``alpha`` is its root.
    """

    def __init__(self, p: int, e: int, L: int, defining_poly: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1 or L < 1:
            raise ValueError("extension degrees must be positive")
        n = e * L
        poly = [int(c) % p for c in defining_poly]
        if len(poly) != n + 1 or poly[-1] != 1:
            raise ValueError(f"defining polynomial must be monic of degree {n}")
        if p**n > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"p^(eL) = {p}^{n} exceeds the table cap {MAX_FIELD_SIZE}")
        if not is_irreducible(poly, p):
            raise NotIrreducible(f"{format_poly_over_fp(poly)} is reducible over F_{p}")
        self.p, self.e, self.L, self.n = p, e, L, n
        self.q = p**e
        self.size = p**n
        self.order = self.size - 1
        self.defining_poly = tuple(poly)
        self._pw = p ** np.arange(n, dtype=np.int64)
        self._build_tables()

    @classmethod
    def from_preset(cls, name: str, e: int = 1) -> "FieldTower":
        p, poly = PRESETS[name]
        n = len(poly) - 1
        if n % e:
            raise ValueError(f"preset {name} has degree {n}, not a multiple of e={e}")
        return cls(p, e, n // e, poly)

    @classmethod
    def default(cls, p: int, e: int, L: int) -> "FieldTower":
        """Tower over the first primitive polynomial in base-p counting order."""
        return cls(p, e, L, first_primitive_poly(p, e * L))

    def __repr__(self):
        return (f"FieldTower(p={self.p}, e={self.e}, L={self.L}, "
                f"poly={format_poly_over_fp(self.defining_poly)!r})")

    # -- construction -------------------------------------------------

    def _times_alpha(self, D: np.ndarray) -> np.ndarray:
        """Multiply digit rows by alpha."""
        p = self.p
        out = np.zeros_like(D)
        out[:, 1:] = D[:, :-1]
        top = D[:, -1]
        red = (-np.asarray(self.defining_poly[:-1], dtype=np.int64)) % p
        return (out + top[:, None] * red[None, :]) % p

    def _build_tables(self):
        n, p, Q = self.n, self.p, self.order
        block = min(Q, 4096)
        D = np.zeros((block, n), dtype=np.int64)
        D[0, 0] = 1
        for k in range(1, block):
            D[k] = self._times_alpha(D[k - 1:k])[0]
        exp = np.empty(Q, dtype=np.int64)
        exp[:block] = D @ self._pw
        if block < Q:
            # rows of the multiply-by-alpha^block matrix
            Mb = np.zeros((n, n), dtype=np.int64)
            Mb[0] = self._times_alpha(D[block - 1:block])[0]
            for i in range(1, n):
                Mb[i] = self._times_alpha(Mb[i - 1:i])[0]
            start = block
            while start < Q:
                D = (D @ Mb) % p
                stop = min(start + block, Q)
                exp[start:stop] = D[: stop - start] @ self._pw
                start = stop
        if np.any(exp == 0):
            raise NotIrreducible("alpha is nilpotent")
        log = np.full(self.size, -1, dtype=np.int64)
        log[exp] = np.arange(Q, dtype=np.int64)
        if np.count_nonzero(log >= 0) != Q:
            raise NotPrimitive(
                f"{format_poly_over_fp(self.defining_poly)} is irreducible but not primitive")
        self.exp_table = exp
        self.log_table = log
        d0 = exp % p
        plus_one = exp - d0 + (d0 + 1) % p
        self.zech_table = log[plus_one]
        self._exp = exp.tolist()
        self._log = log.tolist()
        self._zech = self.zech_table.tolist()
        self.alpha = self._exp[1 % Q] if Q > 0 else 1
        self.minus_one = (p - 1)

    # -- scalar arithmetic --------------------------------------------

    def exp(self, k: int) -> int:
        return self._exp[k % self.order]

    def log(self, x: int) -> int:
        if x == 0:
            raise FieldDivisionByZero("log of zero")
        return self._log[x]

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._zech[(lb - la) % self.order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.order]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp[(self._log[a] + self.order // 2) % self.order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise FieldDivisionByZero("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self.order]

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionByZero("zero has no multiplicative order")
        return self.order // math.gcd(self._log[a], self.order)

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.n))

    def from_digits(self, digits: Sequence[int]) -> int:
        return sum((int(d) % self.p) * self.p**i for i, d in enumerate(digits))

    # -- Frobenius and subfields -------------------------------------

    def frobenius(self, a: int, k: int = 1) -> int:
        """``a ** (q ** k)``."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if a == 0:
            return 0
        return self._exp[(self._log[a] * pow(self.q, k, self.order)) % self.order]

    def orbit(self, a: int, k: int = 1) -> list[int]:
        """Conjugates of ``a`` under ``y -> y^(q^k)``, starting with ``a``."""
        out = [a]
        b = self.frobenius(a, k)
        while b != a:
            out.append(b)
            b = self.frobenius(b, k)
        return out

    def in_subfield(self, a: int, k: int = 1) -> bool:
        """Membership in F_{q^k}."""
        return self.frobenius(a, k) == a

    def subfield_generator(self, t: int) -> int:
        """A primitive element of F_{q^t} (t must divide L)."""
        if self.L % t:
            raise ValueError(f"F_q^{t} is not a subfield of F_q^{self.L}")
        return self._exp[self.order // (self.q**t - 1)]

    def minimal_polynomial(self, a: int, k: int = 1) -> list[int]:
        """Monic minimal polynomial of ``a`` over F_{q^k}, ascending."""
        if self.L % k:
            raise ValueError(f"F_q^{k} is not a subfield of the ambient field")
        poly = [1]
        for r in self.orbit(a, k):
            poly = poly_mul(self, poly, [self.neg(r), 1])
        return poly

    # -- F_q symbols ----------------------------------------------------

    @cached_property
    def _symbol_maps(self):
        w = self.subfield_generator(1)
        powers = [self.pow(w, r) for r in range(self.e)]
        from_sym = []
        for s in range(self.q):
            acc = 0
            for r in range(self.e):
                d = (s // self.p**r) % self.p
                if d:
                    acc = self.add(acc, self.mul(d, powers[r]))
            from_sym.append(acc)
        from_sym = np.asarray(from_sym, dtype=np.int64)
        to_sym = np.full(self.size, -1, dtype=np.int64)
        to_sym[from_sym] = np.arange(self.q, dtype=np.int64)
        return from_sym, to_sym

    def to_symbol(self, a):
        """Vector form -> F_q symbol (raises if not in F_q)."""
        sym = self._symbol_maps[1][np.asarray(a, dtype=np.int64)]
        if np.any(sym < 0):
            raise NotInSpan("element is not in the base field F_q")
        return sym if np.ndim(sym) else int(sym)

    def from_symbol(self, s):
        v = self._symbol_maps[0][np.asarray(s, dtype=np.int64)]
        return v if np.ndim(v) else int(v)

    @cached_property
    def base_field(self) -> SmallField:
        """F_q as a :class:`SmallField` over symbols."""
        if self.e == 1:
            return SmallField(self.p)
        s = np.arange(self.q)
        vs = self.from_symbol(s)
        add = self.to_symbol(self.vadd(vs[:, None], vs[None, :]))
        mul = self.to_symbol(self.vmul(vs[:, None], vs[None, :]))
        return SmallField(self.p, self.e, add, mul)

    @cached_property
    def prime_field(self) -> SmallField:
        return SmallField(self.p)

    # -- coordinates ----------------------------------------------------

    def expander(self, basis: Sequence[int]) -> "SubfieldExpander":
        return SubfieldExpander(self, basis)

    def coords(self, a: int, basis: Sequence[int]) -> tuple[int, ...]:
        """F_q coordinates (as symbols) of ``a`` over ``basis``."""
        return tuple(int(c) for c in self.expander(basis).expand(np.asarray([a]))[0])

    # -- vectorised arithmetic --------------------------------------------

    def vdigits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def vpack(self, D) -> np.ndarray:
        return (np.asarray(D, dtype=np.int64) % self.p) @ self._pw

    def vadd(self, a, b) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        return self.vpack(self.vdigits(a) + self.vdigits(b))

    def vneg(self, a) -> np.ndarray:
        if self.p == 2:
            return np.asarray(a, dtype=np.int64)
        return self.vpack(-self.vdigits(a))

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log_table[a]
        lb = self.log_table[b]
        out = self.exp_table[(la + lb) % self.order]
        return np.where((a == 0) | (b == 0), 0, out)

    def vsum(self, a, axis=None) -> np.ndarray:
        D = self.vdigits(a)
        if axis is None:
            return int(self.vpack(D.reshape(-1, self.n).sum(axis=0)))
        axis = axis % np.ndim(a)
        return self.vpack(D.sum(axis=axis))

    def vexp(self, k) -> np.ndarray:
        return self.exp_table[np.asarray(k, dtype=np.int64) % self.order]

    # -- text -------------------------------------------------------------

    def fmt(self, a: int) -> str:
        return "0" if a == 0 else f"a^{self._log[a]}"

    def parse_element(self, text) -> int:
        """``"0"``, ``"a^k"``/``"a"`` or an integer F_q symbol."""
        if isinstance(text, (int, np.integer)):
            return self.from_symbol(int(text))
        s = str(text).strip().replace("α", "a")
        m = re.fullmatch(r"a(?:\^(-?\d+))?", s)
        if m:
            return self.exp(int(m.group(1) or 1))
        if re.fullmatch(r"\d+", s):
            v = int(s)
            if v >= self.q:
                raise ValueError(f"symbol {v} out of range for F_{self.q}")
            return self.from_symbol(v)
        raise ValueError(f"cannot parse field element {text!r}")


class SubfieldExpander:
    """Coordinates over an F_q-linearly independent list of ambient elements.

    The unknowns are the F_p digits of each F_q coordinate, so the solve is a
    plain F_p linear system on the vector form.
    """

    def __init__(self, tower: FieldTower, basis: Sequence[int]):
        self.tower = tower
        self.basis = [int(b) for b in basis]
        t, e, p = len(self.basis), tower.e, tower.p
        w = tower.subfield_generator(1)
        cols = []
        for b in self.basis:
            for r in range(e):
                cols.append(tower.digits(tower.mul(tower.pow(w, r), b)))
        A = np.asarray(cols, dtype=np.int64).T  # n x (t*e)
        Fp = tower.prime_field
        _, rows = rref(Fp, A.T)
        if len(rows) != t * e:
            raise NotInSpan("basis elements are not F_q-linearly independent")
        self._A = A
        self._rows = rows
        self._inv = inverse(Fp, A[rows, :])
        self._t = t

    def expand(self, values) -> np.ndarray:
        """Array of ambient elements -> array (..., t) of F_q symbols."""
        tw = self.tower
        vals = np.asarray(values, dtype=np.int64)
        D = tw.vdigits(vals)
        u = (D[..., self._rows] @ self._inv.T) % tw.p
        if np.any((u @ self._A.T) % tw.p != D):
            raise NotInSpan("element is not in the F_q-span of the basis")
        u = u.reshape(vals.shape + (self._t, tw.e))
        return u @ (tw.p ** np.arange(tw.e, dtype=np.int64))


# -- univariate polynomials with ambient coefficients (ascending lists) ---


def poly_trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(tw: FieldTower, f, g) -> list[int]:
    n = max(len(f), len(g))
    out = [tw.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
    return poly_trim(out)


def poly_scale(tw: FieldTower, c: int, f) -> list[int]:
    return poly_trim([tw.mul(c, a) for a in f])


def poly_mul(tw: FieldTower, f, g) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = tw.add(out[i + j], tw.mul(a, b))
    return poly_trim(out)


def poly_divmod(tw: FieldTower, f, g) -> tuple[list[int], list[int]]:
    g = poly_trim(g)
    if not g:
        raise FieldDivisionByZero("division by the zero polynomial")
    r = poly_trim(f)
    dg = len(g) - 1
    inv_lead = tw.inv(g[-1])
    quo = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = tw.mul(r[-1], inv_lead)
        shift = len(r) - 1 - dg
        quo[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = tw.sub(r[shift + i], tw.mul(c, b))
        r = poly_trim(r)
    return poly_trim(quo), r


def poly_eval(tw: FieldTower, f, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = tw.add(tw.mul(acc, x), c)
    return acc


def format_uni(tw: FieldTower, f, var: str = "y") -> str:
    """Ascending ambient-coefficient polynomial as text, F_q symbols when possible."""
    terms = []
    for deg in range(len(f) - 1, -1, -1):
        c = f[deg]
        if c == 0:
            continue
        mono = "" if deg == 0 else (var if deg == 1 else f"{var}^{deg}")
        if tw.in_subfield(c, 1):
            cs = str(tw.to_symbol(c))
            coef = "" if (cs == "1" and mono) else cs
        else:
            coef = tw.fmt(c) + ("*" if mono else "")
        terms.append(coef + mono)
    return " + ".join(terms) if terms else "0"


# -- splitting field and roots ------------------------------------------


def splitting_degree(q: int, M: int, r1: int, N: int, r2: int, max_degree: int = 64) -> int:
    """Smallest L such that x^M - l1 and y^N - l2 split in F_{q^L}.

    ``r1``/``r2`` are discrete logs of l1/l2 in the cyclic group F_q^*.
    Divisibility is tested arithmetically; no field is built.
    """
    for L in range(1, max_degree + 1):
        Q = q**L - 1
        scale = Q // (q - 1) if q > 1 else 0
        if Q % M or Q % N:
            continue
        if (r1 * scale) % math.gcd(M, Q) or (r2 * scale) % math.gcd(N, Q):
            continue
        return L
    raise NoRootInField(f"no splitting degree <= {max_degree}")


def primitive_root_of(tw: FieldTower, lam: int, M: int) -> int:
    """Root of x^M = lam with multiplicative order M * ord(lam), smallest exponent."""
    if lam == 0:
        raise NoRootInField("lambda must be nonzero")
    Q = tw.order
    target = M * tw.mult_order(lam)
    dl = tw.log(lam)
    g = math.gcd(M, Q)
    if dl % g:
        raise NoRootInField(f"x^{M} - {tw.fmt(lam)} has no root in the ambient field")
    step = Q // g
    k0 = ((dl // g) * pow(M // g, -1, step)) % step if step > 1 else 0
    for k in range(k0, Q, step):
        if Q // math.gcd(k, Q) == target:
            return tw.exp(k)
    raise NoRootInField(f"no root of x^{M} - {tw.fmt(lam)} has order {target}")
