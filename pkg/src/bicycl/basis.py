"""Ideal basis of a code from its ECZ profile.

``lift`` turns a univariate polynomial with coefficients in F_q(xi) into a
bivariate F_q-polynomial of x-degree < m that agrees with it at x = xi.
``build_basis`` chains those lifts into the generators g_1 .. g_{s+1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bipoly as bp
from .bipoly import CodeParams
from .errors import NotInSpan, VerificationFailed
from .gf import FieldTower, poly_divmod, poly_eval, poly_mul, poly_scale
from .linalg import rank, rref
from .zerosets import EczProfile, ZeroPoint, point_text


def lift(tw: FieldTower, poly, xi: int, m: int) -> np.ndarray:
    """Coefficient array ``c[j, k]`` (F_q, vector form) with
    ``sum_j c[j, k] xi^j = poly[k]``."""
    if not poly:
        return np.zeros((m, 1), dtype=np.int64)
    basis = [tw.pow(xi, j) for j in range(m)]
    try:
        sym = tw.expander(basis).expand(np.asarray(poly, dtype=np.int64))
    except NotInSpan as exc:
        raise NotInSpan(
            f"coefficients are not in F_q({tw.fmt(xi)}); internal consistency failure") from exc
    return tw.from_symbol(sym).T.copy()


@dataclass
class IdealBasis:
    polys: list[np.ndarray]
    labels: list[str]
    chains: dict[int, list[np.ndarray]] = field(default_factory=dict)
    lifts: list[np.ndarray] = field(default_factory=list)
    pruned: list[str] = field(default_factory=list)


def build_basis(profile: EczProfile, params: CodeParams, prune: bool = False) -> IdealBasis:
    tw = params.tower
    comps = profile.components
    s = len(comps)
    gx = [bp.from_uni_x(params, c.g_xi) for c in comps]
    lifts = [lift(tw, c.G, c.xi, c.m) for c in comps]
    polys, labels, chains = [], [], {}
    for i in range(s):
        f = bp.reduce_omega(params, lifts[i])
        chain = [f]
        prod = list(comps[i].g_xi)  # prod_{j=i}^{k-1} g_xi_j(x), univariate
        for k in range(i + 1, s):
            ck = comps[k]
            R = poly_divmod(tw, bp.eval_x(tw, f, ck.xi), ck.G)[1]
            scal = poly_eval(tw, prod, ck.xi)
            target = poly_scale(tw, tw.inv(scal), R)
            r = bp.reduce_omega(params, lift(tw, target, ck.xi, ck.m))
            f = bp.sub(params, f, bp.mul_omega(params, r, bp.from_uni_x(params, prod)))
            chain.append(f)
            prod = poly_mul(tw, prod, ck.g_xi)
        chains[i + 1] = chain
        g = f
        for j in range(i):
            g = bp.mul_omega(params, g, gx[j])
        polys.append(g)
        labels.append(f"g_{i + 1}")
    last = [1]
    for c in comps:
        last = poly_mul(tw, last, c.g_xi)
    polys.append(bp.from_uni_x(params, last))
    labels.append(f"g_{s + 1}")
    keep = [idx for idx, g in enumerate(polys) if np.any(g)]
    basis = IdealBasis([polys[i] for i in keep], [labels[i] for i in keep], chains, lifts)
    if prune:
        prune_basis(params, basis)
    return basis


def shift_matrix(params: CodeParams, polys) -> np.ndarray:
    """Rows = F_q symbols of every monomial multiple x^a y^b g."""
    tw = params.tower
    rows = []
    for g in polys:
        for a in range(params.M):
            for b in range(params.N):
                rows.append(tw.to_symbol(bp.shift_xy(params, g, a, b)).ravel())
    if not rows:
        return np.zeros((0, params.area), dtype=np.int64)
    return np.asarray(rows, dtype=np.int64)


def ideal_dimension(params: CodeParams, polys) -> int:
    """F_q-dimension of the ideal generated by ``polys`` in the quotient ring."""
    return rank(params.tower.base_field, shift_matrix(params, polys))


def ideal_span(params: CodeParams, polys) -> np.ndarray:
    """Row-reduced F_q basis (symbols, flattened row-major) of the ideal."""
    A = shift_matrix(params, polys)
    if A.shape[0] == 0:
        return A
    R, piv = rref(params.tower.base_field, A)
    return R[: len(piv)]


def prune_basis(params: CodeParams, basis: IdealBasis) -> None:
    """Drop members already inside the ideal of the remaining ones."""
    full = ideal_dimension(params, basis.polys)
    idx = len(basis.polys) - 1
    while idx >= 0 and len(basis.polys) > 1:
        rest = basis.polys[:idx] + basis.polys[idx + 1:]
        if ideal_dimension(params, rest) == full:
            basis.pruned.append(basis.labels[idx])
            del basis.polys[idx]
            del basis.labels[idx]
        idx -= 1


@dataclass
class BasisReport:
    dimension: int
    expected: int
    extra_zeros: list[tuple[str, ZeroPoint]]

    @property
    def ok(self) -> bool:
        return self.dimension == self.expected


def verify_basis(params: CodeParams, polys, vc, reps, ecz, labels=None) -> BasisReport:
    """Vanishing on every CZ point and ideal dimension MN - |V_c|.

    Members that also vanish at a representative outside the ECZ set are
    listed in ``extra_zeros`` (informational only)."""
    tw = params.tower
    labels = labels or [f"g_{i + 1}" for i in range(len(polys))]
    for lab, g in zip(labels, polys):
        for pt in vc:
            if bp.eval_at(tw, g, pt.a, pt.b) != 0:
                raise VerificationFailed(f"{lab} does not vanish at {point_text(tw, pt)}")
    dim = ideal_dimension(params, polys)
    expected = params.area - len(vc)
    if dim != expected:
        raise VerificationFailed(
            f"ideal dimension {dim} != MN - |V_c| = {expected}")
    eczs = set(ecz)
    extra = [(lab, pt) for lab, g in zip(labels, polys) for pt in reps
             if pt not in eczs and bp.eval_at(tw, g, pt.a, pt.b) == 0]
    return BasisReport(dim, expected, extra)
