"""Encoding, membership, code parameters, the dual code and a brute-force
ideal oracle for tiny instances."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bipoly as bp
from . import zerosets as zs
from ._kernels import min_weight
from .basis import IdealBasis, build_basis
from .bipoly import CodeParams
from .errors import CapExceeded, NonzeroParityInput, OracleDisagreement, ParamMismatch
from .linalg import left_nullspace, rank
from .tensors import (
    CheckTensor,
    GeneratorTensor,
    build_check_tensor,
    build_generator_tensor,
    select_check_positions,
)
from .zerosets import EczProfile, OrbitSet, ZeroPoint

DEFAULT_DMIN_CAP = 1 << 24
ORACLE_CAP = 1 << 20


@dataclass
class CodeHandle:
    params: CodeParams
    profile: EczProfile
    check: CheckTensor
    gen: GeneratorTensor
    ecz: list[ZeroPoint]
    vc: list[ZeroPoint]
    v0: OrbitSet | None = None
    gamma: int | None = None
    beta: int | None = None
    notes: list[str] = field(default_factory=list)
    _basis: IdealBasis | None = field(default=None, repr=False)

    @property
    def d(self) -> int:
        return self.check.d

    @property
    def K(self) -> int:
        return self.params.area - self.check.d

    @property
    def field(self):
        return self.params.tower.base_field

    def basis(self, prune: bool = False) -> IdealBasis:
        if self._basis is None or (prune and not self._basis.pruned):
            self._basis = build_basis(self.profile, self.params, prune=prune)
        return self._basis


def build_code(params: CodeParams, ecz, strategy: str = "staircase",
               v0: OrbitSet | None = None, vc=None) -> CodeHandle:
    """Full pipeline from an ECZ set: profile, check tensor, Pi, generator tensor."""
    tw = params.tower
    ecz = [ZeroPoint(int(a), int(b)) for a, b in ecz]
    if v0 is not None:
        zs.check_in_orbit_set(v0, ecz)
    profile = zs.profile_from_ecz(tw, ecz, v0.z1 if v0 else None, v0.z2 if v0 else None)
    ct = build_check_tensor(profile, params)
    select_check_positions(ct, profile, params, strategy)
    gen = build_generator_tensor(ct, params)
    vc = list(vc) if vc is not None else zs.vc_from_ecz(tw, ecz)
    handle = CodeHandle(params, profile, ct, gen, ecz, vc, v0,
                        v0.gamma if v0 else None, v0.beta if v0 else None)
    if ct.strategy != strategy:
        handle.notes.append(f"check positions: {strategy} failed, used {ct.strategy}")
    return handle


def code_from_generators(params: CodeParams, generators, v0: OrbitSet,
                         strategy: str = "staircase", variety: str = "orbit") -> CodeHandle:
    """Code generated by ``generators``; its CZ set is taken inside V0
    (``variety="orbit"``) or inside the full root variety (``"full"``)."""
    tw = params.tower
    gens = [bp.reduce_omega(params, g) for g in generators]
    if variety == "orbit":
        vc, ecz = zs.cz_from_generators(params, gens, v0)
        return build_code(params, ecz, strategy, v0=v0, vc=vc)
    if variety != "full":
        raise ValueError(f"unknown variety {variety!r}")
    vc = [pt for pt in zs.full_variety(params)
          if all(bp.eval_at(tw, g, pt.a, pt.b) == 0 for g in gens)]
    ecz = zs.ecz_representatives(tw, vc)
    code = build_code(params, ecz, strategy, vc=zs.vc_from_ecz(tw, ecz))
    code.v0, code.gamma, code.beta = v0, v0.gamma, v0.beta
    return code


# -- encoding and membership -----------------------------------------------


def _as_grid(code: CodeHandle, arr) -> np.ndarray:
    arr = np.asarray(arr, dtype=np.int64)
    if arr.shape != code.params.shape:
        raise ParamMismatch(f"expected a {code.params.M}x{code.params.N} array, got {arr.shape}")
    q = code.params.tower.q
    if arr.size and (arr.min() < 0 or arr.max() >= q):
        raise ParamMismatch(f"symbols must lie in 0..{q - 1}")
    return arr


def encode(code: CodeHandle, message) -> np.ndarray:
    """Systematic codeword (F_q symbols) carrying ``message`` off the check positions."""
    m = _as_grid(code, message)
    pi = code.check.pi
    if any(m[k, l] for k, l in pi):
        raise NonzeroParityInput("message must be zero on the check positions")
    F = code.field
    c = m.copy()
    if code.d:
        acc = F.matmul(m.reshape(1, -1), code.gen.coef)[0]
        for (k, l), v in zip(pi, F.neg(acc)):
            c[k, l] = v
    return c


def syndrome(code: CodeHandle, c) -> np.ndarray:
    c = _as_grid(code, c)
    if code.d == 0:
        return np.zeros(0, dtype=np.int64)
    return code.field.matmul(c.reshape(1, -1), code.check.rows)[0]


def vanishes(code: CodeHandle, c) -> bool:
    """Vanishing test: c(a, b) = 0 at every ECZ representative."""
    c = _as_grid(code, c)
    tw = code.params.tower
    f = tw.from_symbol(c)
    return all(bp.eval_at(tw, f, pt.a, pt.b) == 0 for pt in code.ecz)


def is_codeword(code: CodeHandle, c, verify: bool = False) -> bool:
    ok = not np.any(syndrome(code, c))
    if verify and vanishes(code, c) != ok:
        raise OracleDisagreement("syndrome and vanishing tests disagree")
    return ok


def shift_x(code: CodeHandle, c) -> np.ndarray:
    tw = code.params.tower
    return tw.to_symbol(bp.shift_x(code.params, tw.from_symbol(_as_grid(code, c))))


def shift_y(code: CodeHandle, c) -> np.ndarray:
    tw = code.params.tower
    return tw.to_symbol(bp.shift_y(code.params, tw.from_symbol(_as_grid(code, c))))


# -- parameters -------------------------------------------------------------


@dataclass
class CodeParameters:
    n: int
    k: int
    d: int | None
    note: str = ""

    def __str__(self):
        return f"[{self.n}, {self.k}, {'not computed' if self.d is None else self.d}]"

    def as_list(self) -> list:
        return [self.n, self.k, self.d]


def code_basis(code: CodeHandle) -> np.ndarray:
    """F_q basis (rows, symbols) of the null space of the stacked h-vectors."""
    F = code.field
    if code.d == 0:
        return np.eye(code.params.area, dtype=np.int64)
    return left_nullspace(F, code.check.rows)


def digit_rows(code: CodeHandle, G) -> np.ndarray:
    """Expand an F_q generator matrix into F_p rows, ``e`` digits per symbol.

    Row ``w^r * g`` for each basis row g and r < e spans the same F_p-space
    as the F_q-span of the rows."""
    tw = code.params.tower
    F = code.field
    p, e = tw.p, tw.e
    G = np.asarray(G, dtype=np.int64)
    if e == 1:
        return G
    out = []
    for row in G:
        for r in range(e):
            sym = F.mul(p**r, row)  # symbol p^r is w^r
            out.append(((sym[:, None] // p ** np.arange(e)) % p).ravel())
    return np.asarray(out, dtype=np.int64).reshape(-1, G.shape[1] * e)


def minimum_distance(code: CodeHandle, G=None, cap: int = DEFAULT_DMIN_CAP,
                     backend: str | None = None) -> int | None:
    tw = code.params.tower
    if G is None:
        G = code_basis(code)
    if G.shape[0] == 0:
        return None
    # a zero h-vector means the unit array at that spot is a codeword
    if code.d == 0 or not np.all(code.check.rows.any(axis=1)):
        return 1
    if tw.q ** G.shape[0] > cap:
        raise CapExceeded(f"q^K = {tw.q}^{G.shape[0]} exceeds the enumeration cap {cap}")
    return min_weight(digit_rows(code, G), tw.p, tw.e, stop_at=1, backend=backend)


def parameters(code: CodeHandle, cap: int = DEFAULT_DMIN_CAP,
               backend: str | None = None) -> CodeParameters:
    F = code.field
    MN = code.params.area
    K = MN - rank(F, code.check.rows) if code.d else MN
    if K != code.K:
        raise OracleDisagreement(f"null-space dimension {K} != |Omega \\ Pi| = {code.K}")
    try:
        d = minimum_distance(code, cap=cap, backend=backend)
        note = ""
    except CapExceeded as exc:
        d, note = None, str(exc)
    return CodeParameters(MN, K, d, note)


# -- dual --------------------------------------------------------------------


def dual_code(code: CodeHandle, strategy: str = "staircase") -> CodeHandle:
    """C-perp through its CZ set: the inverted full variety minus inverted V_c."""
    params = code.params
    tw = params.tower
    dparams = params.inverse()
    tilde = {ZeroPoint(tw.inv(a), tw.inv(b)) for a, b in code.vc}
    dvc = [pt for pt in zs.full_variety(dparams) if pt not in tilde]
    decz = zs.ecz_representatives(tw, dvc)
    dual = build_code(dparams, decz, strategy, vc=dvc)
    if code.gamma is not None and code.beta is not None:
        dual.gamma, dual.beta = tw.inv(code.gamma), tw.inv(code.beta)
    return dual


def enumerate_code(code: CodeHandle, G=None, cap: int = ORACLE_CAP) -> np.ndarray:
    """Every codeword (rows of symbols) of a small code."""
    tw = code.params.tower
    F = code.field
    if G is None:
        G = code_basis(code)
    K = G.shape[0]
    if tw.q**K > cap:
        raise CapExceeded(f"q^K = {tw.q}^{K} exceeds {cap}")
    msgs = (np.arange(tw.q**K)[:, None] // tw.q ** np.arange(K)) % tw.q
    return F.matmul(msgs, G) if K else np.zeros((1, G.shape[1]), dtype=np.int64)


@dataclass
class DualityReport:
    dim_sum: int
    area: int
    checked: int
    violations: int

    @property
    def ok(self) -> bool:
        return self.dim_sum == self.area and self.violations == 0


def check_duality(code: CodeHandle, dual: CodeHandle, cap: int = ORACLE_CAP) -> DualityReport:
    """Inner products between the two codes.

    All codewords of the smaller code are enumerated and paired against a
    basis of the other; by linearity this covers every pair."""
    F = code.field
    Ga, Gb = code_basis(code), code_basis(dual)
    small, other = (Ga, Gb) if Ga.shape[0] <= Gb.shape[0] else (Gb, Ga)
    words = enumerate_code(code if small is Ga else dual, small, cap)
    prods = F.matmul(words, other.T) if other.shape[0] else np.zeros((len(words), 0))
    return DualityReport(Ga.shape[0] + Gb.shape[0], code.params.area,
                         len(words) * max(other.shape[0], 1), int(np.count_nonzero(prods)))


def reciprocal_product(code: CodeHandle, f, g) -> np.ndarray:
    """{f * g~} in the primal ring, g~ the reciprocal of a dual codeword g."""
    tw = code.params.tower
    F = tw.from_symbol(_as_grid(code, f))
    G = bp.reduce_omega(code.params, bp.reciprocal(tw.from_symbol(np.asarray(g))))
    return tw.to_symbol(bp.mul_omega(code.params, F, G))


# -- brute-force ideal oracle ------------------------------------------------


def brute_force_ideal(params: CodeParams, generators, cap: int = ORACLE_CAP) -> np.ndarray:
    """All arrays of the ideal generated by ``generators`` (sorted rows of symbols).

    The ideal is grown as an additive group: every F_q multiple of every
    monomial shift of a generator is added in turn, so no linear algebra is
    involved."""
    tw = params.tower
    q, p, MN = tw.q, tw.p, params.area
    if q**MN > cap:
        raise CapExceeded(f"q^(MN) = {q}^{MN} exceeds {cap}")
    w = tw.subfield_generator(1)
    scalars = [tw.pow(w, r) for r in range(tw.e)]
    seeds = []
    for g in generators:
        g = bp.reduce_omega(params, g)
        for a in range(params.M):
            for b in range(params.N):
                s = bp.shift_xy(params, g, a, b)
                for c in scalars:
                    seeds.append(tw.to_symbol(tw.vmul(c, s)).ravel())
    F = tw.base_field
    pw = q ** np.arange(MN, dtype=np.int64)
    words = np.zeros((1, MN), dtype=np.int64)
    seen = np.zeros(q**MN, dtype=bool)
    seen[0] = True
    for s in seeds:
        if seen[int(s @ pw)]:
            continue
        layers = [words]
        mult = s
        for _ in range(p - 1):
            layers.append(F.add(words, mult[None, :]))
            mult = F.add(mult, s)
        words = np.vstack(layers)
        seen[words @ pw] = True
    order = np.argsort(words @ pw, kind="stable")
    return words[order]


def syndrome_kernel(code: CodeHandle, cap: int = ORACLE_CAP) -> np.ndarray:
    """All arrays with zero syndrome, found by scanning the whole space."""
    tw = code.params.tower
    q, MN = tw.q, code.params.area
    if q**MN > cap:
        raise CapExceeded(f"q^(MN) = {q}^{MN} exceeds {cap}")
    allw = (np.arange(q**MN)[:, None] // q ** np.arange(MN)) % q
    if code.d == 0:
        return allw
    S = code.field.matmul(allw, code.check.rows)
    return allw[~S.any(axis=1)]
