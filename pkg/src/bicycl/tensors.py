"""Check tensor H = [h_{k,l}], check positions, and the generator tensor."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bipoly import CodeParams
from .errors import RankDeficient
from .linalg import inverse, rank
from .zerosets import EczProfile

STRATEGIES = ("staircase", "greedy")


@dataclass(frozen=True)
class Block:
    offset: int
    width: int
    xi: int
    eta: int
    component: int


@dataclass
class CheckTensor:
    d: int
    H: np.ndarray  # (M, N, d) F_q symbols
    blocks: list[Block]
    bases: list[list[int]]
    pi: list[tuple[int, int]] | None = None
    strategy: str | None = None

    @property
    def rows(self) -> np.ndarray:
        """The MN x d matrix of h-vectors, row-major over (k, l)."""
        M, N, d = self.H.shape
        return self.H.reshape(M * N, d)

    def h(self, k: int, l: int) -> np.ndarray:
        return self.H[k, l]


def build_check_tensor(profile: EczProfile, params: CodeParams) -> CheckTensor:
    tw = params.tower
    M, N = params.M, params.N
    kk, ll = np.meshgrid(np.arange(M), np.arange(N), indexing="ij")
    parts, blocks, bases = [], [], []
    offset = 0
    for ci, comp in enumerate(profile.components):
        for eta, nij in zip(comp.etas, comp.eta_degrees):
            width = comp.m * nij
            gen = tw.subfield_generator(width)
            basis = [tw.pow(gen, r) for r in range(width)]
            vals = tw.vexp(kk * tw.log(comp.xi) + ll * tw.log(eta))
            parts.append(tw.expander(basis).expand(vals))
            blocks.append(Block(offset, width, comp.xi, eta, ci))
            bases.append(basis)
            offset += width
    if parts:
        H = np.concatenate(parts, axis=2)
    else:
        H = np.zeros((M, N, 0), dtype=np.int64)
    return CheckTensor(offset, H, blocks, bases)


def staircase_positions(profile: EczProfile, params: CodeParams) -> list[tuple[int, int]] | None:
    pi, row = [], 0
    for comp in profile.components:
        if row + comp.m > params.M or comp.n > params.N:
            return None
        pi.extend((k, l) for k in range(row, row + comp.m) for l in range(comp.n))
        row += comp.m
    return pi


def greedy_positions(ct: CheckTensor, F) -> list[tuple[int, int]]:
    """Row-major accumulation of independent h-vectors."""
    M, N, d = ct.H.shape
    basis: list[np.ndarray] = []
    pivots: list[int] = []
    pi = []
    for k in range(M):
        for l in range(N):
            if len(pi) == d:
                return pi
            v = ct.H[k, l].copy()
            for row, pc in zip(basis, pivots):
                if v[pc]:
                    v = F.sub(v, F.mul(v[pc], row))
            nz = np.nonzero(v)[0]
            if nz.size == 0:
                continue
            pc = int(nz[0])
            v = F.mul(v, F.inv(v[pc]))
            basis.append(v)
            pivots.append(pc)
            pi.append((k, l))
    return pi


def select_check_positions(ct: CheckTensor, profile: EczProfile, params: CodeParams,
                           strategy: str = "staircase") -> list[tuple[int, int]]:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown check-position strategy {strategy!r}")
    F = params.tower.base_field
    pi = None
    used = strategy
    if strategy == "staircase":
        pi = staircase_positions(profile, params)
        if pi is not None and rank(F, np.asarray([ct.H[k, l] for k, l in pi]).reshape(len(pi), ct.d)) != ct.d:
            pi = None
        if pi is None:
            used = "greedy"
    if pi is None:
        pi = greedy_positions(ct, F)
    if len(pi) != ct.d:
        raise RankDeficient(f"only {len(pi)} independent h-vectors, expected d = {ct.d}")
    ct.pi = pi
    ct.strategy = used
    return pi


@dataclass
class GeneratorTensor:
    """g_{i,j} = x^i y^j - h_{i,j}(x, y), h_{i,j} supported on the check positions."""

    shape: tuple[int, int]
    pi: list[tuple[int, int]]
    coef: np.ndarray  # (MN, d): h_{i,j} coefficient of each check position
    field: object

    def h_poly(self, i: int, j: int) -> np.ndarray:
        M, N = self.shape
        out = np.zeros((M, N), dtype=np.int64)
        row = self.coef[i * N + j]
        for (k, l), c in zip(self.pi, row):
            out[k, l] = c
        return out

    def g_poly(self, i: int, j: int) -> np.ndarray:
        F = self.field
        mono = np.zeros(self.shape, dtype=np.int64)
        mono[i, j] = 1
        return F.sub(mono, self.h_poly(i, j))

    @property
    def info_positions(self) -> list[tuple[int, int]]:
        pis = set(self.pi)
        M, N = self.shape
        return [(i, j) for i in range(M) for j in range(N) if (i, j) not in pis]

    def generator_matrix(self) -> np.ndarray:
        """K x MN systematic generator matrix, one row per information position."""
        return np.asarray([self.g_poly(i, j).ravel() for i, j in self.info_positions],
                          dtype=np.int64).reshape(-1, self.shape[0] * self.shape[1])


def express_h_polys(ct: CheckTensor, params: CodeParams) -> np.ndarray:
    """Coefficients of every h-vector over the check-position h-vectors."""
    if ct.pi is None:
        raise ValueError("check positions not selected")
    F = params.tower.base_field
    if ct.d == 0:
        return np.zeros((params.area, 0), dtype=np.int64)
    Hpi = np.asarray([ct.H[k, l] for k, l in ct.pi], dtype=np.int64)
    return F.matmul(ct.rows, inverse(F, Hpi))


def build_generator_tensor(ct: CheckTensor, params: CodeParams) -> GeneratorTensor:
    coef = express_h_polys(ct, params)
    return GeneratorTensor(params.shape, list(ct.pi), coef, params.tower.base_field)
