"""Common-zero sets: the orbit set V0, its class representatives, the CZ/ECZ
sets of a code, and the grouped ECZ profile that drives every later stage."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .bipoly import CodeParams, eval_at
from .errors import ConjugateFirstComponents, InvalidEcz, InvalidRoot, NoRootInField
from .gf import FieldTower, poly_mul


class ZeroPoint(NamedTuple):
    a: int
    b: int


def point_text(tw: FieldTower, pt) -> str:
    return f"({tw.fmt(pt[0])}, {tw.fmt(pt[1])})"


def frobenius_closure(tw: FieldTower, points: Iterable[Sequence[int]]) -> list[ZeroPoint]:
    """Close a point set under (a, b) -> (a^q, b^q); classes kept contiguous."""
    seen: set = set()
    out: list[ZeroPoint] = []
    for a, b in points:
        pt = ZeroPoint(a, b)
        while pt not in seen:
            seen.add(pt)
            out.append(pt)
            pt = ZeroPoint(tw.frobenius(pt.a), tw.frobenius(pt.b))
    return out


@dataclass
class OrbitSet:
    """V0 in orbit form, built from a chosen pair of primitive roots."""

    params: CodeParams
    gamma: int
    beta: int
    z1: int
    z2: int
    points: list[ZeroPoint]
    reps: list[ZeroPoint]


def build_v0(params: CodeParams, gamma: int, beta: int) -> OrbitSet:
    tw = params.tower
    if tw.pow(gamma, params.M) != params.lambda1:
        raise InvalidRoot(f"{tw.fmt(gamma)}^{params.M} != lambda1")
    if tw.pow(beta, params.N) != params.lambda2:
        raise InvalidRoot(f"{tw.fmt(beta)}^{params.N} != lambda2")
    gam_orbit = tw.orbit(gamma)
    bet_orbit = tw.orbit(beta)
    z1, z2 = len(gam_orbit), len(bet_orbit)
    # each class is represented by its first member along beta^(q^j)
    reps, seen = [], set()
    for b in bet_orbit:
        if b not in seen:
            reps.append(b)
            seen.update(tw.orbit(b, z1))
    reps.sort(key=tw.log)
    reps = [ZeroPoint(gamma, b) for b in reps]
    points = frobenius_closure(tw, reps)
    assert len(points) == z1 * z2
    return OrbitSet(params, gamma, beta, z1, z2, points, reps)


def binomial_roots(tw: FieldTower, lam: int, M: int) -> list[int]:
    """All roots of x^M - lam in the ambient field, ascending exponent."""
    Q = tw.order
    g = math.gcd(M, Q)
    dl = tw.log(lam)
    if dl % g or g != M:
        raise NoRootInField(f"x^{M} - {tw.fmt(lam)} does not split in the ambient field")
    step = Q // g
    k0 = ((dl // g) * pow(M // g, -1, step)) % step if step > 1 else 0
    return [tw.exp(k) for k in range(k0, Q, step)]


def full_variety(params: CodeParams) -> list[ZeroPoint]:
    """Every (a, b) with a^M = l1 and b^N = l2 (M*N points)."""
    tw = params.tower
    xs = binomial_roots(tw, params.lambda1, params.M)
    ys = binomial_roots(tw, params.lambda2, params.N)
    return [ZeroPoint(a, b) for a in xs for b in ys]


def cz_from_generators(params: CodeParams, generators, v0: OrbitSet):
    """CZ set (points of V0 where every generator vanishes) and ECZ set."""
    tw = params.tower
    vc = [pt for pt in v0.points
          if all(eval_at(tw, g, pt.a, pt.b) == 0 for g in generators)]
    vcs = set(vc)
    ecz = [pt for pt in v0.reps if pt in vcs]
    return vc, ecz


def ecz_representatives(tw: FieldTower, points: Iterable[Sequence[int]]) -> list[ZeroPoint]:
    """Canonical ECZ of a Frobenius-closed set: smallest-exponent first
    component per F_q-class, smallest-exponent second component per
    F_{q^m}-class."""
    pts = {ZeroPoint(a, b) for a, b in points}
    firsts: dict[int, int] = {}
    for a, _ in pts:
        if a not in firsts:
            xi = min(tw.orbit(a), key=tw.log)
            for c in tw.orbit(a):
                firsts[c] = xi
    out = []
    for xi in sorted(set(firsts.values()), key=tw.log):
        m = len(tw.orbit(xi))
        etas = {b for a, b in pts if a == xi}
        reps = {min(tw.orbit(b, m), key=tw.log) for b in etas}
        out.extend(ZeroPoint(xi, b) for b in sorted(reps, key=tw.log))
    return out


@dataclass
class Component:
    """All ECZ points sharing the first component ``xi``."""

    xi: int
    m: int
    g_xi: list[int]
    etas: list[int]
    eta_degrees: list[int]
    eta_polys: list[list[int]]
    G: list[int]

    @property
    def n(self) -> int:
        return sum(self.eta_degrees)

    @property
    def t(self) -> int:
        return len(self.etas)


@dataclass
class EczProfile:
    components: list[Component]
    z1: int | None = None
    z2: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def s(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return sum(c.m * c.n for c in self.components)

    @property
    def points(self) -> list[ZeroPoint]:
        return [ZeroPoint(c.xi, eta) for c in self.components for eta in c.etas]


def profile_from_ecz(tw: FieldTower, ecz: Sequence[Sequence[int]],
                     z1: int | None = None, z2: int | None = None) -> EczProfile:
    groups: dict[int, list[int]] = {}
    for a, b in ecz:
        groups.setdefault(a, [])
        if b not in groups[a]:
            groups[a].append(b)
    xis = sorted(groups, key=tw.log)
    for i, a in enumerate(xis):
        conj = set(tw.orbit(a))
        for b in xis[i + 1:]:
            if b in conj:
                raise ConjugateFirstComponents(
                    f"first components {tw.fmt(a)} and {tw.fmt(b)} are conjugate over F_q")
    comps = []
    for xi in xis:
        m = len(tw.orbit(xi))
        etas = sorted(groups[xi], key=tw.log)
        for i, a in enumerate(etas):
            conj = set(tw.orbit(a, m))
            for b in etas[i + 1:]:
                if b in conj:
                    raise InvalidEcz(
                        f"{tw.fmt(a)} and {tw.fmt(b)} are conjugate over F_q^{m}")
        polys = [tw.minimal_polynomial(eta, m) for eta in etas]
        G = [1]
        for poly in polys:
            G = poly_mul(tw, G, poly)
        comps.append(Component(
            xi=xi, m=m, g_xi=tw.minimal_polynomial(xi, 1), etas=etas,
            eta_degrees=[len(poly) - 1 for poly in polys], eta_polys=polys, G=G))
    # staircase convention: n_1 >= n_2 >= ... >= n_s
    comps.sort(key=lambda c: (-c.n, tw.log(c.xi)))
    return EczProfile(comps, z1, z2)


def vc_from_ecz(tw: FieldTower, ecz) -> list[ZeroPoint]:
    return frobenius_closure(tw, ecz)


def check_in_orbit_set(v0: OrbitSet, ecz) -> None:
    allowed = set(v0.points)
    tw = v0.params.tower
    for pt in ecz:
        if ZeroPoint(*pt) not in allowed:
            raise InvalidEcz(f"point {point_text(tw, pt)} is not in V0")
