import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicycl import bipoly as bp
from bicycl import zerosets as zs
from bicycl.errors import ConjugateFirstComponents, InvalidEcz, InvalidRoot
from bicycl.gf import FieldTower, format_uni

TWB = FieldTower.from_preset("F81-b")
TWA = FieldTower.from_preset("F81-a")


def logs(tw, pts):
    return [(tw.log(a), tw.log(b)) for a, b in pts]


def test_orbit_set_10x8():
    P = bp.CodeParams(TWB, 10, 8, 2, 2)
    v0 = zs.build_v0(P, TWB.exp(4), TWB.exp(5))
    assert (v0.z1, v0.z2, len(v0.points)) == (4, 4, 16)
    # beta, beta^3, 2beta, 2beta^3 = a^5, a^15, a^45, a^55
    assert logs(TWB, v0.reps) == [(4, 5), (4, 15), (4, 45), (4, 55)]
    assert len(set(v0.points)) == 16
    assert all(TWB.pow(a, 10) == 2 and TWB.pow(b, 8) == 2 for a, b in v0.points)


def test_v0_rejects_wrong_roots():
    P = bp.CodeParams(TWB, 10, 8, 2, 2)
    with pytest.raises(InvalidRoot):
        zs.build_v0(P, TWB.exp(5), TWB.exp(5))


def test_full_variety_size():
    P = bp.CodeParams(TWB, 10, 8, 2, 2)
    assert len(zs.full_variety(P)) == 80


def test_closure_and_reps_roundtrip():
    P = bp.CodeParams(TWA, 4, 5, 2, 2)
    full = zs.full_variety(P)
    reps = zs.ecz_representatives(TWA, full)
    assert sorted(zs.frobenius_closure(TWA, reps)) == sorted(full)


def test_profile_4x5():
    ecz = [(TWA.exp(10), TWA.exp(8)), (TWA.exp(10), TWA.exp(24))]
    prof = zs.profile_from_ecz(TWA, ecz)
    (c,) = prof.components
    assert (c.m, c.eta_degrees, c.n, prof.d) == (2, [2, 2], 4, 8)
    assert format_uni(TWA, c.g_xi, "x") == "x^2 + x + 2"
    assert format_uni(TWA, c.eta_polys[0]) == "y^2 + a^10*y + 1"
    assert format_uni(TWA, c.eta_polys[1]) == "y^2 + a^30*y + 1"
    assert format_uni(TWA, c.G) == "y^4 + 2y^3 + y^2 + 2y + 1"


def test_profile_cyclic_4x5():
    ecz = [(TWA.exp(20), TWA.exp(16)), (TWA.exp(20), TWA.exp(48))]
    (c,) = zs.profile_from_ecz(TWA, ecz).components
    assert format_uni(TWA, c.g_xi, "x") == "x^2 + 1"
    # theta^7 and theta^5 with theta = a^10
    assert format_uni(TWA, c.eta_polys[0]) == "y^2 + a^70*y + 1"
    assert format_uni(TWA, c.eta_polys[1]) == "y^2 + a^50*y + 1"
    assert format_uni(TWA, c.G) == "y^4 + y^3 + y^2 + y + 1"


def test_profile_10x8_ecz3():
    ecz = [(TWA.exp(4), TWA.exp(k)) for k in (5, 15, 55)]
    prof = zs.profile_from_ecz(TWA, ecz)
    (c,) = prof.components
    assert (c.m, c.eta_degrees, prof.d) == (4, [1, 1, 1], 12)
    assert format_uni(TWA, c.G) == "y^3 + a^45*y^2 + a^70*y + a^35"


def test_profile_rejects_conjugates():
    with pytest.raises(ConjugateFirstComponents):
        zs.profile_from_ecz(TWA, [(TWA.exp(4), TWA.exp(5)), (TWA.exp(12), TWA.exp(15))])
    with pytest.raises(InvalidEcz):
        # a^5 and a^15 = (a^5)^3 are conjugate over F_{3^1}... but m = 4 here: use m = 2
        zs.profile_from_ecz(TWA, [(TWA.exp(10), TWA.exp(8)), (TWA.exp(10), TWA.exp(72))])


def test_staircase_order():
    # two components with n = 1 and n = 5: larger n first
    P = bp.CodeParams(TWA, 4, 5, 2, 2)
    pts = [p for p in zs.full_variety(P) if TWA.log(p.a) in (10, 30)]
    pts += [p for p in zs.full_variety(P) if TWA.log(p.a) in (50, 70) and p.b == 2]
    prof = zs.profile_from_ecz(TWA, zs.ecz_representatives(TWA, pts))
    assert [c.n for c in prof.components] == [5, 1]
    assert prof.d == len(pts) == 12


@given(st.sets(st.integers(0, 15)))
def test_cz_from_generators_matches_ecz(picks):
    """Generators from the ideal basis of a chosen ECZ reproduce that ECZ."""
    from bicycl.basis import build_basis
    P = bp.CodeParams(TWB, 10, 8, 2, 2)
    v0 = zs.build_v0(P, TWB.exp(4), TWB.exp(5))
    reps = [v0.reps[i % 4] for i in picks]
    ecz = [p for p in v0.reps if p in reps]
    if not ecz:
        return
    basis = build_basis(zs.profile_from_ecz(TWB, ecz), P)
    vc, got = zs.cz_from_generators(P, basis.polys, v0)
    assert got == ecz
    assert sorted(vc) == sorted(zs.vc_from_ecz(TWB, ecz))
