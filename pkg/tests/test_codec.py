import numpy as np
import pytest
from conftest import DATA, load_code, read_grid
from hypothesis import given
from hypothesis import strategies as st

from bicycl import bipoly as bp
from bicycl import codec
from bicycl import zerosets as zs
from bicycl._kernels import BACKEND, backends, min_weight
from bicycl.basis import build_basis
from bicycl.errors import CapExceeded, InvalidEcz, NonzeroParityInput, ParamMismatch
from bicycl.gf import FieldTower, primitive_root_of
from bicycl.specfile import resolve

FIXTURES = ["4x5-constacyclic", "4x5-cyclic", "4x5-constacyclic-generators", "10x8-ecz3",
            "10x8-two-generators", "10x8-full-space", "q4-3x5"]


def message_grid():
    return bp.parse_grid(resolve("10x8-ecz3").with_name("10x8-ecz3-message.txt").read_text(), 10, 8)


def test_encode_10x8(ecz3):
    _, code = ecz3
    c = codec.encode(code, message_grid())
    assert c[:4, :3].tolist() == [[0, 2, 0], [1, 0, 0], [1, 1, 2], [1, 0, 2]]
    assert np.array_equal(c, read_grid("10x8_ecz3_codeword.txt"))
    assert not codec.syndrome(code, c).any()


def test_codeword_polynomial(ecz3):
    spec, code = ecz3
    text = (DATA / "10x8_ecz3_codeword_poly.txt").read_text()
    f = bp.reduce_omega(spec.params, bp.parse_bipoly(spec.tower, text))
    assert np.array_equal(spec.tower.to_symbol(f), read_grid("10x8_ecz3_codeword.txt"))


@pytest.mark.parametrize("name", FIXTURES)
@given(seed=st.integers(0, 2**32 - 1))
def test_systematic(name, seed):
    _, code = load_code(name)
    rng = np.random.default_rng(seed)
    m = rng.integers(0, code.params.tower.q, code.params.shape)
    for k, l in code.check.pi:
        m[k, l] = 0
    c = codec.encode(code, m)
    info = code.gen.info_positions
    assert [c[i, j] for i, j in info] == [m[i, j] for i, j in info]
    assert codec.is_codeword(code, c, verify=True)


def test_encode_rejects_bad_messages(ecz3):
    _, code = ecz3
    m = np.zeros((10, 8), dtype=int)
    m[0, 0] = 1
    with pytest.raises(NonzeroParityInput):
        codec.encode(code, m)
    with pytest.raises(ParamMismatch):
        codec.encode(code, np.zeros((8, 10), dtype=int))
    with pytest.raises(ParamMismatch):
        codec.encode(code, np.full((10, 8), 3))


def test_flipped_symbol_is_rejected(ecz3):
    _, code = ecz3
    c = read_grid("10x8_ecz3_codeword.txt")
    assert codec.is_codeword(code, c, verify=True)
    for k, l in [(0, 0), (4, 4), (9, 7)]:
        bad = c.copy()
        bad[k, l] = (bad[k, l] + 1) % 3
        assert not codec.is_codeword(code, bad, verify=True)


def test_shift_matches_array_form(cc45):
    # x-shift moves row M-1 to row 0 multiplied by lambda1
    _, code = cc45
    c = codec.encode(code, np.where(np.isin(np.arange(20).reshape(4, 5),
                     [k * 5 + l for k, l in code.check.pi]), 0, 1))
    sx = codec.shift_x(code, c)
    assert np.array_equal(sx[1:], c[:-1]) and np.array_equal(sx[0], (2 * c[-1]) % 3)
    sy = codec.shift_y(code, c)
    assert np.array_equal(sy[:, 1:], c[:, :-1]) and np.array_equal(sy[:, 0], (2 * c[:, -1]) % 3)


@pytest.mark.parametrize("name,expected", [
    ("4x5-constacyclic", [20, 12, 3]),
    ("4x5-cyclic", [20, 12, 2]),
    ("4x5-constacyclic-generators", [20, 12, 3]),
    ("q4-3x5", [15, 9, 3]),
    ("10x8-full-space", [80, 80, 1]),
])
def test_parameters(name, expected):
    _, code = load_code(name)
    assert codec.parameters(code).as_list() == expected


def test_parameters_not_computed(ecz3):
    _, code = ecz3
    p = codec.parameters(code)
    assert (p.n, p.k, p.d) == (80, 68, None)
    assert str(p) == "[80, 68, not computed]" and "cap" in p.note
    with pytest.raises(CapExceeded):
        codec.minimum_distance(code)


@pytest.mark.parametrize("backend", sorted(backends()))
def test_backends_agree(backend, cc45, cyc45):
    for _, code in (cc45, cyc45):
        G = codec.code_basis(code)
        ref = min_weight(codec.digit_rows(code, G), 3, backend="python")
        assert min_weight(codec.digit_rows(code, G), 3, backend=backend) == ref


@given(st.integers(0, 2**32 - 1), st.sampled_from([(2, 1), (3, 1), (2, 2), (5, 1)]))
def test_min_weight_against_enumeration(seed, pe):
    p, e = pe
    rng = np.random.default_rng(seed)
    k, n = int(rng.integers(1, 5)), int(rng.integers(1, 7))
    rows = rng.integers(0, p, (k, n * e))
    span = (np.arange(p**k)[:, None] // p ** np.arange(k)) % p
    words = (span @ rows) % p
    wt = [int((w.reshape(n, e).any(axis=1)).sum()) for w in words]
    want = min([w for w in wt if w] or [-1])
    for name in backends():
        assert min_weight(rows, p, e, backend=name) == want


def test_backend_selected():
    assert BACKEND in backends()


def test_digit_rows_span_q4():
    spec, code = load_code("q4-3x5")
    G = codec.code_basis(code)
    D = codec.digit_rows(code, G)
    assert D.shape == (2 * G.shape[0], 2 * 15)
    words = codec.enumerate_code(code)
    assert len(words) == 4**9 == 2**D.shape[0]


# -- dual ---------------------------------------------------------------------


@pytest.mark.parametrize("name,dual_k", [("4x5-constacyclic", 8), ("4x5-cyclic", 8), ("10x8-ecz3", 12)])
def test_dual(name, dual_k):
    _, code = load_code(name)
    dual = codec.dual_code(code)
    assert dual.K == dual_k == code.params.area - code.K
    tw = code.params.tower
    assert dual.params.lambda1 == tw.inv(code.params.lambda1)
    rep = codec.check_duality(code, dual)
    assert rep.ok and rep.checked > 0


@pytest.mark.parametrize("name", ["4x5-constacyclic", "4x5-cyclic"])
def test_reciprocal_condition(name):
    _, code = load_code(name)
    dual = codec.dual_code(code)
    shape = code.params.shape
    for a in codec.code_basis(code):
        for b in codec.code_basis(dual):
            assert not codec.reciprocal_product(code, a.reshape(shape), b.reshape(shape)).any()


def test_dual_of_cyclic_is_cyclic(cyc45):
    _, code = cyc45
    dual = codec.dual_code(code)
    assert (dual.params.lambda1, dual.params.lambda2) == (1, 1)
    assert len(dual.vc) + len(code.vc) == 20


# -- brute-force ideal oracle -------------------------------------------------


def tiny_f3():
    tw = FieldTower(3, 1, 1, [1, 1])
    P = bp.CodeParams(tw, 2, 2, 1, 1)
    return P, zs.build_v0(P, 2, 2)


def tiny_f9():
    tw = FieldTower.default(3, 1, 2)
    P = bp.CodeParams(tw, 2, 4, 2, 2)
    return P, zs.build_v0(P, primitive_root_of(tw, 2, 2), primitive_root_of(tw, 2, 4))


def tiny_f4():
    tw = FieldTower.default(2, 2, 3)
    w = tw.from_symbol(2)
    P = bp.CodeParams(tw, 3, 3, w, 1)
    return P, zs.build_v0(P, primitive_root_of(tw, w, 3), primitive_root_of(tw, 1, 3))


def same_words(a, b, q):
    """Equality of two codeword lists as sets, via base-q integer keys."""
    ka, kb = (np.unique(w.reshape(len(w), -1) @ (q ** np.arange(w[0].size))) for w in (a, b))
    return len(ka) == len(a) and np.array_equal(ka, kb)


def test_oracle_x_plus_y():
    P, v0 = tiny_f3()
    g = bp.parse_bipoly(P.tower, "x + y")
    code = codec.code_from_generators(P, [g], v0, variety="full")
    ideal = codec.brute_force_ideal(P, [g])
    assert len(ideal) == 9
    assert same_words(ideal, codec.syndrome_kernel(code), P.tower.q)


@pytest.mark.parametrize("tiny", [tiny_f3, tiny_f9, tiny_f4])
def test_oracle_trivial_generators(tiny):
    P, _ = tiny()
    q = P.tower.q
    assert len(codec.brute_force_ideal(P, [bp.monomial(P, 0, 0)])) == q**P.area
    zero = codec.brute_force_ideal(P, [bp.zero(P)])
    assert zero.shape == (1, P.area) and not zero.any()


@pytest.mark.parametrize("tiny", [tiny_f3, tiny_f9, tiny_f4])
def test_oracle_orbit_codes(tiny):
    """Every ECZ subset of V-hat-0: the ideal of the basis equals the syndrome
    kernel, and each member passes the vanishing test."""
    P, v0 = tiny()
    tw = P.tower
    n = len(v0.reps)
    for mask in range(1 << n):
        ecz = [r for i, r in enumerate(v0.reps) if mask >> i & 1]
        code = codec.build_code(P, ecz, v0=v0)
        basis = build_basis(code.profile, P).polys if ecz else [bp.monomial(P, 0, 0)]
        ideal = codec.brute_force_ideal(P, basis)
        assert same_words(ideal, codec.syndrome_kernel(code), P.tower.q)
        assert len(ideal) == tw.q**code.K
        sample = ideal[:: max(1, len(ideal) // 50)]
        assert all(codec.vanishes(code, w.reshape(P.shape)) for w in sample)


@pytest.mark.parametrize("tiny", [tiny_f3, tiny_f9, tiny_f4])
@given(seed=st.integers(0, 2**32 - 1))
def test_oracle_random_generators(tiny, seed):
    P, v0 = tiny()
    tw = P.tower
    rng = np.random.default_rng(seed)
    gens = [tw.from_symbol(rng.integers(0, tw.q, P.shape)) for _ in range(int(rng.integers(1, 3)))]
    code = codec.code_from_generators(P, gens, v0, variety="full")
    assert same_words(codec.brute_force_ideal(P, gens), codec.syndrome_kernel(code), tw.q)


def test_oracle_cap():
    spec, _ = load_code("4x5-cyclic")
    with pytest.raises(CapExceeded):
        codec.brute_force_ideal(spec.params, [bp.monomial(spec.params, 0, 0)])


def test_ecz_outside_v0(ecz3):
    spec, _ = ecz3
    tw = spec.tower
    with pytest.raises(InvalidEcz):
        codec.build_code(spec.params, [(tw.exp(4), tw.exp(25))], v0=spec.v0())
