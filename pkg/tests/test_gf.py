import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicycl.errors import (
    FieldDivisionByZero,
    FieldTooLarge,
    NoRootInField,
    NotInSpan,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
)
from bicycl.gf import (
    FieldTower,
    first_primitive_poly,
    format_poly_over_fp,
    is_irreducible,
    is_primitive_poly,
    parse_poly_over_fp,
    poly_eval,
    primitive_root_of,
    splitting_degree,
)

elem81 = st.integers(0, 80)


def naive_mul(a, b, p, poly):
    """Schoolbook product of digit vectors reduced by the defining polynomial."""
    n = len(poly) - 1
    da = [(a // p**i) % p for i in range(n)]
    db = [(b // p**i) % p for i in range(n)]
    prod = [0] * (2 * n)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * n - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * poly[i]) % p
    return sum(prod[i] * p**i for i in range(n))


def test_preset_alpha_is_x(f81a, f81b):
    assert f81a.alpha == 3 and f81b.alpha == 3
    assert f81a.defining_poly == (2, 1, 0, 0, 1)
    assert f81b.defining_poly == (2, 0, 0, 2, 1)


def test_two_is_alpha_40(f81a, f81b):
    assert f81a.log(2) == 40 and f81b.log(2) == 40


@given(elem81, elem81)
def test_mul_matches_schoolbook(a, b):
    tw = FieldTower.from_preset("F81-a")
    assert tw.mul(a, b) == naive_mul(a, b, 3, tw.defining_poly)


@given(elem81, elem81, elem81)
def test_field_axioms(a, b, c):
    tw = FieldTower.from_preset("F81-b")
    assert tw.add(a, b) == tw.add(b, a)
    assert tw.mul(a, tw.add(b, c)) == tw.add(tw.mul(a, b), tw.mul(a, c))
    assert tw.add(a, tw.neg(a)) == 0
    assert tw.sub(tw.add(a, b), b) == a
    if a:
        assert tw.mul(a, tw.inv(a)) == 1
        assert tw.div(tw.mul(a, b), a) == b


@given(st.lists(elem81, min_size=1, max_size=30), st.lists(elem81, min_size=1, max_size=30))
def test_vector_ops_match_scalar(xs, ys):
    tw = FieldTower.from_preset("F81-a")
    n = min(len(xs), len(ys))
    a, b = np.asarray(xs[:n]), np.asarray(ys[:n])
    assert tw.vadd(a, b).tolist() == [tw.add(x, y) for x, y in zip(a, b)]
    assert tw.vmul(a, b).tolist() == [tw.mul(x, y) for x, y in zip(a, b)]
    assert tw.vsub(a, b).tolist() == [tw.sub(x, y) for x, y in zip(a, b)]
    assert tw.vsum(a) == tw.sum(a.tolist())


def test_inverse_of_zero(f81a):
    with pytest.raises(FieldDivisionByZero):
        f81a.inv(0)
    with pytest.raises(ZeroDivisionError):
        f81a.div(1, 0)


def test_frobenius_orbits(f81a):
    g = f81a.exp(4)
    assert [f81a.log(x) for x in f81a.orbit(g)] == [4, 12, 36, 28]
    assert f81a.frobenius(g, 4) == g
    assert f81a.in_subfield(f81a.exp(10), 2)
    assert not f81a.in_subfield(f81a.exp(10), 1)
    assert f81a.in_subfield(2, 1)


def test_minimal_polynomials(f81a, f81b):
    assert f81a.minimal_polynomial(f81a.exp(4)) == [1, 1, 0, 2, 1]  # x^4+2x^3+x+1
    assert f81b.minimal_polynomial(f81b.exp(4)) == [1, 2, 0, 1, 1]  # x^4+x^3+2x+1
    # alpha^10 generates F_9 inside F81-a: x^2 + x + 2
    assert f81a.minimal_polynomial(f81a.exp(10)) == [2, 1, 1]
    assert f81a.minimal_polynomial(f81a.exp(50)) == [2, 2, 1]


@given(st.integers(1, 80))
def test_minimal_polynomial_vanishes(a):
    tw = FieldTower.from_preset("F81-a")
    mp = tw.minimal_polynomial(a)
    assert poly_eval(tw, mp, a) == 0
    assert len(mp) - 1 == len(tw.orbit(a))
    assert all(c < 3 for c in mp)  # coefficients in F_3
    assert is_irreducible(mp, 3)


def test_coordinates(f81a):
    basis = [f81a.pow(f81a.alpha, i) for i in range(4)]
    assert f81a.coords(f81a.exp(5), basis) == (0, 1, 2, 0)
    assert f81a.coords(f81a.exp(15), basis) == (0, 0, 2, 2)
    assert f81a.coords(f81a.exp(55), basis) == (0, 0, 1, 1)


def test_subfield_coords_and_span(f81a):
    theta = f81a.subfield_generator(2)
    assert f81a.log(theta) == 10
    with pytest.raises(NotInSpan):
        f81a.coords(f81a.exp(1), [1, theta])
    assert f81a.coords(f81a.exp(70), [1, theta]) is not None


def test_symbols_q4(f4):
    F = f4.base_field
    assert f4.q == 4
    # symbols 0..3 form F_4: multiplicative group of order 3
    for s in range(1, 4):
        assert F.mul(s, F.inv(s)) == 1
    assert sorted(f4.to_symbol(f4.from_symbol(np.arange(4))).tolist()) == [0, 1, 2, 3]
    w = f4.from_symbol(2)
    assert f4.mult_order(w) == 3
    with pytest.raises(NotInSpan):
        f4.to_symbol(f4.alpha)


@given(st.integers(0, 3), st.integers(0, 3))
def test_q4_tables_match_ambient(a, b):
    tw = FieldTower.default(2, 2, 3)
    F = tw.base_field
    va, vb = tw.from_symbol(a), tw.from_symbol(b)
    assert int(F.add(a, b)) == tw.to_symbol(tw.add(va, vb))
    assert int(F.mul(a, b)) == tw.to_symbol(tw.mul(va, vb))


def test_poly_text_roundtrip():
    assert parse_poly_over_fp("x^4+2x^3+2") == [2, 0, 0, 2, 1]
    assert format_poly_over_fp([2, 1, 0, 0, 1]) == "x^4 + x + 2"


def test_constructor_errors():
    with pytest.raises(NotPrime):
        FieldTower(4, 1, 2, [1, 1, 1])
    with pytest.raises(NotIrreducible):
        FieldTower(3, 1, 4, [1, 0, 0, 0, 1])
    with pytest.raises(NotPrimitive):
        FieldTower(3, 1, 2, [1, 0, 1])  # x^2+1: irreducible, alpha has order 4
    with pytest.raises(FieldTooLarge):
        FieldTower(2, 1, 30, [1] + [0] * 29 + [1])


def test_first_primitive_poly():
    for p, n in [(2, 4), (3, 2), (3, 4), (5, 2), (2, 6)]:
        poly = first_primitive_poly(p, n)
        assert is_primitive_poly(poly, p)
        tw = FieldTower(p, 1, n, poly)
        assert tw.mult_order(tw.alpha) == p**n - 1


def test_splitting_degree():
    assert splitting_degree(3, 10, 1, 8, 1) == 4  # lambda = 2 = w^1 in F_3
    assert splitting_degree(3, 4, 1, 5, 1) == 4
    assert splitting_degree(3, 1, 0, 2, 0) == 1
    assert splitting_degree(5, 31, 1, 31, 2) == 3


def test_primitive_roots(f81a, f81b):
    assert f81b.log(primitive_root_of(f81b, 2, 10)) == 4
    assert f81b.log(primitive_root_of(f81b, 2, 8)) == 5
    assert f81a.log(primitive_root_of(f81a, 2, 4)) == 10
    assert f81a.log(primitive_root_of(f81a, 2, 5)) == 8
    assert f81a.log(primitive_root_of(f81a, 1, 4)) == 20
    assert f81a.log(primitive_root_of(f81a, 1, 5)) == 16
    with pytest.raises(NoRootInField):
        primitive_root_of(f81a, 2, 7)


def test_parse_element(f81a):
    assert f81a.parse_element("a^40") == 2
    assert f81a.parse_element(2) == 2
    assert f81a.parse_element("a") == f81a.alpha
    with pytest.raises(ValueError):
        f81a.parse_element("7")
