import pytest
import sympy as sp
from hypothesis import given, strategies as st

from realmoduli.series import (TruncatedSeries, binomial_power, series_div,
                               series_div_cyclotomic, series_mul)
from realmoduli.presentation import (GenKind, Generator, GradedAlgebraPresentation,
                                     PresentationError, SumRelation, presentation_poincare)

t = sp.symbols("t")


def expand(expr, n):
    """Independent route: sympy Taylor expansion of a rational function."""
    poly = sp.series(expr, t, 0, n + 1).removeO()
    return [int(poly.coeff(t, k)) for k in range(n + 1)]


def S(*cs, n=None):
    return TruncatedSeries.from_coeffs(cs, n)


def test_mul_identity():
    assert series_mul(S(1, n=2), S(1, 2, 1)).coeffs == (1, 2, 1)


def test_mul_convolution():
    a = S(1, 2, 1, n=5)
    b = S(1, 0, 0, 1, n=5)
    assert series_mul(a, b).coeffs == (1, 2, 1, 1, 2, 1)
    assert list(series_mul(a, b)) == expand((1 + t) ** 2 * (1 + t**3), 5)


def test_mul_difference_of_squares():
    assert series_mul(S(1, 1, n=3), S(1, -1, n=3)).coeffs == (1, 0, -1, 0)


def test_mul_truncates_to_minimum():
    r = series_mul(S(1, 1, n=6), S(1, 1, n=2))
    assert r.truncation == 2
    assert r.coeffs == (1, 2, 1)


def test_div_cyclotomic_examples():
    assert series_div_cyclotomic(S(1, 1, n=4), 2).coeffs == (1, 1, 1, 1, 1)
    assert series_div_cyclotomic(S(1, 1, 0, 1, 1, n=6), 2).coeffs == (1, 1, 1, 2, 2, 2, 2)
    assert series_div_cyclotomic(S(1, n=8), 4).coeffs == (1, 0, 0, 0, 1, 0, 0, 0, 1)


def test_div_cyclotomic_matches_sympy():
    a = series_mul(binomial_power(1, 1, 6), binomial_power(3, 1, 6))
    assert list(series_div_cyclotomic(a, 2)) == expand((1 + t) * (1 + t**3) / (1 - t**2), 6)


def test_div_cyclotomic_rejects_zero():
    with pytest.raises(ValueError):
        series_div_cyclotomic(S(1, 1), 0)


def test_series_div_unit():
    a = S(1, 4, 7, n=2)
    assert series_div(a, binomial_power(1, 4, 2)).coeffs == (1, 0, 1)
    with pytest.raises(ValueError):
        series_div(a, S(2, 1))


def test_json_roundtrip():
    s = S(1, -2, 3, n=4)
    assert s.to_json() == {"coeffs": [1, -2, 3, 0, 0], "truncation": 4}
    assert TruncatedSeries.from_json(s.to_json()) == s


def test_rejects_non_integer():
    with pytest.raises(TypeError):
        TruncatedSeries((1, 0.5))


coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=10)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_mul_commutative_associative(a, b, c):
    a, b, c = S(*a), S(*b), S(*c)
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


@given(coeff_lists)
def test_mul_by_zero(a):
    a = S(*a)
    z = TruncatedSeries.from_coeffs([0], a.truncation)
    assert not any(series_mul(a, z))


@given(coeff_lists, st.integers(1, 6))
def test_div_cyclotomic_inverse(a, k):
    a = S(*a)
    n = a.truncation
    one_minus = TruncatedSeries.from_coeffs([1] + [0] * (k - 1) + [-1], n) if k <= n else S(1, n=n)
    assert series_mul(series_div_cyclotomic(a, k), one_minus) == a


@pytest.mark.parametrize("g", range(1, 9))
def test_generic_moduli_series_properties(g):
    n = 4 * g - 3
    s = series_mul(binomial_power(1, g, n), binomial_power(3, g - 1, n))
    assert s.is_palindromic()
    assert s.evaluate(-1) == 0
    assert sum(s) == 2 ** (2 * g - 1)
    assert list(s) == expand((1 + t) ** g * (1 + t**3) ** (g - 1), n)


def ext(label, d):
    return Generator(label, d, GenKind.EXTERIOR)


def test_presentation_poincare_exterior():
    p = GradedAlgebraPresentation((ext("a_1", 1), ext("a_2", 1), ext("c_1", 3)))
    assert presentation_poincare(p, 5).coeffs == (1, 2, 1, 1, 2, 1)


def test_presentation_poincare_polynomial():
    p = GradedAlgebraPresentation((Generator("p", 2, GenKind.POLYNOMIAL),))
    assert presentation_poincare(p, 6).coeffs == (1, 0, 1, 0, 1, 0, 1)


def quotient_basis_dims(m, d, n):
    """Brute force: dims of Λ(q_1..q_m)/(q_1+..+q_m) by exact linear algebra.

    The ideal is spanned by s*w for monomials w; dims = |Λ| - rank of that span.
    """
    import itertools
    subsets = [frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r)]
    index = {s: i for i, s in enumerate(subsets)}
    rows = []
    for w in subsets:
        row = [0] * len(subsets)
        for i in range(m):
            if i in w:
                continue
            # q_i * w, sign from moving q_i past smaller elements of w
            sign = (-1) ** sum(1 for j in w if j < i)
            row[index[w | {i}]] += sign
        rows.append(row)
    image = sp.Matrix(rows)
    dims = [0] * (n + 1)
    for deg in range(m + 1):
        if deg * d > n:
            break
        cols = [index[s] for s in subsets if len(s) == deg]
        rank = image[:, cols].rank() if cols else 0
        dims[deg * d] = len(cols) - rank
    return dims


def test_presentation_poincare_sum_relation():
    p = GradedAlgebraPresentation((ext("q_1", 3), ext("q_2", 3), ext("q_3", 3)),
                                  (SumRelation(("q_1", "q_2", "q_3")),))
    got = presentation_poincare(p, 9)
    assert got.coeffs == (1, 0, 0, 2, 0, 0, 1, 0, 0, 0)
    assert list(got) == quotient_basis_dims(3, 3, 9)


@pytest.mark.parametrize("m", [2, 4, 5])
def test_sum_relation_brute_force(m):
    gens = tuple(ext(f"q_{i}", 3) for i in range(1, m + 1))
    p = GradedAlgebraPresentation(gens, (SumRelation(tuple(g.label for g in gens)),))
    assert list(presentation_poincare(p, 3 * m)) == quotient_basis_dims(m, 3, 3 * m)


def test_unsupported_relation():
    with pytest.raises(PresentationError):
        GradedAlgebraPresentation((ext("q_1", 3), Generator("p", 4, GenKind.POLYNOMIAL)),
                                  (SumRelation(("q_1", "p")),))
    with pytest.raises(PresentationError):
        GradedAlgebraPresentation.from_json({"generators": [], "relations": [{"type": "ideal"}]})
