import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from realmoduli.dga import (CDGA, CDGAError, SparseMatrix, cohomology_dimensions,
                            differential_matrix, matrix_rank, monomial_basis, square_is_zero,
                            verify_bg)
from realmoduli.field import FieldSpec
from realmoduli.gauge import build_koszul_tate
from realmoduli.presentation import GenKind, Generator, GradedAlgebraPresentation, presentation_poincare
from realmoduli.topology import (CircleType, CurveKind, CurveTopology, RealBundleType,
                                 SurfaceDecomposition, all_decompositions, circle_types)

EXT, POLY, DIV = GenKind.EXTERIOR, GenKind.POLYNOMIAL, GenKind.DIVIDED_POWER
IO, IM, AN = CircleType.IDENTITY_ORIENTABLE, CircleType.IDENTITY_MOEBIUS, CircleType.ANTIPODAL


def koszul_pair(kind=POLY, p=0):
    return CDGA([Generator("z", 2, kind), Generator("q", 3, EXT)], {"z": [(1, {"q": 1})]},
                FieldSpec(p))


def all_complexes(max_hg=1, max_n=4, chars=(0,)):
    for hg, n, p in itertools.product(range(max_hg + 1), range(1, max_n + 1), chars):
        for a in range(1, n + 1):
            for bits in itertools.product((0, 1), repeat=a):
                kinds = [IM if bit else IO for bit in bits] + [AN] * (n - a)
                yield build_koszul_tate(SurfaceDecomposition(hg, n, a), kinds, FieldSpec(p))


def test_monomial_basis_examples():
    x = CDGA([Generator("x", 1, EXT)])
    assert [x.label(m) for m in monomial_basis(x, 1)] == ["x"]
    xz = CDGA([Generator("x_1", 1, EXT), Generator("z", 2, POLY)])
    assert [xz.label(m) for m in monomial_basis(xz, 3)] == ["x_1·z"]
    c = build_koszul_tate(SurfaceDecomposition(0, 2, 2), [IM, IM], FieldSpec(0))
    assert sorted(c.label(m) for m in monomial_basis(c, 6)) == ["x_1·y_1·z", "z^3"]
    assert monomial_basis(x, -1) == []


def test_basis_sizes_match_free_series():
    for c in all_complexes(max_n=3, chars=(0, 3)):
        free = presentation_poincare(GradedAlgebraPresentation(c.generators), 9)
        assert [len(monomial_basis(c, m)) for m in range(10)] == list(free.coeffs)


def test_differential_matrix_examples():
    c = koszul_pair()
    assert differential_matrix(c, 2).to_dense() == [[1]]
    assert differential_matrix(c, 4).to_dense() == [[2]]
    flat = CDGA([Generator("x", 1, EXT), Generator("z", 2, POLY)])
    assert all(differential_matrix(flat, m).is_zero() for m in range(8))


def test_cohomology_examples():
    assert cohomology_dimensions(koszul_pair(), 8).dims == (1,) + (0,) * 8
    assert cohomology_dimensions(CDGA([Generator("x", 1, EXT)]), 3).dims == (1, 1, 0, 0)
    c = build_koszul_tate(SurfaceDecomposition(0, 2, 1), [IM, AN], FieldSpec(0))
    assert cohomology_dimensions(c, 6).dims == (1, 1, 0, 0, 0, 0, 0)


def test_divided_powers_needed_in_odd_characteristic():
    for p in (3, 5):
        assert cohomology_dimensions(koszul_pair(DIV, p), 12).dims == (1,) + (0,) * 12
        # with a polynomial generator d(z^p) = p z^(p-1) q vanishes
        bad = cohomology_dimensions(koszul_pair(POLY, p), 12).dims
        assert bad[2 * p] == 1


@pytest.mark.parametrize("p", [0, 3])
def test_d_squared_zero(p):
    for c in all_complexes(max_n=3, chars=(p,)):
        for m in range(8):
            assert square_is_zero(c, m)


def _mul_elems(c, a, b):
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            r = c.multiply(ma, mb)
            if r:
                out[r[1]] = c.field.reduce(out.get(r[1], 0) + ca * cb * r[0])
    return {k: v for k, v in out.items() if v}


def _add(c, a, b, sign=1):
    out = dict(a)
    for k, v in b.items():
        out[k] = c.field.reduce(out.get(k, 0) + sign * v)
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("p", [0, 3])
def test_leibniz_rule(p):
    c = build_koszul_tate(SurfaceDecomposition(1, 3, 2), [IO, IM, AN], FieldSpec(p))
    monos = [m for deg in range(1, 6) for m in monomial_basis(c, deg)]
    for a, b in itertools.product(monos[:40], monos[::7]):
        ab = _mul_elems(c, {a: 1}, {b: 1})
        lhs = c.d(ab)
        sign = -1 if c.degree(a) % 2 else 1
        rhs = _add(c, _mul_elems(c, c.d({a: 1}), {b: 1}),
                   _mul_elems(c, {a: 1}, c.d({b: 1})), sign)
        assert lhs == rhs, (c.label(a), c.label(b))


def test_graded_commutativity():
    c = build_koszul_tate(SurfaceDecomposition(1, 2, 2), [IO, IO], FieldSpec(0))
    monos = [m for deg in range(1, 5) for m in monomial_basis(c, deg)]
    for a, b in itertools.product(monos, repeat=2):
        ab, ba = c.multiply(a, b), c.multiply(b, a)
        if ab is None:
            assert ba is None
            continue
        sign = -1 if c.degree(a) * c.degree(b) % 2 else 1
        assert ab[1] == ba[1] and ab[0] == sign * ba[0]


def test_divided_power_product():
    c = CDGA([Generator("z", 2, DIV)], field=FieldSpec(0))
    assert c.multiply((2,), (3,)) == (10, (5,))
    c5 = CDGA([Generator("z", 2, DIV)], field=FieldSpec(5))
    assert c5.multiply((2,), (3,)) is None


sparse_rows = st.integers(1, 7).flatmap(lambda ncols: st.lists(
    st.dictionaries(st.integers(0, ncols - 1), st.integers(-6, 6).filter(bool), max_size=ncols),
    min_size=1, max_size=7).map(lambda rows: (ncols, rows)))


@settings(max_examples=150, deadline=None)
@given(sparse_rows, st.sampled_from([0, 3, 5, 7]))
def test_rank_against_sympy(data, p):
    ncols, rows = data
    mat = SparseMatrix(len(rows), ncols, tuple(rows))
    dense = mat.to_dense()
    dom = QQ if p == 0 else GF(p)
    ref = DomainMatrix([[dom(v) for v in r] for r in dense], (len(rows), ncols), dom).rank()
    assert matrix_rank(mat, p) == ref


def test_rank_with_fractions():
    mat = SparseMatrix(2, 2, ({0: Fraction(1, 2), 1: Fraction(1, 3)}, {0: 3, 1: 2}))
    assert matrix_rank(mat, 0) == 1


def test_cdga_json_roundtrip():
    c = build_koszul_tate(SurfaceDecomposition(0, 3, 3), [IO, IM, IO], FieldSpec(3))
    back = CDGA.from_json(c.to_json())
    assert back.to_json() == c.to_json()
    assert cohomology_dimensions(back, 7) == cohomology_dimensions(c, 7)


def test_cdga_errors():
    with pytest.raises(CDGAError):
        CDGA([Generator("z", 2, POLY), Generator("q", 3, EXT)], {"z": [(1, {"z": 1})]})
    with pytest.raises(CDGAError):
        CDGA([Generator("z", 2, POLY)], {"w": []})
    with pytest.raises(CDGAError):
        CDGA([Generator("x", 1, EXT), Generator("x", 1, EXT)])
    with pytest.raises(CDGAError):
        CDGA([Generator("x", 1, EXT), Generator("y", 3, EXT)], {"x": [(1, {"x": 2})]})


def test_parallel_matches_serial():
    c = build_koszul_tate(SurfaceDecomposition(1, 3, 3), [IO, IM, IO], FieldSpec(0))
    assert cohomology_dimensions(c, 8, jobs=2) == cohomology_dimensions(c, 8)


def test_verify_examples():
    res = verify_bg(CurveTopology(2, CurveKind.TYPE_II, 1), RealBundleType(2, 1, (1,)),
                    FieldSpec(0), 5)
    assert res.passed and res.oracle_dims == [1, 2, 1, 1, 2, 1]
    # genus one type I curves carry two circles
    res = verify_bg(CurveTopology(1, CurveKind.TYPE_I, 2), RealBundleType(2, 0, (1, 1)),
                    FieldSpec(0), 6)
    assert res.passed and res.oracle_dims == [1, 1, 1, 2, 2, 2, 2]
    res = verify_bg(CurveTopology(1, CurveKind.TYPE_I, 2), RealBundleType(2, 0, (0, 0)),
                    FieldSpec(0), 6)
    assert res.passed and res.oracle_dims == [1, 1, 0, 1, 2, 1, 0]
    assert "first_mismatch_degree" not in res.to_json()


def test_verify_n1_boundary():
    # a single boundary circle: the f = n branch has no y generators
    c = CurveTopology(2, CurveKind.TYPE_I, 1)
    dec = all_decompositions(c)[0]
    assert dec.boundary_circles == 1
    for bits in [(1,)]:
        res = verify_bg(c, RealBundleType(2, 1, bits), FieldSpec(0), 8)
        assert res.passed
    c0 = CurveTopology(0, CurveKind.TYPE_I, 1)
    res = verify_bg(c0, RealBundleType(2, 0, (0,)), FieldSpec(0), 8)
    assert res.passed and res.oracle_dims == [1, 0, 0, 0, 1, 0, 0, 0, 1]


def test_verify_reports_both_decompositions():
    c = CurveTopology(3, CurveKind.TYPE_II, 1)
    b = RealBundleType(2, 1, (1,))
    res = verify_bg(c, b, FieldSpec(3), 8)
    assert res.passed
    assert [(r["half_genus"], r["boundary_circles"]) for r in res.decompositions] == [(1, 2), (0, 4)]
    assert res.decompositions[0]["dims"] == res.decompositions[1]["dims"]
