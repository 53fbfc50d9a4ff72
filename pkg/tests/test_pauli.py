import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import matrix, phase_of
from veldkamp.errors import ContextError, InvalidParameterError, PauliParseError, WidthMismatchError
from veldkamp.pauli import (
    PauliElement, SignedPauli, all_elements, check_gq22, check_subgroup, is_generalized_quadrangle,
    isotropic_lines, mul, mul_signed, parse, symplectic_form, verify_magic_square,
)

P = parse


@pytest.mark.parametrize("s, x, z", [("XI", 0b01, 0b00), ("YY", 0b11, 0b11), ("ZII", 0b000, 0b001)])
def test_parse_encoding(s, x, z):
    # bit k is qubit k (leftmost letter)
    e = P(s)
    assert (e.n, e.x, e.z) == (len(s), x, z)
    assert str(e) == s


def test_parse_rejects_bad_letters():
    with pytest.raises(PauliParseError):
        P("XA")
    with pytest.raises(PauliParseError):
        P("")


@given(st.text(alphabet="IXYZ", min_size=1, max_size=6))
def test_format_roundtrip(s):
    assert P(s).format() == s


def test_mul_examples():
    assert mul(P("XI"), P("YY")) == P("ZY")
    prod = P("XI")
    for s in ("IX", "YY", "ZI", "IZ"):
        prod = mul(prod, P(s))
    assert prod == P("II")
    with pytest.raises(WidthMismatchError):
        mul(P("X"), P("XX"))


def test_mul_signed_examples():
    r = mul_signed(P("X"), P("Y"))
    assert r.element == P("Z") and r.phase == 1
    r = mul_signed(P("XI"), P("YY"))
    assert r.element == P("ZY") and r.phase == 1
    e = SignedPauli(P("YZ"), 3)
    assert mul_signed(e, P("II")) == e


def test_symplectic_examples():
    assert symplectic_form(P("XI"), P("IX")) == 0
    assert symplectic_form(P("XI"), P("ZI")) == 1
    assert symplectic_form(P("XX"), P("ZZ")) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_oracle(n):
    elems = all_elements(n)
    assert len(elems) == 4 ** n
    mats = {e: matrix(str(e)) for e in elems}
    for a, b in itertools.product(elems, repeat=2):
        r = mul_signed(a, b)
        assert phase_of(mats[a] @ mats[b], mats[r.element]) == r.phase
        anti = np.allclose(mats[a] @ mats[b], -(mats[b] @ mats[a]))
        assert symplectic_form(a, b) == int(anti)


elements3 = st.builds(lambda s: P(s), st.text(alphabet="IXYZ", min_size=3, max_size=3))


@given(elements3, elements3, elements3)
def test_group_laws(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, PauliElement.identity(3)) == a
    assert mul(a, a).is_identity
    lhs = mul_signed(mul_signed(a, b), c)
    rhs = mul_signed(a, mul_signed(b, c))
    assert lhs == rhs


def test_nonidentity_count():
    for n in (1, 2, 3):
        assert len(all_elements(n, include_identity=False)) == 4 ** n - 1


CLASSIC = [["XX", "YY", "ZZ"], ["YZ", "ZX", "XY"], ["ZY", "XZ", "YX"]]


def test_classic_magic_square():
    v = verify_magic_square([[P(s) for s in row] for row in CLASSIC])
    assert v.is_magic and v.sign_product == -1
    # oracle: multiply the dense matrices of every row and column
    rows = CLASSIC + [list(col) for col in zip(*CLASSIC)]
    for sign, ctx in zip(v.context_signs, rows):
        prod = matrix(ctx[0]) @ matrix(ctx[1]) @ matrix(ctx[2])
        assert np.allclose(prod, sign * np.eye(4))


def test_identity_grid_is_not_magic():
    v = verify_magic_square([[P("II")] * 3] * 3)
    assert v.context_signs == (1,) * 6 and not v.is_magic


def test_anticommuting_row_raises():
    grid = [[P("XI"), P("ZI"), P("YI")], [P("II")] * 3, [P("II")] * 3]
    with pytest.raises(ContextError, match="row 0"):
        verify_magic_square(grid)


def test_isotropic_lines():
    assert isotropic_lines([(P("XI"), P("ZI"), P("YI"))]) == []
    a = P("XY")
    assert isotropic_lines([(P("II"), a, a)]) == [(P("II"), a, a)]


def doily():
    pts = all_elements(2, include_identity=False)
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        if symplectic_form(a, b) == 0:
            lines.add(tuple(sorted((a, b, mul(a, b)))))
    return pts, sorted(lines)


def test_gq22_doily():
    pts, lines = doily()
    assert len(lines) == 15
    assert check_gq22(pts, lines)


def test_gq22_cardinality_error():
    fano = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
    with pytest.raises(InvalidParameterError):
        check_gq22(list(range(1, 8)), fano)


def test_grid_is_gq21_not_gq22():
    pts = [(r, c) for r in range(3) for c in range(3)]
    lines = [[(r, c) for c in range(3)] for r in range(3)] + [[(r, c) for r in range(3)] for c in range(3)]
    assert not is_generalized_quadrangle(pts, lines, 2, 2)
    assert is_generalized_quadrangle(pts, lines, 2, 1)


def test_check_subgroup():
    full = all_elements(2, include_identity=False)
    r = check_subgroup(full)
    assert (r.closed, r.rank, r.nondegenerate) == (True, 4, True)
    assert not check_subgroup([P("XI"), P("ZI")]).closed
    iso = check_subgroup([P("XI"), P("IX"), P("XX")])
    assert iso.closed and iso.rank == 2 and not iso.nondegenerate
