import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasismash.elements import einverse, emul, unit_of
from quasismash.errors import InconsistentSystem, NotInvertible, StructuralError
from quasismash.fields import GF, QQ, field_from_spec
from quasismash.linalg import LinearMap, linear_solve, matrix_inverse
from quasismash.tensor import Tensor, contract, inverse_permutation, permute_legs

rationals = st.fractions(max_denominator=12).map(lambda x: QQ.normalize(x))


def sparse_tensors(shape, values=rationals):
    keys = st.tuples(*(st.integers(0, d - 1) for d in shape))
    return st.dictionaries(keys, values, max_size=12).map(
        lambda d: Tensor([(f"V{n}", n) for n in shape], d, QQ))


# -- fields ---------------------------------------------------------------------------

def test_rational_literals_round_trip():
    assert QQ.format(Fraction(-3, 2)) == "-3/2"
    assert QQ.parse("-3/2") == Fraction(-3, 2)
    assert QQ.parse("−3/2") == Fraction(-3, 2)
    assert QQ.parse("4/2") == 2 and type(QQ.parse("4/2")) is int


def test_prime_field_literals():
    F = GF(7)
    assert F.format(12) == "5 mod 7"
    assert F.parse("5 mod 7") == 5
    assert F.parse("1/2") == 4
    with pytest.raises(ValueError):
        F.parse("5 mod 11")


def test_field_specs():
    assert field_from_spec("Q") is QQ
    assert field_from_spec("Fp:5") == GF(5)
    for bad in ("Fp:2", "Fp:9", "R"):
        with pytest.raises(ValueError):
            field_from_spec(bad)


@given(rationals)
def test_rational_parse_inverts_format(x):
    assert QQ.parse(QQ.format(x)) == x


@given(st.integers(-50, 50), st.integers(1, 50))
def test_prime_field_inverse(a, b):
    F = GF(11)
    if a % 11:
        assert F.normalize(a * F.inv(a)) == 1
    assert F.parse(F.format(a)) == F.normalize(a)


# -- tensors --------------------------------------------------------------------------

def test_zero_entries_are_not_stored():
    t = Tensor([("a", 2)], {(0,): 0, (1,): Fraction(2, 2)})
    assert t.data == {(1,): 1}


def test_out_of_range_index_rejected():
    with pytest.raises(StructuralError):
        Tensor([("a", 2)], {(2,): 1})


def test_identity_contraction_is_neutral():
    t = Tensor([("a", 3), ("b", 2)], {(0, 1): 5, (2, 0): Fraction(-1, 3)})
    ident = Tensor([("a", 3), ("a", 3)], {(i, i): 1 for i in range(3)})
    assert contract(ident, t, [(1, 0)]) == t


def test_counit_contraction_on_group_algebra(kz2):
    # (id (x) eps) Delta = id, read as a matrix
    m = contract(kz2.delta, kz2.eps, [(2, 0)])
    assert m.data == {(i, i): 1 for i in range(kz2.dim)}


def test_phi_times_inverse_is_unit(h2):
    spaces = [h2.algebra] * 3
    inv = einverse(h2.phi, spaces)
    assert emul(h2.phi, inv, spaces) == unit_of(spaces)
    assert emul(inv, h2.phi, spaces) == unit_of(spaces)


def test_phi_of_h2_squares_to_one(h2):
    spaces = [h2.algebra] * 3
    assert emul(h2.phi, h2.phi, spaces) == unit_of(spaces)
    assert einverse(h2.phi, spaces) == h2.phi


def test_unit_is_self_inverse(h2):
    assert einverse(h2.algebra.unit, [h2.algebra]) == h2.algebra.unit


def test_zero_is_not_invertible(h2):
    with pytest.raises(NotInvertible):
        einverse(Tensor.zeros([h2.algebra.axis]), [h2.algebra])


def test_contract_dimension_mismatch_names_axes():
    with pytest.raises(StructuralError, match="dim 2.*dim 3"):
        contract(Tensor([("a", 2)]), Tensor([("b", 3)]), [(0, 0)])


def test_contract_label_mismatch_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        contract(Tensor([("a", 2)], {(0,): 1}), Tensor([("b", 2)], {(0,): 1}), [(0, 0)])
    assert any("different labels" in str(w.message) for w in caught)


def test_permute_identity_and_flip(h2):
    assert permute_legs(h2.phi, (0, 1, 2)) == h2.phi
    flip = (1, 0, 2)
    assert permute_legs(permute_legs(h2.phi, flip), flip) == h2.phi
    with pytest.raises(StructuralError):
        permute_legs(h2.phi, (0, 1))


def test_group_likes_have_symmetric_coproduct(kz2):
    # kZ2 basis is group-like: Delta(g) = g (x) g
    for g in range(kz2.dim):
        dg = Tensor(kz2.delta.axes[1:], {k[1:]: v for k, v in kz2.delta.data.items() if k[0] == g})
        assert permute_legs(dg, (1, 0)) == dg


@settings(max_examples=60, deadline=None)
@given(sparse_tensors((2, 3)), sparse_tensors((2, 3)), sparse_tensors((3, 2)), rationals)
def test_contract_is_bilinear(t1, t1b, t2, a):
    lhs = contract(t1.scale(a) + t1b, t2, [(1, 0)])
    rhs = contract(t1, t2, [(1, 0)]).scale(a) + contract(t1b, t2, [(1, 0)])
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(sparse_tensors((2, 3, 2)), st.permutations([0, 1, 2]))
def test_permute_then_inverse_is_identity(t, perm):
    assert permute_legs(permute_legs(t, perm), inverse_permutation(perm)) == t


# -- linear algebra -------------------------------------------------------------------

def test_identity_solve_returns_rhs():
    m = LinearMap.identity([("a", 3)], QQ)
    rhs = Tensor([("a", 3)], {(0,): 2, (2,): Fraction(1, 5)})
    assert linear_solve(m, rhs) == rhs


def test_antipode_of_h2_solves_alpha(h2):
    x = linear_solve(LinearMap(h2.S, 1), h2.alpha)
    assert x.data == h2.alpha.data


def test_inconsistent_system_carries_certificate():
    m = LinearMap(Tensor([("s", 2), ("t", 2)], {(0, 0): 1, (0, 1): 1}), 1)
    with pytest.raises(InconsistentSystem) as info:
        linear_solve(m, Tensor([("t", 2)], {(0,): 1}))
    cert = info.value.certificate
    assert cert and sum(cert.values()) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
def test_matrix_inverse_round_trip(rows):
    t = Tensor([("s", 3), ("t", 3)], {(i, j): rows[i][j] for i in range(3) for j in range(3)})
    try:
        inv = matrix_inverse(t)
    except NotInvertible:
        return
    prod = contract(t, inv, [(1, 0)])
    assert prod.data == {(i, i): 1 for i in range(3)}


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=4, max_size=4))
def test_algebra_inverse_two_sided(h2, coeffs):
    spaces = [h2.algebra] * 2
    x = Tensor([h2.algebra.axis] * 2, {(i // 2, i % 2): c for i, c in enumerate(coeffs)})
    try:
        y = einverse(x, spaces)
    except NotInvertible:
        return
    assert emul(x, y, spaces) == unit_of(spaces) == emul(y, x, spaces)
