import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quasismash.catalog import (H2, H8, FiniteGroup, GroupCocycle, function_algebra,
                                sign_cocycle_h2)
from quasismash.errors import VerificationError
from quasismash.fields import QQ, field_from_spec
from quasismash.quasi_hopf import gauge_twist, verify_quasi_hopf
from quasismash.tensor import Tensor


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_trivial_cocycle_gives_hopf(rank):
    G = FiniteGroup.elementary_abelian(rank)
    H = function_algebra(G, GroupCocycle(G, lambda x, y, z: 1))
    assert verify_quasi_hopf(H).ok
    n = G.order
    assert H.phi.data == {xyz: 1 for xyz in itertools.product(range(n), repeat=3)}
    assert H.beta.data == H.algebra.unit.data


def test_h2_is_deterministic():
    G = FiniteGroup.elementary_abelian(1)
    again = function_algebra(G, GroupCocycle(G, sign_cocycle_h2), "H2")
    first = H2()
    for name in ("phi", "phi_inv", "delta", "S", "alpha", "beta"):
        assert getattr(first, name).data == getattr(again, name).data


def test_non_cocycle_refused():
    G = FiniteGroup.elementary_abelian(1)
    with pytest.raises(VerificationError):
        GroupCocycle(G, lambda x, y, z: 2 if x and y and z else 1)
    with pytest.raises(VerificationError, match="normalized"):
        GroupCocycle(G, lambda x, y, z: -1)


def test_h8_associator_is_a_sign_cocycle():
    H = H8()
    assert set(H.cocycle.values.values()) == {1, -1}
    assert H.cocycle.witness() is None


@pytest.mark.parametrize("spec", ["Fp:3", "Fp:5"])
def test_catalog_over_prime_fields(spec):
    assert verify_quasi_hopf(H8(field_from_spec(spec))).ok


nonzero = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda q: q != 0)


@settings(max_examples=15, deadline=None)
@given(st.lists(nonzero, min_size=49, max_size=49))
def test_any_normalized_gauge_twists_h8_into_quasi_hopf(values):
    # F = sum F(x, y) p_x (x) p_y with F(0, y) = F(x, 0) = 1 is a gauge transformation of k^G
    H = H8()
    it = iter(values)
    data = {(x, y): (1 if x == 0 or y == 0 else next(it)) for x in range(8) for y in range(8)}
    F = Tensor([H.algebra.axis] * 2, data, QQ)
    assert verify_quasi_hopf(gauge_twist(H, F)).ok
