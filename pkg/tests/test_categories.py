import itertools

import pytest

from quasismash.catalog import dual_bimodule, end_algebra, self_bicomodule
from quasismash.categories import (QuasiAlgebra, TwistingMap, braiding_twist, flip, inclusions, twisted_tensor,
                                   universal_factor, verify_braiding, verify_structure, verify_twisting_map,
                                   yd_tensor)
from quasismash.errors import StructuralError, VerificationError
from quasismash.fields import QQ
from quasismash.morphism import Morphism, check_equal, identity
from quasismash.products import _clifford_twist, clifford_base, diamond, h_zero
from quasismash.tensor import Tensor


def mutate(t: Tensor, key, delta=1):
    data = dict(t.data)
    data[key] = data.get(key, 0) + delta
    return Tensor(t.axes, data, t.field)


def labels(rep):
    return [c.label for c in rep.checks]


def test_self_bicomodule_suite(h2):
    rep = verify_structure(self_bicomodule(h2))
    assert rep.ok, rep.text()
    for lab in ("rca1", "rca2", "rca3", "rca4", "lca1", "lca2", "lca3", "lca4", "bca1", "bca2", "bca3", "bca4"):
        assert lab in rep


def test_left_and_right_suites_agree_on_self_coaction(h2, h8):
    for H in (h2, h8):
        U = self_bicomodule(H)
        left = verify_structure(U, "left-comodule-algebra")
        right = verify_structure(U, "right-comodule-algebra")
        assert left.ok and right.ok


def test_dual_bimodule_suite(h2):
    rep = verify_structure(dual_bimodule(h2))
    assert rep.ok
    assert {"bma1", "bma2", "bma3"} <= set(labels(rep))


def test_h_zero_is_yd_algebra(h2, h8):
    for H in (h2, h8):
        rep = verify_structure(h_zero(H))
        assert rep.ok
        assert {"ma1", "ma2", "ma3", "yd1", "yd2", "yd3"} <= set(labels(rep))


def test_hopf_degeneration_suites(hopf):
    # with trivial reassociator (ma1) is strict associativity of the action
    assert verify_structure(h_zero(hopf)).ok
    assert verify_structure(dual_bimodule(hopf)).ok
    assert verify_structure(self_bicomodule(hopf)).ok


def test_mutated_action_is_caught(h2_zero):
    bad = h2_zero.with_structure(left=mutate(h2_zero.left, (1, 0, 1), 1))
    rep = verify_structure(bad, "left-module-algebra")
    assert not rep.ok
    assert all(c.witness is not None for c in rep.failures() if c.label.startswith("ma"))


def test_mutated_coaction_is_caught(h2):
    U = self_bicomodule(h2)
    bad = U.with_structure(rho=mutate(U.rho, (0, 0, 1), 1))
    assert not verify_structure(bad, "right-comodule-algebra").ok


def test_flip_gives_ordinary_tensor_product():
    A, B = clifford_base(-1, QQ), clifford_base(2, QQ)
    R = flip(A, B)
    assert verify_twisting_map(R).ok
    P = twisted_tensor(R)
    expected = {}
    for (a, a2, a3), x in A.algebra.mul.data.items():
        for (b, b2, b3), y in B.algebra.mul.data.items():
            expected[(2 * a + b, 2 * a2 + b2, 2 * a3 + b3)] = x * y
    assert P.algebra.mul.data == expected


def test_diamond_twisting_map(h2_zero):
    P = diamond(h2_zero, h2_zero)
    assert P.twisting.report.ok
    assert P.report["explicit"].passed


def test_clifford_twist_with_non_multiplicative_sigma():
    A = clifford_base(-1, QQ)
    Cq = clifford_base(-1, QQ, name="C2", generator="w")
    # sigma fixes 1 and sends v to v + 1: linear and unital, not multiplicative
    sigma = Tensor([A.algebra.axis] * 2, {(0, 0): 1, (1, 1): 1, (1, 0): 1})
    R = TwistingMap(A, Cq, _clifford_twist(A, Cq, sigma), "vect")
    rep = verify_twisting_map(R)
    assert not rep["twist2"].passed
    assert rep["twist2"].witness is not None
    with pytest.raises(VerificationError):
        twisted_tensor(R)


def test_braided_tensor_is_yd_algebra(h2_zero):
    P = twisted_tensor(braiding_twist(h2_zero, h2_zero))
    assert verify_structure(P, "yd-algebra").ok


def test_braiding_is_natural(h2_zero):
    rep = verify_braiding(h2_zero, h2_zero)
    assert rep.ok
    assert rep["braiding-invertible"].passed


def test_yd_tensor_of_h_zero(h2_zero):
    M = yd_tensor(h2_zero, h2_zero)
    assert M.dim == 4 and M.left is not None and M.yd is not None


def test_inclusions_factor_as_identity(h2_zero):
    P = diamond(h2_zero, h2_zero)
    i_a, i_b = inclusions(P)
    w, rep = universal_factor(P, P, i_a, i_b)
    assert rep.ok
    assert check_equal("id", w, identity(P)).passed


def _regular_rep(A, T=None, T_inv=None):
    """``a -> T L_a T^-1`` into End(A) (plain algebra), as an algebra map of A."""
    n = A.dim
    E = end_algebra(A.algebra)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    T, T_inv = T or ident, T_inv or ident
    data = {}
    for a in range(n):
        L = [[0] * n for _ in range(n)]
        for (x, j, k), c in A.algebra.mul.data.items():
            if x == a:
                L[k][j] += c
        M = [[sum(T[i][p] * L[p][q] * T_inv[q][j] for p in range(n) for q in range(n)) for j in range(n)]
             for i in range(n)]
        for i in range(n):
            for j in range(n):
                if M[i][j]:
                    data[(a, i * n + j)] = M[i][j]
    X = QuasiAlgebra(E, A.H, kinds=("algebra",), name=E.name)
    return X, Tensor([A.algebra.axis, E.axis], data, A.field)


def test_universal_factor_rejects_broken_commutation(h2_zero):
    P = diamond(h2_zero, h2_zero)
    X, left = _regular_rep(h2_zero)
    _, conj = _regular_rep(h2_zero, [[1, 1], [0, 1]], [[1, -1], [0, 1]])
    u, v = Morphism(left, h2_zero, X, "u"), Morphism(conj, h2_zero, X, "v")
    with pytest.raises(VerificationError) as info:
        universal_factor(P, X, u, v)
    assert info.value.report.label == "comgen" and info.value.report.witness is not None


def test_unknown_tag_rejected(h2_zero):
    with pytest.raises(StructuralError):
        TwistingMap(h2_zero, h2_zero, Tensor([("x", 2)] * 4), "sideways")


def test_category_needs_actions():
    A = clifford_base(-1, QQ)
    with pytest.raises(StructuralError):
        flip(A, A, "left")
