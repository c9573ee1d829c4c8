import pytest

import classical
from quasismash.catalog import dual_bimodule, end_adjoint, graded_octonions, left_comodule_self, self_bicomodule
from quasismash.categories import QuasiAlgebra, verify_structure
from quasismash.errors import VerificationError
from quasismash.fields import QQ
from quasismash.morphism import Morphism
from quasismash.products import (_with_trivial_right, b_v, braided, clifford, clifford_base, clifford_tower,
                                 diagonal_crossed, diamond, generalized_smash, graded_defect, h_zero, hh_comodule,
                                 lr_smash, odot, omega, regular, scalar_right, smash, smash_bicomodule,
                                 smash_left_comodule, smash_right_comodule, smash_yd, two_sided_smash)
from quasismash.tensor import Tensor


def assoc_ok(P):
    return verify_structure(P, "algebra")["assoc"].passed


# -- classical limit: Hopf degenerations against textbook formulas -----------------------

def test_h_zero_of_hopf_is_adjoint(hopf):
    H0 = h_zero(hopf)
    assert H0.algebra.mul.data == hopf.algebra.mul.data
    assert classical.table(H0.left, 2) == classical.adjoint_action(hopf)
    assert classical.table(H0.yd, 1) == classical.h_zero_coaction(hopf)


def test_classical_smash(hopf):
    for A in (h_zero(hopf), dual_bimodule(hopf)):
        P = smash(A)
        assert P.algebra.mul.data == classical.product_tensor(A.dim, hopf.dim, classical.smash_rule(hopf, A))


def test_classical_generalized_smash(hopf):
    A, U = h_zero(hopf), self_bicomodule(hopf)
    P = generalized_smash(A, U)
    assert P.algebra.mul.data == classical.product_tensor(A.dim, U.dim, classical.gen_smash_rule(hopf, A, U))


def test_classical_lr_smash(hopf):
    D, U = dual_bimodule(hopf), self_bicomodule(hopf)
    P = lr_smash(D, U)
    assert P.algebra.mul.data == classical.product_tensor(D.dim, U.dim, classical.lr_smash_rule(hopf, D, U))


def test_classical_diagonal_crossed(hopf):
    D, U = dual_bimodule(hopf), self_bicomodule(hopf)
    P = diagonal_crossed(D, U)
    assert P.algebra.mul.data == classical.product_tensor(D.dim, U.dim, classical.diagonal_rule(hopf, D, U))


def test_classical_diamond(hopf):
    A = h_zero(hopf)
    for C in (h_zero(hopf), dual_bimodule(hopf)):
        P = diamond(C, A)
        assert P.algebra.mul.data == classical.product_tensor(C.dim, A.dim, classical.diamond_rule(hopf, C, A))


def test_omega_is_trivial_for_hopf(hopf):
    t = omega(self_bicomodule(hopf))
    one = hopf.algebra.unit
    expected = {}
    for (a,), x in one.data.items():
        expected[(a,) * 5] = x
    assert t.data == expected


# -- quasi-Hopf examples -----------------------------------------------------------------

def test_smash_of_h_zero_over_h2(h2_zero):
    P = smash(h2_zero)
    assert P.dim == 4 and assoc_ok(P)
    assert P.report.ok


def test_h_zero_unit_is_beta(h2):
    H0 = h_zero(h2)
    assert H0.algebra.unit.data == h2.beta.data


def test_b_v_of_end_with_adjoint(h2):
    E, vm = end_adjoint(h2)
    B = QuasiAlgebra(E, h2, kinds=("algebra",), name=E.name)
    Bv = b_v(B, Morphism(vm, regular(h2), B, "adjoint"))
    assert Bv.dim == 4
    assert verify_structure(Bv, "left-module-algebra")["ma1"].passed


def test_b_v_refuses_non_multiplicative_map(h2):
    B = left_comodule_self(h2)
    bad = Tensor([h2.algebra.axis] * 2, {(0, 0): 1, (1, 1): 1, (1, 0): 1})
    with pytest.raises(VerificationError):
        b_v(B, Morphism(bad, regular(h2), B, "bad"))


def test_generalized_smash_with_h_is_smash(h2_zero, h2):
    P = generalized_smash(h2_zero, left_comodule_self(h2))
    assert P.algebra.mul.data == smash(h2_zero).algebra.mul.data


def test_lr_smash_with_trivial_right_action_is_generalized_smash(h2_zero, h2):
    U = self_bicomodule(h2)
    Dr = _with_trivial_right(h2_zero)
    expected = generalized_smash(h2_zero, U).algebra.mul.data
    assert lr_smash(Dr, U, verify=False).algebra.mul.data == expected
    assert diagonal_crossed(Dr, U, verify=False).algebra.mul.data == expected


def test_lr_and_diagonal_associative_over_h2(h2):
    D, U = dual_bimodule(h2), self_bicomodule(h2)
    assert assoc_ok(lr_smash(D, U)) and assoc_ok(diagonal_crossed(D, U))


def test_two_sided_with_scalar_is_smash(h2_zero, h2):
    P = two_sided_smash(h2_zero, scalar_right(h2))
    assert P.dim == smash(h2_zero).dim
    assert P.algebra.mul.data == smash(h2_zero).algebra.mul.data


def test_diamond_equals_braided(h2_zero):
    P = diamond(h2_zero, h2_zero)
    assert P.dim == 4
    assert verify_structure(P, "left-module-algebra").ok
    assert P.algebra.mul.data == braided(h2_zero, h2_zero).algebra.mul.data


def test_odot_is_bimodule_algebra(h2, h2_zero):
    P = odot(dual_bimodule(h2), h2_zero)
    assert verify_structure(P, "bimodule-algebra").ok


def test_smash_comodule_structures(h2_zero):
    for build in (smash_left_comodule, smash_right_comodule, smash_bicomodule, smash_yd):
        P = build(h2_zero)
        assert verify_structure(P).ok, build.__name__


def test_hh_comodule(h2):
    assert verify_structure(hh_comodule(h2), "left-comodule-algebra").ok


@pytest.mark.parametrize("D_U", ["lr", "diag", "odot"])
def test_product_dimensions(h2, h2_zero, D_U):
    D, U = dual_bimodule(h2), self_bicomodule(h2)
    P = {"lr": lambda: lr_smash(D, U), "diag": lambda: diagonal_crossed(D, U),
         "odot": lambda: odot(D, h2_zero)}[D_U]()
    assert P.dim == 4


# -- Clifford process -----------------------------------------------------------------------

def test_clifford_of_scalars_is_complex_numbers():
    k = clifford_tower(())[0]
    assert k.dim == 1
    P = clifford(k, Tensor([k.algebra.axis] * 2, {(0, 0): 1}), -1)
    assert P.dim == 2 and assoc_ok(P)
    # basis 1, v with v v = -1
    assert P.algebra.mul.data == {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): -1}


@pytest.mark.parametrize("q", [-1, 2])
@pytest.mark.parametrize("signs", [(1, 1), (1, -1)])
def test_clifford_of_associative_is_associative(q, signs):
    A = clifford_base(3, QQ)
    sigma = Tensor([A.algebra.axis] * 2, {(0, 0): signs[0], (1, 1): signs[1]})
    P = clifford(A, sigma, q)
    assert assoc_ok(P)
    assert P.report["sigma_bar involutive"].passed


def test_clifford_rejects_non_involution():
    A = clifford_base(3, QQ)
    with pytest.raises(VerificationError):
        clifford(A, Tensor([A.algebra.axis] * 2, {(0, 0): 1, (1, 1): 2}), -1)


def test_clifford_tower_stages(h8):
    stages = clifford_tower((-1, -1, -1), h8)
    assert [P.dim for P in stages] == [1, 2, 4, 8]
    for P in stages[1:]:
        assert P.report["sigma_bar involutive"].passed


def test_graded_octonions_match_h8_reassociator(h8):
    O = graded_octonions(h8)
    assert verify_structure(O).ok
    assert graded_defect(O, h8.cocycle).passed
