import itertools

import pytest

from quasismash.catalog import H2, H8, SW4, kZ2
from quasismash.elements import emul, unit_of
from quasismash.errors import VerificationError
from quasismash.fields import GF, QQ
from quasismash.quasi_hopf import (QuasiHopfAlgebra, canonical_pairs, gauge_twist, verify_canonical_pairs,
                                   verify_drinfeld_twist, verify_quasi_hopf)
from quasismash.tensor import Tensor

AXIOMS = ("q1", "q2", "q3", "q4", "q5", "q6")


def rebuild(H, **changes):
    data = dict(delta=H.delta, eps=H.eps, phi=H.phi, S=H.S, alpha=H.alpha, beta=H.beta)
    data.update(changes)
    return QuasiHopfAlgebra(H.name, H.algebra, **data)


def one_one(H, legs=2):
    return Tensor([H.algebra.axis] * legs, {(0,) * legs: 1} if H.name in ("kZ2", "SW4") else
                  {k: 1 for k in itertools.product(range(H.dim), repeat=legs)}, H.field)


def failing(rep):
    return {c.label for c in rep.failures()}


@pytest.mark.parametrize("make", [H2, kZ2, SW4])
def test_catalog_axioms_pass(make):
    rep = verify_quasi_hopf(make())
    assert rep.ok, rep.text()
    for label in AXIOMS:
        assert rep[label].passed


def test_h8_axioms_pass(h8):
    assert verify_quasi_hopf(h8).ok


@pytest.mark.parametrize("p", [3, 7])
def test_axioms_over_prime_fields(p):
    assert verify_quasi_hopf(H2(GF(p))).ok
    assert verify_quasi_hopf(SW4(GF(p))).ok


def test_h8_over_f3():
    assert verify_quasi_hopf(H8(GF(3))).ok


def test_h2_reassociator_is_sign_on_top_corner(h2):
    # 1 (x) 1 (x) 1 - 2 p1 (x) p1 (x) p1 in the idempotent basis
    expected = {k: (-1 if k == (1, 1, 1) else 1) for k in itertools.product(range(2), repeat=3)}
    assert h2.phi.data == expected
    assert h2.beta.data == {(0,): 1, (1,): -1}
    assert h2.S.data == {(0, 0): 1, (1, 1): 1}


def test_h2_with_trivial_phi_still_passes(h2):
    assert verify_quasi_hopf(rebuild(h2, phi=one_one(h2, 3), beta=h2.algebra.unit)).ok


def test_non_cocycle_phi_fails_pentagon(h2):
    # omega(x, y, z) = (-1)^(xy) has coboundary (-1)^(xy), so the pentagon must fail
    phi = Tensor(h2.phi.axes, {k: (-1 if k[0] and k[1] else 1) for k in itertools.product(range(2), repeat=3)})
    rep = verify_quasi_hopf(rebuild(h2, phi=phi))
    assert "q3" in failing(rep)
    assert rep["q3"].witness is not None


def test_group_algebra_with_wrong_alpha_fails_q6(kz2):
    g = Tensor([kz2.algebra.axis], {(1,): 1})
    rep = verify_quasi_hopf(rebuild(kz2, alpha=g))
    assert not rep["q6"].passed


def test_alpha_beta_are_normalized(kz2):
    # rescaling alpha by c and beta by 1/c is undone at load time
    H = rebuild(kz2, alpha=kz2.alpha.scale(2), beta=kz2.beta.scale(QQ.parse("1/2")))
    assert H.alpha == kz2.alpha and H.beta == kz2.beta


def test_normalization_keeps_alpha_beta_product(kz2):
    H = rebuild(kz2, alpha=kz2.alpha.scale(2), beta=kz2.beta.scale(QQ.parse("1/3")))
    assert H.counit(H.alpha) == 1
    assert H.algebra.product(H.alpha, H.beta) == kz2.algebra.product(kz2.alpha, kz2.beta).scale(
        QQ.parse("2/3"))
    assert not verify_quasi_hopf(H).ok


def test_degenerate_alpha_refused(kz2):
    bad = Tensor([kz2.algebra.axis], {(0,): 1, (1,): -1})
    with pytest.raises(VerificationError):
        rebuild(kz2, alpha=bad)


# -- gauge transformations ---------------------------------------------------------------

def test_identity_gauge_changes_nothing(h2):
    F = one_one(h2)
    HF = gauge_twist(h2, F)
    for key in ("delta", "phi", "alpha", "beta"):
        assert getattr(HF, key) == getattr(h2, key)


def test_sign_gauge_gives_quasi_hopf(h2):
    # F = 1 (x) 1 - 2 p1 (x) p1 is its own inverse
    F = Tensor([h2.algebra.axis] * 2, {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): -1})
    assert emul(F, F, [h2.algebra] * 2) == unit_of([h2.algebra] * 2)
    assert verify_quasi_hopf(gauge_twist(h2, F)).ok


def test_twist_and_untwist_round_trip(sw4):
    # a counital invertible twist on SW4: 1 (x) 1 + x (x) gx
    F = Tensor([sw4.algebra.axis] * 2, {(0, 0): 1, (2, 3): 1})
    F_inv = Tensor([sw4.algebra.axis] * 2, {(0, 0): 1, (2, 3): -1})
    HF = gauge_twist(sw4, F, F_inv)
    assert verify_quasi_hopf(HF).ok
    back = gauge_twist(HF, F_inv, F)
    for key in ("delta", "phi", "alpha", "beta"):
        assert getattr(back, key) == getattr(sw4, key)


# -- Drinfeld twist and canonical pairs --------------------------------------------------

def test_drinfeld_twist_of_hopf_is_trivial(hopf):
    t = hopf.twist
    one = unit_of([hopf.algebra] * 2)
    assert t.f == one and t.f_inv == one
    assert t.gamma == one and t.delta == one


def test_drinfeld_twist_h2(h2):
    rep = verify_drinfeld_twist(h2)
    assert rep.ok, rep.text()
    assert rep["ca"].passed and rep["f-inverse"].passed


def test_canonical_pairs_of_hopf_are_trivial(hopf):
    pq = canonical_pairs(hopf)
    one = unit_of([hopf.algebra] * 2)
    assert pq.p == one and pq.q == one


def test_canonical_pairs_relations(h2, h8):
    assert verify_canonical_pairs(h2)["relatiep"].passed
    assert verify_canonical_pairs(h8)["relatieq"].passed


def test_mutated_twist_breaks_ca(h2):
    rep = verify_drinfeld_twist(h2)
    assert rep.ok
    h = rebuild(h2)
    h._twist = type(h2.twist)(**{**h2.twist.__dict__, "f": h2.twist.f.scale(-1) + one_one(h2).scale(2)})
    assert not verify_drinfeld_twist(h).ok
