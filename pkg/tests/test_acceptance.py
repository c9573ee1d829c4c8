"""One test per acceptance criterion; each prints a single PASS/FAIL line with its timing."""
import json
import random
import time
from contextlib import contextmanager

import pytest

import classical
from mutations import bump, random_conjugation, regular_rep, scaled
from quasismash import cli
from quasismash.catalog import (H2, H8, SW4, dual_bimodule, end_adjoint, kZ2, self_bicomodule)
from quasismash.categories import QuasiAlgebra, verify_structure
from quasismash.errors import VerificationError
from quasismash.fields import QQ
from quasismash.isomorphisms import (braid_iterate, clifford_iterate, h0_square, nu_pair, pi_iso,
                                     psi_partic, psi_xi, universal_diagonal, universal_factor,
                                     universal_smash, universal_smash_all, yd_pi, yd_t1_expected,
                                     yd_triple)
from quasismash.morphism import Morphism, check_equal
from quasismash.products import (clifford_base, clifford_tower, diagonal_crossed, diamond,
                                 graded_defect, h_zero, lr_smash, regular, smash)
from quasismash.quasi_hopf import verify_drinfeld_twist, verify_quasi_hopf
from quasismash.report import compare
from quasismash.tensor import Tensor

RANDOM_CASES = 20


@pytest.fixture
def criterion(capsys):
    """``with criterion(n, limit):`` times the block, prints one verdict line, then asserts."""
    @contextmanager
    def run(number, limit=None):
        state = {"ok": True, "notes": []}
        start = time.perf_counter()
        try:
            yield state
        except AssertionError as exc:
            state["ok"] = False
            state["notes"].append(str(exc).splitlines()[0] if str(exc) else "assertion failed")
            raise
        finally:
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                state["ok"] = False
                state["notes"].append(f"took {elapsed:.2f}s, limit {limit}s")
            verdict = "PASS" if state["ok"] else "FAIL"
            note = f" [{'; '.join(state['notes'])}]" if state["notes"] else ""
            with capsys.disabled():
                print(f"\ncriterion {number:>2}: {verdict} ({elapsed:.2f}s){note}")
            if state["ok"] is False and limit is not None and elapsed >= limit:
                pytest.fail(f"criterion {number} exceeded its time limit")
    return run


def passed(report, *labels):
    by_label = {c.label: c for c in report.checks}
    missing = [l for l in labels if l not in by_label]
    bad = [l for l in labels if l in by_label and not by_label[l].passed]
    assert not missing, f"checks not run: {missing}"
    assert not bad, f"checks failed: {bad}"
    assert report.ok, f"report failures: {[c.label for c in report.failures()]}"


AXIOMS = ("q1", "q2", "q3", "q4", "q5", "q6")


def test_criterion_01_axiom_suites(criterion):
    for make, limit in ((H2, 1), (H8, 60)):
        with criterion(f"1 {make.__name__}", limit):
            passed(verify_quasi_hopf(make()), *AXIOMS)


def test_criterion_02_drinfeld_twist(criterion):
    for make in (H2, H8):
        with criterion(f"2 {make.__name__}", 10):
            # muchmoref compares Phi twisted by f against S(X3) (x) S(X2) (x) S(X1)
            passed(verify_drinfeld_twist(make()), "ca", "moref", "muchmoref", "relg")


def test_criterion_03_smash_associativity(criterion):
    for make, limit, triples in ((H2, 1, 64), (H8, 600, 64 ** 3)):
        with criterion(f"3 {make.__name__}", limit):
            P = smash(h_zero(make()), verify=False)
            assert P.dim ** 3 == triples
            assert verify_structure(P, "algebra")["assoc"].passed


def test_criterion_04_classical_limit(criterion):
    with criterion(4):
        for H in (kZ2(QQ), SW4(QQ)):
            A, D, U = h_zero(H), dual_bimodule(H), self_bicomodule(H)
            cases = [
                (smash(A), A.dim, H.dim, classical.smash_rule(H, A)),
                (lr_smash(D, U), D.dim, U.dim, classical.lr_smash_rule(H, D, U)),
                (diagonal_crossed(D, U), D.dim, U.dim, classical.diagonal_rule(H, D, U)),
                (diamond(A, A), A.dim, A.dim, classical.diamond_rule(H, A, A)),
            ]
            for P, d1, d2, rule in cases:
                assert P.algebra.mul.data == classical.product_tensor(d1, d2, rule), \
                    f"{P.name} over {H.name} differs from the classical formula"


def test_criterion_05_pi(criterion):
    with criterion(5):
        A = h_zero(H2())
        Pi = pi_iso(A)
        passed(Pi.report, "bijective", "unital", "multiplicative", "action-intertwining",
               "equals-universal-factor")
        # independent of the report: rebuild the factorization and compare entrywise
        P, D = Pi.smash, Pi.diamond
        i0 = Morphism(P.maps["i0"].matrix, A, P.bj, "i0")
        j = Morphism(P.maps["j"].matrix, D.parts[1], P.bj, "j")
        w, _ = universal_factor(D, P.bj, i0, j)
        assert w.matrix.data == Pi.matrix.data


def test_criterion_06_yd_pi(criterion):
    with criterion(6):
        f = yd_pi(h_zero(H2()))
        suite = [c.label for c in f.report.checks if c.label.startswith("(A#H)^j")]
        assert len(suite) >= 10
        passed(f.report, "bijective", "unital", "multiplicative", "action-intertwining",
               "coaction-intertwining", *suite)


def test_criterion_07_psi_xi(criterion):
    with criterion(7, 5):
        H = H2()
        E, vm = end_adjoint(H)
        B = QuasiAlgebra(E, H, kinds=("algebra",), name=E.name)
        psi = psi_xi(B, Morphism(vm, regular(H), B, "adjoint"))
        xi = psi.inverse_map
        assert psi.source.dim == 8
        passed(psi.report, "left-inverse", "right-inverse", "multiplicative", "xi multiplicative")
        ident = {(i, i): 1 for i in range(8)}
        assert psi.compose(xi).matrix.data == ident and xi.compose(psi).matrix.data == ident


def test_criterion_08_duality(criterion, capsys):
    with criterion(8):
        code = cli.main(["--json", "demo", "duality", "--algebra", "H2"])
        out = capsys.readouterr().out
        report = json.loads(out)
        checks = {c["label"]: c for c in report["checks"]}
        assert checks["identification"]["passed"] and checks["identification-unit"]["passed"]
        kappa_valid = any(c["passed"] for l, c in checks.items() if l.startswith("kappa["))
        assert code == (0 if kappa_valid else 3)
        assert report["partial"] is (not kappa_valid)


def test_criterion_09_h0_square(criterion):
    with criterion(9):
        H = H2()
        passed(h0_square(H).report, "bijective", "action-intertwining", "coaction-intertwining")
        passed(psi_partic(H).report, "Psi-j=Delta")


def test_criterion_10_nu(criterion):
    with criterion(10):
        H = H2()
        D, U = dual_bimodule(H), self_bicomodule(H)
        nu = nu_pair(D, U)
        passed(nu.report, "multiplicative", "nu^-1 multiplicative", "left-inverse", "right-inverse")
        LR = lr_smash(D, U)
        w = universal_diagonal(D, U, LR, LR.maps["j"], LR.maps["Lambda"])
        assert w.report.ok and w.matrix.data == nu.matrix.data


def test_criterion_11_braid(criterion):
    with criterion(11):
        A = h_zero(H2())
        out = braid_iterate(*yd_triple(A, A, A))
        passed(out["report"], "braid", "associator-iso")
        T1 = out["T1"]
        assert compare("T1", T1.tensor, yd_t1_expected(T1), 2).passed
        C = clifford_base(-1, QQ)
        sigma = Tensor([C.algebra.axis] * 2, {(0, 0): 1, (1, 1): -1}, QQ)
        cl = clifford_iterate(C, sigma, -1, -1)
        passed(cl["report"], "braid", "clifford-of-clifford")
        assert cl["left"].algebra.mul.data == cl["clifford"].algebra.mul.data


@pytest.mark.xfail(strict=True, reason="three doublings by the product rule on A (x) C(k, q) from k "
                   "give an associative Clifford algebra; no step introduces the H8 associator "
                   "(see the decisions ledger)")
def test_criterion_12_clifford_octonions(criterion):
    with criterion(12):
        H = H8()
        stages = clifford_tower((-1, -1, -1), H)
        assert [P.dim for P in stages] == [1, 2, 4, 8]
        for P in stages[1:]:
            assert P.report["sigma_bar involutive"].passed
        defect = graded_defect(stages[-1], H.cocycle)
        assert defect.passed, f"associativity defect differs from the H8 associator at {defect.witness}"


def _violations(call):
    with pytest.raises(VerificationError) as info:
        call()
    bad = info.value.report.failures()
    assert all(c.witness is not None for c in bad)
    return {c.label for c in bad}


def test_criterion_13_universal_properties(criterion):
    with criterion(13):
        H = H2()
        A = h_zero(H)
        P = smash(A)
        v0, u0 = P.maps["j"], Morphism(P.maps["i0"].matrix, A, P, "u")
        E, L = regular_rep(P)
        rng = random.Random(2024)
        for _ in range(RANDOM_CASES):
            c = random_conjugation(E, rng)
            w = universal_smash_all(A, E, c.compose(L.compose(v0)), c.compose(L.compose(u0)))
            passed(w.report, "unital", "multiplicative", "w-j=v", "w-i0=u", "unique", "bridge-same-w")
            assert check_equal("w", w, c.compose(L)).passed
        g0 = L.compose(v0)
        cj = random_conjugation(E, rng)
        assert "v-algebra-map" in _violations(lambda: universal_smash(A, E, scaled(g0, 2), L.compose(u0)))
        assert "u-module-algebra-map" in _violations(
            lambda: universal_smash(A, E, g0, L.compose(bump(u0, 1, 0))))
        assert "u-module-algebra-map" in _violations(lambda: universal_smash(A, E, cj.compose(g0), L.compose(u0)))

        D, U = dual_bimodule(H), self_bicomodule(H)
        DC = diagonal_crossed(D, U)
        E, L = regular_rep(DC)
        gamma0, v0 = L.compose(DC.maps["j"]), L.compose(DC.maps["Gamma"])
        for _ in range(RANDOM_CASES):
            c = random_conjugation(E, rng)
            w = universal_diagonal(D, U, E, c.compose(gamma0), c.compose(v0))
            passed(w.report, "unital", "multiplicative", "w-Gamma=v", "w-j=gamma", "unique")
            assert check_equal("w", w, c.compose(L)).passed
        cj = random_conjugation(E, rng)
        assert "gamma-algebra-map" in _violations(lambda: universal_diagonal(D, U, E, scaled(gamma0, 2), v0))
        assert "cond1" in _violations(lambda: universal_diagonal(D, U, E, cj.compose(gamma0), v0))
        assert "cond2" in _violations(lambda: universal_diagonal(D, U, E, gamma0, bump(v0, 1, 0)))
        assert "cond3" in _violations(lambda: universal_diagonal(D, U, E, gamma0, bump(v0, 0, 0)))
