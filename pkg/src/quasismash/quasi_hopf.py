"""Quasi-bialgebras and quasi-Hopf algebras with exact axiom checks.

Notation inside the formulas: ``X`` is a copy of the reassociator,
``x`` a copy of its inverse, ``h1, h2`` the two coproduct legs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra
from .elements import einverse, emul, unit_of
from .errors import NotInvertible, StructuralError, VerificationError
from .linalg import matrix_inverse
from .network import Net
from .report import Check, Report, all_of, compare
from .tensor import Tensor


class QuasiHopfAlgebra:
    """Algebra ``H`` with coproduct, counit, reassociator, antipode, alpha, beta.

    Tensors: ``delta[i, j, k]`` is the coefficient of ``e_j (x) e_k`` in
    ``Delta(e_i)``; ``S[i, j]`` of ``e_j`` in ``S(e_i)``; ``phi`` is an
    element of ``H (x) H (x) H``.
    """

    def __init__(self, name, algebra: Algebra, delta, eps, phi, S, alpha, beta,
                 phi_inv=None, S_inv=None, group=None, normalize=True):
        self.name = name
        self.algebra = algebra
        self.field = algebra.field
        d = algebra.dim
        expected = {"delta": (d, d, d), "eps": (d,), "phi": (d, d, d), "S": (d, d),
                    "alpha": (d,), "beta": (d,)}
        given = {"delta": delta, "eps": eps, "phi": phi, "S": S, "alpha": alpha, "beta": beta}
        for key, t in given.items():
            if t.shape != expected[key]:
                raise StructuralError(f"{name}: {key} has shape {t.shape}, expected {expected[key]}")
        lab = algebra.name
        self.delta = delta.relabel([lab] * 3)
        self.eps = eps.relabel([lab])
        self.phi = phi.relabel([lab] * 3)
        self.S = S.relabel([lab] * 2)
        alpha, beta = alpha.relabel([lab]), beta.relabel([lab])
        if normalize:
            ea, eb = self.counit(alpha), self.counit(beta)
            if not self.field.normalize(ea * eb):
                raise VerificationError(f"{name}: eps(alpha) eps(beta) = 0, cannot normalize")
            c = self.field.inv(ea)
            alpha, beta = alpha.scale(c), beta.scale(ea)
        self.alpha, self.beta = alpha, beta
        spaces = [algebra] * 3
        if phi_inv is None:
            phi_inv = einverse(self.phi, spaces)
        else:
            phi_inv = phi_inv.relabel([lab] * 3)
            one = unit_of(spaces)
            if emul(self.phi, phi_inv, spaces) != one or emul(phi_inv, self.phi, spaces) != one:
                raise NotInvertible(f"{name}: supplied inverse reassociator is wrong")
        self.phi_inv = phi_inv
        if S_inv is None:
            try:
                S_inv = matrix_inverse(self.S)
            except NotInvertible as exc:
                raise NotInvertible(f"{name}: antipode is not bijective") from exc
        self.S_inv = S_inv.relabel([lab] * 2)
        self.group = group
        self._twist = None
        self._pairs = None

    # -- conveniences ------------------------------------------------------
    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def counit(self, x: Tensor):
        return self.field.normalize(sum(v * self.eps[k] for k, v in x.data.items()))

    def element(self, coeffs) -> Tensor:
        return self.algebra.vector(coeffs)

    def net(self):
        return Net(self)

    def map(self, n_in, body, spaces=None):
        """Evaluate ``body(net, *inputs)`` over basis inputs of ``H``."""
        net = Net(self)
        spaces = spaces or [self.algebra] * n_in
        ins = [net.input(s) for s in spaces]
        outs = body(net, *ins)
        return net.evaluate(ins, outs)

    @property
    def is_hopf(self):
        return self.phi == unit_of([self.algebra] * 3)

    @property
    def twist(self) -> "DrinfeldTwistData":
        if self._twist is None:
            self._twist = drinfeld_twist(self)
        return self._twist

    @property
    def pairs(self) -> "CanonicalPairs":
        if self._pairs is None:
            self._pairs = canonical_pairs(self)
        return self._pairs

    def __repr__(self):
        return f"<QuasiHopfAlgebra {self.name} dim {self.dim}>"


def _lab(H, n):
    return [H.labels] * n


# -- quasi-bialgebra axioms ---------------------------------------------------

def verify_quasi_bialgebra(H: QuasiHopfAlgebra) -> Report:
    rep = Report(f"quasi-bialgebra {H.name}")
    L = _lab(H, 3)
    c = rep.add

    c(compare("assoc", H.map(3, lambda n, a, b, x: [(a * b) * x]),
              H.map(3, lambda n, a, b, x: [a * (b * x)]), 3, L))
    c(all_of("unit", [
        compare("unit", H.map(1, lambda n, a: [n.hunit() * a]), H.map(1, lambda n, a: [a]), 1, L),
        compare("unit", H.map(1, lambda n, a: [a * n.hunit()]), H.map(1, lambda n, a: [a]), 1, L)]))

    def delta_prod(n, a, b):
        return list(n.delta(a * b))

    def prod_delta(n, a, b):
        a1, a2 = n.delta(a)
        b1, b2 = n.delta(b)
        return [a1 * b1, a2 * b2]

    c(all_of("delta-multiplicative", [
        compare("delta", H.map(2, delta_prod), H.map(2, prod_delta), 2, L),
        compare("delta", H.map(0, lambda n: list(n.delta(n.hunit()))),
                H.map(0, lambda n: [n.hunit(), n.hunit()]))]))

    def eps_prod(n, a, b):
        n.eps(a * b)
        return []

    def prod_eps(n, a, b):
        n.eps(a)
        n.eps(b)
        return []

    def eps_one(n):
        n.eps(n.hunit())
        return []

    c(all_of("eps-multiplicative", [
        compare("eps", H.map(2, eps_prod), H.map(2, prod_eps), 2, L),
        compare("eps", H.map(0, eps_one), Tensor([], {(): 1}, H.field))]))

    def q1_lhs(n, h):
        h1, h2 = n.delta(h)
        h21, h22 = n.delta(h2)
        return [h1, h21, h22]

    def q1_rhs(n, h):
        X1, X2, X3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        a, b, h2 = n.delta2(h)
        return [X1 * a * x1, X2 * b * x2, X3 * h2 * x3]

    c(compare("q1", H.map(1, q1_lhs), H.map(1, q1_rhs), 1, L))

    def q2a(n, h):
        h1, h2 = n.delta(h)
        n.eps(h2)
        return [h1]

    def q2b(n, h):
        h1, h2 = n.delta(h)
        n.eps(h1)
        return [h2]

    ident = H.map(1, lambda n, h: [h])
    c(all_of("q2", [compare("q2", H.map(1, q2a), ident, 1, L),
                    compare("q2", H.map(1, q2b), ident, 1, L)]))

    c(compare("q3", pentagon_lhs(H), pentagon_rhs(H), 0, _lab(H, 4)))

    def q4(pos):
        def body(n):
            legs = list(n.Phi())
            n.eps(legs.pop(pos))
            return legs
        return body

    one2 = unit_of([H.algebra] * 2)
    c(all_of("q4", [compare("q4", H.map(0, q4(p)), one2, 0, _lab(H, 2)) for p in (1, 0, 2)]))

    one3 = unit_of([H.algebra] * 3)
    sp = [H.algebra] * 3
    c(all_of("phi-invertible", [compare("phi-invertible", emul(H.phi, H.phi_inv, sp), one3, 0, L),
                                compare("phi-invertible", emul(H.phi_inv, H.phi, sp), one3, 0, L)]))
    return rep


def pentagon_lhs(H):
    """``(1 (x) Phi)(id (x) Delta (x) id)(Phi)(Phi (x) 1)``."""
    def body(n):
        A1, A2, A3 = n.Phi()
        B1, B2, B3 = n.Phi()
        C1, C2, C3 = n.Phi()
        B2a, B2b = n.delta(B2)
        return [B1 * C1, A1 * B2a * C2, A2 * B2b * C3, A3 * B3]
    return H.map(0, body)


def pentagon_rhs(H):
    """``(id (x) id (x) Delta)(Phi)(Delta (x) id (x) id)(Phi)``."""
    def body(n):
        A1, A2, A3 = n.Phi()
        B1, B2, B3 = n.Phi()
        A3a, A3b = n.delta(A3)
        B1a, B1b = n.delta(B1)
        return [A1 * B1a, A2 * B1b, A3a * B2, A3b * B3]
    return H.map(0, body)


def verify_quasi_hopf(H: QuasiHopfAlgebra) -> Report:
    rep = verify_quasi_bialgebra(H)
    rep.subject = f"quasi-Hopf algebra {H.name}"
    L = _lab(H, 2)
    c = rep.add
    c(all_of("S-antimultiplicative", [
        compare("S", H.map(2, lambda n, a, b: [n.S(a * b)]),
                H.map(2, lambda n, a, b: [n.S(b) * n.S(a)]), 2, L),
        compare("S", H.map(0, lambda n: [n.S(n.hunit())]), H.map(0, lambda n: [n.hunit()]))]))
    ident = H.map(1, lambda n, h: [h])
    c(all_of("S-invertible", [
        compare("S-invertible", H.map(1, lambda n, h: [n.S(n.Sinv(h))]), ident, 1, L),
        compare("S-invertible", H.map(1, lambda n, h: [n.Sinv(n.S(h))]), ident, 1, L)]))

    def q5a(n, h):
        h1, h2 = n.delta(h)
        return [n.S(h1) * n.alpha() * h2]

    def q5b(n, h):
        h1, h2 = n.delta(h)
        return [h1 * n.beta() * n.S(h2)]

    def eps_times(elem):
        def body(n, h):
            n.eps(h)
            return [n.helem(elem)]
        return body

    c(all_of("q5", [compare("q5", H.map(1, q5a), H.map(1, eps_times(H.alpha)), 1, L),
                    compare("q5", H.map(1, q5b), H.map(1, eps_times(H.beta)), 1, L)]))

    def q6a(n):
        X1, X2, X3 = n.Phi()
        return [X1 * n.beta() * n.S(X2) * n.alpha() * X3]

    def q6b(n):
        x1, x2, x3 = n.Phi_inv()
        return [n.S(x1) * n.alpha() * x2 * n.beta() * n.S(x3)]

    one = H.algebra.unit
    c(all_of("q6", [compare("q6", H.map(0, q6a), one, 0, L),
                    compare("q6", H.map(0, q6b), one, 0, L)]))
    ea, eb = H.counit(H.alpha), H.counit(H.beta)
    c(Check("eps-alpha-beta", ea == 1 and eb == 1, None if ea == 1 and eb == 1 else (ea, eb),
            "eps(alpha) = eps(beta) = 1"))

    def epsS(n, h):
        n.eps(n.S(h))
        return []

    def epsh(n, h):
        n.eps(h)
        return []

    c(compare("eps-S", H.map(1, epsS), H.map(1, epsh), 1, L))
    return rep


# -- gauge transformations ------------------------------------------------------

@dataclass
class GaugeTransformation:
    F: Tensor
    F_inv: Tensor


def gauge(H: QuasiHopfAlgebra, F: Tensor, F_inv=None) -> GaugeTransformation:
    sp = [H.algebra] * 2
    if F.shape != (H.dim, H.dim):
        raise StructuralError(f"twist must live in H (x) H, got shape {F.shape}")
    F = F.relabel([H.algebra.name] * 2)
    if F_inv is None:
        F_inv = einverse(F, sp)
    elif emul(F, F_inv, sp) != unit_of(sp):
        raise NotInvertible("supplied inverse twist is wrong")

    def counit_leg(pos):
        def body(n):
            legs = list(n.helem(F))
            n.eps(legs.pop(pos))
            return legs
        return body

    one = H.algebra.unit
    for pos in (0, 1):
        if H.map(0, counit_leg(pos)) != one:
            raise StructuralError("twist is not counital")
    return GaugeTransformation(F, F_inv.relabel([H.algebra.name] * 2))


def twisted_phi(H, F: Tensor, F_inv: Tensor) -> Tensor:
    """``(1 (x) F)(id (x) Delta)(F) Phi (Delta (x) id)(F^-1)(F^-1 (x) 1)``."""
    def body(n):
        a1, a2 = n.helem(F)
        b1, b2 = n.helem(F)
        b2a, b2b = n.delta(b2)
        X1, X2, X3 = n.Phi()
        c1, c2 = n.helem(F_inv)
        c1a, c1b = n.delta(c1)
        d1, d2 = n.helem(F_inv)
        return [b1 * X1 * c1a * d1, a1 * b2a * X2 * c1b * d2, a2 * b2b * X3 * c2]
    return H.map(0, body)


def gauge_twist(H: QuasiHopfAlgebra, F: Tensor, F_inv=None, name=None) -> QuasiHopfAlgebra:
    """``H_F``: same algebra and antipode, coproduct and reassociator conjugated by ``F``."""
    g = gauge(H, F, F_inv)
    F, G = g.F, g.F_inv

    def delta_body(n, h):
        f1, f2 = n.helem(F)
        g1, g2 = n.helem(G)
        h1, h2 = n.delta(h)
        return [f1 * h1 * g1, f2 * h2 * g2]

    delta_F = H.map(1, delta_body)
    phi_F = twisted_phi(H, F, G)
    alpha_F = H.map(0, lambda n: _alpha_twist(n, G))
    beta_F = H.map(0, lambda n: _beta_twist(n, F))
    HF = QuasiHopfAlgebra(name or f"{H.name}_F", H.algebra, delta_F, H.eps, phi_F, H.S,
                          alpha_F, beta_F, S_inv=H.S_inv, group=H.group)
    HF.gauge_from = (H, g)
    return HF


def _alpha_twist(n, G):
    g1, g2 = n.helem(G)
    return [n.S(g1) * n.alpha() * g2]


def _beta_twist(n, F):
    f1, f2 = n.helem(F)
    return [f1 * n.beta() * n.S(f2)]


# -- the Drinfeld twist -----------------------------------------------------------

@dataclass
class DrinfeldTwistData:
    A: Tensor
    B: Tensor
    gamma: Tensor
    delta: Tensor
    f: Tensor
    f_inv: Tensor


def drinfeld_twist(H: QuasiHopfAlgebra) -> DrinfeldTwistData:
    def A_body(n):
        X1, X2, X3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        a, b = n.delta(x1)
        return [X1 * a, X2 * b, X3 * x2, x3]

    def B_body(n):
        X1, X2, X3 = n.Phi()
        a, b = n.delta(X1)
        x1, x2, x3 = n.Phi_inv()
        return [a * x1, b * x2, X2 * x3, X3]

    A = H.map(0, A_body)
    B = H.map(0, B_body)

    def gamma_body(n):
        a1, a2, a3, a4 = n.helem(A)
        return [n.S(a2) * n.alpha() * a3, n.S(a1) * n.alpha() * a4]

    def delta_body(n):
        b1, b2, b3, b4 = n.helem(B)
        return [b1 * n.beta() * n.S(b4), b2 * n.beta() * n.S(b3)]

    gamma = H.map(0, gamma_body)
    dlt = H.map(0, delta_body)

    def f_body(n):
        x1, x2, x3 = n.Phi_inv()
        u1, u2 = n.delta(x1)
        t1, t2 = n.delta(x2 * n.beta() * n.S(x3))
        g1, g2 = n.helem(gamma)
        return [n.S(u2) * g1 * t1, n.S(u1) * g2 * t2]

    def f_inv_body(n):
        x1, x2, x3 = n.Phi_inv()
        s1, s2 = n.delta(n.S(x1) * n.alpha() * x2)
        d1, d2 = n.helem(dlt)
        w1, w2 = n.delta(x3)
        return [s1 * d1 * n.S(w2), s2 * d2 * n.S(w1)]

    return DrinfeldTwistData(A, B, gamma, dlt, H.map(0, f_body), H.map(0, f_inv_body))


def verify_drinfeld_twist(H: QuasiHopfAlgebra) -> Report:
    t = H.twist
    rep = Report(f"Drinfeld twist of {H.name}")
    sp = [H.algebra] * 2
    L = _lab(H, 3)
    one = unit_of(sp)
    rep.add(all_of("f-inverse", [compare("f f^-1", emul(t.f, t.f_inv, sp), one, 0, L),
                                 compare("f^-1 f", emul(t.f_inv, t.f, sp), one, 0, L)]))
    try:
        direct = einverse(t.f, sp)
        rep.add(compare("f-inverse-by-solve", direct, t.f_inv, 0, L))
    except NotInvertible:
        rep.add(Check("f-inverse-by-solve", False, detail="f is singular"))

    def ca_lhs(n, h):
        f1, f2 = n.f()
        g1, g2 = n.f_inv()
        s1, s2 = n.delta(n.S(h))
        return [f1 * s1 * g1, f2 * s2 * g2]

    def ca_rhs(n, h):
        h1, h2 = n.delta(h)
        return [n.S(h2), n.S(h1)]

    rep.add(compare("ca", H.map(1, ca_lhs), H.map(1, ca_rhs), 1, L))

    def f_delta_alpha(n):
        f1, f2 = n.f()
        a1, a2 = n.delta(n.alpha())
        return [f1 * a1, f2 * a2]

    def delta_beta_finv(n):
        b1, b2 = n.delta(n.beta())
        g1, g2 = n.f_inv()
        return [b1 * g1, b2 * g2]

    rep.add(all_of("moref", [compare("moref", H.map(0, f_delta_alpha), t.gamma, 0, L),
                             compare("moref", H.map(0, delta_beta_finv), t.delta, 0, L)]))

    def reversed_phi(n):
        X1, X2, X3 = n.Phi()
        return [n.S(X3), n.S(X2), n.S(X1)]

    rep.add(compare("muchmoref", twisted_phi(H, t.f, t.f_inv), H.map(0, reversed_phi), 0, L))

    def relg(n):
        g1, g2 = n.f_inv()
        return [n.Sinv(n.alpha() * g2) * g1]

    rep.add(compare("relg", H.map(0, relg), H.beta, 0, L))
    return rep


# -- canonical elements p_R, q_R -------------------------------------------------

@dataclass
class CanonicalPairs:
    p: Tensor
    q: Tensor


def canonical_pairs(H: QuasiHopfAlgebra) -> CanonicalPairs:
    def p_body(n):
        x1, x2, x3 = n.Phi_inv()
        return [x1, x2 * n.beta() * n.S(x3)]

    def q_body(n):
        X1, X2, X3 = n.Phi()
        return [X1, n.Sinv(n.alpha() * X3) * X2]

    return CanonicalPairs(H.map(0, p_body), H.map(0, q_body))


def verify_canonical_pairs(H: QuasiHopfAlgebra) -> Report:
    rep = Report(f"canonical pairs of {H.name}")
    L = _lab(H, 3)

    def p_lhs(n):
        T1, T2, T3 = n.Phi()
        p1, p2 = n.pR()
        a, b = n.delta(p1)
        return [T1 * a, T2 * b, T3 * p2]

    def p_rhs(n):
        y1, y2, y3 = n.Phi_inv()
        ya, yb = n.delta(y2)
        p1, p2 = n.pR()
        return [y1, ya * p1, yb * p2 * n.S(y3)]

    def q_lhs(n):
        Y1, Y2, Y3 = n.Phi()
        Z1, Z2, Z3 = n.Phi()
        q1, q2 = n.qR()
        Ya, Yb = n.delta(Y2)
        return [Y1 * Z1, q1 * Ya * Z2, n.S(q2 * Yb * Z3) * Y3]

    def q_rhs(n):
        q1, q2 = n.qR()
        a, b = n.delta(q1)
        return [a, b, n.S(q2)]

    rep.add(compare("relatiep", H.map(0, p_lhs), H.map(0, p_rhs), 0, L))
    rep.add(compare("relatieq", H.map(0, q_lhs), H.map(0, q_rhs), 0, L))
    return rep
