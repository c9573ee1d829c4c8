"""Associative and quasi-associative products built from module and comodule algebras.

Every constructor returns a ``QuasiAlgebra`` whose parts are its tensor
factors, so legs of the product split into legs of the factors.  Canonical
maps are attached as ``.maps`` and the build-time verification as
``.report``; a construction whose own suite fails raises
``VerificationError`` (the inputs were not what they claimed to be).
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, tensor_algebra
from .categories import (QuasiAlgebra, TwistingMap, act_tree, carrier, require, trivial_left,
                         trivial_right, twisted_tensor, verify_structure)
from .errors import StructuralError, VerificationError
from .morphism import Morphism, check_morphism, from_body, identity
from .network import Net
from .report import Check, Report, all_of, compare
from .tensor import Tensor


def regular(H) -> QuasiAlgebra:
    """``H`` as a plain algebra over itself (the factor ``H`` of a smash product)."""
    return QuasiAlgebra(H.algebra, H, kinds=("algebra",), name=H.name, provenance=H.name)


def _product(name, parts, H, mul_body, kinds=("algebra",), provenance=None, unit_body=None):
    """Algebra on ``parts[0] (x) parts[1] (x) ...`` with ``mul_body(net, *left_legs, *right_legs)``."""
    P = carrier(name, parts, H)
    k = len(parts)

    def mul(n, p, q):
        return [n.join(mul_body(n, *n.split(p), *n.split(q)), P)]

    m = P.run(2, mul)
    if unit_body is None:
        def unit_body(n):
            return [n.unit(X) for X in parts]
    one = P.run(0, lambda n: [n.join(unit_body(n), P)])
    alg = Algebra(name, m, one, parts=P.algebra.parts)
    assert len(alg.parts) == k
    return QuasiAlgebra(alg, H, kinds=kinds, parts=parts, name=name, provenance=provenance or name)


def _finish(P: QuasiAlgebra, verify=True, extra=()):
    """Run the suites of ``P.kinds`` plus ``extra`` checks; raise on failure."""
    P.maps = getattr(P, "maps", {})
    if not verify:
        P.report = None
        return P
    rep = verify_structure(P)
    for c in extra:
        rep.add(c() if callable(c) else c)
    P.report = rep
    if not rep.ok:
        raise VerificationError(f"{P.provenance} fails {[c.label for c in rep.failures()]}", rep)
    return P


def _inputs_ok(*pairs):
    for A, kind in pairs:
        require(A, kind)


# -- B^v and H_0 --------------------------------------------------------------------

def b_v(B: QuasiAlgebra, v: Morphism, name=None, verify=True) -> QuasiAlgebra:
    """``B^v``: left module algebra on an associative ``B`` from an algebra map ``v: H -> B``.

    Product ``v(X1) b v(S(x1 X2) alpha x2 X3_1) b' v(S(x3 X3_2))``, unit
    ``v(beta)``, action ``v(h1) b v(S(h2))``.  When ``B`` carries a left
    coaction the Yetter-Drinfeld coaction of ``yd_coaction_bv`` is added.
    """
    H = v.source.H
    pre = check_morphism(v, structure=False, H=H)
    if not pre.ok:
        bad = pre.failures()[0]
        raise VerificationError(f"{v.name} is not an algebra map: {bad.label} fails at {bad.witness}", pre)
    name = name or f"{B.name}^{v.name}"

    def star(n, b, b2):
        X1, X2, X3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        X31, X32 = n.delta(X3)
        mid = n.S(x1 * X2) * n.alpha() * x2 * X31
        return [v(n, X1) * b * v(n, mid) * b2 * v(n, n.S(x3 * X32))]

    def action(n, h, b):
        h1, h2 = n.delta(h)
        return [v(n, h1) * b * v(n, n.S(h2))]

    def run(spaces, body):
        net = Net(H, field=B.field)
        ins = [net.input(s) for s in spaces]
        return net.evaluate(ins, body(net, *ins))

    m = run([B, B], star)
    one = run([], lambda n: [v(n, n.beta())])
    left = run([H.algebra, B], action)
    alg = Algebra(name, m, one, labels=B.labels, parts=B.algebra.parts)
    Bv = QuasiAlgebra(alg, H, kinds=("left-module-algebra",), left=left, parts=B.parts, name=name,
                      provenance=f"bv({B.provenance},{v.name})")
    Bv.base, Bv.v = B, v
    if B.lam is not None:
        Bv = Bv.with_structure(yd=yd_coaction_bv(Bv), kinds=("yd-algebra",))
        Bv.base, Bv.v = B, v
    return _finish(Bv, verify)


def yd_coaction_bv(Bv: QuasiAlgebra) -> Tensor:
    """``b -> X1 Y1_1 b[-1] g1 S(q2 Y2_2) Y3 (x) v(X2 Y1_2) b[0] v(g2 S(X3 q1 Y2_1))``.

    ``g1 (x) g2`` is the inverse Drinfeld twist and ``q1 (x) q2`` the element
    ``q_R``; products in the second factor are taken in the base algebra.
    """
    B, v = Bv.base, Bv.v

    def body(n, b):
        X1, X2, X3 = n.Phi()
        Y1, Y2, Y3 = n.Phi()
        g1, g2 = n.f_inv()
        q1, q2 = n.qR()
        Y11, Y12 = n.delta(Y1)
        Y21, Y22 = n.delta(Y2)
        bh, b0 = n.lam(b)
        h = X1 * Y11 * bh * g1 * n.S(q2 * Y22) * Y3
        return [h, v(n, X2 * Y12) * b0 * v(n, g2 * n.S(X3 * q1 * Y21))]
    return B.run(1, body)


def h_zero(H, verify=True) -> QuasiAlgebra:
    """``H_0``: ``H`` with the product of ``B^v`` for ``v = id``, as a Yetter-Drinfeld algebra."""
    from .catalog import left_comodule_self
    B = left_comodule_self(H)
    v = Morphism(identity(B).matrix, regular(H), B, "id")
    H0 = b_v(B, v, name=f"H0({H.name})", verify=False)
    H0.provenance = f"h0:{H.name}"
    return _finish(H0, verify)


# -- smash products -------------------------------------------------------------------

def smash(A: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``A # H``: ``(a # h)(a' # h') = (x1 . a)(x2 h1 . a') # x3 h2 h'``.

    Attaches ``j(h) = 1 # h`` and ``i0(a) = x1 . a # x2 beta S(x3)``, the latter
    into ``(A # H)^j`` (kept as ``.bj``), and records the relation
    ``i0(a) * j(h) = x1 . a # x2 h S(x3)`` in ``(A # H)^j``.
    """
    H = A.H
    if verify:
        _inputs_ok((A, "left-module-algebra"))
    Hq = regular(H)

    def mul(n, a, h, a2, h2):
        x1, x2, x3 = n.Phi_inv()
        k1, k2 = n.delta(h)
        return [n.act(x1, a) * n.act(x2 * k1, a2), x3 * k2 * h2]

    P = _product(f"{A.name}#{H.name}", (A, Hq), H, mul,
                 provenance=f"smash({A.name},{H.name})")
    j = from_body(Hq, P, lambda n, h: n.join([n.unit(A), h], P), H, "j")
    P.maps = {"j": j}
    _finish(P, verify)
    Pj = b_v(P, j, name=f"({P.name})^j", verify=False)

    def i0_body(n, a):
        x1, x2, x3 = n.Phi_inv()
        return n.join([n.act(x1, a), x2 * n.beta() * n.S(x3)], Pj)

    i0 = from_body(A, Pj, i0_body, H, "i0")
    P.maps["i0"] = i0
    P.bj = Pj
    if verify:
        Pj.report = verify_structure(Pj, "left-module-algebra")
        P.report.extend(Pj.report, "(A#H)^j ")
        P.report.extend(check_morphism(j, structure=False, H=H), "j ")
        P.report.extend(check_morphism(i0, H=H), "i0 ")
        P.report.add(_inainte(P))
        if not P.report.ok:
            raise VerificationError(f"{P.provenance}: canonical maps fail "
                                    f"{[c.label for c in P.report.failures()]}", P.report)
    return P


def _inainte(P):
    """``i0(a) * j(h) = x1 . a # x2 h S(x3)`` with ``*`` the product of ``(A # H)^j``."""
    A, Hq = P.parts
    H, Pj = P.H, P.bj
    i0, j = P.maps["i0"], P.maps["j"]

    def lhs(n, a, h):
        return [n.add(Pj.algebra.mul, [i0(n, a), n.apply(j.matrix, h, Pj)], [Pj.algebra], [Pj])[0]]

    def rhs(n, a, h):
        x1, x2, x3 = n.Phi_inv()
        return [n.join([n.act(x1, a), x2 * h * n.S(x3)], P)]
    return compare("inainte", A.run(2, lhs, [A, H.algebra]), A.run(2, rhs, [A, H.algebra]), 2,
                   [A.labels, H.labels])


def generalized_smash(A: QuasiAlgebra, U: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``A >< U``: ``(a >< u)(a' >< u') = (x1 . a)(x2 u[-1] . a') >< x3 u[0] u'``,
    with ``x1 (x) x2 (x) x3`` the inverse left reassociator of ``U``."""
    H = A.H
    if verify:
        _inputs_ok((A, "left-module-algebra"), (U, "left-comodule-algebra"))

    def mul(n, a, u, a2, u2):
        x1, x2, x3 = n.obj_elem(U.phi_lam_inv, U, "HHA")
        uh, u0 = n.lam(u)
        return [n.act(x1, a) * n.act(x2 * uh, a2), x3 * u0 * u2]

    P = _product(f"{A.name}><{U.name}", (A, U), H, mul,
                 provenance=f"gen-smash({A.provenance},{U.provenance})")
    return _finish(P, verify)


def _bi(n, h, phi, k):
    """``h . phi . k`` in a bimodule."""
    return n.ract(n.act(h, phi), k)


def lr_smash(D: QuasiAlgebra, U: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """L-R-smash product of a bimodule algebra ``D`` and a bicomodule algebra ``U``."""
    H = D.H
    if verify:
        _inputs_ok((D, "bimodule-algebra"), (U, "bicomodule-algebra"))

    def mul(n, phi, u, phi2, u2):
        l1, l2, l3 = n.obj_elem(U.phi_lam_inv, U, "HHA")
        r1, r2, r3 = n.obj_elem(U.phi_rho_inv, U, "AHH")
        t1, t2, t3 = n.obj_elem(U.phi_lr_inv, U, "HAH")
        uh, u0 = n.lam(u)
        w0, wh = n.rho(u2)
        first = _bi(n, l1, phi, t3 * wh * r2) * _bi(n, l2 * uh * t1, phi2, r3)
        return [first, l3 * u0 * t2 * w0 * r1]

    P = _product(f"{D.name}#{U.name}", (D, U), H, mul,
                 provenance=f"lr-smash({D.provenance},{U.provenance})")
    P.maps = {"j": from_body(U, P, lambda n, u: n.join([n.unit(D), u], P), H, "j"),
              "Lambda": from_body(D, P, lambda n, phi: _lambda_body(n, U, P, phi), H, "Lambda")}
    return _finish(P, verify)


def _lambda_body(n, U, P, phi):
    t1, t2, t3 = n.obj_elem(U.phi_lr_inv, U, "HAH")
    return n.join([_bi(n, t1, phi, t3), t2], P)


def _omega_legs(n, U):
    XR1, XR2, XR3 = n.obj_elem(U.phi_rho, U, "AHH")
    l1, l2, l3 = n.obj_elem(U.phi_lam_inv, U, "HHA")
    t1, t2, t3 = n.obj_elem(U.phi_lr_inv, U, "HAH")
    ah, a0 = n.lam(XR1)
    a1, a2 = n.delta(ah)
    th, t0 = n.lam(t2)
    f1, f2 = n.f()
    return (a1 * l1 * t1, a2 * l2 * th, a0 * l3 * t0, n.Sinv(f1 * XR2 * t3), n.Sinv(f2 * XR3))


def omega(U: QuasiAlgebra) -> Tensor:
    """The element ``Omega`` in ``H (x) H (x) U (x) H (x) H`` of the diagonal crossed product."""
    return U.run(0, lambda n: list(_omega_legs(n, U)))


def diagonal_crossed(D: QuasiAlgebra, U: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """Generalized diagonal crossed product
    ``(phi >< u)(phi' >< u') = (O1 . phi . O5)(O2 u<0>[-1] . phi' . S^-1(u<1>) O4) >< O3 u<0>[0] u'``."""
    H = D.H
    if verify:
        _inputs_ok((D, "bimodule-algebra"), (U, "bicomodule-algebra"))

    def mul(n, phi, u, phi2, u2):
        O1, O2, O3, O4, O5 = _omega_legs(n, U)
        r0, rh = n.rho(u)
        lh, l0 = n.lam(r0)
        first = _bi(n, O1, phi, O5) * _bi(n, O2 * lh, phi2, n.Sinv(rh) * O4)
        return [first, O3 * l0 * u2]

    P = _product(f"{D.name}x{U.name}", (D, U), H, mul,
                 provenance=f"diag-cross({D.provenance},{U.provenance})")

    def gamma(n, phi):
        p1, p2 = n.obj_elem(U.p_tilde, U, "AH")
        ph, p0 = n.lam(p1)
        return n.join([_bi(n, ph, phi, n.Sinv(p2)), p0], P)

    P.maps = {"j": from_body(U, P, lambda n, u: n.join([n.unit(D), u], P), H, "j"),
              "Gamma": from_body(D, P, gamma, H, "Gamma")}
    return _finish(P, verify)


# -- twisted tensor products in module categories -------------------------------------

def _with_trivial_right(A: QuasiAlgebra):
    return A.with_structure(right=trivial_right(A.algebra, A.H))


def odot(D: QuasiAlgebra, A: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``D (.) A`` in bimodules: twisting ``a (x) phi -> a(-1) . phi (x) a(0)``, ``A`` acted on
    trivially from the right."""
    if verify:
        _inputs_ok((D, "bimodule-algebra"), (A, "yd-algebra"))
    Ar = _with_trivial_right(A)

    def body(n, a, phi):
        ah, a0 = n.yd(a)
        return n.act(ah, phi), a0
    R = TwistingMap.from_body(D, Ar, body, "bi", "odot")
    P = twisted_tensor(R, f"{D.name}(.){A.name}")
    P.provenance = f"odot({D.provenance},{A.provenance})"
    return _finish(P, verify)


def diamond(C: QuasiAlgebra, A: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``C <> A`` in left modules, twisting ``a (x) c -> a(-1) . c (x) a(0)``."""
    if verify:
        _inputs_ok((C, "left-module-algebra"), (A, "yd-algebra"))

    def body(n, a, c):
        ah, a0 = n.yd(a)
        return n.act(ah, c), a0
    R = TwistingMap.from_body(C, A, body, "left", "diamond")
    P = twisted_tensor(R, f"{C.name}<>{A.name}")
    P.provenance = f"diamond({C.provenance},{A.provenance})"
    return _finish(P, verify, extra=[lambda: compare("explicit", P.algebra.mul,
                                                     diamond_explicit(C, A, P), 2, [P.labels] * 2)])


def diamond_explicit(C, A, P) -> Tensor:
    """``(c (x) a)(c' (x) a')`` written out with the reassociators:
    ``(y1 X1 . c)(y2 Y1 (x1 X2 . a)(-1) x2 X3_1 . c') (x)
    (y3_1 Y2 . (x1 X2 . a)(0))(y3_2 Y3 x3 X3_2 . a')``."""
    def body(n, p, q):
        c, a = n.split(p)
        c2, a2 = n.split(q)
        X1, X2, X3 = n.Phi()
        Y1, Y2, Y3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        y1, y2, y3 = n.Phi_inv()
        X31, X32 = n.delta(X3)
        y31, y32 = n.delta(y3)
        th, t0 = n.yd(n.act(x1 * X2, a))
        first = n.act(y1 * X1, c) * n.act(y2 * Y1 * th * x2 * X31, c2)
        second = n.act(y31 * Y2, t0) * n.act(y32 * Y3 * x3 * X32, a2)
        return [n.join([first, second], P)]
    return P.run(2, body)


def braided(A: QuasiAlgebra, B: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """Braided tensor product ``A (x) B`` in Yetter-Drinfeld modules."""
    from .categories import braiding_twist
    if verify:
        _inputs_ok((A, "yd-algebra"), (B, "yd-algebra"))
    P = twisted_tensor(braiding_twist(A, B), f"{A.name}(x){B.name}")
    P.provenance = f"braided({A.provenance},{B.provenance})"
    return _finish(P, verify)


# -- the Clifford process -------------------------------------------------------------

@dataclass
class CliffordData:
    sigma: Tensor
    q: object
    generator: str
    sigma_bar: Tensor


def clifford_base(q, field, H=None, name=None, generator="v") -> QuasiAlgebra:
    """``C(k, q) = k[v]/(v^2 = q)`` with basis ``1, v``; trivial action when ``H`` is given."""
    q = field.coerce(q)
    name = name or f"C({field.format(q)})"
    ax = (name, 2)
    mul = Tensor([ax] * 3, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): q}, field)
    alg = Algebra(name, mul, Tensor([ax], {(0,): 1}, field), labels=["1", generator])
    if H is None:
        return QuasiAlgebra(alg, None, kinds=("algebra",), name=name)
    return QuasiAlgebra(alg, H, kinds=("left-module-algebra",), left=trivial_left(alg, H), name=name)


def ground_field(field, H=None) -> QuasiAlgebra:
    """``k`` as a one-dimensional algebra; a left module algebra with trivial action over ``H``."""
    one = Algebra("k", Tensor([("k", 1)] * 3, {(0, 0, 0): 1}, field), Tensor([("k", 1)], {(0,): 1}, field),
                  labels=["1"])
    if H is None:
        return QuasiAlgebra(one, None, kinds=("algebra",), name="k", provenance="k")
    return QuasiAlgebra(one, H, kinds=("left-module-algebra",), left=trivial_left(one, H), name="k",
                        provenance="k")


def clifford(A: QuasiAlgebra, sigma: Tensor, q, generator="v", verify=True) -> QuasiAlgebra:
    """``A-bar = A (x)_R C(k, q)`` with ``R(1 (x) a) = a (x) 1``, ``R(v (x) a) = sigma(a) (x) v``.

    ``sigma`` is a ``(A, A)`` matrix.  Works in left ``H``-modules when ``A``
    carries an action (``C(k, q)`` acted on trivially), otherwise in vector
    spaces.  The extension ``sigma-bar`` is attached as ``.clifford``.
    """
    field = A.field
    q = field.coerce(q)
    if not q:
        raise StructuralError("the Clifford process needs a nonzero scalar q")
    if field.normalize(field.coerce(2)) == 0:
        raise StructuralError("the Clifford process needs characteristic other than 2")
    if sigma.shape != (A.dim, A.dim):
        raise StructuralError(f"sigma has shape {sigma.shape}, expected {(A.dim, A.dim)}")
    sig = Morphism(sigma, A, A, "sigma")
    moduled = A.left is not None
    H = A.H if moduled else None
    pre = _automorphism_report(sig, H if moduled else None)
    if not pre.ok:
        raise VerificationError(f"sigma is not an involutive unital automorphism"
                                f"{' commuting with the action' if moduled else ''}: "
                                f"{[c.label for c in pre.failures()]}", pre)
    Cq = clifford_base(q, field, H, generator=generator)
    tag = "left" if moduled else "vect"

    R = TwistingMap(A, Cq, _clifford_twist(A, Cq, sigma), tag, "R")
    P = twisted_tensor(R, f"{A.name}-bar")
    P.provenance = f"clifford({A.provenance},{field.format(q)})"
    sbar = _sigma_bar(P, sigma)
    P.clifford = CliffordData(sigma, q, generator, sbar)
    P.maps = {"sigma_bar": Morphism(sbar, P, P, "sigma_bar")}
    if not moduled and not _is_associative(A):
        P.kinds = ()
    extra = []
    if verify:
        extra = list(_automorphism_report(P.maps["sigma_bar"], H).checks)
        extra = [Check("sigma_bar " + c.label, c.passed, c.witness, c.detail, c.info) for c in extra]
        if moduled and _is_associative(A):
            extra.append(compare("assoc", P.run(3, lambda n, a, b, c: [(a * b) * c]),
                                 P.run(3, lambda n, a, b, c: [a * (b * c)]), 3, [P.labels] * 3))
    return _finish(P, verify, extra)


def _clifford_twist(A, Cq, sigma) -> Tensor:
    """Axes ``(C, A, A, C)``."""
    data = {}
    for a in range(A.dim):
        data[(0, a, a, 0)] = 1
    for (a, b), s in sigma.data.items():
        data[(1, a, b, 1)] = s
    return Tensor([Cq.algebra.axis, A.algebra.axis, A.algebra.axis, Cq.algebra.axis], data, A.field)


def _sigma_bar(P, sigma) -> Tensor:
    """``sigma-bar(a (x) 1 + b (x) v) = sigma(a) (x) 1 - sigma(b) (x) v``."""
    data = {}
    for (a, b), s in sigma.data.items():
        data[(2 * a, 2 * b)] = s
        data[(2 * a + 1, 2 * b + 1)] = -s
    return Tensor([P.algebra.axis] * 2, data, P.field)


def _automorphism_report(f: Morphism, H=None) -> Report:
    rep = check_morphism(f, structure=H is not None, iso=True, H=H)
    ff = f.compose(f)
    rep.add(compare("involutive", ff.matrix, identity(f.source).matrix, 1, [f.source.labels]))
    return rep


def _is_associative(A) -> bool:
    return compare("assoc", A.run(3, lambda n, a, b, c: [(a * b) * c]),
                   A.run(3, lambda n, a, b, c: [a * (b * c)]), 3).passed


def clifford_explicit(A, sigma, q) -> Tensor:
    """``(a (x) 1 + b (x) v)(c (x) 1 + d (x) v) = (ac + q b sigma(d)) (x) 1 + (ad + b sigma(c)) (x) v``
    as a multiplication tensor on the basis ``e_i (x) 1 = 2i``, ``e_i (x) v = 2i + 1``."""
    field = A.field
    q = field.coerce(q)
    mul = A.algebra.mul.data
    sig = {}
    for (i, j), s in sigma.data.items():
        sig.setdefault(i, []).append((j, s))
    out = {}

    def add(key, val):
        out[key] = out.get(key, 0) + val

    for (i, j, k), c in mul.items():
        add((2 * i, 2 * j, 2 * k), c)              # a c
        add((2 * i, 2 * j + 1, 2 * k + 1), c)      # a d
        for jj, s in sig.get(j, ()):
            for (i2, j2, k2), c2 in mul.items():
                if i2 == i and j2 == jj:
                    add((2 * i + 1, 2 * j + 1, 2 * k2), q * s * c2)  # q b sigma(d)
                    add((2 * i + 1, 2 * j, 2 * k2 + 1), s * c2)      # b sigma(c)
    name = f"{A.name}-bar"
    return Tensor([(name, 2 * A.dim)] * 3, out, field)


# -- two-sided products -----------------------------------------------------------------

def two_sided_smash(A: QuasiAlgebra, B: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``A # H # B``: ``(x1 . a)(x2 h1 y1 . a') # x3 h2 y2 h'1 z1 # (b . y3 h'2 z2)(b' . z3)``."""
    H = A.H
    if verify:
        _inputs_ok((A, "left-module-algebra"), (B, "right-module-algebra"))
    Hq = regular(H)

    def mul(n, a, h, b, a2, h2, b2):
        x1, x2, x3 = n.Phi_inv()
        y1, y2, y3 = n.Phi_inv()
        z1, z2, z3 = n.Phi_inv()
        k1, k2 = n.delta(h)
        m1, m2 = n.delta(h2)
        return [n.act(x1, a) * n.act(x2 * k1 * y1, a2), x3 * k2 * y2 * m1 * z1,
                n.ract(b, y3 * m2 * z2) * n.ract(b2, z3)]

    P = _product(f"{A.name}#{H.name}#{B.name}", (A, Hq, B), H, mul,
                 provenance=f"two-sided({A.provenance},{B.provenance})")
    return _finish(P, verify)


def right_smash(B: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``H # B``: ``(h # b)(h' # b') = h h'1 x1 # (b . h'2 x2)(b' . x3)``."""
    H = B.H
    if verify:
        _inputs_ok((B, "right-module-algebra"))
    Hq = regular(H)

    def mul(n, h, b, h2, b2):
        x1, x2, x3 = n.Phi_inv()
        m1, m2 = n.delta(h2)
        return [h * m1 * x1, n.ract(b, m2 * x2) * n.ract(b2, x3)]

    P = _product(f"{H.name}#{B.name}", (Hq, B), H, mul, provenance=f"right-smash({B.provenance})")
    return _finish(P, verify)


def hb_comodule(B: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``H # B`` as a left comodule algebra: ``h # b -> h1 x1 (x) (h2 x2 # b . x3)``,
    reassociator ``X1 (x) X2 (x) (X3 # 1)``; attaches ``v(h) = h # 1``."""
    P = right_smash(B, verify)
    Hq = P.parts[0]

    def lam(n, p):
        h, b = n.split(p)
        x1, x2, x3 = n.Phi_inv()
        h1, h2 = n.delta(h)
        return [h1 * x1, n.join([h2 * x2, n.ract(b, x3)], P)]

    def phi(n, inverse=False):
        X1, X2, X3 = n.Phi_inv() if inverse else n.Phi()
        return [X1, X2, n.join([X3, n.unit(B)], P)]

    Q = P.with_structure(lam=P.run(1, lam), phi_lam=P.run(0, phi),
                         phi_lam_inv=P.run(0, lambda n: phi(n, True)),
                         kinds=("left-comodule-algebra",), provenance=f"hb({B.provenance})")
    Q.maps = {"v": from_body(Hq, Q, lambda n, h: n.join([h, n.unit(B)], Q), B.H, "v")}
    extra = []
    if verify:
        from .catalog import left_comodule_self
        Hl = left_comodule_self(B.H)
        v = Q.maps["v"]
        extra = [lambda: all_of("v-comodule-morphism",
                                check_morphism(Morphism(v.matrix, Hl, Q, "v"), H=B.H).checks)]
    return _finish(Q, verify, extra)


def tensor_product(A: QuasiAlgebra, B: QuasiAlgebra, name=None) -> QuasiAlgebra:
    """Componentwise product on ``A (x) B`` (no structure)."""
    H = A.H or B.H
    alg = tensor_algebra(name or f"{A.name}(x){B.name}", [A.algebra, B.algebra])
    return QuasiAlgebra(alg, H, kinds=("algebra",), parts=(A, B), name=alg.name)


def bimodule_tensor(A: QuasiAlgebra, B: QuasiAlgebra) -> QuasiAlgebra:
    """``A (x) B`` for a left module algebra ``A`` and a right module algebra ``B``: componentwise
    product, ``H`` acting on ``A`` from the left and on ``B`` from the right."""
    P = tensor_product(A, B)

    def left(n, h, p):
        a, b = n.split(p)
        return [n.join([n.act(h, a), b], P)]

    def right(n, p, h):
        a, b = n.split(p)
        return [n.join([a, n.ract(b, h)], P)]
    Q = P.with_structure(left=P.run(2, left, [A.H.algebra, P]), right=P.run(2, right, [P, A.H.algebra]),
                         kinds=("bimodule-algebra",), provenance=f"({A.provenance})(x)({B.provenance})")
    return Q


def scalar_right(H) -> QuasiAlgebra:
    """The ground field as a right module algebra with trivial action."""
    name = "k"
    ax = (name, 1)
    alg = Algebra(name, Tensor([ax] * 3, {(0, 0, 0): 1}, H.field), Tensor([ax], {(0,): 1}, H.field),
                  labels=["1"])
    return QuasiAlgebra(alg, H, kinds=("right-module-algebra",), right=trivial_right(alg, H),
                        left=trivial_left(alg, H), name=name, provenance="scalar")


# -- quasi-smash and two-sided crossed product -----------------------------------------

def quasi_smash(H, verify=True) -> QuasiAlgebra:
    """``H #- H*``: ``(h (x) phi)(h' (x) phi') = h h'1 x1 (x) (phi <- h'2 x2)(phi' <- x3)``,
    a left module algebra through ``h . (h' (x) phi) = h' (x) h -> phi``."""
    from .catalog import dual_bimodule
    D = dual_bimodule(H)
    Hq = regular(H)

    def mul(n, h, phi, h2, phi2):
        x1, x2, x3 = n.Phi_inv()
        m1, m2 = n.delta(h2)
        return [h * m1 * x1, n.ract(phi, m2 * x2) * n.ract(phi2, x3)]

    P = _product(f"{H.name}#{D.name}", (Hq, D), H, mul, provenance=f"quasi-smash({H.name})")

    def left(n, k, p):
        h, phi = n.split(p)
        return [n.join([h, n.act(k, phi)], P)]
    Q = P.with_structure(left=P.run(2, left, [H.algebra, P]), kinds=("left-module-algebra",))
    return _finish(Q, verify)


def two_sided_crossed(H, verify=True) -> QuasiAlgebra:
    """``H >< H* >< H``: ``h h'1 x1 (x) (y1 -> phi <- h'2 x2)(y2 l1 -> phi' <- x3) (x) y3 l2 l'``."""
    from .catalog import dual_bimodule
    D = dual_bimodule(H)
    Hq = regular(H)

    def mul(n, h, phi, l, h2, phi2, l2):
        x1, x2, x3 = n.Phi_inv()
        y1, y2, y3 = n.Phi_inv()
        m1, m2 = n.delta(h2)
        k1, k2 = n.delta(l)
        return [h * m1 * x1, _bi(n, y1, phi, m2 * x2) * _bi(n, y2 * k1, phi2, x3), y3 * k2 * l2]

    P = _product(f"{H.name}#{D.name}#{H.name}", (Hq, D, Hq), H, mul,
                 provenance=f"two-sided-crossed({H.name})")
    return _finish(P, verify)


# -- comodule structures on smash products --------------------------------------------

def smash_left_comodule(A: QuasiAlgebra, P=None, verify=True) -> QuasiAlgebra:
    """``A # H`` (``A`` Yetter-Drinfeld) as a left comodule algebra:
    ``a # h -> T1 (t1 . a)(-1) t2 h1 (x) T2 . (t1 . a)(0) # T3 t3 h2``,
    reassociator ``X1 (x) X2 (x) (1 # X3)``."""
    P = P or smash(A, verify)

    def lam(n, p):
        a, h = n.split(p)
        T1, T2, T3 = n.Phi()
        t1, t2, t3 = n.Phi_inv()
        h1, h2 = n.delta(h)
        ah, a0 = n.yd(n.act(t1, a))
        return [T1 * ah * t2 * h1, n.join([n.act(T2, a0), T3 * t3 * h2], P)]

    def phi(n, inverse=False):
        X1, X2, X3 = n.Phi_inv() if inverse else n.Phi()
        return [X1, X2, n.join([n.unit(A), X3], P)]

    Q = P.with_structure(lam=P.run(1, lam), phi_lam=P.run(0, phi),
                         phi_lam_inv=P.run(0, lambda n: phi(n, True)),
                         kinds=("left-comodule-algebra",), provenance=f"lca({P.provenance})")
    Q.maps = dict(getattr(P, "maps", {}))
    return _finish(Q, verify)


def smash_right_comodule(A: QuasiAlgebra, P=None, verify=True) -> QuasiAlgebra:
    """``A # H`` as a right comodule algebra: ``a # h -> (x1 . a # x2 h1) (x) x3 h2``,
    reassociator ``(1 # X1) (x) X2 (x) X3``."""
    P = P or smash(A, verify)
    Q = P.with_structure(**_smash_rho(A, P), kinds=("right-comodule-algebra",),
                         provenance=f"rca({P.provenance})")
    Q.maps = dict(getattr(P, "maps", {}))
    return _finish(Q, verify)


def _smash_rho(A, P):
    def rho(n, p):
        a, h = n.split(p)
        x1, x2, x3 = n.Phi_inv()
        h1, h2 = n.delta(h)
        return [n.join([n.act(x1, a), x2 * h1], P), x3 * h2]

    def phi_rho(n, inverse=False):
        X1, X2, X3 = n.Phi_inv() if inverse else n.Phi()
        return [n.join([n.unit(A), X1], P), X2, X3]
    return dict(rho=P.run(1, rho), phi_rho=P.run(0, phi_rho),
                phi_rho_inv=P.run(0, lambda n: phi_rho(n, True)))


def smash_bicomodule(A: QuasiAlgebra, P=None, verify=True) -> QuasiAlgebra:
    """Left and right coactions together, with two-sided reassociator ``X1 (x) (1 # X2) (x) X3``."""
    L = smash_left_comodule(A, P, verify=False)

    def phi_lr(n, inverse=False):
        X1, X2, X3 = n.Phi_inv() if inverse else n.Phi()
        return [X1, n.join([n.unit(A), X2], L), X3]

    Q = L.with_structure(**_smash_rho(A, L), phi_lr=L.run(0, phi_lr),
                         phi_lr_inv=L.run(0, lambda n: phi_lr(n, True)),
                         kinds=("left-comodule-algebra", "right-comodule-algebra", "bicomodule-algebra"),
                         provenance=f"bca({A.provenance}#{A.H.name})")
    Q.maps = dict(getattr(L, "maps", {}))
    return _finish(Q, verify)


def smash_yd(A: QuasiAlgebra, P=None, verify=True) -> QuasiAlgebra:
    """``(A # H)^j`` with the Yetter-Drinfeld coaction induced from ``smash_left_comodule``."""
    L = smash_left_comodule(A, P, verify=False)
    Y = b_v(L, L.maps["j"], name=f"({L.name})^j", verify=False)
    Y.provenance = f"yd(({A.provenance}#{A.H.name})^j)"
    Y.maps = {"j": L.maps["j"]}
    return _finish(Y, verify)


def gen_smash_right_comodule(C: QuasiAlgebra, U: QuasiAlgebra, verify=True) -> QuasiAlgebra:
    """``C >< U`` for a bicomodule ``U``: ``c >< u -> (t1 . c >< t2 u<0>) (x) t3 u<1>``,
    ``t`` the inverse two-sided reassociator; reassociator ``(1 >< X~1) (x) X~2 (x) X~3``."""
    P = generalized_smash(C, U, verify)

    def rho(n, p):
        c, u = n.split(p)
        t1, t2, t3 = n.obj_elem(U.phi_lr_inv, U, "HAH")
        u0, uh = n.rho(u)
        return [n.join([n.act(t1, c), t2 * u0], P), t3 * uh]

    def phi(n, inverse=False):
        X1, X2, X3 = n.obj_elem(U.phi_rho_inv if inverse else U.phi_rho, U, "AHH")
        return [n.join([n.unit(C), X1], P), X2, X3]

    Q = P.with_structure(rho=P.run(1, rho), phi_rho=P.run(0, phi),
                         phi_rho_inv=P.run(0, lambda n: phi(n, True)),
                         kinds=("right-comodule-algebra",), provenance=f"rca({P.provenance})")
    return _finish(Q, verify)


def hh_comodule(H, verify=True) -> QuasiAlgebra:
    """``H (x) H`` with ``lambda(x) = Phi (Delta (x) id)(x) Phi^-1`` and reassociator
    ``(id (x) id (x) Delta)(Phi)``; attaches ``Delta`` as ``.maps['Delta']``."""
    Hq = regular(H)
    alg = tensor_algebra(f"{H.name}(x){H.name}", [H.algebra, H.algebra])
    P = QuasiAlgebra(alg, H, kinds=("algebra",), parts=(Hq, Hq), name=alg.name)

    def lam(n, p):
        a, b = n.split(p)
        X1, X2, X3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        a1, a2 = n.delta(a)
        return [X1 * a1 * x1, n.join([X2 * a2 * x2, X3 * b * x3], P)]

    def phi(n, inverse=False):
        X1, X2, X3 = n.Phi_inv() if inverse else n.Phi()
        return [X1, X2, n.join(list(n.delta(X3)), P)]

    Q = P.with_structure(lam=P.run(1, lam), phi_lam=P.run(0, phi),
                         phi_lam_inv=P.run(0, lambda n: phi(n, True)),
                         kinds=("left-comodule-algebra",), provenance=f"hh:{H.name}")
    from .catalog import left_comodule_self
    Hl = left_comodule_self(H)
    Q.maps = {"Delta": from_body(Hl, Q, lambda n, h: n.join(list(n.delta(h)), Q), H, "Delta")}
    extra = []
    if verify:
        extra = [lambda: all_of("Delta-comodule-morphism",
                                check_morphism(Q.maps["Delta"], H=H).checks)]
    return _finish(Q, verify, extra)


def hh_delta(H, verify=True) -> QuasiAlgebra:
    """``(H (x) H)^Delta`` as a Yetter-Drinfeld algebra."""
    Q = hh_comodule(H, verify)
    Y = b_v(Q, Q.maps["Delta"], name=f"({Q.name})^Delta", verify=False)
    Y.provenance = f"(hh:{H.name})^Delta"
    return _finish(Y, verify)


# -- iterating the Clifford process ----------------------------------------------------

def clifford_tower(qs, H=None, field=None):
    """Apply the Clifford process ``len(qs)`` times starting from the ground field: first with
    ``sigma = id``, then each time with the previous ``sigma-bar``.  Over ``H`` every stage is a
    left module algebra with the trivial action.  Returns the list of stages."""
    from .fields import QQ
    A = ground_field(field or (H.field if H is not None else QQ), H)
    sigma = identity(A).matrix
    stages = [A]
    for q in qs:
        A = clifford(A, sigma, q)
        sigma = A.clifford.sigma_bar
        stages.append(A)
    return stages


def graded_defect(A: QuasiAlgebra, omega) -> Check:
    """``(e_x e_y) e_z = omega(x, y, z) e_x (e_y e_z)`` on all basis triples, the basis index
    read as the degree."""
    lhs = A.run(3, lambda n, a, b, c: [(a * b) * c])
    rhs = A.run(3, lambda n, a, b, c: [a * (b * c)])
    scaled = Tensor(rhs.axes, {k: omega(*k[:3]) * v for k, v in rhs.data.items()}, A.field)
    return compare("graded-defect", lhs, scaled, 3, [A.labels] * 3)
