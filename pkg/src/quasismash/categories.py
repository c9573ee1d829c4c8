"""Algebras inside monoidal categories of (co)modules over a quasi-Hopf algebra.

One container, ``QuasiAlgebra``, carries whatever structure an example
has: left/right actions, left/right comodule-algebra coactions with
their reassociators, and a Yetter-Drinfeld coaction.  ``kinds`` says
which axiom suites apply.  The suites live in ``AXIOMS`` as
label -> builder tables; a builder returns the two sides of an
identity as tensors over basis inputs.
"""
from __future__ import annotations

from .algebra import Algebra, Space, product_space
from .elements import einverse, unit_of
from .errors import StructuralError, VerificationError
from .network import Leg, Net
from .report import Check, Report, all_of, compare
from .tensor import Tensor

KINDS = (
    "algebra",
    "left-module-algebra",
    "right-module-algebra",
    "bimodule-algebra",
    "left-comodule-algebra",
    "right-comodule-algebra",
    "bicomodule-algebra",
    "yd-algebra",
)

TAGS = ("vect", "left", "right", "bi", "yd")


class QuasiAlgebra:
    """Finite-dimensional algebra with optional structure over ``H``.

    Tensor layouts (basis indices): ``left[h, a, b]`` is ``h . a``;
    ``right[a, h, b]`` is ``a . h``; ``lam[a, h, b]`` and ``yd[a, h, b]`` give
    ``a[-1] (x) a[0]``; ``rho[a, b, h]`` gives ``a<0> (x) a<1>``.  The
    reassociators live in ``H (x) H (x) A`` (``phi_lam``), ``A (x) H (x) H``
    (``phi_rho``) and ``H (x) A (x) H`` (``phi_lr``).
    """

    is_structure = True

    def __init__(self, algebra: Algebra, H=None, *, kinds=("algebra",), left=None, right=None,
                 lam=None, rho=None, yd=None, phi_lam=None, phi_rho=None, phi_lr=None,
                 phi_lam_inv=None, phi_rho_inv=None, phi_lr_inv=None, parts=None,
                 name=None, provenance=None):
        self.algebra = algebra
        self.H = H
        self.name = name or algebra.name
        self.provenance = provenance or self.name
        unknown = [k for k in kinds if k not in KINDS]
        if unknown:
            raise StructuralError(f"unknown structure kind(s) {unknown}; known: {', '.join(KINDS)}")
        self.kinds = tuple(kinds)
        d = algebra.dim
        n = H.dim if H is not None else None
        self.left = _shaped(left, (n, d, d), "left action")
        self.right = _shaped(right, (d, n, d), "right action")
        self.lam = _shaped(lam, (d, n, d), "left coaction")
        self.rho = _shaped(rho, (d, d, n), "right coaction")
        self.yd = _shaped(yd, (d, n, d), "Yetter-Drinfeld coaction")
        self.phi_lam = _shaped(phi_lam, (n, n, d), "left reassociator")
        self.phi_rho = _shaped(phi_rho, (d, n, n), "right reassociator")
        self.phi_lr = _shaped(phi_lr, (n, d, n), "two-sided reassociator")
        self._inv = {"phi_lam": phi_lam_inv, "phi_rho": phi_rho_inv, "phi_lr": phi_lr_inv}
        self.parts = tuple(parts) if parts else None
        self._cache = {}

    # -- derived data --------------------------------------------------------
    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    @property
    def field(self):
        return self.algebra.field

    def _inverse(self, key, pattern):
        if self._inv.get(key) is None:
            t = getattr(self, key)
            if t is None:
                return None
            spaces = [self.H.algebra if ch == "H" else self.algebra for ch in pattern]
            self._inv[key] = einverse(t, spaces)
        return self._inv[key]

    @property
    def phi_lam_inv(self):
        return self._inverse("phi_lam", "HHA")

    @property
    def phi_rho_inv(self):
        return self._inverse("phi_rho", "AHH")

    @property
    def phi_lr_inv(self):
        return self._inverse("phi_lr", "HAH")

    @property
    def p_tilde(self):
        """``x~1 (x) x~2 beta S(x~3)`` in ``A (x) H``, from the inverse right reassociator."""
        if "p" not in self._cache:
            def body(n):
                x1, x2, x3 = n.obj_elem(self.phi_rho_inv, self, "AHH")
                return [x1, x2 * n.beta() * n.S(x3)]
            self._cache["p"] = self.run(0, body)
        return self._cache["p"]

    @property
    def q_tilde(self):
        """``X~1 (x) S^-1(alpha X~3) X~2`` in ``A (x) H``."""
        if "q" not in self._cache:
            def body(n):
                X1, X2, X3 = n.obj_elem(self.phi_rho, self, "AHH")
                return [X1, n.Sinv(n.alpha() * X3) * X2]
            self._cache["q"] = self.run(0, body)
        return self._cache["q"]

    def net(self):
        return Net(self.H, field=self.field)

    def run(self, n_in, body, spaces=None):
        """Evaluate ``body(net, *inputs)``; inputs default to basis legs of this algebra."""
        net = self.net()
        spaces = spaces or [self] * n_in
        ins = [net.input(s) for s in spaces]
        return net.evaluate(ins, body(net, *ins))

    def with_structure(self, **changes):
        """Copy with some structure tensors or kinds replaced."""
        fields = dict(left=self.left, right=self.right, lam=self.lam, rho=self.rho, yd=self.yd,
                      phi_lam=self.phi_lam, phi_rho=self.phi_rho, phi_lr=self.phi_lr,
                      phi_lam_inv=self._inv["phi_lam"], phi_rho_inv=self._inv["phi_rho"],
                      phi_lr_inv=self._inv["phi_lr"], kinds=self.kinds, parts=self.parts,
                      name=self.name, provenance=self.provenance)
        fields.update(changes)
        H = fields.pop("H", self.H)
        algebra = fields.pop("algebra", self.algebra)
        return QuasiAlgebra(algebra, H, **fields)

    def __repr__(self):
        return f"<QuasiAlgebra {self.provenance} dim {self.dim} {list(self.kinds)}>"


def _shaped(t, shape, what):
    if t is None:
        return None
    if None in shape:
        raise StructuralError(f"{what} given without a quasi-Hopf algebra")
    if t.shape != shape:
        raise StructuralError(f"{what} has shape {t.shape}, expected {shape}")
    return t


def trivial_left(A: Space, H) -> Tensor:
    """``h . a = eps(h) a``."""
    return Tensor([H.algebra.axis, A.axis, A.axis],
                  {(h, a, a): v for (h,), v in H.eps.data.items() for a in range(A.dim)}, A.field)


def trivial_right(A: Space, H) -> Tensor:
    return Tensor([A.axis, H.algebra.axis, A.axis],
                  {(a, h, a): v for (h,), v in H.eps.data.items() for a in range(A.dim)}, A.field)


def plain_algebra(alg: Algebra, name=None) -> QuasiAlgebra:
    return QuasiAlgebra(alg, None, kinds=("algebra",), name=name)


# -- actions on composite objects and associators -------------------------------

def act_tree(net: Net, h: Leg, tree):
    """Left action on a nested tuple of legs, distributing with the coproduct."""
    if isinstance(tree, Leg):
        return net.act(h, tree)
    h1, h2 = net.delta(h)
    return (act_tree(net, h1, tree[0]), act_tree(net, h2, tree[1]))


def ract_tree(net: Net, tree, h: Leg):
    if isinstance(tree, Leg):
        return net.ract(tree, h)
    h1, h2 = net.delta(h)
    return (ract_tree(net, tree[0], h1), ract_tree(net, tree[1], h2))


def assoc(net: Net, tag: str, u, v, w, inverse=False):
    """Associator ``(U (x) V) (x) W -> U (x) (V (x) W)`` of the category ``tag``.

    Returns the transformed ``(u, v, w)``; the inverse uses the
    inverse reassociator on the left and the reassociator on the right.
    """
    if tag not in TAGS:
        raise StructuralError(f"unknown category tag {tag!r}; known: {', '.join(TAGS)}")
    if tag in ("left", "yd", "bi"):
        X = net.Phi_inv() if inverse else net.Phi()
        u, v, w = act_tree(net, X[0], u), act_tree(net, X[1], v), act_tree(net, X[2], w)
    if tag in ("right", "bi"):
        x = net.Phi() if inverse else net.Phi_inv()
        u, v, w = ract_tree(net, u, x[0]), ract_tree(net, v, x[1]), ract_tree(net, w, x[2])
    return u, v, w


def assoc_inv(net, tag, u, v, w):
    return assoc(net, tag, u, v, w, inverse=True)


# -- Yetter-Drinfeld tensor products and braiding ---------------------------------

def yd_coact_pair(net: Net, m: Leg, n: Leg):
    """Coaction on ``M (x) N``: returns ``(h, m', n')``."""
    X1, X2, X3 = net.Phi()
    x1, x2, x3 = net.Phi_inv()
    Y1, Y2, Y3 = net.Phi()
    mh, m0 = net.yd(net.act(x1 * Y1, m))
    nh, n0 = net.yd(net.act(Y2, n))
    return X1 * mh * x2 * nh * Y3, net.act(X2, m0), net.act(X3 * x3, n0)


def carrier(name, parts, H=None) -> QuasiAlgebra:
    """Bare ``parts[0] (x) parts[1] (x) ...`` whose legs split into legs of the parts."""
    space = product_space(name, [p.algebra for p in parts])
    zero = Tensor.zeros([space.axis] * 3, space.field)
    alg = Algebra(space.name, zero, Tensor.zeros([space.axis], space.field), parts=space.parts)
    return QuasiAlgebra(alg, H, kinds=(), parts=parts, name=name)


def structure_on_product(P: QuasiAlgebra, tag: str):
    """Actions and coaction of ``A (x) B`` for the category ``tag``: ``{field: tensor}``."""
    out = {}
    H = P.H
    if tag in ("left", "bi", "yd"):
        def left(n, h, p):
            return [n.join(act_tree(n, h, tuple(n.split(p))), P)]
        out["left"] = P.run(2, left, [H.algebra, P])
    if tag in ("right", "bi"):
        def right(n, p, h):
            return [n.join(ract_tree(n, tuple(n.split(p)), h), P)]
        out["right"] = P.run(2, right, [P, H.algebra])
    if tag == "yd":
        def coact(n, p):
            m, k = n.split(p)
            h, a, b = yd_coact_pair(n, m, k)
            return [h, n.join([a, b], P)]
        out["yd"] = P.run(1, coact)
    return out


def yd_tensor(M: QuasiAlgebra, N: QuasiAlgebra) -> QuasiAlgebra:
    """``M (x) N`` as a left module with Yetter-Drinfeld coaction (no multiplication implied)."""
    P = carrier(f"{M.name}(x){N.name}", (M, N), M.H)
    return P.with_structure(**structure_on_product(P, "yd"))


def yd_braiding(M: QuasiAlgebra, N: QuasiAlgebra) -> Tensor:
    """``c(m (x) n) = m(-1) . n (x) m(0)``; axes ``(M, N, N, M)``."""
    net = Net(M.H)
    m, n = net.input(M), net.input(N)
    mh, m0 = net.yd(m)
    return net.evaluate([m, n], [net.act(mh, n), m0])


def verify_braiding(M: QuasiAlgebra, N: QuasiAlgebra) -> Report:
    """Naturality of the braiding: left-linear and colinear; invertibility is reported as information."""
    from .linalg import LinearMap
    rep = Report(f"braiding c_{{{M.name},{N.name}}}")
    c = yd_braiding(M, N)
    H = M.H
    L = [H.labels, M.labels, N.labels]

    def lhs(net, h, m, n):
        a, b = act_tree(net, h, (m, n))
        return _braid(net, c, N, M, a, b)

    def rhs(net, h, m, n):
        x, y = _braid(net, c, N, M, m, n)
        a, b = act_tree(net, h, (x, y))
        return [a, b]

    rep.add(compare("braiding-linear", M.run(3, lhs, [H.algebra, M, N]),
                    M.run(3, rhs, [H.algebra, M, N]), 3, L))

    def co_lhs(net, m, n):
        x, y = _braid(net, c, N, M, m, n)
        return list(yd_coact_pair(net, x, y))

    def co_rhs(net, m, n):
        h, a, b = yd_coact_pair(net, m, n)
        x, y = _braid(net, c, N, M, a, b)
        return [h, x, y]

    rep.add(compare("braiding-colinear", M.run(2, co_lhs, [M, N]), M.run(2, co_rhs, [M, N]), 2, L[1:]))
    r = LinearMap(c, 2).rank()
    rep.add(Check("braiding-invertible", r == M.dim * N.dim, detail=f"rank {r} of {M.dim * N.dim}",
                  info=True))
    return rep


def _braid(net, c, N, M, m, n):
    return list(net.add(c, [m, n], [N.algebra, M.algebra], [N, M]))


# -- axiom tables --------------------------------------------------------------------

def _ident(n, *legs):
    return list(legs)


def _unit_axiom(A):
    one_left = A.run(1, lambda n, a: [n.unit(A) * a])
    one_right = A.run(1, lambda n, a: [a * n.unit(A)])
    ident = A.run(1, _ident)
    return all_of("unit", [compare("unit", one_left, ident, 1, [A.labels]),
                           compare("unit", one_right, ident, 1, [A.labels])])


def _assoc_axiom(A):
    return compare("assoc", A.run(3, lambda n, a, b, c: [(a * b) * c]),
                   A.run(3, lambda n, a, b, c: [a * (b * c)]), 3, [A.labels] * 3)


def _HA(A):
    return [A.H.algebra, A]


def _lab(A, pattern):
    return [A.H.labels if ch == "H" else A.labels for ch in pattern]


def _left_module(A):
    H = A.H
    out = []

    def unit_act(n, a):
        return [n.act(n.hunit(), a)]

    out.append(compare("module-unit", A.run(1, unit_act), A.run(1, _ident), 1, [A.labels]))
    sp = [H.algebra, H.algebra, A]
    out.append(compare("module-assoc", A.run(3, lambda n, h, k, a: [n.act(h * k, a)], sp),
                       A.run(3, lambda n, h, k, a: [n.act(h, n.act(k, a))], sp), 3, _lab(A, "HHA")))
    return out


def _right_module(A):
    H = A.H
    out = []
    out.append(compare("rmodule-unit", A.run(1, lambda n, a: [n.ract(a, n.hunit())]),
                       A.run(1, _ident), 1, [A.labels]))
    sp = [A, H.algebra, H.algebra]
    out.append(compare("rmodule-assoc", A.run(3, lambda n, a, h, k: [n.ract(a, h * k)], sp),
                       A.run(3, lambda n, a, h, k: [n.ract(n.ract(a, h), k)], sp), 3, _lab(A, "AHH")))
    return out


def _ma1(A):
    def rhs(n, a, b, c):
        X1, X2, X3 = n.Phi()
        return [n.act(X1, a) * (n.act(X2, b) * n.act(X3, c))]
    return compare("ma1", A.run(3, lambda n, a, b, c: [(a * b) * c]), A.run(3, rhs), 3, [A.labels] * 3)


def _ma2(A):
    sp = [A.H.algebra, A, A]

    def rhs(n, h, a, b):
        h1, h2 = n.delta(h)
        return [n.act(h1, a) * n.act(h2, b)]
    return compare("ma2", A.run(3, lambda n, h, a, b: [n.act(h, a * b)], sp), A.run(3, rhs, sp), 3,
                   _lab(A, "HAA"))


def _ma3(A):
    sp = [A.H.algebra]

    def rhs(n, h):
        n.eps(h)
        return [n.unit(A)]
    return compare("ma3", A.run(1, lambda n, h: [n.act(h, n.unit(A))], sp), A.run(1, rhs, sp), 1,
                   [A.H.labels])


def _rma1(A):
    def rhs(n, a, b, c):
        x1, x2, x3 = n.Phi_inv()
        return [n.ract(a, x1) * (n.ract(b, x2) * n.ract(c, x3))]
    return compare("rma1", A.run(3, lambda n, a, b, c: [(a * b) * c]), A.run(3, rhs), 3, [A.labels] * 3)


def _rma2(A):
    sp = [A, A, A.H.algebra]

    def rhs(n, a, b, h):
        h1, h2 = n.delta(h)
        return [n.ract(a, h1) * n.ract(b, h2)]
    return compare("rma2", A.run(3, lambda n, a, b, h: [n.ract(a * b, h)], sp), A.run(3, rhs, sp), 3,
                   _lab(A, "AAH"))


def _rma3(A):
    sp = [A.H.algebra]

    def rhs(n, h):
        n.eps(h)
        return [n.unit(A)]
    return compare("rma3", A.run(1, lambda n, h: [n.ract(n.unit(A), h)], sp), A.run(1, rhs, sp), 1,
                   [A.H.labels])


def _bimodule_compat(A):
    sp = [A.H.algebra, A, A.H.algebra]
    return compare("bimodule", A.run(3, lambda n, h, a, k: [n.ract(n.act(h, a), k)], sp),
                   A.run(3, lambda n, h, a, k: [n.act(h, n.ract(a, k))], sp), 3, _lab(A, "HAH"))


def _bma1(A):
    def rhs(n, a, b, c):
        X1, X2, X3 = n.Phi()
        x1, x2, x3 = n.Phi_inv()
        return [n.ract(n.act(X1, a), x1) * (n.ract(n.act(X2, b), x2) * n.ract(n.act(X3, c), x3))]
    return compare("bma1", A.run(3, lambda n, a, b, c: [(a * b) * c]), A.run(3, rhs), 3, [A.labels] * 3)


def _rho_alg(A):
    def lhs(n, a, b):
        return list(n.rho(a * b))

    def rhs(n, a, b):
        a0, a1 = n.rho(a)
        b0, b1 = n.rho(b)
        return [a0 * b0, a1 * b1]

    def one(n):
        return list(n.rho(n.unit(A)))

    return all_of("rho-multiplicative", [
        compare("rho-multiplicative", A.run(2, lambda n, a, b: lhs(n, a, b)), A.run(2, rhs), 2, [A.labels] * 2),
        compare("rho-unital", A.run(0, one), A.run(0, lambda n: [n.unit(A), n.hunit()]))])


def _lam_alg(A):
    def lhs(n, a, b):
        return list(n.lam(a * b))

    def rhs(n, a, b):
        ah, a0 = n.lam(a)
        bh, b0 = n.lam(b)
        return [ah * bh, a0 * b0]

    def one(n):
        return list(n.lam(n.unit(A)))

    return all_of("lam-multiplicative", [
        compare("lam-multiplicative", A.run(2, lhs), A.run(2, rhs), 2, [A.labels] * 2),
        compare("lam-unital", A.run(0, one), A.run(0, lambda n: [n.hunit(), n.unit(A)]))])


def _rca1(A):
    def lhs(n, a):
        P1, P2, P3 = n.obj_elem(A.phi_rho, A, "AHH")
        a0, a1 = n.rho(a)
        b0, b1 = n.rho(a0)
        return [P1 * b0, P2 * b1, P3 * a1]

    def rhs(n, a):
        P1, P2, P3 = n.obj_elem(A.phi_rho, A, "AHH")
        a0, a1 = n.rho(a)
        c1, c2 = n.delta(a1)
        return [a0 * P1, c1 * P2, c2 * P3]
    return compare("rca1", A.run(1, lhs), A.run(1, rhs), 1, [A.labels])


def _rca2(A):
    def lhs(n):
        X1, X2, X3 = n.Phi()
        P1, P2, P3 = n.obj_elem(A.phi_rho, A, "AHH")
        Q1, Q2, Q3 = n.obj_elem(A.phi_rho, A, "AHH")
        a, b = n.delta(P2)
        return [P1 * Q1, X1 * a * Q2, X2 * b * Q3, X3 * P3]

    def rhs(n):
        P1, P2, P3 = n.obj_elem(A.phi_rho, A, "AHH")
        Q1, Q2, Q3 = n.obj_elem(A.phi_rho, A, "AHH")
        a, b = n.delta(P3)
        q0, q1 = n.rho(Q1)
        return [P1 * q0, P2 * q1, a * Q2, b * Q3]
    return compare("rca2", A.run(0, lhs), A.run(0, rhs), 0, _lab(A, "AHHH"))


def _rca3(A):
    def lhs(n, a):
        a0, a1 = n.rho(a)
        n.eps(a1)
        return [a0]
    return compare("rca3", A.run(1, lhs), A.run(1, _ident), 1, [A.labels])


def _rca4(A):
    def drop(pos):
        def body(n):
            legs = list(n.obj_elem(A.phi_rho, A, "AHH"))
            n.eps(legs.pop(pos))
            return legs
        return body
    one = A.run(0, lambda n: [n.unit(A), n.hunit()])
    return all_of("rca4", [compare("rca4", A.run(0, drop(p)), one, 0, _lab(A, "AH")) for p in (1, 2)])


def _phi_rho_inv(A):
    from .elements import emul
    sp = [A.algebra, A.H.algebra, A.H.algebra]
    one = unit_of(sp)
    inv = A.phi_rho_inv
    return all_of("phi-rho-invertible", [compare("phi-rho-invertible", emul(A.phi_rho, inv, sp), one),
                                         compare("phi-rho-invertible", emul(inv, A.phi_rho, sp), one)])


def _tpqr(A):
    """The six identities satisfied by the canonical pair of a right comodule algebra."""
    L = [A.labels]
    p, q = A.p_tilde, A.q_tilde

    def P(n):
        return n.obj_elem(p, A, "AH")

    def Q(n):
        return n.obj_elem(q, A, "AH")

    def t1_lhs(n, a):
        a0, a1 = n.rho(a)
        b0, b1 = n.rho(a0)
        p1, p2 = P(n)
        return [b0 * p1, b1 * p2 * n.S(a1)]

    def t1_rhs(n, a):
        p1, p2 = P(n)
        return [p1 * a, p2]

    def t1a_lhs(n, a):
        a0, a1 = n.rho(a)
        q1, q2 = Q(n)
        c0, c1 = n.rho(a0)
        return [q1 * c0, n.Sinv(a1) * q2 * c1]

    def t1a_rhs(n, a):
        q1, q2 = Q(n)
        return [a * q1, q2]

    def t2(n):
        q1, q2 = Q(n)
        r0, r1 = n.rho(q1)
        p1, p2 = P(n)
        return [r0 * p1, r1 * p2 * n.S(q2)]

    def t2a(n):
        p1, p2 = P(n)
        q1, q2 = Q(n)
        r0, r1 = n.rho(p1)
        return [q1 * r0, n.Sinv(p2) * q2 * r1]

    def mare_lhs(n):
        P1, P2, P3 = n.obj_elem(A.phi_rho, A, "AHH")
        p1, p2 = P(n)
        r0, r1 = n.rho(p1)
        s1, s2 = P(n)
        return [P1 * r0 * s1, P2 * r1 * s2, P3 * p2]

    def mare_rhs(n):
        x1, x2, x3 = n.obj_elem(A.phi_rho_inv, A, "AHH")
        y0, y1 = n.rho(x1)
        p1, p2 = P(n)
        z1, z2 = n.delta(y1 * p2)
        g1, g2 = n.f_inv()
        return [y0 * p1, z1 * g1 * n.S(x3), z2 * g2 * n.S(x2)]

    def foarte_lhs(n):
        q1, q2 = Q(n)
        r1, r2 = Q(n)
        s0, s1 = n.rho(r1)
        x1, x2, x3 = n.obj_elem(A.phi_rho_inv, A, "AHH")
        return [q1 * s0 * x1, q2 * s1 * x2, r2 * x3]

    def foarte_rhs(n):
        X1, X2, X3 = n.obj_elem(A.phi_rho, A, "AHH")
        f1, f2 = n.f()
        q1, q2 = Q(n)
        s0, s1 = n.rho(X1)
        z1, z2 = n.delta(q2 * s1)
        return [q1 * s0, n.Sinv(f2 * X3) * z1, n.Sinv(f1 * X2) * z2]

    one = A.run(0, lambda n: [n.unit(A), n.hunit()])
    LL = _lab(A, "AHH")
    return [
        compare("tpqr1", A.run(1, t1_lhs), A.run(1, t1_rhs), 1, L),
        compare("tpqr1a", A.run(1, t1a_lhs), A.run(1, t1a_rhs), 1, L),
        compare("tpqr2", A.run(0, t2), one, 0, LL),
        compare("tpqr2a", A.run(0, t2a), one, 0, LL),
        compare("relmare", A.run(0, mare_lhs), A.run(0, mare_rhs), 0, LL),
        compare("relfoartemare", A.run(0, foarte_lhs), A.run(0, foarte_rhs), 0, LL),
    ]


def _lca1(A):
    def lhs(n, b):
        bh, b0 = n.lam(b)
        ch, c0 = n.lam(b0)
        P1, P2, P3 = n.obj_elem(A.phi_lam, A, "HHA")
        return [bh * P1, ch * P2, c0 * P3]

    def rhs(n, b):
        P1, P2, P3 = n.obj_elem(A.phi_lam, A, "HHA")
        bh, b0 = n.lam(b)
        u, v = n.delta(bh)
        return [P1 * u, P2 * v, P3 * b0]
    return compare("lca1", A.run(1, lhs), A.run(1, rhs), 1, [A.labels])


def _lca2(A):
    def lhs(n):
        P1, P2, P3 = n.obj_elem(A.phi_lam, A, "HHA")
        Q1, Q2, Q3 = n.obj_elem(A.phi_lam, A, "HHA")
        X1, X2, X3 = n.Phi()
        a, b = n.delta(Q2)
        return [Q1 * X1, P1 * a * X2, P2 * b * X3, P3 * Q3]

    def rhs(n):
        P1, P2, P3 = n.obj_elem(A.phi_lam, A, "HHA")
        Q1, Q2, Q3 = n.obj_elem(A.phi_lam, A, "HHA")
        ph, p0 = n.lam(P3)
        a, b = n.delta(Q1)
        return [P1 * a, P2 * b, ph * Q2, p0 * Q3]
    return compare("lca2", A.run(0, lhs), A.run(0, rhs), 0, _lab(A, "HHHA"))


def _lca3(A):
    def lhs(n, b):
        bh, b0 = n.lam(b)
        n.eps(bh)
        return [b0]
    return compare("lca3", A.run(1, lhs), A.run(1, _ident), 1, [A.labels])


def _lca4(A):
    def drop(pos):
        def body(n):
            legs = list(n.obj_elem(A.phi_lam, A, "HHA"))
            n.eps(legs.pop(pos))
            return legs
        return body
    one = A.run(0, lambda n: [n.hunit(), n.unit(A)])
    return all_of("lca4", [compare("lca4", A.run(0, drop(p)), one, 0, _lab(A, "HA")) for p in (1, 0)])


def _phi_lam_inv(A):
    from .elements import emul
    sp = [A.H.algebra, A.H.algebra, A.algebra]
    one = unit_of(sp)
    inv = A.phi_lam_inv
    return all_of("phi-lam-invertible", [compare("phi-lam-invertible", emul(A.phi_lam, inv, sp), one),
                                         compare("phi-lam-invertible", emul(inv, A.phi_lam, sp), one)])


def _bca1(A):
    def lhs(n, u):
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        u0, u1 = n.rho(u)
        uh, v0 = n.lam(u0)
        return [T1 * uh, T2 * v0, T3 * u1]

    def rhs(n, u):
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        uh, u0 = n.lam(u)
        v0, v1 = n.rho(u0)
        return [uh * T1, v0 * T2, v1 * T3]
    return compare("bca1", A.run(1, lhs), A.run(1, rhs), 1, [A.labels])


def _bca2(A):
    def lhs(n):
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        U1, U2, U3 = n.obj_elem(A.phi_lr, A, "HAH")
        L1, L2, L3 = n.obj_elem(A.phi_lam, A, "HHA")
        uh, u0 = n.lam(U2)
        return [U1 * L1, T1 * uh * L2, T2 * u0 * L3, T3 * U3]

    def rhs(n):
        L1, L2, L3 = n.obj_elem(A.phi_lam, A, "HHA")
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        l0, l1 = n.rho(L3)
        a, b = n.delta(T1)
        return [L1 * a, L2 * b, l0 * T2, l1 * T3]
    return compare("bca2", A.run(0, lhs), A.run(0, rhs), 0, _lab(A, "HHAH"))


def _bca3(A):
    def lhs(n):
        R1, R2, R3 = n.obj_elem(A.phi_rho, A, "AHH")
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        U1, U2, U3 = n.obj_elem(A.phi_lr, A, "HAH")
        t0, t1 = n.rho(T2)
        return [T1 * U1, R1 * t0 * U2, R2 * t1 * U3, R3 * T3]

    def rhs(n):
        T1, T2, T3 = n.obj_elem(A.phi_lr, A, "HAH")
        R1, R2, R3 = n.obj_elem(A.phi_rho, A, "AHH")
        a, b = n.delta(T3)
        rh, r0 = n.lam(R1)
        return [T1 * rh, T2 * r0, a * R2, b * R3]
    return compare("bca3", A.run(0, lhs), A.run(0, rhs), 0, _lab(A, "HAHH"))


def _bca4(A):
    def drop(pos):
        def body(n):
            legs = list(n.obj_elem(A.phi_lr, A, "HAH"))
            n.eps(legs.pop(pos))
            return legs
        return body
    one_right = A.run(0, lambda n: [n.hunit(), n.unit(A)])
    one_left = A.run(0, lambda n: [n.unit(A), n.hunit()])
    return all_of("bca4", [compare("bca4", A.run(0, drop(2)), one_right, 0, _lab(A, "HA")),
                           compare("bca4", A.run(0, drop(0)), one_left, 0, _lab(A, "AH"))])


def _phi_lr_inv(A):
    from .elements import emul
    sp = [A.H.algebra, A.algebra, A.H.algebra]
    one = unit_of(sp)
    inv = A.phi_lr_inv
    return all_of("phi-lr-invertible", [compare("phi-lr-invertible", emul(A.phi_lr, inv, sp), one),
                                        compare("phi-lr-invertible", emul(inv, A.phi_lr, sp), one)])


def _yd1(A):
    def lhs(n, m):
        X1, X2, X3 = n.Phi()
        mh, m0 = n.yd(m)
        th, t0 = n.yd(n.act(X2, m0))
        return [X1 * mh, th * X3, t0]

    def rhs(n, m):
        X1, X2, X3 = n.Phi()
        Y1, Y2, Y3 = n.Phi()
        sh, s0 = n.yd(n.act(Y1, m))
        a, b = n.delta(sh)
        return [X1 * a * Y2, X2 * b * Y3, n.act(X3, s0)]
    return compare("yd1", A.run(1, lhs), A.run(1, rhs), 1, [A.labels])


def _yd2(A):
    def lhs(n, m):
        mh, m0 = n.yd(m)
        n.eps(mh)
        return [m0]
    return compare("yd2", A.run(1, lhs), A.run(1, _ident), 1, [A.labels])


def _yd3(A):
    sp = [A.H.algebra, A]

    def lhs(n, h, m):
        h1, h2 = n.delta(h)
        mh, m0 = n.yd(m)
        return [h1 * mh, n.act(h2, m0)]

    def rhs(n, h, m):
        h1, h2 = n.delta(h)
        th, t0 = n.yd(n.act(h1, m))
        return [th * h2, t0]
    return compare("yd3", A.run(2, lhs, sp), A.run(2, rhs, sp), 2, _lab(A, "HA"))


def _unitate(A):
    return compare("unitate", A.run(0, lambda n: list(n.yd(n.unit(A)))),
                   A.run(0, lambda n: [n.hunit(), n.unit(A)]), 0, _lab(A, "HA"))


def _multi(A):
    def lhs(n, a, b):
        return list(n.yd(a * b))

    def rhs(n, a, b):
        h, x, y = yd_coact_pair(n, a, b)
        return [h, x * y]
    return compare("multi", A.run(2, lhs), A.run(2, rhs), 2, [A.labels] * 2)


def _many(*fns):
    def run(A):
        out = []
        for fn in fns:
            r = fn(A)
            out.extend(r if isinstance(r, list) else [r])
        return out
    return run


AXIOMS = {
    "algebra": _many(_unit_axiom, _assoc_axiom),
    "left-module-algebra": _many(_unit_axiom, _left_module, _ma1, _ma2, _ma3),
    "right-module-algebra": _many(_unit_axiom, _right_module, _rma1, _rma2, _rma3),
    "bimodule-algebra": _many(_unit_axiom, _left_module, _right_module, _bimodule_compat, _bma1,
                              lambda A: all_of("bma2", [_ma2(A), _rma2(A)]),
                              lambda A: all_of("bma3", [_ma3(A), _rma3(A)])),
    "right-comodule-algebra": _many(_unit_axiom, _assoc_axiom, _rho_alg, _rca1, _rca2, _rca3, _rca4,
                                    _phi_rho_inv, _tpqr),
    "left-comodule-algebra": _many(_unit_axiom, _assoc_axiom, _lam_alg, _lca1, _lca2, _lca3, _lca4,
                                   _phi_lam_inv),
    "bicomodule-algebra": _many(_unit_axiom, _assoc_axiom, _lam_alg, _lca1, _lca2, _lca3, _lca4,
                                _phi_lam_inv, _rho_alg, _rca1, _rca2, _rca3, _rca4, _phi_rho_inv,
                                _bca1, _bca2, _bca3, _bca4, _phi_lr_inv),
    "yd-algebra": _many(_unit_axiom, _left_module, _ma1, _ma2, _ma3, _yd1, _yd2, _yd3, _unitate, _multi),
}

# kinds whose structure tensors must be present
REQUIRES = {
    "left-module-algebra": ("left",),
    "right-module-algebra": ("right",),
    "bimodule-algebra": ("left", "right"),
    "right-comodule-algebra": ("rho", "phi_rho"),
    "left-comodule-algebra": ("lam", "phi_lam"),
    "bicomodule-algebra": ("lam", "rho", "phi_lam", "phi_rho", "phi_lr"),
    "yd-algebra": ("left", "yd"),
}


def verify_structure(A: QuasiAlgebra, kind=None) -> Report:
    kinds = [kind] if kind else list(A.kinds)
    rep = Report(f"{A.provenance} as {', '.join(kinds)}")
    for k in kinds:
        if k not in AXIOMS:
            raise StructuralError(f"unknown structure kind {k!r}; known: {', '.join(KINDS)}")
        missing = [f for f in REQUIRES.get(k, ()) if getattr(A, f) is None]
        if missing:
            raise StructuralError(f"{A.name} lacks {missing} needed for {k}")
        if k != "algebra" and A.H is None:
            raise StructuralError(f"{k} needs a quasi-Hopf algebra")
        for check in AXIOMS[k](A):
            if check.label not in rep:
                rep.add(check)
    return rep


def require(A: QuasiAlgebra, kind=None) -> QuasiAlgebra:
    rep = verify_structure(A, kind)
    if not rep.ok:
        raise VerificationError(f"{A.provenance} fails {[c.label for c in rep.failures()]}", rep)
    return A


# -- twisting maps and twisted tensor products ----------------------------------------

TAG_KIND = {"vect": "algebra", "left": "left-module-algebra", "right": "right-module-algebra",
            "bi": "bimodule-algebra", "yd": "yd-algebra"}
TAG_NEEDS = {"vect": (), "left": ("left",), "right": ("right",), "bi": ("left", "right"),
             "yd": ("left", "yd")}


class TwistingMap:
    """``R: B (x) A -> A (x) B`` in the category ``tag``; tensor axes ``(B, A, A, B)``."""

    def __init__(self, A: QuasiAlgebra, B: QuasiAlgebra, tensor: Tensor, tag="vect", name="R"):
        if tag not in TAGS:
            raise StructuralError(f"unknown category tag {tag!r}; known: {', '.join(TAGS)}")
        if tensor.shape != (B.dim, A.dim, A.dim, B.dim):
            raise StructuralError(f"{name}: shape {tensor.shape} does not fit {B.name} (x) {A.name}")
        for X in (A, B):
            missing = [f for f in TAG_NEEDS[tag] if getattr(X, f) is None]
            if missing:
                raise StructuralError(f"{X.name} lacks {missing} needed in category {tag}")
        if tag != "vect" and (A.H is None or B.H is not A.H):
            raise StructuralError("both algebras must live over the same quasi-Hopf algebra")
        self.A, self.B, self.tensor, self.tag, self.name = A, B, tensor, tag, name
        self.report = None

    @property
    def H(self):
        return self.A.H

    def __call__(self, net: Net, b: Leg, a: Leg):
        return net.add(self.tensor, [b, a], [self.A.algebra, self.B.algebra], [self.A, self.B])

    @classmethod
    def from_body(cls, A, B, body, tag="vect", name="R"):
        """``body(net, b, a) -> (a', b')``."""
        net = Net(A.H, field=A.field)
        b, a = net.input(B), net.input(A)
        return cls(A, B, net.evaluate([b, a], list(body(net, b, a))), tag, name)


def flip(A: QuasiAlgebra, B: QuasiAlgebra, tag="vect") -> TwistingMap:
    return TwistingMap.from_body(A, B, lambda n, b, a: (a, b), tag, "flip")


def braiding_twist(A: QuasiAlgebra, B: QuasiAlgebra) -> TwistingMap:
    """``c_{B,A}`` as a twisting map in the Yetter-Drinfeld category."""
    def body(n, b, a):
        bh, b0 = n.yd(b)
        return n.act(bh, a), b0
    return TwistingMap.from_body(A, B, body, "yd", "c")


def _multiply_twisted(n, R, a, b, a2, b2):
    """``(a (x) b)(a2 (x) b2)`` in ``A (x)_R B``, one associator at a time."""
    tag = R.tag
    a, b, (a2, b2) = assoc(n, tag, a, b, (a2, b2))
    b, a2, b2 = assoc_inv(n, tag, b, a2, b2)
    a2, b = R(n, b, a2)
    a2, b, b2 = assoc(n, tag, a2, b, b2)
    a, a2, (b, b2) = assoc_inv(n, tag, a, a2, (b, b2))
    return a * a2, b * b2


def verify_twisting_map(R: TwistingMap) -> Report:
    """Category-morphism checks (labels ``morphism-*``) then ``unitw``, ``twist1``, ``twist2``."""
    A, B, tag, H = R.A, R.B, R.tag, R.H
    rep = Report(f"{R.name}: {B.name} (x) {A.name} -> {A.name} (x) {B.name} in {tag}")
    LBA = [B.labels, A.labels]

    def run(spaces, body):
        net = Net(H, field=A.field)
        ins = [net.input(s) for s in spaces]
        return net.evaluate(ins, list(body(net, *ins)))

    if tag in ("left", "bi", "yd"):
        sp = [H.algebra, B, A]
        rep.add(compare("morphism-left", run(sp, lambda n, h, b, a: R(n, *act_tree(n, h, (b, a)))),
                        run(sp, lambda n, h, b, a: act_tree(n, h, R(n, b, a))), 3, [H.labels] + LBA))
    if tag in ("right", "bi"):
        sp = [B, A, H.algebra]
        rep.add(compare("morphism-right", run(sp, lambda n, b, a, h: R(n, *ract_tree(n, (b, a), h))),
                        run(sp, lambda n, b, a, h: ract_tree(n, R(n, b, a), h)), 3, LBA + [H.labels]))
    if tag == "yd":
        def co_lhs(n, b, a):
            return yd_coact_pair(n, *R(n, b, a))

        def co_rhs(n, b, a):
            h, b1, a1 = yd_coact_pair(n, b, a)
            return (h,) + tuple(R(n, b1, a1))
        rep.add(compare("morphism-coaction", run([B, A], co_lhs), run([B, A], co_rhs), 2, LBA))

    unit_b = compare("unitw", run([B], lambda n, b: R(n, b, n.unit(A))),
                     run([B], lambda n, b: (n.unit(A), b)), 1, [B.labels])
    unit_a = compare("unitw", run([A], lambda n, a: R(n, n.unit(B), a)),
                     run([A], lambda n, a: (a, n.unit(B))), 1, [A.labels])
    rep.add(all_of("unitw", [unit_b, unit_a]))

    def t1_lhs(n, b, b2, a):
        return R(n, b * b2, a)

    def t1_rhs(n, b, b2, a):
        b, b2, a = assoc(n, tag, b, b2, a)
        a, b2 = R(n, b2, a)
        b, a, b2 = assoc_inv(n, tag, b, a, b2)
        a, b = R(n, b, a)
        a, b, b2 = assoc(n, tag, a, b, b2)
        return a, b * b2

    sp = [B, B, A]
    rep.add(compare("twist1", run(sp, t1_lhs), run(sp, t1_rhs), 3, [B.labels, B.labels, A.labels]))

    def t2_lhs(n, b, a, a2):
        return R(n, b, a * a2)

    def t2_rhs(n, b, a, a2):
        b, a, a2 = assoc_inv(n, tag, b, a, a2)
        a, b = R(n, b, a)
        a, b, a2 = assoc(n, tag, a, b, a2)
        a2, b = R(n, b, a2)
        a, a2, b = assoc_inv(n, tag, a, a2, b)
        return a * a2, b

    sp = [B, A, A]
    rep.add(compare("twist2", run(sp, t2_lhs), run(sp, t2_rhs), 3, [B.labels, A.labels, A.labels]))
    R.report = rep
    return rep


def failure_kind(rep: Report):
    """``'morphism'`` when the map is not a morphism of the category, ``'twisting'`` when only the
    twisting axioms fail, ``None`` when everything passes."""
    bad = rep.failures()
    if any(c.label.startswith("morphism-") for c in bad):
        return "morphism"
    return "twisting" if bad else None


def twisted_tensor(R: TwistingMap, name=None) -> QuasiAlgebra:
    """``A (x)_R B``; refuses twisting maps that fail verification."""
    rep = R.report or verify_twisting_map(R)
    if not rep.ok:
        raise VerificationError(f"{R.name} is not a twisting map ({failure_kind(rep)} failure): "
                                f"{[c.label for c in rep.failures()]}", rep)
    A, B, tag, H = R.A, R.B, R.tag, R.H
    name = name or f"{A.name}(x)_{R.name}{B.name}"
    P = carrier(name, (A, B), H)

    def mul(n, p, q):
        a, b = n.split(p)
        a2, b2 = n.split(q)
        return [n.join(_multiply_twisted(n, R, a, b, a2, b2), P)]

    m = P.run(2, mul)
    one = P.run(0, lambda n: [n.join([n.unit(A), n.unit(B)], P)])
    alg = Algebra(name, m, one, parts=P.algebra.parts)
    Q = QuasiAlgebra(alg, H, kinds=(TAG_KIND[tag],), parts=(A, B), name=name,
                     provenance=f"{A.provenance} (x)_{R.name} {B.provenance}")
    Q = Q.with_structure(**structure_on_product(Q, tag))
    Q.twisting = R
    return Q


def inclusions(P: QuasiAlgebra):
    """``i_A = id (x) 1`` and ``i_B = 1 (x) id`` into a twisted tensor product."""
    from .morphism import from_body
    A, B = P.parts
    i_a = from_body(A, P, lambda n, a: n.join([a, n.unit(B)], P), P.H, "i_A")
    i_b = from_body(B, P, lambda n, b: n.join([n.unit(A), b], P), P.H, "i_B")
    return i_a, i_b


def universal_factor(P: QuasiAlgebra, X, u, v):
    """The morphism ``w = mu_X (u (x) v)`` with ``w i_A = u`` and ``w i_B = v``.

    Checks that ``u`` and ``v`` are morphisms of algebras in the category and
    satisfy the commutation condition, then verifies ``w``.  Returns
    ``(w, report)``; raises ``VerificationError`` when a precondition fails.
    """
    from .linalg import LinearMap
    from .morphism import Morphism, check_equal, check_morphism
    R = P.twisting
    A, B = P.parts
    H = P.H
    structured = R.tag != "vect"
    for f in (u, v):
        pre = check_morphism(f, structure=structured, H=H)
        if not pre.ok:
            raise VerificationError(f"{f.name} is not a morphism of algebras in the category: "
                                    f"{[c.label for c in pre.failures()]}", pre)

    def run(spaces, body):
        net = Net(H, field=P.field)
        ins = [net.input(s) for s in spaces]
        return net.evaluate(ins, body(net, *ins))

    def com_lhs(n, b, a):
        a1, b1 = R(n, b, a)
        return [u(n, a1) * v(n, b1)]

    comgen = compare("comgen", run([B, A], com_lhs),
                     run([B, A], lambda n, b, a: [v(n, b) * u(n, a)]), 2, [B.labels, A.labels])
    if not comgen.passed:
        raise VerificationError(f"commutation condition fails at {comgen.witness}", comgen)

    def wbody(n, p):
        a, b = n.split(p)
        return u(n, a) * v(n, b)
    w = Morphism(run([P], lambda n, p: [wbody(n, p)]), P, X, "w")
    rep = Report(f"universal factor {P.provenance} -> {getattr(X, 'provenance', X.name)}")
    rep.add(comgen)
    rep.extend(check_morphism(w, structure=structured, H=H))
    i_a, i_b = inclusions(P)
    rep.add(check_equal("restricts-to-u", w.compose(i_a), u))
    rep.add(check_equal("restricts-to-v", w.compose(i_b), v))

    def span(n, a, b):
        return [n.join([a, n.unit(B)], P) * n.join([n.unit(A), b], P)]
    r = LinearMap(run([A, B], span), 2).rank()
    rep.add(Check("unique", r == P.dim, detail=f"products i_A(a) i_B(b) span rank {r} of {P.dim}"))
    return w, rep
