"""Worked examples: twisted function algebras, small Hopf algebras, duals."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import Algebra
from .errors import StructuralError, VerificationError
from .fields import QQ
from .quasi_hopf import QuasiHopfAlgebra
from .tensor import Tensor


@dataclass(frozen=True)
class FiniteGroup:
    """Group on ``range(order)`` with multiplication table; element 0 is the identity."""
    labels: tuple
    table: tuple

    @property
    def order(self):
        return len(self.labels)

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return next(y for y in range(self.order) if self.table[x][y] == 0)

    @classmethod
    def elementary_abelian(cls, rank):
        """``Z_2^rank``; element ``x`` is the bit vector of ``x`` (most significant first)."""
        n = 2 ** rank
        labels = tuple("".join(str((x >> (rank - 1 - i)) & 1) for i in range(rank)) for x in range(n))
        return cls(labels, tuple(tuple(x ^ y for y in range(n)) for x in range(n)))


class GroupCocycle:
    """Normalized 3-cocycle ``omega: G^3 -> k^*``, checked on construction."""

    def __init__(self, group: FiniteGroup, values, field=QQ):
        self.group = group
        self.field = field
        n = group.order
        self.values = {}
        for xyz in itertools.product(range(n), repeat=3):
            v = field.coerce(values(*xyz) if callable(values) else values[xyz])
            if not v:
                raise VerificationError(f"cocycle vanishes at {xyz}")
            self.values[xyz] = v
        for x, y in itertools.product(range(n), repeat=2):
            for triple in ((0, x, y), (x, 0, y), (x, y, 0)):
                if self.values[triple] != 1:
                    raise VerificationError(f"cocycle is not normalized at {triple}")
        w = self.witness()
        if w is not None:
            raise VerificationError(f"cocycle identity fails at {w}", report=w)

    def __call__(self, x, y, z):
        return self.values[(x, y, z)]

    def witness(self):
        """First ``(x, y, z, t)`` violating the 3-cocycle identity, or ``None``."""
        G, w = self.group, self.values
        norm = self.field.normalize
        for x, y, z, t in itertools.product(range(G.order), repeat=4):
            lhs = w[(y, z, t)] * w[(x, G.mul(y, z), t)] * w[(x, y, z)]
            rhs = w[(x, y, G.mul(z, t))] * w[(G.mul(x, y), z, t)]
            if norm(lhs - rhs):
                return (x, y, z, t)
        return None


def function_algebra(group: FiniteGroup, omega: GroupCocycle, name=None, field=None) -> QuasiHopfAlgebra:
    """Dual group algebra ``k^G`` with reassociator from ``omega``; basis of idempotents ``p_g``."""
    field = field or omega.field
    n = group.order
    name = name or f"k^G[{n}]"
    labels = [f"p{g}" for g in group.labels]
    ax = (name, n)
    mul = Tensor([ax] * 3, {(g, g, g): 1 for g in range(n)}, field)
    unit = Tensor([ax], {(g,): 1 for g in range(n)}, field)
    alg = Algebra(name, mul, unit, labels=labels)
    delta = Tensor([ax] * 3, {(group.mul(x, y), x, y): 1 for x in range(n) for y in range(n)}, field)
    eps = Tensor([ax], {(0,): 1}, field)
    phi = Tensor([ax] * 3, {xyz: omega(*xyz) for xyz in itertools.product(range(n), repeat=3)}, field)
    phi_inv = Tensor([ax] * 3, {xyz: field.inv(omega(*xyz)) for xyz in itertools.product(range(n), repeat=3)},
                     field)
    S = Tensor([ax] * 2, {(g, group.inv(g)): 1 for g in range(n)}, field)
    alpha = unit
    beta = Tensor([ax], {(g,): field.inv(omega(g, group.inv(g), g)) for g in range(n)}, field)
    H = QuasiHopfAlgebra(name, alg, delta, eps, phi, S, alpha, beta, phi_inv=phi_inv, group=group)
    H.cocycle = omega
    return H


def sign_cocycle_h2(x, y, z):
    return -1 if x and y and z else 1


def H2(field=QQ) -> QuasiHopfAlgebra:
    """Two-dimensional quasi-Hopf algebra with reassociator ``1 - 2 p1 (x) p1 (x) p1``."""
    G = FiniteGroup.elementary_abelian(1)
    return function_algebra(G, GroupCocycle(G, sign_cocycle_h2, field), "H2", field)


# Reassociator signs of the octonion grading on Z_2^3: row x, block y, column z.
_OCTONION_SIGNS = """
++++++++ ++++++++ ++++++++ ++++++++ ++++++++ ++++++++ ++++++++ ++++++++
++++++++ ++++++++ ++++---- ++++---- ++--++-- ++--++-- ++----++ ++----++
++++++++ ++++---- ++++++++ ++++---- +-+-+-+- +-+--+-+ +-+-+-+- +-+--+-+
++++++++ ++++---- ++++---- ++++++++ +--++--+ +--+-++- +--+-++- +--++--+
++++++++ ++--++-- +-+-+-+- +--++--+ ++++++++ ++--++-- +-+-+-+- +--++--+
++++++++ ++--++-- +-+--+-+ +--+-++- ++--++-- ++++++++ +--+-++- +-+--+-+
++++++++ ++----++ +-+-+-+- +--+-++- +-+-+-+- +--+-++- ++++++++ ++----++
++++++++ ++----++ +-+--+-+ +--++--+ +--++--+ +-+--+-+ ++----++ ++++++++
"""


def octonion_signs():
    rows = _OCTONION_SIGNS.split()
    if len(rows) != 64 or any(len(r) != 8 for r in rows):
        raise StructuralError("octonion sign table is malformed")
    return {(x, y, z): (1 if rows[8 * x + y][z] == "+" else -1)
            for x in range(8) for y in range(8) for z in range(8)}


def octonion_cochain(x, y):
    """Two-cochain on Z_2^3 whose twisted group algebra is the octonions."""
    a = [(x >> 2) & 1, (x >> 1) & 1, x & 1]
    b = [(y >> 2) & 1, (y >> 1) & 1, y & 1]
    s = sum(a[i] * b[j] for i in range(3) for j in range(i, 3))
    s += b[0] * a[1] * a[2] + a[0] * b[1] * a[2] + a[0] * a[1] * b[2]
    return -1 if s % 2 else 1


def H8(field=QQ) -> QuasiHopfAlgebra:
    """Eight-dimensional quasi-Hopf algebra on Z_2^3 with the octonion reassociator."""
    G = FiniteGroup.elementary_abelian(3)
    signs = octonion_signs()
    return function_algebra(G, GroupCocycle(G, signs, field), "H8", field)


def kZ2(field=QQ) -> QuasiHopfAlgebra:
    name = "kZ2"
    ax = (name, 2)
    mul = Tensor([ax] * 3, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}, field)
    unit = Tensor([ax], {(0,): 1}, field)
    alg = Algebra(name, mul, unit, labels=["1", "g"])
    delta = Tensor([ax] * 3, {(0, 0, 0): 1, (1, 1, 1): 1}, field)
    eps = Tensor([ax], {(0,): 1, (1,): 1}, field)
    phi = Tensor([ax] * 3, {(0, 0, 0): 1}, field)
    S = Tensor([ax] * 2, {(0, 0): 1, (1, 1): 1}, field)
    return QuasiHopfAlgebra(name, alg, delta, eps, phi, S, unit, unit)


def SW4(field=QQ) -> QuasiHopfAlgebra:
    """Four-dimensional Hopf algebra ``<g, x | g^2 = 1, x^2 = 0, xg = -gx>``; basis 1, g, x, gx."""
    name = "SW4"
    ax = (name, 4)
    mul = {}
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        if b + d > 1:
            continue
        sign = -1 if b * c else 1
        mul[(a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d))] = sign
    unit = Tensor([ax], {(0,): 1}, field)
    alg = Algebra(name, Tensor([ax] * 3, mul, field), unit, labels=["1", "g", "x", "gx"])
    delta = Tensor([ax] * 3, {(0, 0, 0): 1, (1, 1, 1): 1,
                              (2, 2, 0): 1, (2, 1, 2): 1,
                              (3, 3, 1): 1, (3, 0, 3): 1}, field)
    eps = Tensor([ax], {(0,): 1, (1,): 1}, field)
    phi = Tensor([ax] * 3, {(0, 0, 0): 1}, field)
    S = Tensor([ax] * 2, {(0, 0): 1, (1, 1): 1, (2, 3): -1, (3, 2): 1}, field)
    return QuasiHopfAlgebra(name, alg, delta, eps, phi, S, unit, unit)


QUASI_HOPF = {"H2": H2, "H8": H8, "kZ2": kZ2, "SW4": SW4}


def quasi_hopf_by_name(name, field=QQ) -> QuasiHopfAlgebra:
    try:
        return QUASI_HOPF[name](field)
    except KeyError:
        raise KeyError(f"unknown quasi-Hopf algebra {name!r}; known: {', '.join(QUASI_HOPF)}") from None


def hopf_examples(field=QQ):
    """Hopf algebras viewed as quasi-Hopf with trivial reassociator."""
    return [kZ2(field), SW4(field)]


# -- algebras with structure over a fixed quasi-Hopf algebra --------------------------

def self_bicomodule(H):
    """``H`` coacting on itself through the coproduct, every reassociator equal to ``Phi``."""
    from .categories import QuasiAlgebra
    return QuasiAlgebra(H.algebra, H, kinds=("left-comodule-algebra", "right-comodule-algebra",
                                             "bicomodule-algebra"),
                        lam=H.delta, rho=H.delta, phi_lam=H.phi, phi_rho=H.phi, phi_lr=H.phi,
                        phi_lam_inv=H.phi_inv, phi_rho_inv=H.phi_inv, phi_lr_inv=H.phi_inv,
                        name=H.name, provenance=f"self:{H.name}")


def right_comodule_self(H):
    from .categories import QuasiAlgebra
    return QuasiAlgebra(H.algebra, H, kinds=("right-comodule-algebra",), rho=H.delta,
                        phi_rho=H.phi, phi_rho_inv=H.phi_inv, name=H.name,
                        provenance=f"rself:{H.name}")


def left_comodule_self(H):
    from .categories import QuasiAlgebra
    return QuasiAlgebra(H.algebra, H, kinds=("left-comodule-algebra",), lam=H.delta,
                        phi_lam=H.phi, phi_lam_inv=H.phi_inv, name=H.name,
                        provenance=f"lself:{H.name}")


def dual_algebra(H) -> Algebra:
    """Linear dual with the convolution product; basis dual to that of ``H``."""
    name = f"{H.name}*"
    n = H.dim
    ax = (name, n)
    mul = Tensor([ax] * 3, {(i, j, k): v for (k, i, j), v in H.delta.data.items()}, H.field)
    unit = Tensor([ax], {k: v for k, v in H.eps.data.items()}, H.field)
    return Algebra(name, mul, unit, labels=[f"{l}*" for l in H.labels])


def dual_bimodule(H):
    """``H*`` with ``<h -> phi, x> = phi(x h)`` and ``<phi <- h, x> = phi(h x)``."""
    from .categories import QuasiAlgebra
    D = dual_algebra(H)
    n, d = (H.name, H.dim), D.axis
    left = Tensor([n, d, d], {(a, b, c): v for (c, a, b), v in H.algebra.mul.data.items()}, H.field)
    right = Tensor([d, n, d], {(b, a, c): v for (a, c, b), v in H.algebra.mul.data.items()}, H.field)
    return QuasiAlgebra(D, H, kinds=("bimodule-algebra",), left=left, right=right,
                        provenance=f"dual:{H.name}")


def end_algebra(V) -> Algebra:
    """``End(V)`` with composition; basis ``E_ij`` sends ``e_j`` to ``e_i`` (index ``i * dim + j``)."""
    n = V.dim
    name = f"End({V.name})"
    ax = (name, n * n)
    mul = {(i * n + j, j * n + k, i * n + k): 1 for i in range(n) for j in range(n) for k in range(n)}
    unit = {(i * n + i,): 1 for i in range(n)}
    labels = [f"E[{V.labels[i]},{V.labels[j]}]" for i in range(n) for j in range(n)]
    return Algebra(name, Tensor([ax] * 3, mul, V.field), Tensor([ax], unit, V.field), labels=labels)


def _end_map(H, body, name):
    """``(H, End(H))`` matrix of ``h -> (x -> body(net, h, x))``, checked unital and multiplicative."""
    from .linalg import LinearMap
    E = end_algebra(H.algebra)
    n = H.dim
    net = H.net()
    h, x = net.input(H.algebra), net.input(H.algebra)
    t = net.evaluate([h, x], [body(net, h, x)])  # axes h, x, out
    v = Tensor([H.algebra.axis, E.axis], {(a, o * n + b): c for (a, b, o), c in t.data.items()},
               H.field)
    vm = LinearMap(v, 1)
    for i in range(n):
        for j in range(n):
            lhs = vm.apply(H.algebra.product(H.algebra.basis_vector(i), H.algebra.basis_vector(j)))
            rhs = E.product(vm.apply(H.algebra.basis_vector(i)), vm.apply(H.algebra.basis_vector(j)))
            if lhs.data != rhs.data:
                raise VerificationError(f"{name} is not multiplicative at {(H.labels[i], H.labels[j])}")
    if vm.apply(H.algebra.unit).data != E.unit.data:
        raise VerificationError(f"{name} is not unital")
    return E, v


def end_adjoint(H):
    """``End(H)`` and the adjoint map ``v(h) = (x -> h1 x S(h2))``.

    Returns ``(algebra, v)`` with ``v`` as a ``(H, End(H))`` matrix; raises if
    ``v`` is not unital and multiplicative.
    """
    def body(n, h, x):
        h1, h2 = n.delta(h)
        return h1 * x * n.S(h2)
    return _end_map(H, body, "adjoint")


def end_right_regular(H):
    """``End(H)`` and ``v(h) = (x -> x S^-1(h))``, the other algebra map tried for the duality bridge."""
    return _end_map(H, lambda n, h, x: x * n.Sinv(h), "right-regular")


# -- gauge transformations ----------------------------------------------------------

def sign_gauge(H) -> Tensor:
    """``F = sum (-1)^<x, y> p_x (x) p_y`` on a function algebra of ``Z_2^n``
    (``<x, y>`` the bitwise dot product); ``F`` is its own inverse."""
    G = getattr(H, "group", None)
    if G is None:
        raise StructuralError(f"{H.name} is not a function algebra on a group")
    n = G.order
    data = {(x, y): (-1 if bin(x & y).count("1") % 2 else 1) for x in range(n) for y in range(n)}
    return Tensor([H.algebra.axis] * 2, data, H.field)


def trivial_gauge(H) -> Tensor:
    one = H.algebra.unit
    return Tensor([H.algebra.axis] * 2, {(i, j): a * b for (i,), a in one.data.items()
                                         for (j,), b in one.data.items()}, H.field)


def graded_octonions(H=None):
    """Octonions as the twisted group algebra ``e_x e_y = F(x, y) e_{x+y}`` on ``Z_2^3``, a left
    module algebra over ``H8`` through the grading ``p_g . e_y = [g = y] e_y``."""
    from .categories import QuasiAlgebra
    H = H or H8()
    n = 8
    name = "O"
    ax = (name, n)
    mul = Tensor([ax] * 3, {(x, y, x ^ y): octonion_cochain(x, y) for x in range(n) for y in range(n)},
                 H.field)
    alg = Algebra(name, mul, Tensor([ax], {(0,): 1}, H.field), labels=[f"e{l}" for l in H.group.labels])
    left = Tensor([H.algebra.axis, ax, ax], {(g, g, g): 1 for g in range(n)}, H.field)
    return QuasiAlgebra(alg, H, kinds=("left-module-algebra",), left=left, name=name,
                        provenance="octonions")
