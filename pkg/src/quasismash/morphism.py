"""Linear maps between structured algebras and the checks that make them morphisms."""
from __future__ import annotations

from .errors import NotInvertible, StructuralError
from .linalg import LinearMap, matrix_inverse
from .network import Net
from .report import Check, Report, all_of, compare
from .tensor import Tensor


class Morphism:
    """Linear map ``source -> target`` stored as a ``(source, target)`` tensor."""

    def __init__(self, matrix: Tensor, source, target, name="f"):
        if matrix.shape != (source.dim, target.dim):
            raise StructuralError(f"{name}: matrix shape {matrix.shape} does not fit "
                                  f"{source.dim} -> {target.dim}")
        self.matrix = matrix
        self.source = source
        self.target = target
        self.name = name

    @property
    def linear(self) -> LinearMap:
        return LinearMap(self.matrix, 1)

    def apply(self, vec: Tensor) -> Tensor:
        return self.linear.apply(vec)

    def compose(self, first: "Morphism", name=None) -> "Morphism":
        """``self o first``."""
        # the middle algebra may be the same space under another product: match labels
        mine = self.matrix.relabel([first.matrix.axes[1][0], self.matrix.axes[1][0]])
        m = LinearMap(mine, 1).compose(first.linear).tensor
        return Morphism(m, first.source, self.target, name or f"{self.name}o{first.name}")

    def inverse(self, name=None) -> "Morphism":
        return Morphism(matrix_inverse(self.matrix), self.target, self.source, name or f"{self.name}^-1")

    def rank(self):
        return self.linear.rank()

    def __call__(self, net: Net, leg):
        return net.apply(self.matrix, leg, self.target)


def identity(A, name="id") -> Morphism:
    return Morphism(Tensor([A.algebra.axis if hasattr(A, "algebra") else A.axis] * 2,
                           {(i, i): 1 for i in range(A.dim)}, A.field), A, A, name)


def from_body(source, target, body, H=None, name="f") -> Morphism:
    """Morphism given by a network ``body(net, leg) -> leg``."""
    net = Net(H or getattr(source, "H", None), field=source.field)
    x = net.input(source)
    out = body(net, x)
    return Morphism(net.evaluate([x], [out]), source, target, name)


def _run(H, field, spaces, body):
    net = Net(H, field=field)
    ins = [net.input(s) for s in spaces]
    return net.evaluate(ins, body(net, *ins))


def _lab(obj):
    return obj.labels


def check_morphism(f: Morphism, *, structure=True, iso=False, H=None) -> Report:
    """Unital, multiplicative, and (when both ends carry them) action/coaction intertwining.

    Bijectivity is required when ``iso`` is set and informational otherwise.
    """
    S, T = f.source, f.target
    H = H or getattr(S, "H", None) or getattr(T, "H", None)
    field = S.field
    rep = Report(f"{f.name}: {getattr(S, 'provenance', S.name)} -> {getattr(T, 'provenance', T.name)}")
    rep.add(compare("unital", _run(H, field, [], lambda n: [f(n, n.unit(S))]),
                    _run(H, field, [], lambda n: [n.unit(T)])))
    rep.add(compare("multiplicative", _run(H, field, [S, S], lambda n, x, y: [f(n, x * y)]),
                    _run(H, field, [S, S], lambda n, x, y: [f(n, x) * f(n, y)]), 2, [_lab(S)] * 2))
    if structure and H is not None:
        acts = []
        if getattr(S, "left", None) is not None and getattr(T, "left", None) is not None:
            sp = [H.algebra, S]
            acts.append(compare("action-intertwining", _run(H, field, sp, lambda n, h, x: [f(n, n.act(h, x))]),
                                _run(H, field, sp, lambda n, h, x: [n.act(h, f(n, x))]), 2,
                                [H.labels, _lab(S)], "left"))
        if getattr(S, "right", None) is not None and getattr(T, "right", None) is not None:
            sp = [S, H.algebra]
            acts.append(compare("action-intertwining", _run(H, field, sp, lambda n, x, h: [f(n, n.ract(x, h))]),
                                _run(H, field, sp, lambda n, x, h: [n.ract(f(n, x), h)]), 2,
                                [_lab(S), H.labels], "right"))
        if acts:
            rep.add(all_of("action-intertwining", acts))
        coacts = []
        for attr in ("yd", "lam"):
            if getattr(S, attr, None) is not None and getattr(T, attr, None) is not None:
                def lhs(n, x, attr=attr):
                    h, x0 = getattr(n, attr)(x)
                    return [h, f(n, x0)]

                def rhs(n, x, attr=attr):
                    return list(getattr(n, attr)(f(n, x)))
                coacts.append(compare("coaction-intertwining", _run(H, field, [S], lhs),
                                      _run(H, field, [S], rhs), 1, [_lab(S)], attr))
        if getattr(S, "rho", None) is not None and getattr(T, "rho", None) is not None:
            def rlhs(n, x):
                x0, h = n.rho(x)
                return [f(n, x0), h]
            coacts.append(compare("coaction-intertwining", _run(H, field, [S], rlhs),
                                  _run(H, field, [S], lambda n, x: list(n.rho(f(n, x)))), 1,
                                  [_lab(S)], "rho"))
        for attr, pattern in (("phi_lam", "HHA"), ("phi_rho", "AHH"), ("phi_lr", "HAH")):
            if getattr(S, attr, None) is not None and getattr(T, attr, None) is not None:
                def mapped(n, attr=attr, pattern=pattern):
                    legs = n.obj_elem(getattr(S, attr), S, pattern)
                    return [f(n, l) if ch == "A" else l for l, ch in zip(legs, pattern)]

                def direct(n, attr=attr, pattern=pattern):
                    return list(n.obj_elem(getattr(T, attr), T, pattern))
                coacts.append(compare("coaction-intertwining", _run(H, field, [], mapped),
                                      _run(H, field, [], direct), 0, None, attr))
        if coacts:
            rep.add(all_of("coaction-intertwining", coacts))
    r = f.rank()
    bij = r == S.dim == T.dim
    rep.add(Check("bijective", bij, detail=f"rank {r}, dims {S.dim} -> {T.dim}", info=not iso))
    return rep


def check_equal(label, f: Morphism, g: Morphism) -> Check:
    return compare(label, f.matrix, g.matrix, 1, [f.source.labels])
