"""Sweedler-style formulas as sparse tensor networks.

A formula is assembled from *legs*: symbolic basis indices of a space.
Every operation (multiply, act, coproduct, antipode, ...) adds a
structure-constant tensor to the network and returns fresh legs.  Each
leg is consumed exactly once, which is what makes the result linear in
every input.  ``evaluate`` contracts the network greedily.
"""
from __future__ import annotations

from collections import Counter

from .errors import StructuralError
from .tensor import Tensor, pair_contract, sum_out, getter


class Leg:
    __slots__ = ("net", "id", "space", "obj", "used")

    def __init__(self, net, id_, space, obj=None):
        self.net = net
        self.id = id_
        self.space = space
        self.obj = obj
        self.used = False

    def __mul__(self, other):
        return self.net.mul(self, other)

    def __repr__(self):
        return f"<leg {self.id} in {self.space.name}>"


class Net:
    def __init__(self, H=None, field=None):
        self.H = H
        self.field = field or (H.field if H is not None else None)
        self.factors = []
        self.dims = []
        self.legs = []

    # -- plumbing --------------------------------------------------------
    def _fresh(self, space, obj=None):
        leg = Leg(self, len(self.dims), space, obj)
        self.dims.append(space.dim)
        self.legs.append(leg)
        if self.field is None:
            self.field = space.field
        return leg

    def add(self, tensor: Tensor, consumed, new_spaces, objs=None):
        """Attach ``tensor`` whose axes are the consumed legs then the new legs."""
        consumed = list(consumed)
        new_spaces = list(new_spaces)
        if tensor.rank != len(consumed) + len(new_spaces):
            raise StructuralError(f"tensor of rank {tensor.rank} used with "
                                  f"{len(consumed)} inputs and {len(new_spaces)} outputs")
        for leg in consumed:
            if leg.net is not self:
                raise StructuralError("leg from another network")
            if leg.used:
                raise StructuralError(f"{leg!r} consumed twice")
        for leg, d in zip(consumed + new_spaces, tensor.shape):
            dim = leg.space.dim if isinstance(leg, Leg) else leg.dim
            if dim != d:
                raise StructuralError(f"dimension mismatch: {dim} vs tensor axis {d}")
        for leg in consumed:
            leg.used = True
        objs = objs or [None] * len(new_spaces)
        new = [self._fresh(s, o) for s, o in zip(new_spaces, objs)]
        self.factors.append((tensor, tuple(l.id for l in consumed + new)))
        return tuple(new)

    # -- generic operations ------------------------------------------------
    def input(self, space, obj=None):
        """Free leg: becomes a leading axis of the evaluated tensor."""
        space, obj = _unwrap(space, obj)
        return self._fresh(space, obj)

    def element(self, tensor: Tensor, *spaces, objs=None):
        return self.add(tensor, [], spaces, objs)

    def el(self, tensor: Tensor, space, obj=None):
        space, obj = _unwrap(space, obj)
        return self.add(tensor, [], [space], [obj])[0]

    def scalar(self, c):
        self.factors.append((Tensor([], {(): c}, self.field), ()))

    def unit(self, space, obj=None):
        space, obj = _unwrap(space, obj)
        return self.add(space.unit, [], [space], [obj])[0]

    def mul(self, a: Leg, b: Leg) -> Leg:
        alg = a.space
        if b.space.dim != alg.dim:
            raise StructuralError(f"cannot multiply legs of {a.space.name} and {b.space.name}")
        return self.add(alg.mul, [a, b], [alg], [a.obj or b.obj])[0]

    def prod(self, *legs) -> Leg:
        """Left-to-right product ``((l0 l1) l2) ...``."""
        out = legs[0]
        for leg in legs[1:]:
            out = self.mul(out, leg)
        return out

    def apply(self, matrix: Tensor, leg: Leg, target, obj=None) -> Leg:
        """Linear map given as a (source, target) tensor."""
        target, obj = _unwrap(target, obj)
        return self.add(matrix, [leg], [target], [obj])[0]

    def split(self, leg: Leg):
        space = leg.space
        if not space.parts:
            raise StructuralError(f"{space.name} has no tensor factors")
        objs = leg.obj.parts if (leg.obj is not None and leg.obj.parts) else None
        return self.add(space.split_tensor(), [leg], list(space.parts), objs)

    def join(self, legs, space, obj=None) -> Leg:
        space, obj = _unwrap(space, obj)
        t = space.split_tensor()
        from .tensor import permute_legs
        n = len(legs)
        t = permute_legs(t, list(range(1, n + 1)) + [0])
        return self.add(t, list(legs), [space], [obj])[0]

    # -- quasi-Hopf data -----------------------------------------------------
    def _h(self, H):
        H = H or self.H
        if H is None:
            raise StructuralError("network has no quasi-Hopf algebra attached")
        return H

    def delta(self, h: Leg, H=None):
        H = self._h(H)
        return self.add(H.delta, [h], [H.algebra, H.algebra])

    def delta2(self, h: Leg, H=None):
        """``h(1,1) (x) h(1,2) (x) h2``."""
        a, b = self.delta(h, H)
        a1, a2 = self.delta(a, H)
        return a1, a2, b

    def eps(self, h: Leg, H=None):
        H = self._h(H)
        self.add(H.eps, [h], [])

    def S(self, h: Leg, H=None) -> Leg:
        H = self._h(H)
        return self.add(H.S, [h], [H.algebra])[0]

    def Sinv(self, h: Leg, H=None) -> Leg:
        H = self._h(H)
        return self.add(H.S_inv, [h], [H.algebra])[0]

    def _h_elem(self, t, H, n):
        return self.add(t, [], [H.algebra] * n)

    def Phi(self, H=None):
        H = self._h(H)
        return self._h_elem(H.phi, H, 3)

    def Phi_inv(self, H=None):
        H = self._h(H)
        return self._h_elem(H.phi_inv, H, 3)

    def alpha(self, H=None):
        H = self._h(H)
        return self._h_elem(H.alpha, H, 1)[0]

    def beta(self, H=None):
        H = self._h(H)
        return self._h_elem(H.beta, H, 1)[0]

    def hunit(self, H=None):
        H = self._h(H)
        return self._h_elem(H.algebra.unit, H, 1)[0]

    def f(self, H=None):
        H = self._h(H)
        return self._h_elem(H.twist.f, H, 2)

    def f_inv(self, H=None):
        H = self._h(H)
        return self._h_elem(H.twist.f_inv, H, 2)

    def pR(self, H=None):
        H = self._h(H)
        return self._h_elem(H.pairs.p, H, 2)

    def qR(self, H=None):
        H = self._h(H)
        return self._h_elem(H.pairs.q, H, 2)

    def helem(self, t: Tensor, H=None):
        """Element of ``H^{(x) n}`` given as an ``n``-axis tensor."""
        H = self._h(H)
        legs = self._h_elem(t, H, t.rank)
        return legs[0] if t.rank == 1 else legs

    # -- module and comodule structure ---------------------------------------
    def act(self, h: Leg, m: Leg) -> Leg:
        """Left action ``h . m`` of the structure carried by ``m``."""
        obj = _need(m, "left")
        return self.add(obj.left, [h, m], [obj.algebra], [obj])[0]

    def ract(self, m: Leg, h: Leg) -> Leg:
        obj = _need(m, "right")
        return self.add(obj.right, [m, h], [obj.algebra], [obj])[0]

    def lam(self, m: Leg):
        """Left comodule algebra coaction ``m[-1] (x) m[0]``."""
        obj = _need(m, "lam")
        return self.add(obj.lam, [m], [obj.H.algebra, obj.algebra], [None, obj])

    def rho(self, m: Leg):
        """Right comodule algebra coaction ``m<0> (x) m<1>``."""
        obj = _need(m, "rho")
        return self.add(obj.rho, [m], [obj.algebra, obj.H.algebra], [obj, None])

    def yd(self, m: Leg):
        """Yetter-Drinfeld coaction ``m(-1) (x) m(0)``."""
        obj = _need(m, "yd")
        return self.add(obj.yd, [m], [obj.H.algebra, obj.algebra], [None, obj])

    def obj_elem(self, t: Tensor, obj, pattern):
        """Element such as a reassociator; ``pattern`` is a string over 'H'/'A'."""
        spaces, objs = [], []
        for ch in pattern:
            if ch == "H":
                spaces.append(obj.H.algebra)
                objs.append(None)
            else:
                spaces.append(obj.algebra)
                objs.append(obj)
        return self.add(t, [], spaces, objs)

    # -- evaluation ---------------------------------------------------------
    def evaluate(self, inputs, outputs) -> Tensor:
        """Tensor with axes ``inputs + outputs``."""
        inputs, outputs = list(inputs), list(outputs)
        out_objs = {id(l) for l in outputs}
        for leg in outputs:
            if leg.used:
                raise StructuralError(f"output {leg!r} was already consumed")
        for leg in inputs:
            if not leg.used and id(leg) not in out_objs:
                raise StructuralError(f"input {leg!r} is never used")
        factors = list(self.factors)
        in_ids = [l.id for l in inputs]
        taken = set(in_ids)
        final = []
        for leg in outputs:
            if leg.id in taken:
                # passed straight through: route via an identity factor
                d = leg.space.dim
                new_id = len(self.dims)
                self.dims.append(d)
                ident = Tensor([(leg.space.name, d)] * 2, {(i, i): 1 for i in range(d)},
                               self.field, check=False)
                factors.append((ident, (leg.id, new_id)))
                final.append(new_id)
            else:
                final.append(leg.id)
                taken.add(leg.id)
        inside = {id(l) for l in inputs} | out_objs
        dangling = [l for l in self.legs if not l.used and id(l) not in inside]
        if dangling:
            raise StructuralError(f"legs neither consumed nor returned: {dangling}")
        out_ids = in_ids + final
        axes = [(l.space.name, l.space.dim) for l in inputs + outputs]
        data = contract_network([(t.data, ids) for t, ids in factors], out_ids, self.dims, self.field)
        return Tensor(axes, data, self.field, check=False)


def _unwrap(space, obj):
    if getattr(space, "is_structure", False):
        return space.algebra, space
    return space, obj


def _need(leg, attr):
    obj = leg.obj
    if obj is None or getattr(obj, attr, None) is None:
        name = obj.name if obj is not None else leg.space.name
        raise StructuralError(f"{name} carries no '{attr}' structure")
    return obj


def contract_network(factors, out_ids, dims, field):
    """Greedy pairwise contraction of sparse factors ``[(data, ids), ...]``."""
    out_set = set(out_ids)
    tensors = [(d, tuple(ids)) for d, ids in factors]
    if any(not d for d, _ in tensors):
        return {}
    occ = Counter(i for _, ids in tensors for i in ids)
    tensors = [sum_out(d, ids, {i for i in ids if i in out_set or occ[i] > 1}, field)
               for d, ids in tensors]
    while len(tensors) > 1:
        best = None
        n = len(tensors)
        for a in range(n):
            da, ia = tensors[a]
            sa = set(ia)
            for b in range(a + 1, n):
                db, ib = tensors[b]
                shared = sa.intersection(ib)
                if not shared:
                    continue
                denom = 1
                for s in shared:
                    denom *= dims[s]
                est = len(da) * len(db) / denom
                bound = 1
                for i in sa.union(ib):
                    if i not in shared or i in out_set:
                        bound *= dims[i]
                key = (min(est, bound), len(da) + len(db))
                if best is None or key < best[0]:
                    best = (key, a, b)
        if best is None:
            order = sorted(range(n), key=lambda k: len(tensors[k][0]))
            a, b = sorted(order[:2])
        else:
            _, a, b = best
        da, ia = tensors[a]
        db, ib = tensors[b]
        rest = [t for k, t in enumerate(tensors) if k not in (a, b)]
        elsewhere = set(out_set)
        for _, ids in rest:
            elsewhere.update(ids)
        keep = {i for i in set(ia) | set(ib) if i in elsewhere}
        data, ids = pair_contract(da, ia, db, ib, keep, field)
        if not data:
            return {}
        tensors = rest + [(data, ids)]
    data, ids = tensors[0] if tensors else ({(): 1}, ())
    data, ids = sum_out(data, ids, out_set, field)
    if tuple(ids) != tuple(out_ids):
        pos = [ids.index(i) for i in out_ids]
        g = getter(pos)
        data = {g(k): v for k, v in data.items()}
    return data
