"""Finite-dimensional vector spaces and algebras given by structure constants."""
from __future__ import annotations

from .errors import InconsistentSystem, NotInvertible, StructuralError, Underdetermined
from .fields import QQ
from .linalg import LinearMap, linear_solve
from .tensor import Tensor, flatten_index, prod, unflatten_index


class Space:
    """A vector space with a named basis; may be a tensor product of ``parts``."""

    def __init__(self, name, dim, labels=None, parts=None, field=QQ):
        self.name = name
        self.dim = int(dim)
        self.field = field
        self.parts = tuple(parts) if parts else None
        if labels is None:
            if self.parts:
                labels = _product_labels(self.parts)
            else:
                labels = [f"e{i}" for i in range(self.dim)]
        self.labels = list(labels)
        if len(self.labels) != self.dim:
            raise StructuralError(f"{name}: {len(self.labels)} labels for dimension {self.dim}")
        if self.parts and prod(p.dim for p in self.parts) != self.dim:
            raise StructuralError(f"{name}: parts do not multiply to dimension {self.dim}")

    @property
    def axis(self):
        return (self.name, self.dim)

    def vector(self, coeffs) -> Tensor:
        """Element from ``{basis index or label: scalar}``."""
        data = {}
        for k, v in dict(coeffs).items():
            i = self.labels.index(k) if isinstance(k, str) else int(k)
            data[(i,)] = self.field.coerce(v)
        return Tensor([self.axis], data, self.field)

    def basis_vector(self, i) -> Tensor:
        return Tensor([self.axis], {(i,): 1}, self.field, check=False)

    def split_tensor(self) -> Tensor:
        """Axes ``(self, *parts)``; identifies flat index with part indices."""
        if not self.parts:
            raise StructuralError(f"{self.name} is not a tensor product")
        shape = tuple(p.dim for p in self.parts)
        data = {(f,) + unflatten_index(f, shape): 1 for f in range(self.dim)}
        return Tensor([self.axis] + [p.axis for p in self.parts], data, self.field, check=False)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name} dim {self.dim}>"


def _product_labels(parts):
    labels = [""]
    for p in parts:
        labels = [f"{a}|{b}" if a else b for a in labels for b in p.labels]
    return labels


def product_space(name, parts, field=None):
    field = field or parts[0].field
    return Space(name, prod(p.dim for p in parts), parts=parts, field=field)


class Algebra(Space):
    """Algebra with multiplication tensor ``mul[i, j, k]`` (coefficient of ``e_k`` in ``e_i e_j``)."""

    def __init__(self, name, mul: Tensor, unit: Tensor, labels=None, parts=None, field=None):
        field = field or mul.field
        super().__init__(name, mul.shape[0], labels, parts, field)
        d = self.dim
        if mul.shape != (d, d, d) or unit.shape != (d,):
            raise StructuralError(f"{name}: structure tensors have shapes {mul.shape}, {unit.shape}")
        self.mul = mul.relabel([name] * 3)
        self.unit = unit.relabel([name])

    @classmethod
    def from_space(cls, space: Space, mul: Tensor, unit: Tensor, name=None):
        return cls(name or space.name, mul, unit, labels=space.labels, parts=space.parts, field=space.field)

    def product(self, x: Tensor, y: Tensor) -> Tensor:
        out = {}
        for (i,), a in x.data.items():
            for (j,), b in y.data.items():
                ab = a * b
                for (k,), c in self._row(i, j):
                    out[(k,)] = out.get((k,), 0) + ab * c
        return Tensor([self.axis], out, self.field)

    def _row(self, i, j):
        table = self.__dict__.get("_table")
        if table is None:
            table = {}
            for (a, b, c), v in self.mul.data.items():
                table.setdefault((a, b), []).append(((c,), v))
            self._table = table
        return table.get((i, j), ())

    def one(self) -> Tensor:
        return self.unit

    def left_regular(self, a: Tensor) -> LinearMap:
        """Matrix of ``x -> a x``."""
        data = {}
        for (i,), c in a.data.items():
            for (ii, x, y), v in self.mul.data.items():
                if ii == i:
                    data[(x, y)] = data.get((x, y), 0) + c * v
        return LinearMap(Tensor([self.axis, self.axis], data, self.field), 1)

    def inverse(self, a: Tensor) -> Tensor:
        return algebra_inverse(a, self)


def algebra_inverse(a: Tensor, alg: Algebra) -> Tensor:
    """Two-sided inverse of ``a`` via its left-regular representation."""
    if a.shape != (alg.dim,):
        raise StructuralError(f"element of shape {a.shape} is not in {alg.name}")
    try:
        b = linear_solve(alg.left_regular(a), alg.unit)
    except (InconsistentSystem, Underdetermined) as exc:
        raise NotInvertible(f"element of {alg.name} is not invertible") from exc
    if alg.product(b, a) != alg.unit:
        raise NotInvertible(f"element of {alg.name} has only a one-sided inverse")
    return b


def tensor_algebra(name, parts, field=None) -> Algebra:
    """Componentwise product on the tensor product of ``parts``."""
    field = field or parts[0].field
    shape = tuple(p.dim for p in parts)
    entries = [((), (), (), 1)]
    for p in parts:
        nxt = []
        for (i, j, k), v in p.mul.data.items():
            for a, b, c, w in entries:
                nxt.append((a + (i,), b + (j,), c + (k,), w * v))
        entries = nxt
    data = {}
    for a, b, c, w in entries:
        key = (flatten_index(a, shape), flatten_index(b, shape), flatten_index(c, shape))
        data[key] = data.get(key, 0) + w
    d = prod(shape)
    unit = {}
    units = [((), 1)]
    for p in parts:
        units = [(u + (i,), w * v) for u, w in units for (i,), v in p.unit.data.items()]
    for u, w in units:
        unit[(flatten_index(u, shape),)] = w
    return Algebra(name, Tensor([(name, d)] * 3, data, field), Tensor([(name, d)], unit, field),
                   parts=parts, field=field)


def flat_element(t: Tensor, space: Space) -> Tensor:
    """Multi-axis element of a tensor product reinterpreted on ``space``."""
    return t.reshape([space.axis])


def element_inverse(t: Tensor, parts) -> Tensor:
    """Inverse of an element of ``parts[0] (x) parts[1] (x) ...`` with the componentwise product."""
    alg = tensor_algebra("T", list(parts))
    inv = algebra_inverse(t.reshape([alg.axis]), alg)
    return inv.reshape(t.axes)
