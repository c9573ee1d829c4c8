"""Sparse multi-index tensors over an exact field."""
from __future__ import annotations

import itertools
import warnings
from operator import itemgetter

from .errors import StructuralError
from .fields import QQ, Field


def getter(positions):
    """Return ``key -> tuple(key[p] for p in positions)``."""
    positions = tuple(positions)
    if not positions:
        return lambda k: ()
    if len(positions) == 1:
        p = positions[0]
        return lambda k: (k[p],)
    return itemgetter(*positions)


def _clean(data: dict, field: Field) -> dict:
    norm = field.normalize
    out = {}
    for k, v in data.items():
        v = norm(v)
        if v:
            out[k] = v
    return out


class Tensor:
    """Sparse tensor: labeled axes and a dict from index tuples to nonzero scalars."""

    __slots__ = ("axes", "data", "field")

    def __init__(self, axes, data=None, field: Field = QQ, check=True):
        self.axes = tuple((str(lab), int(dim)) for lab, dim in axes)
        self.field = field
        data = {} if data is None else data
        if check:
            shape = self.shape
            fixed = {}
            for k, v in data.items():
                k = tuple(int(i) for i in k)
                if len(k) != len(shape) or any(not 0 <= i < d for i, d in zip(k, shape)):
                    raise StructuralError(f"index {k} out of range for shape {shape}")
                fixed[k] = fixed.get(k, 0) + v
            data = _clean(fixed, field)
        self.data = data

    # -- basic properties ------------------------------------------------
    @property
    def shape(self):
        return tuple(d for _, d in self.axes)

    @property
    def labels(self):
        return tuple(lab for lab, _ in self.axes)

    @property
    def rank(self):
        return len(self.axes)

    @property
    def nnz(self):
        return len(self.data)

    @property
    def fill(self):
        total = 1
        for d in self.shape:
            total *= d
        return len(self.data) / total if total else 0.0

    def __getitem__(self, idx):
        if not isinstance(idx, tuple):
            idx = (idx,)
        return self.data.get(idx, 0)

    def items(self):
        return sorted(self.data.items())

    def __iter__(self):
        return iter(self.items())

    def __repr__(self):
        body = ", ".join(f"{k}: {self.field.format(v)}" for k, v in self.items()[:6])
        more = ", ..." if self.nnz > 6 else ""
        return f"Tensor({list(self.axes)}, {{{body}{more}}})"

    # -- constructors ----------------------------------------------------
    @classmethod
    def zeros(cls, axes, field=QQ):
        return cls(axes, {}, field, check=False)

    @classmethod
    def basis(cls, axes, idx, field=QQ):
        return cls(axes, {tuple(idx): 1}, field)

    @classmethod
    def from_dense(cls, array, axes, field=QQ):
        axes = tuple(axes)
        data = {}
        shape = tuple(d for _, d in axes)
        for idx in itertools.product(*(range(d) for d in shape)):
            v = array
            for i in idx:
                v = v[i]
            if v:
                data[idx] = field.coerce(v)
        return cls(axes, data, field)

    def to_dense(self):
        """Nested lists, zeros filled in."""
        def build(prefix, depth):
            if depth == self.rank:
                return self.data.get(tuple(prefix), 0)
            return [build(prefix + [i], depth + 1) for i in range(self.shape[depth])]
        return build([], 0)

    # -- arithmetic --------------------------------------------------------
    def _same_shape(self, other):
        if self.shape != other.shape:
            raise StructuralError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        data = dict(self.data)
        for k, v in other.data.items():
            data[k] = data.get(k, 0) + v
        return Tensor(self.axes, _clean(data, self.field), self.field, check=False)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        if not c:
            return Tensor.zeros(self.axes, self.field)
        return Tensor(self.axes, _clean({k: v * c for k, v in self.data.items()}, self.field),
                      self.field, check=False)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    __hash__ = None

    def is_zero(self):
        return not self.data

    def relabel(self, labels):
        return Tensor(tuple((lab, d) for lab, (_, d) in zip(labels, self.axes)),
                      self.data, self.field, check=False)

    def reshape(self, axes):
        """Reinterpret with new axes of equal total size (row-major)."""
        axes = tuple(axes)
        new_shape = tuple(d for _, d in axes)
        if _prod(new_shape) != _prod(self.shape):
            raise StructuralError(f"cannot reshape {self.shape} to {new_shape}")
        data = {}
        for k, v in self.data.items():
            data[_unflatten(_flatten(k, self.shape), new_shape)] = v
        return Tensor(axes, data, self.field, check=False)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _flatten(idx, shape):
    f = 0
    for i, d in zip(idx, shape):
        f = f * d + i
    return f


def _unflatten(f, shape):
    out = []
    for d in reversed(shape):
        f, r = divmod(f, d)
        out.append(r)
    return tuple(reversed(out))


flatten_index = _flatten
unflatten_index = _unflatten
prod = _prod


def pair_contract(da, ia, db, ib, keep, field):
    """Contract two raw sparse dicts over shared index ids.

    ``ia``/``ib`` name each position; ids present in both are matched.
    Result keeps ids in ``keep`` (first-seen order, ``ia`` before ``ib``)
    and sums the rest.
    """
    sb = set(ib)
    shared = [i for i in ia if i in sb]
    pa = [ia.index(s) for s in shared]
    pb = [ib.index(s) for s in shared]
    out_ids = []
    pos = []
    for p, i in enumerate(ia):
        if i in keep and i not in out_ids:
            out_ids.append(i)
            pos.append(p)
    for p, i in enumerate(ib):
        if i in keep and i not in out_ids:
            out_ids.append(i)
            pos.append(len(ia) + p)
    ka_get, kb_get, out_get = getter(pa), getter(pb), getter(pos)
    buckets = {}
    for kb, vb in db.items():
        buckets.setdefault(kb_get(kb), []).append((kb, vb))
    out = {}
    get = out.get
    for ka, va in da.items():
        bucket = buckets.get(ka_get(ka))
        if bucket is None:
            continue
        for kb, vb in bucket:
            ok = out_get(ka + kb)
            out[ok] = get(ok, 0) + va * vb
    return _clean(out, field), tuple(out_ids)


def sum_out(data, ids, keep, field):
    pos = [p for p, i in enumerate(ids) if i in keep]
    if len(pos) == len(ids):
        return data, tuple(ids)
    g = getter(pos)
    out = {}
    for k, v in data.items():
        kk = g(k)
        out[kk] = out.get(kk, 0) + v
    return _clean(out, field), tuple(ids[p] for p in pos)


def contract(t1: Tensor, t2: Tensor, pairing):
    """Sum over paired axes ``[(axis_of_t1, axis_of_t2), ...]``.

    Result axes: remaining axes of ``t1`` in order, then those of ``t2``.
    """
    pairing = list(pairing)
    used1 = [a for a, _ in pairing]
    used2 = [b for _, b in pairing]
    if len(set(used1)) != len(used1) or len(set(used2)) != len(used2):
        raise StructuralError("an axis is paired twice")
    for a, b in pairing:
        if not (0 <= a < t1.rank and 0 <= b < t2.rank):
            raise StructuralError(f"pairing ({a}, {b}) out of range")
        (la, da), (lb, db) = t1.axes[a], t2.axes[b]
        if da != db:
            raise StructuralError(f"cannot pair axis {a} ({la}, dim {da}) with axis {b} ({lb}, dim {db})")
        if la != lb:
            warnings.warn(f"contracting axes with different labels {la!r} and {lb!r}", stacklevel=2)
    ia = list(range(t1.rank))
    ib = [None] * t2.rank
    nxt = t1.rank
    for a, b in pairing:
        ib[b] = a
    for j in range(t2.rank):
        if ib[j] is None:
            ib[j] = nxt
            nxt += 1
    keep = set(range(nxt)) - set(used1)
    data, out_ids = pair_contract(t1.data, tuple(ia), t2.data, tuple(ib), keep, t1.field)
    axes = [t1.axes[i] for i in range(t1.rank) if i not in used1]
    axes += [t2.axes[j] for j in range(t2.rank) if j not in used2]
    return Tensor(axes, data, t1.field, check=False)


def outer(t1: Tensor, t2: Tensor):
    return contract(t1, t2, [])


def permute_legs(t: Tensor, perm):
    """Axis ``k`` of the result is axis ``perm[k]`` of ``t``."""
    perm = tuple(perm)
    if len(perm) != t.rank or sorted(perm) != list(range(t.rank)):
        raise StructuralError(f"permutation {perm} does not match rank {t.rank}")
    g = getter(perm)
    return Tensor([t.axes[p] for p in perm], {g(k): v for k, v in t.data.items()}, t.field, check=False)


def inverse_permutation(perm):
    inv = [0] * len(perm)
    for k, p in enumerate(perm):
        inv[p] = k
    return tuple(inv)
