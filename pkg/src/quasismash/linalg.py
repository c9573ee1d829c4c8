"""Exact linear algebra on sparse tensors: solving, rank, inverses."""
from __future__ import annotations

from .errors import InconsistentSystem, NotInvertible, StructuralError, Underdetermined
from .tensor import Tensor, flatten_index, getter, prod, unflatten_index


def _rref(rows, rhs, field):
    """Incremental reduced row echelon form.

    Returns ``(pivots, bad)`` where ``pivots`` maps pivot column to
    ``[row, rhs]`` and ``bad`` is the index of the first equation that
    reduced to ``0 = nonzero`` (or ``None``).
    """
    norm = field.normalize
    pivots = {}
    bad = None
    for n, (row, b) in enumerate(zip(rows, rhs)):
        r = {c: v for c, v in row.items() if v}
        for c in [c for c in r if c in pivots]:
            coef = r.get(c)
            if not coef:
                continue
            prow, pb = pivots[c]
            for cc, vv in prow.items():
                r[cc] = norm(r.get(cc, 0) - coef * vv)
            b = norm(b - coef * pb)
        r = {c: v for c, v in r.items() if v}
        if not r:
            if norm(b) and bad is None:
                bad = n
            continue
        c = min(r)
        inv = field.inv(r[c])
        r = {cc: norm(v * inv) for cc, v in r.items()}
        b = norm(b * inv)
        for prc, entry in pivots.items():
            prow = entry[0]
            coef = prow.get(c)
            if coef:
                for cc, vv in r.items():
                    nv = norm(prow.get(cc, 0) - coef * vv)
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
                entry[1] = norm(entry[1] - coef * b)
        pivots[c] = [r, b]
    return pivots, bad


def solve_rows(rows, rhs, ncols, field, unique=True):
    """Solve ``sum_c rows[t][c] x[c] = rhs[t]`` exactly.

    Returns the solution as a dict column -> value.
    """
    pivots, bad = _rref(rows, rhs, field)
    if bad is not None:
        raise InconsistentSystem("linear system has no solution",
                                 certificate=_certificate(rows, rhs, ncols, field))
    x = {c: b for c, (r, b) in pivots.items() if b}
    if unique and len(pivots) < ncols:
        free = min(set(range(ncols)) - set(pivots))
        kernel = {free: 1}
        for c, (r, _) in pivots.items():
            if free in r:
                kernel[c] = field.normalize(-r[free])
        raise Underdetermined("linear system has more than one solution", particular=x, kernel=kernel)
    return x


def _certificate(rows, rhs, ncols, field):
    """A combination ``y`` of equations with ``y.M = 0`` and ``y.rhs = 1``."""
    trows = [dict() for _ in range(ncols)]
    last = {}
    for t, (row, b) in enumerate(zip(rows, rhs)):
        for c, v in row.items():
            if v:
                trows[c][t] = v
        if b:
            last[t] = b
    y = solve_rows(trows + [last], [0] * ncols + [1], len(rows), field, unique=False)
    return dict(sorted(y.items()))


def rank_rows(rows, field):
    pivots, _ = _rref(rows, [0] * len(rows), field)
    return len(pivots)


class LinearMap:
    """Linear map stored as a tensor whose first ``n_source`` axes index the source."""

    def __init__(self, tensor: Tensor, n_source: int):
        if not 0 <= n_source <= tensor.rank:
            raise StructuralError("n_source out of range")
        self.tensor = tensor
        self.n_source = n_source

    @property
    def field(self):
        return self.tensor.field

    @property
    def source_axes(self):
        return self.tensor.axes[: self.n_source]

    @property
    def target_axes(self):
        return self.tensor.axes[self.n_source:]

    @property
    def source_dim(self):
        return prod(d for _, d in self.source_axes)

    @property
    def target_dim(self):
        return prod(d for _, d in self.target_axes)

    def matrix_rows(self):
        """Rows indexed by flat target, columns by flat source."""
        ss = tuple(d for _, d in self.source_axes)
        ts = tuple(d for _, d in self.target_axes)
        rows = [dict() for _ in range(self.target_dim)]
        n = self.n_source
        for k, v in self.tensor.data.items():
            rows[flatten_index(k[n:], ts)][flatten_index(k[:n], ss)] = v
        return rows

    def rank(self):
        return rank_rows(self.matrix_rows(), self.field)

    def apply(self, vec: Tensor) -> Tensor:
        if vec.shape != tuple(d for _, d in self.source_axes):
            raise StructuralError(f"vector shape {vec.shape} does not match source")
        n = self.n_source
        out = {}
        rest = getter(range(n, self.tensor.rank))
        head = getter(range(n))
        for k, v in self.tensor.data.items():
            c = vec.data.get(head(k))
            if c:
                kk = rest(k)
                out[kk] = out.get(kk, 0) + c * v
        return Tensor(self.target_axes, out, self.field)

    def compose(self, first: "LinearMap") -> "LinearMap":
        """``self o first``."""
        if tuple(d for _, d in first.target_axes) != tuple(d for _, d in self.source_axes):
            raise StructuralError("composition shape mismatch")
        from .tensor import contract
        pairing = [(first.n_source + i, i) for i in range(self.n_source)]
        return LinearMap(contract(first.tensor, self.tensor, pairing), first.n_source)

    def inverse(self) -> "LinearMap":
        if self.source_dim != self.target_dim:
            raise NotInvertible("map between spaces of different dimension")
        rows = self.matrix_rows()
        ss = tuple(d for _, d in self.source_axes)
        ts = tuple(d for _, d in self.target_axes)
        data = {}
        n = self.source_dim
        # solve M x = e_t for every target basis vector t
        cols = _inverse_columns(rows, n, self.field)
        for t, x in enumerate(cols):
            for s, v in x.items():
                data[unflatten_index(t, ts) + unflatten_index(s, ss)] = v
        return LinearMap(Tensor(self.target_axes + self.source_axes, data, self.field), len(ts))

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.n_source == other.n_source and self.tensor == other.tensor

    __hash__ = None

    @classmethod
    def identity(cls, axes, field):
        axes = tuple(axes)
        shape = tuple(d for _, d in axes)
        data = {}
        for f in range(prod(shape)):
            i = unflatten_index(f, shape)
            data[i + i] = 1
        return cls(Tensor(axes + axes, data, field), len(axes))


def _inverse_columns(rows, n, field):
    """Columns of the inverse matrix via one elimination of ``[M | I]``."""
    norm = field.normalize
    aug = []
    for t, row in enumerate(rows):
        r = dict(row)
        r[n + t] = 1
        aug.append(r)
    pivots, _ = _rref(aug, [0] * n, field)
    main = [c for c in pivots if c < n]
    if len(main) < n:
        raise NotInvertible("matrix is singular")
    cols = [dict() for _ in range(n)]
    for c in main:
        r = pivots[c][0]
        for cc, v in r.items():
            if cc >= n:
                cols[cc - n][c] = norm(v)
    return cols


def linear_solve(m: LinearMap, rhs: Tensor) -> Tensor:
    """Unique exact ``x`` with ``m(x) = rhs``.

    Raises ``InconsistentSystem`` (with certificate) or ``Underdetermined``.
    """
    if rhs.shape != tuple(d for _, d in m.target_axes):
        raise StructuralError(f"right-hand side shape {rhs.shape} does not match target")
    ts = rhs.shape
    b = [0] * m.target_dim
    for k, v in rhs.data.items():
        b[flatten_index(k, ts)] = v
    x = solve_rows(m.matrix_rows(), b, m.source_dim, m.field)
    ss = tuple(d for _, d in m.source_axes)
    return Tensor(m.source_axes, {unflatten_index(s, ss): v for s, v in x.items()}, m.field)


def matrix_inverse(t: Tensor) -> Tensor:
    """Inverse of a square 2-axis tensor read as (source, target)."""
    return LinearMap(t, 1).inverse().tensor


def rank(t: Tensor, n_source: int = 1) -> int:
    return LinearMap(t, n_source).rank()
