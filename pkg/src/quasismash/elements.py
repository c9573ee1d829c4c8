"""Elements of tensor products of algebras, multiplied legwise."""
from __future__ import annotations

from .errors import InconsistentSystem, NotInvertible, StructuralError, Underdetermined
from .linalg import LinearMap, linear_solve
from .network import Net
from .tensor import Tensor


def unit_of(spaces) -> Tensor:
    net = Net(field=spaces[0].field)
    legs = [net.unit(s) for s in spaces]
    return net.evaluate([], legs)


def emul(x: Tensor, y: Tensor, spaces) -> Tensor:
    net = Net(field=spaces[0].field)
    a = net.element(x, *spaces)
    b = net.element(y, *spaces)
    return net.evaluate([], [p * q for p, q in zip(a, b)])


def left_mult_map(x: Tensor, spaces) -> LinearMap:
    net = Net(field=spaces[0].field)
    ins = [net.input(s) for s in spaces]
    a = net.element(x, *spaces)
    return LinearMap(net.evaluate(ins, [p * q for p, q in zip(a, ins)]), len(spaces))


def einverse(x: Tensor, spaces) -> Tensor:
    """Two-sided inverse of ``x`` in the tensor product algebra."""
    if x.shape != tuple(s.dim for s in spaces):
        raise StructuralError(f"element of shape {x.shape} does not fit {[s.name for s in spaces]}")
    one = unit_of(spaces)
    try:
        inv = linear_solve(left_mult_map(x, spaces), one)
    except (InconsistentSystem, Underdetermined) as exc:
        raise NotInvertible("element is not invertible") from exc
    inv = Tensor(x.axes, inv.data, x.field, check=False)
    if emul(inv, x, spaces) != one:
        raise NotInvertible("element has only a one-sided inverse")
    return inv


def is_inverse_pair(x, y, spaces) -> bool:
    one = unit_of(spaces)
    return emul(x, y, spaces) == one and emul(y, x, spaces) == one
