"""Inputs for the universal-property tests: valid data pushed into End(X), and ways to break it."""
from quasismash.algebra import Algebra
from quasismash.catalog import end_algebra
from quasismash.categories import QuasiAlgebra, trivial_left, trivial_right
from quasismash.isomorphisms import conjugation, random_unit
from quasismash.morphism import Morphism, from_body
from quasismash.products import regular, two_sided_smash
from quasismash.tensor import Tensor


def regular_rep(X):
    """``End(X)`` as a plain algebra and the left-regular algebra map ``L: X -> End(X)``."""
    E = end_algebra(X.algebra)
    n = X.dim
    data = {}
    for (a, j, k), c in X.algebra.mul.data.items():
        data[(a, k * n + j)] = data.get((a, k * n + j), 0) + c
    EX = QuasiAlgebra(E, X.H, kinds=("algebra",), name=E.name)
    m = Tensor([X.algebra.axis, E.axis], {k: c for k, c in data.items() if c}, X.field)
    return EX, Morphism(m, X, EX, "L")


def random_conjugation(X, rng):
    c, c_inv = random_unit(X, rng)
    return conjugation(X, c, c_inv)


def bump(m: Morphism, i, j, by=1) -> Morphism:
    """``m`` with one matrix entry shifted."""
    d = dict(m.matrix.data)
    d[(i, j)] = d.get((i, j), 0) + by
    d = {k: c for k, c in d.items() if c}
    return Morphism(Tensor(m.matrix.axes, d, m.matrix.field), m.source, m.target, m.name)


def scaled(m: Morphism, s) -> Morphism:
    return Morphism(m.matrix.scale(s), m.source, m.target, m.name)


def matrices_right(H):
    """2x2 matrices as a right module algebra with trivial action (non-commutative)."""
    base = Algebra("k2", Tensor([("k2", 2)] * 3, {(0, 0, 0): 1, (1, 1, 1): 1}, H.field),
                   Tensor([("k2", 2)], {(0,): 1, (1,): 1}, H.field), labels=["e1", "e2"])
    alg = end_algebra(base)
    return QuasiAlgebra(alg, H, kinds=("right-module-algebra",), right=trivial_right(alg, H),
                        left=trivial_left(alg, H), name="M2", provenance="M2")


def two_sided_canonical(A, B):
    """``A # H # B`` with its three canonical inclusions ``v_A``, ``gamma``, ``v_B``."""
    H = A.H
    X = two_sided_smash(A, B)
    vA = from_body(A, X, lambda n, a: n.join([a, n.hunit(), n.unit(B)], X), H, "v_A")
    gamma = from_body(regular(H), X, lambda n, h: n.join([n.unit(A), h, n.unit(B)], X), H, "j")
    vB = from_body(B, X, lambda n, b: n.join([n.unit(A), n.hunit(), b], X), H, "v_B")
    return X, gamma, vA, vB
