"""Textbook Hopf-algebra formulas evaluated directly on structure constants.

Used as an independent oracle: nothing here goes through the tensor
network evaluator.  Only valid when the reassociator is trivial.
"""
from collections import defaultdict


def table(t, n_in):
    """``{inputs: {output index tuple: coefficient}}`` from a tensor whose first ``n_in`` axes are inputs."""
    out = defaultdict(dict)
    for k, v in t.data.items():
        out[k[:n_in]][k[n_in:]] = v
    return out


class Vec(dict):
    """Sparse vector on tuples of basis indices."""

    def add(self, key, c):
        v = self.get(key, 0) + c
        if v:
            self[key] = v
        else:
            self.pop(key, None)


def bilinear(table2, x, y):
    """Apply a product table to two sparse vectors on single indices."""
    out = Vec()
    for (i,), a in x.items():
        for (j,), b in y.items():
            for (k,), c in table2.get((i, j), {}).items():
                out.add((k,), a * b * c)
    return out


def basis(i):
    return Vec({(i,): 1})


def split(vec, pos):
    """Yield (component index at ``pos``, coefficient, rest) for a vector on tuples."""
    for key, c in vec.items():
        yield key[pos], c, key[:pos] + key[pos + 1:]


class Classical:
    def __init__(self, H):
        self.H = H
        self.mul = table(H.algebra.mul, 2)
        self.delta = table(H.delta, 1)
        self.S = table(H.S, 1)
        self.S_inv = table(H.S_inv, 1)

    def m(self, x, y):
        return bilinear(self.mul, x, y)

    def antipode(self, x, inverse=False):
        tab = self.S_inv if inverse else self.S
        out = Vec()
        for (i,), a in x.items():
            for (k,), c in tab.get((i,), {}).items():
                out.add((k,), a * c)
        return out

    def coproduct(self, i):
        """``[(h1, h2, coefficient)]`` for a basis element."""
        return [(a, b, c) for (a, b), c in self.delta.get((i,), {}).items()]


def act(tab, h, x):
    """Linear action ``h . x`` with ``tab[(h, x)] = {(y,): c}``; ``h`` and ``x`` sparse vectors."""
    return bilinear(tab, h, x)


def ract(tab, x, h):
    out = Vec()
    for (i,), a in x.items():
        for (j,), b in h.items():
            for (k,), c in tab.get((i, j), {}).items():
                out.add((k,), a * b * c)
    return out


def coact(tab, i):
    """``[(first, second, coefficient)]`` for a coaction table with one input."""
    return [(a, b, c) for (a, b), c in tab.get((i,), {}).items()]


def flat(vec_pairs, dim2):
    """Pairs of sparse vectors (first, second, coefficient) into the flat product basis."""
    out = {}
    for x, y, c in vec_pairs:
        for (i,), a in x.items():
            for (j,), b in y.items():
                k = (i * dim2 + j,)
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def product_tensor(d1, d2, rule):
    """Multiplication table of a product on ``X (x) Y``: ``rule(x, y, x2, y2)`` gives (first, second, c) pairs."""
    data = {}
    for x in range(d1):
        for y in range(d2):
            for x2 in range(d1):
                for y2 in range(d2):
                    for (k,), v in flat(rule(x, y, x2, y2), d2).items():
                        data[(x * d2 + y, x2 * d2 + y2, k)] = v
    return data


def smash_rule(H, A):
    """``(a # h)(a' # h') = a (h1 . a') # h2 h'``."""
    C, mA, left = Classical(H), table(A.algebra.mul, 2), table(A.left, 2)

    def rule(a, h, a2, h2):
        out = []
        for k1, k2, c in C.coproduct(h):
            out.append((bilinear(mA, basis(a), act(left, basis(k1), basis(a2))), C.m(basis(k2), basis(h2)), c))
        return out
    return rule


def gen_smash_rule(H, A, U):
    """``(a >< u)(a' >< u') = a (u[-1] . a') >< u[0] u'``."""
    mA, mU, left, lam = table(A.algebra.mul, 2), table(U.algebra.mul, 2), table(A.left, 2), table(U.lam, 1)

    def rule(a, u, a2, u2):
        return [(bilinear(mA, basis(a), act(left, basis(uh), basis(a2))), bilinear(mU, basis(u0), basis(u2)), c)
                for uh, u0, c in coact(lam, u)]
    return rule


def lr_smash_rule(H, D, U):
    """``(phi # u)(phi' # u') = (phi <- u'<1>)(u[-1] -> phi') # u[0] u'<0>``."""
    mD, mU = table(D.algebra.mul, 2), table(U.algebra.mul, 2)
    left, right, lam, rho = table(D.left, 2), table(D.right, 2), table(U.lam, 1), table(U.rho, 1)

    def rule(p, u, p2, u2):
        out = []
        for uh, u0, c in coact(lam, u):
            for w0, wh, d in coact(rho, u2):
                first = bilinear(mD, ract(right, basis(p), basis(wh)), act(left, basis(uh), basis(p2)))
                out.append((first, bilinear(mU, basis(u0), basis(w0)), c * d))
        return out
    return rule


def diagonal_rule(H, D, U):
    """``(phi >< u)(phi' >< u') = phi (u<0>[-1] -> phi' <- S^-1(u<1>)) >< u<0>[0] u'``."""
    C = Classical(H)
    mD, mU = table(D.algebra.mul, 2), table(U.algebra.mul, 2)
    left, right, lam, rho = table(D.left, 2), table(D.right, 2), table(U.lam, 1), table(U.rho, 1)

    def rule(p, u, p2, u2):
        out = []
        for r0, rh, c in coact(rho, u):
            for lh, l0, d in coact(lam, r0):
                mid = ract(right, act(left, basis(lh), basis(p2)), C.antipode(basis(rh), inverse=True))
                out.append((bilinear(mD, basis(p), mid), bilinear(mU, basis(l0), basis(u2)), c * d))
        return out
    return rule


def diamond_rule(H, Cm, A):
    """``(c (x) a)(c' (x) a') = c (a[-1] . c') (x) a[0] a'``."""
    mC, mA, left, yd = table(Cm.algebra.mul, 2), table(A.algebra.mul, 2), table(Cm.left, 2), table(A.yd, 1)

    def rule(c, a, c2, a2):
        return [(bilinear(mC, basis(c), act(left, basis(ah), basis(c2))), bilinear(mA, basis(a0), basis(a2)), k)
                for ah, a0, k in coact(yd, a)]
    return rule


def adjoint_action(H):
    """``h . b = h1 b S(h2)`` as a table."""
    C = Classical(H)
    out = defaultdict(dict)
    for h in range(H.dim):
        for b in range(H.dim):
            v = Vec()
            for k1, k2, c in C.coproduct(h):
                for key, x in C.m(C.m(basis(k1), basis(b)), C.antipode(basis(k2))).items():
                    v.add(key, c * x)
            if v:
                out[(h, b)] = dict(v)
    return out


def h_zero_coaction(H):
    """The coaction of ``H_0`` with every reassociator trivial: ``b -> b1 (x) b2``."""
    C = Classical(H)
    out = defaultdict(dict)
    for b in range(H.dim):
        for b1, b2, c in C.coproduct(b):
            out[(b,)][(b1, b2)] = c
    return out
