"""Command-line surface: structure files, verification, constructions and theorem demos.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage or parse error, 3 partial verification.

Structure files are JSON documents::

    {
     "format": "quasismash/1",
     "header": {"field": "Q", "kind": "quasi-hopf", "name": ..., "provenance": ...,
                "dims": {...}, "labels": [...]},
     "tensors": {"mul": [[[0, 0, 0], "1"], ...], ...}
    }

Scalars are always strings (``"-3/2"``, ``"5 mod 7"``).  ``kind`` is
``"quasi-hopf"``, ``"morphism"``, a categorical tag (``vect``, ``left``,
``right``, ``bi``, ``yd``) or a list of structure kinds.  Structured
algebras name their quasi-Hopf algebra in ``header.over``, either as a
catalog name or as an embedded quasi-Hopf document.
"""
from __future__ import annotations

import argparse
import functools
import json
import os
import random
import sys

from . import products
from .categories import KINDS, TAG_KIND, QuasiAlgebra, braiding_twist, flip, twisted_tensor, verify_structure
from .algebra import Algebra
from .catalog import (QUASI_HOPF, dual_bimodule, end_adjoint, end_algebra, end_right_regular,
                      graded_octonions, left_comodule_self, quasi_hopf_by_name, right_comodule_self,
                      self_bicomodule, sign_gauge, trivial_gauge)
from .errors import NotInvertible, StructuralError, VerificationError
from .fields import Field, field_from_spec
from .morphism import Morphism, check_equal, check_morphism, identity
from .quasi_hopf import QuasiHopfAlgebra, gauge_twist, verify_quasi_hopf
from .report import Check, Report, compare
from .tensor import Tensor

FORMAT = "quasismash/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARTIAL = 0, 1, 2, 3

HOPF_TENSORS = ("mul", "unit", "delta", "eps", "phi", "S", "alpha", "beta", "phi_inv", "S_inv")
HOPF_REQUIRED = HOPF_TENSORS[:8]
ALGEBRA_TENSORS = ("mul", "unit", "left", "right", "lam", "rho", "yd", "phi_lam", "phi_rho", "phi_lr")
HEADER_KEYS = {"field", "kind", "name", "provenance", "dims", "labels", "over", "source", "target"}
TOP_KEYS = {"format", "header", "tensors"}


@functools.lru_cache(maxsize=None)
def catalog_hopf(name, field):
    """One shared instance per catalog name, so inputs built from it can be combined."""
    return quasi_hopf_by_name(name, field)


class ParseError(ValueError):
    """Malformed structure file; ``line`` and ``column`` are 1-based (0 when unknown)."""

    def __init__(self, message, line=0, column=0, path=None):
        self.message, self.line, self.column, self.path = message, line, column, path
        where = f"{path or '<input>'}:{line}:{column}" if line else (path or "<input>")
        super().__init__(f"{where}: {message}")


# -- serialization ------------------------------------------------------------------------

def _tensor_entries(t: Tensor, field: Field):
    return [[list(k), field.format(v)] for k, v in sorted(t.data.items())]


def _dump_doc(doc, indent=0):
    """JSON text with one tensor entry per line, so files stay diffable and canonical."""
    pad = " " * indent
    lines = [pad + "{", f'{pad} "format": {json.dumps(doc["format"])},']
    header = json.dumps(doc["header"], sort_keys=True, ensure_ascii=False)
    if isinstance(doc["header"].get("over"), dict):
        over = doc["header"]["over"]
        rest = {k: v for k, v in doc["header"].items() if k != "over"}
        body = json.dumps(rest, sort_keys=True, ensure_ascii=False)[:-1]
        header = body + (", " if rest else "") + '"over":\n' + _dump_doc(over, indent + 2) + "}"
    lines.append(f'{pad} "header": {header},')
    lines.append(f'{pad} "tensors": {{')
    names = list(doc["tensors"])
    for i, name in enumerate(names):
        entries = doc["tensors"][name]
        tail = "," if i < len(names) - 1 else ""
        if not entries:
            lines.append(f"{pad}  {json.dumps(name)}: []{tail}")
            continue
        lines.append(f"{pad}  {json.dumps(name)}: [")
        for j, e in enumerate(entries):
            sep = "," if j < len(entries) - 1 else ""
            lines.append(f"{pad}   {json.dumps(e, ensure_ascii=False)}{sep}")
        lines.append(f"{pad}  ]{tail}")
    lines.append(pad + " }")
    lines.append(pad + "}")
    return "\n".join(lines)


def hopf_document(H: QuasiHopfAlgebra):
    f = H.field
    tensors = {"mul": H.algebra.mul, "unit": H.algebra.unit, "delta": H.delta, "eps": H.eps,
               "phi": H.phi, "S": H.S, "alpha": H.alpha, "beta": H.beta}
    return {"format": FORMAT,
            "header": {"field": f.spec(), "kind": "quasi-hopf", "name": H.name,
                       "provenance": getattr(H, "provenance", H.name),
                       "dims": {"H": H.dim}, "labels": list(H.labels)},
            "tensors": {k: _tensor_entries(t, f) for k, t in tensors.items()}}


def _over(H):
    if H is None:
        return None
    if H.name in QUASI_HOPF and getattr(H, "provenance", H.name) == H.name:
        try:
            if hopf_document(quasi_hopf_by_name(H.name, H.field)) == hopf_document(H):
                return H.name
        except (KeyError, StructuralError):
            pass
    return hopf_document(H)


def algebra_document(A: QuasiAlgebra):
    f = A.field
    kinds = list(A.kinds)
    tensors = {"mul": A.algebra.mul, "unit": A.algebra.unit}
    for key in ALGEBRA_TENSORS[2:]:
        t = getattr(A, key)
        if t is not None:
            tensors[key] = t
    header = {"field": f.spec(), "kind": kinds[0] if len(kinds) == 1 else kinds, "name": A.name,
              "provenance": A.provenance, "dims": {"algebra": A.dim}, "labels": list(A.labels)}
    if A.H is not None:
        header["dims"]["H"] = A.H.dim
        header["over"] = _over(A.H)
    return {"format": FORMAT, "header": header,
            "tensors": {k: _tensor_entries(t, f) for k, t in tensors.items()}}


def morphism_document(f: Morphism, source_ref, target_ref):
    fld = f.source.field
    return {"format": FORMAT,
            "header": {"field": fld.spec(), "kind": "morphism", "name": f.name,
                       "provenance": f.name, "source": source_ref, "target": target_ref,
                       "dims": {"source": f.source.dim, "target": f.target.dim}},
            "tensors": {"matrix": _tensor_entries(f.matrix, fld)}}


def serialize(obj) -> str:
    """Canonical text for a quasi-Hopf algebra, structured algebra or parsed document."""
    if isinstance(obj, QuasiHopfAlgebra):
        doc = hopf_document(obj)
    elif isinstance(obj, QuasiAlgebra):
        doc = algebra_document(obj)
    elif isinstance(obj, dict):
        doc = obj
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return _dump_doc(doc) + "\n"


# -- parsing -----------------------------------------------------------------------------

def _locate(text, needle, start=0):
    """1-based (line, column) of ``needle`` in ``text``, or (0, 0)."""
    i = text.find(needle, start) if needle else -1
    if i < 0:
        return 0, 0
    line = text.count("\n", 0, i) + 1
    return line, i - (text.rfind("\n", 0, i) + 1) + 1


class _Reader:
    def __init__(self, text, path):
        self.text, self.path = text, path

    def error(self, message, needle=None, after=None):
        start = 0
        if after:
            start = max(self.text.find(after), 0)
        line, col = _locate(self.text, needle, start)
        return ParseError(message, line, col, self.path)

    def keys(self, obj, allowed, where):
        if not isinstance(obj, dict):
            raise self.error(f"{where} must be an object")
        for k in obj:
            if k not in allowed:
                raise self.error(f"unknown key {k!r} in {where}; allowed: {', '.join(sorted(allowed))}",
                                 json.dumps(k))

    def tensor(self, name, entries, shape, field, axes):
        if not isinstance(entries, list):
            raise self.error(f"tensor {name!r} must be a list of [index, scalar] pairs", json.dumps(name))
        data = {}
        for e in entries:
            ok = (isinstance(e, list) and len(e) == 2 and isinstance(e[0], list)
                  and all(type(i) is int for i in e[0]) and isinstance(e[1], str))
            if not ok:
                raise self.error(f"bad entry {e!r} in tensor {name!r}: expected [[i, ...], \"scalar\"]",
                                 json.dumps(e[0]) if isinstance(e, list) and e else json.dumps(name),
                                 after=json.dumps(name))
            k = tuple(e[0])
            if len(k) != len(shape) or any(not 0 <= i < d for i, d in zip(k, shape)):
                raise self.error(f"index {list(k)} out of range for {name!r} of shape {list(shape)}",
                                 json.dumps(e), after=json.dumps(name))
            if k in data:
                raise self.error(f"repeated index {list(k)} in {name!r}", json.dumps(e),
                                 after=json.dumps(name))
            try:
                data[k] = field.parse(e[1])
            except ValueError as exc:
                raise self.error(f"in tensor {name!r}: {exc}", json.dumps(e[1]),
                                 after=json.dumps(name)) from None
        return Tensor(axes, data, field)


def parse(text: str, path=None):
    """Read a structure file into a ``QuasiHopfAlgebra``, ``QuasiAlgebra`` or morphism document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno, path) from None
    return _from_doc(doc, _Reader(text, path))


def _from_doc(doc, rd: _Reader, nested=False):
    rd.keys(doc, TOP_KEYS, "document")
    for k in TOP_KEYS:
        if k not in doc:
            raise rd.error(f"missing key {k!r}")
    if doc["format"] != FORMAT:
        raise rd.error(f"unsupported format {doc['format']!r}; expected {FORMAT!r}", json.dumps(doc["format"]))
    header, tensors = doc["header"], doc["tensors"]
    rd.keys(header, HEADER_KEYS, "header")
    if not isinstance(tensors, dict):
        raise rd.error("tensors must be an object", '"tensors"')
    try:
        field = field_from_spec(str(header.get("field", "")))
    except ValueError as exc:
        raise rd.error(str(exc), '"field"') from None
    kind = header.get("kind")
    if kind == "quasi-hopf":
        return _hopf_from(header, tensors, field, rd)
    if kind == "morphism":
        if nested:
            raise rd.error("a morphism cannot be embedded", '"kind"')
        return _morphism_from(header, tensors, field, rd)
    return _algebra_from(header, tensors, field, rd, kind)


def _labels(header, dim, rd, default):
    labels = header.get("labels", default)
    if not isinstance(labels, list) or len(labels) != dim or not all(isinstance(x, str) for x in labels):
        raise rd.error(f"labels must be a list of {dim} strings", '"labels"')
    return labels


def _dim(header, key, rd):
    dims = header.get("dims")
    if not isinstance(dims, dict) or type(dims.get(key)) is not int or dims[key] < 1:
        raise rd.error(f"dims.{key} must be a positive integer", '"dims"')
    return dims[key]


def _hopf_from(header, tensors, field, rd):
    rd.keys(tensors, set(HOPF_TENSORS), "tensors")
    for k in HOPF_REQUIRED:
        if k not in tensors:
            raise rd.error(f"quasi-Hopf file lacks tensor {k!r}", '"tensors"')
    n = _dim(header, "H", rd)
    name = str(header.get("name", "H"))
    ax = (name, n)
    shapes = {"mul": 3, "unit": 1, "delta": 3, "eps": 1, "phi": 3, "S": 2, "alpha": 1, "beta": 1,
              "phi_inv": 3, "S_inv": 2}
    T = {k: rd.tensor(k, v, (n,) * shapes[k], field, [ax] * shapes[k]) for k, v in tensors.items()}
    labels = _labels(header, n, rd, [f"e{i}" for i in range(n)])
    try:
        alg = Algebra(name, T["mul"], T["unit"], labels=labels)
        H = QuasiHopfAlgebra(name, alg, T["delta"], T["eps"], T["phi"], T["S"], T["alpha"], T["beta"],
                             phi_inv=T.get("phi_inv"), S_inv=T.get("S_inv"), normalize=False)
    except StructuralError as exc:
        raise rd.error(str(exc)) from None
    H.provenance = str(header.get("provenance", name))
    return H


def _kinds(kind, rd):
    if isinstance(kind, str):
        kind = [TAG_KIND.get(kind, kind)]
    if not isinstance(kind, list) or not all(isinstance(k, str) for k in kind):
        raise rd.error("kind must be 'quasi-hopf', 'morphism', a tag or a list of structure kinds", '"kind"')
    bad = [k for k in kind if k not in KINDS]
    if bad:
        raise rd.error(f"unknown kind(s) {bad}; known tags: {', '.join(TAG_KIND)}; "
                       f"kinds: {', '.join(KINDS)}", '"kind"')
    return tuple(kind)


def _algebra_from(header, tensors, field, rd, kind):
    kinds = _kinds(kind, rd)
    rd.keys(tensors, set(ALGEBRA_TENSORS), "tensors")
    for k in ("mul", "unit"):
        if k not in tensors:
            raise rd.error(f"algebra file lacks tensor {k!r}", '"tensors"')
    d = _dim(header, "algebra", rd)
    name = str(header.get("name", "A"))
    H = None
    if "over" in header:
        over = header["over"]
        if isinstance(over, str):
            try:
                H = catalog_hopf(over, field)
            except KeyError as exc:
                raise rd.error(str(exc.args[0]), json.dumps(over)) from None
        else:
            H = _from_doc(over, rd, nested=True)
            if not isinstance(H, QuasiHopfAlgebra):
                raise rd.error("header.over must name or embed a quasi-Hopf algebra", '"over"')
        if H.field != field:
            raise rd.error(f"field of {H.name} differs from {field.spec()}", '"over"')
        if _dim(header, "H", rd) != H.dim:
            raise rd.error(f"dims.H does not match {H.name} (dim {H.dim})", '"dims"')
    n = H.dim if H is not None else None
    ax, hx = (name, d), (H.name if H else "H", n)
    layouts = {"mul": [ax] * 3, "unit": [ax], "left": [hx, ax, ax], "right": [ax, hx, ax],
               "lam": [ax, hx, ax], "rho": [ax, ax, hx], "yd": [ax, hx, ax],
               "phi_lam": [hx, hx, ax], "phi_rho": [ax, hx, hx], "phi_lr": [hx, ax, hx]}
    T = {}
    for k, v in tensors.items():
        axes = layouts[k]
        if any(dim is None for _, dim in axes):
            raise rd.error(f"tensor {k!r} needs header.over", json.dumps(k))
        T[k] = rd.tensor(k, v, tuple(dim for _, dim in axes), field, axes)
    labels = _labels(header, d, rd, [f"e{i}" for i in range(d)])
    try:
        alg = Algebra(name, T.pop("mul"), T.pop("unit"), labels=labels)
        A = QuasiAlgebra(alg, H, kinds=kinds, name=name, provenance=str(header.get("provenance", name)),
                         **T)
    except StructuralError as exc:
        raise rd.error(str(exc)) from None
    return A


def _morphism_from(header, tensors, field, rd):
    rd.keys(tensors, {"matrix"}, "tensors")
    refs = []
    for end in ("source", "target"):
        if not isinstance(header.get(end), str):
            raise rd.error(f"morphism header needs a {end} reference", '"kind"')
        try:
            refs.append(resolve_algebra(header[end], field))
        except (KeyError, ValueError, StructuralError) as exc:
            raise rd.error(f"{end}: {exc}", json.dumps(header[end])) from None
    S, T = refs
    if "matrix" not in tensors:
        raise rd.error("morphism file lacks tensor 'matrix'", '"tensors"')
    m = rd.tensor("matrix", tensors["matrix"], (S.dim, T.dim), field, [S.algebra.axis, T.algebra.axis])
    return Morphism(m, S, T, str(header.get("name", "f")))


def load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse(text, path)


# -- references: catalog names, prefixed constructions, files -----------------------------

def resolve_hopf(ref, field) -> QuasiHopfAlgebra:
    if os.path.exists(ref):
        H = load(ref)
        if not isinstance(H, QuasiHopfAlgebra):
            raise StructuralError(f"{ref} is not a quasi-Hopf algebra file")
        return H
    return catalog_hopf(ref, field)


def _end(H):
    E = end_algebra(H.algebra)
    return QuasiAlgebra(E, H, kinds=("algebra",), name=E.name, provenance=f"end:{H.name}")


ALGEBRA_REFS = {
    "h0": products.h_zero,
    "regular": products.regular,
    "dual": dual_bimodule,
    "self": self_bicomodule,
    "lself": left_comodule_self,
    "rself": right_comodule_self,
    "right-scalar": products.scalar_right,
    "scalar": lambda H: products.ground_field(H.field, H),
    "end": _end,
}


def resolve_algebra(ref, field) -> QuasiAlgebra:
    """``path``, ``scalar``, ``octonions`` or ``prefix:H`` with a prefix from ``ALGEBRA_REFS``."""
    if os.path.exists(ref):
        A = load(ref)
        if not isinstance(A, QuasiAlgebra):
            raise StructuralError(f"{ref} is not an algebra file")
        return A
    if ref == "scalar":
        A = products.ground_field(field)
        A.provenance = "scalar"
        return A
    if ref == "octonions":
        return graded_octonions(resolve_hopf("H8", field))
    prefix, _, rest = ref.partition(":")
    if prefix in ALGEBRA_REFS and rest:
        A = ALGEBRA_REFS[prefix](resolve_hopf(rest, field))
        A.provenance = ref
        return A
    raise KeyError(f"unknown algebra {ref!r}; use a file, 'scalar', 'octonions' or "
                   f"<{'|'.join(ALGEBRA_REFS)}>:<H>")


# -- commands ----------------------------------------------------------------------------

def _emit(report: Report, args, out=None):
    out = out or sys.stdout
    out.write((report.to_json() if args.json else report.text()) + "\n")


def _verdict(report: Report):
    if not report.ok:
        return EXIT_FAIL
    return EXIT_PARTIAL if report.partial else EXIT_OK


def _failure_report(subject, exc):
    rep = getattr(exc, "report", None)
    if isinstance(rep, Report):
        return rep
    out = Report(subject)
    out.add(Check("construction", False, None, str(exc)))
    return out


def cmd_verify(args):
    field = field_from_spec(args.field)
    target = args.target
    if os.path.exists(target):
        obj = load(target)
    elif target in QUASI_HOPF:
        obj = catalog_hopf(target, field)
    else:
        obj = resolve_algebra(target, field)
    if isinstance(obj, QuasiHopfAlgebra):
        rep = verify_quasi_hopf(obj)
    elif isinstance(obj, QuasiAlgebra):
        rep = verify_structure(obj)
        if obj.H is not None and obj.H.name not in QUASI_HOPF:
            rep.extend(verify_quasi_hopf(obj.H), prefix=f"{obj.H.name}: ")
    else:
        rep = check_morphism(obj)
    _emit(rep, args)
    return _verdict(rep)


def cmd_check(args):
    obj = load(args.path)
    if not isinstance(obj, Morphism):
        raise ParseError("expected a morphism file (kind 'morphism')", path=args.path)
    rep = check_morphism(obj, iso=args.iso)
    _emit(rep, args)
    return _verdict(rep)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.construction} needs {', '.join('--' + m for m in missing)}")
    return [getattr(args, n) for n in names]


class UsageError(ValueError):
    pass


def _sigma(A, which):
    if which == "identity":
        return identity(A).matrix
    if which == "parity":
        # -1 on basis vectors with an odd number of Clifford generators (labels containing "v")
        data = {(i, i): (-1 if l.count("v") % 2 else 1) for i, l in enumerate(A.labels)}
        return Tensor(identity(A).matrix.axes, data, A.field)
    raise UsageError(f"unknown sigma {which!r}; use identity or parity")


def build(args):
    """Run one construction from parsed arguments; returns the product."""
    P = products
    field = field_from_spec(args.field)
    c = args.construction
    alg = lambda ref: resolve_algebra(ref, field)
    hopf = lambda ref: resolve_hopf(ref, field)

    def check_over(A):
        if args.H is not None and A.H is not None and hopf(args.H).name != A.H.name:
            raise UsageError(f"--H {args.H} does not match {A.provenance} (over {A.H.name})")
        return A

    if c == "smash":
        return P.smash(check_over(alg(*_need(args, "A"))))
    if c == "h0":
        return P.h_zero(hopf(*_need(args, "H")))
    if c == "bv":
        H = hopf(*_need(args, "H"))
        maker = {"adjoint": end_adjoint, "right-regular": end_right_regular}.get(args.v or "adjoint")
        if maker is None:
            raise UsageError("--v must be adjoint or right-regular")
        E, vm = maker(H)
        B = QuasiAlgebra(E, H, kinds=("algebra",), name=E.name, provenance=f"end:{H.name}")
        return P.b_v(B, Morphism(vm, P.regular(H), B, args.v or "adjoint"))
    if c == "gen-smash":
        A, U = _need(args, "A", "U")
        return P.generalized_smash(alg(A), alg(U))
    if c == "lr-smash":
        D, U = _need(args, "D", "U")
        return P.lr_smash(alg(D), alg(U))
    if c == "diag-cross":
        D, U = _need(args, "D", "U")
        return P.diagonal_crossed(alg(D), alg(U))
    if c == "two-sided":
        A, B = _need(args, "A", "B")
        return P.two_sided_smash(alg(A), alg(B))
    if c == "quasi-smash":
        return P.quasi_smash(hopf(*_need(args, "H")))
    if c == "two-sided-crossed":
        return P.two_sided_crossed(hopf(*_need(args, "H")))
    if c == "odot":
        D, A = _need(args, "D", "A")
        return P.odot(alg(D), alg(A))
    if c == "diamond":
        C, A = _need(args, "C", "A")
        return P.diamond(alg(C), alg(A))
    if c == "braided":
        A, B = _need(args, "A", "B")
        return P.braided(alg(A), alg(B))
    if c == "clifford":
        A, q = _need(args, "A", "q")
        A = alg(A)
        try:
            qv = field.parse(q)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return P.clifford(A, _sigma(A, args.sigma), qv)
    if c == "gauge-twist":
        H = hopf(*_need(args, "H"))
        which = args.F or "sign"
        F = {"sign": sign_gauge, "trivial": trivial_gauge}.get(which)
        if F is None:
            raise UsageError("--F must be sign or trivial")
        HF = gauge_twist(H, F(H), name=f"{H.name}^F")
        HF.provenance = f"gauge-twist({H.name},{which})"
        return HF
    if c == "twisted-tensor":
        A, B = _need(args, "A", "B")
        A, B = alg(A), alg(B)
        which = args.R or "flip"
        if which == "flip":
            tag = "left" if A.left is not None and B.left is not None else "vect"
            R = flip(A, B, tag)
        elif which == "braiding":
            R = braiding_twist(A, B)
        else:
            raise UsageError("--R must be flip or braiding")
        T = twisted_tensor(R)
        T.provenance = f"twisted-tensor({A.provenance},{B.provenance},{which})"
        return T
    raise UsageError(f"unknown construction {c!r}")


CONSTRUCTIONS = ("smash", "bv", "h0", "gen-smash", "lr-smash", "diag-cross", "two-sided", "quasi-smash",
                 "two-sided-crossed", "odot", "diamond", "braided", "clifford", "gauge-twist",
                 "twisted-tensor")


def cmd_build(args):
    try:
        result = build(args)
    except VerificationError as exc:
        rep = _failure_report(f"build {args.construction}", exc)
        rep.checks.insert(0, Check("input", False, None, str(exc)))
        _emit(rep, args, sys.stderr if not args.output else sys.stdout)
        return EXIT_FAIL
    if isinstance(result, QuasiHopfAlgebra):
        rep = verify_quasi_hopf(result)
    else:
        rep = getattr(result, "report", None) or verify_structure(result)
    text = serialize(result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit(rep, args)
    else:
        sys.stdout.write(text)
        _emit(rep, args, sys.stderr)
    return _verdict(rep)


# -- demos -------------------------------------------------------------------------------

def _demo_pi(H):
    from .isomorphisms import pi_iso
    from .products import h_zero
    return pi_iso(h_zero(H)).report


def _demo_yd_pi(H):
    from .isomorphisms import yd_pi
    from .products import h_zero
    return yd_pi(h_zero(H)).report


def _demo_psi_xi(H):
    from .isomorphisms import psi_xi
    from .products import regular
    E, vm = end_adjoint(H)
    B = QuasiAlgebra(E, H, kinds=("algebra",), name=E.name)
    return psi_xi(B, Morphism(vm, regular(H), B, "adjoint")).report


def _demo_h0_square(H):
    from .isomorphisms import h0_square
    return h0_square(H).report


def _demo_duality(H):
    from .isomorphisms import duality
    return duality(H).report


def _demo_nu(H):
    from .isomorphisms import nu_pair
    return nu_pair(dual_bimodule(H), self_bicomodule(H)).report


def _demo_lr_iterated(H):
    from .isomorphisms import lr_iterated
    from .products import h_zero
    return lr_iterated(dual_bimodule(H), h_zero(H)).report


def _demo_diamond_assoc(H):
    from .isomorphisms import diamond_assoc
    from .products import h_zero
    H0 = h_zero(H)
    return diamond_assoc(H0, H0).report


def _demo_braid(H):
    from .isomorphisms import braid_iterate, yd_t1_expected, yd_triple
    from .products import h_zero
    H0 = h_zero(H)
    out = braid_iterate(*yd_triple(H0, H0, H0))
    rep = out["report"]
    rep.add(compare("T1-formula", out["T1"].tensor, yd_t1_expected(out["T1"]), 2))
    return rep


def _universal_cases(X, maps, n_random, rng):
    """Pairs (conjugation or identity, composed canonical maps)."""
    from .isomorphisms import conjugation, random_unit
    cases = [(identity(X), list(maps))]
    for _ in range(n_random):
        c, ci = random_unit(X, rng)
        cj = conjugation(X, c, ci)
        cases.append((cj, [cj.compose(m, m.name) for m in maps]))
    return cases


def _demo_universal_smash(H, n_random=3, seed=0):
    from .isomorphisms import universal_smash_all
    from .products import h_zero, smash
    A = h_zero(H)
    P = smash(A)
    u0 = Morphism(P.maps["i0"].matrix, A, P, "u")
    rep = Report(f"universal property of {P.provenance}")
    for k, (cj, (v, u)) in enumerate(_universal_cases(P, [P.maps["j"], u0], n_random, random.Random(seed))):
        w = universal_smash_all(A, P, v, u)
        rep.extend(w.report, prefix=f"case {k}: ")
        rep.add(check_equal(f"case {k}: factor-equals-oracle", w, Morphism(cj.matrix, P, P)))
    return rep


def _demo_universal_diagonal(H, n_random=3, seed=0):
    from .isomorphisms import nu_pair, universal_diagonal
    from .products import diagonal_crossed, lr_smash
    D, U = dual_bimodule(H), self_bicomodule(H)
    DC, LR = diagonal_crossed(D, U), lr_smash(D, U)
    rep = Report(f"universal property of {DC.provenance}")
    w = universal_diagonal(D, U, DC, DC.maps["j"], DC.maps["Gamma"])
    rep.extend(w.report, prefix="identity: ")
    rep.add(check_equal("identity: factor-equals-identity", w, Morphism(identity(DC).matrix, DC, DC)))
    nu = nu_pair(D, U)
    cases = _universal_cases(LR, [LR.maps["j"], LR.maps["Lambda"]], n_random, random.Random(seed))
    for k, (cj, (gamma, v)) in enumerate(cases):
        w = universal_diagonal(D, U, LR, gamma, v)
        rep.extend(w.report, prefix=f"lr case {k}: ")
        rep.add(check_equal(f"lr case {k}: factor-equals-oracle", w, cj.compose(nu)))
    return rep


def _demo_twist_invariance(H):
    from .isomorphisms import twist_transport
    from .products import h_zero
    F = sign_gauge(H) if getattr(H, "group", None) is not None else trivial_gauge(H)
    return twist_transport(h_zero(H), F).report


DEMOS = {
    "pi-iso": _demo_pi,
    "yd-pi": _demo_yd_pi,
    "psi-xi": _demo_psi_xi,
    "h0-square": _demo_h0_square,
    "duality": _demo_duality,
    "nu": _demo_nu,
    "lr-iterated": _demo_lr_iterated,
    "diamond-assoc": _demo_diamond_assoc,
    "braid": _demo_braid,
    "universal-smash": _demo_universal_smash,
    "universal-diagonal": _demo_universal_diagonal,
    "twist-invariance": _demo_twist_invariance,
}


def cmd_demo(args):
    if args.name not in DEMOS:
        raise UsageError(f"unknown demo {args.name!r}; known: {', '.join(DEMOS)}")
    H = resolve_hopf(args.algebra, field_from_spec(args.field))
    try:
        rep = DEMOS[args.name](H)
    except VerificationError as exc:
        rep = _failure_report(f"demo {args.name} over {H.name}", exc)
    _emit(rep, args)
    return _verdict(rep)


# -- entry point -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def make_parser():
    p = _Parser(prog="quasismash", description="Exact verification of quasi-Hopf smash products.")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--field", default="Q", help="'Q' or 'Fp:<p>' for catalog inputs (default Q)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the axiom suite of a structure file or catalog entry")
    v.add_argument("target", help="file path, catalog name (H2, H8, kZ2, SW4) or algebra reference")

    b = sub.add_parser("build", help="construct a product and write its structure file")
    b.add_argument("construction", choices=CONSTRUCTIONS)
    for opt in ("A", "B", "C", "D", "U", "H"):
        b.add_argument(f"--{opt}", help="algebra reference" if opt != "H" else "quasi-Hopf algebra")
    b.add_argument("--q", help="Clifford scalar")
    b.add_argument("--sigma", default="identity", help="Clifford involution: identity or parity")
    b.add_argument("--v", help="algebra map H -> End(H) for bv: adjoint or right-regular")
    b.add_argument("--F", help="gauge transformation: sign or trivial")
    b.add_argument("--R", help="twisting map: flip or braiding")
    b.add_argument("-o", "--output", help="output path (default: stdout, report on stderr)")

    c = sub.add_parser("check", help="check a morphism file")
    c.add_argument("path")
    c.add_argument("--iso", action="store_true", help="also require bijectivity")

    d = sub.add_parser("demo", help="run a named isomorphism or universal-property pipeline")
    d.add_argument("name", help=", ".join(DEMOS))
    d.add_argument("--algebra", default="H2", help="quasi-Hopf algebra (catalog name or file)")
    for sp in (v, b, c, d):
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        sp.add_argument("--field", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    return p


COMMANDS = {"verify": cmd_verify, "build": cmd_build, "check": cmd_check, "demo": cmd_demo}


def main(argv=None):
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_USAGE
    except (UsageError, KeyError) as exc:
        sys.stderr.write(f"usage error: {exc.args[0] if exc.args else exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (StructuralError, NotInvertible, VerificationError) as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
