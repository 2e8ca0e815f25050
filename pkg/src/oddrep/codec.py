"""JSON encodings of matrices, forms, representation images and fibre configurations.

Integer entries may be given unreduced; they are reduced modulo l on
decoding, with a :class:`ReductionWarning` whenever that changes a value.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path
from typing import Any

from .errors import InputError, NotPrime, ShapeError
from .field import PrimeField, SquareClass
from .linalg import Matrix
from .ortho import BilinearSpace, FormKind, OrthogonalVerdict
from .reptheory import OddnessReport, RepImage
from .surface import KodairaFiber, RealComponents, SurfaceConfig, SurfaceReport


class ReductionWarning(UserWarning):
    pass


def _require(obj: Any, key: str, kind=None):
    if not isinstance(obj, dict):
        raise InputError(f"expected a JSON object, got {type(obj).__name__}")
    if key not in obj:
        raise InputError(f"missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind) or isinstance(val, bool) and kind is int:
        raise InputError(f"{key!r} must be {getattr(kind, '__name__', kind)}")
    return val


# --- matrices and forms ----------------------------------------------------

def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": m.tolist()}


def matrix_from_json(obj: Any, field: PrimeField) -> Matrix:
    rows = _require(obj, "rows", int)
    cols = _require(obj, "cols", int)
    entries = _require(obj, "entries", list)
    if len(entries) != rows or any(not isinstance(r, list) or len(r) != cols for r in entries):
        raise ShapeError(f"entries do not form a {rows} x {cols} array")
    p = field.modulus
    for r in entries:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"matrix entry {x!r} is not an integer")
    if any(not 0 <= x < p for r in entries for x in r):
        warnings.warn(f"matrix entries reduced modulo {p}", ReductionWarning, stacklevel=2)
    if rows == 0:
        return Matrix.zeros(0, cols, field)
    return Matrix(field, [[x % p for x in r] for r in entries])


def form_to_json(V: BilinearSpace) -> dict:
    return {"kind": V.kind.value, "gram": matrix_to_json(V.gram)}


def form_from_json(obj: Any, field: PrimeField) -> BilinearSpace:
    kind = _require(obj, "kind", str)
    try:
        kind = FormKind(kind)
    except ValueError:
        raise InputError(f"unknown form kind {kind!r}") from None
    if "identity_dim" in obj:
        if kind is not FormKind.SYMMETRIC:
            raise InputError("identity_dim shorthand is only for symmetric forms")
        return BilinearSpace.identity(_require(obj, "identity_dim", int), field)
    return BilinearSpace(kind, matrix_from_json(_require(obj, "gram"), field))


def field_from_json(obj: Any) -> PrimeField:
    try:
        return PrimeField(_require(obj, "ell", int))
    except NotPrime as exc:
        raise InputError(str(exc)) from None


def rep_to_json(rep: RepImage) -> dict:
    return {
        "ell": rep.field.modulus,
        "dim": rep.dim,
        "form": form_to_json(rep.space),
        "generators": [matrix_to_json(g) for g in rep.generators],
        "conjugation": matrix_to_json(rep.conjugation),
    }


def rep_from_json(obj: Any) -> RepImage:
    F = field_from_json(obj)
    dim = _require(obj, "dim", int)
    space = form_from_json(_require(obj, "form"), F)
    if space.dim != dim:
        raise ShapeError(f"form has dimension {space.dim}, expected {dim}")
    gens = [matrix_from_json(g, F) for g in _require(obj, "generators", list)]
    conj = matrix_from_json(_require(obj, "conjugation"), F)
    return RepImage(space, tuple(gens), conj)


# --- surfaces --------------------------------------------------------------

_PLAIN = {"II", "III", "IV", "IV_star", "III_star", "II_star"}


def fiber_to_json(f: KodairaFiber) -> dict:
    if f.symbol == "I_n":
        return {"type": "I_n", "n": f.n, "split": f.split}
    if f.symbol == "I_n_star":
        return {"type": "I_n_star", "n": f.n, "real_components": f.real_components.value}
    return {"type": f.symbol}


def fiber_from_json(obj: Any) -> tuple[KodairaFiber, bool]:
    """Decode one fibre; the flag says whether real_components was defaulted."""
    t = _require(obj, "type", str)
    try:
        if t == "I_n":
            return KodairaFiber("I_n", n=_require(obj, "n", int), split=_require(obj, "split", bool)), False
        if t == "I_n_star":
            rc = obj.get("real_components")
            comps = RealComponents(rc) if rc is not None else RealComponents.ALL
            return KodairaFiber("I_n_star", n=_require(obj, "n", int), real_components=comps), rc is None
        if t in _PLAIN:
            return KodairaFiber(t), False
    except ValueError as exc:
        raise InputError(f"bad fibre {obj!r}: {exc}") from None
    raise InputError(f"unknown fibre type {t!r}")


def config_to_json(config: SurfaceConfig) -> dict:
    return {
        "real_fibers": [fiber_to_json(f) for f in config.real_fibers],
        "conjugate_pairs": [fiber_to_json(f) for f in config.conjugate_pairs],
    }


def config_from_json(obj: Any) -> tuple[SurfaceConfig, int]:
    """Decode a configuration; also return how many I_n* structures were defaulted."""
    if not isinstance(obj, dict):
        raise InputError("surface configuration must be a JSON object")
    real = [fiber_from_json(f) for f in obj.get("real_fibers", [])]
    pairs = [fiber_from_json(f) for f in obj.get("conjugate_pairs", [])]
    unknown = set(obj) - {"real_fibers", "conjugate_pairs"}
    if unknown:
        raise InputError(f"unexpected keys {sorted(unknown)}")
    defaulted = sum(d for _, d in real + pairs)
    return SurfaceConfig(tuple(f for f, _ in real), tuple(f for f, _ in pairs)), defaulted


# --- reports ---------------------------------------------------------------

def square_class_to_json(s: SquareClass | None):
    return None if s is None else s.name.lower()


def verdict_to_json(v: OrthogonalVerdict) -> dict:
    return {
        "in_O": v.in_O,
        "det": None if v.det is None else v.det.value,
        "spinor": square_class_to_json(v.spinor),
        "in_Omega": v.in_Omega,
    }


def oddness_to_json(r: OddnessReport) -> dict:
    return {
        "verdict": r.verdict,
        "fixed_dim": r.fixed_dim,
        "flag_dim": r.flag_dim,
        "trace_check": r.trace_check,
        "adjoint_trace": r.adjoint_trace,
        "lie_dim": r.lie_dim,
        "root_type": r.root_type,
    }


def surface_report_to_json(r: SurfaceReport) -> dict:
    return {
        "chi_real": r.chi_real,
        "tr_W": r.tr_W,
        "tr_V": r.tr_V,
        "tr_c_mod_ell": r.tr_c_mod_ell,
        "rank_N": r.rank_N,
        "warnings": list(r.warnings),
    }


def load_json(source: str) -> Any:
    """Parse ``source``: ``-`` for stdin, inline JSON, or a file path."""
    import sys
    try:
        if source == "-":
            return json.load(sys.stdin)
        if source.lstrip().startswith(("{", "[")):
            return json.loads(source)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {source!r}: {exc}") from None
