"""JSON algebra files.

Layout (indices 1-based, every number an exact scalar string)::

    {
      "dim": 5,
      "brackets": [{"i": 1, "j": 4, "coeffs": {"5": "2"}}, ...],
      "metric": [["1", "0", ...], ...],
      "acm": {"phi": [[...]], "xi": [...], "eta": [...]},
      "kahler": {"J": [[...]], "omega": {"12": "-1", ...}},
      "symplectic": {"12": "1", "34": "1"}
    }

Matrix grids are stored row by row; column ``j`` of ``phi`` or ``J`` is the
image of ``e_j``.  Everything after ``brackets`` is optional.  ``kahler.omega``
is the Kähler form ``h(., J .)``; ``symplectic`` is a closed 2-form to extend by.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import ParseError
from .exact import Matrix, format_scalar, parse_scalar
from .forms import KForm
from .lie import LieAlgebra
from .riemannian import MetricLieAlgebra
from .structures import AcmStructure, KahlerStructure


@dataclass(frozen=True)
class AcmBlock:
    phi: Matrix
    xi: tuple
    eta: tuple


@dataclass(frozen=True)
class KahlerBlock:
    J: Matrix
    omega: KForm


@dataclass(frozen=True)
class AlgebraFile:
    L: LieAlgebra
    metric: Matrix | None = None
    acm: AcmBlock | None = None
    kahler: KahlerBlock | None = None
    symplectic: KForm | None = None

    @property
    def dim(self) -> int:
        return self.L.dim

    def metric_or_identity(self) -> Matrix:
        return self.metric if self.metric is not None else Matrix.identity(self.dim)

    def metric_algebra(self) -> MetricLieAlgebra:
        return MetricLieAlgebra(self.L, self.metric_or_identity())

    def acm_structure(self, check: bool = True) -> AcmStructure:
        return AcmStructure(self.metric_algebra(), self.acm.phi, self.acm.xi, self.acm.eta, check=check)

    def kahler_structure(self, check: bool = True) -> KahlerStructure:
        """Metric from the file when present, otherwise ``h = Omega(J ., .)``."""
        if self.metric is not None:
            return KahlerStructure(self.metric_algebra(), self.kahler.J, check=check)
        return KahlerStructure.from_kahler_form(self.L, self.kahler.J, self.kahler.omega, check=check)


# reading


def _scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: expected a scalar string, got {value!r}")
    return parse_scalar(str(value))


def _grid(value: Any, n: int, where: str) -> Matrix:
    if not isinstance(value, list) or len(value) != n or any(not isinstance(r, list) or len(r) != n for r in value):
        raise ParseError(f"{where}: expected a {n}x{n} grid")
    return Matrix([[_scalar(x, f"{where}[{i + 1}][{j + 1}]") for j, x in enumerate(r)] for i, r in enumerate(value)])


def _vec(value: Any, n: int, where: str) -> tuple:
    if not isinstance(value, list) or len(value) != n:
        raise ParseError(f"{where}: expected a list of {n} scalars")
    return tuple(_scalar(x, f"{where}[{i + 1}]") for i, x in enumerate(value))


def _index(value: Any, n: int, where: str) -> int:
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= n:
        raise ParseError(f"{where}: index {value!r} outside 1..{n}")
    return value - 1


def from_dict(doc: Any) -> AlgebraFile:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - {"dim", "brackets", "metric", "acm", "kahler", "symplectic"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    n = doc.get("dim")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError("dim must be a positive integer")
    table: dict[tuple[int, int], list[Fraction]] = {}
    seen: set[tuple[int, int]] = set()
    for t, entry in enumerate(doc.get("brackets", [])):
        where = f"brackets[{t}]"
        if not isinstance(entry, dict) or not isinstance(entry.get("coeffs", {}), dict):
            raise ParseError(f"{where}: expected {{i, j, coeffs}}")
        i, j = _index(entry.get("i"), n, where + ".i"), _index(entry.get("j"), n, where + ".j")
        if (i, j) in seen or (j, i) in seen:
            raise ParseError(f"{where}: bracket [e{i + 1},e{j + 1}] given twice")
        seen.add((i, j))
        vec = [Fraction(0)] * n
        for k, c in entry.get("coeffs", {}).items():
            vec[_index(k, n, where + ".coeffs")] = _scalar(c, f"{where}.coeffs[{k}]")
        if i == j:
            if any(vec):
                raise ParseError(f"{where}: [e{i + 1},e{i + 1}] must vanish")
            continue
        if i > j:
            i, j, vec = j, i, [-x for x in vec]
        if any(vec):
            table[(i, j)] = vec
    L = LieAlgebra(n, table, check=False)

    metric = _grid(doc["metric"], n, "metric") if "metric" in doc else None
    acm = None
    if "acm" in doc:
        a = doc["acm"]
        if not isinstance(a, dict) or not {"phi", "xi"} <= set(a):
            raise ParseError("acm block needs phi and xi")
        phi = _grid(a["phi"], n, "acm.phi")
        xi = _vec(a["xi"], n, "acm.xi")
        if "eta" in a:
            eta = _vec(a["eta"], n, "acm.eta")
        else:
            g = metric if metric is not None else Matrix.identity(n)
            eta = g @ xi
        acm = AcmBlock(phi, xi, tuple(eta))
    kahler = None
    if "kahler" in doc:
        k = doc["kahler"]
        if not isinstance(k, dict) or "J" not in k:
            raise ParseError("kahler block needs J")
        J = _grid(k["J"], n, "kahler.J")
        kahler = KahlerBlock(J, _two_form(k.get("omega", {}), n, "kahler.omega"))
    symplectic = _two_form(doc["symplectic"], n, "symplectic") if "symplectic" in doc else None
    return AlgebraFile(L, metric, acm, kahler, symplectic)


def _two_form(value: Any, n: int, where: str) -> KForm:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object of index pairs")
    comps = {}
    for lab, c in value.items():
        if not (isinstance(lab, str) and len(lab) == 2 and lab.isdigit()):
            raise ParseError(f"{where}: bad index pair {lab!r}")
        comps[lab] = _scalar(c, f"{where}[{lab}]")
    try:
        return KForm.from_labels(n, comps) if comps else KForm.zero(n, 2)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def parse_two_form(text: str, n: int) -> KForm:
    """``"12:1,34:-1/2"`` or the equivalent JSON object."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return _two_form(json.loads(text), n, "omega")
        except json.JSONDecodeError as exc:
            raise ParseError(f"omega: invalid JSON: {exc}") from exc
    comps = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        lab, sep, val = part.partition(":")
        if not sep:
            raise ParseError(f"omega: expected label:value, got {part!r}")
        comps[lab.strip()] = val.strip()
    return _two_form(comps, n, "omega")


def loads(text: str) -> AlgebraFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(doc)


def load(path: str) -> AlgebraFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


# writing


def _grid_out(m: Matrix) -> list:
    return m.to_strings()


def _form_out(w: KForm) -> dict:
    return {"".join(str(i + 1) for i in key): format_scalar(c) for key, c in sorted(w.components.items())}


def to_dict(f: AlgebraFile) -> dict:
    doc: dict[str, Any] = {"dim": f.dim, "brackets": []}
    for (i, j), v in sorted(f.L.nonzero_brackets().items()):
        doc["brackets"].append({"i": i + 1, "j": j + 1,
                                "coeffs": {str(k + 1): format_scalar(c) for k, c in enumerate(v) if c}})
    if f.metric is not None:
        doc["metric"] = _grid_out(f.metric)
    if f.acm is not None:
        doc["acm"] = {"phi": _grid_out(f.acm.phi), "xi": [format_scalar(x) for x in f.acm.xi],
                      "eta": [format_scalar(x) for x in f.acm.eta]}
    if f.kahler is not None:
        doc["kahler"] = {"J": _grid_out(f.kahler.J), "omega": _form_out(f.kahler.omega)}
    if f.symplectic is not None:
        doc["symplectic"] = _form_out(f.symplectic)
    return doc


def _render(value, indent: int, depth: int) -> str:
    """Indented JSON whose innermost lists and flat objects stay on one line."""
    flat = not isinstance(value, (dict, list)) or (
        isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)
    ) or (depth >= 2 and isinstance(value, dict)) or (isinstance(value, dict) and all(
        not isinstance(v, (dict, list)) for v in value.values()) and depth > 0)
    if flat or not value:
        return json.dumps(value, separators=(", ", ": "), ensure_ascii=False)
    pad = " " * (indent * (depth + 1))
    end = " " * (indent * depth)
    if isinstance(value, list):
        items = [pad + _render(v, indent, depth + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    items = [pad + json.dumps(k) + ": " + _render(v, indent, depth + 1) for k, v in value.items()]
    return "{\n" + ",\n".join(items) + "\n" + end + "}"


def dumps(f: AlgebraFile) -> str:
    return _render(to_dict(f), 2, 0) + "\n"


def from_structure(obj) -> AlgebraFile:
    """File for a LieAlgebra, MetricLieAlgebra, AcmStructure, KahlerStructure or SymplecticKahlerData."""
    from .extension import SymplecticKahlerData

    if isinstance(obj, LieAlgebra):
        return AlgebraFile(obj)
    if isinstance(obj, MetricLieAlgebra):
        return AlgebraFile(obj.L, obj.g)
    if isinstance(obj, AcmStructure):
        return AlgebraFile(obj.L, obj.g, AcmBlock(obj.phi, obj.xi, obj.eta.covector()))
    if isinstance(obj, KahlerStructure):
        return AlgebraFile(obj.L, obj.h, kahler=KahlerBlock(obj.J, obj.kahler_form()))
    if isinstance(obj, SymplecticKahlerData):
        return AlgebraFile(obj.K.L, obj.K.h, kahler=KahlerBlock(obj.K.J, obj.K.kahler_form()), symplectic=obj.w)
    raise TypeError(f"cannot serialise {type(obj).__name__}")
