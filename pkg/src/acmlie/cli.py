"""Command-line entry point.

Exit status: 0 success, 1 mathematical failure (a defect, a mismatch, a
structure that does not exist), 2 input error (unreadable file, bad scalar,
missing block, violated fixture constraint).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, fileformat, tables
from .errors import (
    ACMError,
    DimensionMismatch,
    MissingAcmBlock,
    NonDiagonalMetric,
    ParamConstraintViolation,
    ParseError,
)
from .exact import is_positive_definite
from .extension import SymplecticKahlerData, central_extend, kahler_quotient
from .forms import exterior_derivative, two_form_rank
from .lie import jacobi_violation
from .riemannian import frame_ricci, ricci, scalar_curvature
from .structures import classify, fit_structure, validate_kahler

INPUT_ERRORS = (ParseError, MissingAcmBlock, ParamConstraintViolation, DimensionMismatch, NonDiagonalMetric)


def _out(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _load(path: str) -> fileformat.AlgebraFile:
    return fileformat.load(path)


def _parse_params(text: str | None) -> dict[str, str]:
    params: dict[str, str] = {}
    for part in filter(None, (p.strip() for p in (text or "").split(","))):
        key, sep, val = part.partition("=")
        if not sep or not key.strip():
            raise ParseError(f"--params expects k=v pairs, got {part!r}")
        params[key.strip()] = val.strip()
    return params


def _matrix_text(rows) -> str:
    cells = [[str(x) for x in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("  " + " ".join(c.rjust(width) for c in r) for r in cells) + "\n"


def _require_acm(f: fileformat.AlgebraFile) -> None:
    if f.acm is None:
        raise MissingAcmBlock("the file has no acm block")


def _metric_algebra(f: fileformat.AlgebraFile):
    if f.metric is None and f.kahler is not None:
        return f.kahler_structure(check=False).M
    return f.metric_algebra()


# commands


def validation_defect(f: fileformat.AlgebraFile) -> str | None:
    """First failing identity or axiom in a file, or None."""
    bad = jacobi_violation(f.L)
    if bad is not None:
        return "jacobi (" + ",".join(str(i + 1) for i in bad) + ")"
    if f.metric is not None and not (f.metric.is_symmetric() and is_positive_definite(f.metric)):
        return "metric is not symmetric positive definite"
    if f.acm is not None:
        problem = f.acm_structure(check=False).axiom_defect()
        if problem:
            return "acm: " + problem
    if f.kahler is not None:
        K = f.kahler_structure(check=False)
        rep = validate_kahler(K)
        if not rep.ok:
            return "kahler: " + rep.defect
        if f.metric is not None and f.kahler.omega != K.kahler_form():
            return "kahler: omega differs from h(., J .)"
    if f.symplectic is not None:
        if not exterior_derivative(f.L, f.symplectic).is_zero():
            return "symplectic: d omega != 0"
        if two_form_rank(f.symplectic) != f.dim:
            return "symplectic: omega is degenerate"
    return None


def cmd_validate(args) -> int:
    f = _load(args.file)
    problem = validation_defect(f)
    if args.json:
        _out(args, _dump({"ok": problem is None, "defect": problem}))
    else:
        _out(args, "ok\n" if problem is None else f"defect: {problem}\n")
    return 0 if problem is None else 1


def cmd_classify(args) -> int:
    f = _load(args.file)
    _require_acm(f)
    rep = classify(f.acm_structure())
    d = rep.to_dict()
    if args.json:
        _out(args, _dump(d))
    else:
        lines = [f"{k:<22} {('yes' if v else 'no') if isinstance(v, bool) else ('-' if v is None else v)}"
                 for k, v in d.items() if k != "defects"]
        lines += [f"  {k}: {v}" for k, v in d["defects"].items()]
        _out(args, "\n".join(lines) + "\n")
    return 0


def cmd_curvature(args) -> int:
    f = _load(args.file)
    M = _metric_algebra(f)
    ric = ricci(M)
    scal = scalar_curvature(M, ric)
    if args.frame == "orthonormal":
        fr = frame_ricci(M, ric=ric)
        rows = [[("?" if v is None else str(v)) for v in r] for r in fr.values]
        doc = {"frame": "orthonormal", "ricci": rows, "scalar_curvature": str(scal)}
        if fr.symbolic:
            doc["irrational"] = {f"{i + 1}{j + 1}": [str(r), str(s)] for (i, j), (r, s) in sorted(fr.symbolic.items())}
    else:
        rows = ric.to_strings()
        doc = {"frame": "coordinate", "ricci": rows, "scalar_curvature": str(scal)}
    if args.json:
        _out(args, _dump(doc))
    else:
        text = f"Ricci ({doc['frame']} frame)\n" + _matrix_text(rows) + f"scalar curvature {scal}\n"
        for lab, (r, s) in doc.get("irrational", {}).items():
            text += f"  Ric{lab} = {r}/sqrt({s})\n"
        _out(args, text)
    return 0


def cmd_extend(args) -> int:
    f = _load(args.file)
    if f.kahler is None:
        raise MissingAcmBlock("extend needs a kahler block")
    if args.omega is not None:
        w = fileformat.parse_two_form(args.omega, f.dim)
    elif f.symplectic is not None:
        w = f.symplectic
    else:
        raise ParseError("no symplectic form: pass --omega or include a symplectic block")
    S = central_extend(SymplecticKahlerData(f.kahler_structure(), w)).S
    _out(args, fileformat.dumps(fileformat.from_structure(S)))
    return 0


def cmd_quotient(args) -> int:
    f = _load(args.file)
    _require_acm(f)
    D = kahler_quotient(f.acm_structure())
    _out(args, fileformat.dumps(fileformat.from_structure(D)))
    return 0


def cmd_fit(args) -> int:
    f = _load(args.file)
    _require_acm(f)
    fit = fit_structure(f.acm_structure())
    d = fit.to_dict()
    if args.json:
        _out(args, _dump(d))
    else:
        _out(args, "".join(f"{k:<13} {v}\n" for k, v in d.items()))
    return 0


def cmd_catalog_list(args) -> int:
    items = catalog.fixtures()
    if args.json:
        _out(args, _dump([{"name": fx.name, "kind": fx.kind, "params": list(fx.params),
                           "samples": [{k: str(v) for k, v in s.items()} for s in fx.samples]}
                          for fx in items]))
    else:
        width = max(len(fx.name) for fx in items)
        _out(args, "".join(f"{fx.name:<{width}}  {fx.kind:<10}  {','.join(fx.params) or '-'}  {fx.description}\n"
                           for fx in items))
    return 0


def cmd_catalog_emit(args) -> int:
    try:
        fx = catalog.get_fixture(args.name)
    except KeyError as exc:
        raise ParseError(str(exc.args[0])) from None
    obj = fx.instantiate(_parse_params(args.params))
    _out(args, fileformat.dumps(fileformat.from_structure(obj)))
    return 0


def cmd_reproduce(args) -> int:
    cells = tables.compare()
    _out(args, tables.render_json(cells) if args.json else tables.render_text(cells))
    return 0 if all(c.ok for c in cells) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("-o", "--output", help="write to a file instead of stdout")

    p = argparse.ArgumentParser(prog="acmlie", description="Exact almost contact metric geometry on Lie algebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check Jacobi and every declared structure")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", parents=[common], help="classification flags of the acm block")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("curvature", parents=[common], help="Ricci tensor and scalar curvature")
    s.add_argument("file")
    s.add_argument("--frame", choices=("coordinate", "orthonormal"), default="coordinate")
    s.set_defaults(func=cmd_curvature)

    s = sub.add_parser("extend", parents=[common], help="central extension of Kähler data by a symplectic form")
    s.add_argument("file")
    s.add_argument("--omega", help='symplectic form, e.g. "12:1,34:1"')
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("quotient", parents=[common], help="Kähler quotient by the Reeb direction")
    s.add_argument("file")
    s.set_defaults(func=cmd_quotient)

    s = sub.add_parser("fit-eta-einstein", parents=[common], help="fit Ric = lambda g + mu eta (x) eta")
    s.add_argument("file")
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("catalog", help="named fixtures")
    csub = s.add_subparsers(dest="catalog_command", required=True)
    c = csub.add_parser("list", parents=[common])
    c.set_defaults(func=cmd_catalog_list)
    c = csub.add_parser("emit", parents=[common])
    c.add_argument("name")
    c.add_argument("--params", help="k=v[,k=v...]")
    c.set_defaults(func=cmd_catalog_emit)

    s = sub.add_parser("reproduce-tables", parents=[common], help="compare computed tables with the expected values")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ACMError as exc:
        sys.stderr.write(f"failed: {type(exc).__name__}: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
