"""Command-line front end.

Every command reads JSON records (matrices, groups, subspaces), runs one
library operation and prints a deterministic report, either as text or as a
single JSON record with a ``warnings`` list.

Exit codes: 0 success, 1 input or parse error, 2 precondition violation,
3 undecided or unverifiable result.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import angle_at, h_minus, h_plus, lambda_p, lambda_t, theta_at
from .equivariants import diagonal_lift, module_generators
from .exceptions import (
    DimensionError,
    LorentzInvariantsError,
    NotInvariantError,
    NotInvolutionError,
    NotLorentzError,
    ParseError,
    UndecidedError,
    UnverifiableError,
)
from .invariants import GroupSpec, algorithm_generators
from .linalg import Matrix, Undecided, classify_component, determinant, is_lorentz, lorentz_inverse
from .polyring import Poly, parse_poly, variable_names
from .scalar import parse_scalar, substitute_point
from .subspaces import (
    FIX_KINDS,
    Subspace,
    conjugacy_matrix_3d,
    fix_line_catalog,
    fix_subspace,
    invariant_complement,
    invariant_lines,
    invariant_planes,
    is_nondegenerate,
    orthogonal_complement,
    subspace_type,
)

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_UNDECIDED = 0, 1, 2, 3
COMMANDS = ("check", "invariants", "equivariants", "fix", "subspace", "lines", "planes", "catalog")


class InputError(LorentzInvariantsError):
    """Malformed request or payload."""


# -- records ---------------------------------------------------------------


def _field(record, key, where):
    if not isinstance(record, dict) or key not in record:
        raise InputError(f"{where}: missing field {key!r}")
    return record[key]


def _scalar(text, where):
    try:
        return parse_scalar(str(text))
    except ParseError as exc:
        raise InputError(f"{where}: {exc}") from exc
    except ZeroDivisionError as exc:
        raise InputError(f"{where}: division by zero") from exc


def matrix_from_record(record, where="matrix"):
    rows = _field(record, "rows", where)
    cols = _field(record, "cols", where)
    entries = _field(record, "entries", where)
    if not isinstance(entries, list) or len(entries) != rows:
        raise InputError(f"{where}: expected {rows} rows of entries")
    out = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise InputError(f"{where}.entries[{i}]: expected {cols} entries")
        out.append([_scalar(x, f"{where}.entries[{i}][{j}]") for j, x in enumerate(row)])
    return Matrix(out)


def matrix_to_record(m):
    return {"rows": m.rows, "cols": m.cols, "entries": [[str(x) for x in row] for row in m.entries]}


def subspace_from_record(record, where="subspace"):
    ambient = _field(record, "ambient", where)
    basis = _field(record, "basis", where)
    vectors = []
    for i, v in enumerate(basis):
        if not isinstance(v, list) or len(v) != ambient:
            raise InputError(f"{where}.basis[{i}]: expected {ambient} entries")
        vectors.append([_scalar(x, f"{where}.basis[{i}][{j}]") for j, x in enumerate(v)])
    return Subspace(ambient, vectors)


def _polys(texts, nvars, names, where):
    out = []
    for i, text in enumerate(texts):
        try:
            out.append(parse_poly(text, nvars, names))
        except (ParseError, ValueError) as exc:
            raise InputError(f"{where}[{i}]: {exc}") from exc
    return out


def group_from_record(record, where="group"):
    """GroupSpec plus the optional doubled-space Sigma invariants."""
    dim = _field(record, "dim", where)
    if not isinstance(dim, int) or dim < 1:
        raise InputError(f"{where}.dim: expected a positive integer")
    mats = {}
    for key in ("sigma_generators", "involutions"):
        mats[key] = tuple(
            matrix_from_record(m, f"{where}.{key}[{i}]") for i, m in enumerate(record.get(key, []))
        )
    names = variable_names(dim)
    gens = _polys(record.get("sigma_invariant_gens", []), dim, names, f"{where}.sigma_invariant_gens")
    doubled = record.get("doubled_sigma_invariant_gens")
    if doubled is not None:
        doubled = _polys(doubled, 2 * dim, variable_names(2 * dim, doubled=True), f"{where}.doubled_sigma_invariant_gens")
    spec = GroupSpec(
        dim,
        sigma_generators=mats["sigma_generators"],
        sigma_invariant_gens=tuple(gens),
        involutions=mats["involutions"],
        product_kind=record.get("product", "semidirect"),
    )
    return spec, doubled


def group_to_record(spec, doubled=None):
    names = variable_names(spec.ambient_dim)
    record = {
        "dim": spec.ambient_dim,
        "sigma_generators": [matrix_to_record(m) for m in spec.sigma_generators],
        "sigma_invariant_gens": [p.to_text(names) for p in spec.sigma_invariant_gens],
        "involutions": [matrix_to_record(m) for m in spec.involutions],
        "product": spec.product_kind,
    }
    if doubled is not None:
        dnames = variable_names(2 * spec.ambient_dim, doubled=True)
        record["doubled_sigma_invariant_gens"] = [p.to_text(dnames) for p in doubled]
    return record


# -- instantiation ---------------------------------------------------------


class Point:
    """Optional rational values for the symbols, from --t and --u."""

    def __init__(self, t=None, u=None):
        self.c = self.s = self.p = self.q = None
        if t is not None:
            self.c, self.s = theta_at(t)
            self.c, self.s = self.c.rational_value(), self.s.rational_value()
        if u is not None:
            self.p, self.q = (x.rational_value() for x in angle_at(u))

    def active(self):
        return self.c is not None or self.p is not None

    def scalar(self, x):
        if not self.active():
            return x
        return substitute_point(x, self.c, self.s, self.p, self.q)

    def matrix(self, m):
        return m.map_entries(self.scalar) if self.active() else m

    def poly(self, f):
        if not self.active():
            return f
        return Poly(f.nvars, {e: self.scalar(c) for e, c in f.items()})

    def group(self, spec):
        if not self.active():
            return spec
        return GroupSpec(
            spec.ambient_dim,
            tuple(self.matrix(m) for m in spec.sigma_generators),
            tuple(self.poly(f) for f in spec.sigma_invariant_gens),
            tuple(self.matrix(m) for m in spec.involutions),
            spec.product_kind,
        )


# -- commands --------------------------------------------------------------


def _load(path, where):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{where}: cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}: {path} line {exc.lineno}: {exc.msg}") from exc


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name} is required for {args.command}")
    return value


def _matrix(args, point):
    return point.matrix(matrix_from_record(_load(_need(args, "matrix"), "--matrix")))


def _group(args, point):
    spec, doubled = group_from_record(_load(_need(args, "group"), "--group"))
    if doubled is not None:
        doubled = [point.poly(f) for f in doubled]
    return point.group(spec), doubled


def _lines_record(fams):
    return [f.to_record() for f in fams]


def cmd_check(args, point, report):
    m = _matrix(args, point)
    lorentz = m.is_square() and is_lorentz(m)
    result = {"lorentz": lorentz, "shape": list(m.shape)}
    if lorentz:
        result["component"] = classify_component(m).name
        result["determinant"] = str(determinant(m))
        result["involution"] = m @ m == Matrix.identity(m.rows)
    return result


def cmd_invariants(args, point, report):
    spec, _ = _group(args, point)
    spec.validate()
    gens = algorithm_generators(spec, args.degree)
    names = variable_names(spec.ambient_dim)
    return {"generators": [g.to_text(names) for g in gens]}


def cmd_equivariants(args, point, report):
    spec, doubled = _group(args, point)
    spec.validate()
    if doubled is None:
        raise NotInvariantError("equivariants need 'doubled_sigma_invariant_gens' in the group record")
    lifted = GroupSpec(
        2 * spec.ambient_dim,
        tuple(diagonal_lift(m) for m in spec.sigma_generators),
        tuple(doubled),
        tuple(diagonal_lift(m) for m in spec.involutions),
        spec.product_kind,
    ).validate(blockwise=True)
    cartesian = algorithm_generators(lifted, args.degree)
    maps = module_generators(cartesian, spec.group_generators, args.degree)
    names = variable_names(spec.ambient_dim)
    dnames = variable_names(2 * spec.ambient_dim, doubled=True)
    return {
        "cartesian_generators": [g.to_text(dnames) for g in cartesian],
        "module_generators": [m.to_texts(names) for m in maps],
    }


def cmd_fix(args, point, report):
    if args.group is not None:
        spec, _ = _group(args, point)
        gens = list(spec.group_generators)
        if not gens:
            raise InputError("--group: the group has no generators")
    else:
        gens = [_matrix(args, point)]
    return {"fix": fix_subspace(gens).to_record()}


def cmd_subspace(args, point, report):
    w = subspace_from_record(_load(_need(args, "subspace"), "--subspace"))
    w = Subspace(w.ambient_dim, [[point.scalar(x) for x in v] for v in w.basis])
    result = {"subspace": w.to_record(), "nondegenerate": is_nondegenerate(w)}
    try:
        result["type"] = subspace_type(w).value if w.dim else None
    except UndecidedError as exc:
        result["type"] = None
        report["warnings"].append(str(exc))
    result["orthogonal_complement"] = orthogonal_complement(w).to_record()
    if args.group is not None:
        spec, _ = _group(args, point)
        gens = list(spec.group_generators)
        result["complement"] = invariant_complement(w, gens).to_record()
        result["fix"] = bool(gens) and fix_subspace(gens) == w
    return result


def _enumeration(args, point, report, fn):
    m = _matrix(args, point)
    out = fn(m)
    if isinstance(out, Undecided):
        report["warnings"].append(f"undecided: {out.reason}")
        report["exit"] = EXIT_UNDECIDED
        return {"complete": False, "items": _lines_record(out.partial)}
    return {"complete": True, "items": _lines_record(out)}


def cmd_lines(args, point, report):
    return _enumeration(args, point, report, invariant_lines)


def cmd_planes(args, point, report):
    return _enumeration(args, point, report, invariant_planes)


def _conjugacy_report(u, r):
    angle = angle_at(u)
    p, q = angle
    theta = theta_at(Fraction(r) ** 2)
    m = conjugacy_matrix_3d(angle, r)
    mi = lorentz_inverse(m)
    cases = [
        ("Hplus, left angle = pi - right", h_plus((-p, q), theta, angle), -lambda_t(3)),
        ("Lambda^t Hplus, left angle = -right", h_plus((p, -q), theta, angle, -1), lambda_t(3)),
        ("Lambda^p Hminus, left angle = -right", h_minus((p, -q), theta, angle, 1), lambda_p(3)),
        ("Hminus eps=-1, left angle = pi - right", h_minus((-p, q), theta, angle, -1), -lambda_p(3)),
    ]
    return {
        "matrix": matrix_to_record(m),
        "lorentz": is_lorentz(m),
        "checks": [{"case": name, "conjugate": m @ x @ mi == target} for name, x, target in cases],
    }


def cmd_catalog(args, point, report):
    kind = _need(args, "kind")
    us = args.u or []
    if kind == "conjugacy":
        if len(us) != 1:
            raise InputError("conjugacy needs exactly one --u (the right-hand angle)")
        return _conjugacy_report(us[0], _need(args, "r"))
    if len(us) != 2:
        raise InputError(f"{kind} needs two --u values (left and right angles)")
    theta = theta_at(_need(args, "t"))
    res = fix_line_catalog(kind, angle_at(us[0]), theta, angle_at(us[1]))
    report["warnings"].extend(res.warnings)
    return {
        "kind": kind,
        "formula": [str(x) for x in res.formula],
        "agrees": res.agrees,
        "fix": None if res.vector is None else [str(x) for x in res.vector],
    }


HANDLERS = {
    "check": cmd_check,
    "invariants": cmd_invariants,
    "equivariants": cmd_equivariants,
    "fix": cmd_fix,
    "subspace": cmd_subspace,
    "lines": cmd_lines,
    "planes": cmd_planes,
    "catalog": cmd_catalog,
}


# -- output ----------------------------------------------------------------


def _text_lines(value, indent=""):
    if isinstance(value, dict):
        for key, v in value.items():
            if isinstance(v, (dict, list)) and v:
                yield f"{indent}{key}:"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}{key}: {_atom(v)}"
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                yield f"{indent}-"
                yield from _text_lines(v, indent + "  ")
            else:
                yield f"{indent}- {_atom(v)}"
    else:
        yield f"{indent}{_atom(value)}"


def _atom(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(report, fmt):
    if fmt == "structured":
        return json.dumps(report, sort_keys=True, indent=2)
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    if report.get("error"):
        lines.append(f"error: {report['error']}")
    if report.get("result") is not None:
        lines.extend(_text_lines(report["result"]))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


# -- entry point -----------------------------------------------------------


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _degree(text):
    try:
        d = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if d < 1:
        raise argparse.ArgumentTypeError("degree bound must be at least 1")
    return d


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser():
    parser = _Parser(prog="lorentz-invariants", description=__doc__.split("\n\n")[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--group", help="group record (JSON)")
    parser.add_argument("--matrix", help="matrix record (JSON)")
    parser.add_argument("--subspace", help="subspace record (JSON)")
    parser.add_argument("--degree", type=_degree, help="degree bound D for pruning")
    parser.add_argument("--t", type=_fraction, help="hyperbola point: cosh = (t + 1/t)/2")
    parser.add_argument("--u", type=_fraction, action="append", help="half-angle tangent; repeat for two angles")
    parser.add_argument("--r", type=_fraction, help="half-boost parameter for the conjugacy matrix")
    parser.add_argument("--kind", choices=FIX_KINDS + ("conjugacy",), help="catalog entry")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    return parser


def run(argv):
    """Run one request; returns (exit code, report)."""
    return execute(build_parser().parse_args(argv))


def execute(args):
    report = {"command": args.command, "status": "ok", "result": None, "warnings": []}
    code = EXIT_OK
    try:
        if args.t is not None and args.t <= 0:
            raise InputError("--t must be positive")
        point = Point(args.t, args.u[0] if args.u and args.command != "catalog" else None)
        report["result"] = HANDLERS[args.command](args, point, report)
        code = report.pop("exit", EXIT_OK)
    except (InputError, ParseError) as exc:
        code, report["error"] = EXIT_INPUT, str(exc)
    except (UndecidedError, UnverifiableError) as exc:
        code, report["error"] = EXIT_UNDECIDED, str(exc)
    except (NotInvolutionError, NotLorentzError, NotInvariantError, DimensionError, ValueError, ZeroDivisionError) as exc:
        code, report["error"] = EXIT_PRECONDITION, str(exc)
    report.pop("exit", None)
    report["status"] = {EXIT_OK: "ok", EXIT_INPUT: "input-error", EXIT_PRECONDITION: "precondition", EXIT_UNDECIDED: "undecided"}[code]
    return code, report


def main(argv=None):
    args = build_parser().parse_args(sys.argv[1:] if argv is None else argv)
    code, report = execute(args)
    print(render(report, args.format))
    if code not in (EXIT_OK, EXIT_UNDECIDED):
        print(f"lorentz-invariants: {report.get('error')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
