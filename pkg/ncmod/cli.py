"""
Command-line front end for ncmod

Results go to standard output as JSON (or plain text with --text);
diagnostics go to standard error. Exit codes: 0 success, 1 verification
failures, 2 usage or semantic error, 3 malformed input file.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from ncmod import __version__
from ncmod.config import settings, settings_errors
from ncmod.core.algebra import (
    BUILTIN_NAMES,
    Algebra,
    AlgElem,
    associator,
    classify,
    commutator,
    load_builtin,
    mul,
    multiplication_table,
)
from ncmod.core.amodule import (
    NonUnique,
    NotInSpan,
    UniqueCoordinates,
    coordinates,
    extend_basis,
)
from ncmod.core.biring import cr_product, mat_sum, rc_product, transpose
from ncmod.core.exceptions import (
    DimensionMismatchError,
    InvalidArgumentError,
    MalformedInputError,
    NcmodError,
)
from ncmod.core.hom import apply_vector, hom_compose, hom_sum
from ncmod.core.ncpoly import parse_map, parse_ncpoly, parse_variables
from ncmod.core.tensorcalc import differential, differentiate, jacobian_apply, tensor_to_map
from ncmod.core.verify import SUITE_NAMES, run_all, run_suite
from ncmod.services.file_service import FileService
from ncmod.utils.logging import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_MALFORMED = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncmod",
        description="Exact computations with modules over noncommutative algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--text", action="store_true", help="plain text instead of JSON")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="logging level for standard error",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    algebras = commands.add_parser("algebras", help="list built-in algebras")
    algebras.add_argument("action", choices=["list"])

    show = commands.add_parser("algebra", help="inspect an algebra")
    show.add_argument("action", choices=["show"])
    show.add_argument("name", help="built-in name or structure-constants file")

    product = commands.add_parser("mul", help="multiply algebra elements")
    product.add_argument("--algebra", required=True)
    product.add_argument("--op", choices=["product", "commutator", "associator"], default="product")
    product.add_argument("elements", nargs="+", help='coordinate strings "c0,c1,..."')

    mat = commands.add_parser("mat", help="biring matrix operations")
    mat.add_argument("--op", choices=["rc", "cr", "transpose", "sum"], required=True)
    mat.add_argument("matrices", nargs="+", help="matrix files")

    coords = commands.add_parser("coords", help="coordinates of a vector relative to a basis")
    coords.add_argument("--vector", required=True, help="vector file (first vector is used)")
    coords.add_argument("--basis", required=True, help="basis file")

    extend = commands.add_parser("extend", help="extension of a basis to a rational basis")
    extend.add_argument("--basis", required=True, help="basis file")

    hom = commands.add_parser("hom", help="module homomorphisms")
    hom_actions = hom.add_subparsers(dest="action", required=True)
    hom_apply = hom_actions.add_parser("apply", help="image of a vector")
    hom_apply.add_argument("--hom", required=True, help="homomorphism file")
    hom_apply.add_argument("--vector", required=True, help="vector file")
    hom_add = hom_actions.add_parser("sum", help="sum of two homomorphisms")
    hom_add.add_argument("first")
    hom_add.add_argument("second")
    hom_comp = hom_actions.add_parser("compose", help="h after g")
    hom_comp.add_argument("h")
    hom_comp.add_argument("g")

    diff = commands.add_parser("diff", help="partial derivative of a polynomial")
    diff.add_argument("--algebra", default="quaternion")
    diff.add_argument("--vars", required=True, help="comma-separated variables")
    diff.add_argument("--expr", required=True, help="noncommutative polynomial")
    diff.add_argument("--wrt", default=None, help="variable to differentiate by")
    diff.add_argument("--at", default=None, help='point as "c0,...;c0,..." in variable order')
    diff.add_argument("--differential", action="store_true", help="print the full differential")

    jac = commands.add_parser("jacobian", help="derivative of a polynomial map applied to a displacement")
    jac.add_argument("--algebra", default="quaternion")
    jac.add_argument("--vars", required=True)
    jac.add_argument("--map", required=True, help='"name = expr; ..."')
    jac.add_argument("--point", required=True)
    jac.add_argument("--displacement", required=True)

    verify = commands.add_parser("verify", help="run seeded property suites")
    verify.add_argument("--suite", required=True, choices=list(SUITE_NAMES) + ["all"])
    verify.add_argument("--algebra", default="quaternion")
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--dim", type=int, default=None)
    return parser


def _parse_point(algebra: Algebra, text: str, count: int) -> List[AlgElem]:
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != count:
        raise DimensionMismatchError(f"Expected {count} elements separated by ';', got {len(parts)}")
    return [algebra.parse_element(p) for p in parts]


def _element_payload(a: AlgElem) -> Dict[str, str]:
    return {"coords": a.to_coord_string(), "text": str(a)}


class Commands:
    """Handlers returning (JSON payload, text rendering)"""

    def __init__(self):
        self.files = FileService()

    def algebras(self, args) -> Any:
        items = []
        for name in BUILTIN_NAMES:
            algebra = load_builtin(name)
            items.append({"name": name, "dim": algebra.dim, "basis": list(algebra.basis_labels)})
        text = "\n".join(f"{i['name']} (dim {i['dim']}): {', '.join(i['basis'])}" for i in items)
        return items, text

    def algebra(self, args) -> Any:
        algebra = self.files.resolve_algebra(args.name)
        flags = classify(algebra).as_dict()
        table = multiplication_table(algebra)
        unit = algebra.unit
        payload = {
            "name": algebra.name,
            "dim": algebra.dim,
            "basis": list(algebra.basis_labels),
            "unit": unit.to_coord_string() if unit is not None else None,
            "classification": flags,
            "table": table,
        }
        width = max(len(cell) for row in table for cell in row + list(algebra.basis_labels))
        lines = [f"{algebra.name} (dim {algebra.dim})"]
        lines.append(" " * (width + 2) + " ".join(label.rjust(width) for label in algebra.basis_labels))
        for label, row in zip(algebra.basis_labels, table):
            lines.append(label.rjust(width) + ": " + " ".join(cell.rjust(width) for cell in row))
        lines.extend(f"{k}: {v}" for k, v in flags.items())
        return payload, "\n".join(lines)

    def mul(self, args) -> Any:
        algebra = self.files.resolve_algebra(args.algebra)
        elements = [algebra.parse_element(e) for e in args.elements]
        needed = {"product": 2, "commutator": 2, "associator": 3}[args.op]
        if len(elements) != needed:
            raise InvalidArgumentError(f"--op {args.op} takes {needed} elements, got {len(elements)}")
        if args.op == "product":
            result = mul(*elements)
        elif args.op == "commutator":
            result = commutator(*elements)
        else:
            result = associator(*elements)
        return {"op": args.op, "result": _element_payload(result)}, str(result)

    def mat(self, args) -> Any:
        matrices = [self.files.load_matrix(path) for path in args.matrices]
        needed = 1 if args.op == "transpose" else 2
        if len(matrices) != needed:
            raise InvalidArgumentError(f"--op {args.op} takes {needed} matrix files, got {len(matrices)}")
        if args.op == "transpose":
            result = transpose(matrices[0])
        else:
            operation = {"rc": rc_product, "cr": cr_product, "sum": mat_sum}[args.op]
            result = operation(matrices[0], matrices[1])
        document = self.files.matrix_to_file(result)
        return document.model_dump(mode="json"), str(result)

    def coords(self, args) -> Any:
        v = self.files.load_vectors(args.vector)[0]
        basis = self.files.load_basis(args.basis)
        result = coordinates(v, basis)
        if isinstance(result, UniqueCoordinates):
            payload = {"result": "unique", "coords": [c.to_coord_string() for c in result.coords]}
            text = "unique: (" + ", ".join(str(c) for c in result.coords) + ")"
        elif isinstance(result, NotInSpan):
            payload, text = {"result": "not-in-span"}, "not in span"
        else:
            assert isinstance(result, NonUnique)
            payload = {
                "result": "non-unique",
                "particular": [c.to_coord_string() for c in result.particular],
                "witness": [c.to_coord_string() for c in result.witness],
            }
            text = (
                "non-unique: ("
                + ", ".join(str(c) for c in result.particular)
                + "), zero has coordinates ("
                + ", ".join(str(c) for c in result.witness)
                + ")"
            )
        return payload, text

    def extend(self, args) -> Any:
        basis = self.files.load_basis(args.basis)
        ext = extend_basis(basis)
        payload = {
            "vectors": [v.to_strings() for v in ext.vectors],
            "rank": ext.rank,
            "full": ext.full,
        }
        text = "\n".join(str(v) for v in ext.vectors) + f"\nrank {ext.rank} of {len(ext.vectors)}"
        return payload, text

    def hom(self, args) -> Any:
        if args.action == "apply":
            h = self.files.load_hom(args.hom)
            v = self.files.load_vectors(args.vector)[0]
            image = apply_vector(h, v)
            return self.files.vectors_to_file([image]).model_dump(mode="json"), str(image)
        if args.action == "sum":
            result = hom_sum(self.files.load_hom(args.first), self.files.load_hom(args.second))
        else:
            result = hom_compose(self.files.load_hom(args.h), self.files.load_hom(args.g))
        return self.files.hom_to_file(result).model_dump(mode="json"), str(result.matrix)

    def diff(self, args) -> Any:
        variables = parse_variables(args.vars)
        p = parse_ncpoly(args.expr, variables)
        payload: Dict[str, Any] = {"expr": str(p), "variables": list(variables)}
        lines = []
        if args.differential:
            payload["differential"] = differential(p)
            lines.append(f"d({p}) = {payload['differential']}")
        targets = [args.wrt] if args.wrt else ([] if args.differential else list(variables))
        partials = []
        point = None
        if args.at is not None:
            algebra = self.files.resolve_algebra(args.algebra)
            point = _parse_point(algebra, args.at, len(variables))
        for var in targets:
            partial = differentiate(p, var)
            entry: Dict[str, Any] = {"wrt": var, "terms": partial.term_strings()}
            lines.append(f"d/d{var}: {partial}")
            if point is not None:
                tensor = partial.evaluate(point)
                entry["at"] = {
                    "tensor": str(tensor),
                    "map": tensor_to_map(tensor).to_strings(),
                }
                lines.append(f"  at point: {tensor}")
            partials.append(entry)
        if partials:
            payload["partials"] = partials
        return payload, "\n".join(lines)

    def jacobian(self, args) -> Any:
        variables = parse_variables(args.vars)
        algebra = self.files.resolve_algebra(args.algebra)
        bindings = parse_map(args.map, variables)
        maps = [p for _, p in bindings]
        point = _parse_point(algebra, args.point, len(variables))
        displacement = _parse_point(algebra, args.displacement, len(variables))
        result = jacobian_apply(maps, variables, point, displacement)
        payload = {
            "algebra": algebra.name,
            "components": [
                {"name": name, **_element_payload(value)}
                for (name, _), value in zip(bindings, result)
            ],
        }
        text = "\n".join(f"d{name} = {value}" for (name, _), value in zip(bindings, result))
        return payload, text

    def verify(self, args) -> Any:
        trials = args.trials if args.trials is not None else settings.default_trials
        if args.seed is not None:
            seed = args.seed
        elif settings.seed is not None:
            seed = settings.seed
        else:
            seed = 0
        algebra = self.files.resolve_algebra(args.algebra)
        if args.suite == "all":
            result = run_all(algebra, trials, seed, args.dim)
            reports = result.reports
        else:
            result = run_suite(args.suite, algebra, trials, seed, args.dim)
            reports = [result]
        lines = []
        for r in reports:
            lines.append(f"{r.suite}: {'passed' if r.passed else 'FAILED'} ({len(r.failures)} failures)")
            lines.extend(f"  {f.name}: {f.detail}" for f in r.findings)
            for law in dict.fromkeys(f.law for f in r.failures):
                failures = r.get_failures_by_law(law)
                lines.append(f"  FAIL {law} ({len(failures)}x): {failures[0].detail}")
        return result, "\n".join(lines)


def _emit(payload: Any, text: str, as_text: bool):
    if as_text:
        print(text)
    elif hasattr(payload, "model_dump_json"):
        print(payload.model_dump_json(indent=2))
    else:
        print(json.dumps(payload, indent=2, ensure_ascii=False))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one invocation and return its exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if settings_errors:
        for problem in settings_errors:
            print(f"error: {problem}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level)
    handler = getattr(Commands(), args.command)
    try:
        payload, text = handler(args)
        _emit(payload, text, args.text)
        if args.command == "verify" and not payload.passed:
            return EXIT_FAILED
        return EXIT_OK
    except MalformedInputError as e:
        logger.debug(f"Malformed input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except (NcmodError, ValueError, ZeroDivisionError) as e:
        logger.debug(f"Command {args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
