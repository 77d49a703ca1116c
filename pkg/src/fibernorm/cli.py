"""Command line interface: parse one input document, run one subcommand.

Input documents are a three-key text format (``#`` comments and blank
lines ignored, keys in any order, each at most once):

    genus = 2
    singularities = 3,3,3,3
    matrix = [[0,1],[1,1]]

``genus`` and ``singularities`` travel together and turn the document
into a bundle; a bare ``matrix`` is enough for the algebra-level
subcommands.  Reports are ``key = value`` lines in a fixed key order,
integers exact, floats with 12 significant digits, so identical inputs
produce byte-identical output.

Exit codes: 0 success, 1 domain/validation error, 2 parse or usage
error, 3 undecided within budget.  Every nonzero exit puts exactly one
``error = <Name>`` line on stdout; diagnostics go to stderr.
"""

import sys
from dataclasses import dataclass

from .bundle import SingularityData, build_bundle, h2_rank, validate_singularity_data
from .dimgroup import (
    DimGroupElement,
    bratteli_diagram,
    bratteli_dot,
    is_positive,
    make_dim_group,
)
from .errors import (
    FibernormError,
    IrreducibilityUnverified,
    ParseError,
    UsageError,
)
from .exact import IntMatrix, char_poly
from .norm import ConeDescription, cone_membership, enumerate_cone_points, fiber_class_report
from .numberfield import build_order, norm_value, trace_functional, trace_via_mult
from .perron import Sign, perron_data

USAGE = """\
usage: fibernorm <subcommand> --input <path> [flags]

subcommands:
  charpoly   characteristic polynomial of the matrix
  perron     dominant eigenvalue, eigenvectors, spectral gap
  trace      trace of a field element      (needs --element)
  norm       norm of a homology class      (needs --class)
  cone       cone membership / enumeration (needs --class and/or --box)
  validate   check genus and singularity data of a bundle
  dimgroup   positivity of a dimension group element (--vector, --stage)
  bratteli   stationary diagram            (--levels, --format text|dot)
  report     fiber class norm report       (needs --fiber-class)

flags:
  --input <path>        input document (required)
  --tol <float>         numeric tolerance            (default 1e-12)
  --max-iter <int>      power iteration budget       (default 100000)
  --prime-budget <int>  reduction primes to try      (default 10)
  --element [a0,...]    field element coordinates
  --class [z1,...]      homology class
  --fiber-class [z1,...] claimed fiber class
  --box <int>           lattice box radius
  --levels <int>        diagram floors               (default 3)
  --stage <int>         element stage                (default 0)
  --vector [v1,...]     dimension group vector       (default all ones)
  --format text|dot     bratteli output format       (default text)
"""

# Global key order for reports; every subcommand emits a subsequence.
_KEY_ORDER = (
    "genus",
    "singularities",
    "rank",
    "charpoly",
    "trace_functional",
    "element",
    "trace",
    "class",
    "norm",
    "membership",
    "cone_points",
    "norm_at_fiber",
    "thurston_fiber_target",
    "discrepancy",
    "gromov_value",
    "dual_euler_value",
    "negative_fiber_norm",
    "lambda",
    "right_vec",
    "left_vec",
    "gap",
    "primitivity_witness",
    "vector",
    "stage",
    "positivity",
    "witness",
    "levels",
    "vertex_count",
    "edge_count",
    "valid",
    "error",
)
_KEY_RANK = {key: i for i, key in enumerate(_KEY_ORDER)}


@dataclass(frozen=True)
class InputDocument:
    matrix: IntMatrix
    genus: int | None = None
    singularities: tuple[int, ...] | None = None

    @property
    def kind(self):
        return "Bundle" if self.genus is not None else "MatrixOnly"


@dataclass
class Options:
    input: str | None = None
    tol: float = 1e-12
    max_iter: int = 100_000
    prime_budget: int = 10
    element: tuple[int, ...] | None = None
    klass: tuple[int, ...] | None = None
    fiber_class: tuple[int, ...] | None = None
    box: int | None = None
    levels: int = 3
    stage: int = 0
    vector: tuple[int, ...] | None = None
    format: str = "text"


# --- input document parsing --------------------------------------------------

def _parse_int(text, line):
    text = text.strip()
    sign = text[1:] if text[:1] in "+-" else text
    if not sign.isdigit():
        raise ParseError(f"expected an integer, got {text!r}", line)
    return int(text)


def _parse_bare_int_list(text, line):
    parts = text.split(",")
    if any(not p.strip() for p in parts):
        raise ParseError(f"malformed integer list {text!r}", line)
    return tuple(_parse_int(p, line) for p in parts)


def _parse_bracket_int_list(text, line=None):
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"expected [..] list, got {text!r}", line)
    inner = text[1:-1].strip()
    if not inner:
        raise ParseError("empty list", line)
    return _parse_bare_int_list(inner, line)


def _parse_matrix(text, line):
    text = text.strip()
    if not (text.startswith("[[") and text.endswith("]]")):
        raise ParseError(f"expected [[..],[..]] matrix, got {text!r}", line)
    rows = []
    depth = 0
    row_start = None
    for pos, ch in enumerate(text):
        if ch == "[":
            depth += 1
            if depth == 2:
                row_start = pos
            elif depth > 2:
                raise ParseError("matrix brackets nest too deep", line)
        elif ch == "]":
            if depth == 2:
                rows.append(text[row_start : pos + 1])
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced brackets in matrix", line)
        elif depth == 1 and ch not in ", \t":
            raise ParseError(f"unexpected character {ch!r} between matrix rows", line)
    if depth != 0:
        raise ParseError("unbalanced brackets in matrix", line)
    entries = [_parse_bracket_int_list(row, line) for row in rows]
    if any(len(row) != len(entries) for row in entries):
        raise ParseError("matrix is not square", line)
    try:
        return IntMatrix(entries)
    except ValueError as exc:
        raise ParseError(str(exc), line) from exc


def parse_input(text):
    """Parse an input document; raises ParseError with a line number."""
    genus = None
    singularities = None
    matrix = None
    seen = set()
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError("expected 'key = value'", line_number)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in seen:
            raise ParseError(f"duplicate key {key!r}", line_number)
        seen.add(key)
        if key == "genus":
            genus = _parse_int(value, line_number)
        elif key == "singularities":
            singularities = _parse_bare_int_list(value, line_number)
        elif key == "matrix":
            matrix = _parse_matrix(value, line_number)
        else:
            raise ParseError(f"unknown key {key!r}", line_number)
    if matrix is None:
        raise ParseError("missing required key 'matrix'")
    if (genus is None) != (singularities is None):
        raise ParseError("'genus' and 'singularities' must appear together")
    return InputDocument(matrix=matrix, genus=genus, singularities=singularities)


def serialize_input(doc):
    """Canonical text form; parse_input round-trips it."""
    lines = []
    if doc.genus is not None:
        lines.append(f"genus = {doc.genus}")
        lines.append("singularities = " + ",".join(str(n) for n in doc.singularities))
    matrix = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in doc.matrix.rows)
    lines.append(f"matrix = [{matrix}]")
    return "\n".join(lines) + "\n"


# --- report formatting -------------------------------------------------------

def _format_float(x):
    if x == 0:
        x = 0.0
    return f"{x:.12g}"


def _format_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (tuple, list)):
        return "[" + ",".join(_format_value(v) for v in value) + "]"
    raise TypeError(f"cannot format report value of type {type(value).__name__}")


def write_report(pairs):
    """Render (key, value) pairs in the canonical key order, one per line."""
    ordered = sorted(pairs, key=lambda kv: _KEY_RANK[kv[0]])
    return "".join(f"{key} = {_format_value(value)}\n" for key, value in ordered)


# --- subcommand handlers -----------------------------------------------------

def _require(option, flag):
    if option is None:
        raise UsageError(f"this subcommand requires {flag}")
    return option


def _require_bundle(doc):
    if doc.kind != "Bundle":
        raise UsageError("this subcommand needs 'genus' and 'singularities' in the input")
    return doc


def _cmd_charpoly(doc, opts):
    return [("charpoly", char_poly(doc.matrix).coeffs)], 0


def _cmd_perron(doc, opts):
    data = perron_data(doc.matrix, tol=opts.tol, max_iter=opts.max_iter)
    pairs = [
        ("lambda", data.eigenvalue),
        ("right_vec", data.right),
        ("left_vec", data.left),
        ("gap", data.gap),
        ("primitivity_witness", data.witness),
    ]
    return pairs, 0


def _cmd_trace(doc, opts):
    element = _require(opts.element, "--element")
    order = build_order(doc.matrix, opts.prime_budget)
    pairs = [
        ("trace_functional", trace_functional(order).t),
        ("element", element),
        ("trace", trace_via_mult(order, element)),
    ]
    return pairs, 0


def _cmd_norm(doc, opts):
    klass = _require(opts.klass, "--class")
    order = build_order(doc.matrix, opts.prime_budget)
    functional = trace_functional(order)
    pairs = [
        ("trace_functional", functional.t),
        ("class", klass),
        ("norm", norm_value(functional, klass)),
    ]
    return pairs, 0


def _cmd_cone(doc, opts):
    if opts.klass is None and opts.box is None:
        raise UsageError("cone needs --class and/or --box")
    order = build_order(doc.matrix, opts.prime_budget)
    cone = ConeDescription(trace_functional(order))
    pairs = [("trace_functional", cone.functional.t)]
    if opts.klass is not None:
        pairs.append(("class", opts.klass))
        pairs.append(("membership", cone_membership(cone, opts.klass).value))
    if opts.box is not None:
        pairs.append(("cone_points", enumerate_cone_points(cone, opts.box)))
    return pairs, 0


def _cmd_validate(doc, opts):
    _require_bundle(doc)
    sing = SingularityData(doc.singularities)
    validate_singularity_data(doc.genus, sing)
    pairs = [
        ("genus", doc.genus),
        ("singularities", sing.prongs),
        ("rank", h2_rank(doc.genus, sing.count)),
        ("valid", "ok"),
    ]
    return pairs, 0


def _cmd_dimgroup(doc, opts):
    group = make_dim_group(doc.matrix)
    if opts.stage < 0:
        raise UsageError("--stage must be nonnegative")
    vector = opts.vector if opts.vector is not None else (1,) * group.k
    element = DimGroupElement(vector, opts.stage)
    sign = is_positive(group, element)
    if sign.sign is Sign.UNDECIDED:
        return [("error", "PositivityUndecided")], 3
    pairs = [
        ("vector", element.v),
        ("stage", element.stage),
        ("positivity", sign.sign.value),
    ]
    if sign.witness is not None:
        pairs.append(("witness", sign.witness))
    return pairs, 0


def _cmd_bratteli(doc, opts):
    group = make_dim_group(doc.matrix)
    if opts.format == "dot":
        return bratteli_dot(group, opts.levels), 0
    bratteli_diagram(group, opts.levels)
    entry_sum = sum(sum(row) for row in doc.matrix.rows)
    pairs = [
        ("levels", opts.levels),
        ("vertex_count", opts.levels * doc.matrix.k),
        ("edge_count", (opts.levels - 1) * entry_sum),
    ]
    return pairs, 0


def _cmd_report(doc, opts):
    _require_bundle(doc)
    fiber = _require(opts.fiber_class, "--fiber-class")
    sing = SingularityData(doc.singularities)
    bundle = build_bundle(doc.genus, sing, doc.matrix)
    report = fiber_class_report(bundle, fiber, opts.prime_budget)
    pairs = [
        ("genus", report.genus),
        ("singularities", report.singularities),
        ("rank", report.rank),
        ("charpoly", report.charpoly.coeffs),
        ("trace_functional", report.functional.t),
        ("class", report.fiber_class),
        ("norm_at_fiber", report.norm_at_fiber),
        ("thurston_fiber_target", report.thurston_fiber_target),
        ("discrepancy", report.discrepancy),
        ("dual_euler_value", report.dual_euler_value),
    ]
    if report.gromov_value is not None:
        pairs.append(("gromov_value", report.gromov_value))
    if report.negative_fiber_norm:
        pairs.append(("negative_fiber_norm", True))
    return pairs, 0


_HANDLERS = {
    "charpoly": _cmd_charpoly,
    "perron": _cmd_perron,
    "trace": _cmd_trace,
    "norm": _cmd_norm,
    "cone": _cmd_cone,
    "validate": _cmd_validate,
    "dimgroup": _cmd_dimgroup,
    "bratteli": _cmd_bratteli,
    "report": _cmd_report,
}


# --- flag parsing ------------------------------------------------------------

def _flag_int(value, flag):
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{flag} expects an integer, got {value!r}") from None


def _flag_float(value, flag):
    try:
        return float(value)
    except ValueError:
        raise UsageError(f"{flag} expects a number, got {value!r}") from None


def _flag_int_list(value, flag):
    try:
        return _parse_bracket_int_list(value)
    except ParseError:
        raise UsageError(f"{flag} expects [i,j,...], got {value!r}") from None


def _parse_argv(argv):
    if not argv:
        raise UsageError("missing subcommand")
    name = argv[0]
    if name not in _HANDLERS:
        raise UsageError(f"unknown subcommand {name!r}")
    opts = Options()
    i = 1
    while i < len(argv):
        flag = argv[i]
        if not flag.startswith("--"):
            raise UsageError(f"unexpected argument {flag!r}")
        if i + 1 >= len(argv):
            raise UsageError(f"flag {flag} needs a value")
        value = argv[i + 1]
        i += 2
        if flag == "--input":
            opts.input = value
        elif flag == "--tol":
            opts.tol = _flag_float(value, flag)
        elif flag == "--max-iter":
            opts.max_iter = _flag_int(value, flag)
        elif flag == "--prime-budget":
            opts.prime_budget = _flag_int(value, flag)
        elif flag == "--element":
            opts.element = _flag_int_list(value, flag)
        elif flag == "--class":
            opts.klass = _flag_int_list(value, flag)
        elif flag == "--fiber-class":
            opts.fiber_class = _flag_int_list(value, flag)
        elif flag == "--box":
            opts.box = _flag_int(value, flag)
        elif flag == "--levels":
            opts.levels = _flag_int(value, flag)
        elif flag == "--stage":
            opts.stage = _flag_int(value, flag)
        elif flag == "--vector":
            opts.vector = _flag_int_list(value, flag)
        elif flag == "--format":
            if value not in ("text", "dot"):
                raise UsageError(f"--format expects text or dot, got {value!r}")
            opts.format = value
        else:
            raise UsageError(f"unknown flag {flag!r}")
    if opts.input is None:
        raise UsageError("--input is required")
    if opts.prime_budget < 1:
        raise UsageError("--prime-budget must be at least 1")
    if opts.box is not None and opts.box < 0:
        raise UsageError("--box must be nonnegative")
    return name, opts


def run_subcommand(name, opts, doc):
    """Dispatch to a handler; returns (report text, exit code)."""
    result, code = _HANDLERS[name](doc, opts)
    if isinstance(result, str):
        return result, code
    return write_report(result), code


def main(argv, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        name, opts = _parse_argv(argv)
    except UsageError as exc:
        err.write(USAGE)
        err.write(f"error: {exc}\n")
        out.write("error = UsageError\n")
        return 2
    try:
        with open(opts.input, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        err.write(f"error: cannot read input: {exc}\n")
        out.write("error = UsageError\n")
        return 2
    try:
        doc = parse_input(text)
        report, code = run_subcommand(name, opts, doc)
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        out.write("error = ParseError\n")
        return 2
    except UsageError as exc:
        err.write(USAGE)
        err.write(f"error: {exc}\n")
        out.write("error = UsageError\n")
        return 2
    except IrreducibilityUnverified as exc:
        err.write(f"error: {exc}\n")
        out.write("error = IrreducibilityUnverified\n")
        return 3
    except FibernormError as exc:
        err.write(f"error: {exc}\n")
        out.write(f"error = {type(exc).__name__}\n")
        return 1
    out.write(report)
    return code


def console_entry():
    sys.exit(main(sys.argv[1:]))
