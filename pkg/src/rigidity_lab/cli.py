"""Command-line front end: polyhedron I/O, the analysis pipeline as
subcommands, parameter sweeps, the conjecture-evidence harness, and mesh
export.

Subcommands
-----------
generate   emit a PolyhedronDocument for a named generator
analyze    validate -> decompose -> stiffness spectrum -> deformation space
sweep      sample a generator over a parameter range (parallel workers)
export     write a standard OBJ triangle mesh
decompose  direct access to the tetrahedralization search

Machine-readable output is a single JSON document per invocation with stable
key names and a versioned schema; identical inputs and flags yield
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import generators as gen
from .deformation import deformation_space, rigidity_matrix
from .errors import (
    BadParams,
    BadRange,
    ParseError,
    RigidityLabError,
    UnknownGenerator,
)
from .geom import PolyhedralSurface, is_weakly_convex
from .stiffness import (
    DEFAULT_SCHEME,
    FDScheme,
    SchemeKind,
    TOL_EIG,
    assemble_mt,
    rigidity_verdict,
    spectrum,
)
from .triangulation import (
    BudgetExceeded,
    NonDecomposable,
    Triangulation,
    find_decomposition,
    vertex_census,
)

SCHEMA = "rigidity-lab/1"


# ---------------------------------------------------------------------------
# PolyhedronDocument
# ---------------------------------------------------------------------------

@dataclass
class PolyhedronDocument:
    """Versioned serialization of a surface, optionally with a triangulation
    (whose point set may extend the surface vertices) and vertex labels."""

    vertices: list
    faces: list
    triangulation: list | None = None
    points: list | None = None
    labels: dict | None = None

    def to_json(self) -> str:
        doc = {"schema": SCHEMA,
               "vertices": self.vertices,
               "faces": self.faces}
        if self.triangulation is not None:
            doc["triangulation"] = self.triangulation
        if self.points is not None:
            doc["points"] = self.points
        if self.labels is not None:
            doc["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return json.dumps(doc, sort_keys=True, separators=(",", ": "),
                          indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PolyhedronDocument":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise ParseError("document root must be an object")
        if doc.get("schema") != SCHEMA:
            raise ParseError(f"unknown schema {doc.get('schema')!r}; "
                             f"expected {SCHEMA!r}")
        for key in ("vertices", "faces"):
            if key not in doc:
                raise ParseError(f"missing required key {key!r}")
        vertices = doc["vertices"]
        faces = doc["faces"]
        if (not isinstance(vertices, list)
                or any(len(v) != 3 for v in vertices)):
            raise ParseError("vertices must be an array of [x, y, z]")
        if not isinstance(faces, list) or any(len(f) != 3 for f in faces):
            raise ParseError("faces must be an array of [i, j, k]")
        points = doc.get("points")
        n_pts = len(points) if points is not None else len(vertices)
        for f in faces:
            if any(not isinstance(i, int) or not 0 <= i < len(vertices)
                   for i in f):
                raise ParseError(f"face index out of range: {f}")
        tets = doc.get("triangulation")
        if tets is not None:
            for t in tets:
                if len(t) != 4 or any(not isinstance(i, int)
                                      or not 0 <= i < n_pts for i in t):
                    raise ParseError(f"tetrahedron index out of range: {t}")
        labels = doc.get("labels")
        if labels is not None:
            labels = {int(k): str(v) for k, v in labels.items()}
            if any(not 0 <= k < n_pts for k in labels):
                raise ParseError("label index out of range")
        return cls(vertices=vertices, faces=faces, triangulation=tets,
                   points=points, labels=labels)

    @classmethod
    def from_surface(cls, s: PolyhedralSurface,
                     triangulation: Triangulation | None = None,
                     labels: dict | None = None) -> "PolyhedronDocument":
        tets = None
        points = None
        if triangulation is not None:
            tets = [list(t) for t in triangulation.tetrahedra]
            if len(triangulation.points) > len(s.vertices):
                points = [list(map(float, p)) for p in triangulation.points]
        return cls(vertices=[list(map(float, v)) for v in s.vertices],
                   faces=[list(f) for f in s.faces],
                   triangulation=tets, points=points, labels=labels)

    def surface(self) -> PolyhedralSurface:
        return PolyhedralSurface(np.array(self.vertices, dtype=float),
                                 [tuple(f) for f in self.faces])

    def as_triangulation(self) -> Triangulation | None:
        if self.triangulation is None:
            return None
        pts = (np.array(self.points, dtype=float)
               if self.points is not None else None)
        return Triangulation(self.surface(),
                             [tuple(t) for t in self.triangulation],
                             points=pts)


# ---------------------------------------------------------------------------
# Generator registry
# ---------------------------------------------------------------------------

def _theta_from_args(args) -> float | None:
    if getattr(args, "theta_pi_frac", None) is not None:
        frac = args.theta_pi_frac
        try:
            num, den = frac.split("/")
            return math.pi * int(num) / int(den)
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParams(
                f"--theta-pi-frac expects NUM/DEN with integer parts; "
                f"got {frac!r}") from exc
    return getattr(args, "theta", None)


def _gen_schonhardt(args) -> PolyhedronDocument:
    theta = _theta_from_args(args)
    if theta is None:
        theta = math.pi / 6.0
    params = gen.SchonhardtParams(theta, args.r, args.h)
    return PolyhedronDocument.from_surface(gen.schonhardt(params))


def _gen_octahedron(args) -> PolyhedronDocument:
    s = gen.octahedron()
    t = gen.octahedron_axis_triangulation(s)
    return PolyhedronDocument.from_surface(s, t)


def _gen_cube_flat(args) -> PolyhedronDocument:
    s = gen.cube_with_flat_vertex()
    t = gen.cube_flat_triangulation(s)
    return PolyhedronDocument.from_surface(s, t)


def _gen_octahedron_centroid(args) -> PolyhedronDocument:
    t = gen.octahedron_with_centroid_triangulation()
    return PolyhedronDocument.from_surface(t.surface, t)


def _gen_pushed_pair(args) -> PolyhedronDocument:
    convex, pushed = gen.pushed_vertex_pair(args.depth)
    s = pushed if args.member == "pushed" else convex
    t = gen.pushed_pair_triangulation(s)
    return PolyhedronDocument.from_surface(s, t)


def _tpoly_params(args) -> gen.TPolyParams:
    hull = gen.SchonhardtParams(args.hull_theta, args.hull_r, args.hull_h)
    ext = gen.SchonhardtParams(args.ext_theta, args.ext_r, args.ext_h)
    return gen.TPolyParams(hull, ext, vertical_shift=args.shift)


def _gen_tpoly(args) -> PolyhedronDocument:
    surface, labels = gen.t_polyhedron(_tpoly_params(args))
    return PolyhedronDocument.from_surface(surface, labels=labels)


GENERATORS = {
    "schonhardt": _gen_schonhardt,
    "octahedron": _gen_octahedron,
    "cube-with-flat-vertex": _gen_cube_flat,
    "octahedron-with-centroid": _gen_octahedron_centroid,
    "pushed-pair": _gen_pushed_pair,
    "t-poly": _gen_tpoly,
}


def _add_generator_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theta", type=float, default=None,
                   help="twist angle in radians")
    p.add_argument("--theta-pi-frac", default=None, metavar="NUM/DEN",
                   help="twist angle as a rational multiple of pi")
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--h", type=float, default=2.0)
    p.add_argument("--depth", type=float, default=None,
                   help="push depth for the pushed-pair generator")
    p.add_argument("--member", choices=("convex", "pushed"), default="pushed",
                   help="which member of the pushed pair to emit")
    p.add_argument("--shift", type=float, default=0.0,
                   help="vertical shift of the T-polyhedron cavity")
    p.add_argument("--hull-theta", type=float, default=math.pi / 6.0)
    p.add_argument("--hull-r", type=float, default=1.0)
    p.add_argument("--hull-h", type=float, default=2.0)
    p.add_argument("--ext-theta", type=float, default=math.pi / 6.0)
    p.add_argument("--ext-r", type=float, default=2.5)
    p.add_argument("--ext-h", type=float, default=4.0)


def _make_document(args) -> PolyhedronDocument:
    name = args.name
    if os.path.exists(name) or name == "-":
        text = sys.stdin.read() if name == "-" else open(name).read()
        return PolyhedronDocument.from_json(text)
    if name not in GENERATORS:
        raise UnknownGenerator(
            f"unknown generator {name!r}; known: {', '.join(sorted(GENERATORS))}")
    return GENERATORS[name](args)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def analyze_surface(s: PolyhedralSurface,
                    t: Triangulation | None = None,
                    scheme: FDScheme = DEFAULT_SCHEME,
                    tol_eig: float = TOL_EIG,
                    budget: int = 200000) -> dict:
    """Run the full pipeline and return the AnalysisReport as a plain dict
    (the machine-readable form; the human rendering is derived from it)."""
    report: dict = {"schema": "rigidity-lab/analysis/1"}

    validity = s.validate()
    report["validity"] = {
        "ok": bool(validity.ok),
        "violations": [f"{v.tag}: {v.detail}" for v in validity.violations],
    }
    if not validity.ok:
        return report

    mask, overall = is_weakly_convex(s)
    report["weakly_convex"] = {
        "per_vertex": [bool(b) for b in mask],
        "overall": bool(overall),
    }

    if t is None:
        outcome = find_decomposition(s, budget=budget)
    else:
        outcome = t
    if isinstance(outcome, NonDecomposable):
        report["decomposition"] = {
            "kind": "non-decomposable",
            "admissible_candidates": outcome.admissible_candidates,
            "nodes_explored": outcome.nodes_explored,
        }
        outcome = None
    elif isinstance(outcome, BudgetExceeded):
        report["decomposition"] = {
            "kind": "budget-exceeded",
            "nodes_explored": outcome.nodes_explored,
        }
        outcome = None
    else:
        report["decomposition"] = {
            "kind": "triangulation",
            "tetrahedra": [list(tet) for tet in outcome.tetrahedra],
            "interior_edges": [list(e) for e in outcome.interior_edges],
        }

    stiff_verdict = None
    if outcome is not None:
        census = vertex_census(outcome)
        report["census"] = {"m": census.m, "k": census.k}
        mt = assemble_mt(outcome, scheme)
        sp = spectrum(mt, tol_eig=tol_eig)
        verdict = rigidity_verdict(outcome, sp, census)
        stiff_verdict = verdict.kind.value
        report["stiffness"] = {
            "scheme": {"kind": scheme.kind.value, "epsilon": scheme.epsilon,
                       "round_sig": scheme.round_sig},
            "eigenvalues": [float(x) for x in sp.eigenvalues],
            "n_negative": sp.n_negative,
            "n_zero": sp.n_zero,
            "n_positive": sp.n_positive,
            "tol_eig": sp.tol_eig,
            "verdict": stiff_verdict,
        }

    basis, dverdict = deformation_space(s)
    report["deformation"] = {
        "nullity": basis.nullity,
        "trivial_dim": basis.trivial_dim,
        "nontrivial_dim": basis.nullity - basis.trivial_dim,
        "spectral_gap": (None if math.isinf(basis.spectral_gap)
                         else float(basis.spectral_gap)),
        "verdict": dverdict.kind.value,
    }

    # A Flexible spectral verdict is finite-difference evidence; without
    # corroboration from the deformation oracle it is downgraded.
    if stiff_verdict is not None:
        agree = stiff_verdict == dverdict.kind.value
        report["oracles_agree"] = bool(agree)
        if stiff_verdict == "Flexible" and not agree:
            report["stiffness"]["verdict"] = "Flexible (numerical)"
        report["verdict"] = (dverdict.kind.value if agree
                             else f"{dverdict.kind.value} (oracles disagree)")
    else:
        report["verdict"] = dverdict.kind.value
    return report


def _render_analysis(report: dict) -> str:
    lines = []
    v = report["validity"]
    lines.append(f"validity: {'ok' if v['ok'] else 'INVALID'}")
    for viol in v["violations"]:
        lines.append(f"  violation: {viol}")
    if not v["ok"]:
        return "\n".join(lines) + "\n"
    wc = report["weakly_convex"]
    flags = "".join("+" if b else "-" for b in wc["per_vertex"])
    lines.append(f"weakly convex: {'yes' if wc['overall'] else 'no'} "
                 f"(per vertex: {flags})")
    d = report["decomposition"]
    if d["kind"] == "triangulation":
        lines.append(f"decomposition: {len(d['tetrahedra'])} tetrahedra, "
                     f"{len(d['interior_edges'])} interior edge(s)")
    elif d["kind"] == "non-decomposable":
        lines.append(f"decomposition: NonDecomposable "
                     f"({d['admissible_candidates']} admissible candidates, "
                     f"{d['nodes_explored']} nodes explored)")
    else:
        lines.append(f"decomposition: budget exceeded after "
                     f"{d['nodes_explored']} nodes")
    if "census" in report:
        c = report["census"]
        lines.append(f"census: m={c['m']} interior vertices, "
                     f"k={c['k']} flat vertices")
    if "stiffness" in report:
        st = report["stiffness"]
        eig = ", ".join(f"{x:.9g}" for x in st["eigenvalues"])
        lines.append(f"M_T spectrum ({st['scheme']['kind']} "
                     f"eps={st['scheme']['epsilon']:g}): [{eig}]")
        lines.append(f"  negative={st['n_negative']} zero={st['n_zero']} "
                     f"positive={st['n_positive']} "
                     f"(tol_eig={st['tol_eig']:g})")
        lines.append(f"  stiffness verdict: {st['verdict']}")
    df = report["deformation"]
    lines.append(f"deformation: nullity={df['nullity']} "
                 f"(trivial {df['trivial_dim']}, "
                 f"nontrivial {df['nontrivial_dim']})")
    lines.append(f"  deformation verdict: {df['verdict']}")
    if "oracles_agree" in report:
        lines.append(f"oracles agree: {'yes' if report['oracles_agree'] else 'no'}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split("..")
    if len(parts) != 2:
        raise BadRange(f"range must be START..END; got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise BadRange(f"range endpoints must be numbers; got {text!r}") from exc
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise BadRange(f"range endpoints must be finite; got {text!r}")
    return lo, hi


def _sweep_samples(lo: float, hi: float, step: float) -> list[float]:
    if not math.isfinite(step) or step <= 0:
        raise BadRange(f"step must be positive and finite; got {step}")
    if hi < lo:
        return []
    n = int(math.floor((hi - lo) / step + 1e-9))
    return [lo + i * step for i in range(n + 1)]


def _worker_count() -> int:
    env = os.environ.get("RIGIDITY_LAB_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError as exc:
            raise BadParams(
                f"RIGIDITY_LAB_THREADS must be an integer; got {env!r}") from exc
        if n < 1:
            raise BadParams("RIGIDITY_LAB_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def sweep_row(name: str, param: str, value: float, args) -> dict:
    """One sweep sample: build the surface, run both oracles, and return the
    row dict.  The conjecture-evidence triple (weakly convex?, decomposable?,
    flexible?) is included for every generator."""
    ns = argparse.Namespace(**vars(args))
    setattr(ns, param.replace("-", "_"), value)
    ns.name = name
    row: dict = {"param": param, "value": value}
    try:
        doc = _make_document(ns)
        s = doc.surface()
    except RigidityLabError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row

    mask, wc = is_weakly_convex(s)
    row["weakly_convex"] = bool(wc)

    outcome = doc.as_triangulation()
    if outcome is None:
        outcome = find_decomposition(s, budget=args.budget)
    row["decomposable"] = isinstance(outcome, Triangulation)

    basis, verdict = deformation_space(s)
    r_matrix = np.linalg.svd(rigidity_matrix(s).matrix, compute_uv=False)
    ncols = 3 * len(s.vertices)
    # Smallest nontrivial singular value: the (3V-7)-th in decreasing order
    # (six trivial motions always lie in the null space).
    svals = np.concatenate([r_matrix, np.zeros(max(0, ncols - len(r_matrix)))])
    row["smallest_nontrivial_sv"] = float(svals[ncols - 7])
    row["nullity"] = basis.nullity
    row["verdict"] = verdict.kind.value
    row["flexible"] = verdict.kind.value == "Flexible"
    return row


def cmd_sweep(args) -> int:
    if args.name not in GENERATORS:
        raise UnknownGenerator(
            f"unknown generator {args.name!r}; "
            f"known: {', '.join(sorted(GENERATORS))}")
    lo, hi = _parse_range(args.range)
    values = _sweep_samples(lo, hi, args.step)
    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        rows = list(pool.map(
            lambda v: sweep_row(args.name, args.param, v, args), values))
    rows.sort(key=lambda r: r["value"])
    out = {"schema": "rigidity-lab/sweep/1",
           "generator": args.name, "param": args.param,
           "range": [lo, hi], "step": args.step, "rows": rows}
    if args.json:
        _emit(json.dumps(out, sort_keys=True, separators=(",", ": "),
                         indent=1) + "\n", args.output)
    else:
        lines = [f"# sweep {args.name} {args.param} {lo}..{hi} step {args.step}",
                 "# value sv_nontrivial nullity verdict "
                 "weakly_convex decomposable flexible"]
        for r in rows:
            if "error" in r:
                lines.append(f"{r['value']:.12g} ERROR {r['error']}")
            else:
                lines.append(
                    f"{r['value']:.12g} {r['smallest_nontrivial_sv']:.6e} "
                    f"{r['nullity']} {r['verdict']} "
                    f"{int(r['weakly_convex'])} {int(r['decomposable'])} "
                    f"{int(r['flexible'])}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def to_obj(doc: PolyhedronDocument) -> str:
    lines = ["# rigidity-lab OBJ export"]
    for v in doc.vertices:
        lines.append("v {:.17g} {:.17g} {:.17g}".format(*map(float, v)))
    for f in doc.faces:
        lines.append("f {} {} {}".format(f[0] + 1, f[1] + 1, f[2] + 1))
    return "\n".join(lines) + "\n"


def from_obj(text: str) -> PolyhedronDocument:
    vertices, faces = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 4:
            try:
                vertices.append([float(x) for x in parts[1:]])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad vertex") from exc
        elif parts[0] == "f" and len(parts) == 4:
            try:
                idx = [int(x.split("/")[0]) - 1 for x in parts[1:]]
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad face") from exc
            faces.append(idx)
        elif parts[0] in ("v", "f"):
            raise ParseError(f"line {lineno}: expected 3 entries")
    return PolyhedronDocument(vertices=vertices, faces=faces)


# ---------------------------------------------------------------------------
# command entry points
# ---------------------------------------------------------------------------

def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    if args.name not in GENERATORS:
        raise UnknownGenerator(
            f"unknown generator {args.name!r}; "
            f"known: {', '.join(sorted(GENERATORS))}")
    doc = GENERATORS[args.name](args)
    _emit(doc.to_json(), args.output)
    return 0


def cmd_analyze(args) -> int:
    doc = _make_document(args)
    round_sig = args.round_sig
    if round_sig is None and args.scheme == "forward":
        round_sig = 6
    scheme = FDScheme(SchemeKind(args.scheme), args.eps, round_sig=round_sig)
    report = analyze_surface(doc.surface(), t=doc.as_triangulation(),
                             scheme=scheme, tol_eig=args.tol_eig,
                             budget=args.budget)
    if args.json:
        _emit(json.dumps(report, sort_keys=True, separators=(",", ": "),
                         indent=1) + "\n", args.output)
    else:
        _emit(_render_analysis(report), args.output)
    return 0


def cmd_export(args) -> int:
    if args.format != "obj":
        raise ParseError(f"unknown export format {args.format!r}")
    doc = _make_document(args)
    _emit(to_obj(doc), args.output)
    return 0


def cmd_decompose(args) -> int:
    doc = _make_document(args)
    outcome = find_decomposition(doc.surface(), budget=args.budget)
    if isinstance(outcome, NonDecomposable):
        result = {"kind": "non-decomposable",
                  "admissible_candidates": outcome.admissible_candidates,
                  "nodes_explored": outcome.nodes_explored}
    elif isinstance(outcome, BudgetExceeded):
        result = {"kind": "budget-exceeded",
                  "nodes_explored": outcome.nodes_explored}
    else:
        result = {"kind": "triangulation",
                  "tetrahedra": [list(t) for t in outcome.tetrahedra],
                  "interior_edges": [list(e) for e in outcome.interior_edges]}
    out = {"schema": "rigidity-lab/decompose/1", "result": result}
    if args.json:
        _emit(json.dumps(out, sort_keys=True, separators=(",", ": "),
                         indent=1) + "\n", args.output)
    else:
        if result["kind"] == "triangulation":
            lines = [f"decomposable: {len(result['tetrahedra'])} tetrahedra"]
            lines += ["  tet {} {} {} {}".format(*t)
                      for t in result["tetrahedra"]]
        elif result["kind"] == "non-decomposable":
            lines = [f"non-decomposable "
                     f"({result['admissible_candidates']} admissible "
                     f"candidates, {result['nodes_explored']} nodes explored)"]
        else:
            lines = [f"budget exceeded after "
                     f"{result['nodes_explored']} nodes"]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigidity-lab",
        description="Infinitesimal rigidity of triangulated polyhedra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("name",
                       help="generator id or path to a polyhedron document")
        _add_generator_flags(p)
        p.add_argument("--budget", type=int, default=200000,
                       help="node budget for the decomposition search")
        p.add_argument("-o", "--output", default=None,
                       help="write output to a file instead of stdout")
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")

    p = sub.add_parser("generate", help="emit a polyhedron document")
    add_common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="run the full rigidity pipeline")
    add_common(p)
    p.add_argument("--scheme", choices=("forward", "central"),
                   default="central", help="finite-difference scheme for M_T")
    p.add_argument("--eps", type=float, default=DEFAULT_SCHEME.epsilon,
                   help="finite-difference step")
    p.add_argument("--tol-eig", type=float, default=TOL_EIG,
                   help="relative zero-eigenvalue tolerance")
    p.add_argument("--round-sig", type=int, default=None,
                   help="round total angles to this many significant digits "
                        "before differencing (default: 6 for the forward "
                        "replication scheme, none for central)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="sample a generator over a range")
    p.add_argument("name", help="generator id")
    p.add_argument("param", help="parameter to sweep (e.g. theta, shift, depth)")
    p.add_argument("range", help="START..END")
    p.add_argument("--step", type=float, required=True)
    _add_generator_flags(p)
    p.add_argument("--budget", type=int, default=200000)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export", help="export a triangle mesh")
    add_common(p)
    p.add_argument("--format", default="obj", help="mesh format (obj)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("decompose", help="search for a tetrahedralization")
    add_common(p)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RigidityLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
