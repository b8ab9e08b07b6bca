"""Command line front end.

Every subcommand prints one deterministic document to stdout, as JSON or
as flat CSV, with each numeric value carried both exactly and as a
decimal at the requested precision. Exit codes: 0 on success (and on a
feasible ``check``), 1 when ``check`` finds the parameters infeasible,
2 for invalid input or usage, 3 when structural validation fails.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import catalog
from .errors import (
    DegenerateIntensityError,
    GeneratorParameterError,
    InfeasibleParametersError,
    MixtureShareError,
    NonConvexCellError,
    NotATessellationError,
    ParameterDomainError,
    PlanarParameterError,
    UnknownEntryError,
)
from .feasibility import (
    classify,
    hemi_pi_region,
    interior_rate_region,
    plate_profile_region,
    ridge_rate_interval,
    sample_feasible,
)
from .io import (
    PARAM_FIELDS,
    PLANAR_ALIASES,
    PLANAR_FIELDS,
    UsageError,
    encode,
    interpolate_polyline,
    params_from_file,
    params_from_pairs,
    parse_generator_args,
    parse_pairs,
    render_json,
    render_kv_csv,
    render_series_csv,
)
from .params import TessParams, derive
from .scalar import as_scalar
from .transforms import PlanarParams, central_point, central_point_orbit, column, mixture, mixture_curve, stratum

DEFAULT_DIGITS = 50
MIN_DIGITS = 15
PRECISION_ENV = "TESSTOPO_PRECISION"


def params_doc(params: TessParams) -> dict:
    return {field: getattr(params, field) for field in PARAM_FIELDS}


def patch_doc(patch) -> dict:
    return {
        "axes": list(patch.axes),
        "kind": patch.kind,
        "vertices": [[x, y] for x, y in patch.vertices],
        "open_edges": list(patch.open_edges),
    }


def resolve_digits(args) -> int:
    digits = getattr(args, "digits", None)
    if digits is None:
        raw = os.environ.get(PRECISION_ENV)
        if raw is None:
            digits = DEFAULT_DIGITS
        else:
            try:
                digits = int(raw)
            except ValueError:
                raise UsageError(
                    f"{PRECISION_ENV} must be an integer, got {raw!r}")
    if digits < MIN_DIGITS:
        raise UsageError(f"precision must be at least {MIN_DIGITS} digits")
    return digits


def resolve_params(args) -> TessParams:
    sources = [bool(args.pairs), args.params_file is not None,
               args.catalog is not None]
    if sum(sources) != 1:
        raise UsageError(
            "give exactly one input source: key=value pairs, "
            "--params-file, or --catalog")
    if args.pairs:
        return params_from_pairs(args.pairs)
    if args.params_file is not None:
        return params_from_file(args.params_file)
    entry = catalog.get(args.catalog)
    if not entry.is_complete:
        raise UsageError(
            f"catalog entry {entry.entry_id} has no complete parameter set")
    return entry.to_params()


def planar_from_pairs(tokens: Sequence[str]) -> PlanarParams:
    given = parse_pairs(tokens, PLANAR_ALIASES, PLANAR_FIELDS)
    if "edges_per_vertex" not in given:
        raise UsageError("planar input needs edges_per_vertex (ve=...)")
    kwargs = {}
    for field, text in given.items():
        try:
            kwargs[field] = as_scalar(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad value for {field}: {text!r}") from exc
    return PlanarParams(**kwargs)


def emit(args, doc: dict, series: list[dict] | None = None) -> None:
    if args.format == "csv":
        if series is not None:
            sys.stdout.write(render_series_csv(series))
        else:
            sys.stdout.write(render_kv_csv(doc))
    else:
        sys.stdout.write(render_json(doc))


def add_source_arguments(sub) -> None:
    sub.add_argument("pairs", nargs="*", metavar="key=value",
                     help="inline parameters (ve=, ep=, pv=, xi=, kappa=, "
                          "psi=, tau=, intensity=)")
    sub.add_argument("--params-file", metavar="PATH",
                     help="JSON file holding a parameter set")
    sub.add_argument("--catalog", metavar="ID",
                     help="take parameters from a catalog entry")


def add_output_arguments(sub) -> None:
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--digits", type=int, default=None,
                     help=f"decimal evaluation precision "
                          f"(default {DEFAULT_DIGITS}, or ${PRECISION_ENV})")


def cmd_derive(args) -> int:
    digits = resolve_digits(args)
    params = resolve_params(args)
    summary = derive(params)
    doc = {
        "parameters": params_doc(params),
        "intensities": dict(summary.intensities),
        "mean_adjacencies": {f"{a}->{b}": value
                             for (a, b), value in summary.mean_adjacencies.items()},
        "faces_per_cell": {
            "apices": summary.apices_per_cell,
            "ridges": summary.ridges_per_cell,
            "sides": summary.sides_per_cell,
        },
        "corners_per_cell_side": summary.corners_per_cell_side,
        "corners_per_plate": summary.corners_per_plate,
        "pi_edges_per_vertex": summary.pi_edges_per_vertex,
    }
    emit(args, encode(doc, digits))
    return 0


def cmd_check(args) -> int:
    digits = resolve_digits(args)
    params = resolve_params(args)
    report = classify(params)
    doc = {
        "parameters": params_doc(params),
        "branch": report.branch,
        "feasible": report.feasible,
        "violated": list(report.violated),
        "boundary": list(report.boundary),
        "bounds": [
            {
                "name": bound.name,
                "parameter": bound.parameter,
                "relation": bound.relation,
                "limit": bound.limit,
                "value": bound.value,
                "applicable": bound.applicable,
                "satisfied": bound.satisfied,
                "on_boundary": bound.on_boundary,
            }
            for bound in report.bounds
        ],
    }
    emit(args, encode(doc, digits))
    return 0 if report.feasible else 1


def cmd_region(args) -> int:
    digits = resolve_digits(args)
    if args.type == "pv-ep":
        if args.ve is None:
            raise UsageError("region --type pv-ep needs --ve")
        if args.pairs or args.params_file or args.catalog:
            raise UsageError("region --type pv-ep takes --ve, not a parameter set")
        try:
            ve = as_scalar(args.ve)
            ep_max = as_scalar(args.ep_max) if args.ep_max is not None else None
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad scalar: {exc}") from exc
        region = (plate_profile_region(ve) if ep_max is None
                  else plate_profile_region(ve, ep_max))
        boundaries = []
        series = []
        for line in region.boundaries:
            points = interpolate_polyline(list(line.points), args.resolution)
            boundaries.append({
                "name": line.name,
                "style": line.style,
                "included": line.included,
                "points": [[x, y] for x, y in points],
            })
            series.append({"name": line.name,
                           "points": encode([[x, y] for x, y in points], digits)})
        patch = region.face_to_face
        doc = {
            "type": "pv-ep",
            "edges_per_vertex": region.edges_per_vertex,
            "plate_cap": region.plate_cap,
            "window": {
                "vertices_per_plate_max": region.window[0],
                "plates_per_edge_max": region.window[1],
            },
            "face_to_face": patch_doc(patch),
            "boundaries": boundaries,
        }
        series.append({"name": "face_to_face",
                       "points": encode([[x, y] for x, y in patch.vertices], digits)})
        emit(args, encode(doc, digits), series)
        return 0
    params = resolve_params(args)
    if args.type == "psi-tau":
        patch = interior_rate_region(params.edges_per_vertex,
                                     params.plates_per_edge,
                                     params.vertices_per_plate)
        low, high = ridge_rate_interval(params.edges_per_vertex,
                                        params.plates_per_edge,
                                        params.vertices_per_plate)
        doc = {
            "type": "psi-tau",
            "parameters": {
                "edges_per_vertex": params.edges_per_vertex,
                "plates_per_edge": params.plates_per_edge,
                "vertices_per_plate": params.vertices_per_plate,
            },
            "ridge_interior_interval": [low, high],
            "region": patch_doc(patch),
        }
    else:
        patch = hemi_pi_region(params.edges_per_vertex,
                               params.plates_per_edge,
                               params.vertices_per_plate,
                               params.ridge_interior_rate,
                               params.side_interior_rate)
        doc = {
            "type": "kappa-xi",
            "parameters": {
                "edges_per_vertex": params.edges_per_vertex,
                "plates_per_edge": params.plates_per_edge,
                "vertices_per_plate": params.vertices_per_plate,
                "ridge_interior_rate": params.ridge_interior_rate,
                "side_interior_rate": params.side_interior_rate,
            },
            "region": patch_doc(patch),
        }
    series = [{"name": "region",
               "points": encode([[x, y] for x, y in patch.vertices], digits)}]
    emit(args, encode(doc, digits), series)
    return 0


def component_params(source: str) -> TessParams:
    if source.startswith("@"):
        return params_from_file(source[1:])
    entry = catalog.get(source)
    if not entry.is_complete:
        raise UsageError(
            f"catalog entry {entry.entry_id} has no complete parameter set")
    return entry.to_params()


def cmd_transform(args) -> int:
    digits = resolve_digits(args)
    if args.op in ("stratum", "column"):
        if args.params_file or args.catalog:
            raise UsageError(
                f"transform --op {args.op} takes planar key=value pairs")
        planar = planar_from_pairs(args.pairs)
        result = stratum(planar) if args.op == "stratum" else column(planar)
        doc = {
            "operation": args.op,
            "planar": {
                "edges_per_vertex": planar.edges_per_vertex,
                "pi_vertex_share": planar.pi_vertex_share,
                "pi_ends_per_edge": planar.pi_ends_per_edge,
                "degree_second_moment": planar.degree_second_moment,
                "vertex_intensity": planar.vertex_intensity,
            },
            "result": params_doc(result),
        }
    elif args.op == "central-point":
        params = resolve_params(args)
        doc = {"operation": args.op, "input": params_doc(params)}
        if args.steps is not None:
            if args.steps < 1:
                raise UsageError("--steps must be at least 1")
            orbit = central_point_orbit(params, args.steps)
            doc["steps"] = args.steps
            doc["orbit"] = [params_doc(step) for step in orbit]
            doc["result"] = params_doc(orbit[-1])
        else:
            doc["result"] = params_doc(central_point(params))
    else:
        if not args.component:
            raise UsageError(
                "transform --op mixture needs --component SOURCE=WEIGHT "
                "at least twice")
        components = []
        for token in args.component:
            source, sep, weight_text = token.rpartition("=")
            if not sep or not source:
                raise UsageError(
                    f"expected SOURCE=WEIGHT component, got {token!r}")
            try:
                weight = as_scalar(weight_text)
            except (ValueError, ZeroDivisionError) as exc:
                raise UsageError(f"bad weight {weight_text!r}") from exc
            components.append((source, component_params(source), weight))
        result = mixture([(p, w) for _, p, w in components])
        doc = {
            "operation": args.op,
            "components": [
                {"source": src, "weight": w, "parameters": params_doc(p)}
                for src, p, w in components
            ],
            "result": params_doc(result),
        }
        if len(components) == 2:
            curve = mixture_curve(components[0][1], components[1][1])
            doc["curve"] = {
                "kind": curve.kind,
                "offset": curve.offset,
                "inverse_coefficient": curve.inverse_coefficient,
                "endpoints": [[x, y] for x, y in curve.endpoints],
            }
    emit(args, encode(doc, digits))
    return 0


def cmd_catalog(args) -> int:
    digits = resolve_digits(args)
    if args.action == "list":
        rows = [
            {
                "id": entry.entry_id,
                "title": entry.title,
                "complete": entry.is_complete,
                "face_to_face": entry.face_to_face,
            }
            for entry in catalog.entries()
        ]
        doc = {"entries": rows, "count": len(rows)}
        emit(args, encode(doc, digits))
        return 0
    if args.action == "show":
        if args.id is None:
            raise UsageError("catalog show needs an entry id")
        entry = catalog.get(args.id)
        doc = {
            "id": entry.entry_id,
            "title": entry.title,
            "construction": entry.construction,
            "complete": entry.is_complete,
            "face_to_face": entry.face_to_face,
            "on_cap_curve": entry.on_cap_curve,
            "parameters": {
                field: getattr(entry, field)
                for field in PARAM_FIELDS if field != "vertex_intensity"
            },
            "adjacency_checks": {f"{a}->{b}": value
                                 for a, b, value in entry.adjacency_checks},
            "generator": entry.generator,
            "generator_args": entry.generator_args,
            "derived_from": entry.derived_from,
            "notes": entry.notes,
        }
        emit(args, encode(doc, digits))
        return 0
    report = catalog.verify_catalog()
    doc = {
        "checked": report.checked,
        "ok": report.ok,
        "failures": list(report.failures),
    }
    emit(args, encode(doc, digits))
    return 0 if report.ok else 3


def build_complex_from_args(args):
    from .complexes import build_complex, generate, load_domain_file

    sources = [args.generator is not None, args.domain is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one of --generator or --domain")
    if args.generator is not None:
        domain = generate(args.generator, **parse_generator_args(args.arg))
        label = args.generator
    else:
        try:
            domain = load_domain_file(args.domain)
        except OSError as exc:
            raise UsageError(f"cannot read {args.domain}: {exc}") from exc
        label = args.domain
    return label, build_complex(domain)


def cmd_measure(args) -> int:
    from .complexes import measure, validate

    digits = resolve_digits(args)
    label, cx = build_complex_from_args(args)
    measured = measure(cx)
    doc = {
        "source": label,
        "parameters": params_doc(measured.params),
        "counts": dict(measured.counts),
        "intensities": dict(measured.intensities),
        "mean_adjacencies": {f"{a}->{b}": value
                             for (a, b), value in measured.mean_adjacencies.items()},
        "faces_per_cell": {
            "apices": measured.apices_per_cell,
            "ridges": measured.ridges_per_cell,
            "sides": measured.sides_per_cell,
        },
        "corners_per_cell_side": measured.corners_per_cell_side,
        "corners_per_plate": measured.corners_per_plate,
        "pi_edges_per_vertex": measured.pi_edges_per_vertex,
        "face_to_face": measured.face_to_face,
    }
    code = 0
    if args.validate:
        report = validate(cx)
        doc["validation"] = {
            "ok": report.ok,
            "failures": list(report.failures),
            "notes": list(report.notes),
        }
        if not report.ok:
            for failure in report.failures:
                print(f"validation failure: {failure}", file=sys.stderr)
            code = 3
    if args.dump_obj is not None:
        with open(args.dump_obj, "w", encoding="utf-8") as fh:
            fh.write(cx.domain.obj_dump())
    emit(args, encode(doc, digits))
    return code


def cmd_stats(args) -> int:
    from .complexes import measure, vertex_stats

    digits = resolve_digits(args)
    label, cx = build_complex_from_args(args)
    stats = vertex_stats(cx)
    measured = measure(cx)
    rows = [
        {
            "vertex": i,
            "position": list(stat.position),
            "edge_count": stat.edge_count,
            "pi_edge_count": stat.pi_edge_count,
            "hemi_indicator": stat.hemi_indicator,
            "ridge_interior_count": stat.ridge_interior_count,
            "side_interior_count": stat.side_interior_count,
        }
        for i, stat in enumerate(stats)
    ]
    doc = {
        "source": label,
        "vertex_count": len(rows),
        "vertices": rows,
        "aggregates": {
            "edges_per_vertex": measured.params.edges_per_vertex,
            "pi_edge_share": measured.params.pi_edge_share,
            "hemi_vertex_share": measured.params.hemi_vertex_share,
            "ridge_interior_rate": measured.params.ridge_interior_rate,
            "side_interior_rate": measured.params.side_interior_rate,
        },
    }
    emit(args, encode(doc, digits))
    return 0


def cmd_sample(args) -> int:
    digits = resolve_digits(args)
    if args.count < 1:
        raise UsageError("--count must be at least 1")
    samples = sample_feasible(count=args.count, seed=args.seed,
                              face_to_face=args.face_to_face)
    doc = {
        "count": args.count,
        "seed": args.seed,
        "face_to_face": args.face_to_face,
        "samples": [params_doc(p) for p in samples],
    }
    emit(args, encode(doc, digits))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tesstopo",
        description="Topological parameter calculus for spatial tessellations.")
    subs = parser.add_subparsers(dest="command", required=True)

    derive_p = subs.add_parser(
        "derive", help="derive intensities and mean adjacencies")
    add_source_arguments(derive_p)
    add_output_arguments(derive_p)
    derive_p.set_defaults(handler=cmd_derive)

    check_p = subs.add_parser(
        "check", help="test parameters against the constraint system")
    add_source_arguments(check_p)
    add_output_arguments(check_p)
    check_p.set_defaults(handler=cmd_check)

    region_p = subs.add_parser(
        "region", help="feasible regions and their boundary polylines")
    region_p.add_argument("--type", required=True,
                          choices=("pv-ep", "psi-tau", "kappa-xi"))
    region_p.add_argument("--ve", help="edges per vertex (pv-ep only)")
    region_p.add_argument("--ep-max",
                          help="plates-per-edge ceiling for the plot window")
    region_p.add_argument("--resolution", type=int, default=64,
                          help="target points per boundary polyline")
    add_source_arguments(region_p)
    add_output_arguments(region_p)
    region_p.set_defaults(handler=cmd_region)

    transform_p = subs.add_parser(
        "transform", help="apply a model transformation")
    transform_p.add_argument(
        "--op", required=True,
        choices=("stratum", "column", "central-point", "mixture"))
    transform_p.add_argument("--steps", type=int, default=None,
                             help="iterate central-point this many times")
    transform_p.add_argument("--component", action="append", default=[],
                             metavar="SOURCE=WEIGHT",
                             help="mixture component: catalog id or @file, "
                                  "with its weight")
    add_source_arguments(transform_p)
    add_output_arguments(transform_p)
    transform_p.set_defaults(handler=cmd_transform)

    catalog_p = subs.add_parser(
        "catalog", help="worked-example catalog")
    catalog_p.add_argument("action", choices=("list", "show", "verify"))
    catalog_p.add_argument("id", nargs="?", default=None,
                           help="entry id for show")
    add_output_arguments(catalog_p)
    catalog_p.set_defaults(handler=cmd_catalog)

    measure_p = subs.add_parser(
        "measure", help="build a periodic tessellation and measure it")
    measure_p.add_argument("--generator", metavar="NAME")
    measure_p.add_argument("--arg", action="append", default=[],
                           metavar="key=value", help="generator argument")
    measure_p.add_argument("--domain", metavar="PATH",
                           help="JSON fundamental domain file")
    measure_p.add_argument("--validate", action="store_true",
                           help="run the full structural validation")
    measure_p.add_argument("--dump-obj", metavar="PATH",
                           help="write the cell geometry as a Wavefront file")
    add_output_arguments(measure_p)
    measure_p.set_defaults(handler=cmd_measure)

    stats_p = subs.add_parser(
        "stats", help="per-vertex counts and their aggregates")
    stats_p.add_argument("--generator", metavar="NAME")
    stats_p.add_argument("--arg", action="append", default=[],
                         metavar="key=value", help="generator argument")
    stats_p.add_argument("--domain", metavar="PATH",
                         help="JSON fundamental domain file")
    add_output_arguments(stats_p)
    stats_p.set_defaults(handler=cmd_stats)

    sample_p = subs.add_parser(
        "sample", help="draw random feasible parameter tuples")
    sample_p.add_argument("--count", type=int, default=1)
    sample_p.add_argument("--seed", type=int, default=0)
    sample_p.add_argument("--face-to-face", action="store_true",
                          help="sample from the face-to-face branch")
    add_output_arguments(sample_p)
    sample_p.set_defaults(handler=cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (None, 0):
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"tesstopo: {exc}", file=sys.stderr)
        return 2
    except (ParameterDomainError, DegenerateIntensityError, MixtureShareError,
            PlanarParameterError, GeneratorParameterError,
            InfeasibleParametersError) as exc:
        print(f"tesstopo: {exc}", file=sys.stderr)
        return 2
    except UnknownEntryError as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"tesstopo: {message}", file=sys.stderr)
        return 2
    except (NotATessellationError, NonConvexCellError) as exc:
        print(f"tesstopo: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"tesstopo: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
