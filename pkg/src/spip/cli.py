"""Command line front end: ``spip classify | fixtures | validate``."""
from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys

from . import oracle, rotation, shearing, svg
from .fixtures import FIXTURES
from .jobs import (
    EXIT_DISAGREEMENT,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VALIDATION,
    InputError,
    parse_input,
    run,
)
from .sphere import SpipError, ValidationError, validate

log = logging.getLogger("spip")


def _cmd_classify(args) -> int:
    job = parse_input(args.input, normalize=args.normalize)
    overrides = {}
    if args.method is not None:
        overrides["method"] = args.method
    if args.tolerance is not None:
        overrides["tolerance"] = args.tolerance
    if args.verify:
        overrides["verify"] = True
    if args.degrees:
        overrides["angle_unit"] = "degrees"
    if overrides:
        job = dataclasses.replace(job, **overrides)
    result = run(job, strict=args.strict_validate, normalize=args.normalize)
    text = result.to_jsonl()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        _write_plot(args.plot, job, args.normalize)
    return result.exit_code


def _write_plot(path, job, normalize):
    panels = []
    for q in job.points:
        q_angles = q.angles(job.angle_unit, normalize)
        q_vec = q.vector(job.angle_unit, normalize)
        for p in job.polygons:
            try:
                g = p.build(job.angle_unit, normalize)
            except ValidationError:
                continue
            curves = {}
            if "rotation" in job.methods:
                rot = rotation.rotation_to_north(q_angles)
                curves["rotation"] = rotation.project(g, rot)[:, :2]
            if "shearing" in job.methods:
                curves["shearing"] = shearing.shear_project(g, q_vec)
            panels.append((f"{p.id} / {q.id}", curves))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(svg.render(panels))


def fixtures_table() -> tuple[str, bool]:
    """Expected-vs-actual table for the reference cases, and whether all matched."""
    header = f"{'case':<18} {'method':<12} {'expected':<26} {'actual':<26} ok"
    lines = [header, "-" * len(header)]
    all_ok = True
    for fx in FIXTURES:
        g = fx.polygon
        runs = {
            "rotation": lambda: rotation.classify(g, fx.point_angles),
            "shearing": lambda: shearing.classify(g, fx.point_angles),
            "oracle": lambda: oracle.classify_by_subdivision(g, fx.point_angles),
        }
        for method, fn in runs.items():
            try:
                actual = fn()
                ok = actual == fx.expected
                shown = str(actual)
            except SpipError as exc:
                ok, shown = False, f"error: {exc}"
            all_ok &= ok
            lines.append(f"{fx.name:<18} {method:<12} {str(fx.expected):<26} {shown:<26} "
                         f"{'yes' if ok else 'NO'}")
    return "\n".join(lines) + "\n", all_ok


def _cmd_fixtures(args) -> int:
    table, ok = fixtures_table()
    sys.stdout.write(table)
    return EXIT_OK if ok else EXIT_DISAGREEMENT


def _cmd_validate(args) -> int:
    job = parse_input(args.input, normalize=args.normalize, geometry=False)
    code = EXIT_OK
    for p in job.polygons:
        try:
            vertices = p.build(job.angle_unit, normalize=args.normalize).vertices
        except ValidationError:
            # report on the raw coordinates
            vertices = p.coords if p.form == "xyz" else None
        if vertices is None:
            report = {"id": p.id, "is_unit": False, "edges_ok": False, "is_bae": False,
                      "is_hc": False, "hc_witness": None, "failing_edge_pairs": [],
                      "reasons": ["angles do not describe a valid polygon"]}
        else:
            r = validate(vertices, tol=job.tolerance)
            report = {"id": p.id, "is_unit": r.is_unit, "edges_ok": r.edges_ok,
                      "is_bae": r.is_bae, "is_hc": r.is_hc,
                      "hc_witness": list(r.hc_witness) if r.hc_witness else None,
                      "failing_edge_pairs": [list(t) for t in r.failing_edge_pairs],
                      "reasons": r.reasons}
        if not (report["edges_ok"] and report["is_bae"]):
            code = EXIT_VALIDATION
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spip", description="Spherical point-in-polygon for BAE polygons.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify every point against every polygon")
    c.add_argument("--input", required=True)
    c.add_argument("--method", choices=("rotation", "shearing", "both"))
    c.add_argument("--verify", action="store_true", help="re-check each result against the oracle")
    c.add_argument("--tolerance", type=float)
    c.add_argument("--degrees", action="store_true", help="angles in the input are in degrees")
    c.add_argument("--strict-validate", action="store_true")
    c.add_argument("--normalize", action="store_true", help="rescale Cartesian input to unit length")
    c.add_argument("--plot", metavar="SVG", help="write the projected polygons to an SVG file")
    c.add_argument("--output", "-o", help="write results here instead of stdout")
    c.set_defaults(func=_cmd_classify)

    f = sub.add_parser("fixtures", help="run the three reference cases")
    f.set_defaults(func=_cmd_fixtures)

    v = sub.add_parser("validate", help="BAE / hemisphere / side checks only")
    v.add_argument("--input", required=True)
    v.add_argument("--normalize", action="store_true")
    v.set_defaults(func=_cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
