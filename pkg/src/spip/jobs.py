"""Batch jobs: JSON-lines input, classification of every (point, polygon) pair, results.

Input document, one JSON object per line, each tagged by ``"record"``::

    {"record": "job", "method": "both", "tolerance": 1e-12, "verify": false, "angle_unit": "radians"}
    {"record": "polygon", "id": "octant", "angles": [[1.5707963267948966, 0], [3.141592653589793, 0], ...]}
    {"record": "polygon", "id": "cap", "xyz": [[0, 0, 1], ...]}
    {"record": "point", "id": "north", "angles": [0, 0]}
    {"record": "point", "id": "q2", "xyz": [1, 0, 0]}

The ``job`` line is optional and may appear at most once. Angles are
``[theta, phi]`` (polar, azimuth) in the job's ``angle_unit``. Blank lines
are ignored.

Output document, one line per (point, polygon, method), in point order,
then polygon order, then method order (rotation before shearing)::

    {"edge_index": null, "method": "rotation", "outcome": "interior", "point_id": "q",
     "polygon_id": "p", "antipode_on_boundary": false, "validation": {...}, "verified": null, "wn": 2}
"""
from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import oracle, rotation, shearing
from .planar import PLANAR_TOL
from .sphere import (
    DegenerateError,
    SphericalAngles,
    SphericalClassification,
    SphericalPolygon,
    SpipError,
    UnitVector3,
    ValidationError,
    from_angles,
    to_angles,
    validate,
)

log = logging.getLogger(__name__)

METHODS = ("rotation", "shearing", "both")
ANGLE_UNITS = ("radians", "degrees")

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INPUT_ERROR = 2
EXIT_VALIDATION = 3


class InputError(SpipError):
    """Malformed job document."""


@dataclass(frozen=True)
class PolygonInput:
    id: str
    form: str  # "angles" or "xyz"
    coords: tuple

    def build(self, angle_unit: str = "radians", normalize: bool = False) -> SphericalPolygon:
        if self.form == "xyz":
            return SphericalPolygon(self.coords, normalize=normalize)
        rows = [list(from_angles(_angles(c, angle_unit))) for c in self.coords]
        return SphericalPolygon(rows)


@dataclass(frozen=True)
class PointInput:
    id: str
    form: str
    coords: tuple

    def angles(self, angle_unit: str = "radians", normalize: bool = False) -> SphericalAngles:
        if self.form == "angles":
            return _angles(self.coords, angle_unit)
        return to_angles(self.vector(angle_unit, normalize))

    def vector(self, angle_unit: str = "radians", normalize: bool = False) -> UnitVector3:
        if self.form == "angles":
            return from_angles(_angles(self.coords, angle_unit))
        return UnitVector3.from_array(self.coords, normalize=normalize)


def _angles(pair, unit: str) -> SphericalAngles:
    theta, phi = pair
    if unit == "degrees":
        theta, phi = math.radians(theta), math.radians(phi)
        # 180 degrees may round a hair past pi
        if math.pi < theta <= math.pi * (1 + 1e-15):
            theta = math.pi
    return SphericalAngles(theta, phi)


@dataclass(frozen=True)
class JobSpec:
    polygons: tuple = ()
    points: tuple = ()
    method: str = "both"
    tolerance: float = PLANAR_TOL
    verify: bool = False
    angle_unit: str = "radians"

    def __post_init__(self):
        if self.method not in METHODS:
            raise InputError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.angle_unit not in ANGLE_UNITS:
            raise InputError(f"unknown angle_unit {self.angle_unit!r}")
        if not (isinstance(self.tolerance, (int, float)) and math.isfinite(self.tolerance)
                and self.tolerance > 0):
            raise InputError(f"tolerance must be a positive number, got {self.tolerance!r}")
        for kind, items in (("polygon", self.polygons), ("point", self.points)):
            seen = set()
            for item in items:
                if item.id in seen:
                    raise InputError(f"duplicate {kind} id {item.id!r}")
                seen.add(item.id)

    @property
    def methods(self) -> tuple[str, ...]:
        return ("rotation", "shearing") if self.method == "both" else (self.method,)


@dataclass(frozen=True)
class ResultRecord:
    polygon_id: str
    point_id: str
    method: str
    outcome: Optional[str]
    wn: Optional[int]
    edge_index: Optional[int]
    antipode_on_boundary: bool = False
    validation: dict = field(default_factory=lambda: {"status": "pass", "reasons": []})
    verified: Optional[bool] = None

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)

    @classmethod
    def from_classification(cls, polygon_id, point_id, method, c: SphericalClassification, **kw):
        return cls(
            polygon_id, point_id, method, c.location.value,
            c.wn if c.wn_defined else None,
            c.edge_index,
            c.antipode_edge is not None,
            **kw,
        )


# -- parsing -------------------------------------------------------------------

_JOB_KEYS = {"record", "method", "tolerance", "verify", "angle_unit"}
_ITEM_KEYS = {"record", "id", "angles", "xyz"}


def _reject_constant(name):
    raise InputError(f"non-finite number {name} in input")


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{where}: expected a number, got {x!r}")
    return float(x)


def _coords(item: dict, where: str, polygon: bool):
    forms = [k for k in ("angles", "xyz") if k in item]
    if len(forms) != 1:
        raise InputError(f"{where}: give exactly one of 'angles' or 'xyz'")
    form = forms[0]
    width = 2 if form == "angles" else 3
    raw = item[form]
    rows = raw if polygon else [raw]
    if not isinstance(rows, list) or (polygon and len(rows) < 3):
        raise InputError(f"{where}: '{form}' must list at least 3 vertices" if polygon
                         else f"{where}: bad '{form}' value")
    out = []
    for k, row in enumerate(rows, 1):
        label = f"{where} vertex {k}" if polygon else where
        if not isinstance(row, list) or len(row) != width:
            raise InputError(f"{label}: expected {width} numbers, got {row!r}")
        out.append(tuple(_number(x, label) for x in row))
    return form, tuple(out) if polygon else out[0]


def parse_lines(lines: Iterable[str], source: str = "<input>") -> JobSpec:
    job: dict = {}
    seen_job = False
    polygons, points = [], []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        where = f"{source}:{lineno}"
        try:
            obj = json.loads(line, parse_constant=_reject_constant)
        except json.JSONDecodeError as exc:
            raise InputError(f"{where}: invalid JSON ({exc.msg})") from None
        if not isinstance(obj, dict) or "record" not in obj:
            raise InputError(f"{where}: expected an object with a 'record' field")
        kind = obj["record"]
        if kind == "job":
            if seen_job:
                raise InputError(f"{where}: more than one job record")
            seen_job = True
            unknown = set(obj) - _JOB_KEYS
            if unknown:
                raise InputError(f"{where}: unknown job fields {sorted(unknown)}")
            job = {k: v for k, v in obj.items() if k != "record"}
        elif kind in ("polygon", "point"):
            unknown = set(obj) - _ITEM_KEYS
            if unknown:
                raise InputError(f"{where}: unknown {kind} fields {sorted(unknown)}")
            if not isinstance(obj.get("id"), str):
                raise InputError(f"{where}: {kind} needs a string 'id'")
            form, coords = _coords(obj, f"{where} {kind} {obj['id']!r}", kind == "polygon")
            cls = PolygonInput if kind == "polygon" else PointInput
            (polygons if kind == "polygon" else points).append(cls(obj["id"], form, coords))
        else:
            raise InputError(f"{where}: unknown record type {kind!r}")
    if "verify" in job and not isinstance(job["verify"], bool):
        raise InputError("job 'verify' must be true or false")
    if "tolerance" in job:
        job["tolerance"] = _number(job["tolerance"], "job tolerance")
    return JobSpec(tuple(polygons), tuple(points), **job)


def check_geometry(job: JobSpec, normalize: bool = False) -> None:
    """Raise :class:`InputError` naming the first polygon or point that is not on the sphere."""
    for p in job.polygons:
        try:
            p.build(job.angle_unit, normalize)
        except ValidationError as exc:
            raise InputError(f"polygon {p.id!r}: {exc}") from None
    for q in job.points:
        try:
            q.vector(job.angle_unit, normalize)
        except ValidationError as exc:
            raise InputError(f"point {q.id!r}: {exc}") from None


def parse_input(path, normalize: bool = False, geometry: bool = True) -> JobSpec:
    """Read a job document. With ``geometry`` set, also reject off-sphere or degenerate input."""
    try:
        with open(path, encoding="utf-8") as fh:
            job = parse_lines(fh, str(path))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if geometry:
        check_geometry(job, normalize)
    return job


def emit_job(job: JobSpec) -> str:
    """Serialize ``job`` so that :func:`parse_lines` reads it back unchanged."""
    head = {"record": "job", "method": job.method, "tolerance": job.tolerance,
            "verify": job.verify, "angle_unit": job.angle_unit}
    lines = [json.dumps(head, sort_keys=True)]
    for p in job.polygons:
        lines.append(json.dumps({"record": "polygon", "id": p.id,
                                 p.form: [list(c) for c in p.coords]}, sort_keys=True))
    for q in job.points:
        lines.append(json.dumps({"record": "point", "id": q.id, q.form: list(q.coords)},
                                sort_keys=True))
    return "\n".join(lines) + "\n"


# -- running -------------------------------------------------------------------

@dataclass
class RunResult:
    records: list
    exit_code: int
    disagreements: list = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(r.to_json() + "\n" for r in self.records)


def _classify(method, g, q_angles, q_vec, tol, rot, plan):
    if method == "rotation":
        return rotation.classify(g, q_angles, tol, rotation=rot)
    return shearing.classify(g, q_vec, tol, plan=plan)


def run(job: JobSpec, strict: bool = False, normalize: bool = False) -> RunResult:
    """Classify every point against every polygon with the requested method(s).

    Each polygon is validated once (BAE and hemisphere checks). A failing
    polygon yields records with ``validation.status == "fail"``; in strict
    mode those records carry no outcome and the exit code is 3. Outside
    strict mode classification is still attempted and exit code 3 is only
    used when every polygon fails. Rotation matrices and shear plans are
    computed once per point and shared by all polygons.
    """
    built = []
    n_failed = 0
    for p in job.polygons:
        try:
            g = p.build(job.angle_unit, normalize)
        except ValidationError as exc:
            built.append((p.id, None, {"status": "fail", "reasons": [str(exc)]}))
            n_failed += 1
            continue
        report = validate(g, tol=job.tolerance)
        status = "pass" if report.ok else "fail"
        n_failed += status == "fail"
        built.append((p.id, g, {"status": status, "reasons": list(report.reasons)}))

    records, disagreements = [], []
    for q in job.points:
        q_angles = q.angles(job.angle_unit, normalize)
        q_vec = q.vector(job.angle_unit, normalize)
        rot = rotation.rotation_to_north(q_angles) if "rotation" in job.methods else None
        plan = shearing.plan_shear(q_vec) if "shearing" in job.methods else None
        for pid, g, validation in built:
            skip = g is None or (strict and validation["status"] == "fail")
            reference = None
            if job.verify and not skip:
                try:
                    reference = oracle.classify_by_subdivision(g, q_vec)
                except SpipError as exc:
                    log.warning("oracle failed for %s/%s: %s", q.id, pid, exc)
            outcomes = {}
            for method in job.methods:
                if skip:
                    records.append(ResultRecord(pid, q.id, method, None, None, None,
                                                validation=validation))
                    continue
                try:
                    c = _classify(method, g, q_angles, q_vec, job.tolerance, rot, plan)
                except DegenerateError as exc:
                    reasons = validation["reasons"] + [str(exc)]
                    records.append(ResultRecord(pid, q.id, method, None, None, None,
                                                validation={"status": "fail", "reasons": reasons}))
                    continue
                outcomes[method] = c
                verified = None
                if job.verify:
                    verified = reference is not None and reference == c
                    if not verified:
                        disagreements.append((q.id, pid, method, str(c), str(reference)))
                records.append(ResultRecord.from_classification(
                    pid, q.id, method, c, validation=validation, verified=verified))
            if len(outcomes) == 2 and outcomes["rotation"] != outcomes["shearing"]:
                disagreements.append((q.id, pid, "rotation/shearing",
                                      str(outcomes["rotation"]), str(outcomes["shearing"])))

    for d in disagreements:
        log.warning("disagreement for point %s, polygon %s (%s): %s vs %s", *d)
    if disagreements:
        code = EXIT_DISAGREEMENT
    elif n_failed and (strict or n_failed == len(built)):
        code = EXIT_VALIDATION
    else:
        code = EXIT_OK
    return RunResult(records, code, disagreements)
