"""Command-line front end and JSON input/output.

Documents all carry the schema tag "g2desc/1"; rationals are strings "n" or
"n/d", polynomial and algebra-element coefficient lists ascend in degree, and
P^1 points are "inf", "n", or "n/d".  A curve document holds the sextic model
and its provenance (label, minimal equation, transform) and may embed a list
of twists with their known points, expected duplication-map images, ELS
columns, and the pulled-back x-coordinate set; the three bundled fixtures are
exactly such documents.  Twist and point documents are small wrappers
({"kind": "twist", "delta": [...]}, {"kind": "points", "points": [[...]]}).

Subcommands: model (Kummer-surface data), dup (duplication-map values),
genus1 (the quotient curve over B), phi (images on it), locsolve (the ELS
report), pack (the elliptic-Chabauty data for a twist family), verify (replay
every bundled fixture computation).  Exit codes: 0 = document produced (for
verify: all checks passed), 1 = verify found mismatches, 2 = bad input.
"""

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from sympy import primerange

from . import fixtures as fixture_data
from .exact import FpElem, UniPoly, eval_hom, rat_from_str, rat_to_str, reduce_mod_p
from .kummer import (
    InvariantViolation,
    SexticCurve,
    Twist,
    companion_R,
    form_C,
    hankel_T,
    kummer_model,
    qform,
    quadric_Q,
)
from .descent import (
    CoordTransform,
    P1Point,
    ProjPoint4,
    ZeroPoint,
    complete_square,
    dup_map,
    fiber_system,
    genus1_model,
    genus5_model,
    is_on_curve,
    lift_point,
    on_genus1_curve,
    phi_map,
    pullback_x,
)
from .locsolve import BadReduction, ReducedModel, eliminated_system, els_report, prime_list
from .scan import active_kernel, scan_p4

SCHEMA = "g2desc/1"

# The public operation surface of every module, keyed by module name; the
# test harness asserts that run_fixtures exercises each of these at least once.
PUBLIC_OPS = {
    "exact": ("poly_div_exact", "alg_mul", "alg_is_unit", "eval_hom",
              "resultant_monic", "discriminant", "reduce_mod_p"),
    "kummer": ("companion_R", "hankel_T", "quadric_Q", "form_C", "kummer_model"),
    "descent": ("genus5_model", "lift_point", "is_on_curve", "dup_map",
                "quartic_Y", "genus1_model", "phi_map", "fiber_system",
                "complete_square", "pullback_x"),
    "locsolve": ("prime_list", "count_points_fp", "solvable_at_p", "els_report"),
    "cli": ("parse_inputs", "run_fixtures", "emit_chabauty_pack"),
}


class MalformedInput(ValueError):
    """An input file is missing, unreadable, or structurally wrong."""


# ---------------------------------------------------------------------------
# domain records


class CurveRecord:
    """A labeled sextic model with its provenance.  If the minimal equation
    (q, r) is present, complete_square(q, r) must reproduce the sextic and
    the transform (checked here)."""

    __slots__ = ("label", "curve", "transform", "minimal_eq")

    def __init__(self, label, curve, transform=None, minimal_eq=None):
        self.label = str(label)
        self.curve = curve
        self.transform = transform
        self.minimal_eq = minimal_eq
        if minimal_eq is not None:
            q, r = minimal_eq
            f, tr = complete_square(q, r)
            if f != curve.f:
                raise InvariantViolation(
                    "minimal_eq: complete_square(q, r) does not reproduce the sextic")
            if transform is None:
                self.transform = tr
            elif tr != transform:
                raise InvariantViolation(
                    "minimal_eq: complete_square(q, r) does not reproduce the transform")

    @property
    def sextic(self):
        return self.curve.f

    @property
    def alpha(self):
        return self.curve.alpha

    def __eq__(self, other):
        return (isinstance(other, CurveRecord)
                and self.label == other.label
                and self.curve.f == other.curve.f
                and self.curve.alpha == other.curve.alpha
                and self.transform == other.transform
                and self.minimal_eq == other.minimal_eq)

    def __repr__(self):
        return f"CurveRecord({self.label!r}, alpha={self.curve.alpha})"


class FixtureTwist:
    """One twist of a fixture: the verbatim delta vector, the ELS column, the
    known points with their expected duplication-map images, and provenance."""

    __slots__ = ("name", "delta", "els", "points", "pi", "provenance")

    def __init__(self, name, delta, els, points, pi, provenance=None):
        if len(points) != len(pi):
            raise InvariantViolation(
                "fixture twist: points and pi lists must have equal length")
        self.name = str(name)
        self.delta = tuple(Fraction(c) for c in delta)
        self.els = str(els)
        self.points = tuple(points)
        self.pi = tuple(pi)
        self.provenance = dict(provenance or {})


class FixtureSet:
    """A curve record together with its twists and the expected x-coordinate
    set on the minimal model."""

    __slots__ = ("record", "twists", "x_set", "provenance")

    def __init__(self, record, twists, x_set, provenance=None):
        self.record = record
        self.twists = tuple(twists)
        self.x_set = tuple(x_set)
        self.provenance = dict(provenance or {})


# ---------------------------------------------------------------------------
# parsing


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path}: not valid JSON: {exc}") from exc


def _need(doc, key, origin):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"{origin}: missing required key {key!r}")
    return doc[key]


def _check_schema(doc, kind, origin):
    if not isinstance(doc, dict):
        raise MalformedInput(f"{origin}: document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise MalformedInput(f"{origin}: expected schema {SCHEMA!r}, got {doc.get('schema')!r}")
    if doc.get("kind", kind) != kind:
        raise MalformedInput(f"{origin}: expected kind {kind!r}, got {doc.get('kind')!r}")


def _rat(value, origin):
    try:
        return rat_from_str(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"{origin}: not a rational: {value!r}") from exc


def _rat_list(values, n, origin):
    if not isinstance(values, (list, tuple)) or (n is not None and len(values) != n):
        raise MalformedInput(f"{origin}: expected a list of {n} rationals")
    return tuple(_rat(v, origin) for v in values)


def _parse_point(values, origin):
    coords = _rat_list(values, 5, origin)
    try:
        return ProjPoint4(coords)
    except ZeroPoint as exc:
        raise InvariantViolation(f"{origin}: {exc}") from exc


def _parse_p1(value, origin):
    try:
        return P1Point.from_str(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"{origin}: not a P^1 point: {value!r}") from exc


def _parse_curve_doc(doc, origin):
    _check_schema(doc, "curve", origin)
    sextic = _rat_list(_need(doc, "sextic", origin), 7, f"{origin}: sextic")
    alpha = _rat(_need(doc, "alpha", origin), f"{origin}: alpha")
    curve = SexticCurve(UniPoly(sextic), alpha)
    transform = None
    if "transform" in doc:
        tdoc = doc["transform"]
        swap = _need(tdoc, "swap", f"{origin}: transform")
        if not isinstance(swap, bool):
            raise MalformedInput(f"{origin}: transform swap must be a boolean")
        transform = CoordTransform(swap, _rat_list(_need(tdoc, "q", f"{origin}: transform"),
                                                   4, f"{origin}: transform q"))
    minimal_eq = None
    if "minimal_eq" in doc:
        mdoc = doc["minimal_eq"]
        minimal_eq = (_rat_list(_need(mdoc, "q", f"{origin}: minimal_eq"), 4,
                                f"{origin}: minimal_eq q"),
                      _rat_list(_need(mdoc, "r", f"{origin}: minimal_eq"), 7,
                                f"{origin}: minimal_eq r"))
    record = CurveRecord(doc.get("label", ""), curve, transform, minimal_eq)
    twists = []
    for i, twdoc in enumerate(doc.get("twists", [])):
        where = f"{origin}: twists[{i}]"
        delta = _rat_list(_need(twdoc, "delta", where), 6, f"{where}: delta")
        Twist(curve, delta)  # enforce the unit invariant at parse time
        points = []
        pis = []
        for j, pdoc in enumerate(twdoc.get("points", [])):
            pwhere = f"{where}: points[{j}]"
            points.append(_parse_point(_need(pdoc, "v", pwhere), pwhere))
            pis.append(_parse_p1(_need(pdoc, "pi", pwhere), pwhere))
        twists.append(FixtureTwist(twdoc.get("name", f"delta_{i + 1}"), delta,
                                   twdoc.get("els", ""), points, pis,
                                   twdoc.get("provenance")))
    x_set = tuple(_parse_p1(s, f"{origin}: x_set") for s in doc.get("x_set", []))
    return FixtureSet(record, twists, x_set, doc.get("provenance"))


def load_fixture_set(path):
    """Parse a curve document (with any embedded twists) into a FixtureSet."""
    return _parse_curve_doc(_load_json(path), str(path))


def load_fixture(label):
    """The bundled FixtureSet for a curve label."""
    return _parse_curve_doc(json.loads(fixture_data.fixture_text(label)),
                            f"fixture {label}")


def parse_inputs(curve, twist=None, points=None, twist_index=None):
    """Parse and validate input files into domain objects.

    curve is the path of a curve document; twist (a twist document path) and
    twist_index (1-based index into the curve document's embedded twists) are
    mutually exclusive.  points is the path of a points document.  Returns
    (CurveRecord, Twist or None, tuple of ProjPoint4 or None); when the twist
    comes from an embedded fixture entry with points and no points file is
    given, those fixture points are returned.  All domain invariants are
    enforced here (MalformedInput for structural problems, InvariantViolation
    with the violated invariant named for domain problems).
    """
    fs = load_fixture_set(curve)
    if twist is not None and twist_index is not None:
        raise MalformedInput("give either a twist file or a twist index, not both")
    tw = None
    pts = None
    if twist is not None:
        doc = _load_json(twist)
        _check_schema(doc, "twist", str(twist))
        delta = _rat_list(_need(doc, "delta", str(twist)), 6, f"{twist}: delta")
        tw = Twist(fs.record.curve, delta)
    elif twist_index is not None:
        if not 1 <= twist_index <= len(fs.twists):
            raise MalformedInput(
                f"{curve}: twist index {twist_index} out of range 1..{len(fs.twists)}")
        entry = fs.twists[twist_index - 1]
        tw = Twist(fs.record.curve, entry.delta)
        pts = entry.points
    if points is not None:
        doc = _load_json(points)
        _check_schema(doc, "points", str(points))
        raw = _need(doc, "points", str(points))
        pts = tuple(_parse_point(v, f"{points}: points[{i}]") for i, v in enumerate(raw))
    return fs.record, tw, pts


# ---------------------------------------------------------------------------
# serialization


def _poly_doc(poly):
    return [rat_to_str(c) for c in poly.coeffs]


def _alg_doc(elem):
    return [rat_to_str(c) for c in elem.coeffs]


def _mat_doc(mat):
    return [[rat_to_str(x) for x in row] for row in mat]


def _point_doc(point):
    return [rat_to_str(c) for c in point.v]


def record_doc(record):
    """The curve document of a CurveRecord (without twists)."""
    doc = {"schema": SCHEMA, "kind": "curve", "label": record.label}
    if record.minimal_eq is not None:
        q, r = record.minimal_eq
        doc["minimal_eq"] = {"q": [rat_to_str(c) for c in q],
                             "r": [rat_to_str(c) for c in r]}
    doc["sextic"] = _poly_doc(record.curve.f)
    doc["alpha"] = rat_to_str(record.curve.alpha)
    if record.transform is not None:
        doc["transform"] = {"swap": record.transform.swap,
                            "q": [rat_to_str(c) for c in record.transform.q]}
    return doc


def _witness_doc(witness):
    if witness is None:
        return None
    return {"chart": witness["chart"], "coords": list(witness["coords"]),
            "precision": witness["precision"],
            "minor_valuation": witness["minor_valuation"]}


def els_report_doc(report):
    """The JSON document of an ElsReport."""
    return {
        "schema": SCHEMA,
        "kind": "els_report",
        "curve": report.curve_id,
        "delta": [rat_to_str(c) for c in report.twist],
        "overall": report.overall,
        "unresolved": list(report.unresolved),
        "real_place_checked": report.real_place_checked,
        "verdicts": [
            {"prime": v.prime, "status": v.status.lower(), "depth": v.depth,
             "witness": _witness_doc(v.witness)}
            for v in report.verdicts
        ],
    }


def emit_chabauty_pack(curve, twists, label=None):
    """The elliptic-Chabauty data of a twist family as one JSON document: the
    shared etale-algebra data (the modulus g of B, the quartic H, h(alpha)),
    which downstream class-group work needs only once per family, then one
    section per twist with delta, Y(delta), and the two quadrics whose ratio
    is the duplication map."""
    if isinstance(curve, CurveRecord):
        label = label if label is not None else curve.label
        curve = curve.curve
    shared = genus1_model(curve, Twist(curve, (1, 0, 0, 0, 0, 0)))
    f = curve.f
    doc = {
        "schema": SCHEMA,
        "kind": "chabauty_pack",
        "label": label or "",
        "sextic": _poly_doc(f),
        "alpha": rat_to_str(curve.alpha),
        "B": {"g": _poly_doc(shared.B.modulus)},
        "H": [_alg_doc(c) for c in shared.H],
        "h_alpha": _alg_doc(shared.h_alpha),
        "weighted_equation": "Y(delta) s^2 = h(alpha) H(u, v) in P(1, 2, 1) over B",
        "twists": [],
    }
    f5, f6, alpha = f.coeff(5), f.coeff(6), curve.alpha
    for entry in twists:
        twist = entry if isinstance(entry, Twist) else Twist(curve, entry)
        model = genus5_model(curve, twist)
        g1 = genus1_model(curve, twist)
        num = [[-(f5 + f6 * alpha) * model.Q[3][i][j] - f6 * model.Q[4][i][j]
                for j in range(6)] for i in range(6)]
        den = [[f6 * model.Q[3][i][j] for j in range(6)] for i in range(6)]
        doc["twists"].append({
            "delta": _alg_doc(twist.delta),
            "Ydelta": _alg_doc(g1.Ydelta),
            "dup_map": {"num": _mat_doc(num), "den": _mat_doc(den)},
        })
    return doc


# ---------------------------------------------------------------------------
# fixture replay


def _kummer_checks(label, fs, check):
    """Exact structural identities of the Kummer layer at fixture data: the
    companion and Hankel matrices, gamma_i = g_i(alpha), the relation
    f6 C_j = sum_i Q_i T[i][j] at a lifted fixture point, the vanishing of
    C_3, C_4, C_5 there, and delta xi^2 = c (X - alpha)(den X - num)."""
    curve = fs.record.curve
    f, alpha = curve.f, fs.record.curve.alpha
    R = companion_R(curve)
    T = hankel_T(curve)
    ok_R = (all(R[i][5] == -f.coeff(i) / f.coeff(6) for i in range(6))
            and all(R[i + 1][i] == 1 for i in range(5))
            and all(R[i][j] == 0 for i in range(6) for j in range(5) if i != j + 1))
    check(label, None, "companion matrix", ok_R)
    ok_T = all(T[i][j] == (f.coeff(i + j + 1) if i + j + 1 <= 6 else 0)
               for i in range(6) for j in range(6))
    check(label, None, "hankel matrix", ok_T)

    entry = next(t for t in fs.twists if t.points)
    twist = Twist(curve, entry.delta)
    model = genus5_model(curve, twist)
    check(label, None, "model ties to kummer_model",
          model.Q == kummer_model(curve, twist).Q)
    check(label, entry.name, "quadric_Q agrees with the model",
          quadric_Q(curve, twist, 2) == model.Q[2])
    check(label, None, "gamma_i = g_i(alpha)",
          all(model.gamma[i - 1] == eval_hom(curve.g_basis_poly(i), alpha)
              for i in range(1, 7)))

    point = entry.points[0]
    xi = lift_point(model, point)
    v6 = -sum(g * c for g, c in zip(model.gamma[:5], point.v)) / model.gamma[5]
    six = point.v + (v6,)
    Qs = [qform(model.Q[j], six) for j in range(6)]
    Cs = [form_C(curve, twist, j, xi) for j in range(6)]
    f6 = f.coeff(6)
    check(label, entry.name, "Q-C-T relation",
          all(f6 * Cs[j] == sum(Qs[i] * T[i][j] for i in range(6)) for j in range(6)))
    check(label, entry.name, "C_3 = C_4 = C_5 = 0 on the surface",
          Cs[3] == 0 and Cs[4] == 0 and Cs[5] == 0)

    value = dup_map(model, point)
    X = curve.L.gen()
    target = (X - alpha) * (Fraction(value.den) * X - Fraction(value.num))
    w = twist.delta * xi * xi
    k = next(i for i, c in enumerate(target.coeffs) if c != 0)
    scale = w.coeffs[k] / target.coeffs[k]
    check(label, entry.name, "pipeline identity delta xi^2 = c (X - alpha)(X - r)",
          scale != 0 and w == target * scale)


def _fiber_check(label, fs, check):
    """At the first good odd prime where g has a root omega, the fiber section
    over omega has at most 8 points over F_p."""
    curve = fs.record.curve
    twist = Twist(curve, fs.twists[0].delta)
    model = genus5_model(curve, twist)
    for p in primerange(3, 98):
        try:
            ReducedModel.from_model(model, p)
        except BadReduction:
            continue
        f_p = reduce_mod_p(curve.f, p)
        alpha_p = reduce_mod_p(curve.alpha, p)
        omega = next((FpElem(t, p) for t in range(p)
                      if eval_hom(f_p, FpElem(t, p)) == 0 and FpElem(t, p) != alpha_p),
                     None)
        if omega is None:
            continue
        system = fiber_system(model, omega)
        quads, lins = eliminated_system(system.quadrics, system.linears[0],
                                        system.linears[1:])
        n = scan_p4(p, quads, lins, mode="count")
        check(label, None, "fiber section has <= 8 points",
              n <= 8, f"p={p}, omega={omega.value}, n={n}")
        return
    check(label, None, "fiber section has <= 8 points", False,
          "no good prime <= 97 with a root of g")


def run_fixtures(els_primes=None, threads=1, max_depth=20):
    """Replay every bundled computation: fixture parsing and round-trip,
    membership of every point, every duplication-map value, every
    phi-image-on-D check and the commuting triangle, every ELS verdict, the
    x-coordinate sets after pullback, and the structural spot-checks.

    els_primes restricts the ELS reports to those primes (None = each curve's
    full prime_list; the fixture ELS expectations themselves only need 2).
    Returns (ok, report_dict).
    """
    checks = []

    def check(curve_label, twist_name, name, ok, detail=""):
        checks.append({"curve": curve_label, "twist": twist_name, "check": name,
                       "ok": bool(ok), "detail": str(detail)})

    for label in fixture_data.LABELS:
        fs = load_fixture(label)
        record = fs.record
        curve = record.curve

        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "curve.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(record_doc(record), fh)
            record2, _, _ = parse_inputs(path)
        check(label, None, "record round-trip", record2 == record)

        _kummer_checks(label, fs, check)
        _fiber_check(label, fs, check)

        primes = prime_list(curve)
        check(label, None, "prime list",
              primes[0] == 2 and list(primes) == sorted(set(primes))
              and all(q in primes for q in primerange(2, 98)),
              f"{len(primes)} primes, largest {primes[-1]}")

        xs = []
        for entry in fs.twists:
            twist = Twist(curve, entry.delta)
            model = genus5_model(curve, twist)
            g1 = genus1_model(curve, twist)
            for point, expected in zip(entry.points, entry.pi):
                check(label, entry.name, "membership", is_on_curve(model, point),
                      str(point))
                value = dup_map(model, point)
                check(label, entry.name, "pi value", value == expected,
                      f"{value.to_str()} (expected {expected.to_str()})")
                image = phi_map(model, g1, point)
                check(label, entry.name, "phi image on D", on_genus1_curve(g1, image))
                check(label, entry.name, "commuting triangle",
                      P1Point.from_pair(image.u, image.v) == value)
                xs.append(pullback_x(record.transform, value))
            report = els_report(curve, entry.delta, max_depth=max_depth,
                                primes=els_primes, threads=threads, curve_id=label)
            expect_no = entry.els.startswith("no")
            check(label, entry.name, "els overall",
                  report.overall == (not expect_no),
                  f"column {entry.els!r} -> overall {report.overall}")
            if expect_no:
                bad_p = int(entry.els.split("(")[1].rstrip(")").strip())
                if any(v.prime == bad_p for v in report.verdicts):
                    check(label, entry.name, "els failing prime",
                          bad_p in report.failing_primes(),
                          f"expected Empty at {bad_p}")

        seen = []
        for x in xs:
            if x not in seen:
                seen.append(x)
        check(label, None, "x-coordinate set",
              set(seen) == set(fs.x_set),
              "{" + ", ".join(x.to_str() for x in seen) + "}")

        pack = emit_chabauty_pack(record, [t.delta for t in fs.twists])
        check(label, None, "chabauty pack shape",
              len(pack["twists"]) == len(fs.twists) and len(pack["B"]["g"]) == 6
              and pack["schema"] == SCHEMA)

    n_failed = sum(1 for c in checks if not c["ok"])
    report = {"schema": SCHEMA, "kind": "fixture_report", "ok": n_failed == 0,
              "kernel": active_kernel(), "n_checks": len(checks),
              "n_failed": n_failed, "checks": checks}
    return n_failed == 0, report


# ---------------------------------------------------------------------------
# subcommands


def _write_json(doc, path):
    text = json.dumps(doc, indent=2) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _twist_args(args, record, required=True):
    _, twist, points = parse_inputs(args.curve, args.twist, getattr(args, "points", None),
                                    args.twist_index)
    if twist is None:
        if required:
            twist = Twist(record.curve, (1, 0, 0, 0, 0, 0))
        else:
            return None, points
    return twist, points


def _cmd_model(args, threads):
    record, _, _ = parse_inputs(args.curve)
    twist, _ = _twist_args(args, record)
    curve = record.curve
    model = genus5_model(curve, twist)
    return {
        "schema": SCHEMA,
        "kind": "kummer_model",
        "label": record.label,
        "sextic": _poly_doc(curve.f),
        "alpha": rat_to_str(curve.alpha),
        "delta": _alg_doc(twist.delta),
        "R": _mat_doc(companion_R(curve)),
        "T": _mat_doc(hankel_T(curve)),
        "quadrics": [_mat_doc(M) for M in model.Q],
        "gamma": [rat_to_str(c) for c in model.gamma],
    }, 0


def _points_or_fail(points, origin):
    if not points:
        raise MalformedInput(f"{origin}: no points given "
                             "(pass --points, or --twist-index of a fixture twist with points)")
    return points


def _cmd_dup(args, threads):
    record, _, _ = parse_inputs(args.curve)
    twist, points = _twist_args(args, record)
    points = _points_or_fail(points, args.curve)
    model = genus5_model(record.curve, twist)
    values = []
    for point in points:
        values.append({"point": _point_doc(point),
                       "pi": dup_map(model, point).to_str()})
    return {"schema": SCHEMA, "kind": "dup_values", "label": record.label,
            "delta": _alg_doc(twist.delta), "values": values}, 0


def _cmd_genus1(args, threads):
    record, _, _ = parse_inputs(args.curve)
    twist, _ = _twist_args(args, record)
    g1 = genus1_model(record.curve, twist)
    return {
        "schema": SCHEMA,
        "kind": "genus1_model",
        "label": record.label,
        "delta": _alg_doc(twist.delta),
        "B": {"g": _poly_doc(g1.B.modulus)},
        "H": [_alg_doc(c) for c in g1.H],
        "h_alpha": _alg_doc(g1.h_alpha),
        "Ydelta": _alg_doc(g1.Ydelta),
        "weighted_equation": "Y(delta) s^2 = h(alpha) H(u, v) in P(1, 2, 1) over B",
    }, 0


def _cmd_phi(args, threads):
    record, _, _ = parse_inputs(args.curve)
    twist, points = _twist_args(args, record)
    points = _points_or_fail(points, args.curve)
    model = genus5_model(record.curve, twist)
    g1 = genus1_model(record.curve, twist)
    values = []
    for point in points:
        image = phi_map(model, g1, point)
        values.append({
            "point": _point_doc(point),
            "u": rat_to_str(image.u),
            "s": _alg_doc(image.s),
            "v": rat_to_str(image.v),
            "on_curve": on_genus1_curve(g1, image),
        })
    return {"schema": SCHEMA, "kind": "phi_values", "label": record.label,
            "delta": _alg_doc(twist.delta), "values": values}, 0


def _cmd_locsolve(args, threads):
    record, _, _ = parse_inputs(args.curve)
    twist, _ = _twist_args(args, record)
    report = els_report(record.curve, twist.delta, max_depth=args.max_depth,
                        primes=args.primes, threads=threads,
                        curve_id=record.label or None)
    return els_report_doc(report), 0


def _cmd_pack(args, threads):
    fs = load_fixture_set(args.curve)
    if args.twists is not None:
        doc = _load_json(args.twists)
        _check_schema(doc, "twists", str(args.twists))
        raw = _need(doc, "twists", str(args.twists))
        deltas = [_rat_list(d, 6, f"{args.twists}: twists[{i}]") for i, d in enumerate(raw)]
    else:
        deltas = [t.delta for t in fs.twists]
    return emit_chabauty_pack(fs.record, deltas), 0


def _cmd_verify(args, threads):
    ok, report = run_fixtures(els_primes=args.primes, threads=threads,
                              max_depth=args.max_depth)
    return report, (0 if ok else 1)


def _parse_primes(text):
    try:
        primes = sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError as exc:
        raise MalformedInput(f"--primes: {text!r} is not a comma-separated integer list") from exc
    if not primes or any(p < 2 for p in primes):
        raise MalformedInput("--primes: need integers >= 2")
    return primes


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="g2desc",
        description="Two-cover descent data for genus-2 curves with a rational "
                    "Weierstrass point: Kummer-surface quadrics, the genus-5 "
                    "curve, the twisted duplication map, the genus-1 quotient, "
                    "and local solvability at the finite places.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, twist=False, points=False, primes=False, curve=True):
        if curve:
            sp.add_argument("--curve", required=True, metavar="PATH",
                            help="curve document (JSON)")
        if twist:
            sp.add_argument("--twist", metavar="PATH", help="twist document (JSON)")
            sp.add_argument("--twist-index", type=int, metavar="N",
                            help="1-based index into the curve document's twists")
        if points:
            sp.add_argument("--points", metavar="PATH", help="points document (JSON)")
        if primes:
            sp.add_argument("--primes", type=_parse_primes, default=None,
                            help="comma-separated primes to test (default: prime_list)")
        sp.add_argument("--json", metavar="PATH", default=None,
                        help="write the JSON document here (default stdout)")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $G2DESC_THREADS or 1)")
        sp.add_argument("--max-depth", type=int, default=20,
                        help="p-adic search depth limit (default 20)")

    common(sub.add_parser("model", help="Kummer-surface and genus-5 model data"),
           twist=True)
    common(sub.add_parser("dup", help="duplication-map values at points"),
           twist=True, points=True)
    common(sub.add_parser("genus1", help="the genus-1 quotient over B"), twist=True)
    common(sub.add_parser("phi", help="images on the genus-1 quotient"),
           twist=True, points=True)
    common(sub.add_parser("locsolve", help="local solvability report"),
           twist=True, primes=True)
    pack_p = sub.add_parser("pack", help="elliptic-Chabauty data for a twist family")
    pack_p.add_argument("--twists", metavar="PATH",
                        help="twists document (default: the curve document's twists)")
    common(pack_p)
    common(sub.add_parser("verify", help="replay every bundled fixture computation"),
           primes=True, curve=False)

    args = parser.parse_args(argv)
    handlers = {"model": _cmd_model, "dup": _cmd_dup, "genus1": _cmd_genus1,
                "phi": _cmd_phi, "locsolve": _cmd_locsolve, "pack": _cmd_pack,
                "verify": _cmd_verify}
    try:
        threads = args.threads if args.threads is not None else \
            int(os.environ.get("G2DESC_THREADS", "1"))
        doc, code = handlers[args.command](args, threads)
        _write_json(doc, args.json)
    except (ValueError, OSError) as exc:
        print(f"g2desc: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
