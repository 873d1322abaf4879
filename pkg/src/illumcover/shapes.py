"""Shape constructors and the JSON codecs for shapes and certificates.

Rationals travel as strings (``"3/4"``).  Field and surd scalars in
certificates are tagged objects::

    {"field": 12, "coeffs": ["0", "1/2"]}        # element of Q(2 cos(2 pi / 12))
    {"surd": 1, "a": "1/2", "b": "3"}           # a + b sqrt(radicands[0])
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .field import (
    FieldElement,
    NumberField,
    ParseError,
    SurdElement,
    SurdTower,
    format_rational,
    parse_rational,
)
from .geometry import ConvexPolygon, DegenerateInput, InvalidInput, make_polygon
from .nd import Box, DoubleCone

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Disc:
    radius: Fraction
    center: tuple = (Fraction(0), Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        object.__setattr__(self, "center", tuple(Fraction(c) for c in self.center))
        if self.radius <= 0:
            raise InvalidInput("disc radius must be positive")


def regular_ngon(n: int, circumradius=1) -> ConvexPolygon:
    """Regular ``n``-gon with a vertex at ``(r, 0)``, exact in ``Q(2 cos(2 pi / L))``."""
    if not isinstance(n, int) or n < 3:
        raise InvalidInput("regular polygon needs n >= 3")
    r = Fraction(circumradius)
    if r <= 0:
        raise InvalidInput("circumradius must be positive")
    source = ("regular_ngon", n, r)
    if n == 4:
        z = Fraction(0)
        return make_polygon([(r, z), (z, r), (-r, z), (z, -r)], source=source)
    L = 4 * n // math.gcd(n, 4)
    F = NumberField(L)
    step, quarter = L // n, L // 4
    pts = [(F.two_cos(j * step) * (r / 2), F.two_cos(j * step - quarter) * (r / 2)) for j in range(n)]
    return make_polygon(pts, source=source)


# ---------------------------------------------------------------- scalars


def encode_scalar(x) -> Any:
    if isinstance(x, SurdElement):
        return {"surd": x.level, "a": encode_scalar(x.a), "b": encode_scalar(x.b)}
    if isinstance(x, FieldElement):
        if x.is_rational():
            return format_rational(x.coeffs[0])
        return {"field": x.field.L, "coeffs": [format_rational(c) for c in x.coeffs]}
    return format_rational(x)


def decode_scalar(obj, tower: SurdTower | None = None, where: str = "value"):
    if isinstance(obj, str):
        try:
            return parse_rational(obj)
        except ParseError as exc:
            raise ParseError(f"field {where!r}: {exc}") from None
    if isinstance(obj, dict):
        if set(obj) == {"field", "coeffs"}:
            L = obj["field"]
            if not isinstance(L, int) or L < 3:
                raise ParseError(f"field {where!r}: bad field index {L!r}")
            F = NumberField(L)
            cs = [decode_scalar(c, None, f"{where}.coeffs") for c in obj["coeffs"]]
            if len(cs) > F.degree:
                raise ParseError(f"field {where!r}: too many coefficients")
            return F.element(cs)
        if set(obj) == {"surd", "a", "b"}:
            lvl = obj["surd"]
            if tower is None or not isinstance(lvl, int) or not 1 <= lvl <= len(tower.radicands):
                raise ParseError(f"field {where!r}: surd level without matching radicand")
            a = decode_scalar(obj["a"], tower, f"{where}.a")
            b = decode_scalar(obj["b"], tower, f"{where}.b")
            return SurdElement(tower, lvl, a, b)
    raise ParseError(f"field {where!r}: expected a rational string or tagged scalar")


def _rational(obj, where):
    if not isinstance(obj, str):
        raise ParseError(f"field {where!r}: rationals must be strings like \"3/4\"")
    try:
        return parse_rational(obj)
    except ParseError as exc:
        raise ParseError(f"field {where!r}: {exc}") from None


def _check_keys(doc: dict, required: set, optional: set = frozenset(), where="shape"):
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected a JSON object")
    missing = required - set(doc)
    if missing:
        raise ParseError(f"{where}: missing field(s) {sorted(missing)}")
    extra = set(doc) - required - set(optional)
    if extra:
        raise ParseError(f"{where}: unknown field(s) {sorted(extra)}")


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None


# ---------------------------------------------------------------- shapes


def shape_from_doc(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("shape: missing field ['kind']")
    if doc.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise ParseError(f"shape: unsupported schema_version {doc['schema_version']!r}")
    kind = doc["kind"]
    opt = {"schema_version"}
    try:
        if kind == "polygon":
            _check_keys(doc, {"kind", "vertices"}, opt)
            vs = doc["vertices"]
            if not isinstance(vs, list):
                raise ParseError("field 'vertices': expected a list")
            pts = []
            for i, v in enumerate(vs):
                if not isinstance(v, list) or len(v) != 2:
                    raise ParseError(f"field 'vertices[{i}]': expected [x, y]")
                pts.append((_rational(v[0], f"vertices[{i}][0]"), _rational(v[1], f"vertices[{i}][1]")))
            return make_polygon(pts)
        if kind == "regular_ngon":
            _check_keys(doc, {"kind", "n", "circumradius"}, opt)
            n = doc["n"]
            if not isinstance(n, int) or isinstance(n, bool):
                raise ParseError("field 'n': expected an integer")
            return regular_ngon(n, _rational(doc["circumradius"], "circumradius"))
        if kind == "disc":
            _check_keys(doc, {"kind", "radius"}, opt | {"center"})
            center = doc.get("center", ["0", "0"])
            if not isinstance(center, list) or len(center) != 2:
                raise ParseError("field 'center': expected [x, y]")
            c = tuple(_rational(a, f"center[{i}]") for i, a in enumerate(center))
            return Disc(_rational(doc["radius"], "radius"), c)
        if kind == "box":
            _check_keys(doc, {"kind", "n", "half_widths"}, opt)
            hw = doc["half_widths"]
            if not isinstance(hw, list):
                raise ParseError("field 'half_widths': expected a list")
            return Box(doc["n"], tuple(_rational(h, f"half_widths[{i}]") for i, h in enumerate(hw)))
        if kind == "doublecone":
            _check_keys(doc, {"kind", "n"}, opt)
            if not isinstance(doc["n"], int):
                raise ParseError("field 'n': expected an integer")
            return DoubleCone(doc["n"])
    except (InvalidInput, DegenerateInput) as exc:
        raise ParseError(f"shape: {exc}") from None
    raise ParseError(f"field 'kind': unknown shape kind {kind!r}")


def parse_shape(text: str):
    return shape_from_doc(loads(text))


def shape_to_doc(body) -> dict:
    doc: dict = {"schema_version": SCHEMA_VERSION}
    if isinstance(body, ConvexPolygon):
        if body.source and body.source[0] == "regular_ngon":
            _, n, r = body.source
            doc.update(kind="regular_ngon", n=n, circumradius=format_rational(r))
            return doc
        if any(isinstance(c, FieldElement) for v in body.vertices for c in v):
            raise InvalidInput("only rational polygons serialize as vertex lists")
        doc.update(kind="polygon", vertices=[[format_rational(x), format_rational(y)] for x, y in body.vertices])
        return doc
    if isinstance(body, Disc):
        doc.update(kind="disc", radius=format_rational(body.radius), center=[format_rational(c) for c in body.center])
        return doc
    if isinstance(body, Box):
        doc.update(kind="box", n=body.n, half_widths=[format_rational(h) for h in body.half_widths])
        return doc
    if isinstance(body, DoubleCone):
        doc.update(kind="doublecone", n=body.n)
        return doc
    raise InvalidInput(f"cannot serialize {type(body).__name__}")


def serialize_shape(body) -> str:
    return json.dumps(shape_to_doc(body), indent=2)


# ---------------------------------------------------------------- certificates


def _tower_of(vectors):
    towers = {id(c.tower): c.tower for v in vectors for c in v if isinstance(c, SurdElement)}
    if len(towers) > 1:
        raise InvalidInput("certificate mixes surd towers")
    return next(iter(towers.values()), None)


def certificate_to_doc(body, eps, mode, result) -> dict:
    """Self-contained record of a quantified-count verdict."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "shape": shape_to_doc(body),
        "eps": str(eps),
        "mode": str(getattr(mode, "value", mode)),
        "verdict": result.verdict,
    }
    if result.verdict == "finite":
        tower = _tower_of(result.certificate)
        doc["m"] = result.m
        if tower is not None:
            doc["radicands"] = [encode_scalar(d) for d in tower.radicands]
        doc["translations"] = [[encode_scalar(a), encode_scalar(b)] for a, b in result.certificate]
    elif result.verdict == "infinite":
        doc["witness"] = [encode_scalar(a) for a in result.witness]
    else:
        doc["lower_bound"] = result.lower_bound
    return doc


def certificate_from_doc(doc: dict):
    """Inverse of :func:`certificate_to_doc`: ``(body, eps, mode, result)``."""
    from .covering import CountResult, EpsSpec

    req = {"shape", "eps", "mode", "verdict"}
    opt = {"schema_version", "m", "radicands", "translations", "witness", "lower_bound"}
    _check_keys(doc, req, opt, where="certificate")
    body = shape_from_doc(doc["shape"])
    try:
        eps = EpsSpec.parse(doc["eps"])
    except (ValueError, ZeroDivisionError, InvalidInput) as exc:
        raise ParseError(f"field 'eps': {exc}") from None
    mode = doc["mode"]
    if mode not in ("closed", "open"):
        raise ParseError(f"field 'mode': expected closed or open, got {mode!r}")
    verdict = doc["verdict"]
    if verdict == "finite":
        if "translations" not in doc or "m" not in doc:
            raise ParseError("certificate: finite verdict needs 'm' and 'translations'")
        tower = None
        if "radicands" in doc:
            tower = SurdTower([decode_scalar(d, None, "radicands") for d in doc["radicands"]])
        ts = []
        for i, t in enumerate(doc["translations"]):
            if not isinstance(t, list) or len(t) != 2:
                raise ParseError(f"field 'translations[{i}]': expected [x, y]")
            ts.append(tuple(decode_scalar(a, tower, f"translations[{i}]") for a in t))
        result = CountResult("finite", m=doc["m"], certificate=ts, lower_bound=doc["m"])
    elif verdict == "infinite":
        w = doc.get("witness")
        if not isinstance(w, list) or len(w) != 2:
            raise ParseError("field 'witness': expected [x, y]")
        result = CountResult("infinite", witness=tuple(decode_scalar(a, None, "witness") for a in w))
    elif verdict == "lower_bound":
        result = CountResult("lower_bound", lower_bound=doc.get("lower_bound"))
    else:
        raise ParseError(f"field 'verdict': unknown verdict {verdict!r}")
    return body, eps, mode, result
