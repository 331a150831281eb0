"""JSON documents: exact encoders, schema validation, and readers.

Rationals are always strings ``"p"`` or ``"p/q"``; Gaussian rationals are
``["re", "im"]`` pairs. Every object document carries a ``kind`` tag, and
``read_document`` turns any emitted document back into live objects
(recursively, so reports that embed functions, cocycles, divisors, forms or
cohomology results decode their parts).
"""

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .cech_engine import CohomologyResult
from .divisors import DivisorP1, point
from .hermitian_curvature import FormCoeffMatrix
from .kodaira_map import ProjPoint, SectionBasis
from .line_bundles import MonomialCocycle, UnitMonomial
from .symbolic import GaussRat, LaurentPoly, RationalFunc, format_scalar, to_scalar


class SchemaError(ValueError):
    """A document does not match its schema."""


@lru_cache(maxsize=None)
def schema_root():
    text = resources.files("kodaira_kit").joinpath("schema/documents.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _validator(name):
    root = schema_root()
    if name not in root["$defs"]:
        raise KeyError(f"no schema named {name!r}")
    schema = {"$defs": root["$defs"], "$ref": f"#/$defs/{name}"}
    return jsonschema.Draft202012Validator(schema)


def validate(doc, name):
    errors = sorted(_validator(name).iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise SchemaError(f"{name}: {where}: {e.message}")
    return doc


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- encoders ------------------------------------------------------------------


def scalar_doc(x):
    if isinstance(x, GaussRat):
        return [format_scalar(x.re), format_scalar(x.im)]
    return format_scalar(x)


def terms_doc(poly):
    return [
        {"exponents": list(e), "coefficient": format_scalar(c)} for e, c in poly.terms()
    ]


def polynomial_doc(poly):
    return {"kind": "polynomial", "variables": list(poly.variables), "terms": terms_doc(poly)}


def function_doc(f):
    return {
        "kind": "rational_function",
        "variables": list(f.variables),
        "numerator": terms_doc(f.num),
        "denominator": terms_doc(f.den),
        "text": str(f),
    }


def cocycle_doc(c):
    return {
        "kind": "cocycle",
        "n": c.n,
        "variables": list(c.variables),
        "transitions": [
            {"pair": [i, j], "coefficient": format_scalar(m.coeff), "exponents": list(m.exponents)}
            for (i, j), m in c.g
        ],
    }


def point_p1_doc(p):
    return "inf" if p.is_infinity else format_scalar(p.value)


def divisor_doc(D):
    return {
        "kind": "divisor",
        "support": [{"point": point_p1_doc(p), "coefficient": k} for p, k in D.support],
        "degree": D.degree,
        "text": str(D),
    }


def proj_point_doc(p):
    return [scalar_doc(x) for x in p.coords]


def section_basis_doc(b):
    return {"kind": "section_basis", "n": b.n, "d": b.d, "sections": [polynomial_doc(s) for s in b.sections]}


def form_doc(m):
    return {
        "kind": "form",
        "n": m.n,
        "form_kind": m.kind,
        "orientation": m.orientation,
        "scale": m.scale,
        "convention": m.metadata()["convention"],
        "entries": [[function_doc(a) for a in row] for row in m.entries],
    }


def cohomology_doc(r):
    doc = {"kind": "cohomology"}
    doc.update(r.as_dict())
    return doc


def to_document(value):
    """Encode any supported object (recursing through dicts, lists and tuples)."""
    if isinstance(value, RationalFunc):
        return function_doc(value)
    if isinstance(value, LaurentPoly):
        return polynomial_doc(value)
    if isinstance(value, MonomialCocycle):
        return cocycle_doc(value)
    if isinstance(value, DivisorP1):
        return divisor_doc(value)
    if isinstance(value, FormCoeffMatrix):
        return form_doc(value)
    if isinstance(value, CohomologyResult):
        return cohomology_doc(value)
    if isinstance(value, SectionBasis):
        return section_basis_doc(value)
    if isinstance(value, ProjPoint):
        return proj_point_doc(value)
    if isinstance(value, dict):
        return {k: to_document(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_document(v) for v in value]
    return value


# -- decoders ------------------------------------------------------------------


def read_scalar(x):
    if isinstance(x, list):
        g = GaussRat(to_scalar(x[0]), to_scalar(x[1]))
        return g if g.im else g.re
    return to_scalar(x)


def _terms(variables, terms):
    out = {}
    for t in terms:
        e = tuple(t["exponents"])
        if len(e) != len(variables):
            raise SchemaError(f"term exponents {list(e)} do not match variables {list(variables)}")
        out[e] = out.get(e, 0) + to_scalar(t["coefficient"])
    return LaurentPoly(tuple(variables), out)


def read_polynomial(doc):
    validate(doc, "polynomial")
    return _terms(doc["variables"], doc["terms"])


def read_function(doc):
    validate(doc, "rational_function")
    num = _terms(doc["variables"], doc["numerator"])
    den = _terms(doc["variables"], doc["denominator"])
    if den.is_zero():
        raise SchemaError("rational_function: denominator is zero")
    return RationalFunc(num, den)


def read_cocycle(doc):
    validate(doc, "cocycle")
    table = {}
    for t in doc["transitions"]:
        key = tuple(t["pair"])
        if key in table:
            raise SchemaError(f"cocycle: duplicate pair {list(key)}")
        table[key] = UnitMonomial(to_scalar(t["coefficient"]), tuple(t["exponents"]))
    try:
        return MonomialCocycle(doc["n"], tuple(table.items()), tuple(doc["variables"]))
    except ValueError as exc:
        raise SchemaError(f"cocycle: {exc}") from None


def read_divisor(doc):
    validate(doc, "divisor")
    return DivisorP1(tuple((point(s["point"]), s["coefficient"]) for s in doc["support"]))


def read_proj_point(doc):
    validate(doc, "proj_point")
    try:
        return ProjPoint(tuple(read_scalar(x) for x in doc))
    except ValueError as exc:
        raise SchemaError(f"proj_point: {exc}") from None


def read_point_list(doc):
    validate(doc, "point_list")
    return [read_proj_point(p) for p in doc]


def read_affine_points(doc):
    validate(doc, "affine_point_list")
    return [tuple(read_scalar(x) for x in p) for p in doc]


def read_section_basis(doc):
    validate(doc, "section_basis")
    try:
        return SectionBasis(doc["n"], doc["d"], tuple(read_polynomial(s) for s in doc["sections"]))
    except ValueError as exc:
        raise SchemaError(f"section_basis: {exc}") from None


def read_form(doc):
    validate(doc, "form")
    rows = tuple(tuple(read_function(a) for a in row) for row in doc["entries"])
    try:
        return FormCoeffMatrix(doc["n"], rows, doc["orientation"], doc["scale"], doc["form_kind"])
    except ValueError as exc:
        raise SchemaError(f"form: {exc}") from None


def read_cohomology(doc):
    validate(doc, "cohomology")
    pieces = tuple((tuple(p["multidegree"]), p["dim"]) for p in doc["graded_pieces"])
    return CohomologyResult(doc["n"], doc["d"], doc["q"], doc["dim"], doc["window"], pieces)


READERS = {
    "polynomial": read_polynomial,
    "rational_function": read_function,
    "cocycle": read_cocycle,
    "divisor": read_divisor,
    "section_basis": read_section_basis,
    "form": read_form,
    "cohomology": read_cohomology,
}


def read_document(doc):
    """Decode an emitted document; unknown report kinds decode their tagged parts."""
    if isinstance(doc, dict):
        kind = doc.get("kind")
        if kind in READERS:
            return READERS[kind](doc)
        if kind is not None:
            validate(doc, "report")
        return {k: read_document(v) for k, v in doc.items()}
    if isinstance(doc, list):
        return [read_document(v) for v in doc]
    return doc


def loads(text):
    return read_document(json.loads(text))
