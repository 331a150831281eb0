import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kodaira_kit import cech_engine, divisors, hermitian_curvature as hc, kodaira_map as km
from kodaira_kit import line_bundles as lb
from kodaira_kit.documents import (
    SchemaError,
    dumps,
    loads,
    read_cocycle,
    read_divisor,
    read_function,
    read_proj_point,
    read_section_basis,
    schema_root,
    to_document,
    validate,
)
from kodaira_kit.symbolic import GaussRat, parse_rational

ROOT = Path(__file__).resolve().parents[1]


def test_shipped_schema_copy_is_identical():
    shipped = json.loads((ROOT / "docs" / "documents.schema.json").read_text())
    assert shipped == schema_root()


@pytest.mark.parametrize(
    "value",
    [
        parse_rational("(z-1)^2/(3*z+1/2)", ("z",)),
        parse_rational("x0^2 - 3/4*x0*x1", ("x0", "x1")).as_laurent(),
        lb.standard_bundle(2, -3),
        divisors.DivisorP1.of((0, 2), ("inf", -1), ("1/3", 4)),
        hc.fubini_study(2),
        cech_engine.cohomology(cech_engine.TwistingSheaf(1, -3), 1),
        km.monomial_basis(1, 3),
    ],
    ids=lambda v: type(v).__name__,
)
def test_typed_round_trip(value):
    doc = to_document(value)
    back = loads(dumps(doc))
    assert back == value
    assert to_document(back) == doc


def test_rationals_are_strings():
    doc = to_document(parse_rational("1/3*z", ("z",)))
    assert doc["numerator"][0]["coefficient"] == "1/3"
    assert doc["denominator"][0]["coefficient"] == "1"
    text = dumps(to_document(divisors.DivisorP1.of(("-2/5", 1))))
    assert '"-2/5"' in text


def test_gaussian_points():
    p = read_proj_point([["1", "0"], ["1/2", "-3"]])
    assert p.coords == (1, GaussRat(Fraction(1, 2), -3))
    assert to_document(p) == ["1", ["1/2", "-3"]]


@pytest.mark.parametrize(
    "reader,doc",
    [
        (read_function, {"kind": "rational_function", "variables": ["z"], "numerator": [], "denominator": []}),
        (read_function, {"kind": "rational_function", "variables": ["z"],
                         "numerator": [{"exponents": [1, 2], "coefficient": "1"}],
                         "denominator": [{"exponents": [0], "coefficient": "1"}]}),
        (read_function, {"kind": "rational_function", "variables": ["z"],
                         "numerator": [{"exponents": [1], "coefficient": 0.5}],
                         "denominator": [{"exponents": [0], "coefficient": "1"}]}),
        (read_cocycle, {"kind": "cocycle", "n": 1, "variables": ["x0", "x1"],
                        "transitions": [{"pair": [0, 1], "coefficient": "1", "exponents": [-1, 1]}]}),
        (read_divisor, {"support": [{"point": "1", "coefficient": "2"}]}),
        (read_proj_point, ["0", "0"]),
        (read_section_basis, {"kind": "section_basis", "n": 1, "d": 1, "sections": []}),
    ],
)
def test_malformed_documents_raise_schema_error(reader, doc):
    with pytest.raises(SchemaError):
        reader(doc)


def test_unknown_schema_name():
    with pytest.raises(KeyError):
        validate({}, "nope")


def test_report_documents_need_a_kind():
    with pytest.raises(SchemaError):
        loads('{"kind": 3}')


fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


@given(st.lists(st.tuples(fracs, st.integers(-4, 4)), max_size=5))
def test_divisor_round_trip(pairs):
    D = divisors.DivisorP1.of(*pairs)
    assert read_divisor(json.loads(dumps(to_document(D)))) == D


@given(st.integers(1, 3), st.integers(-5, 5))
def test_cocycle_round_trip(n, d):
    c = lb.standard_bundle(n, d)
    assert read_cocycle(to_document(c)) == c
