import random
from fractions import Fraction

import pytest

from graphgen import random_curve_graph, random_zappatic_graph
from zappatic.catalog import catalog, catalog_names
from zappatic.curves import make_stick
from zappatic.documents import (
    DocumentError,
    document_payload,
    fraction_str,
    load_document,
    parse_document,
    parse_fraction,
    parse_phi,
    save_document,
    serialize_document,
)
from zappatic.invariants import PhiSpec
from zappatic.residues import ResidueAssignment


def test_fraction_string_forms():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction("-3/4") == Fraction(-3, 4)
    assert parse_fraction("0") == 0
    assert parse_fraction("17") == 17
    assert fraction_str(Fraction(-3, 4)) == "-3/4"
    assert fraction_str(Fraction(5)) == "5"
    assert parse_fraction("-0") == 0  # legal integer spelling, like JSON's -0
    for bad in ("3/0", "03", "3/04", "1.5", "+2", "", "2 / 3"):
        with pytest.raises(DocumentError):
            parse_fraction(bad)


def test_catalog_round_trips():
    names = ("rn:4", "sn:5", "en:6", "tetrahedron", "impossible", "r3-planar", "e3-triangle")
    assert len(names) == len(catalog_names())
    for name in names:
        g = catalog(name)
        text = serialize_document(g)
        again = parse_document(text)
        assert again == g
        assert serialize_document(again) == text  # byte-stable


def test_curve_round_trip():
    for kind in ("chain", "fork", "cycle"):
        g = make_stick(kind, 5)
        assert parse_document(serialize_document(g)) == g


def test_random_round_trips():
    rng = random.Random(8080)
    for _ in range(25):
        g = random_curve_graph(rng)
        assert parse_document(serialize_document(g)) == g
    for _ in range(25):
        z = random_zappatic_graph(rng)
        assert parse_document(serialize_document(z)) == z


def test_residues_round_trip():
    a = ResidueAssignment(
        {(1, 2, 3, 1): Fraction(-5, 7), (1, 2, 3, 2): 0, (2, 3, 9, 1): 4}
    )
    text = serialize_document(a)
    assert '"value": "-5/7"' in text
    assert parse_document(text) == a


def test_save_and_load(tmp_path):
    g = catalog("tetrahedron")
    p = tmp_path / "tetra.json"
    save_document(g, p)
    assert load_document(p) == g
    assert p.read_text().endswith("\n")


def test_defaults_fill_in():
    g = parse_document(
        '{"schema_version": 1, "kind": "zappatic",'
        ' "vertices": [{"id": 1}, {"id": 2}], "edges": [{"i": 2, "j": 1}]}'
    )
    v = g.vertex(1)
    assert (v.pg, v.q, v.degree, v.section_genus) == (0, 0, 1, 0)
    assert g.edges[0].i == 1 and g.edges[0].curve_degree == 1
    assert g.planar is False

    c = parse_document(
        '{"schema_version": 1, "kind": "curve",'
        ' "vertices": [{"id": 1}, {"id": 2}], "edges": [{"i": 1, "j": 2}]}'
    )
    assert c.vertices[0].genus == 0 and c.vertices[0].degree is None
    assert c.edges[0].index == 1 and c.embedding_dim is None


@pytest.mark.parametrize(
    "text, message",
    [
        ("[]", "document"),
        ('{"schema_version": 2, "kind": "curve"}', "schema_version"),
        ('{"kind": "curve"}', "schema_version"),
        ('{"schema_version": 1}', "kind"),
        ('{"schema_version": 1, "kind": "nope"}', "kind"),
        ('{"schema_version": 1, "kind": "curve", "extra": 0}', "unknown field"),
        (
            '{"schema_version": 1, "kind": "curve", "vertices": [{"id": 1.0}]}',
            "floating point",
        ),
        (
            '{"schema_version": 1, "kind": "curve", "vertices": [{"id": true}]}',
            "integer",
        ),
        (
            '{"schema_version": 1, "kind": "curve", "vertices": [{"id": 1, "id": 1}]}',
            "duplicate key",
        ),
        (
            '{"schema_version": 1, "kind": "zappatic", "planar": 1}',
            "true or false",
        ),
        (
            '{"schema_version": 1, "kind": "zappatic", "closed_faces": [{"t": 1}]}',
            "missing field 'cycle'",
        ),
        (
            '{"schema_version": 1, "kind": "residues", "values":'
            ' [{"i": 1, "j": 2, "k": 3, "value": "1/2/3"}]}',
            "rational string",
        ),
        (
            '{"schema_version": 1, "kind": "residues", "values":'
            ' [{"i": 3, "j": 2, "k": 1, "value": "1"}]}',
            "i < j < k",
        ),
        (
            '{"schema_version": 1, "kind": "residues", "values":'
            ' [{"i": 1, "j": 2, "k": 3, "value": 1}]}',
            "rational string",
        ),
        (
            '{"schema_version": 1, "kind": "residues"}',
            "missing field 'values'",
        ),
    ],
)
def test_rejections(text, message):
    with pytest.raises(DocumentError, match=message):
        parse_document(text)


def test_malformed_json_reports_position():
    with pytest.raises(DocumentError, match=r"line 2 column \d+"):
        parse_document('{\n  "schema_version": 1,,\n}')


def test_graph_problems_surface_as_errors():
    # structurally valid JSON but an invalid graph (loop edge)
    text = (
        '{"schema_version": 1, "kind": "curve",'
        ' "vertices": [{"id": 1}], "edges": [{"i": 1, "j": 1}]}'
    )
    with pytest.raises(ValueError, match="loop"):
        parse_document(text)


def test_parse_phi():
    assert parse_phi('{"rank": 3}') == PhiSpec(rank=3)
    spec = parse_phi('{"matrix": [[1, 0], [0, 1], [1, 1]]}')
    assert spec.matrix == ((1, 0), (0, 1), (1, 1))
    assert spec.resolved_rank() == 2
    for bad, msg in [
        ('{"rank": 1, "matrix": []}', "exactly one"),
        ("{}", "exactly one"),
        ('{"rank": -1}', "phi.rank"),
        ('{"rank": 2.0}', "floating point"),
        ('{"matrix": [[1, 0], [1]]}', "matrix"),
        ('{"rank": 3, "til": 1}', "unknown field"),
    ]:
        with pytest.raises(DocumentError, match=msg):
            parse_phi(bad)


def test_document_payload_is_plain_data():
    payload = document_payload(catalog("tetrahedron"))
    assert payload["schema_version"] == 1
    assert payload["kind"] == "zappatic"
    assert payload["planar"] is True
    assert [v["id"] for v in payload["vertices"]] == [1, 2, 3, 4]
    assert all(
        set(f) == {"cycle", "t"} for f in payload["closed_faces"]
    )
