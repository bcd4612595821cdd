import json

import pytest

from torus_surgery.catalog import all_entries, get_entry
from torus_surgery.errors import InconsistentComplementError, InstanceFormatError, InvalidFramingError
from torus_surgery.instance import (
    SAFE_INT,
    decode_int,
    dumps,
    encode_int,
    entry_to_document,
    entry_to_instance,
    instance_to_dict,
    parse_instance,
)
from torus_surgery.kodaira import Kappa


def knot_doc():
    return entry_to_document(get_entry("trivial_knot"))


@pytest.mark.parametrize("entry", all_entries(), ids=lambda e: e.name)
def test_round_trip(entry):
    inst = entry_to_instance(entry)
    again = parse_instance(dumps(entry_to_document(entry)))
    assert again == inst
    assert instance_to_dict(again) == entry_to_document(entry)


def test_int_encoding():
    assert encode_int(SAFE_INT - 1) == SAFE_INT - 1
    assert encode_int(SAFE_INT) == str(SAFE_INT)
    assert encode_int(-SAFE_INT) == str(-SAFE_INT)
    assert decode_int(str(-SAFE_INT), "x") == -SAFE_INT
    with pytest.raises(InstanceFormatError):
        decode_int(True, "x")
    with pytest.raises(InstanceFormatError):
        decode_int("1.5", "x")


def test_large_relation_survives_round_trip():
    doc = {"complement": {"generators": 2, "relations": [[0, str(2 ** 70)]],
                          "i1": {"mu": [1, 0], "g1": [0, 1], "g2": [0, 0]}}}
    inst = parse_instance(json.dumps(doc))
    assert inst.complement.relations == ((0, 2 ** 70),)
    out = instance_to_dict(inst)
    assert out["complement"]["relations"] == [[0, str(2 ** 70)]]


def test_ambient_fields():
    doc = entry_to_document(get_entry("clifford"))
    doc["ambient"] = {"L_class": "null_homologous_integral", "b2": 1, "b_plus": 1, "signature": 1,
                      "euler": 3, "intersection_form_odd": None, "kappa": "-infinity"}
    # parity unknown, as recorded for a surgered manifold
    inst = parse_instance(doc)
    assert inst.complement.ambient.intersection_form_odd is None
    assert inst.complement.ambient.kappa is Kappa.NEG_INF


def test_claimed_after_parsed():
    doc = knot_doc()
    doc["surgeries"] = [{"p": 1, "k": 1, "gamma": [1, 0], "framing": "phi2",
                         "claimed_after": {"b1": 1, "b2": 0, "b_plus": 0, "euler": 0, "signature": 0,
                                           "parity": "even"}}]
    inst = parse_instance(doc)
    fp, parity = inst.surgeries[0].claimed_after
    assert fp.as_tuple() == (1, 0, 0, 0, 0) and parity == "even"
    assert parse_instance(dumps(instance_to_dict(inst))) == inst


def test_standard_framing_implicit():
    doc = knot_doc()
    doc["surgeries"] = [{"p": 1, "k": 2, "gamma": [1, 0]}]
    inst = parse_instance(doc)
    assert inst.surgeries[0].framing == "standard"
    assert inst.framing("standard").v1 == (0, 1, 0)


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d.pop("complement"), "complement"),
    (lambda d: d["complement"]["i1"].pop("g2"), "complement.i1"),
    (lambda d: d["complement"]["i1"].__setitem__("mu", [1]), "complement.i1.mu"),
    (lambda d: d["complement"].__setitem__("relations", [["x", 0]]), "complement.relations[0][0]"),
    (lambda d: d["surgeries"][0].__setitem__("framing", "nope"), "surgeries[0].framing"),
    (lambda d: d["surgeries"][0].pop("k"), "surgeries[0]"),
    (lambda d: d.__setitem__("framings", []), "framings"),
    (lambda d: d["ambient"].__setitem__("L_class", "weird"), "ambient.L_class"),
    (lambda d: d["ambient"].__setitem__("kappa", "7"), "ambient.kappa"),
])
def test_format_errors_name_the_field(mutate, where):
    doc = knot_doc()
    doc["ambient"] = {"L_class": "null_homologous_integral", "b2": 0, "b_plus": 0, "signature": 0, "euler": 0}
    mutate(doc)
    with pytest.raises(InstanceFormatError) as err:
        parse_instance(doc)
    assert err.value.path == where or where in str(err.value)


def test_json_syntax_error_position():
    with pytest.raises(InstanceFormatError, match="line 2 column"):
        parse_instance('{"complement":\n  oops}')


def test_top_level_must_be_object():
    with pytest.raises(InstanceFormatError):
        parse_instance("[1, 2]")


def test_invariant_errors_pass_through():
    doc = knot_doc()
    doc["framings"]["bad"] = [[0, 2, 0], [0, 0, 1]]
    with pytest.raises(InvalidFramingError):
        parse_instance(doc)
    doc = knot_doc()
    doc["complement"]["ker_i2_integral"] = [[0, 1, 0]]
    with pytest.raises(InconsistentComplementError):
        parse_instance(doc)
