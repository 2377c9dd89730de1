import json

import pytest
from hypothesis import given, strategies as st

from degentri import io, shipped
from degentri.errors import InputError, LawViolation
from degentri.monbicat.carriers import monoidal_bicategory_report
from degentri.monbicat.cells import mb_transformation_report

NAMES = shipped.shipped_names()
BAD = [n for n in NAMES if n.endswith("-bad")]
GOOD = [n for n in NAMES if n not in BAD]


def text_of(name):
    return shipped.shipped_path(name).read_text(encoding="utf-8")


def test_shipped_files_match_their_generator():
    docs = shipped.documents()
    assert sorted(docs) == NAMES
    for name, doc in docs.items():
        assert io.emit(doc) == text_of(name), name


@pytest.mark.parametrize("name", NAMES)
def test_emit_is_canonical(name):
    text = text_of(name)
    assert io.emit(io.parse(text)) == text
    assert json.loads(text) == io.parse(text)


@pytest.mark.parametrize("name", GOOD)
def test_structure_round_trip(name):
    text = text_of(name)
    doc = io.parse(text)
    obj = io.from_doc(doc, doc["kind"])
    assert io.dump(doc["kind"], obj) == text


@pytest.mark.parametrize("name", BAD)
def test_bad_files_parse_but_break_a_law(name):
    doc = io.read_doc(shipped.shipped_path(name))
    if doc["kind"] in ("braided", "monoidal"):
        with pytest.raises(LawViolation):
            io.from_doc(doc)
        return
    obj = io.from_doc(doc)
    report = {"monbicat": monoidal_bicategory_report, "mb-transformation": mb_transformation_report}[doc["kind"]]
    assert not report(obj).passed


def test_write_all_reproduces_the_directory(tmp_path):
    paths = shipped.write_all(tmp_path)
    assert sorted(p.stem for p in paths) == NAMES
    for p in paths:
        assert p.read_text(encoding="utf-8") == text_of(p.stem)


@pytest.mark.parametrize("text", ["", "{", "[]", "3", '{"name": "x"}'])
def test_parse_rejects_non_documents(text):
    with pytest.raises(InputError):
        io.parse(text)


def test_wrong_or_unknown_kind():
    doc = io.read_doc(shipped.shipped_path("monoid-z3"))
    with pytest.raises(InputError):
        io.from_doc(doc, "braided")
    with pytest.raises(InputError):
        io.from_doc({**doc, "kind": "nonsense"})
    with pytest.raises(InputError):
        io.to_doc("nonsense", None)
    with pytest.raises(InputError):
        io.read_doc("/nonexistent/file.json")


@pytest.mark.parametrize("name", ["monoid-z3", "monoidal-z3pointed", "dd-z", "td3-z3", "monbicat-sigma-end2"])
def test_missing_fields_are_input_errors(name):
    doc = io.read_doc(shipped.shipped_path(name))
    for key in [k for k in doc if k not in ("kind", "name")]:
        broken = {k: v for k, v in doc.items() if k != key}
        with pytest.raises((InputError, LawViolation)):
            io.from_doc(broken)


def test_truncated_table_is_an_input_error():
    doc = io.read_doc(shipped.shipped_path("monoid-z3"))
    table_key = next(k for k, v in doc.items() if isinstance(v, list))
    with pytest.raises((InputError, LawViolation)):
        io.from_doc({**doc, table_key: doc[table_key][:-1]})


scalars = st.one_of(st.integers(-5, 99), st.text(max_size=5), st.booleans(), st.none())
docs = st.recursive(scalars, lambda c: st.one_of(st.lists(c, max_size=4),
                                                 st.dictionaries(st.text(max_size=4), c, max_size=4)), max_leaves=20)


@given(docs)
def test_emit_is_valid_json(doc):
    text = io.emit(doc)
    assert text.endswith("\n")
    assert json.loads(text) == doc
    assert io.emit(json.loads(text)) == text
