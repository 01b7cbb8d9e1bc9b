"""Job-document grammar: sections, JSON literals, words, caps, and
line/field-anchored errors."""

import glob
import os
import re

import pytest

from gcover import groups
from gcover.errors import CapExceeded, DocumentError, ValidationError
from gcover.jobdoc import (
    DEFAULT_CAP_GROUP,
    DEFAULT_CAP_ORACLE,
    DEFAULT_CAP_TOPOLOGY,
    load_document,
    parse_document,
    parse_group_word,
)

TESTDATA = os.path.join(os.path.dirname(__file__), os.pardir, "testdata")

MINIMAL = """\
# a double cover of the sphere branched over six points
[group]
generators = ["(1 2)"]

[cover]
genus = 0
branches = ["g1", "g1", "g1", "g1", "g1", "g1"]
"""


def test_minimal_document():
    doc = parse_document(MINIMAL)
    assert doc.group.order == 2
    assert doc.datum.total_genus() == 2
    assert doc.subgroups == {}
    assert doc.curves == {}
    assert doc.cap_group == DEFAULT_CAP_GROUP
    assert doc.cap_oracle == DEFAULT_CAP_ORACLE
    assert doc.cap_topology == DEFAULT_CAP_TOPOLOGY
    assert doc.reports is None
    assert doc.orbit is None


def test_full_document():
    text = """\
[group]
images = [[1, 2, 0], [1, 0, 2]]

[cover]
genus = 1
handles = ["g1", 0]
branches = ["g2", "g2"]

[subgroup N]
generators = ["g1"]

[curve loop]
word = "a1 t1^-1"

[options]
cap_group = 100
cap_oracle = 12
cap_topology = 30
orbit = 1
reports = ["hodge", "lift"]
"""
    doc = parse_document(text)
    assert doc.group.order == 6
    assert doc.datum.gbar == 1
    assert sorted(doc.subgroups["N"]) == sorted(
        doc.group.subgroup_closure([doc.group.gens[0]]))
    assert doc.curves["loop"]["word"] == "a1 t1^-1"
    assert doc.curves["loop"]["letters"] == [(0, 1), (2, -1)]
    assert doc.cap_group == 100
    assert doc.cap_oracle == 12
    assert doc.cap_topology == 30
    assert doc.orbit == 1
    assert doc.reports == ["hodge", "lift"]


def test_flag_overrides_options():
    text = MINIMAL + "\n[options]\ncap_group = 50\ncap_oracle = 7\n"
    doc = parse_document(text)
    assert (doc.cap_group, doc.cap_oracle) == (50, 7)
    doc = parse_document(text, cap_group=9, cap_oracle=3)
    assert (doc.cap_group, doc.cap_oracle) == (9, 3)


def test_testdata_corpus_parses():
    paths = sorted(glob.glob(os.path.join(TESTDATA, "*.job")))
    assert len(paths) >= 8
    for path in paths:
        doc = load_document(path)
        assert doc.group.order >= 1


# --- group words -------------------------------------------------------------------


def test_parse_group_word():
    G = groups.symmetric(3)
    tau, rho = G.gens  # classified generating pair
    assert parse_group_word(G, "id") == 0
    assert parse_group_word(G, "g1") == tau
    assert parse_group_word(G, "g1 g2^-1") == G.mul(tau, G.inv(rho))
    # left-to-right composition
    assert parse_group_word(G, "g1 g2") == G.mul(tau, rho)


def test_parse_group_word_errors():
    G = groups.symmetric(3)
    with pytest.raises(ValidationError, match="empty group word"):
        parse_group_word(G, "  ")
    with pytest.raises(ValidationError, match="only the \\^-1 suffix"):
        parse_group_word(G, "g1^2")
    with pytest.raises(ValidationError, match="unknown word letter"):
        parse_group_word(G, "x1")
    with pytest.raises(ValidationError, match="g3 does not exist"):
        parse_group_word(G, "g3")


# --- anchored failures --------------------------------------------------------------

ANCHOR_RE = re.compile(r"^line \d+: \[[^\]]+\] ")


def _error(text, **kw):
    with pytest.raises(DocumentError) as exc:
        parse_document(text, **kw)
    return exc.value


@pytest.mark.parametrize(
    "text, line, field, fragment",
    [
        ("[group\ngenerators = []", 1, "section", "malformed section header"),
        ("[group extra]\n", 1, "section", "does not take a name"),
        ("[subgroup]\n", 1, "section", "requires a name"),
        ("[widget]\n", 1, "section", "unknown section kind"),
        ("[group]\ngenerators = [\"(1 2)\"]\n[group]\n", 3, "section",
         "duplicate section [group]"),
        ("[group]\ngenerators = [\"(1 2)\"]\ngenerators = []\n", 3,
         "group.generators", "duplicate key"),
        ("[group]\ngenerators = [\"(1 2)\"\n", 2, "group.generators",
         "value is not a JSON literal"),
        ("[group]\nfoo = 1\n", 2, "group.foo", "unknown key"),
    ],
)
def test_grammar_errors(text, line, field, fragment):
    err = _error(text)
    assert err.line == line
    assert err.field == field
    assert fragment in str(err)
    assert ANCHOR_RE.match(str(err))


def test_key_outside_section():
    err = _error("genus = 1\n")
    assert err.line == 1
    assert "outside any section" in str(err)


def test_not_a_key_line():
    err = _error("[group]\n!!!\n")
    assert err.line == 2
    assert "expected a section header" in str(err)


def test_missing_group_section():
    err = _error("[cover]\ngenus = 1\n")
    assert err.field == "group"
    assert "no [group] section" in str(err)


def test_group_requires_one_source():
    err = _error("[group]\ndegree = 3\n")
    assert "exactly one of" in str(err)
    err = _error('[group]\ngenerators = []\nimages = []\n')
    assert "exactly one of" in str(err)


def test_bad_cycle_string_is_anchored():
    err = _error('[group]\ngenerators = ["(1 2"]\n')
    assert err.line == 2
    assert err.field == "group.generators"


def test_cover_relation_violation_wrapped():
    text = '[group]\ngenerators = ["(1 2 3)"]\n\n[cover]\ngenus = 0\nbranches = ["g1", "g1"]\n'
    err = _error(text)
    assert err.field == "cover"
    assert err.line == 4  # anchored to the section header


def test_cover_word_errors_anchored():
    text = '[group]\ngenerators = ["(1 2)"]\n\n[cover]\ngenus = 0\nbranches = ["g9"]\n'
    err = _error(text)
    assert err.line == 6
    assert err.field == "cover.branches"
    text = '[group]\ngenerators = ["(1 2)"]\n\n[cover]\ngenus = 0\nbranches = [99]\n'
    err = _error(text)
    assert "out of range" in str(err)


def test_cover_requires_genus():
    err = _error('[group]\ngenerators = ["(1 2)"]\n\n[cover]\nhandles = []\n')
    assert "missing required key 'genus'" in str(err)
    err = _error('[group]\ngenerators = ["(1 2)"]\n\n[cover]\ngenus = true\n')
    assert "expected an integer" in str(err)


def test_curve_requires_cover():
    text = '[group]\ngenerators = ["(1 2)"]\n\n[curve c]\nword = "a1"\n'
    err = _error(text)
    assert "require a [cover] section" in str(err)


def test_curve_word_errors_anchored():
    text = (MINIMAL + '\n[curve c]\nword = "a1"\n')
    err = _error(text)  # genus 0 cover has no handle letters
    assert err.field == "curve c.word"
    assert "unknown curve letter" in str(err)
    text = (MINIMAL + '\n[curve c]\nword = 7\n')
    err = _error(text)
    assert "must be a JSON string" in str(err)


def test_bad_options():
    err = _error(MINIMAL + "\n[options]\ncap_group = 0\n")
    assert "expected an integer >= 1" in str(err)
    err = _error(MINIMAL + '\n[options]\nreports = ["nope"]\n')
    assert "unknown report name" in str(err)
    err = _error(MINIMAL + "\n[options]\nwhat = 1\n")
    assert "unknown key" in str(err)


def test_cap_surfaces_as_cap_error():
    text = '[group]\ngenerators = ["(1 2 3 4 5)"]\n'
    with pytest.raises(CapExceeded):
        parse_document(text, cap_group=4)


def test_load_document_missing_file(tmp_path):
    with pytest.raises(ValidationError, match="cannot read input file"):
        load_document(str(tmp_path / "absent.job"))
