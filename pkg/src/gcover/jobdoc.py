"""Job documents: the single human-editable input format of the CLI.

A document is a plain-text file of sections and ``key = value`` lines in
which every value is a JSON literal.  Blank lines are skipped; lines whose
first non-blank character is ``#`` are comments.  The sections are

* ``[group]`` — permutation generators, in cycle notation or as explicit
  image lists;
* ``[cover]`` — quotient genus, handle images, branch monodromies (ids or
  words in the group generators);
* ``[subgroup NAME]`` — a named subgroup, by generator words;
* ``[curve NAME]`` — a named curve word on the punctured quotient surface;
* ``[options]`` — size caps and report selection.

``docs/input-format.md`` gives the formal grammar.  Every parse failure is
reported with its 1-based line number and the offending section/field.
"""

import json
import re

from .cover import CoverDatum
from .errors import CapExceeded, DocumentError, ValidationError
from .groups import FiniteGroup
from .topology import parse_curve_word

SUBCOMMANDS = (
    "chartable",
    "geometry",
    "hodge",
    "sym2",
    "check-endo",
    "check-gn",
    "unitary",
    "lift",
    "twist",
    "certify",
)

DEFAULT_CAP_GROUP = 2000
DEFAULT_CAP_ORACLE = 24
DEFAULT_CAP_TOPOLOGY = 64

_SECTION_RE = re.compile(r"^\[\s*([A-Za-z-]+)(?:\s+([A-Za-z_][A-Za-z0-9_.-]*))?\s*\]$")
_KEY_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\S.*)$")
_NAME_TOKEN_RE = re.compile(r"^g([0-9]+)$")


class JobDocument:
    """A parsed and validated job: group, optional cover datum, named
    subgroups and curves, and resolved size caps."""

    def __init__(self, group, datum, subgroups, curves, options,
                 cap_group, cap_oracle, cap_topology, reports, orbit):
        self.group = group
        self.datum = datum
        self.subgroups = subgroups
        self.curves = curves
        self.options = options
        self.cap_group = cap_group
        self.cap_oracle = cap_oracle
        self.cap_topology = cap_topology
        self.reports = reports
        self.orbit = orbit


class _Section:
    def __init__(self, kind, label, line):
        self.kind = kind
        self.label = label
        self.line = line
        self.items = {}  # key -> (value, line)

    @property
    def display(self):
        return self.kind if self.label is None else f"{self.kind} {self.label}"


def _split_sections(text):
    sections = []
    seen = set()
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            m = _SECTION_RE.match(line)
            if not m:
                raise DocumentError("malformed section header", line=lineno,
                                    field="section")
            kind, label = m.group(1), m.group(2)
            if kind in ("group", "cover", "options"):
                if label is not None:
                    raise DocumentError(
                        f"section [{kind}] does not take a name",
                        line=lineno, field="section")
            elif kind in ("subgroup", "curve"):
                if label is None:
                    raise DocumentError(
                        f"section [{kind}] requires a name, e.g. [{kind} N]",
                        line=lineno, field="section")
            else:
                raise DocumentError(f"unknown section kind {kind!r}",
                                    line=lineno, field="section")
            key = (kind, label)
            if key in seen:
                raise DocumentError(f"duplicate section [{kind}" +
                                    (f" {label}" if label else "") + "]",
                                    line=lineno, field="section")
            seen.add(key)
            current = _Section(kind, label, lineno)
            sections.append(current)
            continue
        m = _KEY_RE.match(line)
        if not m:
            raise DocumentError(
                "expected a section header or a 'key = value' line",
                line=lineno)
        if current is None:
            raise DocumentError("key/value line outside any section",
                                line=lineno)
        key, rhs = m.group(1), m.group(2)
        if key in current.items:
            raise DocumentError(
                f"duplicate key {key!r} in section [{current.display}]",
                line=lineno, field=f"{current.display}.{key}")
        try:
            value = json.loads(rhs)
        except json.JSONDecodeError as exc:
            raise DocumentError(
                f"value is not a JSON literal: {exc.msg}",
                line=lineno, field=f"{current.display}.{key}") from exc
        current.items[key] = (value, lineno)
    return sections


def _only(sections, kind):
    found = [s for s in sections if s.kind == kind]
    return found[0] if found else None


def _check_keys(section, allowed):
    for key, (_, lineno) in section.items.items():
        if key not in allowed:
            raise DocumentError(
                f"unknown key {key!r} (expected one of: "
                + ", ".join(sorted(allowed)) + ")",
                line=lineno, field=f"{section.display}.{key}")


def _get(section, key):
    """(value, line) or (None, None) when the key is absent."""
    if key in section.items:
        return section.items[key]
    return None, None


def _require(section, key):
    if key not in section.items:
        raise DocumentError(f"missing required key {key!r}",
                            line=section.line, field=section.display)
    return section.items[key]


def _expect_int(value, line, field, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError("expected an integer", line=line, field=field)
    if minimum is not None and value < minimum:
        raise DocumentError(f"expected an integer >= {minimum}",
                            line=line, field=field)
    return value


def _expect_list(value, line, field):
    if not isinstance(value, list):
        raise DocumentError("expected a JSON list", line=line, field=field)
    return value


# --- words in the group generators ------------------------------------------------


def parse_group_word(group, text):
    """Evaluate a word like ``"g1 g2^-1"`` (or ``"id"``) to an element id.

    ``g<k>`` names the k-th generator (1-based); ``^-1`` inverts a single
    letter; letters compose left to right.
    """
    if not isinstance(text, str) or not text.strip():
        raise ValidationError("empty group word")
    acc = 0
    for tok in text.split():
        invert = False
        if tok.endswith("^-1"):
            invert = True
            tok = tok[:-3]
        elif "^" in tok:
            raise ValidationError(
                f"bad word letter {tok!r}: only the ^-1 suffix is allowed")
        if tok == "id":
            e = 0
        else:
            m = _NAME_TOKEN_RE.match(tok)
            if not m:
                raise ValidationError(f"unknown word letter {tok!r}")
            k = int(m.group(1))
            if not (1 <= k <= len(group.gens)):
                raise ValidationError(
                    f"generator g{k} does not exist (the group has "
                    f"{len(group.gens)} generators)")
            e = group.gens[k - 1]
        if invert:
            e = group.inv(e)
        acc = group.mul(acc, e)
    return acc


def _element_from_item(group, item, line, field):
    if isinstance(item, bool):
        raise DocumentError("expected an element id or a word string",
                            line=line, field=field)
    if isinstance(item, int):
        if not (0 <= item < group.order):
            raise DocumentError(
                f"element id {item} out of range 0..{group.order - 1}",
                line=line, field=field)
        return item
    if isinstance(item, str):
        try:
            return parse_group_word(group, item)
        except ValidationError as exc:
            raise DocumentError(str(exc), line=line, field=field) from exc
    raise DocumentError("expected an element id or a word string",
                        line=line, field=field)


def _element_list(group, value, line, field):
    return [_element_from_item(group, item, line, field)
            for item in _expect_list(value, line, field)]


# --- section builders --------------------------------------------------------------


def _build_group(section, cap_group):
    _check_keys(section, {"generators", "images", "degree"})
    gens_v, gens_line = _get(section, "generators")
    imgs_v, imgs_line = _get(section, "images")
    deg_v, deg_line = _get(section, "degree")
    degree = None
    if deg_v is not None:
        degree = _expect_int(deg_v, deg_line, "group.degree", minimum=1)
    if (gens_v is None) == (imgs_v is None):
        raise DocumentError(
            "give exactly one of 'generators' (cycle strings) or "
            "'images' (0-based image lists)",
            line=section.line, field="group")
    try:
        if gens_v is not None:
            texts = _expect_list(gens_v, gens_line, "group.generators")
            for t in texts:
                if not isinstance(t, str):
                    raise DocumentError(
                        "each generator must be a cycle-notation string",
                        line=gens_line, field="group.generators")
            return FiniteGroup.from_cycle_strings(texts, degree=degree,
                                                  cap=cap_group)
        perms = _expect_list(imgs_v, imgs_line, "group.images")
        for p in perms:
            if not isinstance(p, list) or not all(
                    isinstance(x, int) and not isinstance(x, bool) for x in p):
                raise DocumentError(
                    "each image list must be a list of integers",
                    line=imgs_line, field="group.images")
        return FiniteGroup.from_permutations(
            [tuple(p) for p in perms], degree=degree, cap=cap_group)
    except DocumentError:
        raise
    except CapExceeded:
        raise
    except ValidationError as exc:
        line = gens_line if gens_v is not None else imgs_line
        field = "group.generators" if gens_v is not None else "group.images"
        raise DocumentError(str(exc), line=line, field=field) from exc


def _build_datum(section, group):
    _check_keys(section, {"genus", "handles", "branches"})
    genus_v, genus_line = _require(section, "genus")
    genus = _expect_int(genus_v, genus_line, "cover.genus", minimum=0)
    handles_v, handles_line = _get(section, "handles")
    branches_v, branches_line = _get(section, "branches")
    handles = ([] if handles_v is None
               else _element_list(group, handles_v, handles_line,
                                  "cover.handles"))
    branches = ([] if branches_v is None
                else _element_list(group, branches_v, branches_line,
                                   "cover.branches"))
    try:
        return CoverDatum(group, genus, handles, branches)
    except ValidationError as exc:
        raise DocumentError(str(exc), line=section.line,
                            field="cover") from exc


def _build_options(section):
    allowed = {"cap_group", "cap_oracle", "cap_topology", "orbit", "reports"}
    _check_keys(section, allowed)
    out = {}
    for key in ("cap_group", "cap_oracle", "cap_topology"):
        v, line = _get(section, key)
        if v is not None:
            out[key] = _expect_int(v, line, f"options.{key}", minimum=1)
    v, line = _get(section, "orbit")
    if v is not None:
        out["orbit"] = _expect_int(v, line, "options.orbit", minimum=0)
    v, line = _get(section, "reports")
    if v is not None:
        reports = _expect_list(v, line, "options.reports")
        for name in reports:
            if name not in SUBCOMMANDS:
                raise DocumentError(
                    f"unknown report name {name!r} (valid: "
                    + ", ".join(SUBCOMMANDS) + ")",
                    line=line, field="options.reports")
        out["reports"] = list(reports)
    return out


# --- entry points ------------------------------------------------------------------


def parse_document(text, cap_group=None, cap_oracle=None):
    """Parse a job document.

    ``cap_group`` / ``cap_oracle`` override the document's [options] values
    (they come from command-line flags); the [options] section in turn
    overrides the built-in defaults.
    """
    sections = _split_sections(text)

    opt_section = _only(sections, "options")
    options = _build_options(opt_section) if opt_section is not None else {}
    eff_cap_group = (cap_group if cap_group is not None
                     else options.get("cap_group", DEFAULT_CAP_GROUP))
    eff_cap_oracle = (cap_oracle if cap_oracle is not None
                      else options.get("cap_oracle", DEFAULT_CAP_ORACLE))
    eff_cap_topology = options.get("cap_topology", DEFAULT_CAP_TOPOLOGY)

    group_section = _only(sections, "group")
    if group_section is None:
        raise DocumentError("document has no [group] section", field="group")
    group = _build_group(group_section, eff_cap_group)

    cover_section = _only(sections, "cover")
    datum = _build_datum(cover_section, group) if cover_section is not None else None

    subgroups = {}
    curves = {}
    for section in sections:
        if section.kind == "subgroup":
            _check_keys(section, {"generators"})
            v, line = _require(section, "generators")
            elems = _element_list(group, v, line,
                                  f"subgroup {section.label}.generators")
            subgroups[section.label] = list(group.subgroup_closure(elems))
        elif section.kind == "curve":
            if datum is None:
                raise DocumentError(
                    "curve sections require a [cover] section",
                    line=section.line, field=section.display)
            _check_keys(section, {"word"})
            v, line = _require(section, "word")
            if not isinstance(v, str):
                raise DocumentError("curve word must be a JSON string",
                                    line=line, field=f"{section.display}.word")
            try:
                letters = parse_curve_word(datum, v)
            except ValidationError as exc:
                raise DocumentError(str(exc), line=line,
                                    field=f"{section.display}.word") from exc
            curves[section.label] = {"word": v, "letters": letters}

    return JobDocument(
        group=group,
        datum=datum,
        subgroups=subgroups,
        curves=curves,
        options=options,
        cap_group=eff_cap_group,
        cap_oracle=eff_cap_oracle,
        cap_topology=eff_cap_topology,
        reports=options.get("reports"),
        orbit=options.get("orbit"),
    )


def load_document(path, cap_group=None, cap_oracle=None):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read input file {path}: {exc}") from exc
    return parse_document(text, cap_group=cap_group, cap_oracle=cap_oracle)
