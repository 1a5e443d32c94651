"""Input descriptions, the .pq file grammar, formula-mode rows and pipelines.

Two input modes:

* full mode (.pq files): a group given by named cycle-notation generators and
  two spherical systems given by generator words; the whole pipeline
  (systems -> singularities -> model -> invariants) runs on them.
* formula mode (.rows files, CSV): only |G|, g1, g2 and the singularity
  multiset; computes the Euler number, q = 0 (rational base quotients) and,
  when K^2 is supplied, the Noether chi and P_g.  This exists because the
  classification tables list invariants, not spherical systems.

.pq grammar (INI sections)::

    [group]
    degree = 10
    a = (0 1 2 3 4)
    b = (5 6 7 8 9)

    [system1]
    base_genus = 0
    generators = a, b, a^4*b^4
    signature = 5, 5, 5        ; optional, derived when absent

    [system2]
    ...

    [flags]
    in_scope_c1sq6 = false     ; optional

Generator words are '*'-separated factors ``name`` or ``name^k`` (k may be
negative).
"""

from __future__ import annotations

import configparser
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .covers import SphericalSystem, make_system, require_valid
from .errors import ParseError, ValidationError
from .groups import DEFAULT_ORDER_CAP, FiniteGroup, Permutation, group_from_generators
from .singularities import SingularityType, normalized_key
from .surface import build_surface_model

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SystemSpec:
    base_genus: int
    words: tuple[str, ...]
    signature: tuple[int, ...] | None = None


@dataclass(frozen=True)
class InputDescription:
    degree: int
    generators: tuple[tuple[str, str], ...]  # (name, cycle text), order matters
    system1: SystemSpec
    system2: SystemSpec
    in_scope_c1sq6: bool = False


def parse_input(text: str) -> InputDescription:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ParseError(str(exc)) from None
    for section in ("group", "system1", "system2"):
        if section not in parser:
            raise ParseError(f"missing [{section}] section")
    group_section = parser["group"]
    if "degree" not in group_section:
        raise ParseError("missing 'degree' in [group]")
    try:
        degree = int(group_section["degree"])
    except ValueError:
        raise ParseError(f"bad degree {group_section['degree']!r}") from None
    generators = tuple(
        (name, value) for name, value in group_section.items() if name != "degree"
    )
    if not generators:
        raise ParseError("no group generators given")
    systems = []
    for section in ("system1", "system2"):
        sec = parser[section]
        if "generators" not in sec:
            raise ParseError(f"missing 'generators' in [{section}]")
        words = tuple(w.strip() for w in sec["generators"].split(",") if w.strip())
        base_genus = int(sec.get("base_genus", "0"))
        signature = None
        if "signature" in sec:
            try:
                signature = tuple(int(x) for x in sec["signature"].split(","))
            except ValueError:
                raise ParseError(f"bad signature in [{section}]") from None
        systems.append(SystemSpec(base_genus, words, signature))
    in_scope = False
    if "flags" in parser:
        in_scope = parser["flags"].getboolean("in_scope_c1sq6", fallback=False)
    return InputDescription(degree, generators, systems[0], systems[1], in_scope)


def serialize_input(desc: InputDescription) -> str:
    lines = ["[group]", f"degree = {desc.degree}"]
    lines += [f"{name} = {cycles}" for name, cycles in desc.generators]
    for label, spec in (("system1", desc.system1), ("system2", desc.system2)):
        lines += ["", f"[{label}]", f"base_genus = {spec.base_genus}"]
        lines.append("generators = " + ", ".join(spec.words))
        if spec.signature is not None:
            lines.append("signature = " + ", ".join(map(str, spec.signature)))
    lines += ["", "[flags]", f"in_scope_c1sq6 = {str(desc.in_scope_c1sq6).lower()}"]
    return "\n".join(lines) + "\n"


_WORD_FACTOR = re.compile(r"^([A-Za-z_]\w*)(?:\^(-?\d+))?$")


def _evaluate_word(group: FiniteGroup, named: dict[str, int], word: str) -> int:
    acc = group.identity
    for factor in word.split("*"):
        match = _WORD_FACTOR.match(factor.strip())
        if not match:
            raise ParseError(f"bad factor {factor!r} in word {word!r}")
        name, power = match.group(1), int(match.group(2) or 1)
        if name not in named:
            raise ParseError(f"unknown generator {name!r} in word {word!r}")
        acc = group.mul(acc, group.power(named[name], power))
    return acc


def realize(
    desc: InputDescription, cap: int = DEFAULT_ORDER_CAP
) -> tuple[FiniteGroup, SphericalSystem, SphericalSystem]:
    perms = [Permutation.from_cycles(text, desc.degree) for _, text in desc.generators]
    group = group_from_generators(perms, cap=cap)
    named = {name: group.index_of(p) for (name, _), p in zip(desc.generators, perms)}
    systems = []
    for spec in (desc.system1, desc.system2):
        elements = tuple(_evaluate_word(group, named, w) for w in spec.words)
        sys = make_system(group, elements, base_genus=spec.base_genus)
        if spec.signature is not None and spec.signature != sys.signature:
            raise ValidationError(
                f"declared signature {spec.signature} != derived {sys.signature}"
            )
        require_valid(sys)
        systems.append(sys)
    return group, systems[0], systems[1]


# -- summaries ---------------------------------------------------------------


@dataclass(frozen=True)
class TableRowSummary:
    name: str
    group_order: int
    g1: int
    g2: int
    singularities: tuple[tuple[int, int, int], ...]  # (n, a_normalized, count)
    e: int
    ksq: int | None
    chi: int | None
    q: int
    pg: int | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "group_order": self.group_order,
            "g1": self.g1,
            "g2": self.g2,
            "singularities": [
                {"n": n, "a": a, "count": c} for n, a, c in self.singularities
            ],
            "e": self.e,
            "Ksq": self.ksq,
            "chi": self.chi,
            "q": self.q,
            "pg": self.pg,
        }


def run_invariants(desc: InputDescription, name: str = "", cap: int = DEFAULT_ORDER_CAP) -> TableRowSummary:
    group, sys1, sys2 = realize(desc, cap=cap)
    model = build_surface_model(sys1, sys2)
    inv = model.numerical_invariants()
    counts = Counter(normalized_key(p.type) for p in model.locus.points)
    sings = tuple(sorted((t.n, t.a, c) for t, c in counts.items()))
    return TableRowSummary(
        name=name,
        group_order=group.order,
        g1=model.g1,
        g2=model.g2,
        singularities=sings,
        e=inv.e,
        ksq=inv.ksq,
        chi=inv.chi,
        q=inv.q,
        pg=inv.pg,
    )


# -- formula mode ------------------------------------------------------------


@dataclass(frozen=True)
class FormulaRow:
    name: str
    group_order: int
    g1: int
    g2: int
    singularities: tuple[tuple[int, int, int], ...]  # (n, a, count)
    ksq: int | None = None


_SING_ITEM = re.compile(r"^(\d+)/(\d+)x(\d+)$")


def parse_singularity_multiset(text: str) -> tuple[tuple[int, int, int], ...]:
    """Parse "2/1x2+3/1x1" into ((2, 1, 2), (3, 1, 1)); empty means none."""
    text = text.strip()
    if not text:
        return ()
    items = []
    for chunk in text.split("+"):
        match = _SING_ITEM.match(chunk.strip())
        if not match:
            raise ParseError(f"bad singularity item {chunk!r} (expected n/axcount)")
        n, a, count = map(int, match.groups())
        try:
            SingularityType(n, a)  # validates n, a
        except ValidationError as exc:
            raise ParseError(f"bad singularity item {chunk!r}: {exc}") from None
        if count < 1:
            raise ParseError(f"bad count in {chunk!r}")
        items.append((n, a, count))
    return tuple(items)


def format_singularity_multiset(items) -> str:
    return "+".join(f"{n}/{a}x{c}" for n, a, c in items)


def parse_rows(text: str) -> list[FormulaRow]:
    import csv
    import io

    rows = []
    content = [
        line for line in io.StringIO(text) if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content:
        return []
    reader = csv.DictReader(content)
    required = {"name", "group_order", "g1", "g2", "singularities"}
    if reader.fieldnames is None or not required <= set(reader.fieldnames):
        raise ParseError(f"rows file must have columns {sorted(required)}")
    for record in reader:
        try:
            ksq_text = (record.get("ksq") or "").strip()
            rows.append(
                FormulaRow(
                    name=record["name"].strip(),
                    group_order=int(record["group_order"]),
                    g1=int(record["g1"]),
                    g2=int(record["g2"]),
                    singularities=parse_singularity_multiset(record["singularities"]),
                    ksq=int(ksq_text) if ksq_text else None,
                )
            )
        except (ValueError, KeyError) as exc:
            raise ParseError(f"bad row {record!r}: {exc}") from None
    return rows


def formula_invariants(row: FormulaRow) -> TableRowSummary:
    """Stratified Euler count from (|G|, g1, g2, singularity multiset); base
    quotients are assumed rational (q = 0), as in the P_g = 0 classification."""
    from .hj import string_length

    e = Fraction((2 - 2 * row.g1) * (2 - 2 * row.g2), row.group_order)
    sings = []
    for n, a, count in row.singularities:
        t = SingularityType(n, a)
        e += count * (1 - Fraction(1, n)) + count * string_length(t)
        key = normalized_key(t)
        sings.append((key.n, key.a, count))
    if e.denominator != 1:
        raise ValidationError(f"Euler number {e} is not an integer")
    chi = pg = None
    if row.ksq is not None:
        chi_f = Fraction(row.ksq + int(e), 12)
        if chi_f.denominator != 1 or chi_f <= 0:
            raise ValidationError(f"chi = (K^2 + e)/12 = {chi_f} is not a positive integer")
        chi = int(chi_f)
        pg = chi - 1
    return TableRowSummary(
        name=row.name,
        group_order=row.group_order,
        g1=row.g1,
        g2=row.g2,
        singularities=tuple(sorted(sings)),
        e=int(e),
        ksq=row.ksq,
        chi=chi,
        q=0,
        pg=pg,
    )


def fixture_path(name: str):
    from importlib.resources import files

    return files("pqsurf") / "fixtures" / name
