"""File formats, deterministic JSON emission, and interval ranking.

All formats are UTF-8 and line-oriented; a ``#`` starts a comment that runs
to the end of the line, blank lines are ignored.

Poset files::

    elem NAME          # declare an element
    NAME1 < NAME2      # NAME1 is strictly below NAME2

Elements may also be introduced implicitly by edge lines; declaration order
is order of first appearance.  Repeating an edge line is harmless, repeating
an ``elem`` line is a duplicate declaration.

Mapping files::

    arity N
    x1 x2 ... xN -> y

Scores files::

    item lo hi         # lo and hi are decimals with lo <= hi

Ranks files::

    name rank          # rank is an integer; every element needs exactly one

Scores are compared exactly: the decimal strings are parsed to rationals, so
ordering never depends on floating point rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyInputError, ParseError
from .levels import PRIMAL, Linearisation, _check_direction, compute_levels
from .mappings import ClassMapping, MappingTable
from .poset import build_poset


def _logical_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _check_token(name, lineno):
    if "<" in name or "#" in name:
        raise ParseError(f"invalid element name {name!r}", lineno)


def parse_poset(text):
    """Parse a poset file into a validated poset."""
    declared = []
    seen = set()
    pairs = []
    for lineno, line in _logical_lines(text):
        fields = line.split()
        if fields[0] == "elem":
            if len(fields) != 2:
                raise ParseError("expected 'elem NAME'", lineno)
            name = fields[1]
            _check_token(name, lineno)
            declared.append(name)
            seen.add(name)
        elif len(fields) == 3 and fields[1] == "<":
            lower, upper = fields[0], fields[2]
            for name in (lower, upper):
                _check_token(name, lineno)
                if name not in seen:
                    declared.append(name)
                    seen.add(name)
            pairs.append((lower, upper))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    return build_poset(declared, pairs)


def render_poset(p):
    """Render a poset in the poset file format; inverse of :func:`parse_poset`."""
    lines = [f"elem {x}" for x in p.elements]
    covers = sorted(p.cover_pairs, key=lambda e: (p.position(e[0]), p.position(e[1])))
    lines.extend(f"{x} < {y}" for x, y in covers)
    return "\n".join(lines) + "\n"


def mapping_arity(text):
    """Read the arity header of a mapping file without parsing the rows."""
    for lineno, line in _logical_lines(text):
        fields = line.split()
        if len(fields) != 2 or fields[0] != "arity":
            raise ParseError("expected header 'arity N'", lineno)
        try:
            arity = int(fields[1])
        except ValueError:
            raise ParseError(f"arity is not an integer: {fields[1]!r}", lineno) from None
        if arity < 1:
            raise ParseError(f"arity must be positive, got {arity}", lineno)
        return arity
    raise ParseError("empty mapping file", 1)


def parse_mapping(text, domain, codomain, max_entries=None):
    """Parse a mapping file into a total mapping table between two posets."""
    lines = list(_logical_lines(text))
    arity = mapping_arity(text)
    entries = {}
    for lineno, line in lines[1:]:
        fields = line.split()
        if len(fields) != arity + 2 or fields[arity] != "->":
            raise ParseError(
                f"expected {arity} argument(s), '->' and a value", lineno
            )
        key = tuple(fields[:arity])
        value = fields[arity + 1]
        if key in entries and entries[key] != value:
            raise ParseError(
                f"conflicting rows for tuple ({', '.join(key)})", lineno
            )
        entries[key] = value
    return MappingTable(domain, arity, codomain, entries, max_entries=max_entries)


@dataclass(frozen=True)
class ScoredItem:
    """An external item carrying an interval score [lo, hi]."""

    item: str
    lo: Fraction
    hi: Fraction
    lo_text: str
    hi_text: str


def parse_scores(text):
    """Parse a scores file into a list of scored items, in file order."""
    items = []
    names = set()
    for lineno, line in _logical_lines(text):
        fields = line.split()
        if len(fields) != 3:
            raise ParseError("expected 'item lo hi'", lineno)
        name, lo_text, hi_text = fields
        if name in names:
            raise ParseError(f"duplicate item {name!r}", lineno)
        try:
            lo = Fraction(lo_text)
            hi = Fraction(hi_text)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"scores must be decimals: {line!r}", lineno) from None
        if lo > hi:
            raise ParseError(f"lo must not exceed hi in {line!r}", lineno)
        names.add(name)
        items.append(ScoredItem(name, lo, hi, lo_text, hi_text))
    return items


def parse_ranks(text, p):
    """Parse a ranks file into a complete element-to-integer map for ``p``."""
    ranks = {}
    for lineno, line in _logical_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError("expected 'name rank'", lineno)
        name, rank_text = fields
        if name not in p:
            raise ParseError(f"unknown element {name!r}", lineno)
        if name in ranks:
            raise ParseError(f"duplicate rank for {name!r}", lineno)
        try:
            ranks[name] = int(rank_text)
        except ValueError:
            raise ParseError(f"rank is not an integer: {rank_text!r}", lineno) from None
    for x in p.elements:
        if x not in ranks:
            raise ParseError(f"no rank given for element {x!r}", 1)
    return ranks


@dataclass(frozen=True)
class RankGroup:
    """One tie group of the ranking: items plus their interval values."""

    items: tuple
    intervals: tuple


@dataclass(frozen=True)
class Ranking:
    direction: str
    k: int
    groups: tuple


def rank_items(items, k, direction=PRIMAL):
    """Rank interval-scored items by dominance, best class first.

    Builds the dominance order on the distinct interval values ([a, b]
    dominates [c, d] downward iff c <= a and d <= b), linearises it in the
    given direction and emits whole classes in descending class order until
    at least ``k`` items are out.  Classes are never split, so the output may
    exceed ``k`` items.
    """
    _check_direction(direction)
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    items = list(items)
    if not items:
        raise EmptyInputError("no scored items to rank")
    name_of = {}
    texts = {}
    values = []
    for it in items:
        value = (it.lo, it.hi)
        if value not in name_of:
            name_of[value] = f"{it.lo_text},{it.hi_text}"
            texts[name_of[value]] = (it.lo_text, it.hi_text)
            values.append(value)
    names = [name_of[v] for v in values]
    pairs = [
        (name_of[u], name_of[v])
        for u in values
        for v in values
        if u != v and u[0] <= v[0] and u[1] <= v[1]
    ]
    lin = compute_levels(build_poset(names, pairs), direction)
    groups = []
    emitted = 0
    for cls in reversed(lin.classes_ascending()):
        members = set(cls)
        group_items = tuple(
            it.item for it in items if name_of[(it.lo, it.hi)] in members
        )
        groups.append(RankGroup(group_items, tuple(texts[name] for name in cls)))
        emitted += len(group_items)
        if emitted >= k:
            break
    return Ranking(direction, k, tuple(groups))


def emit_json(value):
    """Serialise a linearisation, class mapping or ranking to canonical JSON.

    Output is byte-identical across runs: keys appear in a fixed order,
    classes in ascending linear order, and members of a class in declaration
    order.
    """
    if isinstance(value, Linearisation):
        payload = {"direction": value.direction, "classes": value.classes_ascending()}
    elif isinstance(value, ClassMapping):
        dom, cod = value.domain_lin, value.codomain_lin
        ordered = sorted(
            value.table, key=lambda key: tuple(dom.rank(i) for i in key)
        )
        payload = {
            "mode": value.mode,
            "arity": value.arity,
            "domain": {"direction": dom.direction, "classes": dom.classes_ascending()},
            "codomain": {
                "direction": cod.direction,
                "classes": cod.classes_ascending(),
            },
            "entries": [
                [[dom.rank(i) for i in key], cod.rank(value.table[key])]
                for key in ordered
            ],
            "monotone": value.is_monotone(),
            "antitone": value.is_antitone(),
        }
    elif isinstance(value, Ranking):
        payload = {
            "direction": value.direction,
            "k": value.k,
            "groups": [
                {
                    "items": list(g.items),
                    "intervals": [[lo, hi] for lo, hi in g.intervals],
                }
                for g in value.groups
            ],
        }
    else:
        raise TypeError(f"cannot emit {type(value).__name__} as JSON")
    return json.dumps(payload, separators=(",", ":"))
