"""Level decomposition of a finite poset and the linear order it induces.

Stripping the maximal elements of a poset, then the maximal elements of what
remains, and so on, partitions the carrier into antichain levels; the level
index orders the quotient linearly.  The primal direction strips maximal
elements (level 0 is the top layer), the dual direction strips minimal
elements (level 0 is the bottom layer).  Both directions produce exactly
``longest_chain_length`` levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyPosetError
from .poset import Poset

PRIMAL = "primal"
DUAL = "dual"
DIRECTIONS = (PRIMAL, DUAL)


def _check_direction(direction):
    if direction not in DIRECTIONS:
        raise ValueError(f"direction must be one of {DIRECTIONS}, got {direction!r}")


@dataclass(frozen=True)
class Linearisation:
    """An ordered partition of a poset into levels.

    ``levels[i]`` is the set stripped at round ``i``, so for the primal
    direction index 0 holds the maximal elements and greater indices sit
    lower in the original order, while for the dual direction index 0 holds
    the minimal elements.  ``class_of`` maps each element to its level index.
    The induced linear order always reads smallest class first; use
    :meth:`rank` to translate a level index into that ascending order.
    """

    source: Poset
    direction: str
    levels: tuple
    class_of: dict

    @property
    def num_classes(self):
        return len(self.levels)

    def project(self, x):
        """Level index of ``x``."""
        self.source._require(x)
        return self.class_of[x]

    def rank(self, level_index):
        """Position of a level in the ascending linear order (0 = least class)."""
        if self.direction == PRIMAL:
            return len(self.levels) - 1 - level_index
        return level_index

    def rank_of(self, x):
        return self.rank(self.project(x))

    def compare(self, x, y):
        """Compare two elements in the induced linear order.

        Returns one of ``"less"``, ``"equal"`` or ``"greater"``.
        """
        rx = self.rank_of(x)
        ry = self.rank_of(y)
        if rx < ry:
            return "less"
        if rx > ry:
            return "greater"
        return "equal"

    def classes_ascending(self):
        """Classes as lists, least class first, members in declaration order."""
        ordered = self.levels if self.direction == DUAL else tuple(reversed(self.levels))
        return [sorted(level, key=self.source.position) for level in ordered]


def compute_levels(p, direction=PRIMAL):
    """Compute the level decomposition of ``p`` in the given direction.

    Implemented as longest-path layering over the cover relation, which
    agrees with round-by-round stripping: an element's level is the length
    (in cover steps) of the longest chain from it to the stripped end.
    Raises ``EmptyPosetError`` on an empty poset.
    """
    _check_direction(direction)
    if len(p) == 0:
        raise EmptyPosetError("cannot linearise an empty poset")
    if direction == PRIMAL:
        successors = p.covers_above
        processed_before = p.above
    else:
        successors = p.covers_below
        processed_before = p.below
    order = sorted(p.elements, key=lambda x: len(processed_before(x)))
    class_of = {}
    for x in order:
        class_of[x] = 1 + max((class_of[y] for y in successors(x)), default=-1)
    buckets = [[] for _ in range(1 + max(class_of.values()))]
    for x in p.elements:
        buckets[class_of[x]].append(x)
    return Linearisation(p, direction, tuple(frozenset(b) for b in buckets), class_of)


def satisfies_elcc(p):
    """True iff all maximal chains of ``p`` have the same number of elements.

    Decided without chain enumeration.  Every maximal chain is a cover walk
    from a minimal to a maximal element, and the dual level of an element is
    the longest cover walk up to it from a minimal one.  All maximal chains
    share one length exactly when every cover step raises the dual level by
    exactly one (so all walks into an element have equal length) and every
    maximal element sits on the top dual level.
    """
    dual = compute_levels(p, DUAL)
    grade = dual.class_of
    for x, y in p.cover_pairs:
        if grade[y] != grade[x] + 1:
            return False
    top = dual.num_classes - 1
    return all(grade[x] == top for x in p.maximal_elements())


def linearisations_equivalent(p):
    """True iff the primal and dual linearisations of ``p`` coincide.

    They coincide exactly when the dual levels, read in reverse, equal the
    primal levels: then the partitions match and the two linear orders agree
    on every pair.  Equal maximal chain lengths force this coincidence, but
    not conversely: the two decompositions of a poset can coincide even
    though some maximal chain is short (see ``satisfies_elcc``).
    """
    primal = compute_levels(p, PRIMAL)
    dual = compute_levels(p, DUAL)
    return tuple(reversed(primal.levels)) == dual.levels
