"""The four irreducible link kinds and their reciprocal/negation algebra.

Every association in the graph resolves, via its alias, to one of four
spacetime-flavoured kinds:

    NEAR       proximity / similarity        (self-reciprocal)
    FOLLOWS    causal order / dependency
    CONTAINS   aggregation / generalization
    EXPRESSES  property / representation

Each kind has a forward and a reciprocal reading, and each reading has a
negated mirror ("does not ...").  NEAR collapses its two directions, so the
algebra has 14 distinct canonical labels: 2 for NEAR and 4 for each of the
other three kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Kind(str, Enum):
    NEAR = "near"
    FOLLOWS = "follows"
    CONTAINS = "contains"
    EXPRESSES = "expresses"


class Direction(str, Enum):
    FORWARD = "fwd"
    RECIPROCAL = "recip"


@dataclass(frozen=True)
class LinkType:
    """A canonical edge label: kind, reading direction, and polarity."""

    kind: Kind
    direction: Direction = Direction.FORWARD
    negated: bool = False

    def __post_init__(self):
        # NEAR is its own reciprocal; store it in forward form only.
        if self.kind is Kind.NEAR and self.direction is Direction.RECIPROCAL:
            object.__setattr__(self, "direction", Direction.FORWARD)

    def reciprocal(self) -> "LinkType":
        """Flip the reading direction. Identity for NEAR. Involution."""
        if self.kind is Kind.NEAR:
            return self
        flipped = (
            Direction.RECIPROCAL
            if self.direction is Direction.FORWARD
            else Direction.FORWARD
        )
        return LinkType(self.kind, flipped, self.negated)

    def negate(self) -> "LinkType":
        """Flip polarity, keeping kind and direction. Involution."""
        return LinkType(self.kind, self.direction, not self.negated)

    def label(self) -> str:
        """Fallback human-readable label when no alias is registered."""
        base = _BASE_LABELS[(self.kind, self.direction)]
        return f"not:{base}" if self.negated else base


_BASE_LABELS = {
    (Kind.NEAR, Direction.FORWARD): "near",
    (Kind.FOLLOWS, Direction.FORWARD): "follows",
    (Kind.FOLLOWS, Direction.RECIPROCAL): "precedes",
    (Kind.CONTAINS, Direction.FORWARD): "contains",
    (Kind.CONTAINS, Direction.RECIPROCAL): "is a part of",
    (Kind.EXPRESSES, Direction.FORWARD): "expresses",
    (Kind.EXPRESSES, Direction.RECIPROCAL): "is expressed by",
}


def canonical_types() -> list[LinkType]:
    """All 14 distinct canonical labels, in deterministic order."""
    out: list[LinkType] = []
    for kind in Kind:
        for direction in (Direction.FORWARD, Direction.RECIPROCAL):
            if kind is Kind.NEAR and direction is Direction.RECIPROCAL:
                continue
            for negated in (False, True):
                out.append(LinkType(kind, direction, negated))
    return out


# Built-in alias vocabulary seeded into new graphs: the familiar readings of
# each kind (forward name, reciprocal name) plus the four negative forms.
# Tuples: (name, kind, direction, negated, reciprocal_name, propagating).
DEFAULT_ALIASES: list[tuple[str, Kind, Direction, bool, str | None, bool]] = [
    # NEAR family (reciprocal of a NEAR alias is its paired reading)
    ("near", Kind.NEAR, Direction.FORWARD, False, "near", True),
    ("is close to", Kind.NEAR, Direction.FORWARD, False, "is close to", True),
    ("is connected to", Kind.NEAR, Direction.FORWARD, False, "is connected to", True),
    ("is adjacent to", Kind.NEAR, Direction.FORWARD, False, "is adjacent to", True),
    ("is correlated with", Kind.NEAR, Direction.FORWARD, False, "is correlated with", True),
    ("approximates", Kind.NEAR, Direction.FORWARD, False, "is equivalent to", True),
    ("is similar to", Kind.NEAR, Direction.FORWARD, False, "is similar to", True),
    # FOLLOWS family
    ("depends on", Kind.FOLLOWS, Direction.FORWARD, False, "enables", True),
    ("is caused by", Kind.FOLLOWS, Direction.FORWARD, False, "causes", True),
    ("follows", Kind.FOLLOWS, Direction.FORWARD, False, "precedes", True),
    # CONTAINS family
    ("contains", Kind.CONTAINS, Direction.FORWARD, False, "is a part of", True),
    ("surrounds", Kind.CONTAINS, Direction.FORWARD, False, "is inside", True),
    ("generalizes", Kind.CONTAINS, Direction.FORWARD, False, "is generalized by", True),
    ("is a member of", Kind.CONTAINS, Direction.RECIPROCAL, False, "has member", True),
    ("occupies", Kind.CONTAINS, Direction.RECIPROCAL, False, "contains", True),
    ("is an aspect of", Kind.CONTAINS, Direction.RECIPROCAL, False, "generalizes", True),
    ("exemplifies", Kind.CONTAINS, Direction.RECIPROCAL, False, "generalizes", True),
    # EXPRESSES family
    ("expresses", Kind.EXPRESSES, Direction.FORWARD, False, "is expressed by", True),
    ("represents", Kind.EXPRESSES, Direction.FORWARD, False, "is represented by", True),
    ("characterizes", Kind.EXPRESSES, Direction.FORWARD, False, "is a property of", True),
    ("has name or value", Kind.EXPRESSES, Direction.FORWARD, False, "is the value of property", True),
    ("promises", Kind.EXPRESSES, Direction.FORWARD, False, None, True),
    # Negative forms
    ("is not close to", Kind.NEAR, Direction.FORWARD, True, None, True),
    ("does not lead to", Kind.FOLLOWS, Direction.FORWARD, True, None, True),
    ("does not generalize", Kind.CONTAINS, Direction.FORWARD, True, None, True),
    ("does not contain", Kind.CONTAINS, Direction.FORWARD, True, None, True),
    ("does not express", Kind.EXPRESSES, Direction.FORWARD, True, None, True),
]
