"""Concept/association store.

The Graph owns everything a saved store holds: named concepts, the alias
vocabulary, weighted context-conditioned associations, the epoch clock, the
short-term context state, and the learning parameters.

Mutation is single-writer: callers are expected to mutate from one thread or
process at a time (the CLI locks the store file for the duration of a
mutating command).  Read operations iterate over snapshots so they are safe
against concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .context import ContextParams, ContextState, EpochClock, normalize_token
from .errors import ConflictError, InvalidInputError, NotFoundError, UnknownAliasError
from .learning import LearningParams, reinforce
from .linktypes import DEFAULT_ALIASES, Direction, Kind, LinkType


class Provenance(str, Enum):
    """How an association entered the graph."""

    AUTO_CALIBRATED = "auto_calibrated"
    OBSERVED_CORRELATION = "observed_correlation"
    REPORTED = "reported"
    REPORTED_CALIBRATION = "reported_calibration"
    REPORTED_ENCAPSULATION = "reported_encapsulation"
    CO_ACTIVATION = "co_activation"
    INFERRED = "inferred"


# Co-activation and inferred edges start weaker than asserted ones: a link a
# system noticed on its own is closer to hearsay than to a confirmed report.
_ASSERTED = {
    Provenance.AUTO_CALIBRATED,
    Provenance.OBSERVED_CORRELATION,
    Provenance.REPORTED,
    Provenance.REPORTED_CALIBRATION,
    Provenance.REPORTED_ENCAPSULATION,
}


@dataclass
class Concept:
    id: int
    name: str
    created_tick: int = 0


@dataclass
class Alias:
    """A human-readable edge name resolving to one canonical link type.

    Non-propagating aliases are pinned to a single hop: story search will not
    chain them into longer inferences ("is father to" does not compose).
    """

    name: str
    link: LinkType
    propagating: bool = True
    reciprocal_name: Optional[str] = None


@dataclass
class Association:
    id: int
    from_id: int
    to_id: int
    alias: str
    contexts: frozenset[str]
    weight: float
    last_tick: int
    provenance: Provenance

    def key(self) -> tuple[int, int, str, frozenset[str]]:
        return (self.from_id, self.to_id, self.alias, self.contexts)


@dataclass(frozen=True)
class EdgeView:
    """An association as seen from one of its endpoints."""

    assoc_id: int
    neighbor: int
    label: str
    link: LinkType
    weight: float
    contexts: frozenset[str]
    provenance: Provenance
    outgoing: bool
    propagating: bool = True


class Graph:
    def __init__(
        self,
        params: LearningParams | None = None,
        ctx_params: ContextParams | None = None,
        clock: EpochClock | None = None,
        seed_aliases: bool = True,
    ):
        self.params = params or LearningParams()
        self.ctx_params = ctx_params or ContextParams()
        self.clock = clock or EpochClock()
        self.context = ContextState(capacity=self.ctx_params.capacity)
        self.concepts: dict[int, Concept] = {}
        self.aliases: dict[str, Alias] = {}
        self.assocs: dict[int, Association] = {}
        self._by_name: dict[str, int] = {}
        self._by_key: dict[tuple[int, int, str, frozenset[str]], int] = {}
        self._next_concept_id = 1
        self._next_assoc_id = 1
        if seed_aliases:
            self.seed_default_aliases()

    # -- concepts ----------------------------------------------------------

    def add_concept(self, name: str) -> int:
        """Insert a concept, or return the existing id for this name."""
        name = name.strip()
        if not name:
            raise InvalidInputError("concept name must be nonempty")
        existing = self._by_name.get(name)
        if existing is not None:
            return existing
        cid = self._next_concept_id
        self._next_concept_id += 1
        self.concepts[cid] = Concept(id=cid, name=name, created_tick=self.clock.t)
        self._by_name[name] = cid
        return cid

    def concept_id(self, name: str) -> int:
        cid = self._by_name.get(name.strip())
        if cid is None:
            raise NotFoundError(f"unknown concept: {name!r}")
        return cid

    def concept_name(self, cid: int) -> str:
        return self._concept(cid).name

    def has_concept(self, name: str) -> bool:
        return name.strip() in self._by_name

    def remove_concept(self, cid: int) -> None:
        """Drop a concept and all its edges. The id is never reused."""
        concept = self._concept(cid)
        for aid in [a.id for a in self.assocs.values() if cid in (a.from_id, a.to_id)]:
            assoc = self.assocs.pop(aid)
            self._by_key.pop(assoc.key(), None)
        del self.concepts[cid]
        del self._by_name[concept.name]

    def _concept(self, cid: int) -> Concept:
        try:
            return self.concepts[cid]
        except KeyError:
            raise NotFoundError(f"unknown concept id: {cid}") from None

    # -- aliases -----------------------------------------------------------

    def seed_default_aliases(self) -> None:
        for name, kind, direction, negated, recip, prop in DEFAULT_ALIASES:
            link = LinkType(kind, direction, negated)
            self._put_alias(name, link, prop, recip)
            if recip is not None and recip != name:
                self._put_alias(recip, link.reciprocal(), prop, name)

    def register_alias(
        self,
        name: str,
        link: LinkType,
        propagating: bool = True,
        reciprocal_name: str | None = None,
    ) -> Alias:
        """Register (or update) an alias for a canonical link type.

        Re-registering with the same link type is allowed and may change the
        propagating flag; re-registering with a different type conflicts.
        """
        alias = self._put_alias(name, link, propagating, reciprocal_name)
        if reciprocal_name is not None and reciprocal_name != alias.name:
            self._put_alias(reciprocal_name, link.reciprocal(), propagating, alias.name)
        return alias

    def _put_alias(
        self, name: str, link: LinkType, propagating: bool, reciprocal_name: str | None
    ) -> Alias:
        name = name.strip()
        if not name:
            raise InvalidInputError("alias name must be nonempty")
        existing = self.aliases.get(name)
        if existing is not None:
            if existing.link != link:
                raise ConflictError(
                    f"alias {name!r} already registered as {existing.link.label()!r}"
                )
            existing.propagating = propagating
            if reciprocal_name is not None:
                existing.reciprocal_name = reciprocal_name
            return existing
        alias = Alias(name=name, link=link, propagating=propagating, reciprocal_name=reciprocal_name)
        self.aliases[name] = alias
        return alias

    def alias(self, name: str) -> Alias:
        found = self.aliases.get(name.strip())
        if found is None:
            raise UnknownAliasError(f"unknown alias: {name!r}")
        return found

    # -- associations ------------------------------------------------------

    def associate(
        self,
        from_id: int,
        alias_name: str,
        to_id: int,
        contexts: Iterable[str] = (),
        provenance: Provenance = Provenance.REPORTED,
        now: int | None = None,
    ) -> int:
        """Assert an association; re-asserting the same key reinforces it."""
        aid, _ = self.associate_ex(from_id, alias_name, to_id, contexts, provenance, now)
        return aid

    def associate_ex(
        self,
        from_id: int,
        alias_name: str,
        to_id: int,
        contexts: Iterable[str] = (),
        provenance: Provenance = Provenance.REPORTED,
        now: int | None = None,
    ) -> tuple[int, bool]:
        """Like associate(), also reporting whether a new edge was created."""
        self._concept(from_id)
        self._concept(to_id)
        if from_id == to_id:
            raise InvalidInputError("self-loop associations are not allowed")
        alias = self.alias(alias_name)
        ctx = frozenset(normalize_token(t) for t in contexts if normalize_token(t))
        if alias.link.kind is Kind.NEAR and from_id > to_id:
            # NEAR is symmetric: normalize endpoint order so the two readings
            # of the same proximity land on a single stored edge.
            from_id, to_id = to_id, from_id
        now = self.clock.t if now is None else now
        key = (from_id, to_id, alias.name, ctx)
        existing = self._by_key.get(key)
        if existing is not None:
            reinforce(self, existing, now=now)
            return existing, False
        aid = self._next_assoc_id
        self._next_assoc_id += 1
        w0 = self._initial_weight(provenance)
        self.assocs[aid] = Association(
            id=aid,
            from_id=from_id,
            to_id=to_id,
            alias=alias.name,
            contexts=ctx,
            weight=w0,
            last_tick=now,
            provenance=provenance,
        )
        self._by_key[key] = aid
        return aid, True

    def _initial_weight(self, provenance: Provenance) -> float:
        if provenance is Provenance.CO_ACTIVATION:
            return self.params.w0_co_activation
        if provenance is Provenance.INFERRED:
            return self.params.w0_inferred
        assert provenance in _ASSERTED
        return self.params.w0_asserted

    def assoc(self, assoc_id: int) -> Association:
        try:
            return self.assocs[assoc_id]
        except KeyError:
            raise NotFoundError(f"unknown association id: {assoc_id}") from None

    def set_weight(self, assoc_id: int, weight: float) -> None:
        if not 0.0 <= weight <= 1.0:
            raise InvalidInputError("weight must lie in [0, 1]")
        self.assoc(assoc_id).weight = weight

    def view_from(self, assoc: Association, node: int) -> EdgeView:
        """How `assoc` reads from one of its endpoints."""
        alias = self.aliases[assoc.alias]
        if assoc.from_id == node:
            link, label, neighbor, outgoing = alias.link, alias.name, assoc.to_id, True
        elif assoc.to_id == node:
            link = alias.link.reciprocal()
            label = alias.reciprocal_name or link.label()
            neighbor, outgoing = assoc.from_id, False
        else:
            raise InvalidInputError("node is not an endpoint of this association")
        return EdgeView(
            assoc_id=assoc.id,
            neighbor=neighbor,
            label=label,
            link=link,
            weight=assoc.weight,
            contexts=assoc.contexts,
            provenance=assoc.provenance,
            outgoing=outgoing,
            propagating=alias.propagating,
        )

    def neighbors(
        self,
        cid: int,
        kind: Kind | None = None,
        direction: Direction | None = None,
        negated: bool | None = None,
        alias: str | None = None,
        context: Iterable[str] | None = None,
    ) -> list[tuple[int, EdgeView]]:
        """Adjacent concepts with the edge as read from `cid`.

        Incoming edges are reported under their reciprocal label.  Order is
        deterministic: by neighbor id, then label, then association id.
        """
        self._concept(cid)
        tokens = None
        if context is not None:
            tokens = {normalize_token(t) for t in context}
        views: list[tuple[int, EdgeView]] = []
        for assoc in self.assocs.values():
            if cid not in (assoc.from_id, assoc.to_id):
                continue
            view = self.view_from(assoc, cid)
            if kind is not None and view.link.kind is not kind:
                continue
            if direction is not None and view.link.direction is not direction:
                continue
            if negated is not None and view.link.negated is not negated:
                continue
            if alias is not None and view.label != alias:
                continue
            if tokens is not None and assoc.contexts and not (assoc.contexts & tokens):
                continue
            views.append((view.neighbor, view))
        views.sort(key=lambda nv: (nv[0], nv[1].label, nv[1].assoc_id))
        return views

    # -- equality (used by persistence round-trip checks) -------------------

    def _state(self):
        return (
            self.params,
            self.ctx_params,
            self.clock,
            self.context,
            self.concepts,
            {k: (a.name, a.link, a.propagating, a.reciprocal_name) for k, a in self.aliases.items()},
            self.assocs,
            self._next_concept_id,
            self._next_assoc_id,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._state() == other._state()
