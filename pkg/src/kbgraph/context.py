"""Short-term context: the epoch clock, the decaying token state, concurrent
intervals, co-activation, and context-modulated graph views.

Context is the fast, low-information half of the system.  It decays
geometrically each observation round, so the set of tokens present at any
moment is a compressed picture of "now".  Long-term associations may be
conditioned on context tokens; active_view() computes which edges a given
context switches on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInputError, NotFoundError

DEFAULT_T_MAX = 2**32


def normalize_token(token: str) -> str:
    """Context tokens match by exact string after trimming and lowercasing."""
    return token.strip().lower()


@dataclass(frozen=True)
class EpochClock:
    """A modular tick counter; wraps to zero at t_max."""

    t: int = 0
    t_max: int = DEFAULT_T_MAX

    def __post_init__(self):
        if self.t_max <= 1:
            raise InvalidInputError("clock modulus must exceed 1")
        if not 0 <= self.t < self.t_max:
            raise InvalidInputError("tick must lie in [0, t_max)")

    def tick(self, n: int = 1) -> "EpochClock":
        return EpochClock((self.t + n) % self.t_max, self.t_max)


def tick(clock: EpochClock) -> EpochClock:
    return clock.tick()


def time_key(t: int, period: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Cylindrical decomposition of a tick over nested bucket sizes.

    key[i] = (t // prod(period[:i])) % period[i], so period=[24, 7] maps a
    running hour count onto (hour-of-day, day-of-week).
    """
    if not period:
        raise InvalidInputError("period must name at least one bucket size")
    key = []
    stride = 1
    for size in period:
        if size < 1:
            raise InvalidInputError("bucket sizes must be >= 1")
        key.append((t // stride) % size)
        stride *= size
    return tuple(key)


@dataclass(frozen=True)
class ContextParams:
    """Tunables for the short-term context store."""

    capacity: int = 256
    eviction_threshold: float = 1e-3
    dominant_k: int = 4


class ContextState:
    """A decaying multiset of context tokens with freshness weights in (0, 1]."""

    def __init__(self, entries: dict[str, float] | None = None, capacity: int = 256):
        self.capacity = capacity
        self.entries: dict[str, float] = dict(entries or {})

    @classmethod
    def of(cls, tokens, capacity: int = 256) -> "ContextState":
        """A state holding the given tokens at full freshness."""
        entries = {normalize_token(t): 1.0 for t in tokens if normalize_token(t)}
        return cls(entries, capacity=capacity)

    def observe(
        self, tokens, ell: float, eviction_threshold: float = 1e-3
    ) -> "ContextState":
        """One observation round: decay everything by ell, refresh `tokens` to 1.

        Entries falling below the eviction threshold disappear; if the state
        overflows its capacity, the weakest tokens are dropped first.
        """
        if not 0.0 < ell < 1.0:
            raise InvalidInputError("retention ell must lie strictly in (0, 1)")
        entries = {t: w * ell for t, w in self.entries.items()}
        for token in tokens:
            token = normalize_token(token)
            if token:
                entries[token] = 1.0
        entries = {t: w for t, w in entries.items() if w >= eviction_threshold}
        if len(entries) > self.capacity:
            keep = sorted(entries.items(), key=lambda tw: (-tw[1], tw[0]))[: self.capacity]
            entries = dict(keep)
        return ContextState(entries, self.capacity)

    def tokens(self) -> frozenset[str]:
        return frozenset(self.entries)

    def dominant(self, k: int) -> list[str]:
        """The k freshest tokens (ties broken alphabetically)."""
        ranked = sorted(self.entries.items(), key=lambda tw: (-tw[1], tw[0]))
        return [t for t, _ in ranked[:k]]

    def __contains__(self, token: str) -> bool:
        return normalize_token(token) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContextState):
            return NotImplemented
        return self.capacity == other.capacity and self.entries == other.entries

    def __repr__(self) -> str:
        ranked = ", ".join(f"{t}:{w:.3g}" for t, w in sorted(self.entries.items()))
        return f"ContextState({{{ranked}}})"


@dataclass(frozen=True)
class ConcurrentInterval:
    """Concepts observed together within one tick count as simultaneous."""

    tick: int
    activated: frozenset[int] = field(default_factory=frozenset)


def co_activate(graph, interval: ConcurrentInterval, alias: str = "is close to") -> list[int]:
    """Link every pair of concepts activated in the same concurrent interval.

    Each unordered pair gains (or reinforces) a proximity edge stamped with
    the dominant context tokens of the moment.  Returns the touched edge ids
    in deterministic pair order.
    """
    from .graph import Provenance  # local import to avoid a module cycle

    for cid in interval.activated:
        if cid not in graph.concepts:
            raise NotFoundError(f"unknown concept id: {cid}")
    stamp = graph.context.dominant(graph.ctx_params.dominant_k)
    touched = []
    ordered = sorted(interval.activated)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            aid = graph.associate(
                a, alias, b,
                contexts=stamp,
                provenance=Provenance.CO_ACTIVATION,
                now=interval.tick,
            )
            touched.append(aid)
    return touched


class GraphView:
    """The associations a context switches on.

    An edge is visible when it is unconditional or when its context set
    intersects the tokens present in the state.  For traversal, a visible
    negated edge vetoes its positive counterparts over the same
    (from, to, kind) triple; negated edges are themselves never traversed.
    """

    def __init__(self, graph, state: ContextState):
        self.graph = graph
        self.state = state
        tokens = state.tokens()
        self.visible: set[int] = set()
        vetoes: set[tuple[int, int, str]] = set()
        for assoc in graph.assocs.values():
            if assoc.contexts and not (assoc.contexts & tokens):
                continue
            self.visible.add(assoc.id)
            link = graph.aliases[assoc.alias].link
            if link.negated:
                vetoes.add((assoc.from_id, assoc.to_id, link.kind.value))
        self.suppressed: set[int] = set()
        for aid in self.visible:
            assoc = graph.assocs[aid]
            link = graph.aliases[assoc.alias].link
            if not link.negated and (assoc.from_id, assoc.to_id, link.kind.value) in vetoes:
                self.suppressed.add(aid)

    def contains(self, assoc_id: int) -> bool:
        return assoc_id in self.visible

    def traversable(self, assoc_id: int) -> bool:
        if assoc_id not in self.visible or assoc_id in self.suppressed:
            return False
        assoc = self.graph.assocs[assoc_id]
        return not self.graph.aliases[assoc.alias].link.negated

    def steps_from(self, cid: int, reverse: bool = False):
        """Traversable one-hop steps as (next_node, story_view) pairs.

        Forward steps walk stored edge direction (both readings for symmetric
        proximity edges).  Reverse steps walk edges backwards, but the view
        returned is still the story-forward reading (next_node -> cid), so a
        reversed walk can be flipped into a normal story without relabelling.
        """
        from .linktypes import Kind

        out = []
        for assoc in self.graph.assocs.values():
            if not self.traversable(assoc.id):
                continue
            is_near = self.graph.aliases[assoc.alias].link.kind is Kind.NEAR
            if not reverse:
                if assoc.from_id == cid or (is_near and assoc.to_id == cid):
                    view = self.graph.view_from(assoc, cid)
                    out.append((view.neighbor, view))
            else:
                if assoc.to_id == cid or (is_near and assoc.from_id == cid):
                    other = assoc.from_id if assoc.to_id == cid else assoc.to_id
                    out.append((other, self.graph.view_from(assoc, other)))
        out.sort(key=lambda nv: (self.graph.concept_name(nv[0]), nv[1].label, nv[1].assoc_id))
        return out

    def adjacent(self, cid: int):
        """All visible, non-suppressed, positive edges incident to a concept,
        read from that concept (incoming ones under their reciprocal label)."""
        out = []
        for assoc in self.graph.assocs.values():
            if not self.traversable(assoc.id):
                continue
            if cid in (assoc.from_id, assoc.to_id):
                out.append(self.graph.view_from(assoc, cid))
        out.sort(key=lambda v: (self.graph.concept_name(v.neighbor), v.label, v.assoc_id))
        return out


def active_view(graph, state: ContextState | None = None) -> GraphView:
    """The graph as modulated by a context state (default: the graph's own)."""
    return GraphView(graph, graph.context if state is None else state)


def context_knowledge_ratio(graph, state: ContextState | None = None):
    """Diagnostic: entropy of context vs entropy of association weights.

    Returns (S_C, S_A, ratio) in bits; ratio is None when S_A is zero or the
    graph holds no associations.  A healthy split keeps S_C well below S_A.
    """
    from .learning import shannon_entropy

    state = graph.context if state is None else state

    def entropy_of(weights: list[float]) -> float:
        total = sum(weights)
        if total <= 0.0:
            return 0.0
        return shannon_entropy([w / total for w in weights])

    s_c = entropy_of(sorted(state.entries.values()))
    s_a = entropy_of(sorted(a.weight for a in graph.assocs.values()))
    ratio = s_c / s_a if s_a > 0.0 else None
    return s_c, s_a, ratio
