"""Numeric learning kernel and information metrics.

Edge weights evolve by one convex update rule: new = (1-ell)*sample + ell*old.
Unrefreshed knowledge therefore attenuates geometrically, by ell per round,
which lets decay be applied lazily from an edge's last-touched tick instead
of by sweeping the whole store every tick.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError, NotFoundError


@dataclass(frozen=True)
class LearningParams:
    """Graph-wide learning constants.

    ell: retention factor per round, in (0, 1); higher means slower forgetting.
    beta: per-hop certainty attenuation for inference chains, in (0, 1).
    w0_*: initial weights by provenance; hearsay starts weaker than assertion.
    """

    ell: float = 0.5
    beta: float = 0.75
    log_base: float = 2.0
    w0_asserted: float = 0.5
    w0_co_activation: float = 0.1
    w0_inferred: float = 0.3

    def __post_init__(self):
        if not 0.0 < self.ell < 1.0:
            raise InvalidInputError("ell must lie strictly in (0, 1)")
        if not 0.0 < self.beta < 1.0:
            raise InvalidInputError("beta must lie strictly in (0, 1)")
        for w in (self.w0_asserted, self.w0_co_activation, self.w0_inferred):
            if not 0.0 <= w <= 1.0:
                raise InvalidInputError("initial weights must lie in [0, 1]")


def learn_update(prev: float, sample: float, ell: float) -> float:
    """One convex learning step: (1-ell)*sample + ell*prev."""
    if not 0.0 <= prev <= 1.0 or not 0.0 <= sample <= 1.0:
        raise InvalidInputError("learn_update operands must lie in [0, 1]")
    if not 0.0 < ell < 1.0:
        raise InvalidInputError("ell must lie strictly in (0, 1)")
    return (1.0 - ell) * sample + ell * prev


def decay_factor(age: int, ell: float) -> float:
    """Residual trust in a value unrefreshed for `age` rounds: ell**age."""
    if age < 0:
        raise InvalidInputError("age must be non-negative")
    if not 0.0 < ell < 1.0:
        raise InvalidInputError("ell must lie strictly in (0, 1)")
    return ell**age


def reinforce(graph, assoc_id: int, now: int | None = None) -> float:
    """Re-confirm an association at tick `now`.

    The stored weight is first aged by ell**(now - last_tick) (modular in the
    epoch clock), then pulled toward 1.0 by one learning step.
    """
    assoc = graph.assoc(assoc_id)
    ell = graph.params.ell
    now = graph.clock.t if now is None else now
    age = (now - assoc.last_tick) % graph.clock.t_max
    effective_old = assoc.weight * decay_factor(age, ell)
    assoc.weight = learn_update(effective_old, 1.0, ell)
    assoc.last_tick = now
    return assoc.weight


def anneal(graph, lam: float) -> int:
    """Diffuse weight toward the mean of edges sharing an endpoint.

    One synchronous pass: every mean is computed from the pre-pass weights.
    Edges with no sharing neighbors are untouched.  Returns how many edge
    weights changed.
    """
    if not 0.0 <= lam <= 1.0:
        raise InvalidInputError("lambda must lie in [0, 1]")
    incident: dict[int, list[int]] = {}
    for assoc in graph.assocs.values():
        incident.setdefault(assoc.from_id, []).append(assoc.id)
        incident.setdefault(assoc.to_id, []).append(assoc.id)
    before = {aid: a.weight for aid, a in graph.assocs.items()}
    changed = 0
    for assoc in graph.assocs.values():
        sharing = {
            other
            for node in (assoc.from_id, assoc.to_id)
            for other in incident[node]
            if other != assoc.id
        }
        if not sharing:
            continue
        mean = sum(before[o] for o in sharing) / len(sharing)
        new = (1.0 - lam) * before[assoc.id] + lam * mean
        if new != assoc.weight:
            assoc.weight = new
            changed += 1
    return changed


def shannon_entropy(probabilities: Sequence[float], base: float = 2.0) -> float:
    """-sum(p*log p) with 0*log 0 taken as 0."""
    validate_distribution(probabilities)
    if base <= 1.0:
        raise InvalidInputError("log base must exceed 1")
    return -sum(p * math.log(p, base) for p in probabilities if p > 0.0)


def validate_distribution(probabilities: Sequence[float], tol: float = 1e-9) -> None:
    if not len(probabilities):
        raise InvalidInputError("distribution must be nonempty")
    if any(p < 0.0 for p in probabilities):
        raise InvalidInputError("probabilities must be non-negative")
    if abs(sum(probabilities) - 1.0) > tol:
        raise InvalidInputError("probabilities must sum to 1")


def significance(probabilities: Sequence[float], alphabet_size: int) -> float:
    """How far a distribution sits below maximum entropy, in bits.

    Flat distributions carry no significance; a lone certain symbol carries
    the full log2(alphabet) of it.
    """
    validate_distribution(probabilities)
    support = sum(1 for p in probabilities if p > 0.0)
    if alphabet_size < support:
        raise InvalidInputError("alphabet size smaller than distribution support")
    return math.log2(alphabet_size) - shannon_entropy(probabilities, base=2.0)


def hamming(a: Sequence, b: Sequence) -> int:
    """Number of positions at which two equal-length sequences differ."""
    if len(a) != len(b):
        raise InvalidInputError("hamming distance requires equal lengths")
    return sum(1 for x, y in zip(a, b) if x != y)


def hop_distance(graph, a: int, b: int, **filters) -> int | None:
    """Shortest hop count between two concepts over undirected adjacency.

    Keyword filters are forwarded to Graph.neighbors().  Returns None when
    the concepts are disconnected.
    """
    graph.concept_name(a)
    graph.concept_name(b)
    if a == b:
        return 0
    seen = {a}
    frontier = deque([(a, 0)])
    while frontier:
        node, dist = frontier.popleft()
        for neighbor, _ in graph.neighbors(node, **filters):
            if neighbor == b:
                return dist + 1
            if neighbor not in seen:
                seen.add(neighbor)
                frontier.append((neighbor, dist + 1))
    return None


def nyquist_ok(sample_interval: int, change_interval: int) -> bool:
    """True when sampling runs at least twice as fast as the change it tracks."""
    if sample_interval < 1 or change_interval < 1:
        raise InvalidInputError("intervals must be at least 1 tick")
    return change_interval >= 2 * sample_interval
