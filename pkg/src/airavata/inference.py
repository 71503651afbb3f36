"""Exact posterior queries over a Bayesian network.

query_marginal runs variable elimination: every CPD becomes a factor,
evidence is sliced out of each factor first, then non-target variables
are summed out one at a time along a heuristic elimination order, and
the single normalization happens at the very end.

brute_force_marginal answers the same question by materializing the full
joint and summing. It shares only the factor primitives with the
elimination path, which makes it a genuine differential oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import ContractError, InconsistentEvidenceError
from .factors import Factor, Variable, factor_marginalize, product_all, reduce_all
from .network import DEFAULT_JOINT_CAP, Network, network_joint

HEURISTICS = ("min-fill", "min-degree")

Evidence = Mapping[str, str]


@dataclass(frozen=True)
class Posterior:
    """Normalized distribution over one or more target variables.

    The table is flat in mixed-radix order with the first variable most
    significant, matching the factor convention.
    """

    variables: tuple[Variable, ...]
    table: tuple[float, ...]

    @property
    def variable(self) -> Variable:
        if len(self.variables) != 1:
            raise ContractError(
                f"posterior is joint over {[v.name for v in self.variables]}"
            )
        return self.variables[0]

    @property
    def probabilities(self) -> tuple[float, ...]:
        return self.table

    def probability(self, state: str) -> float:
        return self.table[self.variable.state_index(state)]

    def as_mapping(self) -> dict[str, float]:
        """State name to probability, single-variable posteriors only."""
        v = self.variable
        return {s: self.table[i] for i, s in enumerate(v.states)}

    def argmax(self) -> str:
        v = self.variable
        return v.states[int(np.argmax(self.table))]


def _check_query(net: Network, targets: Sequence[str], evidence: Evidence) -> tuple[str, ...]:
    targets = tuple(targets)
    if not targets:
        raise ContractError("at least one target variable is required")
    if len(set(targets)) != len(targets):
        raise ContractError(f"duplicate targets {list(targets)}")
    for name in targets:
        net.variable(name)
    for name, state in evidence.items():
        net.variable(name).state_index(state)
    overlap = sorted(set(targets) & set(evidence))
    if overlap:
        raise ContractError(f"variables {overlap} appear in both targets and evidence")
    return targets


def _moral_neighbors(net: Network, keep: set[str]) -> dict[str, set[str]]:
    """Adjacency of the moralized graph restricted to the kept variables.

    Each CPD couples its child with all parents; conditioning on
    evidence removes those variables from every factor, so the moral
    cliques are the kept portions of each family.
    """
    adj: dict[str, set[str]] = {n: set() for n in keep}
    for v in net.variables:
        family = [n for n in (v.name,) + net.parents_of(v.name) if n in keep]
        for a, b in combinations(family, 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def elimination_order(
    net: Network,
    targets: Sequence[str],
    evidence: Evidence = {},
    heuristic: str = "min-fill",
) -> list[str]:
    """Greedy elimination order over the evidence-reduced moral graph.

    min-fill scores a candidate by the number of neighbor pairs that are
    not yet adjacent; min-degree by its neighbor count. Ties break by
    ascending variable name. Eliminating a variable connects its
    remaining neighbors pairwise.
    """
    if heuristic not in HEURISTICS:
        raise ContractError(f"unknown heuristic {heuristic!r}, expected one of {HEURISTICS}")
    targets = _check_query(net, targets, evidence)
    keep = {v.name for v in net.variables} - set(evidence)
    adj = _moral_neighbors(net, keep)
    remaining = sorted(keep - set(targets))

    def fill_cost(name: str) -> int:
        nb = adj[name]
        return sum(1 for a, b in combinations(sorted(nb), 2) if b not in adj[a])

    order: list[str] = []
    while remaining:
        if heuristic == "min-fill":
            best = min(remaining, key=lambda n: (fill_cost(n), n))
        else:
            best = min(remaining, key=lambda n: (len(adj[n]), n))
        neighbors = sorted(adj[best])
        for a, b in combinations(neighbors, 2):
            adj[a].add(b)
            adj[b].add(a)
        for n in neighbors:
            adj[n].discard(best)
        del adj[best]
        remaining.remove(best)
        order.append(best)
    return order


def _finish(scope_order: Sequence[Variable], raw: Factor) -> Posterior:
    """Reorder to the canonical target order, check mass, normalize."""
    total = float(raw.values.sum())
    if total <= 0.0:
        raise InconsistentEvidenceError("evidence has zero probability under the model")
    axes = [raw.axis(v.name) for v in scope_order]
    table = np.transpose(raw.table(), axes).ravel() / total
    return Posterior(tuple(scope_order), tuple(float(x) for x in table))


def _target_variables(net: Network, targets: tuple[str, ...]) -> tuple[Variable, ...]:
    # declaration order keeps results independent of the caller's ordering
    wanted = set(targets)
    return tuple(v for v in net.variables if v.name in wanted)


def query_marginal(
    net: Network,
    targets: Iterable[str],
    evidence: Evidence = {},
    heuristic: str = "min-fill",
) -> Posterior:
    """Posterior over the targets given evidence, by variable elimination."""
    net.require_valid()
    targets = _check_query(net, tuple(targets), evidence)
    factors = [reduce_all(cpd.to_factor(), evidence) for cpd in net.cpds()]
    for name in elimination_order(net, targets, evidence, heuristic):
        touching = [f for f in factors if name in f.names()]
        rest = [f for f in factors if name not in f.names()]
        merged = product_all(touching)
        factors = rest + [factor_marginalize(merged, name)]
    return _finish(_target_variables(net, targets), product_all(factors))


def brute_force_marginal(
    net: Network,
    targets: Iterable[str],
    evidence: Evidence = {},
    cap: int = DEFAULT_JOINT_CAP,
) -> Posterior:
    """Same contract as query_marginal via full-joint enumeration."""
    net.require_valid()
    targets = _check_query(net, tuple(targets), evidence)
    joint = reduce_all(network_joint(net, cap), evidence)
    for name in sorted(set(joint.names()) - set(targets)):
        joint = factor_marginalize(joint, name)
    return _finish(_target_variables(net, targets), joint)
