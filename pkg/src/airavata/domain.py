"""The model-extraction threat model as a concrete Bayesian network.

Five binary attack variables sit above six binary model attributes; a
three-state knowledge variable hangs below all attributes. Each attack
reveals a fixed set of attributes, and the knowledge class thresholds on
how many of the six attributes an attack combination reveals.

All names here double as dataset column names and as wire-format field
names, so they stay lowercase snake_case throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContractError, UnknownVariableError
from .factors import Variable
from .inference import Posterior, query_marginal
from .learning import Dataset, EquivalentSamplePrior, Prior, dataset_from_csv, fit_bayesian
from .network import Network, Skeleton

ATTACKS: tuple[str, ...] = (
    "hardware_sc",
    "power_sc",
    "ml_vs_ml",
    "timing_sc",
    "steal_function",
)

ATTRIBUTES: tuple[str, ...] = (
    "obj_hyper_param",
    "parameters",
    "depth",
    "activation",
    "nodes",
    "layer_type",
)

KNOWLEDGE = "knowledge"
KNOWLEDGE_CLASSES: tuple[str, ...] = ("low", "medium", "high")
BINARY_STATES: tuple[str, ...] = ("no", "yes")

# what each attack reveals, in the order the edges are declared
ATTACK_CHILDREN: dict[str, tuple[str, ...]] = {
    "steal_function": ("obj_hyper_param", "parameters"),
    "timing_sc": ("depth",),
    "power_sc": ("parameters", "depth", "activation", "nodes"),
    "ml_vs_ml": ("depth", "layer_type", "nodes", "activation"),
    "hardware_sc": ("layer_type", "depth", "nodes", "activation"),
}

# edge declaration order fixes every CPD's parent order
_EDGE_GROUPS: tuple[str, ...] = (
    "steal_function",
    "timing_sc",
    "power_sc",
    "ml_vs_ml",
    "hardware_sc",
)

ADVERSARIES: dict[int, tuple[str, ...]] = {
    1: ("ml_vs_ml", "timing_sc", "steal_function"),  # remote API access only
    2: ("hardware_sc", "power_sc"),  # physical access, no API
    3: ATTACKS,  # both
}

CANONICAL_PRIOR = EquivalentSamplePrior(5.0)


def canonical_variables() -> tuple[Variable, ...]:
    binary = [Variable(name, BINARY_STATES) for name in ATTACKS + ATTRIBUTES]
    return tuple(binary) + (Variable(KNOWLEDGE, KNOWLEDGE_CLASSES),)


def canonical_skeleton() -> Skeleton:
    edges: list[tuple[str, str]] = []
    for attack in _EDGE_GROUPS:
        for child in ATTACK_CHILDREN[attack]:
            edges.append((attack, child))
    for attribute in ATTRIBUTES:
        edges.append((attribute, KNOWLEDGE))
    return Skeleton(canonical_variables(), edges)


def _check_attacks(combo: Iterable[str]) -> tuple[str, ...]:
    selected = list(combo)
    unknown = [a for a in selected if a not in ATTACKS]
    if unknown:
        raise UnknownVariableError(f"unknown attack names {unknown}; attacks are {list(ATTACKS)}")
    if len(set(selected)) != len(selected):
        raise ContractError(f"duplicate attacks in {selected}")
    # canonical order regardless of how the caller listed them
    return tuple(a for a in ATTACKS if a in set(selected))


def inferred_attributes(combo: Iterable[str]) -> tuple[str, ...]:
    """Union of the selected attacks' revealed attributes, canonical order."""
    selected = _check_attacks(combo)
    revealed = set()
    for attack in selected:
        revealed.update(ATTACK_CHILDREN[attack])
    return tuple(a for a in ATTRIBUTES if a in revealed)


def knowledge_class(n: int) -> str:
    """Threshold the number of revealed attributes into low/medium/high."""
    if not 0 <= n <= len(ATTRIBUTES):
        raise ContractError(f"attribute count {n} outside [0, {len(ATTRIBUTES)}]")
    if n == 6:
        return "high"
    if n >= 3:
        return "medium"
    return "low"


def generate_dataset() -> Dataset:
    """One row per attack subset, 32 in all.

    Rows enumerate subsets in mixed-radix order with hardware_sc most
    significant and no < yes; attributes are yes exactly when some
    selected attack reveals them; the knowledge column thresholds the
    revealed-attribute count.
    """
    variables = canonical_variables()
    rows = []
    for index in range(2 ** len(ATTACKS)):
        bits = {
            attack: (index >> (len(ATTACKS) - 1 - i)) & 1 for i, attack in enumerate(ATTACKS)
        }
        combo = [a for a in ATTACKS if bits[a]]
        revealed = set(inferred_attributes(combo))
        row = [bits[a] for a in ATTACKS]
        row += [1 if a in revealed else 0 for a in ATTRIBUTES]
        row.append(KNOWLEDGE_CLASSES.index(knowledge_class(len(revealed))))
        rows.append(tuple(row))
    return Dataset(variables, rows)


def load_canonical_dataset(text: str) -> Dataset:
    """Parse a corpus file against the canonical columns and states."""
    data = dataset_from_csv(text, canonical_variables())
    return data


def attack_evidence(combo: Iterable[str]) -> dict[str, str]:
    """Clamp every attack: selected ones to yes, all others to no."""
    selected = set(_check_attacks(combo))
    return {a: ("yes" if a in selected else "no") for a in ATTACKS}


def canonical_model(
    data: Dataset | None = None, prior: Prior | float | None = None
) -> Network:
    """Train the canonical structure on the generated corpus.

    The default prior spreads an equivalent sample size of 5 over each
    CPD, which reproduces the reference belief tables exactly.
    """
    if data is None:
        data = generate_dataset()
    if prior is None:
        prior = CANONICAL_PRIOR
    return fit_bayesian(canonical_skeleton(), data, prior)


def evaluate_combination(model: Network, combo: Iterable[str]) -> Posterior:
    """Posterior over the knowledge classes with all attacks clamped."""
    return query_marginal(model, [KNOWLEDGE], attack_evidence(combo))


@dataclass(frozen=True)
class RankedCombination:
    attacks: tuple[str, ...]
    belief: float
    posterior: Posterior


def _subsets(allowed: tuple[str, ...]) -> list[tuple[str, ...]]:
    out = []
    for mask in range(1, 2 ** len(allowed)):
        out.append(tuple(a for i, a in enumerate(allowed) if mask >> i & 1))
    return out


def rank_combinations(
    model: Network, adversary: int, target: str
) -> list[RankedCombination]:
    """All non-empty attack subsets the adversary can run, best first.

    Sorted descending by the belief in the target class; ties prefer
    fewer attacks, then canonical attack order.
    """
    if adversary not in ADVERSARIES:
        raise ContractError(f"unknown adversary {adversary!r}, expected one of {sorted(ADVERSARIES)}")
    if target not in KNOWLEDGE_CLASSES:
        raise ContractError(f"unknown knowledge class {target!r}")
    allowed = ADVERSARIES[adversary]
    ranked = []
    for combo in _subsets(allowed):
        combo = _check_attacks(combo)
        posterior = evaluate_combination(model, combo)
        ranked.append(RankedCombination(combo, posterior.probability(target), posterior))
    order = {a: i for i, a in enumerate(ATTACKS)}
    ranked.sort(
        key=lambda r: (-r.belief, len(r.attacks), tuple(order[a] for a in r.attacks))
    )
    return ranked
