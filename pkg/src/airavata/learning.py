"""CPD estimation from complete discrete data.

Two estimators over the same counting core:
  - fit_bayesian: Dirichlet-smoothed posterior means. The prior is either
    a fixed pseudo-count per CPD cell, or an equivalent sample size that
    is divided by each CPD's cell count (cardinality times number of
    parent configurations) before being applied per cell.
  - fit_mle: raw relative frequencies, with unobserved parent
    configurations falling back to uniform rows and flagged in a report.
"""

from __future__ import annotations

import io
import csv as _csv
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import ContractError, SchemaError, UnknownVariableError
from .factors import Variable
from .network import Cpd, Network, Skeleton, find_cycle


@dataclass(frozen=True)
class Dataset:
    """Complete categorical observations, one state index per variable."""

    variables: tuple[Variable, ...]
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, variables: Sequence[Variable], rows) -> None:
        variables = tuple(variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise ContractError(f"duplicate variable names {names}")
        checked: list[tuple[int, ...]] = []
        for r, row in enumerate(rows):
            row = tuple(int(x) for x in row)
            if len(row) != len(variables):
                raise ContractError(f"row {r} has {len(row)} cells, expected {len(variables)}")
            for v, x in zip(variables, row):
                if not 0 <= x < v.cardinality:
                    raise ContractError(f"row {r}: state index {x} invalid for {v.name!r}")
            checked.append(row)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "rows", tuple(checked))

    def __len__(self) -> int:
        return len(self.rows)

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise UnknownVariableError(f"dataset has no column {name!r}")

    def column(self, name: str) -> np.ndarray:
        for i, v in enumerate(self.variables):
            if v.name == name:
                return np.array([row[i] for row in self.rows], dtype=np.int64)
        raise UnknownVariableError(f"dataset has no column {name!r}")

    @classmethod
    def from_states(cls, variables: Sequence[Variable], state_rows) -> "Dataset":
        """Build from rows of state names instead of indices."""
        variables = tuple(variables)
        rows = []
        for r, row in enumerate(state_rows):
            if len(row) != len(variables):
                raise ContractError(f"row {r} has {len(row)} cells, expected {len(variables)}")
            rows.append(tuple(v.state_index(s) for v, s in zip(variables, row)))
        return cls(variables, rows)


def dataset_to_csv(data: Dataset) -> str:
    """Header of variable names, then one state name per cell."""
    out = io.StringIO()
    writer = _csv.writer(out, lineterminator="\n")
    writer.writerow([v.name for v in data.variables])
    for row in data.rows:
        writer.writerow([v.states[x] for v, x in zip(data.variables, row)])
    return out.getvalue()


def dataset_from_csv(text: str, variables: Sequence[Variable]) -> Dataset:
    """Parse delimiter-separated text against declared variables.

    Columns may appear in any order; the Dataset keeps the declared
    variable order. Unknown or missing columns and unknown state names
    are schema errors.
    """
    variables = tuple(variables)
    reader = _csv.reader(io.StringIO(text))
    table = [row for row in reader if row]
    if not table:
        raise SchemaError("empty document: no header row")
    header = table[0]
    declared = [v.name for v in variables]
    if sorted(header) != sorted(declared):
        raise SchemaError(f"header {header} does not match expected columns {declared}")
    position = {name: header.index(name) for name in declared}
    rows = []
    for lineno, row in enumerate(table[1:], start=2):
        if len(row) != len(header):
            raise SchemaError(f"line {lineno}: {len(row)} cells, header has {len(header)}")
        try:
            rows.append(tuple(v.state_index(row[position[v.name]]) for v in variables))
        except Exception as e:
            raise SchemaError(f"line {lineno}: {e}") from None
    return Dataset(variables, rows)


@dataclass(frozen=True)
class DirichletPrior:
    """Fixed pseudo-count added to every CPD cell."""

    alpha: float = 1.0

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ContractError(f"alpha must be positive, got {self.alpha}")

    def per_cell(self, cardinality: int, parent_configs: int) -> float:
        return self.alpha


@dataclass(frozen=True)
class EquivalentSamplePrior:
    """Total prior mass split evenly over all cells of each CPD.

    The per-cell pseudo-count is size / (cardinality * parent_configs),
    so the prior carries the same weight regardless of how finely a
    variable's table is partitioned.
    """

    size: float = 5.0

    def __post_init__(self) -> None:
        if not self.size > 0:
            raise ContractError(f"equivalent sample size must be positive, got {self.size}")

    def per_cell(self, cardinality: int, parent_configs: int) -> float:
        return self.size / (cardinality * parent_configs)


Prior = Union[DirichletPrior, EquivalentSamplePrior]


@dataclass(frozen=True)
class FitReport:
    """Parent configurations that contributed no data rows."""

    unobserved: tuple[tuple[str, int], ...]  # (variable name, CPD row index)

    def rows_for(self, name: str) -> tuple[int, ...]:
        return tuple(r for n, r in self.unobserved if n == name)


def _check_structure(structure: Skeleton, data: Dataset) -> None:
    cycle = find_cycle([v.name for v in structure.variables], structure.edges)
    if cycle:
        raise ContractError("structure has a cycle through {" + ", ".join(cycle) + "}")
    by_name = {v.name: v for v in data.variables}
    for v in structure.variables:
        got = by_name.get(v.name)
        if got is None:
            raise SchemaError(f"dataset is missing structure variable {v.name!r}")
        if got.states != v.states:
            raise SchemaError(
                f"dataset column {v.name!r} has states {list(got.states)}, "
                f"structure declares {list(v.states)}"
            )


def _count_table(data: Dataset, child: Variable, parents: tuple[Variable, ...]) -> np.ndarray:
    """Joint counts, rows = parent configs (first parent most significant)."""
    configs = 1
    for p in parents:
        configs *= p.cardinality
    if not data.rows:
        return np.zeros((configs, child.cardinality))
    config_index = np.zeros(len(data.rows), dtype=np.int64)
    for p in parents:
        config_index = config_index * p.cardinality + data.column(p.name)
    flat = config_index * child.cardinality + data.column(child.name)
    counts = np.bincount(flat, minlength=configs * child.cardinality)
    return counts.reshape(configs, child.cardinality).astype(float)


def fit_bayesian(structure: Skeleton, data: Dataset, prior: Prior | float | None = None) -> Network:
    """Posterior-mean CPDs under a Dirichlet prior.

    For each cell: (count + pseudo) / (config total + pseudo * cardinality).
    Parent configurations absent from the data get the prior's own
    normalized row, which is uniform for both supported prior shapes.
    """
    if prior is None:
        prior = DirichletPrior()
    elif isinstance(prior, (int, float)):
        prior = DirichletPrior(float(prior))
    _check_structure(structure, data)
    cpds = []
    for v in structure.variables:
        parents = tuple(structure.variable(p) for p in structure.parents_of(v.name))
        counts = _count_table(data, v, parents)
        pseudo = prior.per_cell(v.cardinality, counts.shape[0])
        smoothed = counts + pseudo
        table = smoothed / smoothed.sum(axis=1, keepdims=True)
        cpds.append(Cpd(v, parents, table))
    return Network(structure.variables, structure.edges, cpds)


def fit_mle(structure: Skeleton, data: Dataset) -> tuple[Network, FitReport]:
    """Relative-frequency CPDs; unobserved configs become uniform rows."""
    _check_structure(structure, data)
    cpds = []
    flagged: list[tuple[str, int]] = []
    for v in structure.variables:
        parents = tuple(structure.variable(p) for p in structure.parents_of(v.name))
        counts = _count_table(data, v, parents)
        totals = counts.sum(axis=1, keepdims=True)
        table = np.where(totals > 0, counts / np.where(totals > 0, totals, 1.0),
                         1.0 / v.cardinality)
        for row in np.nonzero(totals.ravel() == 0)[0]:
            flagged.append((v.name, int(row)))
        cpds.append(Cpd(v, parents, table))
    return Network(structure.variables, structure.edges, cpds), FitReport(tuple(flagged))
