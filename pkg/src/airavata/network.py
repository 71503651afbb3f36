"""Bayesian-network model: DAG structure, CPDs, validation, serialization.

Conventions shared with the factor algebra:
  - CPD rows are parent configurations in mixed-radix order, first parent
    most significant; columns are child states in declared order.
  - A CPD viewed as a factor has scope (parents..., child), so the flat
    row-major table is already in factor order.

The Network constructor is deliberately permissive about semantic
problems (cycles, missing CPDs, unnormalized rows): those are reported
as data by network_validate so broken documents can be inspected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ContractError, JointSizeError, NetworkFormatError, UnknownVariableError
from .factors import Factor, Variable, product_all

ROW_SUM_TOL = 1e-9
DEFAULT_JOINT_CAP = 2**20


@dataclass(frozen=True)
class Cpd:
    """Conditional distribution of one variable given its parents."""

    variable: Variable
    parents: tuple[Variable, ...]
    table: np.ndarray  # rows x child cardinality

    def __init__(self, variable: Variable, parents: Sequence[Variable], table) -> None:
        parents = tuple(parents)
        rows = 1
        for p in parents:
            rows *= p.cardinality
        try:
            arr = np.asarray(table, dtype=float).reshape(rows, variable.cardinality)
        except ValueError:
            shape = np.asarray(table, dtype=object).shape
            raise ContractError(
                f"CPD for {variable.name!r} has shape {shape}, expected "
                f"{rows} rows x {variable.cardinality} states"
            ) from None
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise ContractError(f"CPD for {variable.name!r} has negative or non-finite entries")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "parents", parents)
        object.__setattr__(self, "table", arr)

    def parent_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.parents)

    def row_index(self, assignment: Mapping[str, str]) -> int:
        index = 0
        for p in self.parents:
            index = index * p.cardinality + p.state_index(assignment[p.name])
        return index

    def to_factor(self) -> Factor:
        return Factor(self.parents + (self.variable,), self.table.ravel())


@dataclass(frozen=True)
class Skeleton:
    """Structure only: variables plus directed edges, no CPDs.

    Parent order of a node is the order its in-edges were declared.
    """

    variables: tuple[Variable, ...]
    edges: tuple[tuple[str, str], ...]

    def __init__(self, variables: Sequence[Variable], edges: Sequence[tuple[str, str]]) -> None:
        variables = tuple(variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            raise ContractError(f"duplicate variable names {names}")
        known = set(names)
        edges = tuple((str(p), str(c)) for p, c in edges)
        for p, c in edges:
            if p not in known or c not in known:
                raise UnknownVariableError(f"edge ({p!r}, {c!r}) references an unknown variable")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "edges", edges)

    def variable(self, name: str) -> Variable:
        for v in self.variables:
            if v.name == name:
                return v
        raise UnknownVariableError(f"no variable named {name!r}")

    def parents_of(self, name: str) -> tuple[str, ...]:
        return tuple(p for p, c in self.edges if c == name)

    def children_of(self, name: str) -> tuple[str, ...]:
        return tuple(c for p, c in self.edges if p == name)


def find_cycle(names: Sequence[str], edges: Sequence[tuple[str, str]]) -> tuple[str, ...]:
    """Return a sorted tuple of variable names on some cycle, or () if acyclic."""
    indegree = {n: 0 for n in names}
    children: dict[str, list[str]] = {n: [] for n in names}
    for p, c in edges:
        indegree[c] += 1
        children[p].append(c)
    queue = sorted(n for n, d in indegree.items() if d == 0)
    seen = 0
    while queue:
        n = queue.pop(0)
        seen += 1
        for c in children[n]:
            indegree[c] -= 1
            if indegree[c] == 0:
                queue.append(c)
    if seen == len(names):
        return ()
    return tuple(sorted(n for n, d in indegree.items() if d > 0))


@dataclass(frozen=True)
class Violation:
    """One invariant breach found by network_validate."""

    kind: str  # cycle | missing-cpd | cpd-parents | cpd-rows
    subject: str
    message: str


class Network:
    """Immutable DAG of variables with one CPD per variable."""

    def __init__(
        self,
        variables: Sequence[Variable],
        edges: Sequence[tuple[str, str]],
        cpds: Sequence[Cpd],
    ) -> None:
        self._skeleton = Skeleton(variables, edges)
        by_name: dict[str, Cpd] = {}
        for cpd in cpds:
            if cpd.variable.name in by_name:
                raise ContractError(f"duplicate CPD for {cpd.variable.name!r}")
            self._skeleton.variable(cpd.variable.name)  # must exist
            by_name[cpd.variable.name] = cpd
        self._cpds = by_name
        self._valid: bool | None = None

    @property
    def variables(self) -> tuple[Variable, ...]:
        return self._skeleton.variables

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._skeleton.edges

    @property
    def skeleton(self) -> Skeleton:
        return self._skeleton

    def variable(self, name: str) -> Variable:
        return self._skeleton.variable(name)

    def parents_of(self, name: str) -> tuple[str, ...]:
        return self._skeleton.parents_of(name)

    def children_of(self, name: str) -> tuple[str, ...]:
        return self._skeleton.children_of(name)

    def cpd_for(self, name: str) -> Cpd | None:
        self._skeleton.variable(name)
        return self._cpds.get(name)

    def cpds(self) -> tuple[Cpd, ...]:
        return tuple(
            self._cpds[v.name] for v in self.variables if v.name in self._cpds
        )

    def require_valid(self) -> None:
        if self._valid:
            return
        violations = network_validate(self)
        if violations:
            details = "; ".join(f"[{v.kind}] {v.subject}: {v.message}" for v in violations)
            raise ContractError(f"network is invalid: {details}")
        self._valid = True


def network_validate(net: Network) -> list[Violation]:
    """Check every Network invariant; an empty list means valid."""
    out: list[Violation] = []
    names = [v.name for v in net.variables]

    cycle = find_cycle(names, net.edges)
    if cycle:
        out.append(
            Violation("cycle", "{" + ", ".join(cycle) + "}", "edges form a directed cycle")
        )

    for v in net.variables:
        cpd = net.cpd_for(v.name)
        if cpd is None:
            out.append(Violation("missing-cpd", v.name, "variable has no CPD"))
            continue
        declared = net.parents_of(v.name)
        if cpd.parent_names() != declared:
            out.append(
                Violation(
                    "cpd-parents",
                    v.name,
                    f"CPD parents {list(cpd.parent_names())} do not match "
                    f"in-edges {list(declared)}",
                )
            )
        sums = cpd.table.sum(axis=1)
        for i in np.nonzero(np.abs(sums - 1.0) > ROW_SUM_TOL)[0]:
            out.append(
                Violation(
                    "cpd-rows",
                    f"{v.name}[row {int(i)}]",
                    f"row sums to {sums[i]:.12g}, expected 1",
                )
            )
    return out


def network_joint(net: Network, cap: int = DEFAULT_JOINT_CAP) -> Factor:
    """Full joint distribution as one factor (product of all CPDs)."""
    net.require_valid()
    size = 1
    for v in net.variables:
        size *= v.cardinality
    if size > cap:
        raise JointSizeError(f"joint table requires {size} entries, cap is {cap}")
    return product_all(cpd.to_factor() for cpd in net.cpds())


def network_save(net: Network) -> str:
    """Render the canonical document: variables, edges, cpds.

    Probabilities use repr-style shortest round-trip rendering, which
    always carries at least the 12 significant digits the format
    promises and parses back to the exact same float.
    """
    doc = {
        "variables": [{"name": v.name, "states": list(v.states)} for v in net.variables],
        "edges": [[p, c] for p, c in net.edges],
        "cpds": [
            {
                "variable": cpd.variable.name,
                "parents": list(cpd.parent_names()),
                "rows": [[float(x) for x in row] for row in cpd.table],
            }
            for cpd in net.cpds()
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise NetworkFormatError(message)


def network_load(text: str) -> Network:
    """Parse a network document produced by network_save.

    Purely structural problems raise NetworkFormatError with field
    context; semantic problems (cycles, missing CPDs, bad rows) survive
    parsing and are reported by network_validate instead.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise NetworkFormatError(f"not a valid document: {e}") from None

    _require(isinstance(doc, dict), "top level must be an object")
    for key in ("variables", "edges", "cpds"):
        _require(key in doc, f"missing field {key!r}")
        _require(isinstance(doc[key], list), f"field {key!r} must be a list")

    variables: list[Variable] = []
    for i, entry in enumerate(doc["variables"]):
        _require(isinstance(entry, dict), f"variables[{i}] must be an object")
        _require("name" in entry and "states" in entry, f"variables[{i}] needs name and states")
        states = entry["states"]
        _require(
            isinstance(states, list) and all(isinstance(s, str) for s in states),
            f"variables[{i}].states must be a list of strings",
        )
        try:
            variables.append(Variable(str(entry["name"]), tuple(states)))
        except ContractError as e:
            raise NetworkFormatError(f"variables[{i}]: {e}") from None
    by_name = {v.name: v for v in variables}

    edges: list[tuple[str, str]] = []
    for i, entry in enumerate(doc["edges"]):
        _require(
            isinstance(entry, list) and len(entry) == 2,
            f"edges[{i}] must be a [parent, child] pair",
        )
        p, c = entry
        _require(p in by_name, f"edges[{i}]: unknown variable {p!r}")
        _require(c in by_name, f"edges[{i}]: unknown variable {c!r}")
        edges.append((p, c))

    cpds: list[Cpd] = []
    for i, entry in enumerate(doc["cpds"]):
        _require(isinstance(entry, dict), f"cpds[{i}] must be an object")
        for key in ("variable", "parents", "rows"):
            _require(key in entry, f"cpds[{i}] missing field {key!r}")
        name = entry["variable"]
        _require(name in by_name, f"cpds[{i}]: unknown variable {name!r}")
        child = by_name[name]
        parent_names = entry["parents"]
        _require(
            isinstance(parent_names, list) and all(p in by_name for p in parent_names),
            f"cpds[{i}]: parents must name known variables, got {parent_names!r}",
        )
        columns = list(child.states)
        if "states" in entry:
            # optional header giving the column order the rows were written in
            header = entry["states"]
            _require(isinstance(header, list), f"cpds[{i}].states must be a list")
            for s in header:
                _require(
                    s in child.states,
                    f"cpds[{i}]: unknown state {s!r} for variable {name!r}",
                )
            _require(
                len(header) == child.cardinality and len(set(header)) == len(header),
                f"cpds[{i}].states must list each state of {name!r} exactly once",
            )
            columns = header
        rows = entry["rows"]
        _require(isinstance(rows, list), f"cpds[{i}].rows must be a list")
        parsed_rows: list[list[float]] = []
        for j, row in enumerate(rows):
            _require(
                isinstance(row, list) and len(row) == child.cardinality,
                f"cpds[{i}].rows[{j}] must list {child.cardinality} probabilities",
            )
            try:
                numeric = [float(x) for x in row]
            except (TypeError, ValueError):
                raise NetworkFormatError(f"cpds[{i}].rows[{j}] has a non-numeric entry") from None
            # undo any reordered column header
            ordered = [numeric[columns.index(s)] for s in child.states]
            parsed_rows.append(ordered)
        parents = tuple(by_name[p] for p in parent_names)
        expected_rows = 1
        for p in parents:
            expected_rows *= p.cardinality
        _require(
            len(parsed_rows) == expected_rows,
            f"cpds[{i}]: {len(parsed_rows)} rows, parent configurations require {expected_rows}",
        )
        try:
            cpds.append(Cpd(child, parents, parsed_rows))
        except ContractError as e:
            raise NetworkFormatError(f"cpds[{i}]: {e}") from None

    try:
        return Network(variables, edges, cpds)
    except (ContractError, UnknownVariableError) as e:
        raise NetworkFormatError(str(e)) from None
