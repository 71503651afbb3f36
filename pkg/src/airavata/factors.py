"""Discrete factor algebra over named categorical variables.

A factor is a dense non-negative table over an ordered scope of variables.
Entries are addressed in mixed-radix order with the FIRST scope variable
most significant, which is exactly numpy's C order: reshaping the flat
table to one axis per scope variable makes axis i correspond to scope[i].

All operations are pure; factors are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    ContractError,
    ScopeConflictError,
    UnknownStateError,
    UnknownVariableError,
    ZeroMassError,
)


@dataclass(frozen=True)
class Variable:
    """A named categorical random variable with a fixed, ordered state list."""

    name: str
    states: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.name:
            raise ContractError("variable name must be non-empty")
        states = tuple(self.states)
        object.__setattr__(self, "states", states)
        if len(states) < 2:
            raise ContractError(f"variable {self.name!r} needs at least 2 states")
        if len(set(states)) != len(states) or any(not s for s in states):
            raise ContractError(f"variable {self.name!r} has invalid state list {states!r}")

    @property
    def cardinality(self) -> int:
        return len(self.states)

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownStateError(
                f"variable {self.name!r} has no state {state!r}; states are {list(self.states)}"
            ) from None


class Factor:
    """Immutable dense table over an ordered variable scope.

    Parameters
    ----------
    scope : sequence of Variable
        Ordered scope; names must be unique within it. May be empty, in
        which case the factor is a single scalar.
    values : array-like
        Flat table of length prod(cardinalities), all entries finite
        and >= 0, given in mixed-radix order (first variable most
        significant).
    """

    __slots__ = ("_scope", "_values")

    def __init__(self, scope: Sequence[Variable], values) -> None:
        scope = tuple(scope)
        names = [v.name for v in scope]
        if len(set(names)) != len(names):
            raise ContractError(f"duplicate variable names in scope {names}")
        table = np.asarray(values, dtype=float).ravel()
        expected = int(np.prod([v.cardinality for v in scope], dtype=object)) if scope else 1
        if table.size != expected:
            raise ContractError(
                f"table has {table.size} entries, scope {names} requires {expected}"
            )
        if not np.all(np.isfinite(table)):
            raise ContractError("factor entries must be finite")
        if np.any(table < 0):
            raise ContractError("factor entries must be non-negative")
        table = table.copy()
        table.flags.writeable = False
        self._scope = scope
        self._values = table

    @property
    def scope(self) -> tuple[Variable, ...]:
        return self._scope

    @property
    def values(self) -> np.ndarray:
        """Flat read-only table in mixed-radix order."""
        return self._values

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(v.cardinality for v in self._scope)

    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self._scope)

    def table(self) -> np.ndarray:
        """The values reshaped to one axis per scope variable."""
        return self._values.reshape(self.shape)

    def variable(self, name: str) -> Variable:
        for v in self._scope:
            if v.name == name:
                return v
        raise UnknownVariableError(f"factor scope {self.names()} has no variable {name!r}")

    def axis(self, name: str) -> int:
        for i, v in enumerate(self._scope):
            if v.name == name:
                return i
        raise UnknownVariableError(f"factor scope {self.names()} has no variable {name!r}")

    def index_of(self, assignment: Mapping[str, str]) -> int:
        """Flat index of a complete assignment of the scope."""
        missing = [v.name for v in self._scope if v.name not in assignment]
        if missing:
            raise ContractError(f"assignment is missing variables {missing}")
        index = 0
        for v in self._scope:
            index = index * v.cardinality + v.state_index(assignment[v.name])
        return index

    def assignment_of(self, index: int) -> dict[str, str]:
        """Inverse of index_of for any valid flat index."""
        if not 0 <= index < self._values.size:
            raise ContractError(f"index {index} out of range for table of {self._values.size}")
        out: dict[str, str] = {}
        for v in reversed(self._scope):
            index, digit = divmod(index, v.cardinality)
            out[v.name] = v.states[digit]
        return out

    def value_at(self, assignment: Mapping[str, str]) -> float:
        return float(self._values[self.index_of(assignment)])

    def __repr__(self) -> str:
        return f"Factor({list(self.names())}, {self._values.size} entries)"


def _check_shared(a: Factor, b: Factor) -> None:
    by_name = {v.name: v for v in a.scope}
    for v in b.scope:
        other = by_name.get(v.name)
        if other is not None and other.states != v.states:
            raise ScopeConflictError(
                f"variable {v.name!r} has states {list(other.states)} in one factor "
                f"and {list(v.states)} in the other"
            )


def factor_product(a: Factor, b: Factor) -> Factor:
    """Pointwise product of two factors.

    The result scope is a's scope followed by the variables that appear
    only in b, in b's order. Shared names must refer to identical
    variables (same states in the same order).
    """
    _check_shared(a, b)
    a_names = set(a.names())
    extra = tuple(v for v in b.scope if v.name not in a_names)
    scope = a.scope + extra

    # a broadcasts over the appended axes; b's axes are permuted into place
    out_names = [v.name for v in scope]
    a_nd = a.table().reshape(a.shape + (1,) * len(extra))
    b_axis = {v.name: i for i, v in enumerate(b.scope)}
    b_present = [n for n in out_names if n in b_axis]
    b_nd = np.transpose(b.table(), [b_axis[n] for n in b_present])
    b_shape = tuple(
        scope[i].cardinality if out_names[i] in b_axis else 1 for i in range(len(scope))
    )
    b_nd = b_nd.reshape(b_shape)
    return Factor(scope, (a_nd * b_nd).ravel())


def factor_marginalize(f: Factor, name: str) -> Factor:
    """Sum a variable out of the scope; total mass is preserved."""
    i = f.axis(name)
    scope = f.scope[:i] + f.scope[i + 1 :]
    return Factor(scope, f.table().sum(axis=i).ravel())


def factor_reduce(f: Factor, name: str, state: str) -> Factor:
    """Slice the table at name=state and drop the variable (unnormalized)."""
    i = f.axis(name)
    s = f.scope[i].state_index(state)
    scope = f.scope[:i] + f.scope[i + 1 :]
    return Factor(scope, np.take(f.table(), s, axis=i).ravel())


def factor_normalize(f: Factor) -> Factor:
    """Scale entries to sum to 1."""
    total = float(f.values.sum())
    if total <= 0.0:
        raise ZeroMassError("cannot normalize an all-zero table")
    return Factor(f.scope, f.values / total)


def reduce_all(f: Factor, evidence: Mapping[str, str]) -> Factor:
    """Reduce on every evidence variable present in the scope."""
    out = f
    for name, state in evidence.items():
        if any(v.name == name for v in out.scope):
            out = factor_reduce(out, name, state)
    return out


def product_all(factors: Iterable[Factor]) -> Factor:
    """Left fold of factor_product; empty input gives the unit scalar."""
    out: Factor | None = None
    for f in factors:
        out = f if out is None else factor_product(out, f)
    if out is None:
        return Factor((), [1.0])
    return out
