"""Symbolic operator expressions over P(L) and their exact evaluation.

An operator expression denotes a map from subsets of a universe to subsets
of the same universe.  Expressions are immutable values; evaluation is pure
and memoised internally (the cache is semantically invisible).

The two parametric families behave as follows on an argument A:

* ``Cxy(X, Y)``: A ∪ X when A meets Y, otherwise A.
* ``CPrime(X, Y)``: A ∪ X when Y ⊆ A, otherwise A.

``SExample(M, b)`` is the finite-mode example operator: it sends A to the
whole universe when b ∈ A and to M ∪ A otherwise (requiring nonempty M,
b outside M, and at least two elements outside M).

``Meet``/``NaiveJoin`` are the pointwise intersection and union of two
operators; the naive join of two closure operators need not be idempotent.
``WeakJoin`` denotes the least common closed superset: the smallest
Y ⊇ A fixed by both operands, computed by iterating the operands to a
fixed point.  ``Compose`` is function composition (outer after inner).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .sets import (
    Mode,
    ModeError,
    SentenceSet,
    Universe,
    UniverseMismatchError,
    all_subsets,
)


class OperatorConstraintError(ValueError):
    """An expression violates one of its construction constraints."""


@dataclass(frozen=True)
class OperatorExpr:
    """Base class for the expression variants below."""

    @property
    def universe(self) -> Universe:
        raise NotImplementedError

    def __call__(self, x: SentenceSet) -> SentenceSet:
        return evaluate(self, x)


@dataclass(frozen=True)
class Identity(OperatorExpr):
    _universe: Universe

    @property
    def universe(self) -> Universe:
        return self._universe


@dataclass(frozen=True)
class Top(OperatorExpr):
    """Maps every subset to the whole universe."""

    _universe: Universe

    @property
    def universe(self) -> Universe:
        return self._universe


@dataclass(frozen=True)
class Cxy(OperatorExpr):
    x: SentenceSet
    y: SentenceSet

    def __post_init__(self) -> None:
        if self.x.universe != self.y.universe:
            raise UniverseMismatchError("parameters from different universes")

    @property
    def universe(self) -> Universe:
        return self.x.universe


@dataclass(frozen=True)
class CPrime(OperatorExpr):
    x: SentenceSet
    y: SentenceSet

    def __post_init__(self) -> None:
        if self.x.universe != self.y.universe:
            raise UniverseMismatchError("parameters from different universes")

    @property
    def universe(self) -> Universe:
        return self.x.universe


@dataclass(frozen=True)
class SExample(OperatorExpr):
    m: SentenceSet
    b: int

    def __post_init__(self) -> None:
        u = self.m.universe
        if u.mode is not Mode.FINITE:
            raise ModeError("this operator is defined for finite universes only")
        if not 0 <= self.b < u.size:
            raise OperatorConstraintError(f"trigger element {self.b} out of range")
        if self.m.is_empty():
            raise OperatorConstraintError("the base set must be nonempty")
        if self.b in self.m:
            raise OperatorConstraintError("the trigger element must lie outside the base set")
        if u.size - len(self.m.members) < 2:
            raise OperatorConstraintError("at least two elements must lie outside the base set")

    @property
    def universe(self) -> Universe:
        return self.m.universe


def _check_pair(left: OperatorExpr, right: OperatorExpr) -> None:
    if left.universe != right.universe:
        raise UniverseMismatchError("operands from different universes")


@dataclass(frozen=True)
class Meet(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self) -> None:
        _check_pair(self.left, self.right)

    @property
    def universe(self) -> Universe:
        return self.left.universe


@dataclass(frozen=True)
class NaiveJoin(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self) -> None:
        _check_pair(self.left, self.right)

    @property
    def universe(self) -> Universe:
        return self.left.universe


@dataclass(frozen=True)
class WeakJoin(OperatorExpr):
    left: OperatorExpr
    right: OperatorExpr

    def __post_init__(self) -> None:
        _check_pair(self.left, self.right)

    @property
    def universe(self) -> Universe:
        return self.left.universe


@dataclass(frozen=True)
class Compose(OperatorExpr):
    outer: OperatorExpr
    inner: OperatorExpr

    def __post_init__(self) -> None:
        _check_pair(self.outer, self.inner)

    @property
    def universe(self) -> Universe:
        return self.outer.universe


@dataclass(frozen=True)
class ClosureSystem:
    """A family of closed sets: contains L and is intersection-closed.

    Kept in canonical order (ascending bitmask).  Finite mode only; the
    closed-set family of an operator on an infinite universe is not
    materialised.
    """

    universe: Universe
    closed: tuple[SentenceSet, ...]

    def __post_init__(self) -> None:
        if self.universe.mode is not Mode.FINITE:
            raise ModeError("closure systems are materialised in finite mode only")
        for s in self.closed:
            if s.universe != self.universe:
                raise UniverseMismatchError("closed set from a different universe")
        masks = [s.mask for s in self.closed]
        if len(set(masks)) != len(masks):
            raise OperatorConstraintError("duplicate closed sets")
        order = sorted(range(len(masks)), key=lambda i: masks[i])
        canon = tuple(self.closed[order[i]] for i in range(len(order)))
        if canon != self.closed:
            object.__setattr__(self, "closed", canon)
        present = {s.mask for s in canon}
        full = (1 << self.universe.size) - 1
        if full not in present:
            raise OperatorConstraintError("the family must contain the whole universe")
        for i, a in enumerate(canon):
            for b in canon[i + 1 :]:
                if a.mask & b.mask not in present:
                    raise OperatorConstraintError(
                        f"family is not intersection-closed: {a.literal()} ∩ {b.literal()} missing"
                    )

    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.closed)


@dataclass(frozen=True)
class FromSystem(OperatorExpr):
    """Closure via least closed superset in an explicit family."""

    system: ClosureSystem

    @property
    def universe(self) -> Universe:
        return self.system.universe


@dataclass(frozen=True)
class FromTable(OperatorExpr):
    """An arbitrary total map given by its value on every subset.

    ``table[mask]`` is the image mask of the subset with that mask; the
    table must cover all 2^n subsets.  Finite mode only.
    """

    _universe: Universe
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self._universe.mode is not Mode.FINITE:
            raise ModeError("tables are defined for finite universes only")
        n = self._universe.size
        if len(self.table) != 1 << n:
            raise OperatorConstraintError(
                f"table must be total: expected {1 << n} entries, got {len(self.table)}"
            )
        limit = 1 << n
        for value in self.table:
            if not 0 <= value < limit:
                raise OperatorConstraintError(f"table value {value:#x} out of range")

    @property
    def universe(self) -> Universe:
        return self._universe


def table_from_map(universe: Universe, mapping: dict[SentenceSet, SentenceSet]) -> FromTable:
    """Build a FromTable from an explicit subset-to-subset mapping."""
    n = universe.size
    entries: list[int | None] = [None] * (1 << n)
    for key, value in mapping.items():
        entries[key.mask] = value.mask
    if any(v is None for v in entries):
        raise OperatorConstraintError("table must be total over all subsets")
    return FromTable(universe, tuple(entries))  # type: ignore[arg-type]


# -- evaluation ---------------------------------------------------------------


def evaluate(op: OperatorExpr, x: SentenceSet) -> SentenceSet:
    """The exact value of the denoted map at ``x``."""
    if op.universe != x.universe:
        raise UniverseMismatchError("argument from a different universe")
    return _eval(op, x)


_ATOMIC_CLOSURES = (Identity, Top, Cxy, CPrime)


def _eval(op: OperatorExpr, x: SentenceSet) -> SentenceSet:
    # Leaf forms are constant-time; only composite nodes are worth caching.
    if isinstance(op, Identity):
        return x
    if isinstance(op, Top):
        return x.universe.full()
    if isinstance(op, Cxy):
        return x.union(op.x) if not x.intersect(op.y).is_empty() else x
    if isinstance(op, CPrime):
        return x.union(op.x) if op.y.is_subset(x) else x
    if isinstance(op, SExample):
        return x.universe.full() if op.b in x else op.m.union(x)
    if isinstance(op, FromTable):
        return x.universe.from_mask(op.table[x.mask])
    return _eval_composite(op, x)


@lru_cache(maxsize=None)
def _eval_composite(op: OperatorExpr, x: SentenceSet) -> SentenceSet:
    if isinstance(op, Meet):
        return _eval(op.left, x).intersect(_eval(op.right, x))
    if isinstance(op, NaiveJoin):
        return _eval(op.left, x).union(_eval(op.right, x))
    if isinstance(op, Compose):
        return _eval(op.outer, _eval(op.inner, x))
    if isinstance(op, FromSystem):
        out = x.universe.full()
        for closed in op.system.closed:
            if x.is_subset(closed):
                out = out.intersect(closed)
        return out
    if isinstance(op, WeakJoin):
        return _eval_weak_join(op, x)
    raise TypeError(f"unknown operator expression {op!r}")


def _eval_weak_join(op: WeakJoin, x: SentenceSet) -> SentenceSet:
    universe = op.universe
    if universe.mode is Mode.FINITE:
        y = x
        for _ in range((1 << universe.size) + 1):
            z = _eval(op.right, _eval(op.left, y))
            if z == y:
                return y
            y = z
        raise OperatorConstraintError("weak join iteration did not reach a fixed point")
    # Cofinite mode: only combinations with a derived closed form are
    # evaluated; anything else is rejected rather than approximated.
    left, right = op.left, op.right
    if isinstance(left, Identity) and isinstance(right, _ATOMIC_CLOSURES):
        return _eval(right, x)
    if isinstance(right, Identity) and isinstance(left, _ATOMIC_CLOSURES):
        return _eval(left, x)
    if isinstance(left, Cxy) and isinstance(right, Cxy) and left.y == right.y:
        return _eval(Cxy(left.x.union(right.x), left.y), x)
    raise ModeError(
        "weak join on an infinite universe is supported only for operands "
        "with a derived closed form"
    )


def compose(outer: OperatorExpr, inner: OperatorExpr) -> OperatorExpr:
    """Expression denoting x -> outer(inner(x)); not necessarily a closure."""
    return Compose(outer, inner)


def to_closure_system(op: OperatorExpr) -> ClosureSystem:
    """The family of fixed points of ``op`` (finite mode).

    For a closure operator this is its closed-set family; the constructor
    validates that the result contains L and is intersection-closed, so a
    non-closure operand surfaces as a constraint error.
    """
    universe = op.universe
    if universe.mode is not Mode.FINITE:
        raise ModeError("closed-set families are enumerated in finite mode only")
    fixed = tuple(s for s in all_subsets(universe) if _eval(op, s) == s)
    return ClosureSystem(universe, fixed)


def from_closure_system(system: ClosureSystem) -> OperatorExpr:
    """The closure operator whose value is the least closed superset."""
    return FromSystem(system)
