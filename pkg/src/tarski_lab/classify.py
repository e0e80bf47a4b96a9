"""Axiom verification, operator classification, and exhaustive enumeration.

The three axioms checked are extensivity-with-idempotence
(X ⊆ C(X) = C(C(X)) ⊆ L), monotonicity (X ⊆ Y implies C(X) ⊆ C(Y)), and
finitarity (C(X) is the union of C(A) over the finite subsets A of X).
Finite universes are checked exhaustively with least-bitmask witnesses.
On the infinite universe the built-in constructions receive exact
closed-form verdicts; other expressions get a bounded search whose passes
are explicitly inconclusive.

Enumeration produces every closure system (intersection-closed family
containing L) on a tiny universe, in ascending order of the family's
characteristic bitmask over P(L); these are the extensional forms of all
consequence operators and serve as the oracle for the lattice and
atom-structure checks.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .sets import Mode, ModeError, SentenceSet, Universe, all_subsets, make_universe
from .operators import (
    ClosureSystem,
    CPrime,
    Cxy,
    FromTable,
    Identity,
    OperatorExpr,
    Top,
    evaluate,
)
from .algebra import equivalent

EXHAUSTIVE = "exhaustive"
CLOSED_FORM = "closed-form"

ENUMERATION_LIMIT = 4
DEFAULT_SEED = 0


@dataclass(frozen=True)
class Verdict:
    passed: bool
    conclusive: bool = True
    witness: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    axiom_i: Verdict
    axiom_ii: Verdict
    axiom_iii: Verdict
    axiomless: bool
    mode_note: str
    finitary_from_monotone: bool | None = None

    @property
    def is_consequence(self) -> bool:
        return self.axiom_i.passed and self.axiom_ii.passed

    @property
    def all_pass(self) -> bool:
        return self.is_consequence and self.axiom_iii.passed


def check_axioms(op: OperatorExpr, cap: int | None = None) -> AxiomReport:
    """Full per-axiom report with least counterexample witnesses."""
    if op.universe.mode is Mode.FINITE:
        return _check_exhaustive(op)
    if isinstance(op, (Identity, Top, Cxy, CPrime)):
        return _check_closed_form(op)
    if isinstance(op, FromTable):
        raise ModeError("tables are not defined on the infinite universe")
    if cap is None:
        raise ValueError("bounded search on the infinite universe needs a cap")
    return _check_bounded(op, cap)


def _check_exhaustive(op: OperatorExpr) -> AxiomReport:
    subsets = all_subsets(op.universe)

    axiom_i = Verdict(True)
    for s in subsets:
        image = evaluate(op, s)
        if not s.is_subset(image) or evaluate(op, image) != image:
            axiom_i = Verdict(False, witness=(s,))
            break

    axiom_ii = Verdict(True)
    for s in subsets:
        if not axiom_ii.passed:
            break
        for t in subsets:
            if s.is_subset(t) and not evaluate(op, s).is_subset(evaluate(op, t)):
                axiom_ii = Verdict(False, witness=(s, t))
                break

    axiom_iii = Verdict(True)
    for s in subsets:
        union = op.universe.empty()
        for a in subsets:
            if a.is_subset(s):
                union = union.union(evaluate(op, a))
        image = evaluate(op, s)
        if union != image:
            missing = image.difference(union)
            extra = union.difference(image)
            element = missing.least() if not missing.is_empty() else extra.least()
            axiom_iii = Verdict(False, witness=(s, element))
            break

    return AxiomReport(
        axiom_i=axiom_i,
        axiom_ii=axiom_ii,
        axiom_iii=axiom_iii,
        axiomless=evaluate(op, op.universe.empty()).is_empty(),
        mode_note=EXHAUSTIVE,
        finitary_from_monotone=axiom_i.passed and axiom_ii.passed,
    )


def _check_closed_form(op: OperatorExpr) -> AxiomReport:
    universe = op.universe
    axiom_iii = Verdict(True)
    if isinstance(op, Identity):
        axiomless = True
    elif isinstance(op, Top):
        axiomless = False
    elif isinstance(op, Cxy):
        axiomless = True
    else:
        assert isinstance(op, CPrime)
        axiomless = op.x.is_empty() or not op.y.is_empty()
        # Finitarity holds when Y is finite, or vacuously when X ⊆ Y makes
        # the operator the identity.  Otherwise the argument Y itself is a
        # witness: any element of X − Y enters C(Y) but no finite part of
        # the infinite Y ever contains Y.
        if not op.y.is_finite() and not op.x.is_subset(op.y):
            element = op.x.difference(op.y).least()
            axiom_iii = Verdict(False, witness=(op.y, element))
    return AxiomReport(
        axiom_i=Verdict(True),
        axiom_ii=Verdict(True),
        axiom_iii=axiom_iii,
        axiomless=axiomless,
        mode_note=CLOSED_FORM,
    )


def _bounded_family(universe: Universe, cap: int) -> list[SentenceSet]:
    sets: list[SentenceSet] = [universe.empty()]
    horizon = max(1, cap)
    sets.extend(universe.subset([i]) for i in range(horizon))
    sets.extend(
        universe.subset([i, j]) for i in range(horizon) for j in range(i + 1, horizon)
    )
    for size in range(3, 9):
        sets.extend(
            universe.subset(range(i, i + size)) for i in range(max(0, horizon - size + 1))
        )
    sets.append(universe.full())
    sets.extend(universe.cosubset(range(k)) for k in range(1, 5))
    return sets


def _check_bounded(op: OperatorExpr, cap: int) -> AxiomReport:
    universe = op.universe
    family = _bounded_family(universe, cap)
    note = f"bounded-search(cap={cap})"

    axiom_i = Verdict(True, conclusive=False)
    for s in family:
        image = evaluate(op, s)
        if not s.is_subset(image) or evaluate(op, image) != image:
            axiom_i = Verdict(False, witness=(s,))
            break

    axiom_ii = Verdict(True, conclusive=False)
    for s in family:
        if not axiom_ii.passed:
            break
        for t in family:
            if s.is_subset(t) and not evaluate(op, s).is_subset(evaluate(op, t)):
                axiom_ii = Verdict(False, witness=(s, t))
                break

    axiom_iii = Verdict(True, conclusive=False)
    for s in family:
        image = evaluate(op, s)
        union = universe.empty()
        for a in family:
            if a.is_finite() and a.is_subset(s):
                union = union.union(evaluate(op, a))
        if not union.is_subset(image):
            element = union.difference(image).least()
            axiom_iii = Verdict(False, witness=(s, element))
            break
        if s.is_finite() and union != image:
            # Every finite subset of a small finite s is in the family, so a
            # short image is a conclusive failure.
            if len(s.members) <= 2:
                element = image.difference(union).least()
                axiom_iii = Verdict(False, witness=(s, element))
                break

    return AxiomReport(
        axiom_i=axiom_i,
        axiom_ii=axiom_ii,
        axiom_iii=axiom_iii,
        axiomless=evaluate(op, universe.empty()).is_empty(),
        mode_note=note,
    )


def lemma26_witness(op: OperatorExpr) -> int:
    """Least element x with C(L − {x}) = L, for an axiomatic operator."""
    universe = op.universe
    if universe.mode is not Mode.FINITE:
        raise ModeError("the witness scan runs in finite mode only")
    report = check_axioms(op)
    if not report.is_consequence:
        raise ValueError("the operand is not a consequence operator")
    if report.axiomless:
        raise ValueError("the operand is axiomless; no witness is guaranteed")
    full = universe.full()
    for x in range(universe.size):
        probe = full.difference(universe.subset([x]))
        if evaluate(op, probe).is_full():
            return x
    raise RuntimeError("no witness found; the axiomatic premise was violated")


# -- exhaustive enumeration ----------------------------------------------------


@lru_cache(maxsize=None)
def default_universe(n: int) -> Universe:
    return make_universe(Mode.FINITE, tuple("abcdefghij"[:n]))


def _scan_range(n: int, lo: int, hi: int) -> list[int]:
    """Family bitmasks in [lo, hi) that contain L and are intersection-closed."""
    full_bit = 1 << ((1 << n) - 1)
    found = []
    for fam in range(lo, hi):
        if not fam & full_bit:
            continue
        members = [m for m in range(1 << n) if fam >> m & 1]
        ok = True
        for i, mi in enumerate(members):
            for mj in members[i + 1 :]:
                if not fam >> (mi & mj) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(fam)
    return found


@lru_cache(maxsize=None)
def _moore_family_masks(n: int, workers: int = 1) -> tuple[int, ...]:
    total = 1 << (1 << n)
    if workers <= 1:
        return tuple(_scan_range(n, 0, total))
    chunks = []
    step = max(1, total // (workers * 4))
    bounds = list(range(0, total, step)) + [total]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_scan_range, n, lo, hi) for lo, hi in zip(bounds, bounds[1:])
        ]
        for future in futures:
            chunks.append(future.result())
    return tuple(mask for chunk in chunks for mask in chunk)


def system_from_family_mask(n: int, family_mask: int) -> ClosureSystem:
    universe = default_universe(n)
    closed = tuple(
        universe.from_mask(m) for m in range(1 << n) if family_mask >> m & 1
    )
    return ClosureSystem(universe, closed)


def enumerate_operators(
    n: int, include_top: bool = True, workers: int = 1
) -> Iterator[ClosureSystem]:
    """All closure systems on an n-element universe, in canonical order.

    ``include_top=False`` drops the single {L}-only family (the map sending
    everything to L).  Counts for n = 1..4 are 2, 7, 61, 2480.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is supported for 1 <= n <= {ENUMERATION_LIMIT}")
    top_mask = 1 << ((1 << n) - 1)
    for family_mask in _moore_family_masks(n, workers):
        if not include_top and family_mask == top_mask:
            continue
        yield system_from_family_mask(n, family_mask)


# -- atoms and dense covers ------------------------------------------------------


def e0_family(universe: Universe) -> list[OperatorExpr]:
    """The candidate atoms: one operator per element x, adding {x} once the
    argument contains everything else."""
    if universe.mode is not Mode.FINITE:
        raise ModeError("the atom family is built in finite mode only")
    if universe.size < 2:
        raise ValueError("the atom family needs at least two elements")
    full = universe.full()
    members: list[OperatorExpr] = []
    for x in range(universe.size):
        rest = full.difference(universe.subset([x]))
        op = CPrime(universe.subset([x]), rest)
        if not evaluate(op, rest).is_full():
            raise RuntimeError("atom candidate failed its defining evaluation")
        members.append(op)
    return members


def _system_table(system: ClosureSystem) -> tuple[int, ...]:
    n = system.universe.size
    masks = system.masks()
    full = (1 << n) - 1
    out = []
    for m in range(1 << n):
        value = full
        for closed in masks:
            if closed & m == m:
                value &= closed
        out.append(value)
    return tuple(out)


def _operator_table(op: OperatorExpr) -> tuple[int, ...]:
    return tuple(evaluate(op, s).mask for s in all_subsets(op.universe))


def is_atom(op: OperatorExpr, oracle: Iterable[ClosureSystem]) -> bool:
    """Whether nothing lies strictly between the identity and ``op``."""
    universe = op.universe
    if universe.mode is not Mode.FINITE:
        raise ModeError("atom checks run in finite mode only")
    if equivalent(op, Identity(universe)):
        raise ValueError("the identity is not eligible for the atom check")
    target = _operator_table(op)
    identity = tuple(range(len(target)))
    if target == identity:
        raise ValueError("the identity is not eligible for the atom check")
    for system in oracle:
        table = _system_table(system)
        if table == identity or table == target:
            continue
        between = all(t & ~u == 0 for t, u in zip(table, target))
        if between:
            return False
    return True


@dataclass(frozen=True)
class CoverResult:
    holds: bool
    failing: ClosureSystem | None = None

    def __bool__(self) -> bool:
        return self.holds


def dense_cover_check(
    oracle: Iterable[ClosureSystem],
    candidates: list[OperatorExpr] | None = None,
) -> CoverResult:
    """Every axiomatic operator in the oracle must dominate some candidate.

    Candidates default to the atom family of the oracle's universe.  An
    empty candidate list is allowed (as a vacuity control) and fails on the
    first axiomatic operator.
    """
    systems = list(oracle)
    if not systems:
        return CoverResult(True)
    universe = systems[0].universe
    members = e0_family(universe) if candidates is None else candidates
    tables = [_operator_table(op) for op in members]
    for system in systems:
        table = _system_table(system)
        if table[0] == 0:
            continue  # axiomless: the empty set is closed
        if not any(all(e & ~t == 0 for e, t in zip(etab, table)) for etab in tables):
            return CoverResult(False, system)
    return CoverResult(True)


# -- randomised tables -----------------------------------------------------------


def seeded_rng(seed: int | None = None) -> random.Random:
    """RNG seeded from the argument or the TARSKI_LAB_SEED environment var."""
    if seed is None:
        seed = int(os.environ.get("TARSKI_LAB_SEED", DEFAULT_SEED))
    return random.Random(seed)


def sample_extensive_idempotent_tables(
    universe: Universe, count: int, rng: random.Random
) -> Iterator[FromTable]:
    """Rejection-sample random tables that are extensive and idempotent.

    Values are uniform random supersets of the argument; tables failing
    idempotence are discarded.  Monotonicity is deliberately left free so
    the sample exercises both verdicts.
    """
    n = universe.size
    size = 1 << n
    produced = 0
    while produced < count:
        table = [m | rng.randrange(size) for m in range(size)]
        if all(table[value] == value for value in table):
            yield FromTable(universe, tuple(table))
            produced += 1
