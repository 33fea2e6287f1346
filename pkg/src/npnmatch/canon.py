"""Canonical-form search: grouping, refinement, and the candidate search.

The engine orders variables by signature keys that accumulate as literals
are committed: the first-order value first, then one pair value per
committed literal, in commit order.  Variables whose accumulated keys tie
form groups; groups split (never merge, never reorder) as keys extend.
Choices that the keys cannot rank become search branches; complete
candidates are compared by their full signature vectors and the maximum
wins.  A committed class releases its members one representative at a
time, so classmates re-rank against rival classes after every commit --
rigid class blocks would miss orderings that interleave two tied classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .analysis import LiteralClass, PhaseDecision, literal_classes, variable_phase
from .signature import (
    Mode,
    Ordering,
    compare_streams,
    difference_count,
    signature_stream,
)
from .truthtable import Literal, NPTransform, TruthTable, format_literals

VarClass = LiteralClass

ASYMMETRIC = "asymmetric"
SYMMETRIC = "symmetric"
INDEPENDENT = "independent"


@dataclass(frozen=True)
class Group:
    """Classes whose accumulated comparison keys are currently equal."""

    classes: tuple[VarClass, ...]


@dataclass(frozen=True)
class GroupState:
    """Ordered unresolved groups plus the literals already committed."""

    groups: tuple[Group, ...]
    prefix: tuple[Literal, ...] = ()

    @property
    def m(self) -> int:
        return len(self.groups)


@dataclass(frozen=True)
class Candidate:
    """A complete literal ordering plus the output phase it was found under."""

    literals: tuple[Literal, ...]
    out_phase: bool = True

    def transform(self) -> NPTransform:
        """Transform mapping the original function onto its canonical table:
        table.apply(candidate.transform()) is the canonical form."""
        return NPTransform(
            tuple(l.var for l in self.literals),
            tuple(l.positive for l in self.literals),
            self.out_phase,
        )

    def __str__(self) -> str:
        return format_literals(self.literals)


@dataclass(frozen=True)
class CanonResult:
    candidate: Candidate
    table: TruthTable
    transform: NPTransform
    candidates_examined: int
    branches_pruned: int
    mode: Mode


def _class_sort_key(c: VarClass) -> int:
    return c.members[0].var


def _first_order_key(f: TruthTable, c: VarClass, mode: Mode) -> tuple:
    rep = c.members[0]
    cof = f.cofactor_count((rep,))
    if mode == Mode.DC:
        return (cof, difference_count(f, (), rep.var))
    return (cof,)


def _group_runs(keyed: list[tuple[tuple, VarClass]]) -> list[Group]:
    """Bucket (key, class) pairs into groups of equal key, descending."""
    keyed.sort(key=lambda kc: kc[0], reverse=True)
    groups: list[Group] = []
    run: list[VarClass] = []
    run_key: Optional[tuple] = None
    for key, c in keyed:
        if run_key is None or key == run_key:
            run.append(c)
        else:
            groups.append(Group(tuple(sorted(run, key=_class_sort_key))))
            run = [c]
        run_key = key
    if run:
        groups.append(Group(tuple(sorted(run, key=_class_sort_key))))
    return groups


def initial_group(f: TruthTable, mode: Mode = Mode.DC) -> GroupState:
    """Assign phases, detect independent and symmetric variables, and order
    the classes by decreasing phase-adjusted first-order key."""
    phases = {v: variable_phase(f, v) for v in range(1, f.n + 1)}
    classes = literal_classes(f, phases, mode)
    keyed = [(_first_order_key(f, c, mode), c) for c in classes]
    return GroupState(tuple(_group_runs(keyed)))


def group_resolved(g: Group) -> bool:
    """A group is committable without branching when it holds exactly one
    class that is independent or fully phase-determined."""
    if len(g.classes) != 1:
        return False
    c = g.classes[0]
    return c.kind == INDEPENDENT or c.phase_known


def _oriented(c: VarClass, flip: bool) -> VarClass:
    if not flip:
        return VarClass(c.kind, c.members, True)
    return VarClass(c.kind, tuple(sorted(l.inverted() for l in c.members)), True)


def _refine_groups(
    f: TruthTable, committed: Iterable[Literal], groups: Sequence[Group], mode: Mode
) -> tuple[Group, ...]:
    """Extend every class's accumulated key by one pair component per newly
    committed literal; resolve phases at the first strict cofactor
    inequality; split groups whose classes now differ."""
    out = list(groups)
    for lit in committed:
        base = f.cofactor_count((lit,))
        next_groups: list[Group] = []
        for g in out:
            keyed: list[tuple[tuple, VarClass]] = []
            for c in g.classes:
                rep = c.members[0]
                cpos = f.cofactor_count((lit, Literal(rep.var)))
                cneg = base - cpos
                if not c.phase_known and cpos != cneg:
                    rep_sign = cpos > cneg
                    flip = rep_sign != rep.positive
                    c = _oriented(c, flip)
                    rep = c.members[0]
                cof = cpos if rep.positive else cneg
                if mode == Mode.DC:
                    key = (cof, difference_count(f, (lit,), rep.var))
                else:
                    key = (cof,)
                keyed.append((key, c))
            next_groups.extend(_group_runs(keyed))
        out = next_groups
    return tuple(out)


def update_signature(
    f: TruthTable,
    state: GroupState,
    new_literals: Sequence[Literal] | None = None,
    mode: Mode = Mode.DC,
) -> GroupState:
    """Re-key the unresolved groups against committed literals.

    By default every prefix literal is replayed in commit order, which
    reproduces the state the incremental search reaches.
    """
    if not state.prefix:
        raise ValueError("update_signature needs a nonempty resolved prefix")
    lits = tuple(new_literals) if new_literals is not None else state.prefix
    return GroupState(_refine_groups(f, lits, state.groups, mode), state.prefix)


class SplitChoice(NamedTuple):
    """One branch of an unresolved group: the chosen class, the polarity its
    representative enters with, and the classes left behind."""

    chosen: VarClass
    positive: bool
    rest: tuple[VarClass, ...]


def split_group(g: Group) -> list[SplitChoice]:
    """Enumerate the branches of an unresolved group: one per determined or
    independent class, two (both polarities) per undetermined class."""
    if group_resolved(g):
        raise ValueError("group is already resolved; nothing to split")
    choices: list[SplitChoice] = []
    for c in g.classes:
        rest = tuple(c2 for c2 in g.classes if c2 is not c)
        if c.kind == INDEPENDENT:
            choices.append(SplitChoice(c, True, rest))
        elif c.phase_known:
            choices.append(SplitChoice(c, c.members[0].positive, rest))
        else:
            choices.append(SplitChoice(c, True, rest))
            choices.append(SplitChoice(c, False, rest))
    return choices


def update_sequence(state: GroupState, choice: SplitChoice) -> GroupState:
    """Sequence-number bookkeeping for a split: the chosen class becomes its
    own group in place; the remaining classes follow as the next group."""
    if not state.groups:
        raise ValueError("no groups to split")
    head, rest = state.groups[0], state.groups[1:]
    new = [Group((choice.chosen,))]
    if choice.rest:
        new.append(Group(choice.rest))
    return GroupState(tuple(new) + rest, state.prefix)


class _Best:
    __slots__ = ("literals", "table")

    def __init__(self) -> None:
        self.literals: Optional[tuple[Literal, ...]] = None
        self.table: Optional[TruthTable] = None


def search(
    f: TruthTable, state: GroupState | None = None, mode: Mode = Mode.DC
) -> CanonResult:
    """Depth-first candidate search over one output polarity of f.

    Resolved front groups commit wholesale; unresolved ones branch per
    class representative and polarity.  After every commit the remaining
    classes re-key, so a committed class's leftovers compete with rival
    classes for the following positions.  Complete candidates are compared
    lazily by signature vector and the maximum is kept (first found wins
    ties; tied candidates induce the identical canonical table).
    """
    if state is None:
        state = initial_group(f, mode)
    best = _Best()
    counters = {"examined": 0, "pruned": 0}

    def emit(prefix: list[Literal]) -> None:
        counters["examined"] += 1
        lits = tuple(prefix)
        if len(lits) != f.n:
            raise ValueError("search state does not cover every variable")
        table = f.apply(Candidate(lits).transform())
        if best.table is None:
            best.literals, best.table = lits, table
            return
        if table.bits == best.table.bits:
            return  # equal vectors by uniqueness; keep the first found
        order = compare_streams(
            signature_stream(f, lits, mode), signature_stream(f, best.literals, mode)
        )
        if order == Ordering.GREATER:
            best.literals, best.table = lits, table

    def rec(prefix: list[Literal], groups: tuple[Group, ...]) -> None:
        if not groups:
            emit(prefix)
            return
        g, rest = groups[0], groups[1:]
        if group_resolved(g):
            c = g.classes[0]
            if c.kind == INDEPENDENT:
                counters["pruned"] += 1  # opposite-polarity subtree skipped
            lits = list(c.members)
            rec(prefix + lits, _refine_groups(f, lits, rest, mode))
            return
        for choice in split_group(g):
            c = choice.chosen
            rep = Literal(c.members[0].var, choice.positive)
            if c.kind == INDEPENDENT:
                counters["pruned"] += 1
            leftovers = c.members[1:]
            merged = list(choice.rest)
            if leftovers:
                kind = c.kind if len(leftovers) > 1 or c.kind == INDEPENDENT else ASYMMETRIC
                merged.append(VarClass(kind, leftovers, c.phase_known))
            new_groups = (
                ((Group(tuple(sorted(merged, key=_class_sort_key))),) if merged else ())
                + rest
            )
            rec(prefix + [rep], _refine_groups(f, [rep], new_groups, mode))

    rec(list(state.prefix), state.groups)
    assert best.literals is not None and best.table is not None
    cand = Candidate(best.literals, True)
    return CanonResult(
        candidate=cand,
        table=best.table,
        transform=cand.transform(),
        candidates_examined=counters["examined"],
        branches_pruned=counters["pruned"],
        mode=mode,
    )


def canonical_form(f: TruthTable, mode: Mode = Mode.DC) -> CanonResult:
    """Canonical representative of f's NPN class: the transformed table with
    the maximal signature vector.

    The searched polarity keeps at least half the minterms; an exact split
    searches both polarities and keeps the overall maximum.
    """
    half = 1 << (f.n - 1)
    cnt = f.count()
    runs: list[tuple[TruthTable, bool]] = []
    if cnt >= half:
        runs.append((f, True))
    if cnt <= half:
        runs.append((f.negate(), False))
    results = [(search(g, None, mode), out) for g, out in runs]
    best, best_out = results[0]
    for res, out in results[1:]:
        order = compare_streams(
            signature_stream(
                f if out else f.negate(), res.candidate.literals, mode
            ),
            signature_stream(
                f if best_out else f.negate(), best.candidate.literals, mode
            ),
        )
        if order == Ordering.GREATER:
            best, best_out = res, out
    cand = Candidate(best.candidate.literals, best_out)
    return CanonResult(
        candidate=cand,
        table=best.table,
        transform=cand.transform(),
        candidates_examined=sum(r.candidates_examined for r, _ in results),
        branches_pruned=sum(r.branches_pruned for r, _ in results),
        mode=mode,
    )


def match(
    f: TruthTable, g: TruthTable, mode: Mode = Mode.DC
) -> Optional[NPTransform]:
    """NP transform T with f.apply(T) == g when the two functions are
    NPN-equivalent, else None.  The returned transform is verified against
    the full tables before being handed out."""
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n}")
    rf = canonical_form(f, mode)
    rg = canonical_form(g, mode)
    if rf.table.bits != rg.table.bits:
        return None
    t = rg.transform.invert().compose(rf.transform)
    if f.apply(t).bits != g.bits:
        raise AssertionError("canonical tables matched but the transform failed")
    return t
