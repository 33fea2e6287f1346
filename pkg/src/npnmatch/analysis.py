"""Preparatory analyses: output/variable phases, independence, symmetry."""

from __future__ import annotations

import enum
from typing import NamedTuple

from .signature import Mode, first_order_dc
from .truthtable import Literal, TruthTable, full_mask, var_mask


class PhaseDecision(enum.IntEnum):
    NEGATIVE = -1
    UNDETERMINED = 0
    POSITIVE = 1


class SymmetryKind(enum.Enum):
    EQUIVALENCE = "equivalence"  # f invariant under swapping x_i and x_j
    SKEW = "skew"                # f invariant under swapping x_i and ~x_j


def output_phase(f: TruthTable) -> PhaseDecision:
    """Positive when the onset holds more than half of all minterms,
    negative when less; undetermined on an exact split (both output
    polarities must then be searched)."""
    half = 1 << (f.n - 1)
    cnt = f.count()
    if cnt > half:
        return PhaseDecision.POSITIVE
    if cnt < half:
        return PhaseDecision.NEGATIVE
    return PhaseDecision.UNDETERMINED


def variable_phase(f: TruthTable, var: int) -> PhaseDecision:
    """Compare the positive against the negative cofactor count of x_var."""
    pos = f.cofactor_count((Literal(var),))
    neg = f.count() - pos
    if pos > neg:
        return PhaseDecision.POSITIVE
    if pos < neg:
        return PhaseDecision.NEGATIVE
    return PhaseDecision.UNDETERMINED


def is_independent(f: TruthTable, var: int) -> bool:
    """True when the function's value never depends on x_var."""
    return first_order_dc(f, Literal(var)).diff == 0


def are_symmetric(
    f: TruthTable, i: int, j: int, kind: SymmetryKind = SymmetryKind.EQUIVALENCE
) -> bool:
    """Pairwise variable symmetry.

    Equivalence symmetry holds when f is invariant under swapping x_i and
    x_j, i.e. the (x_i, ~x_j) and (~x_i, x_j) cofactors agree; skew
    symmetry swaps x_i with ~x_j and compares the (x_i, x_j) and
    (~x_i, ~x_j) cofactors.
    """
    if i == j:
        raise ValueError("symmetry check needs two distinct variables")
    n, bits = f.n, f.bits
    si, sj = 1 << (i - 1), 1 << (j - 1)
    if kind == SymmetryKind.EQUIVALENCE:
        a = bits & var_mask(n, i) & var_mask(n, j, False)
        b = bits & var_mask(n, i, False) & var_mask(n, j)
        return (a >> si) == (b >> sj)
    a = bits & var_mask(n, i) & var_mask(n, j)
    b = bits & var_mask(n, i, False) & var_mask(n, j, False)
    return (a >> (si + sj)) == b


class LiteralClass(NamedTuple):
    """A set of mutually interchangeable literals.

    ``members`` holds one literal per variable, ascending by index.  When
    ``phase_known`` is False the polarities are relative orientations only
    (the whole class may still flip); independent classes are always
    positive by convention.
    """

    kind: str  # "asymmetric" | "symmetric" | "independent"
    members: tuple[Literal, ...]
    phase_known: bool


def _pair_symmetric(f: TruthTable, a: Literal, b: Literal) -> bool:
    """Interchangeability of two concrete literals."""
    kind = SymmetryKind.EQUIVALENCE if a.positive == b.positive else SymmetryKind.SKEW
    return are_symmetric(f, a.var, b.var, kind)


def literal_classes(
    f: TruthTable, phases: dict[int, PhaseDecision], mode: Mode = Mode.DC
) -> list[LiteralClass]:
    """Partition variables into interchangeability classes.

    Dependent variables are bucketed by their phase-adjusted first-order
    signature (unequal signatures preclude symmetry), then grown greedily
    with every pair verified.  All independent variables form one class.
    For an undetermined-phase pair the equivalence check is tried first and
    the skew check aligns the second variable's relative polarity.
    """
    n = f.n
    total = f.count()
    firsts = {v: first_order_dc(f, Literal(v)) for v in range(1, n + 1)}
    indep = sorted(v for v in range(1, n + 1) if firsts[v].diff == 0)
    classes: list[LiteralClass] = []
    if indep:
        classes.append(
            LiteralClass("independent", tuple(Literal(v) for v in indep), True)
        )

    def adjusted_key(v: int) -> tuple:
        cof, diff = firsts[v]
        if phases[v] == PhaseDecision.NEGATIVE:
            cof = total - cof
        return (cof, diff) if mode == Mode.DC else (cof,)

    buckets: dict[tuple, list[int]] = {}
    for v in range(1, n + 1):
        if v not in indep:
            buckets.setdefault(adjusted_key(v), []).append(v)

    for vs in buckets.values():
        placed: set[int] = set()
        for seed in vs:
            if seed in placed:
                continue
            placed.add(seed)
            known = phases[seed] != PhaseDecision.UNDETERMINED
            seed_lit = Literal(seed, phases[seed] != PhaseDecision.NEGATIVE)
            members = [seed_lit if known else Literal(seed)]
            for cand in vs:
                if cand in placed:
                    continue
                if known:
                    lit = Literal(cand, phases[cand] != PhaseDecision.NEGATIVE)
                    rels = [lit] if _pair_symmetric(f, seed_lit, lit) else []
                else:
                    rels = [
                        lit
                        for lit in (Literal(cand), Literal(cand, False))
                        if _pair_symmetric(f, members[0], lit)
                    ][:1]
                if not rels:
                    continue
                lit = rels[0]
                if all(_pair_symmetric(f, m, lit) for m in members):
                    members.append(lit)
                    placed.add(cand)
            kind = "symmetric" if len(members) > 1 else "asymmetric"
            classes.append(LiteralClass(kind, tuple(sorted(members)), known))
    return classes


def symmetry_classes(
    f: TruthTable, phases: dict[int, PhaseDecision] | None = None
) -> list[tuple[int, ...]]:
    """Variable-index partition: maximal symmetric blocks, singletons for
    asymmetric variables, and one block holding all independent variables."""
    if phases is None:
        phases = {v: variable_phase(f, v) for v in range(1, f.n + 1)}
    blocks = [
        tuple(l.var for l in c.members) for c in literal_classes(f, phases)
    ]
    return sorted(blocks, key=lambda b: b[0])
