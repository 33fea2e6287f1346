"""Built-in regression fixtures: two hand-verified reference functions and
an exhaustive 3-variable sweep against the brute-force oracle."""

from __future__ import annotations

from typing import Callable

from .analysis import symmetry_classes
from .canon import Mode, canonical_form, initial_group, search
from .oracle import brute_canonical, brute_equivalent
from .signature import DCValue, dc_value, first_order_dc
from .truthtable import Literal, TruthTable

#: 7-variable reference function, 46 minterms, two symmetric pairs.
REF_A_CUBES = """\
--1-0-1
00-1---
00-010-
--1010-
-10010-
-00010-
"""

#: 6-variable reference function, 32 minterms, no symmetry, output tie.
REF_B_CUBES = """\
0110--
1100--
0001--
011--1
01-110
101--0
110--1
00000-
0010-1
001-11
000-10
010100
111100
100011
101101
"""

REF_A_COUNT = 46
REF_A_FIRST_ORDER = [
    DCValue(16, 28), DCValue(16, 28), DCValue(30, 28), DCValue(22, 44),
    DCValue(24, 44), DCValue(15, 32), DCValue(30, 28),
]
REF_A_SYMMETRY = [(1, 2), (3, 7), (4,), (5,), (6,)]
REF_A_GROUPS = [[(-6,)], [(-1, -2), (3, 7)], [(-4,), (5,)]]
REF_A_CANDIDATES = 2

REF_B_COUNT = 32
REF_B_FIRST_ORDER = [
    DCValue(13, 64), DCValue(16, 36), DCValue(16, 52), DCValue(16, 20),
    DCValue(16, 12), DCValue(16, 28),
]
REF_B_SECOND_ORDER = [
    DCValue(9, 18), DCValue(10, 26), DCValue(10, 10), DCValue(10, 6),
    DCValue(10, 14),
]
REF_B_DC_CANDIDATES = 2
REF_B_DC_SEQUENCE = "~x1 x3 ~x2 x6 x4 x5"
REF_B_COFACTOR_CANDIDATES = 240


def ref_a() -> TruthTable:
    return TruthTable.from_cubes(REF_A_CUBES, 7)


def ref_b() -> TruthTable:
    return TruthTable.from_cubes(REF_B_CUBES, 6)


def _signed_groups(state) -> list[list[tuple[int, ...]]]:
    return [
        [
            tuple(l.var if l.positive else -l.var for l in c.members)
            for c in g.classes
        ]
        for g in state.groups
    ]


def run(report: Callable[[str], None] = print) -> bool:
    """Run every built-in fixture; report one line per check; True on pass."""
    ok = True

    def check(name: str, cond: bool, detail: str = "") -> None:
        nonlocal ok
        if cond:
            report(f"ok   {name}")
        else:
            ok = False
            report(f"FAIL {name}" + (f": {detail}" if detail else ""))

    a = ref_a()
    check("ref-a minterm count", a.count() == REF_A_COUNT, f"got {a.count()}")
    got = [first_order_dc(a, Literal(v)) for v in range(1, 8)]
    check("ref-a first-order values", got == REF_A_FIRST_ORDER, f"got {got}")
    blocks = symmetry_classes(a)
    check("ref-a symmetry classes", blocks == list(REF_A_SYMMETRY), f"got {blocks}")
    groups = _signed_groups(initial_group(a))
    check("ref-a initial groups", groups == REF_A_GROUPS, f"got {groups}")
    res = search(a)
    check(
        "ref-a candidate count",
        res.candidates_examined == REF_A_CANDIDATES,
        f"got {res.candidates_examined}",
    )

    b = ref_b()
    check("ref-b minterm count", b.count() == REF_B_COUNT, f"got {b.count()}")
    got = [first_order_dc(b, Literal(v)) for v in range(1, 7)]
    check("ref-b first-order values", got == REF_B_FIRST_ORDER, f"got {got}")
    got = [dc_value(b, (Literal(1, False),), Literal(v)) for v in range(2, 7)]
    check("ref-b second-order values", got == REF_B_SECOND_ORDER, f"got {got}")
    dc = canonical_form(b, Mode.DC)
    check(
        "ref-b dc candidate count",
        dc.candidates_examined == REF_B_DC_CANDIDATES,
        f"got {dc.candidates_examined}",
    )
    check(
        "ref-b dc candidate sequence",
        str(search(b).candidate) == REF_B_DC_SEQUENCE,
        f"got {search(b).candidate}",
    )
    cof = canonical_form(b, Mode.COFACTOR)
    check(
        "ref-b cofactor candidate count",
        cof.candidates_examined == REF_B_COFACTOR_CANDIDATES,
        f"got {cof.candidates_examined}",
    )

    # exhaustive 3-variable sweep: engine table == oracle table, and the
    # induced partition matches pairwise brute-force equivalence
    tables = [TruthTable(3, bits) for bits in range(256)]
    canon = {t.bits: canonical_form(t).table.bits for t in tables}
    mismatches = sum(
        1 for t in tables if canon[t.bits] != brute_canonical(t).best_table.bits
    )
    check("n=3 oracle table agreement", mismatches == 0, f"{mismatches} mismatches")
    reps = sorted(set(canon.values()))
    check("n=3 class count", len(reps) == 14, f"got {len(reps)}")
    sample_ok = all(
        brute_equivalent(TruthTable(3, a_), TruthTable(3, b_))
        == (canon[a_] == canon[b_])
        for a_ in range(0, 256, 17)
        for b_ in range(0, 256, 13)
    )
    check("n=3 pairwise equivalence agreement", sample_ok)
    return ok
