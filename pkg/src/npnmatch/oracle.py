"""Brute-force reference implementations for testing and acceptance.

Deliberately naive and kept independent of the search engine: transforms
are applied through explicitly built minterm row maps, and signature
vectors are fully materialized as tuples before comparison, so nothing
here shares the lazy comparator or mask plumbing being tested.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

from .signature import Mode
from .truthtable import Literal, NPTransform, TruthTable

BRUTE_CAP = 5


class OracleResult(NamedTuple):
    best_table: TruthTable
    best_transform: NPTransform
    vector: tuple[int, ...]


def _check_cap(n: int) -> None:
    if n > BRUTE_CAP:
        raise ValueError(f"brute force capped at {BRUTE_CAP} variables, got {n}")


@lru_cache(maxsize=8)
def _simple_masks(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(positive, negative) minterm masks per variable, built by enumeration."""
    pos = []
    for v in range(n):
        m = 0
        for j in range(1 << n):
            if (j >> v) & 1:
                m |= 1 << j
        pos.append(m)
    full = (1 << (1 << n)) - 1
    neg = [full & ~m for m in pos]
    return tuple(pos), tuple(neg)


def _row_map(n: int, perm: tuple[int, ...], neg_mask: int) -> list[int]:
    """row[j] = source minterm index for result minterm j under the transform
    with perm[i] = 1-based source var of position i+1 and input-negation bits
    in neg_mask (bit i set = position i+1 negated)."""
    size = 1 << n
    rows = []
    for j in range(size):
        src = 0
        for i in range(n):
            bit = (j >> i) & 1
            bit ^= (neg_mask >> i) & 1
            src |= bit << (perm[i] - 1)
        rows.append(src)
    return rows


@lru_cache(maxsize=4)
def _all_transforms(n: int) -> list[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """Every (perm, neg_mask, row_map) for n variables: n! * 2^n entries."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for neg_mask in range(1 << n):
            out.append((perm, neg_mask, tuple(_row_map(n, perm, neg_mask))))
    return out


def _remap(bits: int, rows: tuple[int, ...]) -> int:
    out = 0
    for j, src in enumerate(rows):
        if (bits >> src) & 1:
            out |= 1 << j
    return out


def full_vector(f: TruthTable, mode: Mode = Mode.DC) -> tuple[int, ...]:
    """Fully materialized signature vector over the positive-literal cubes,
    in the shared enumeration order (size ascending, index sets lex)."""
    n = f.n
    _check_cap(n)
    pos, neg = _simple_masks(n)
    bits = f.bits
    out = [bits.bit_count()]
    dc = mode == Mode.DC
    full = (1 << (1 << n)) - 1
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            prefix_mask = full
            for v in idx[:-1]:
                prefix_mask &= pos[v]
            last = idx[-1]
            out.append((bits & prefix_mask & pos[last]).bit_count())
            if dc and k < n:
                moved = (bits >> (1 << last)) ^ bits
                out.append(2 * (moved & neg[last] & prefix_mask).bit_count())
    return tuple(out)


def brute_canonical(f: TruthTable, mode: Mode = Mode.DC) -> OracleResult:
    """Maximum-vector table over every permutation, input phase assignment
    and output phase of f."""
    n = f.n
    _check_cap(n)
    full = (1 << (1 << n)) - 1
    best = None
    for perm, neg_mask, rows in _all_transforms(n):
        mapped = _remap(f.bits, rows)
        for out_neg in (False, True):
            bits = mapped ^ full if out_neg else mapped
            vec = full_vector(TruthTable(n, bits), mode)
            if best is None or vec > best[0]:
                best = (vec, bits, perm, neg_mask, out_neg)
    vec, bits, perm, neg_mask, out_neg = best
    t = NPTransform(
        perm,
        tuple(not ((neg_mask >> i) & 1) for i in range(n)),
        not out_neg,
    )
    return OracleResult(TruthTable(n, bits), t, vec)


def brute_equivalent(f: TruthTable, g: TruthTable) -> bool:
    """True when some NP transform plus optional output negation maps f's
    table onto g's, found by exhaustive enumeration."""
    if f.n != g.n:
        raise ValueError(f"arity mismatch: {f.n} vs {g.n}")
    _check_cap(f.n)
    full = (1 << (1 << f.n)) - 1
    for _, _, rows in _all_transforms(f.n):
        mapped = _remap(f.bits, rows)
        if mapped == g.bits or mapped ^ full == g.bits:
            return True
    return False
