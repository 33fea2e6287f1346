"""Cofactor / Boolean-difference signature values and candidate comparison.

A signature value attaches to a cube: the pair (cofactor count, difference
count).  The difference count quantifies how strongly the last variable of
the cube still influences the function after cofactoring by the preceding
literals; zero means the variable is independent there.

Counting conventions (fixed by the worked reference functions):
  * the cofactor count of a k-cube is taken over the 2^(n-k) assignments
    of the remaining variables;
  * the difference count is taken over the full 2^(n-k+1)-assignment
    domain of the cofactored function, so it is always even and can reach
    2^n for a first-order value.
"""

from __future__ import annotations

import enum
import itertools
from typing import Iterable, Iterator, NamedTuple, Sequence

from .truthtable import Cube, Literal, TruthTable, cube_mask, full_mask, var_mask


class DCValue(NamedTuple):
    """(cofactor count, Boolean-difference count) for one cube."""

    cof: int
    diff: int


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Mode(str, enum.Enum):
    """Signature flavor: full difference/cofactor pairs, or the cofactor-only
    baseline the richer signature is benchmarked against."""

    DC = "dc"
    COFACTOR = "cofactor"


def difference_count(f: TruthTable, prefix: Iterable[Literal], var: int) -> int:
    """Onset size of the Boolean difference of f_prefix w.r.t. ``var``,
    counted over the full domain of f_prefix.  Independent of polarity."""
    n = f.n
    prefix = tuple(prefix)
    if not 1 <= var <= n or any(l.var == var for l in prefix):
        raise ValueError(f"variable x{var} collides with the prefix cube")
    pm = cube_mask(n, prefix)
    p = var - 1
    changed = ((f.bits >> (1 << p)) ^ f.bits) & var_mask(n, var, False) & pm
    return 2 * changed.bit_count()


def dc_value(f: TruthTable, prefix: Cube, lit: Literal) -> DCValue:
    """Signature value of the cube prefix+lit (order len(prefix)+1)."""
    cof = f.cofactor_count(tuple(prefix) + (lit,))
    return DCValue(cof, difference_count(f, prefix, lit.var))


def first_order_dc(f: TruthTable, lit: Literal) -> DCValue:
    """Signature value of a single literal (empty prefix)."""
    return dc_value(f, (), lit)


def compare_dc(a: DCValue, b: DCValue) -> Ordering:
    """Lexicographic on (cof, diff)."""
    if a.cof != b.cof:
        return Ordering.LESS if a.cof < b.cof else Ordering.GREATER
    if a.diff != b.diff:
        return Ordering.LESS if a.diff < b.diff else Ordering.GREATER
    return Ordering.EQUAL


def signature_stream(
    f: TruthTable, literals: Sequence[Literal], mode: Mode = Mode.DC
) -> Iterator[int]:
    """Flattened signature vector of a candidate literal ordering.

    Enumerates cubes over the candidate positions by size k = 0..n, index
    sets in lexicographic order; yields the cofactor count of each cube
    followed (for 0 < k < n, in DC mode) by its difference count.  The
    whole stream determines the transformed function uniquely.
    """
    n = f.n
    if len(literals) != n:
        raise ValueError("candidate does not cover every variable")
    yield f.count()
    bits = f.bits
    masks = [var_mask(n, l.var, l.positive) for l in literals]
    neg_mask = [var_mask(n, l.var, False) for l in literals]
    shift = [1 << (l.var - 1) for l in literals]
    dc = mode == Mode.DC
    full = full_mask(n)
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            last = idx[-1]
            prefix_mask = full
            for i in idx[:-1]:
                prefix_mask &= masks[i]
            yield (bits & prefix_mask & masks[last]).bit_count()
            if dc and k < n:
                changed = ((bits >> shift[last]) ^ bits) & neg_mask[last] & prefix_mask
                yield 2 * changed.bit_count()


def compare_streams(a: Iterator[int], b: Iterator[int]) -> Ordering:
    for x, y in zip(a, b):
        if x != y:
            return Ordering.LESS if x < y else Ordering.GREATER
    return Ordering.EQUAL


def compare_candidates(
    f: TruthTable,
    first: Sequence[Literal],
    second: Sequence[Literal],
    mode: Mode = Mode.DC,
    first_out: bool = True,
    second_out: bool = True,
) -> Ordering:
    """Order two complete candidate transformations of f by their signature
    vectors, streaming lazily until the first unequal entry.

    EQUAL means the two transformed functions are bit-identical.  Output
    phases select whether each candidate's vector is taken on f or its
    complement.
    """
    fa = f if first_out else f.negate()
    fb = f if second_out else f.negate()
    return compare_streams(
        signature_stream(fa, first, mode), signature_stream(fb, second, mode)
    )
