"""Truth tables as big-integer bit vectors, plus NP input/output transforms.

A completely specified Boolean function over n variables is stored as one
Python int holding 2^n onset bits.  Bit j is f(a_1..a_n) where a_i is the
i-th least-significant bit of j, i.e. variable x_1 lives at index bit 0.
All file formats in this package inherit that convention.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

#: Default upper bound on the variable count (a 2^24-bit table is 2 MiB).
#: Reassign to lift the cap.
VAR_CAP = 24


class Literal(NamedTuple):
    """A variable with a polarity; ``var`` is 1-based."""

    var: int
    positive: bool = True

    def inverted(self) -> "Literal":
        return Literal(self.var, not self.positive)


Cube = tuple[Literal, ...]


def format_literal(lit: Literal) -> str:
    return ("x" if lit.positive else "~x") + str(lit.var)


def parse_literal(text: str) -> Literal:
    s = text.strip()
    pos = not s.startswith("~")
    s = s.lstrip("~")
    if not s.startswith("x") or not s[1:].isdigit():
        raise ValueError(f"bad literal {text!r}; expected e.g. 'x3' or '~x3'")
    return Literal(int(s[1:]), pos)


def format_literals(lits: Iterable[Literal]) -> str:
    return " ".join(format_literal(l) for l in lits)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > VAR_CAP:
        raise ValueError(f"variable count {n} outside 1..{VAR_CAP}")


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    """All 2^n index bits set."""
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def _pos_mask(n: int, p: int) -> int:
    # Indices whose bit p is 1: a 2^p-zeros/2^p-ones pattern tiled by doubling.
    size = 1 << n
    m = ((1 << (1 << p)) - 1) << (1 << p)
    width = 1 << (p + 1)
    while width < size:
        m |= m << width
        width <<= 1
    return m


def var_mask(n: int, var: int, positive: bool = True) -> int:
    """Mask of minterms where variable ``var`` (1-based) has the given value."""
    if not 1 <= var <= n:
        raise ValueError(f"variable x{var} outside 1..{n}")
    m = _pos_mask(n, var - 1)
    return m if positive else full_mask(n) & ~m


def cube_mask(n: int, cube: Iterable[Literal]) -> int:
    """Mask of minterms consistent with every literal of the cube."""
    m = full_mask(n)
    seen: set[int] = set()
    for lit in cube:
        if lit.var in seen:
            raise ValueError(f"variable x{lit.var} repeated in cube")
        seen.add(lit.var)
        m &= var_mask(n, lit.var, lit.positive)
    return m


@dataclass(frozen=True)
class TruthTable:
    """Immutable onset bit vector of a completely specified function."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if not 0 <= self.bits <= full_mask(self.n):
            raise ValueError(f"bit vector does not fit in 2^{self.n} bits")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_hex(cls, text: str, n: int) -> "TruthTable":
        """Parse a big-endian hex string of exactly 2^n bits.

        Leading zeros are required: the digit count must be (2^n + 3) // 4.
        """
        _check_n(n)
        s = text.strip().lower()
        want = ((1 << n) + 3) // 4
        if len(s) != want:
            raise ValueError(
                f"hex literal has {len(s)} digits; n={n} needs exactly {want}"
            )
        try:
            bits = int(s, 16)
        except ValueError:
            raise ValueError(f"invalid hex literal {text!r}") from None
        if bits > full_mask(n):
            raise ValueError(f"hex value exceeds 2^{n} bits")
        return cls(n, bits)

    @classmethod
    def from_cubes(cls, text: str, n: int) -> "TruthTable":
        """Parse a sum of products: one term per line, characters {0,1,-}.

        Character i of a line is the polarity of variable x_{i+1} in that
        term ('-' means absent).  The onset is the union of all terms.
        """
        _check_n(n)
        onset = 0
        terms = 0
        for ln, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if len(line) != n:
                raise ValueError(f"line {ln}: expected {n} characters, got {len(line)}")
            m = full_mask(n)
            for i, ch in enumerate(line):
                if ch == "1":
                    m &= _pos_mask(n, i)
                elif ch == "0":
                    m &= full_mask(n) & ~_pos_mask(n, i)
                elif ch != "-":
                    raise ValueError(f"line {ln}: bad character {ch!r}")
            onset |= m
            terms += 1
        if terms == 0:
            raise ValueError("empty cube list")
        return cls(n, onset)

    @classmethod
    def constant(cls, n: int, value: bool) -> "TruthTable":
        _check_n(n)
        return cls(n, full_mask(n) if value else 0)

    @classmethod
    def random(cls, n: int, seed, density: float = 0.5) -> "TruthTable":
        """Seeded random table; each minterm is set with probability ``density``.

        Uses the stdlib Mersenne Twister, so corpora reproduce across
        platforms for a given seed.  density=0.5 takes a fast path.
        """
        _check_n(n)
        rng = random.Random(seed)
        size = 1 << n
        if density == 0.5:
            return cls(n, rng.getrandbits(size))
        if not 0.0 <= density <= 1.0:
            raise ValueError("density outside [0, 1]")
        bits = 0
        for j in range(size):
            if rng.random() < density:
                bits |= 1 << j
        return cls(n, bits)

    # -- queries -----------------------------------------------------------

    def count(self) -> int:
        """Onset size |f| (the 0th-order signature)."""
        return self.bits.bit_count()

    def value(self, minterm: int) -> bool:
        return bool((self.bits >> minterm) & 1)

    def cofactor_count(self, cube: Iterable[Literal]) -> int:
        """Onset size of f with the cube forced true, over the remaining
        variables.  The empty cube gives ``count()``."""
        return (self.bits & cube_mask(self.n, cube)).bit_count()

    def to_hex(self) -> str:
        return format(self.bits, f"0{((1 << self.n) + 3) // 4}x")

    # -- algebra -----------------------------------------------------------

    def negate(self) -> "TruthTable":
        return TruthTable(self.n, self.bits ^ full_mask(self.n))

    def cofactor(self, lit: Literal) -> "TruthTable":
        """f with ``lit`` forced true, kept over all n variables (the result
        no longer depends on lit.var)."""
        p = lit.var - 1
        s = 1 << p
        if lit.positive:
            half = self.bits & _pos_mask(self.n, p)
            return TruthTable(self.n, half | (half >> s))
        half = self.bits & (full_mask(self.n) & ~_pos_mask(self.n, p))
        return TruthTable(self.n, half | (half << s))

    def depends_on(self, var: int) -> bool:
        p = var - 1
        shifted = (self.bits >> (1 << p)) ^ self.bits
        return bool(shifted & var_mask(self.n, var, False))

    def apply(self, t: "NPTransform") -> "TruthTable":
        """Apply an NP transform: the result h satisfies
        h(x_1..x_n) = f(y_1..y_n)^phi with y_{perm[i]} = x_i xor negated(i).

        The identity transform returns an equal table.
        """
        n = self.n
        if t.n != n:
            raise ValueError(f"transform arity {t.n} != table arity {n}")
        bits = self.bits
        # bit-position permutation: result bit q is sourced from position g(q)
        pos_of = {v: i for i, v in enumerate(t.perm)}
        g = [pos_of[q + 1] for q in range(n)]
        seen = [False] * n
        swaps: list[tuple[int, int]] = []
        for start in range(n):
            if seen[start] or g[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            cur = g[start]
            while cur != start:
                seen[cur] = True
                cycle.append(cur)
                cur = g[cur]
            for i in range(len(cycle) - 1):
                swaps.append((cycle[i], cycle[i + 1]))
        for u, v in reversed(swaps):
            bits = _swap_index_bits(bits, n, u, v)
        for i, positive in enumerate(t.phases):
            if not positive:
                s = 1 << i
                hi = bits & _pos_mask(n, i)
                lo = bits & (full_mask(n) & ~_pos_mask(n, i))
                bits = (hi >> s) | (lo << s)
        if not t.out_phase:
            bits ^= full_mask(n)
        return TruthTable(n, bits)


def _swap_index_bits(bits: int, n: int, u: int, v: int) -> int:
    """Table with index bits u and v exchanged (variable swap)."""
    if u > v:
        u, v = v, u
    full = full_mask(n)
    mu, mv = _pos_mask(n, u), _pos_mask(n, v)
    m10 = mu & (full & ~mv)
    m01 = (full & ~mu) & mv
    s = (1 << v) - (1 << u)
    keep = full & ~(m10 | m01)
    return (bits & keep) | ((bits >> s) & m10) | ((bits << s) & m01)


@dataclass(frozen=True)
class NPTransform:
    """Input permutation, input phases and output phase.

    ``perm[i]`` is the 1-based source variable feeding position i+1;
    ``phases[i]`` is True when that input enters positively; ``out_phase``
    is True when the output is not complemented.
    """

    perm: tuple[int, ...]
    phases: tuple[bool, ...]
    out_phase: bool = True

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm is not a bijection on 1..n")
        if len(self.phases) != n:
            raise ValueError("phases length differs from perm length")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "NPTransform":
        return cls(tuple(range(1, n + 1)), (True,) * n, True)

    def invert(self) -> "NPTransform":
        """The transform undoing this one: f.apply(t).apply(t.invert()) == f."""
        n = self.n
        pos_of = {v: i for i, v in enumerate(self.perm)}
        perm = tuple(pos_of[k] + 1 for k in range(1, n + 1))
        phases = tuple(self.phases[pos_of[k]] for k in range(1, n + 1))
        return NPTransform(perm, phases, self.out_phase)

    def compose(self, other: "NPTransform") -> "NPTransform":
        """Transform equivalent to applying ``other`` first, then self:
        f.apply(self.compose(other)) == f.apply(other).apply(self)."""
        if other.n != self.n:
            raise ValueError("arity mismatch in compose")
        perm = tuple(other.perm[p - 1] for p in self.perm)
        phases = tuple(
            self.phases[i] == other.phases[self.perm[i] - 1] for i in range(self.n)
        )
        return NPTransform(perm, phases, self.out_phase == other.out_phase)


def random_transform(n: int, rng: random.Random) -> NPTransform:
    """Uniformly random NP transform (used by tests and the bench command)."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    phases = tuple(rng.random() < 0.5 for _ in range(n))
    return NPTransform(tuple(perm), phases, rng.random() < 0.5)
