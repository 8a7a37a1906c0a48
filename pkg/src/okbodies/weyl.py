"""Weyl group action on the Picard lattice: reflections, orbits, classification.

Generators are the adjacent swaps s_1, ..., s_{n-1} and, once three points
are available, the quadratic (Cremona) reflection s_n.  Orbits of integral
classes are enumerated breadth-first with structural deduplication; the
classification of exceptional classes is cross-checked by an independent
Diophantine enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import CremonaUndefinedError, OrbitBoundExceededError
from .lattice import (
    DivisorClass,
    canonical_class,
    exceptional,
    intersect,
    self_intersection,
)

DEFAULT_ORBIT_BOUND = 10000


@dataclass(frozen=True)
class Reflection:
    """Simple reflection s_index acting on the lattice of the n-point blow-up."""

    index: int
    n: int

    def __post_init__(self):
        if not 1 <= self.index <= self.n:
            raise ValueError(f"reflection index {self.index} out of range 1..{self.n}")

    def __str__(self):
        return f"s{self.index}"


def simple_reflections(n: int) -> tuple[Reflection, ...]:
    """The available generators: swaps always, the Cremona reflection only for n >= 3."""
    swaps = tuple(Reflection(i, n) for i in range(1, n))
    if n >= 3:
        return swaps + (Reflection(n, n),)
    return swaps


def apply(r: Reflection, c: DivisorClass) -> DivisorClass:
    """Apply a simple reflection to a class (linear, involutive)."""
    if r.n != c.n:
        raise ValueError(f"reflection for n={r.n} applied to class with n={c.n}")
    i = r.index
    if i < c.n:  # swap e_i and e_{i+1}
        m = list(c.m)
        m[i - 1], m[i] = m[i], m[i - 1]
        return DivisorClass(c.n, c.d, m)
    if c.n < 3:
        raise CremonaUndefinedError(
            f"Cremona reflection undefined for n={c.n} (needs three points)"
        )
    d = c.d
    m1, m2, m3 = c.m[0], c.m[1], c.m[2]
    new = (d - m2 - m3, d - m1 - m3, d - m1 - m2) + c.m[3:]
    return DivisorClass(c.n, 2 * d - m1 - m2 - m3, new)


def apply_word(word, c: DivisorClass) -> DivisorClass:
    for r in word:
        c = apply(r, c)
    return c


@dataclass(frozen=True)
class OrbitResult:
    """A full Weyl orbit: closed under every generator, canonically sorted."""

    seed: DivisorClass
    elements: tuple[DivisorClass, ...]
    words: Mapping[DivisorClass, tuple[Reflection, ...]] | None = None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, c):
        return c in set(self.elements)


def orbit(
    seed: DivisorClass,
    max_size: int = DEFAULT_ORBIT_BOUND,
    record_words: bool = False,
) -> OrbitResult:
    """BFS closure of a seed class under the simple reflections.

    Raises OrbitBoundExceededError when the orbit grows past ``max_size``
    (expected for n=9 seeds, whose orbits are infinite).
    """
    if not seed.is_integral:
        raise ValueError("orbit enumeration needs an integral seed")
    gens = simple_reflections(seed.n)
    seen: dict[DivisorClass, tuple[Reflection, ...]] = {seed: ()}
    frontier = deque([seed])
    while frontier:
        current = frontier.popleft()
        for g in gens:
            nxt = apply(g, current)
            if nxt not in seen:
                if len(seen) >= max_size:
                    raise OrbitBoundExceededError(max_size)
                seen[nxt] = seen[current] + (g,) if record_words else ()
                frontier.append(nxt)
    elements = tuple(sorted(seen, key=DivisorClass.sort_key))
    words = dict(seen) if record_words else None
    return OrbitResult(seed=seed, elements=elements, words=words)


@lru_cache(maxsize=None)
def exceptional_classes(n: int) -> tuple[DivisorClass, ...]:
    """All classes of exceptional curves of the first kind, canonically sorted.

    For n >= 3 this is the orbit of e_n; the n = 1, 2 sets are the table rows
    with at most two points involved (no Cremona generator exists there).
    """
    if not 1 <= n <= 8:
        raise ValueError(f"exceptional classes only classified for 1 <= n <= 8, got {n}")
    if n == 1:
        return (exceptional(1, 1),)
    if n == 2:
        classes = [exceptional(1, 2), exceptional(2, 2), DivisorClass(2, 1, (1, 1))]
        return tuple(sorted(classes, key=DivisorClass.sort_key))
    return orbit(exceptional(n, n)).elements


def _multiplicity_patterns(n: int, total: int, total_sq: int, cap: int):
    """Non-increasing integer tuples in [-1, cap] with given sum and sum of squares."""

    def rec(slots: int, bound: int, need: int, need_sq: int, acc: list[int]):
        if slots == 0:
            if need == 0 and need_sq == 0:
                yield tuple(acc)
            return
        for v in range(min(bound, need + slots), -2, -1):
            # remaining sum after v must be achievable with slots-1 entries >= -1
            rest = need - v
            if rest < -(slots - 1):
                continue
            rest_sq = need_sq - v * v
            if rest_sq < 0:
                continue
            # each remaining entry has square <= max(v^2, 1)
            if rest_sq > (slots - 1) * max(v * v, 1):
                continue
            acc.append(v)
            yield from rec(slots - 1, v, rest, rest_sq, acc)
            acc.pop()

    yield from rec(n, cap, total, total_sq, [])


def exceptional_classes_diophantine(n: int) -> tuple[DivisorClass, ...]:
    """Independent oracle: enumerate integral classes with C^2 = C.k = -1.

    Solves d^2 - sum m_i^2 = -1 and 3d - sum m_i = 1 for 0 <= d <= 6 and
    -1 <= m_i <= d, then expands all distinct permutations.
    """
    if not 1 <= n <= 8:
        raise ValueError(f"exceptional classes only classified for 1 <= n <= 8, got {n}")
    found = set()
    for d in range(0, 7):
        for pattern in _multiplicity_patterns(n, 3 * d - 1, d * d + 1, d):
            for perm in set(itertools.permutations(pattern)):
                found.add(DivisorClass(n, d, perm))
    return tuple(sorted(found, key=DivisorClass.sort_key))


def degree_histogram(classes) -> dict[int, int]:
    hist: dict[int, int] = {}
    for c in classes:
        hist[c.d] = hist.get(c.d, 0) + 1
    return dict(sorted(hist.items()))


def cremona_reduce(c: DivisorClass) -> tuple[DivisorClass, tuple[Reflection, ...]]:
    """Iteratively sort multiplicities and apply s_n while d < m_1 + m_2 + m_3.

    Each quadratic step strictly lowers d, so the loop terminates; the
    returned word (applied left to right to the input) produces the fixed
    point.  Classes the reduction never fires on come back unchanged.
    """
    if not c.is_integral:
        raise ValueError("cremona reduction needs an integral class")
    if c.n < 3:
        raise CremonaUndefinedError(
            f"Cremona reflection undefined for n={c.n} (needs three points)"
        )
    top3 = sorted(c.m, reverse=True)[:3]
    if sum(top3) <= c.d:
        return c, ()
    word: list[Reflection] = []
    cur = c
    s_n = Reflection(c.n, c.n)
    while True:
        cur, swaps = _sort_descending(cur)
        word.extend(swaps)
        if cur.m[0] + cur.m[1] + cur.m[2] > cur.d:
            cur = apply(s_n, cur)
            word.append(s_n)
        else:
            return cur, tuple(word)


def _sort_descending(c: DivisorClass) -> tuple[DivisorClass, list[Reflection]]:
    """Bubble-sort the multiplicities via adjacent swap reflections."""
    m = list(c.m)
    swaps: list[Reflection] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(m) - 1):
            if m[i] < m[i + 1]:
                m[i], m[i + 1] = m[i + 1], m[i]
                swaps.append(Reflection(i + 1, c.n))
                changed = True
    return DivisorClass(c.n, c.d, m), swaps


def preserves_intersection_form(r: Reflection, a: DivisorClass, b: DivisorClass) -> bool:
    return intersect(apply(r, a), apply(r, b)) == intersect(a, b)


def fixes_canonical_class(r: Reflection) -> bool:
    k = canonical_class(r.n)
    return apply(r, k) == k


def satisfies_noether_inequality(c: DivisorClass) -> bool:
    """d < m1 + m2 + m3 on descending multiplicities (zero-padded)."""
    m = sorted(c.m, reverse=True) + [0, 0, 0]
    return c.d < m[0] + m[1] + m[2]
